//! n-dimensional inverse Fourier transforms of radial profiles built from
//! Bessel functions, and the Weber–Schafheitlin limits behind them.
//!
//! For a radial profile f(|ξ|) the inverse transform is
//! `G(|x|) = (2π)^{-n/2} |x|^{1-n/2} ∫₀^∞ ρ^{n/2} J_{n/2-1}(ρ|x|) f(ρ) dρ`.
//! A spec with `scale = s` transforms `f(s|ξ|)`, so the power factor is
//! `(s|ξ|)^{±ν}` and the result is `s^{-n} G(|x|/s)`.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hypergeom::{hyp2f1, Hyp2F1Params};
use crate::quad::{
    extrapolate_eps_limit_with_noise, integrate_bessel_tail, integrate_bessel_tail_ladder, sphere_integral, EpsSchedule,
    Extrapolation, QuadSpec, SecondKind, TailSpec,
};
use crate::specfun::{bessel_j, cos_pi, gamma, rgamma, sin_pi};
use crate::verify::{Mode, VerificationReport};

/// Profile `ρ^{±ν} C(ρ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RadialKind {
    /// ρ^ν J_ν(ρ)
    JnuPowPlus,
    /// ρ^{-ν} J_ν(ρ)
    JnuPowMinus,
    /// ρ^ν J_{-ν}(ρ)
    JminusNuPowPlus,
    /// ρ^ν K_ν(ρ)
    Knu,
    /// ρ^ν N_ν(ρ)
    Nnu,
}

impl RadialKind {
    pub const ALL: [RadialKind; 5] =
        [RadialKind::JnuPowPlus, RadialKind::JnuPowMinus, RadialKind::JminusNuPowPlus, RadialKind::Knu, RadialKind::Nnu];

    /// Whether the transform jumps or blows up at |x| = scale.
    pub fn has_singular_locus(self) -> bool {
        self != RadialKind::Knu
    }

    pub fn name(self) -> &'static str {
        match self {
            RadialKind::JnuPowPlus => "j_pow_plus",
            RadialKind::JnuPowMinus => "j_pow_minus",
            RadialKind::JminusNuPowPlus => "j_minus_nu_pow_plus",
            RadialKind::Knu => "k",
            RadialKind::Nnu => "n",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialFtSpec {
    pub kind: RadialKind,
    pub nu: f64,
    pub n: usize,
    pub scale: f64,
}

impl RadialFtSpec {
    pub fn new(kind: RadialKind, nu: f64, n: usize, scale: f64) -> Result<Self> {
        let s = RadialFtSpec { kind, nu, n, scale };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.nu.abs() < 0.5) {
            return Err(Error::Parameter(format!("radial transforms need |ν| < 1/2, got {}", self.nu)));
        }
        if self.n == 0 {
            return Err(Error::Parameter("dimension must be at least 1".into()));
        }
        if !(self.scale > 0.0 && self.scale.is_finite()) {
            return Err(Error::Parameter(format!("scale must be positive, got {}", self.scale)));
        }
        if self.kind == RadialKind::Nnu && self.nu == 0.0 {
            // the N-kind formula divides by sin νπ on the way
            return Err(Error::Order(self.nu));
        }
        Ok(())
    }

    fn half_n(&self) -> f64 {
        self.n as f64 / 2.0
    }

    /// Exponent p of the power factor ρ^p.
    fn power(&self) -> f64 {
        match self.kind {
            RadialKind::JnuPowMinus => -self.nu,
            _ => self.nu,
        }
    }

    /// The one-dimensional integral `∫ ρ^{n/2+p} J_{n/2-1}(rρ) C(sρ) dρ` at radius r.
    pub fn tail_spec(&self, r: f64) -> TailSpec {
        let h = self.half_n();
        let (nu, second) = match self.kind {
            RadialKind::JnuPowPlus | RadialKind::JnuPowMinus => (self.nu, SecondKind::J),
            RadialKind::JminusNuPowPlus => (-self.nu, SecondKind::J),
            RadialKind::Knu => (self.nu, SecondKind::K),
            RadialKind::Nnu => (self.nu, SecondKind::N),
        };
        TailSpec { lambda: -(h + self.power()), mu: h - 1.0, nu, a: r, b: self.scale, second }
    }

    fn prefactor(&self, r: f64) -> f64 {
        let h = self.half_n();
        r.powf(1.0 - h) * (2.0 * PI).powf(-h) * self.scale.powf(self.power())
    }
}

/// Closed form at unit scale.
fn unit_closed(spec: &RadialFtSpec, r: f64) -> Result<f64> {
    let h = spec.half_n();
    let nu = spec.nu;
    let e = -h - nu;
    if spec.kind == RadialKind::Knu {
        return Ok(2f64.powf(nu - 1.0) * gamma(h + nu)? * PI.powf(-h) * (1.0 + r * r).powf(e));
    }
    if r == 1.0 {
        return Err(Error::SingularLocus);
    }
    let inside = r < 1.0;
    let c = 2f64.powf(nu) * gamma(h + nu)? / PI.powf(h + 1.0);
    Ok(match spec.kind {
        RadialKind::JnuPowPlus if inside => sin_pi(h) * c * (1.0 - r * r).powf(e),
        RadialKind::JnuPowPlus => -sin_pi(nu) * c * (r * r - 1.0).powf(e),
        RadialKind::JnuPowMinus if inside => {
            (1.0 - r * r).powf(nu - h) * 2f64.powf(-nu) * PI.powf(-h) * rgamma(nu - h + 1.0)
        }
        RadialKind::JminusNuPowPlus if inside => sin_pi(nu + h) * c * (1.0 - r * r).powf(e),
        RadialKind::JnuPowMinus | RadialKind::JminusNuPowPlus => 0.0,
        RadialKind::Nnu if inside => -cos_pi(h) * c * (1.0 - r * r).powf(e),
        RadialKind::Nnu => -cos_pi(nu) * c * (r * r - 1.0).powf(e),
        RadialKind::Knu => unreachable!(),
    })
}

/// Closed-form inverse transform of `f(scale·|ξ|)` at |x| = r.
pub fn ift_closed(spec: &RadialFtSpec, r: f64) -> Result<f64> {
    spec.validate()?;
    if !(r >= 0.0 && r.is_finite()) {
        return Err(Error::Domain { arg: r, what: "radius must be finite and nonnegative" });
    }
    let s = spec.scale;
    Ok(s.powi(-(spec.n as i32)) * unit_closed(spec, r / s)?)
}

/// Result of a numeric inverse transform.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericIft {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
    /// Present for kinds that need the converging factor.
    pub extrapolation: Option<Extrapolation>,
}

/// Damping ladder matched to the distance from the singular locus. The
/// damped integral is analytic in ε on a disc of radius |r − scale|, so the
/// ladder is placed well inside that disc and extrapolated at high order.
pub fn gap_schedule(spec: &RadialFtSpec, r: f64) -> EpsSchedule {
    EpsSchedule::for_gap((r - spec.scale).abs())
}

/// Default distance kept from |x| = scale.
pub fn default_margin(spec: &RadialFtSpec) -> f64 {
    0.05 * spec.scale
}

/// Numeric inverse transform at |x| = r by the one-dimensional Bessel
/// integral: directly for the K kind, through the ε ladder and
/// extrapolation to ε = 0 for the J and N kinds.
pub fn ift_numeric(
    spec: &RadialFtSpec,
    r: f64,
    margin: f64,
    schedule: &EpsSchedule,
    q: &QuadSpec,
) -> Result<NumericIft> {
    spec.validate()?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::Domain { arg: r, what: "numeric transform needs r > 0" });
    }
    let ts = spec.tail_spec(r);
    let pre = spec.prefactor(r);
    if spec.kind == RadialKind::Knu {
        let v = integrate_bessel_tail(&ts, 0.0, q)?;
        return Ok(NumericIft {
            value: pre * v.value,
            error: pre.abs() * v.error,
            evaluations: v.evaluations,
            extrapolation: None,
        });
    }
    if (r - spec.scale).abs() < margin {
        return Err(Error::SingularLocus);
    }
    let ladder = integrate_bessel_tail_ladder(&ts, &schedule.eps_values, q)?;
    let samples: Vec<(f64, f64)> = schedule.eps_values.iter().zip(&ladder).map(|(e, v)| (*e, v.value)).collect();
    let quad_err = ladder.iter().map(|v| v.error).fold(0.0, f64::max);
    let ex = extrapolate_eps_limit_with_noise(&samples, schedule, quad_err)?;
    Ok(NumericIft {
        value: pre * ex.value,
        error: pre.abs() * ex.error,
        evaluations: ladder.iter().map(|v| v.evaluations).sum(),
        extrapolation: Some(Extrapolation {
            value: pre * ex.value,
            error: pre.abs() * ex.error,
            samples: ex.samples.iter().map(|(e, v)| (*e, pre * v)).collect(),
        }),
    })
}

/// Parameters of `I_ε(a, b) = ∫₀^∞ e^{-εt} t^{-λ} J_μ(at) J_ν(bt) dt`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WsIntegralSpec {
    pub lambda: f64,
    pub mu: f64,
    pub nu: f64,
    pub a: f64,
    pub b: f64,
}

impl WsIntegralSpec {
    pub fn validate(&self) -> Result<()> {
        let all = [self.lambda, self.mu, self.nu, self.a, self.b];
        if all.iter().any(|v| !v.is_finite()) || !(self.a > 0.0 && self.b > 0.0) {
            return Err(Error::Parameter("a, b must be positive and all parameters finite".into()));
        }
        if self.a == self.b {
            return Err(Error::Parameter("a = b is not covered".into()));
        }
        if !(self.mu + self.nu + 1.0 > self.lambda) {
            return Err(Error::Parameter(format!("need μ + ν + 1 > λ, spec {self:?}")));
        }
        Ok(())
    }

    /// 2α = μ + ν − λ + 1.
    pub fn alpha(&self) -> f64 {
        0.5 * (self.mu + self.nu - self.lambda + 1.0)
    }

    /// The spec with (a, μ) and (b, ν) exchanged.
    pub fn swapped(&self) -> Self {
        WsIntegralSpec { lambda: self.lambda, mu: self.nu, nu: self.mu, a: self.b, b: self.a }
    }

    /// Damping ladder for the ε → 0 limit; the singularities nearest to
    /// ε = 0 sit at ±i|a − b|.
    pub fn schedule(&self) -> EpsSchedule {
        EpsSchedule::for_gap((self.a - self.b).abs())
    }

    pub fn tail_spec(&self) -> TailSpec {
        TailSpec { lambda: self.lambda, mu: self.mu, nu: self.nu, a: self.a, b: self.b, second: SecondKind::J }
    }
}

// b < a
fn ws_outer(s: &WsIntegralSpec) -> Result<f64> {
    let WsIntegralSpec { lambda, mu, nu, a, b } = *s;
    let alpha = s.alpha();
    let coef = rgamma(nu + 1.0) * rgamma(0.5 * (lambda + mu - nu + 1.0));
    if coef == 0.0 {
        return Ok(0.0);
    }
    let f = hyp2f1(&Hyp2F1Params::new(alpha, 0.5 * (nu - lambda - mu + 1.0), nu + 1.0, (b / a).powi(2)))?;
    Ok(b.powf(nu) * gamma(alpha)? * coef / (2f64.powf(lambda) * a.powf(nu - lambda + 1.0)) * f)
}

// a < b
fn ws_inner(s: &WsIntegralSpec) -> Result<f64> {
    let WsIntegralSpec { lambda, mu, nu, a, b } = *s;
    let alpha = s.alpha();
    let coef = rgamma(mu + 1.0) * rgamma(0.5 * (lambda + nu - mu + 1.0));
    if coef == 0.0 {
        return Ok(0.0);
    }
    let f = hyp2f1(&Hyp2F1Params::new(alpha, 0.5 * (mu - lambda - nu + 1.0), mu + 1.0, (a / b).powi(2)))?;
    Ok(a.powf(mu) * gamma(alpha)? * coef / (2f64.powf(lambda) * b.powf(mu - lambda + 1.0)) * f)
}

/// `lim_{ε→0} I_ε(a, b)` in closed form; the branch follows the sign of a − b.
pub fn ws_limit_closed(spec: &WsIntegralSpec) -> Result<f64> {
    spec.validate()?;
    if spec.b < spec.a {
        ws_outer(spec)
    } else {
        ws_inner(spec)
    }
}

/// The same limit from the ε ladder and polynomial extrapolation.
pub fn ws_limit_numeric(spec: &WsIntegralSpec, schedule: &EpsSchedule, q: &QuadSpec) -> Result<Extrapolation> {
    spec.validate()?;
    let ladder = integrate_bessel_tail_ladder(&spec.tail_spec(), &schedule.eps_values, q)?;
    let samples: Vec<(f64, f64)> = schedule.eps_values.iter().zip(&ladder).map(|(e, v)| (*e, v.value)).collect();
    let noise = ladder.iter().map(|v| v.error).fold(0.0, f64::max);
    extrapolate_eps_limit_with_noise(&samples, schedule, noise)
}

/// Compares the sphere quadrature of the plane wave `cos(r x·ω)` with
/// `(2π)^{n/2} J_{n/2-1}(r|x|) / (r|x|)^{n/2-1}`.
pub fn sphere_reduction_check(n: usize, r: f64, x_norm: f64) -> Result<VerificationReport> {
    if !(r > 0.0 && x_norm > 0.0) {
        return Err(Error::Parameter("sphere check needs r, |x| > 0".into()));
    }
    let z = r * x_norm;
    let h = n as f64 / 2.0;
    let quad = sphere_integral(n, |w| (z * w[0]).cos())?;
    let exact = if z < 1e-8 {
        // surface area of S^{n-1}
        2.0 * PI.powf(h) / gamma(h)?
    } else {
        (2.0 * PI).powf(h) * bessel_j(h - 1.0, z)? / z.powf(h - 1.0)
    };
    let tol = if n == 2 { 1e-10 } else { 1e-8 };
    Ok(VerificationReport::new(format!("sphere-reduction n={n} r|x|={z}"), exact, quad, tol, Mode::Absolute))
}
