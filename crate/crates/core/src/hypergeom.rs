//! Gauss hypergeometric function ₂F₁(a, b; c; z) for real parameters and
//! real z ≤ 1.
//!
//! Region map: direct series on |z| ≤ 1/2; on (1/2, 1) the Euler
//! transformation (when it speeds the series up) or, close to 1, the
//! connection formula in 1 − z; the Pfaff transformation maps z < 0 into
//! [0, 1); Gauss's sum at z = 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::{integrate_offsets, QuadSpec};
use crate::specfun::{gamma, ln_gamma, rgamma};

const SERIES_TOL: f64 = 1e-15;
const MAX_TERMS: usize = 10_000;
// Above this z the series in z is replaced by the connection formula in 1 − z.
const CONNECTION_Z: f64 = 0.9;
// c − a − b this close to an integer makes the connection formula degenerate.
const DEGENERATE: f64 = 1e-6;

/// Parameters of ₂F₁(a, b; c; z).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hyp2F1Params {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
}

impl Hyp2F1Params {
    pub fn new(a: f64, b: f64, c: f64, z: f64) -> Self {
        Hyp2F1Params { a, b, c, z }
    }

    fn nonpositive_int(x: f64) -> bool {
        x <= 0.0 && x == x.round()
    }

    /// Degree of the polynomial when a or b is a nonpositive integer.
    pub fn polynomial_degree(&self) -> Option<usize> {
        [self.a, self.b]
            .iter()
            .filter(|x| Self::nonpositive_int(**x))
            .map(|x| (-x) as usize)
            .min()
    }

    pub fn validate(&self) -> Result<()> {
        if [self.a, self.b, self.c, self.z].iter().any(|v| !v.is_finite()) {
            return Err(Error::Parameter("non-finite 2F1 parameter".into()));
        }
        if Self::nonpositive_int(self.c) {
            return Err(Error::Parameter(format!("c = {} is a nonpositive integer", self.c)));
        }
        if self.z > 1.0 {
            return Err(Error::Domain { arg: self.z, what: "2F1 is evaluated only for z <= 1" });
        }
        if self.z == 1.0 && self.polynomial_degree().is_none() && self.c - self.a - self.b <= 0.0 {
            return Err(Error::Divergent(format!("2F1 at z = 1 needs c − a − b > 0, got {}", self.c - self.a - self.b)));
        }
        Ok(())
    }
}

/// Rising factorial (a)_n = a(a+1)…(a+n−1).
pub fn pochhammer(a: f64, n: usize) -> f64 {
    if n <= 64 {
        return (0..n).fold(1.0, |p, k| p * (a + k as f64));
    }
    if a == 0.0 {
        return 0.0;
    }
    if a <= 0.0 && a == a.round() && (n as f64) > -a {
        return 0.0;
    }
    let (l1, s1) = ln_gamma(a + n as f64);
    let (l0, s0) = ln_gamma(a);
    s1 * s0 * (l1 - l0).exp()
}

/// Partial sums of the defining series; returns (value, terms used).
pub fn hyp2f1_series(a: f64, b: f64, c: f64, z: f64) -> Result<(f64, usize)> {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut comp = 0.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        if ratio == 0.0 {
            // a or b hit a nonpositive integer: the series has n + 1 terms
            return Ok((sum, n + 1));
        }
        term *= ratio;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        // once the ratio is below one the tail is bounded by a geometric series
        let r = ratio.abs();
        let tail = if r < 1.0 { term.abs() * r / (1.0 - r) } else { f64::INFINITY };
        if nf > (a.abs() + b.abs()) && tail <= SERIES_TOL * sum.abs().max(1.0) {
            return Ok((sum, n + 2));
        }
    }
    Err(Error::NonConvergence { estimate: sum, error: term.abs() })
}

fn gauss_sum(a: f64, b: f64, c: f64) -> Result<f64> {
    Ok(gamma(c)? * gamma(c - a - b)? * rgamma(c - a) * rgamma(c - b))
}

fn near_integer(x: f64) -> bool {
    (x - x.round()).abs() < DEGENERATE
}

// z in [0, 1)
fn hyp2f1_unit(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let s = c - a - b;
    if z <= 0.5 {
        return hyp2f1_series(a, b, c, z).map(|r| r.0);
    }
    if z > CONNECTION_Z && !near_integer(s) {
        // F = A F(a, b; a+b−c+1; 1−z) + B (1−z)^{c−a−b} F(c−a, c−b; c−a−b+1; 1−z)
        let w = 1.0 - z;
        let ca = gamma(c)? * gamma(s)? * rgamma(c - a) * rgamma(c - b);
        let cb = gamma(c)? * gamma(-s)? * rgamma(a) * rgamma(b);
        let f1 = if ca == 0.0 { 0.0 } else { hyp2f1_series(a, b, 1.0 - s, w)?.0 };
        let f2 = if cb == 0.0 { 0.0 } else { hyp2f1_series(c - a, c - b, 1.0 + s, w)?.0 };
        return Ok(ca * f1 + cb * w.powf(s) * f2);
    }
    if s < 0.0 {
        let (v, _) = hyp2f1_series(c - a, c - b, c, z)?;
        return Ok((1.0 - z).powf(s) * v);
    }
    hyp2f1_series(a, b, c, z).map(|r| r.0)
}

/// ₂F₁(a, b; c; z) for z ≤ 1.
pub fn hyp2f1(p: &Hyp2F1Params) -> Result<f64> {
    p.validate()?;
    let Hyp2F1Params { a, b, c, z } = *p;
    if z == 0.0 {
        return Ok(1.0);
    }
    if let Some(m) = p.polynomial_degree() {
        if z == 1.0 {
            // Chu–Vandermonde: F(−m, b; c; 1) = (c − b)_m / (c)_m
            let other = if Hyp2F1Params::nonpositive_int(a) && (-a) as usize == m { b } else { a };
            return Ok(pochhammer(c - other, m) / pochhammer(c, m));
        }
        if z.abs() <= 1.0 {
            return hyp2f1_series(a, b, c, z).map(|r| r.0);
        }
    }
    if z == 1.0 {
        return gauss_sum(a, b, c);
    }
    if z < 0.0 {
        let w = z / (z - 1.0);
        // Pfaff on whichever parameter keeps a terminating series terminating
        let (pa, pb) = if !Hyp2F1Params::nonpositive_int(a) && Hyp2F1Params::nonpositive_int(b) {
            (b, a)
        } else {
            (a, b)
        };
        return Ok((1.0 - z).powf(-pa) * hyp2f1_unit(pa, c - pb, c, w)?);
    }
    hyp2f1_unit(a, b, c, z)
}

/// ₂F₁ by Euler's integral
/// `Γ(c)/(Γ(b)Γ(c−b)) ∫₀¹ t^{b−1}(1−t)^{c−b−1}(1−tz)^{−a} dt`, for c > b > 0 and z < 1.
/// An independent route used to check [`hyp2f1`].
pub fn hyp2f1_euler_integral(p: &Hyp2F1Params, q: &QuadSpec) -> Result<f64> {
    let Hyp2F1Params { a, b, c, z } = *p;
    if !(b > 0.0) || !(c > b) {
        return Err(Error::Parameter(format!("Euler integral needs c > b > 0 (b = {b}, c = {c})")));
    }
    if !(z < 1.0) {
        return Err(Error::Domain { arg: z, what: "Euler integral needs z < 1" });
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    let r = integrate_offsets(
        |t, dl, dr| dl.powf(b - 1.0) * dr.powf(c - b - 1.0) * (1.0 - t * z).powf(-a),
        0.0,
        1.0,
        q,
    )?;
    Ok(gamma(c)? * rgamma(b) * rgamma(c - b) * r.value)
}
