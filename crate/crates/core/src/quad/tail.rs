//! Semi-infinite integrals `∫₀^∞ e^{-εt} t^{-λ} J_μ(at) C_ν(bt) dt` with
//! `C ∈ {J, N, K}`.
//!
//! The axis is cut at approximate zeros of the faster-oscillating factor.
//! The first panel carries the power singularity at 0 and goes to tanh-sinh;
//! later panels use a fixed Gauss–Legendre rule, so the ε ladder can reuse
//! one set of Bessel evaluations for every damping value.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::OnceLock;

use super::{de, extrapolate::wynn_epsilon, gauss_legendre, gk, QuadResult, QuadSpec};
use crate::error::{Error, Result};
use crate::specfun::{bessel_j, bessel_k, neumann_n};

/// Second factor of the product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SecondKind {
    J,
    N,
    K,
}

/// Parameters of `t^{-λ} J_μ(at) C_ν(bt)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailSpec {
    pub lambda: f64,
    pub mu: f64,
    pub nu: f64,
    pub a: f64,
    pub b: f64,
    pub second: SecondKind,
}

const PANEL_NODES: usize = 20;
const MAX_PANELS: usize = 400_000;
const WYNN_EVERY: usize = 8;
const WYNN_MIN_PANELS: usize = 32;
const MAX_PANELS_UNDAMPED: usize = 20_000;
// Bound on |J_ν(x)|·sqrt(πx/2) and |K_ν(x)|·sqrt(2x/π)e^x used by the tail envelope.
const ENVELOPE_SLACK: f64 = 1.2;

fn panel_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(PANEL_NODES))
}

impl TailSpec {
    pub fn validate(&self) -> Result<()> {
        let all = [self.lambda, self.mu, self.nu, self.a, self.b];
        if all.iter().any(|v| !v.is_finite()) || !(self.a > 0.0) || !(self.b > 0.0) {
            return Err(Error::Parameter("tail integral needs finite parameters and a, b > 0".into()));
        }
        if self.second != SecondKind::K && self.a == self.b {
            return Err(Error::Parameter("a = b is outside the discontinuous-integral setting".into()));
        }
        // behaviour at the origin: J_μ ~ t^μ, J_ν ~ t^ν, N_ν and K_ν ~ t^{-|ν|}
        let lead = match self.second {
            SecondKind::J => self.mu + self.nu,
            SecondKind::N | SecondKind::K => self.mu - self.nu.abs(),
        };
        if !(lead - self.lambda + 1.0 > 0.0) {
            return Err(Error::Parameter(format!(
                "integrand not integrable at 0 (need μ+ν+1 > λ), spec {self:?}"
            )));
        }
        if self.second == SecondKind::N && self.nu == self.nu.round() {
            return Err(Error::Order(self.nu));
        }
        Ok(())
    }

    /// `t^{-λ} J_μ(at) C_ν(bt)` without damping.
    pub fn kernel(&self, t: f64) -> f64 {
        let j = bessel_j(self.mu, self.a * t).unwrap_or(f64::NAN);
        let c = match self.second {
            SecondKind::J => bessel_j(self.nu, self.b * t),
            SecondKind::N => neumann_n(self.nu, self.b * t),
            SecondKind::K => bessel_k(self.nu, self.b * t),
        }
        .unwrap_or(f64::NAN);
        t.powf(-self.lambda) * j * c
    }

    fn exp_rate(&self) -> f64 {
        if self.second == SecondKind::K {
            self.b
        } else {
            0.0
        }
    }

    /// Bound on `∫_T^∞ |kernel| e^{-εt} dt` for large T.
    fn tail_bound(&self, eps: f64, t: f64) -> f64 {
        let q = -self.lambda - 1.0;
        let c = match self.second {
            SecondKind::K => ENVELOPE_SLACK * ENVELOPE_SLACK / (self.a * self.b).sqrt(),
            _ => ENVELOPE_SLACK * ENVELOPE_SLACK * 2.0 / (PI * (self.a * self.b).sqrt()),
        };
        let delta = eps + self.exp_rate();
        if delta <= 0.0 {
            return f64::INFINITY;
        }
        let denom = delta - q.max(0.0) / t;
        if denom <= 0.0 {
            return f64::INFINITY;
        }
        c * (-delta * t).exp() * t.powf(q) / denom
    }

    /// Panel boundaries: McMahon approximations to zeros of the faster factor.
    fn boundary(&self, k: usize) -> f64 {
        let (omega, order, shift) = match self.second {
            SecondKind::K => (self.a, self.mu, 0.25),
            _ if self.a >= self.b => (self.a, self.mu, 0.25),
            SecondKind::J => (self.b, self.nu, 0.25),
            SecondKind::N => (self.b, self.nu, 0.75),
        };
        let beta = (k as f64 + 0.5 * order.abs() - shift) * PI;
        let z = if beta > 1.0 { beta - (4.0 * order * order - 1.0) / (8.0 * beta) } else { beta };
        // keep boundaries positive and at least a quarter period apart
        let floor = (k as f64 - 0.75).max(0.25) * PI;
        z.max(floor) / omega
    }
}

fn first_panel(spec: &TailSpec, eps: f64, end: f64, q: &QuadSpec) -> Result<QuadResult> {
    let inner = QuadSpec { abs_tol: q.abs_tol * 0.1, rel_tol: q.rel_tol * 0.1, ..*q };
    de::integrate(|t| (-eps * t).exp() * spec.kernel(t), 0.0, end, &inner)
}

/// `∫₀^∞ e^{-εt} t^{-λ} J_μ(at) C_ν(bt) dt`.
///
/// With damping (ε > 0, or the K kind) the panel walk stops once the
/// envelope bound on the remaining tail is below tolerance; the bound is
/// included in the reported error. Without damping the panel partial sums
/// are accelerated with Wynn's epsilon algorithm.
pub fn integrate_bessel_tail(spec: &TailSpec, eps: f64, q: &QuadSpec) -> Result<QuadResult> {
    Ok(integrate_bessel_tail_ladder(spec, &[eps], q)?.remove(0))
}

/// The same integral for several ε at once, sharing the Bessel evaluations.
pub fn integrate_bessel_tail_ladder(spec: &TailSpec, eps: &[f64], q: &QuadSpec) -> Result<Vec<QuadResult>> {
    spec.validate()?;
    q.validate()?;
    if eps.iter().any(|e| !(*e >= 0.0) || !e.is_finite()) {
        return Err(Error::Parameter("ε must be finite and nonnegative".into()));
    }
    let damped = |e: f64| e > 0.0 || spec.second == SecondKind::K;
    if eps.iter().any(|&e| !damped(e)) {
        if eps.len() != 1 {
            return Err(Error::Parameter("undamped integrals are evaluated one at a time".into()));
        }
        return undamped(spec, q).map(|r| vec![r]);
    }
    let (x, w) = panel_rule();
    let t1 = spec.boundary(1);
    let mut out: Vec<QuadResult> = Vec::with_capacity(eps.len());
    for &e in eps {
        out.push(first_panel(spec, e, t1, q)?);
    }
    let mut done = vec![false; eps.len()];
    let mut lo = t1;
    let mut vals = vec![0.0; PANEL_NODES];
    let mut nodes = [0.0; PANEL_NODES];
    for k in 2..MAX_PANELS {
        let hi = spec.boundary(k);
        let (c, h) = (0.5 * (lo + hi), 0.5 * (hi - lo));
        for i in 0..PANEL_NODES {
            nodes[i] = c + h * x[i];
            vals[i] = h * w[i] * spec.kernel(nodes[i]);
        }
        let mut all = true;
        for (j, &e) in eps.iter().enumerate() {
            if done[j] {
                continue;
            }
            let s: f64 = nodes.iter().zip(&vals).map(|(t, v)| (-e * t).exp() * v).sum();
            let r = &mut out[j];
            r.value += s;
            r.evaluations += PANEL_NODES;
            r.subdivisions += 1;
            let tb = spec.tail_bound(e, hi);
            if tb <= 0.1 * q.target(r.value) {
                r.error += tb + 1e-15 * r.subdivisions as f64 * r.value.abs();
                done[j] = true;
            } else {
                all = false;
            }
        }
        if all {
            return Ok(out);
        }
        lo = hi;
    }
    let r = &out[done.iter().position(|d| !d).unwrap_or(0)];
    Err(Error::NonConvergence { estimate: r.value, error: f64::INFINITY })
}

fn undamped(spec: &TailSpec, q: &QuadSpec) -> Result<QuadResult> {
    if spec.lambda <= -1.0 {
        return Err(Error::Parameter("undamped tail diverges for λ ≤ −1; use ε > 0".into()));
    }
    let (x, w) = panel_rule();
    let t1 = spec.boundary(1);
    let first = first_panel(spec, 0.0, t1, q)?;
    let mut sums = vec![first.value];
    let mut lo = t1;
    let mut stable = 0;
    let mut last_est = f64::NAN;
    let mut evals = first.evaluations;
    for k in 2..MAX_PANELS_UNDAMPED {
        let hi = spec.boundary(k);
        let (c, h) = (0.5 * (lo + hi), 0.5 * (hi - lo));
        let s: f64 = (0..PANEL_NODES).map(|i| h * w[i] * spec.kernel(c + h * x[i])).sum();
        evals += PANEL_NODES;
        sums.push(sums.last().expect("nonempty") + s);
        lo = hi;
        if sums.len() >= WYNN_MIN_PANELS && sums.len() % WYNN_EVERY == 0 {
            // accelerate the most recent stretch only; old terms add nothing
            let window = &sums[sums.len().saturating_sub(40)..];
            let (est, err) = wynn_epsilon(window);
            let change = (est - last_est).abs();
            let tol = q.target(est);
            if change <= tol && err <= tol {
                stable += 1;
            } else {
                stable = 0;
            }
            last_est = est;
            if stable >= 3 {
                return Ok(QuadResult {
                    value: est,
                    error: change.max(err) + first.error,
                    evaluations: evals,
                    subdivisions: sums.len(),
                });
            }
        }
    }
    Err(Error::NonConvergence { estimate: last_est, error: f64::INFINITY })
}

/// `∫_{a0}^∞ f(t) dt` for integrands that decay at least exponentially.
/// The first unit interval goes to tanh-sinh (endpoint singularities allowed),
/// then doubling panels to adaptive Gauss–Kronrod until two consecutive panels
/// are negligible.
pub fn integrate_decaying<F: Fn(f64) -> f64>(f: F, a0: f64, q: &QuadSpec) -> Result<QuadResult> {
    q.validate()?;
    let mut total = de::integrate(&f, a0, a0 + 1.0, q)?;
    let mut width = 1.0;
    let mut lo = a0 + 1.0;
    let mut quiet = 0;
    for _ in 0..60 {
        let hi = lo + width;
        let p = gk::integrate_smooth(&f, lo, hi, &QuadSpec { max_subdivisions: 256, ..*q })?;
        total = total + p;
        if p.value.abs() <= 0.1 * q.target(total.value) {
            quiet += 1;
            if quiet >= 2 {
                return Ok(total);
            }
        } else {
            quiet = 0;
        }
        lo = hi;
        width *= 2.0;
    }
    Err(Error::NonConvergence { estimate: total.value, error: total.error })
}
