//! ⟨F, Pφ⟩ as an iterated integral: y outside, |x| (or x for n = 1) inside.
//!
//! At fixed y < 0 the inner integral meets the cone at r_c = (2/3)(−y)^{3/2}.
//! The slice is split there and |Δ| = 9(r_c − r)(r_c + r) is formed from the
//! distance to the split point, so nodes next to the cone keep full relative
//! accuracy. For n ≥ 3 the cone singularity is not integrable and each slice
//! takes the finite part, which is the analytic continuation in the exponent.

use std::cell::Cell;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::bump::{apply_tricomi, BumpFunction, TestFunction};
use super::report::{Diagnostics, Mode, VerificationReport};
use crate::error::{Error, Result};
use crate::fundsol::{exponent, Solution};
use crate::quad::{integrate_offsets, QuadResult, QuadSpec};
use crate::specfun::gamma;

/// How a pairing is computed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairingOptions {
    pub quad: QuadSpec,
    /// Pole moved to (shift·e₁, 0); n = 1 only.
    pub shift: f64,
    /// Allows n = 3, which is slow.
    pub expensive: bool,
}

impl Default for PairingOptions {
    fn default() -> Self {
        PairingOptions { quad: QuadSpec { abs_tol: 1e-8, rel_tol: 1e-8, max_subdivisions: 32 }, shift: 0.0, expensive: false }
    }
}

/// Tolerance of the delta pairing for a given dimension and solution.
pub fn pairing_tolerance(sol: Solution, n: usize) -> f64 {
    match (sol, n) {
        (_, 3) => 5e-2,
        (Solution::FSharp, _) => 1e-2,
        _ => 5e-3,
    }
}

/// A slice piece [lo, hi] with flags for cone endpoints.
#[derive(Debug, Clone, Copy)]
struct Piece {
    lo: f64,
    hi: f64,
    cone_lo: bool,
    cone_hi: bool,
}

fn pieces_between(points: &mut Vec<(f64, bool)>) -> Vec<Piece> {
    points.sort_by(|a, b| a.0.total_cmp(&b.0));
    points.dedup_by(|a, b| {
        if a.0 == b.0 {
            b.1 |= a.1;
            true
        } else {
            false
        }
    });
    points
        .windows(2)
        .filter(|w| w[1].0 > w[0].0)
        .map(|w| Piece { lo: w[0].0, hi: w[1].0, cone_lo: w[0].1, cone_hi: w[1].1 })
        .collect()
}

struct Setup<'a> {
    n: usize,
    phi: &'a BumpFunction,
    shift: f64,
    coef_plus: f64,
    coef_minus: f64,
    p: f64,
    sphere: f64,
    inner: QuadSpec,
}

impl Setup<'_> {
    fn cone_radius(y: f64) -> f64 {
        if y < 0.0 {
            2.0 / 3.0 * (-y).powf(1.5)
        } else {
            0.0
        }
    }

    fn half_width(&self, y: f64) -> f64 {
        let dy = y - self.phi.center_y();
        let w2 = self.phi.radius * self.phi.radius - dy * dy;
        if w2 > 0.0 {
            w2.sqrt()
        } else {
            0.0
        }
    }

    /// Ends of the inner range in the variable F sees (x − shift, or r).
    fn range(&self, y: f64) -> (f64, f64) {
        let w = self.half_width(y);
        if self.n == 1 {
            let c = self.phi.center[0] - self.shift;
            (c - w, c + w)
        } else {
            (0.0, w)
        }
    }

    fn slice_pieces(&self, y: f64) -> Vec<Piece> {
        let (lo, hi) = self.range(y);
        if hi <= lo {
            return Vec::new();
        }
        let rc = Self::cone_radius(y);
        let mut pts = vec![(lo, false), (hi, false)];
        let cuts: &[f64] = if self.n == 1 { &[-rc, 0.0, rc] } else { &[rc] };
        for &c in cuts {
            if c > lo && c < hi {
                pts.push((c, rc > 0.0 && c != 0.0));
            }
        }
        pieces_between(&mut pts)
    }

    fn tricomi_at(&self, u: f64, y: f64) -> f64 {
        let mut pt = vec![0.0; self.n + 1];
        pt[0] = u + if self.n == 1 { self.shift } else { 0.0 };
        pt[self.n] = y;
        apply_tricomi(self.phi, &pt)
    }

    fn weight(&self, u: f64) -> f64 {
        if self.n == 1 {
            1.0
        } else {
            self.sphere * u.powi(self.n as i32 - 1)
        }
    }

    fn slice(&self, y: f64) -> Result<QuadResult> {
        let rc = Self::cone_radius(y);
        let mut total = QuadResult::default();
        for pc in self.slice_pieces(y) {
            let mid = 0.5 * (pc.lo + pc.hi);
            let inside = y < 0.0 && mid.abs() < rc;
            let coef = if inside { self.coef_minus } else { self.coef_plus };
            if coef == 0.0 {
                continue;
            }
            let one_cone = pc.cone_lo != pc.cone_hi;
            let finite_part = self.p <= -1.0 && one_cone;
            // everything except the power of the distance to the cone
            let smooth = |u: f64| coef * (9.0 * (u.abs() + rc)).powf(self.p) * self.tricomi_at(u, y) * self.weight(u);
            let r = if y < 0.0 && (pc.cone_lo || pc.cone_hi) {
                let edge = if pc.cone_lo { pc.lo } else { pc.hi };
                let h_edge = if finite_part { smooth(edge) } else { 0.0 };
                let f = |u: f64, dl: f64, dr: f64| {
                    let d = match (pc.cone_lo, pc.cone_hi) {
                        (true, true) => dl.min(dr),
                        (true, false) => dl,
                        _ => dr,
                    };
                    d.powf(self.p) * (smooth(u) - h_edge)
                };
                let mut r = soft(integrate_offsets(f, pc.lo, pc.hi, &self.inner))?;
                if finite_part {
                    let len = pc.hi - pc.lo;
                    r.value += h_edge * len.powf(self.p + 1.0) / (self.p + 1.0);
                }
                r
            } else {
                let f = |u: f64, _: f64, _: f64| {
                    let d = 9.0 * u * u + 4.0 * y * y * y;
                    coef * d.abs().powf(self.p) * self.tricomi_at(u, y) * self.weight(u)
                };
                soft(integrate_offsets(f, pc.lo, pc.hi, &self.inner))?
            };
            total = total + r;
        }
        Ok(total)
    }

    /// y values where the cone crosses the edge of the bump's slice.
    fn kinks(&self) -> Vec<f64> {
        let (c, rad) = (self.phi.center_y(), self.phi.radius);
        let (a, b) = (c - rad, (c + rad).min(0.0));
        if a >= b {
            return Vec::new();
        }
        let mut out = Vec::new();
        let edges = |y: f64| -> Vec<f64> {
            let (lo, hi) = self.range(y);
            let rc = Self::cone_radius(y);
            vec![lo.abs() - rc, hi.abs() - rc]
        };
        const SCAN: usize = 400;
        for k in 0..2 {
            let g = |y: f64| edges(y)[k];
            let mut prev = (a, g(a));
            for i in 1..=SCAN {
                let y = a + (b - a) * i as f64 / SCAN as f64;
                let v = g(y);
                if v.signum() != prev.1.signum() && v != 0.0 && prev.1 != 0.0 {
                    let (mut l, mut h) = (prev.0, y);
                    for _ in 0..80 {
                        let m = 0.5 * (l + h);
                        if g(m).signum() == g(l).signum() {
                            l = m;
                        } else {
                            h = m;
                        }
                    }
                    out.push(0.5 * (l + h));
                }
                prev = (y, v);
            }
        }
        out
    }
}

// Use the estimate of a non-converged integral, with its error estimate.
fn soft(r: Result<QuadResult>) -> Result<QuadResult> {
    match r {
        Err(Error::NonConvergence { estimate, error }) => {
            Ok(QuadResult { value: estimate, error, evaluations: 0, subdivisions: 0 })
        }
        other => other,
    }
}

/// `∫ F(x − shift·e₁, y)(Pφ)(x, y) dx dy`.
pub fn pairing_integral(sol: Solution, n: usize, phi: &BumpFunction, opts: &PairingOptions) -> Result<QuadResult> {
    if phi.dim() != n {
        return Err(Error::Parameter(format!("bump lives in dimension {}, expected {n}", phi.dim())));
    }
    if n == 0 || n > 3 || (n == 3 && !opts.expensive) {
        return Err(Error::Unsupported(format!("delta pairing in dimension {n}")));
    }
    if n > 1 && (opts.shift != 0.0 || phi.center[..n].iter().any(|c| *c != 0.0)) {
        return Err(Error::Unsupported("for n > 1 the bump must be centered on x = 0".into()));
    }
    opts.quad.validate()?;
    let (coef_plus, coef_minus) = sol.coefficients(n);
    let h = n as f64 / 2.0;
    let setup = Setup {
        n,
        phi,
        shift: opts.shift,
        coef_plus,
        coef_minus,
        p: exponent(n),
        sphere: 2.0 * PI.powf(h) / gamma(h)?,
        inner: QuadSpec { abs_tol: 0.1 * opts.quad.abs_tol, ..opts.quad },
    };

    let (c, rad) = (phi.center_y(), phi.radius);
    let mut pts = vec![(c - rad, false), (c + rad, false)];
    if c - rad < 0.0 && c + rad > 0.0 {
        pts.push((0.0, false));
    }
    pts.extend(setup.kinks().into_iter().map(|y| (y, false)));
    let failure: Cell<Option<Error>> = Cell::new(None);
    let worst_inner = Cell::new(0.0f64);
    let evals = Cell::new(0usize);
    let subdiv = Cell::new(0usize);
    let outer = |y: f64| match setup.slice(y) {
        Ok(r) => {
            worst_inner.set(worst_inner.get().max(r.error));
            evals.set(evals.get() + r.evaluations);
            subdiv.set(subdiv.get() + r.subdivisions);
            r.value
        }
        Err(e) => {
            failure.set(Some(e));
            f64::NAN
        }
    };
    let mut total = QuadResult::default();
    for pc in pieces_between(&mut pts) {
        total = total + soft(integrate_offsets(|y, _, _| outer(y), pc.lo, pc.hi, &opts.quad))?;
    }
    if let Some(e) = failure.take() {
        return Err(e);
    }
    Ok(QuadResult {
        value: total.value,
        error: total.error + 2.0 * rad * worst_inner.get(),
        evaluations: total.evaluations + evals.get(),
        subdivisions: total.subdivisions + subdiv.get(),
    })
}

/// ⟨F, Pφ⟩ against φ at the pole.
pub fn delta_pairing(sol: Solution, n: usize, phi: &BumpFunction, opts: &PairingOptions) -> VerificationReport {
    let mut pole = vec![0.0; n + 1];
    if n >= 1 {
        pole[0] = opts.shift;
    }
    let target = if phi.dim() == n { phi.value(&pole) } else { f64::NAN };
    let tol = pairing_tolerance(sol, n);
    let name = if opts.shift != 0.0 {
        format!("pairing {} n={n} pole at x={}", sol.name(), opts.shift)
    } else {
        format!("pairing {} n={n}", sol.name())
    };
    report_from(name, target, tol, pairing_integral(sol, n, phi, opts))
}

/// ⟨F, Pφ⟩ for φ vanishing near the pole; should be 0 up to 5e−3‖φ‖∞.
pub fn homogeneous_pairing(sol: Solution, n: usize, phi: &BumpFunction, opts: &PairingOptions) -> VerificationReport {
    let name = format!("homogeneous pairing {} n={n} center={:?} radius={}", sol.name(), phi.center, phi.radius);
    report_from(name, 0.0, 5e-3 * phi.sup_norm(), pairing_integral(sol, n, phi, opts))
}

fn report_from(name: String, target: f64, tol: f64, r: Result<QuadResult>) -> VerificationReport {
    match r {
        Ok(q) => VerificationReport::new(name, target, q.value, tol, Mode::Absolute).with_diagnostics(Diagnostics {
            subdivisions: q.subdivisions,
            evaluations: q.evaluations,
            error_estimate: q.error,
            eps_samples: Vec::new(),
        }),
        Err(e) => VerificationReport::failed(name, target, tol, Mode::Absolute, &e.to_string()),
    }
}

/// Quadrature spec with twice the subdivision budget and tolerances cut by 16.
pub fn refined(q: &QuadSpec) -> QuadSpec {
    QuadSpec { abs_tol: q.abs_tol / 16.0, rel_tol: q.rel_tol / 16.0, max_subdivisions: 2 * q.max_subdivisions }
}
