//! Named check suites. Each suite is a list of independent checks; they run
//! through [`Execution`] and come back in a fixed order.

use std::f64::consts::PI;
use std::io::Write;

use super::bump::BumpFunction;
use super::pairing::{delta_pairing, homogeneous_pairing, pairing_integral, refined, PairingOptions};
use super::report::{Diagnostics, Mode, VerificationReport};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::fundsol::{
    ab_constants, airy_pair_wronskian, alpha, beta, f_origin_ai_bi, homogeneity_degree, minus_constant,
    sharp_constants, tricomi_minus_constant, tricomi_plus_constant, Construction, Solution, SpacetimePoint,
    SpectralGreen,
};
use crate::quad::{integrate_bessel_tail, EpsSchedule, QuadSpec, SecondKind, TailSpec};
use crate::radialft::{
    gap_schedule, ift_closed, ift_numeric, sphere_reduction_check, ws_limit_closed, ws_limit_numeric, RadialFtSpec,
    RadialKind, WsIntegralSpec,
};
use crate::specfun::{airy_ai, airy_bi_prime, airy_wronskian, gamma};

const THIRD: f64 = 1.0 / 3.0;

/// Suite names accepted by [`run_suite`], in the order "all" runs them.
pub const SUITES: &[&str] = &[
    "wronskian",
    "airy",
    "watson",
    "ft-closed-vs-numeric",
    "limits",
    "jump",
    "constants",
    "pairing",
    "pde-residual",
    "dilation",
    "combination",
    "sphere",
];

type Check = Box<dyn Fn() -> VerificationReport + Send + Sync>;

fn check(f: impl Fn() -> VerificationReport + Send + Sync + 'static) -> Check {
    Box::new(f)
}

fn or_failed(name: String, target: f64, tol: f64, mode: Mode, r: Result<VerificationReport>) -> VerificationReport {
    r.unwrap_or_else(|e| VerificationReport::failed(name, target, tol, mode, &e.to_string()))
}

fn checks_for(name: &str) -> Result<Vec<Check>> {
    Ok(match name {
        "wronskian" => vec![check(|| {
            VerificationReport::new("wronskian z=0", 1.0 / PI, airy_wronskian(0.0), 1e-12, Mode::Absolute)
        })],
        "airy" => airy_checks(),
        "watson" => watson_checks(),
        "ft-closed-vs-numeric" => ft_checks(),
        "limits" => limit_checks(),
        "jump" => jump_checks(),
        "constants" => constant_checks(),
        "pairing" => pairing_checks(),
        "pde-residual" => pde_checks(),
        "dilation" => dilation_checks(),
        "combination" => combination_checks(),
        "sphere" => sphere_checks(),
        other => return Err(Error::Parameter(format!("unknown suite {other:?}"))),
    })
}

/// Expands "all" and rejects unknown names.
pub fn resolve_selection(selection: &[&str]) -> Result<Vec<&'static str>> {
    let mut out = Vec::new();
    for s in selection {
        if *s == "all" {
            out.extend_from_slice(SUITES);
        } else if let Some(k) = SUITES.iter().find(|k| *k == s) {
            out.push(*k);
        } else {
            return Err(Error::Parameter(format!("unknown suite {s:?}")));
        }
    }
    Ok(out)
}

/// Runs the selected suites ("all" for every one). Failures are reports
/// with `passed = false`; only an unknown suite name is an error.
pub fn run_suite(selection: &[&str], exec: Execution) -> Result<Vec<VerificationReport>> {
    let names = resolve_selection(selection)?;
    let mut checks = Vec::new();
    for n in names {
        checks.extend(checks_for(n)?);
    }
    Ok(exec.map(&checks, |c| c()))
}

/// One JSON object per line.
pub fn write_json_lines<W: Write>(reports: &[VerificationReport], mut out: W) -> std::io::Result<()> {
    for r in reports {
        writeln!(out, "{}", r.to_json_line())?;
    }
    Ok(())
}

pub fn all_passed(reports: &[VerificationReport]) -> bool {
    reports.iter().all(|r| r.passed)
}

fn airy_checks() -> Vec<Check> {
    let mut v = vec![
        check(|| {
            let want = 3f64.powf(-2.0 / 3.0) / gamma(2.0 / 3.0).expect("finite");
            VerificationReport::new("Ai(0)", want, airy_ai(0.0), 1e-12, Mode::Absolute)
        }),
        check(|| {
            let want = 3f64.powf(-5.0 / 6.0) / gamma(4.0 / 3.0).expect("finite");
            VerificationReport::new("Bi'(0)", want, airy_bi_prime(0.0), 1e-12, Mode::Absolute)
        }),
    ];
    for z in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        v.push(check(move || {
            VerificationReport::new(format!("wronskian z={z}"), 1.0 / PI, airy_wronskian(z), 1e-10, Mode::Absolute)
        }));
    }
    v
}

/// ∫₀^∞ t^{μ+ν+1}J_μ(at)K_ν(bt) dt = (2a)^μ(2b)^νΓ(μ+ν+1)/(a²+b²)^{μ+ν+1}.
pub fn watson_closed(mu: f64, nu: f64, a: f64, b: f64) -> Result<f64> {
    Ok((2.0 * a).powf(mu) * (2.0 * b).powf(nu) * gamma(mu + nu + 1.0)? / (a * a + b * b).powf(mu + nu + 1.0))
}

fn watson_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for (mu, nu) in [(0.0, 0.0), (0.5, THIRD), (-0.5, THIRD), (0.0, THIRD)] {
        for a in [0.5, 1.0, 2.0] {
            v.push(check(move || {
                let name = format!("watson mu={mu} nu={nu:.4} a={a}");
                let spec = TailSpec { lambda: -(mu + nu + 1.0), mu, nu, a, b: 1.0, second: SecondKind::K };
                let r = (|| {
                    let want = watson_closed(mu, nu, a, 1.0)?;
                    let got = integrate_bessel_tail(&spec, 0.0, &QuadSpec::default())?;
                    Ok(VerificationReport::new(name.clone(), want, got.value, 1e-7, Mode::Relative)
                        .with_diagnostics(quad_diag(got.subdivisions, got.evaluations, got.error)))
                })();
                or_failed(name.clone(), f64::NAN, 1e-7, Mode::Relative, r)
            }));
        }
    }
    v
}

fn quad_diag(subdivisions: usize, evaluations: usize, error_estimate: f64) -> Diagnostics {
    Diagnostics { subdivisions, evaluations, error_estimate, eps_samples: Vec::new() }
}

/// Radii used by the transform sweep: six inside and six outside |x| = scale,
/// each at least 0.1 away from it.
pub fn ft_radii(scale: f64) -> Vec<f64> {
    let inside = (1..=6).map(|k| (scale - 0.1) * k as f64 / 6.0);
    let outside = (0..6).map(|k| scale + 0.1 + 0.25 * scale * k as f64);
    inside.chain(outside).collect()
}

/// One closed-vs-numeric comparison of the radial transform.
pub fn ft_check(kind: RadialKind, n: usize, scale: f64, r: f64) -> VerificationReport {
    let name = format!("ift {} n={n} scale={scale} r={r:.4}", kind.name());
    let (tol, mode) = if kind == RadialKind::Knu { (1e-5, Mode::Relative) } else { (1e-3, Mode::Relative) };
    let q = QuadSpec { abs_tol: 1e-10, rel_tol: 1e-10, max_subdivisions: 64 };
    let res = (|| {
        let spec = RadialFtSpec::new(kind, THIRD, n, scale)?;
        let closed = ift_closed(&spec, r)?;
        let m = ift_numeric(&spec, r, 0.09, &gap_schedule(&spec, r), &q)?;
        // branches that vanish identically are compared in absolute terms
        let (tol, mode) = if closed == 0.0 { (1e-4, Mode::Absolute) } else { (tol, mode) };
        let diag = Diagnostics {
            subdivisions: 0,
            evaluations: m.evaluations,
            error_estimate: m.error,
            eps_samples: m.extrapolation.map(|e| e.samples).unwrap_or_default(),
        };
        Ok(VerificationReport::new(name.clone(), closed, m.value, tol, mode).with_diagnostics(diag))
    })();
    or_failed(name, f64::NAN, tol, mode, res)
}

fn ft_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for kind in RadialKind::ALL {
        for n in 1..=3 {
            for scale in [0.7, 1.0, 1.9] {
                for r in ft_radii(scale) {
                    v.push(check(move || ft_check(kind, n, scale, r)));
                }
            }
        }
    }
    v
}

/// Parameter sets for the damped-limit checks, each on both sides of a = b.
/// All six limits are nonzero.
pub fn limit_specs() -> Vec<WsIntegralSpec> {
    let mut v = Vec::new();
    for (lambda, mu) in [(-5.0 / 6.0, -0.5), (-1.0, 0.0), (-11.0 / 6.0, 0.5)] {
        for a in [0.6, 1.5] {
            v.push(WsIntegralSpec { lambda, mu, nu: THIRD, a, b: 1.0 });
        }
    }
    v
}

fn limit_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for w in limit_specs() {
        v.push(check(move || {
            let name = format!("limit lambda={:.4} mu={} a={} b={}", w.lambda, w.mu, w.a, w.b);
            let q = QuadSpec { abs_tol: 1e-11, rel_tol: 1e-11, max_subdivisions: 64 };
            let r = (|| {
                let closed = ws_limit_closed(&w)?;
                let ex = ws_limit_numeric(&w, &w.schedule(), &q)?;
                let diag = Diagnostics { error_estimate: ex.error, eps_samples: ex.samples.clone(), ..Default::default() };
                Ok(VerificationReport::new(name.clone(), closed, ex.value, 1e-4, Mode::Relative).with_diagnostics(diag))
            })();
            or_failed(name.clone(), f64::NAN, 1e-4, Mode::Relative, r)
        }));
        v.push(check(move || {
            let name = format!("limit swap lambda={:.4} mu={} a={} b={}", w.lambda, w.mu, w.a, w.b);
            let r = (|| {
                let x = ws_limit_closed(&w)?;
                let y = ws_limit_closed(&w.swapped())?;
                Ok(VerificationReport::new(name.clone(), x, y, 1e-12, Mode::Relative))
            })();
            or_failed(name.clone(), f64::NAN, 1e-12, Mode::Relative, r)
        }));
    }
    v
}

fn jump_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for c in Construction::ALL {
        let offsets: &[f64] = if c == Construction::AiryTwoSided { &[-1.0, 0.0, 0.7] } else { &[0.0] };
        for &b in offsets {
            for xi in [0.5, 1.0, 3.0] {
                v.push(check(move || {
                    let name = format!("continuity {} b={b} xi={xi}", c.name());
                    let r = (|| {
                        let j = SpectralGreen::new(c, b)?.jump_conditions(xi)?;
                        Ok(VerificationReport::new(name.clone(), j.below, j.above, 1e-8, Mode::Absolute))
                    })();
                    or_failed(name.clone(), f64::NAN, 1e-8, Mode::Absolute, r)
                }));
                v.push(check(move || {
                    let name = format!("derivative jump {} b={b} xi={xi}", c.name());
                    let r = (|| {
                        let j = SpectralGreen::new(c, b)?.jump_conditions(xi)?;
                        Ok(VerificationReport::new(name.clone(), 1.0, j.derivative_jump, 1e-6, Mode::Absolute))
                    })();
                    or_failed(name.clone(), 1.0, 1e-6, Mode::Absolute, r)
                }));
            }
        }
    }
    for xi in [0.5, 1.0, 3.0] {
        for y in [-1.0, 0.0, 0.7] {
            v.push(check(move || {
                let name = format!("airy pair wronskian xi={xi} y={y}");
                VerificationReport::new(name, -1.0, airy_pair_wronskian(xi, y), 1e-10, Mode::Absolute)
            }));
        }
    }
    v
}

fn constant_checks() -> Vec<Check> {
    let mut v = vec![
        check(|| VerificationReport::new("F- constant n=1", tricomi_minus_constant(), minus_constant(1), 1e-13, Mode::Relative)),
        check(|| {
            VerificationReport::new("F+ constant n=1", tricomi_plus_constant(), sharp_constants(1).0, 1e-13, Mode::Relative)
        }),
        check(|| {
            let g = gamma(2.0 / 3.0).expect("finite") * gamma(4.0 / 3.0).expect("finite");
            VerificationReport::new("gamma(2/3)gamma(4/3)", 2.0 * PI * 3f64.powf(-1.5), g, 1e-14, Mode::Relative)
        }),
        check(|| {
            let name = "A at n=2";
            let r = ab_constants(2).map(|c| VerificationReport::new(name, 2f64.cbrt() / PI, c.a, 1e-14, Mode::Relative));
            or_failed(name.into(), f64::NAN, 1e-14, Mode::Relative, r)
        }),
    ];
    for n in [2usize, 4, 6, 8] {
        v.push(check(move || {
            let name = format!("3A - 2B n={n}");
            // measured relative to 3A
            let r = ab_constants(n)
                .map(|c| VerificationReport::new(name.clone(), 0.0, (3.0 * c.a - 2.0 * c.b) / (3.0 * c.a).abs(), 1e-12, Mode::Absolute));
            or_failed(name.clone(), 0.0, 1e-12, Mode::Absolute, r)
        }));
        v.push(check(move || {
            let name = format!("B two forms n={n}");
            let r = ab_constants(n).map(|c| VerificationReport::new(name.clone(), c.b, c.b_reflected, 1e-13, Mode::Relative));
            or_failed(name.clone(), f64::NAN, 1e-13, Mode::Relative, r)
        }));
    }
    v
}

/// Bumps that avoid the pole but overlap the support of the solution.
pub fn homogeneous_bumps() -> Vec<(Solution, usize, BumpFunction)> {
    let b = |c: Vec<f64>, r: f64| BumpFunction::quartic(c, r).expect("valid");
    vec![
        (Solution::FMinus, 1, b(vec![0.0, -1.5], 1.0)),
        (Solution::FMinus, 2, b(vec![0.0, 0.0, -1.5], 1.0)),
        (Solution::FPlus, 1, b(vec![1.0, -0.6], 0.5)),
        (Solution::FPlus, 1, b(vec![0.5, 1.0], 0.8)),
        (Solution::FSharp, 2, b(vec![0.0, 0.0, -1.5], 1.0)),
    ]
}

fn pairing_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for (sol, n) in [(Solution::FMinus, 1), (Solution::FMinus, 2), (Solution::FPlus, 1), (Solution::FSharp, 2)] {
        v.push(check(move || delta_pairing(sol, n, &BumpFunction::standard(n), &PairingOptions::default())));
    }
    for (sol, n, phi) in homogeneous_bumps() {
        v.push(check(move || homogeneous_pairing(sol, n, &phi, &PairingOptions::default())));
    }
    v.push(check(|| {
        let phi = BumpFunction::quartic(vec![0.7, 0.0], 2.0).expect("valid");
        delta_pairing(Solution::FMinus, 1, &phi, &PairingOptions { shift: 0.7, ..Default::default() })
    }));
    for (sol, n) in [(Solution::FMinus, 1), (Solution::FPlus, 1), (Solution::FMinus, 2), (Solution::FSharp, 2)] {
        v.push(check(move || effort_check(sol, n)));
    }
    v
}

/// Reports the ratio of error estimates when the pairing effort is doubled;
/// passes when the estimate drops.
pub fn effort_check(sol: Solution, n: usize) -> VerificationReport {
    let name = format!("pairing effort {} n={n}", sol.name());
    let phi = BumpFunction::standard(n);
    let base = PairingOptions::default();
    let more = PairingOptions { quad: refined(&base.quad), ..base };
    match (pairing_integral(sol, n, &phi, &base), pairing_integral(sol, n, &phi, &more)) {
        (Ok(a), Ok(b)) => {
            let mut r = VerificationReport::new(name, 0.0, b.error / a.error, 1.0, Mode::Absolute);
            r.passed = b.error < a.error;
            r.with_diagnostics(quad_diag(b.subdivisions, b.evaluations, b.error))
        }
        (Err(e), _) | (_, Err(e)) => VerificationReport::failed(name, 0.0, 1.0, Mode::Absolute, &e.to_string()),
    }
}

/// `P F` by second-order central differences with step h in every variable.
pub fn pde_residual(sol: Solution, n: usize, p: &SpacetimePoint, h: f64) -> Result<f64> {
    let f = |dx: usize, s: f64| -> Result<f64> {
        let mut x = p.x().to_vec();
        let mut y = p.y();
        if dx < n {
            x[dx] += s;
        } else {
            y += s;
        }
        sol.eval(n, &SpacetimePoint::new(x, y)?)
    };
    let f0 = sol.eval(n, p)?;
    let mut lap = 0.0;
    for i in 0..n {
        lap += (f(i, h)? - 2.0 * f0 + f(i, -h)?) / (h * h);
    }
    let fyy = (f(n, h)? - 2.0 * f0 + f(n, -h)?) / (h * h);
    Ok(p.y() * lap + fyy)
}

/// Off-cone points in D₊ used for the residual sweep.
pub fn residual_points(n: usize) -> Vec<SpacetimePoint> {
    let spread = |r: f64, y: f64| {
        // spread |x| = r over all coordinates so every second difference counts
        let c = r / (n as f64).sqrt();
        SpacetimePoint::new(vec![c; n], y).expect("finite")
    };
    vec![spread(1.0, 0.5), spread(1.0, -0.5), spread(0.5, 1.0), spread(2.0, -1.0)]
}

/// Observed order log₂(R(h)/R(h/2)) for h = 1e−2 and 5e−3 (three steps).
pub fn residual_orders(sol: Solution, n: usize, p: &SpacetimePoint) -> Result<[f64; 2]> {
    let r: Vec<f64> = [1e-2, 5e-3, 2.5e-3].iter().map(|h| pde_residual(sol, n, p, *h).map(f64::abs)).collect::<Result<_>>()?;
    Ok([(r[0] / r[1]).log2(), (r[1] / r[2]).log2()])
}

/// Slack on the observed order. A second-order stencil shows order
/// 2 + O(h²), and the correction has either sign.
pub const ORDER_SLACK: f64 = 1e-3;

fn pde_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for n in 1..=3 {
        for (k, p) in residual_points(n).into_iter().enumerate() {
            v.push(check(move || {
                let name = format!("residual order f_plus n={n} point {k}");
                match residual_orders(Solution::FPlus, n, &p) {
                    Ok(o) => {
                        let worst = o[0].min(o[1]);
                        let mut r = VerificationReport::new(name, 2.0, worst, ORDER_SLACK, Mode::Absolute);
                        r.passed = worst >= 2.0 - ORDER_SLACK;
                        r
                    }
                    Err(e) => VerificationReport::failed(name, 2.0, ORDER_SLACK, Mode::Absolute, &e.to_string()),
                }
            }));
        }
    }
    v
}

fn dilation_checks() -> Vec<Check> {
    let mut v = Vec::new();
    for n in 1..=3 {
        for sol in [Solution::FMinus, Solution::FPlus] {
            for t in [0.5, 2.0] {
                v.push(check(move || {
                    let name = format!("dilation {} n={n} t={t}", sol.name());
                    let p = if sol == Solution::FMinus {
                        SpacetimePoint::on_ray(n, 0.3, -1.0)
                    } else {
                        SpacetimePoint::on_ray(n, 1.0, 0.5)
                    };
                    let r = p.and_then(|p| {
                        let lhs = sol.eval(n, &p.dilate(t))?;
                        let rhs = t.powf(homogeneity_degree(n)) * sol.eval(n, &p)?;
                        Ok(VerificationReport::new(name.clone(), rhs, lhs, 1e-10, Mode::Relative))
                    });
                    or_failed(name.clone(), f64::NAN, 1e-10, Mode::Relative, r)
                }));
            }
        }
    }
    v
}

/// Numeric inverse transform in x (n = 1) of the origin Ai/Bi construction,
/// `(1/π)∫₀^∞ cos(xξ) F̃(ξ, y) dξ`, for x > 0, y ≠ 0.
pub fn origin_ai_bi_numeric(x: f64, y: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) || y == 0.0 {
        return Err(Error::Parameter("needs x > 0 and y ≠ 0".into()));
    }
    let q = QuadSpec { abs_tol: 1e-11, rel_tol: 1e-11, max_subdivisions: 64 };
    // cos(xξ) = sqrt(πxξ/2) J_{-1/2}(xξ); F̃ = c·w^{1/3}·ξ^{-1/3}·C_{±1/3}(wξ)
    let pre = (PI * x / 2.0).sqrt() / PI;
    if y > 0.0 {
        let s = 2.0 / 3.0 * y.powf(1.5);
        let spec = TailSpec { lambda: -1.0 / 6.0, mu: -0.5, nu: THIRD, a: x, b: s, second: SecondKind::K };
        let r = integrate_bessel_tail(&spec, 0.0, &q)?;
        let c = pre * alpha() * s.cbrt();
        Ok((c * r.value, c.abs() * r.error))
    } else {
        let t = 2.0 / 3.0 * (-y).powf(1.5);
        let c = pre * beta() * t.cbrt();
        let mut total = (0.0, 0.0);
        for (nu, sign) in [(-THIRD, 1.0), (THIRD, -1.0)] {
            let w = WsIntegralSpec { lambda: -1.0 / 6.0, mu: -0.5, nu, a: x, b: t };
            let schedule = EpsSchedule::for_gap((x - t).abs());
            let ex = ws_limit_numeric(&w, &schedule, &q)?;
            total.0 += sign * c * ex.value;
            total.1 += c.abs() * ex.error;
        }
        Ok(total)
    }
}

/// Off-cone points for the combination identity.
pub const COMBINATION_POINTS: [(f64, f64); 8] =
    [(0.5, 0.5), (1.0, 1.0), (2.0, 0.3), (0.3, 1.5), (0.2, -1.0), (1.5, -1.0), (0.5, -2.0), (2.5, -1.5)];

fn combination_checks() -> Vec<Check> {
    COMBINATION_POINTS
        .iter()
        .map(|&(x, y)| {
            check(move || {
                let name = format!("combination x={x} y={y}");
                let r = (|| {
                    let want = f_origin_ai_bi(&SpacetimePoint::new(vec![x], y)?)?;
                    let (got, err) = origin_ai_bi_numeric(x, y)?;
                    Ok(VerificationReport::new(name.clone(), want, got, 1e-3, Mode::Relative)
                        .with_diagnostics(quad_diag(0, 0, err)))
                })();
                or_failed(name.clone(), f64::NAN, 1e-3, Mode::Relative, r)
            })
        })
        .collect()
}

fn sphere_checks() -> Vec<Check> {
    vec![
        check(|| or_failed("sphere n=2".into(), f64::NAN, 1e-10, Mode::Absolute, sphere_reduction_check(2, 1.0, 1.7))),
        check(|| or_failed("sphere n=3".into(), f64::NAN, 1e-8, Mode::Absolute, sphere_reduction_check(3, 1.0, 2.3))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_handling() {
        assert!(run_suite(&[], Execution::Sequential).unwrap().is_empty());
        assert!(run_suite(&["nope"], Execution::Sequential).is_err());
        let r = run_suite(&["wronskian"], Execution::Sequential).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0].target - 1.0 / PI).abs() < 1e-16 && r[0].passed);
        assert_eq!(resolve_selection(&["all"]).unwrap().len(), SUITES.len());
    }
}
