use std::f64::consts::{FRAC_PI_2, PI};

use super::gamma::{cos_pi, rgamma, sin_pi};
use crate::error::{Error, Result};

/// Real order ν of a Bessel function.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(pub f64);

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if nu.is_finite() {
            Ok(Order(nu))
        } else {
            Err(Error::Order(nu))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 == self.0.round()
    }
}

impl From<f64> for Order {
    fn from(nu: f64) -> Self {
        Order(nu)
    }
}

/// Controls the power series and the switch to large-argument asymptotics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPolicy {
    /// Series stop once a term falls below this fraction of the running sum.
    pub truncation_tol: f64,
    pub max_terms: usize,
    /// Arguments above this use the asymptotic expansions.
    pub switchover_radius: f64,
}

impl Default for SeriesPolicy {
    fn default() -> Self {
        SeriesPolicy { truncation_tol: 1e-17, max_terms: 500, switchover_radius: 12.0 }
    }
}

impl SeriesPolicy {
    pub fn validate(&self) -> Result<()> {
        if !(self.truncation_tol > 0.0) || self.max_terms < 8 || !(self.switchover_radius > 0.0) {
            return Err(Error::Parameter(format!("invalid series policy {self:?}")));
        }
        Ok(())
    }
}

// Argument above which exp(x) overflows.
const EXP_LIMIT: f64 = 709.0;
// Below this the defining I-difference is used for K.
const K_SMALL_ARG: f64 = 2.0;
// I and K carry an exponentially small e^{-2x} relative error in their
// asymptotic forms, so they switch no earlier than this.
const EXP_ASYMPTOTIC_MIN: f64 = 20.0;
// Orders closer than this to an integer use the integral representation for K.
const NEAR_INTEGER: f64 = 1e-3;

fn check_order(nu: f64) -> Result<()> {
    if nu.is_finite() {
        Ok(())
    } else {
        Err(Error::Order(nu))
    }
}

fn check_arg(x: f64, strict: bool) -> Result<()> {
    if !x.is_finite() || x < 0.0 || (strict && x == 0.0) {
        return Err(Error::Domain {
            arg: x,
            what: if strict { "argument must be positive" } else { "argument must be nonnegative" },
        });
    }
    Ok(())
}

struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    fn new() -> Self {
        Kahan { sum: 0.0, c: 0.0 }
    }
    fn add(&mut self, v: f64) {
        let y = v - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Internal evaluation routes, public so the seams between them can be tested.
pub mod methods {
    use super::*;

    /// `x^{-ν} J_ν(x)` (sign = -1) or `x^{-ν} I_ν(x)` (sign = +1) by the power
    /// series. Finite at `x = 0` for every ν.
    pub fn reduced_series(nu: f64, x: f64, sign: f64, policy: &SeriesPolicy) -> f64 {
        let q = sign * 0.25 * x * x;
        let mut term = rgamma(nu + 1.0) * (-nu * std::f64::consts::LN_2).exp();
        let mut acc = Kahan::new();
        let peak = 0.5 * x;
        for r in 0..policy.max_terms {
            acc.add(term);
            let rf = r as f64;
            let denom = (rf + 1.0) * (nu + rf + 1.0);
            if denom == 0.0 {
                // 1/Γ(ν+r+1) was zero for this r; restart from the next nonzero term
                term = q.powi(r as i32 + 1) * rgamma(nu + rf + 2.0) * rgamma(rf + 2.0)
                    * (-nu * std::f64::consts::LN_2).exp();
                continue;
            }
            term *= q / denom;
            if rf > peak && term.abs() <= policy.truncation_tol * acc.sum.abs() {
                acc.add(term);
                break;
            }
        }
        acc.sum
    }

    /// `x^p J_ν(x)` (sign -1) or `x^p I_ν(x)` (sign +1) from the series, `p + ν ≥ 0`.
    pub fn pow_times_series(p: f64, nu: f64, x: f64, sign: f64, policy: &SeriesPolicy) -> f64 {
        let e = p + nu;
        let pre = if e == 0.0 { 1.0 } else { x.powf(e) };
        pre * reduced_series(nu, x, sign, policy)
    }

    // Visit c_k = a_k(ν)/x^k in order, stopping just before the terms start growing.
    fn hankel_terms(nu: f64, x: f64, mut visit: impl FnMut(usize, f64)) {
        let mu = 4.0 * nu * nu;
        let mut c = 1.0;
        visit(0, c);
        for k in 1..200 {
            let j = (2 * k - 1) as f64;
            let next = c * (mu - j * j) / (k as f64 * 8.0 * x);
            if next == 0.0 || next.abs() >= c.abs() {
                break;
            }
            visit(k, next);
            c = next;
        }
    }

    /// Hankel asymptotic `(P, Q)` pair for J and N.
    pub fn hankel_pq(nu: f64, x: f64) -> (f64, f64) {
        let mut p = Kahan::new();
        let mut q = Kahan::new();
        hankel_terms(nu, x, |k, v| {
            let s = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            if k % 2 == 0 {
                p.add(s * v);
            } else {
                q.add(s * v);
            }
        });
        (p.sum, q.sum)
    }

    fn phase(nu: f64, x: f64) -> (f64, f64) {
        // cos and sin of x - (ν/2 + 1/4)π without losing the reduction of x
        let phi = 0.5 * nu + 0.25;
        let (sx, cx) = x.sin_cos();
        let (sp, cp) = (sin_pi(phi), cos_pi(phi));
        (cx * cp + sx * sp, sx * cp - cx * sp)
    }

    pub fn asymptotic_j(nu: f64, x: f64) -> f64 {
        let (p, q) = hankel_pq(nu, x);
        let (c, s) = phase(nu, x);
        (2.0 / (PI * x)).sqrt() * (p * c - q * s)
    }

    pub fn asymptotic_y(nu: f64, x: f64) -> f64 {
        let (p, q) = hankel_pq(nu, x);
        let (c, s) = phase(nu, x);
        (2.0 / (PI * x)).sqrt() * (p * s + q * c)
    }

    /// `e^{-x} I_ν(x)` from the large-argument expansion.
    pub fn asymptotic_i_scaled(nu: f64, x: f64) -> f64 {
        let mut acc = Kahan::new();
        hankel_terms(nu, x, |k, v| acc.add(if k % 2 == 0 { v } else { -v }));
        acc.sum / (2.0 * PI * x).sqrt()
    }

    /// `e^{x} K_ν(x)` from the large-argument expansion.
    pub fn asymptotic_k_scaled(nu: f64, x: f64) -> f64 {
        let mut acc = Kahan::new();
        hankel_terms(nu, x, |_, v| acc.add(v));
        (FRAC_PI_2 / x).sqrt() * acc.sum
    }

    /// `e^{x} K_ν(x)` by the trapezoid rule on `∫₀^∞ e^{-x(cosh t - 1)} cosh(νt) dt`.
    pub fn integral_k_scaled(nu: f64, x: f64) -> f64 {
        let h = 0.125_f64.min(0.5 / (1.0 + nu.abs()));
        let mut acc = Kahan::new();
        acc.add(0.5);
        let mut k = 1;
        loop {
            let t = k as f64 * h;
            // cosh t - 1 = 2 sinh²(t/2), kept accurate for small t
            let sh = (0.5 * t).sinh();
            let v = (-2.0 * x * sh * sh).exp() * (nu * t).cosh();
            acc.add(v);
            if v < 1e-18 * acc.sum || k > 100_000 {
                break;
            }
            k += 1;
        }
        h * acc.sum
    }

    /// K_ν(x) by the defining difference `π csc(νπ)/2 (I_{-ν} - I_ν)`.
    pub fn difference_k(nu: f64, x: f64, policy: &SeriesPolicy) -> f64 {
        let a = nu.abs();
        let im = pow_times_series(0.0, -a, x, 1.0, policy);
        let ip = pow_times_series(0.0, a, x, 1.0, policy);
        PI / (2.0 * sin_pi(a)) * (im - ip)
    }
}

use methods::*;

/// Whether the asymptotic route applies at `x`.
fn use_asymptotic(nu: f64, x: f64, policy: &SeriesPolicy) -> bool {
    x > policy.switchover_radius && x > 2.0 * nu * nu
}

/// `x^p J_ν(x)` for `p + ν ≥ 0` (finite at 0), shared by J and its scaled forms.
fn pow_times_j(p: f64, nu: f64, x: f64, policy: &SeriesPolicy) -> f64 {
    if use_asymptotic(nu, x, policy) {
        x.powf(p) * asymptotic_j(nu, x)
    } else {
        pow_times_series(p, nu, x, -1.0, policy)
    }
}

fn use_asymptotic_exp(nu: f64, x: f64, policy: &SeriesPolicy) -> bool {
    x > EXP_ASYMPTOTIC_MIN && use_asymptotic(nu, x, policy)
}

fn pow_times_i(p: f64, nu: f64, x: f64, policy: &SeriesPolicy) -> Result<f64> {
    if use_asymptotic_exp(nu, x, policy) {
        if x > EXP_LIMIT {
            return Err(Error::Domain { arg: x, what: "I overflows" });
        }
        Ok(x.powf(p) * x.exp() * asymptotic_i_scaled(nu, x))
    } else {
        Ok(pow_times_series(p, nu, x, 1.0, policy))
    }
}

/// J_ν(x) with the default policy.
pub fn bessel_j(nu: impl Into<Order>, x: f64) -> Result<f64> {
    bessel_j_with(nu, x, &SeriesPolicy::default())
}

pub fn bessel_j_with(nu: impl Into<Order>, x: f64, policy: &SeriesPolicy) -> Result<f64> {
    let nu = nu.into().0;
    check_order(nu)?;
    check_arg(x, false)?;
    if nu < 0.0 && nu == nu.round() {
        let s = if (nu as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(s * pow_times_j(0.0, -nu, x, policy));
    }
    if nu < 0.0 && x == 0.0 {
        return Err(Error::Domain { arg: x, what: "J of negative order is singular at 0" });
    }
    Ok(pow_times_j(0.0, nu, x, policy))
}

/// I_ν(x) with the default policy.
pub fn bessel_i(nu: impl Into<Order>, x: f64) -> Result<f64> {
    bessel_i_with(nu, x, &SeriesPolicy::default())
}

pub fn bessel_i_with(nu: impl Into<Order>, x: f64, policy: &SeriesPolicy) -> Result<f64> {
    let nu = nu.into().0;
    check_order(nu)?;
    check_arg(x, false)?;
    if nu < 0.0 && nu == nu.round() {
        return pow_times_i(0.0, -nu, x, policy);
    }
    if nu < 0.0 && x == 0.0 {
        return Err(Error::Domain { arg: x, what: "I of negative order is singular at 0" });
    }
    pow_times_i(0.0, nu, x, policy)
}

/// `e^x K_ν(x)`, choosing the route by argument size.
fn k_scaled(nu: f64, x: f64, policy: &SeriesPolicy) -> f64 {
    let a = nu.abs();
    if use_asymptotic_exp(a, x, policy) {
        asymptotic_k_scaled(a, x)
    } else if x <= K_SMALL_ARG && (a - a.round()).abs() > NEAR_INTEGER {
        x.exp() * difference_k(a, x, policy)
    } else {
        integral_k_scaled(a, x)
    }
}

/// K_ν(x), x > 0. Integer orders are accepted.
pub fn bessel_k(nu: impl Into<Order>, x: f64) -> Result<f64> {
    bessel_k_with(nu, x, &SeriesPolicy::default())
}

pub fn bessel_k_with(nu: impl Into<Order>, x: f64, policy: &SeriesPolicy) -> Result<f64> {
    let nu = nu.into().0;
    check_order(nu)?;
    check_arg(x, true)?;
    Ok((-x).exp() * k_scaled(nu, x, policy))
}

/// N_ν(x) = (J_ν cos νπ − J_{−ν}) / sin νπ, non-integer ν, x > 0.
pub fn neumann_n(nu: impl Into<Order>, x: f64) -> Result<f64> {
    let nu = nu.into().0;
    check_order(nu)?;
    if nu == nu.round() {
        return Err(Error::Order(nu));
    }
    check_arg(x, true)?;
    let p = SeriesPolicy::default();
    let jp = pow_times_j(0.0, nu, x, &p);
    let jm = pow_times_j(0.0, -nu, x, &p);
    Ok((jp * cos_pi(nu) - jm) / sin_pi(nu))
}

fn check_scaled_order(nu: f64) -> Result<()> {
    if !nu.is_finite() || nu.abs() >= 1.0 {
        return Err(Error::Order(nu));
    }
    Ok(())
}

/// `t^{|ν|} J_ν(t)` for |ν| < 1, finite at t = 0.
pub fn bessel_j_scaled(nu: impl Into<Order>, t: f64) -> Result<f64> {
    let nu = nu.into().0;
    check_scaled_order(nu)?;
    check_arg(t, false)?;
    Ok(pow_times_j(nu.abs(), nu, t, &SeriesPolicy::default()))
}

/// `s^{|ν|} I_ν(s)` for |ν| < 1, finite at s = 0.
pub fn bessel_i_scaled(nu: impl Into<Order>, s: f64) -> Result<f64> {
    let nu = nu.into().0;
    check_scaled_order(nu)?;
    check_arg(s, false)?;
    pow_times_i(nu.abs(), nu, s, &SeriesPolicy::default())
}

/// `s^{|ν|} K_ν(s)` for |ν| < 1; at s = 0 the limit `2^{|ν|-1} Γ(|ν|)`.
pub fn bessel_k_scaled(nu: impl Into<Order>, s: f64) -> Result<f64> {
    let nu = nu.into().0;
    check_scaled_order(nu)?;
    check_arg(s, false)?;
    let a = nu.abs();
    if a == 0.0 {
        return if s == 0.0 {
            Err(Error::Domain { arg: s, what: "K_0 is singular at 0" })
        } else {
            bessel_k(0.0, s)
        };
    }
    let p = SeriesPolicy::default();
    if s <= K_SMALL_ARG {
        let im = pow_times_series(a, -a, s, 1.0, &p);
        let ip = pow_times_series(a, a, s, 1.0, &p);
        return Ok(PI / (2.0 * sin_pi(a)) * (im - ip));
    }
    Ok(s.powf(a) * (-s).exp() * k_scaled(a, s, &p))
}

/// `w^{|ν|} N_ν(w)` for non-integer |ν| < 1, w > 0.
pub fn neumann_n_scaled(nu: impl Into<Order>, w: f64) -> Result<f64> {
    let nu = nu.into().0;
    check_scaled_order(nu)?;
    if nu == 0.0 {
        return Err(Error::Order(nu));
    }
    check_arg(w, true)?;
    let p = SeriesPolicy::default();
    let a = nu.abs();
    let jp = pow_times_j(a, nu, w, &p);
    let jm = pow_times_j(a, -nu, w, &p);
    Ok((jp * cos_pi(nu) - jm) / sin_pi(nu))
}
