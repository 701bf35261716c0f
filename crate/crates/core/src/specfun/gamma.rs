use std::f64::consts::PI;

use crate::error::{Error, Result};

// Stirling series coefficients B_{2k} / (2k(2k-1)), k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];
// Arguments below this are shifted up by the recurrence before Stirling is applied.
const STIRLING_MIN: f64 = 16.0;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

/// Largest argument whose Gamma value is finite in double precision.
pub const GAMMA_MAX_ARG: f64 = 171.624_376_956_302_7;

/// `sin(πx)` with exact zeros at the integers and exact reduction.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = x - 2.0 * (x / 2.0).round(); // r in [-1, 1]
    let (s, a) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    let v = if a <= 0.25 {
        (PI * a).sin()
    } else if a <= 0.75 {
        (PI * (0.5 - a)).cos()
    } else {
        (PI * (1.0 - a)).sin()
    };
    s * v
}

/// `cos(πx)` with exact zeros at the half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn stirling_tail(x: f64) -> f64 {
    let r = 1.0 / (x * x);
    let mut acc = 0.0;
    for c in STIRLING.iter().rev() {
        acc = acc * r + c;
    }
    acc / x
}

// Γ(x) for x >= STIRLING_MIN, split so the power does not overflow early.
fn gamma_stirling(x: f64) -> f64 {
    let half = x.powf(0.5 * (x - 0.5)) * (-0.5 * x).exp();
    SQRT_2PI * half * half * stirling_tail(x).exp()
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

// Valid for x >= 0.5. Below STIRLING_MIN the shift x + n and the product
// x(x+1)...(x+n-1) are carried in double-double, so no fractional bits of x
// are lost before Stirling is applied.
fn gamma_positive(x: f64) -> f64 {
    if x >= STIRLING_MIN {
        return gamma_stirling(x);
    }
    let (mut p_hi, mut p_lo) = (x, 0.0);
    let mut k = 1.0;
    let (mut y_hi, mut y_lo) = two_sum(x, k);
    while y_hi < STIRLING_MIN {
        let hi = p_hi * y_hi;
        let lo = p_hi.mul_add(y_hi, -hi) + p_hi * y_lo + p_lo * y_hi;
        let (h, l) = two_sum(hi, lo);
        p_hi = h;
        p_lo = l;
        k += 1.0;
        let t = two_sum(x, k);
        y_hi = t.0;
        y_lo = t.1;
    }
    // Γ(y_hi + y_lo) ≈ Γ(y_hi)(1 + ψ(y_hi) y_lo)
    let psi = y_hi.ln() - 0.5 / y_hi - 1.0 / (12.0 * y_hi * y_hi);
    let g = gamma_stirling(y_hi) * (1.0 + psi * y_lo);
    g / p_hi * (1.0 - p_lo / p_hi)
}

/// Γ(x). Negative non-integer arguments go through the reflection formula.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain { arg: x, what: "gamma needs a finite argument" });
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::Domain { arg: x, what: "gamma overflows" });
    }
    if x == x.floor() && x <= 23.0 {
        let mut f = 1.0;
        let mut k = 2.0;
        while k < x {
            f *= k;
            k += 1.0;
        }
        return Ok(f);
    }
    if x < 0.5 {
        let g = gamma_positive(1.0 - x);
        Ok(PI / (sin_pi(x) * g))
    } else {
        Ok(gamma_positive(x))
    }
}

/// 1/Γ(x), total: zero at the poles, zero for large positive arguments.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x > GAMMA_MAX_ARG {
        let (lg, _) = ln_gamma(x);
        return (-lg).exp();
    }
    if x < 0.5 {
        if 1.0 - x > GAMMA_MAX_ARG {
            let (lg, _) = ln_gamma(1.0 - x);
            return sin_pi(x) / PI * lg.exp();
        }
        return sin_pi(x) * gamma_positive(1.0 - x) / PI;
    }
    match gamma(x) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}

/// `(ln|Γ(x)|, sign Γ(x))`. At the poles returns `(+∞, 1)`.
pub fn ln_gamma(x: f64) -> (f64, f64) {
    if is_nonpositive_integer(x) {
        return (f64::INFINITY, 1.0);
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let (lg, _) = ln_gamma(1.0 - x);
        return ((PI / s.abs()).ln() - lg, s.signum());
    }
    if x < STIRLING_MIN {
        return (gamma_positive(x).ln(), 1.0);
    }
    ((x - 0.5) * x.ln() - x + LN_SQRT_2PI + stirling_tail(x), 1.0)
}
