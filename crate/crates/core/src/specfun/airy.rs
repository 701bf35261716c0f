//! Airy functions on the real line, built from Bessel functions of order
//! ±1/3 and ±2/3 in the substituted variable ζ = (2/3)|z|^{3/2}.

use super::bessel::{bessel_i_scaled, bessel_j_scaled, bessel_k};
use super::gamma::gamma;
use std::f64::consts::PI;

const THIRD: f64 = 1.0 / 3.0;
const TWO_THIRDS: f64 = 2.0 / 3.0;
// Above this ζ the positive-axis Ai, Ai' use K directly instead of an I difference.
const K_ROUTE: f64 = 2.0;

fn zeta(z: f64) -> f64 {
    TWO_THIRDS * z.abs().powf(1.5)
}

fn g23() -> f64 {
    gamma(TWO_THIRDS).expect("finite")
}

fn g43() -> f64 {
    gamma(4.0 * THIRD).expect("finite")
}

fn sj(nu: f64, t: f64) -> f64 {
    bessel_j_scaled(nu, t).expect("scaled J is total on t >= 0")
}

fn si(nu: f64, s: f64) -> f64 {
    // overflow only for z beyond ~104, where Bi itself overflows
    bessel_i_scaled(nu, s).unwrap_or(f64::INFINITY)
}

/// Ai(0) = 3^{-2/3}/Γ(2/3).
pub fn airy_ai_zero() -> f64 {
    3f64.powf(-TWO_THIRDS) / g23()
}

/// Ai'(0) = -3^{-4/3}/Γ(4/3).
pub fn airy_ai_prime_zero() -> f64 {
    -(3f64.powf(-4.0 * THIRD)) / g43()
}

/// Bi(0) = 3^{-1/6}/Γ(2/3).
pub fn airy_bi_zero() -> f64 {
    3f64.powf(-1.0 / 6.0) / g23()
}

/// Bi'(0) = 3^{-5/6}/Γ(4/3).
pub fn airy_bi_prime_zero() -> f64 {
    3f64.powf(-5.0 / 6.0) / g43()
}

pub fn airy_ai(z: f64) -> f64 {
    if z == 0.0 {
        return airy_ai_zero();
    }
    let s = zeta(z);
    if z > 0.0 {
        if s <= K_ROUTE {
            (si(-THIRD, s) - si(THIRD, s)) / (3f64.powf(TWO_THIRDS) * 2f64.powf(THIRD))
        } else {
            (z / 3.0).sqrt() / PI * bessel_k(THIRD, s).expect("s > 0")
        }
    } else {
        1.5f64.powf(THIRD) / 3.0 * (sj(-THIRD, s) + sj(THIRD, s))
    }
}

pub fn airy_bi(z: f64) -> f64 {
    if z == 0.0 {
        return airy_bi_zero();
    }
    let s = zeta(z);
    if z > 0.0 {
        (si(-THIRD, s) + si(THIRD, s)) / (2f64.powf(THIRD) * 3f64.powf(1.0 / 6.0))
    } else {
        1.5f64.powf(THIRD) / 3f64.sqrt() * (sj(-THIRD, s) - sj(THIRD, s))
    }
}

pub fn airy_ai_prime(z: f64) -> f64 {
    if z == 0.0 {
        return airy_ai_prime_zero();
    }
    let s = zeta(z);
    if z > 0.0 {
        if s <= K_ROUTE {
            -1.5f64.powf(TWO_THIRDS) / 3.0 * (si(-TWO_THIRDS, s) - si(TWO_THIRDS, s))
        } else {
            -z / (PI * 3f64.sqrt()) * bessel_k(TWO_THIRDS, s).expect("s > 0")
        }
    } else {
        1.5f64.powf(TWO_THIRDS) / 3.0 * (sj(TWO_THIRDS, s) - sj(-TWO_THIRDS, s))
    }
}

pub fn airy_bi_prime(z: f64) -> f64 {
    if z == 0.0 {
        return airy_bi_prime_zero();
    }
    let s = zeta(z);
    let c = 1.5f64.powf(TWO_THIRDS) / 3f64.sqrt();
    if z > 0.0 {
        c * (si(-TWO_THIRDS, s) + si(TWO_THIRDS, s))
    } else {
        c * (sj(-TWO_THIRDS, s) + sj(TWO_THIRDS, s))
    }
}

/// Ai(z)Bi'(z) − Ai'(z)Bi(z), identically 1/π.
pub fn airy_wronskian(z: f64) -> f64 {
    airy_ai(z) * airy_bi_prime(z) - airy_ai_prime(z) * airy_bi(z)
}
