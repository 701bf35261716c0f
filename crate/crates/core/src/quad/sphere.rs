//! Surface integrals over the unit sphere S^{n−1} for n = 2, 3.

use std::f64::consts::PI;

use super::gauss_legendre;
use crate::error::{Error, Result};

const CIRCLE_POINTS: usize = 64;
const POLAR_POINTS: usize = 32;
const AZIMUTH_POINTS: usize = 64;

/// `∫_{S^{n−1}} g(ω) dω`. The circle uses the periodic trapezoid rule; the
/// 2-sphere a Gauss–Legendre rule in cos θ times the trapezoid rule in φ.
pub fn sphere_integral<G: Fn(&[f64]) -> f64>(n: usize, g: G) -> Result<f64> {
    match n {
        2 => {
            let h = 2.0 * PI / CIRCLE_POINTS as f64;
            Ok(h * (0..CIRCLE_POINTS)
                .map(|k| {
                    let th = k as f64 * h;
                    g(&[th.cos(), th.sin()])
                })
                .sum::<f64>())
        }
        3 => {
            let (x, w) = gauss_legendre(POLAR_POINTS);
            let h = 2.0 * PI / AZIMUTH_POINTS as f64;
            let mut s = 0.0;
            for (c, wc) in x.iter().zip(&w) {
                let r = (1.0 - c * c).sqrt();
                let ring: f64 = (0..AZIMUTH_POINTS)
                    .map(|k| {
                        let ph = k as f64 * h;
                        g(&[r * ph.cos(), r * ph.sin(), *c])
                    })
                    .sum();
                s += wc * h * ring;
            }
            Ok(s)
        }
        _ => Err(Error::Unsupported(format!("sphere integral in dimension {n}"))),
    }
}
