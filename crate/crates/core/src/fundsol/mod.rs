//! Fundamental solutions of `P = yΔ + ∂²/∂y²` with pole at the origin.
//!
//! Everything is a function of the discriminant `Δ = 9|x|² + 4y³`: the
//! characteristic cone is Δ = 0, D₊ is Δ > 0 and D₋ (inside the cone,
//! below the axis) is Δ < 0. All solutions are multiples of |Δ|^{1/3−n/2}
//! on each region.

mod spectral;

pub use spectral::{
    airy_pair_wronskian, alpha, beta, delta_coef, gamma_coef, minus_coef, Construction, JumpConditions, Side,
    SpectralGreen, SubstitutedTime,
};

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{cos_pi, gamma, rgamma};

/// A point (x, y) of ℝⁿ × ℝ with its discriminant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpacetimePoint {
    x: Vec<f64>,
    y: f64,
    discriminant: f64,
}

impl SpacetimePoint {
    pub fn new(x: Vec<f64>, y: f64) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::Parameter("spatial dimension must be at least 1".into()));
        }
        if x.iter().any(|v| !v.is_finite()) || !y.is_finite() {
            return Err(Error::Parameter("point coordinates must be finite".into()));
        }
        let r2: f64 = x.iter().map(|v| v * v).sum();
        Ok(SpacetimePoint { x, y, discriminant: 9.0 * r2 + 4.0 * y * y * y })
    }

    /// The point (r e₁, y) in dimension n.
    pub fn on_ray(n: usize, r: f64, y: f64) -> Result<Self> {
        let mut x = vec![0.0; n];
        if n > 0 {
            x[0] = r;
        }
        Self::new(x, y)
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn x_norm(&self) -> f64 {
        self.x.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn discriminant(&self) -> f64 {
        self.discriminant
    }

    /// Image under d_t(x, y) = (t³x, t²y).
    pub fn dilate(&self, t: f64) -> Self {
        Self::new(self.x.iter().map(|v| t * t * t * v).collect(), t * t * self.y).expect("finite")
    }

    /// Size of the terms making up Δ, for relative tolerances.
    pub fn discriminant_scale(&self) -> f64 {
        9.0 * self.x_norm().powi(2) + 4.0 * self.y.abs().powi(3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Region {
    DPlus,
    DMinus,
    Cone,
}

impl Region {
    pub fn label(self) -> &'static str {
        match self {
            Region::DPlus => "DPlus",
            Region::DMinus => "DMinus",
            Region::Cone => "Cone",
        }
    }
}

/// Default cone tolerance: 1e−9·(1 + scale of Δ at p).
pub fn default_cone_tol(p: &SpacetimePoint) -> f64 {
    1e-9 * (1.0 + p.discriminant_scale())
}

pub fn classify(p: &SpacetimePoint, cone_tol: f64) -> Region {
    let d = p.discriminant();
    if d > cone_tol {
        Region::DPlus
    } else if d < -cone_tol {
        Region::DMinus
    } else {
        Region::Cone
    }
}

/// Exponent 1/3 − n/2 of |Δ|.
pub fn exponent(n: usize) -> f64 {
    1.0 / 3.0 - n as f64 / 2.0
}

/// Degree 2 − 3n: F(t³x, t²y) = t^{2−3n} F(x, y).
pub fn homogeneity_degree(n: usize) -> f64 {
    6.0 * exponent(n)
}

/// 3ⁿΓ(4/3) / (2^{2/3}π^{n/2}Γ(4/3 − n/2)), the coefficient of F₋.
pub fn minus_constant(n: usize) -> f64 {
    let h = n as f64 / 2.0;
    3f64.powi(n as i32) * gamma(4.0 / 3.0).expect("finite") * rgamma(4.0 / 3.0 - h) / (4f64.cbrt() * PI.powf(h))
}

/// Coefficients of F♯ on D₊ and on D₋.
pub fn sharp_constants(n: usize) -> (f64, f64) {
    let h = n as f64 / 2.0;
    let common = 3f64.powi(n as i32 - 2) * PI.powf(-h) * gamma(h - 1.0 / 3.0).expect("finite")
        / gamma(2.0 / 3.0).expect("finite");
    (-common / 4f64.cbrt(), -cos_pi(h) * 2f64.cbrt() * common)
}

/// The n = 1 coefficient of F₊ as first written for the Tricomi operator:
/// −Γ(1/6)/(3·2^{2/3}π^{1/2}Γ(2/3)).
pub fn tricomi_plus_constant() -> f64 {
    -gamma(1.0 / 6.0).expect("finite") / (3.0 * 4f64.cbrt() * PI.sqrt() * gamma(2.0 / 3.0).expect("finite"))
}

/// The n = 1 coefficient of F₋: 3Γ(4/3)/(2^{2/3}π^{1/2}Γ(5/6)).
pub fn tricomi_minus_constant() -> f64 {
    3.0 * gamma(4.0 / 3.0).expect("finite") / (4f64.cbrt() * PI.sqrt() * gamma(5.0 / 6.0).expect("finite"))
}

/// The constants A (F♯ on D₋) and B (F₋) for n = 2k; B is returned in
/// both printed forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AbConstants {
    pub a: f64,
    pub b: f64,
    pub b_reflected: f64,
}

pub fn ab_constants(n: usize) -> Result<AbConstants> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Parameter(format!("A and B are defined for even n, got {n}")));
    }
    let k = (n / 2) as i32;
    let kf = k as f64;
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 }; // (−1)^{k+1}
    let g23 = gamma(2.0 / 3.0)?;
    let gk = gamma(kf - 1.0 / 3.0)?;
    let a = sign * 2f64.cbrt() * 3f64.powi(2 * (k - 1)) / PI.powi(k) * gk / g23;
    let b = 3f64.powi(2 * k) / (4f64.cbrt() * PI.powi(k)) * gamma(4.0 / 3.0)? * rgamma(4.0 / 3.0 - kf);
    let b_reflected = sign * 3f64.powi(2 * k - 1) / (4f64.cbrt() * PI.powi(k)) * gk / g23;
    Ok(AbConstants { a, b, b_reflected })
}

fn region_of(n: usize, p: &SpacetimePoint) -> Result<Region> {
    if p.dim() != n {
        return Err(Error::Parameter(format!("point has dimension {}, expected {n}", p.dim())));
    }
    match classify(p, default_cone_tol(p)) {
        Region::Cone => Err(Error::SingularLocus),
        r => Ok(r),
    }
}

/// F₋: supported in the closure of D₋.
pub fn f_minus(n: usize, p: &SpacetimePoint) -> Result<f64> {
    Ok(match region_of(n, p)? {
        Region::DMinus => minus_constant(n) * p.discriminant().abs().powf(exponent(n)),
        _ => 0.0,
    })
}

/// F♯: the transform of the K/N construction; for even n nonzero on both sides.
pub fn f_sharp(n: usize, p: &SpacetimePoint) -> Result<f64> {
    let (cp, cm) = sharp_constants(n);
    let d = p.discriminant();
    Ok(match region_of(n, p)? {
        Region::DPlus => cp * d.powf(exponent(n)),
        _ => cm * d.abs().powf(exponent(n)),
    })
}

/// F₊: F♯ for odd n; 3F♯ − 2F₋ for even n, whose D₋ parts cancel.
pub fn f_plus(n: usize, p: &SpacetimePoint) -> Result<f64> {
    if n % 2 == 1 {
        f_sharp(n, p)
    } else {
        Ok(3.0 * f_sharp(n, p)? - 2.0 * f_minus(n, p)?)
    }
}

/// (3/2)F₊ − (1/2)F₋ in dimension 1, the transform of the Ai/Bi construction.
pub fn f_origin_ai_bi(p: &SpacetimePoint) -> Result<f64> {
    Ok(1.5 * f_plus(1, p)? - 0.5 * f_minus(1, p)?)
}

/// Selector used by the CLI and the verification harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solution {
    FMinus,
    FPlus,
    FSharp,
}

impl Solution {
    pub fn eval(self, n: usize, p: &SpacetimePoint) -> Result<f64> {
        match self {
            Solution::FMinus => f_minus(n, p),
            Solution::FPlus => f_plus(n, p),
            Solution::FSharp => f_sharp(n, p),
        }
    }

    /// Coefficients (on D₊, on D₋) of |Δ|^{1/3−n/2}.
    pub fn coefficients(self, n: usize) -> (f64, f64) {
        match self {
            Solution::FMinus => (0.0, minus_constant(n)),
            Solution::FSharp => sharp_constants(n),
            Solution::FPlus if n % 2 == 1 => sharp_constants(n),
            Solution::FPlus => {
                let (cp, cm) = sharp_constants(n);
                (3.0 * cp, 3.0 * cm - 2.0 * minus_constant(n))
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Solution::FMinus => "f_minus",
            Solution::FPlus => "f_plus",
            Solution::FSharp => "f_sharp",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let p = SpacetimePoint::new(vec![0.0, 0.0], -1.0).unwrap();
        assert_eq!(classify(&p, 1e-12), Region::DMinus);
        let p = SpacetimePoint::new(vec![2.0 / 3.0], -1.0).unwrap();
        assert_eq!(classify(&p, default_cone_tol(&p)), Region::Cone);
        let p = SpacetimePoint::new(vec![0.0; 3], 1.0).unwrap();
        assert_eq!(classify(&p, 0.0), Region::DPlus);
    }

    #[test]
    fn cone_is_an_error() {
        let p = SpacetimePoint::new(vec![2.0 / 3.0], -1.0).unwrap();
        assert!(matches!(f_minus(1, &p), Err(Error::SingularLocus)));
        assert!(f_plus(1, &SpacetimePoint::new(vec![0.0, 0.0], 1.0).unwrap()).is_err());
    }
}
