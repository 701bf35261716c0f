//! Test functions and the operator applied to them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Something P can be applied to analytically. Points are (x₁, …, xₙ, y).
pub trait TestFunction {
    fn value(&self, p: &[f64]) -> f64;
    /// (Δₓφ, φ_yy) at p.
    fn second_derivatives(&self, p: &[f64]) -> (f64, f64);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Profile {
    /// (1 − |u|²)⁴ on |u| < 1; C³ across the boundary.
    Quartic,
}

/// `profile(|p − center| / radius)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BumpFunction {
    pub center: Vec<f64>,
    pub radius: f64,
    pub profile: Profile,
}

impl BumpFunction {
    /// Quartic bump; `center` has n + 1 entries, y last.
    pub fn quartic(center: Vec<f64>, radius: f64) -> Result<Self> {
        if center.len() < 2 || center.iter().any(|c| !c.is_finite()) {
            return Err(Error::Parameter("bump center needs n ≥ 1 spatial coordinates and y".into()));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Parameter(format!("bump radius must be positive, got {radius}")));
        }
        Ok(BumpFunction { center, radius, profile: Profile::Quartic })
    }

    /// Radius 2 at the origin of ℝⁿ × ℝ.
    pub fn standard(n: usize) -> Self {
        Self::quartic(vec![0.0; n + 1], 2.0).expect("valid")
    }

    pub fn dim(&self) -> usize {
        self.center.len() - 1
    }

    pub fn center_y(&self) -> f64 {
        self.center[self.dim()]
    }

    /// Largest value, attained at the center.
    pub fn sup_norm(&self) -> f64 {
        1.0
    }

    fn scaled_offset(&self, p: &[f64]) -> (Vec<f64>, f64) {
        assert_eq!(p.len(), self.center.len(), "point and bump dimensions differ");
        let u: Vec<f64> = p.iter().zip(&self.center).map(|(a, c)| (a - c) / self.radius).collect();
        let s = u.iter().map(|v| v * v).sum();
        (u, s)
    }
}

impl TestFunction for BumpFunction {
    fn value(&self, p: &[f64]) -> f64 {
        let (_, s) = self.scaled_offset(p);
        if s >= 1.0 {
            0.0
        } else {
            (1.0 - s).powi(4)
        }
    }

    fn second_derivatives(&self, p: &[f64]) -> (f64, f64) {
        let (u, s) = self.scaled_offset(p);
        if s >= 1.0 {
            return (0.0, 0.0);
        }
        // g(s) = (1−s)⁴;  ∂ᵢ∂ᵢφ = (4uᵢ²g″ + 2g′)/R²
        let g1 = -4.0 * (1.0 - s).powi(3);
        let g2 = 12.0 * (1.0 - s).powi(2);
        let r2 = self.radius * self.radius;
        let d2 = |ui: f64| (4.0 * ui * ui * g2 + 2.0 * g1) / r2;
        let n = self.dim();
        (u[..n].iter().map(|&ui| d2(ui)).sum(), d2(u[n]))
    }
}

/// Σ cᵢφᵢ.
pub struct LinearCombination<'a> {
    pub terms: Vec<(f64, &'a dyn TestFunction)>,
}

impl TestFunction for LinearCombination<'_> {
    fn value(&self, p: &[f64]) -> f64 {
        self.terms.iter().map(|(c, f)| c * f.value(p)).sum()
    }

    fn second_derivatives(&self, p: &[f64]) -> (f64, f64) {
        self.terms.iter().fold((0.0, 0.0), |(a, b), (c, f)| {
            let (dx, dy) = f.second_derivatives(p);
            (a + c * dx, b + c * dy)
        })
    }
}

/// (yΔφ + φ_yy)(p).
pub fn apply_tricomi(phi: &dyn TestFunction, p: &[f64]) -> f64 {
    let y = p[p.len() - 1];
    let (lap, dyy) = phi.second_derivatives(p);
    y * lap + dyy
}
