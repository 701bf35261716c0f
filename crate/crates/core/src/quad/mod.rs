//! Quadrature engines: tanh-sinh for endpoint singularities, adaptive
//! Gauss–Kronrod for smooth panels, a panelled engine for semi-infinite
//! Bessel-product integrals, and polynomial extrapolation in the damping ε.

pub mod de;
pub mod extrapolate;
pub mod gk;
pub mod sphere;
pub mod tail;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use de::{integrate, integrate_offsets};
pub use extrapolate::{extrapolate_eps_limit, extrapolate_eps_limit_with_noise, wynn_epsilon, EpsSchedule, Extrapolation};
pub use gk::{gauss_legendre, integrate_smooth};
pub use sphere::sphere_integral;
pub use tail::{integrate_bessel_tail, integrate_bessel_tail_ladder, integrate_decaying, SecondKind, TailSpec};

/// Tolerances and effort limit for an integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec { abs_tol: 1e-12, rel_tol: 1e-12, max_subdivisions: 64 }
    }
}

impl QuadSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let s = QuadSpec { abs_tol, rel_tol, max_subdivisions };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) || self.max_subdivisions < 1 {
            return Err(Error::Parameter(format!("invalid quadrature spec {self:?}")));
        }
        Ok(())
    }

    pub(crate) fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Value, error estimate and effort of an integration.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
    pub subdivisions: usize,
}

impl std::ops::Add for QuadResult {
    type Output = QuadResult;
    fn add(self, o: QuadResult) -> QuadResult {
        QuadResult {
            value: self.value + o.value,
            error: self.error + o.error,
            evaluations: self.evaluations + o.evaluations,
            subdivisions: self.subdivisions + o.subdivisions,
        }
    }
}

impl std::ops::Mul<f64> for QuadResult {
    type Output = QuadResult;
    fn mul(self, s: f64) -> QuadResult {
        QuadResult { value: self.value * s, error: self.error * s.abs(), ..self }
    }
}
