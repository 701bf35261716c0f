//! Fundamental solutions of the generalized Tricomi operator
//! `P = y Δ + ∂²/∂y²` on `ℝⁿ × ℝ`, together with the special functions,
//! hypergeometric identities and quadrature engines needed to evaluate and
//! check them.
//!
//! Fourier convention throughout: the inverse transform is
//! `(2π)^{-n} ∫ e^{i⟨x,ξ⟩} f(ξ) dξ`.

pub mod error;
pub mod exec;
pub mod fundsol;
pub mod hypergeom;
pub mod quad;
pub mod radialft;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
