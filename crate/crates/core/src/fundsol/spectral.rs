//! Partial Fourier transforms in x of the fundamental solutions: Green's
//! functions of `F̃_yy − y|ξ|² F̃ = δ(y − b)` for fixed |ξ|.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::{
    airy_ai, airy_ai_prime, airy_ai_zero, airy_bi, airy_bi_prime, airy_bi_zero, bessel_j_scaled, bessel_k_scaled, gamma, neumann_n_scaled,
};

const THIRD: f64 = 1.0 / 3.0;

/// `s = (2/3) y^{3/2}` above the axis and `t = (2/3)(−y)^{3/2}` below it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubstitutedTime {
    pub s: f64,
    pub t: f64,
}

impl SubstitutedTime {
    pub fn from_y(y: f64) -> Self {
        if y >= 0.0 {
            SubstitutedTime { s: 2.0 / 3.0 * y.powf(1.5), t: 0.0 }
        } else {
            SubstitutedTime { s: 0.0, t: 2.0 / 3.0 * (-y).powf(1.5) }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// `−π|ξ|^{-2/3} Bi(|ξ|^{2/3}b) Ai(|ξ|^{2/3}y)` above b, Ai ↔ Bi below.
    AiryTwoSided,
    /// b = 0: α·(s/|ξ|)^{1/3}K_{1/3}(s|ξ|) above, β·(t/|ξ|)^{1/3}[J_{-1/3} − J_{1/3}](t|ξ|) below.
    OriginAiBi,
    /// b = 0: zero above, c·(t/|ξ|)^{1/3}J_{1/3}(t|ξ|) below.
    MinusOnly,
    /// b = 0: γ·(s/|ξ|)^{1/3}K_{1/3}(s|ξ|) above, δ·(t/|ξ|)^{1/3}N_{-1/3}(t|ξ|) below.
    PlusKN,
}

impl Construction {
    pub const ALL: [Construction; 4] =
        [Construction::AiryTwoSided, Construction::OriginAiBi, Construction::MinusOnly, Construction::PlusKN];

    pub fn name(self) -> &'static str {
        match self {
            Construction::AiryTwoSided => "airy-two-sided",
            Construction::OriginAiBi => "origin-ai-bi",
            Construction::MinusOnly => "minus-only",
            Construction::PlusKN => "plus-k-n",
        }
    }
}

/// Which branch to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Above,
    Below,
}

/// α = −1/(2^{1/3}3^{1/3}Γ(2/3)).
pub fn alpha() -> f64 {
    -1.0 / (2f64.cbrt() * 3f64.cbrt() * gamma23())
}

/// β = −π/(2^{1/3}3^{5/6}Γ(2/3)).
pub fn beta() -> f64 {
    -PI / (2f64.cbrt() * 3f64.powf(5.0 / 6.0) * gamma23())
}

/// γ = −2^{2/3}/(3^{4/3}Γ(2/3)).
pub fn gamma_coef() -> f64 {
    -(4f64.cbrt()) / (3f64.powf(4.0 / 3.0) * gamma23())
}

/// δ = 2π/(2^{1/3}3^{4/3}Γ(2/3)).
pub fn delta_coef() -> f64 {
    2.0 * PI / (2f64.cbrt() * 3f64.powf(4.0 / 3.0) * gamma23())
}

/// 3^{2/3}Γ(4/3)/2^{1/3}, the coefficient of the hyperbolic-only construction.
pub fn minus_coef() -> f64 {
    9f64.cbrt() * gamma(4.0 / 3.0).expect("finite") / 2f64.cbrt()
}

fn gamma23() -> f64 {
    gamma(2.0 / 3.0).expect("finite")
}

/// One-sided values at y = b and the jump of the y-derivative there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JumpConditions {
    pub above: f64,
    pub below: f64,
    pub derivative_jump: f64,
}

/// Wronskian `U₁U₂′ − U₁′U₂` at y of U₁ = √π|ξ|^{-1/3}Ai(|ξ|^{2/3}y),
/// U₂ = −√π|ξ|^{-1/3}Bi(|ξ|^{2/3}y), with analytic Airy derivatives.
pub fn airy_pair_wronskian(xi_norm: f64, y: f64) -> f64 {
    let z = xi_norm.powf(2.0 / 3.0) * y;
    let c = PI.sqrt() * xi_norm.powf(-1.0 / 3.0);
    let dz = xi_norm.powf(2.0 / 3.0);
    let (u1, u1p) = (c * airy_ai(z), c * dz * airy_ai_prime(z));
    let (u2, u2p) = (-c * airy_bi(z), -c * dz * airy_bi_prime(z));
    u1 * u2p - u1p * u2
}

/// One of the four spectral Green's functions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralGreen {
    pub construction: Construction,
    pub b_offset: f64,
    /// Named coefficients of the construction.
    pub constants: Vec<(String, f64)>,
}

impl SpectralGreen {
    pub fn new(construction: Construction, b_offset: f64) -> Result<Self> {
        if !b_offset.is_finite() || (construction != Construction::AiryTwoSided && b_offset != 0.0) {
            return Err(Error::Parameter(format!("{} is defined for b = 0 only", construction.name())));
        }
        let constants = match construction {
            Construction::AiryTwoSided => vec![("minus_pi".to_string(), -PI)],
            Construction::OriginAiBi => vec![("alpha".into(), alpha()), ("beta".into(), beta())],
            Construction::MinusOnly => vec![("c".into(), minus_coef())],
            Construction::PlusKN => vec![("gamma".into(), gamma_coef()), ("delta".into(), delta_coef())],
        };
        Ok(SpectralGreen { construction, b_offset, constants })
    }

    /// Value at (|ξ|, y); at y = b the two branches agree and the upper one is used.
    pub fn value(&self, xi_norm: f64, y: f64) -> Result<f64> {
        let side = if y >= self.b_offset { Side::Above } else { Side::Below };
        self.value_one_sided(xi_norm, y, side)
    }

    /// The branch formula for `side`, evaluated wherever it is defined; lets
    /// one-sided limits at y = b be taken without crossing.
    pub fn value_one_sided(&self, xi_norm: f64, y: f64, side: Side) -> Result<f64> {
        if !(xi_norm > 0.0 && xi_norm.is_finite()) {
            return Err(Error::Domain { arg: xi_norm, what: "|ξ| must be positive" });
        }
        let k23 = xi_norm.powf(-2.0 / 3.0);
        if self.construction == Construction::AiryTwoSided {
            let zb = xi_norm.powf(2.0 / 3.0) * self.b_offset;
            let z = xi_norm.powf(2.0 / 3.0) * y;
            return Ok(match side {
                Side::Above => -PI * k23 * airy_bi(zb) * airy_ai(z),
                Side::Below => -PI * k23 * airy_ai(zb) * airy_bi(z),
            });
        }
        // b = 0: branches are written in s (above) and t (below); a branch
        // evaluated on the wrong side of the axis is continued through the
        // Airy function it came from.
        match (side, y >= 0.0) {
            (Side::Above, true) => {
                let w = SubstitutedTime::from_y(y).s * xi_norm;
                let c = match self.construction {
                    Construction::OriginAiBi => alpha(),
                    Construction::PlusKN => gamma_coef(),
                    Construction::MinusOnly => return Ok(0.0),
                    Construction::AiryTwoSided => unreachable!(),
                };
                Ok(c * k23 * bessel_k_scaled(THIRD, w)?)
            }
            (Side::Below, false) => {
                let w = SubstitutedTime::from_y(y).t * xi_norm;
                Ok(match self.construction {
                    Construction::OriginAiBi => {
                        beta() * k23 * (bessel_j_scaled(-THIRD, w)? - bessel_j_scaled(THIRD, w)?)
                    }
                    Construction::MinusOnly => minus_coef() * k23 * bessel_j_scaled(THIRD, w)?,
                    Construction::PlusKN => delta_coef() * k23 * neumann_n_scaled(-THIRD, w)?,
                    Construction::AiryTwoSided => unreachable!(),
                })
            }
            _ => self.continued(xi_norm, y, side),
        }
    }

    /// Conditions at y = b: the gap between the one-sided limits and the
    /// jump `∂_y F̃(b+) − ∂_y F̃(b−)`, which should be 0 and 1. Derivatives
    /// are fourth-order central differences of each branch continued
    /// across b.
    pub fn jump_conditions(&self, xi_norm: f64) -> Result<JumpConditions> {
        let b = self.b_offset;
        let h = 1e-3 * xi_norm.powf(-2.0 / 3.0);
        let d = |side: Side| -> Result<f64> {
            let f = |k: f64| self.value_one_sided(xi_norm, b + k * h, side);
            Ok((f(-2.0)? - 8.0 * f(-1.0)? + 8.0 * f(1.0)? - f(2.0)?) / (12.0 * h))
        };
        let above = self.value_one_sided(xi_norm, b, Side::Above)?;
        let below = self.value_one_sided(xi_norm, b, Side::Below)?;
        Ok(JumpConditions {
            above,
            below,
            derivative_jump: d(Side::Above)? - d(Side::Below)?,
        })
    }

    /// `|F̃_yy − y|ξ|²F̃|` relative to the larger of the two terms, by
    /// fourth-order differences on the branch containing y.
    pub fn ode_residual(&self, xi_norm: f64, y: f64) -> Result<f64> {
        let side = if y >= self.b_offset { Side::Above } else { Side::Below };
        let h = 1e-2 * xi_norm.powf(-2.0 / 3.0);
        let f = |k: f64| self.value_one_sided(xi_norm, y + k * h, side);
        let f0 = f(0.0)?;
        let fyy = (-f(-2.0)? + 16.0 * f(-1.0)? - 30.0 * f0 + 16.0 * f(1.0)? - f(2.0)?) / (12.0 * h * h);
        let pot = y * xi_norm * xi_norm * f0;
        Ok((fyy - pot).abs() / fyy.abs().max(pot.abs()))
    }

    // Branch formulas rewritten as combinations of Ai and Bi, valid for all y.
    fn continued(&self, xi_norm: f64, y: f64, side: Side) -> Result<f64> {
        let k23 = xi_norm.powf(-2.0 / 3.0);
        let z = xi_norm.powf(2.0 / 3.0) * y;
        let (ai0, bi0) = (airy_ai_zero(), airy_bi_zero());
        Ok(match (self.construction, side) {
            // the K branch is a multiple of Ai, the J_{1/3} branch of Bi·Ai(0) − Ai·Bi(0)
            (Construction::OriginAiBi, Side::Above) => -PI * k23 * bi0 * airy_ai(z),
            (Construction::OriginAiBi, Side::Below) => -PI * k23 * ai0 * airy_bi(z),
            (Construction::PlusKN, Side::Above) => alpha_to(gamma_coef()) * -PI * k23 * bi0 * airy_ai(z),
            (Construction::PlusKN, Side::Below) => {
                // δ·(t/|ξ|)^{1/3}N_{-1/3}: N_{-1/3} = (J_{-1/3}cos(π/3) + J_{1/3})/sin(π/3) rewritten in Ai, Bi
                let (a, b) = plus_kn_below_airy();
                k23 * (a * airy_ai(z) + b * airy_bi(z))
            }
            (Construction::MinusOnly, Side::Above) => 0.0,
            (Construction::MinusOnly, Side::Below) => {
                let (a, b) = minus_below_airy();
                k23 * (a * airy_ai(z) + b * airy_bi(z))
            }
            (Construction::AiryTwoSided, _) => unreachable!(),
        })
    }
}

fn alpha_to(c: f64) -> f64 {
    c / alpha()
}

// Below the axis (z = −|ξ|^{2/3}(−y) < 0), with w = t|ξ| and
// r = |ξ|^{-2/3}: r·w^{1/3}J_{±1/3}(w) expressed through Ai(z), Bi(z).
// From Ai(−x) = (√x/3)(J_{-1/3} + J_{1/3}), Bi(−x) = √(x/3)(J_{-1/3} − J_{1/3})
// and w^{1/3} = (2/3)^{1/3} x^{1/2}:
//   w^{1/3}J_{-1/3} = (2/3)^{1/3}(3/2)(Ai + Bi/√3),
//   w^{1/3}J_{1/3}  = (2/3)^{1/3}(3/2)(Ai − Bi/√3).
fn j_pair_in_airy() -> ((f64, f64), (f64, f64)) {
    let k = (2.0f64 / 3.0).cbrt() * 1.5;
    let r3 = 3f64.sqrt();
    ((k, k / r3), (k, -k / r3))
}

fn minus_below_airy() -> (f64, f64) {
    let (_, jp) = j_pair_in_airy();
    let c = minus_coef();
    (c * jp.0, c * jp.1)
}

fn plus_kn_below_airy() -> (f64, f64) {
    // N_{-1/3} = (J_{-1/3}cos(−π/3) − J_{1/3}) / sin(−π/3)
    let (jm, jp) = j_pair_in_airy();
    let (c, s) = (0.5, -(3f64.sqrt()) / 2.0);
    let d = delta_coef();
    (d * (c * jm.0 - jp.0) / s, d * (c * jm.1 - jp.1) / s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_against_airy_values() {
        // α = −π Bi(0) · (3/2)^{1/3}/(π√3) from the K form of Ai
        let via_airy = -PI * airy_bi_zero() * (1.5f64).cbrt() / (PI * 3f64.sqrt());
        assert!((alpha() - via_airy).abs() < 1e-15);
        let beta_airy = -PI * airy_ai_zero() * (1.5f64).cbrt() / 3f64.sqrt();
        assert!((beta() - beta_airy).abs() < 1e-15);
    }

    #[test]
    fn continued_branches_agree_on_their_own_side() {
        for c in [Construction::OriginAiBi, Construction::MinusOnly, Construction::PlusKN] {
            let g = SpectralGreen::new(c, 0.0).unwrap();
            for (y, side) in [(0.7, Side::Above), (-0.9, Side::Below)] {
                let direct = g.value_one_sided(1.3, y, side).unwrap();
                let cont = g.continued(1.3, y, side).unwrap();
                assert!((direct - cont).abs() < 1e-13 * direct.abs().max(1.0), "{c:?} {side:?}");
            }
        }
    }

    #[test]
    fn b_offset_only_for_airy() {
        assert!(SpectralGreen::new(Construction::MinusOnly, 0.5).is_err());
        assert!(SpectralGreen::new(Construction::AiryTwoSided, 0.5).is_ok());
    }
}
