//! Limits of sequences: polynomial extrapolation in the damping parameter
//! ε → 0, and Wynn's epsilon algorithm for partial sums.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const NOISE_SAFETY: f64 = 10.0;

/// Damping values for the converging factor `e^{-εt}` and the degree of the
/// polynomial used to extrapolate to ε = 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EpsSchedule {
    pub eps_values: Vec<f64>,
    pub extrapolation_order: usize,
}

impl Default for EpsSchedule {
    /// ε_k = 0.2·2^{-k}, k = 0..6, cubic extrapolation.
    fn default() -> Self {
        EpsSchedule::geometric(0.2, 7, 3)
    }
}

impl EpsSchedule {
    pub fn geometric(start: f64, count: usize, order: usize) -> Self {
        Self::geometric_with_ratio(start, 0.5, count, order)
    }

    /// ε_k = start·ratio^k for k = 0..count.
    pub fn geometric_with_ratio(start: f64, ratio: f64, count: usize, order: usize) -> Self {
        EpsSchedule {
            eps_values: (0..count).map(|k| start * ratio.powi(k as i32)).collect(),
            extrapolation_order: order,
        }
    }

    /// Ladder for an integral that is analytic in ε on a disc of radius
    /// `gap` around 0: well inside the disc, extrapolated at high order.
    pub fn for_gap(gap: f64) -> Self {
        Self::geometric_with_ratio(0.25 * gap, 0.7, 8, 7)
    }

    pub fn validate(&self) -> Result<()> {
        let e = &self.eps_values;
        if self.extrapolation_order < 1 || e.len() < self.extrapolation_order + 1 {
            return Err(Error::Parameter("schedule needs at least order + 1 values".into()));
        }
        if e.iter().any(|v| !(*v > 0.0) || !v.is_finite()) || e.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::Parameter("schedule must be positive and strictly decreasing".into()));
        }
        Ok(())
    }

    pub fn smallest(&self) -> f64 {
        *self.eps_values.last().expect("validated schedule is nonempty")
    }
}

/// Result of an ε → 0 extrapolation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Extrapolation {
    pub value: f64,
    pub error: f64,
    pub samples: Vec<(f64, f64)>,
}

/// Neville extrapolation to ε = 0 through the `order + 1` smallest ε values.
///
/// The error estimate is the last correction. If that correction is larger
/// than the one before it (and above roundoff) the extrapolation is reported
/// as unstable.
pub fn extrapolate_eps_limit(samples: &[(f64, f64)], schedule: &EpsSchedule) -> Result<Extrapolation> {
    extrapolate_eps_limit_with_noise(samples, schedule, 0.0)
}

/// As [`extrapolate_eps_limit`], for samples carrying an absolute error up
/// to `noise`. The noise, amplified by the Lebesgue constant of the
/// extrapolation to 0, is added to the error estimate and sets the floor
/// below which growing corrections are not taken as instability.
pub fn extrapolate_eps_limit_with_noise(
    samples: &[(f64, f64)],
    schedule: &EpsSchedule,
    noise: f64,
) -> Result<Extrapolation> {
    schedule.validate()?;
    let order = schedule.extrapolation_order;
    if samples.len() != schedule.eps_values.len()
        || samples.iter().zip(&schedule.eps_values).any(|(s, e)| s.0 != *e)
    {
        return Err(Error::Parameter("samples must be taken at the schedule's ε values".into()));
    }
    if samples.iter().any(|s| !s.1.is_finite()) {
        return Err(Error::Parameter("non-finite sample".into()));
    }
    let used = &samples[samples.len() - order - 1..];
    let m = used.len();
    // tableau[k][i]: degree-k interpolant through used[i..=i+k], evaluated at 0
    let mut col: Vec<f64> = used.iter().map(|s| s.1).collect();
    let mut last = vec![col[m - 1]];
    for k in 1..m {
        let next: Vec<f64> = (0..m - k)
            .map(|i| {
                let (xi, xj) = (used[i].0, used[i + k].0);
                (xi * col[i + 1] - xj * col[i]) / (xi - xj)
            })
            .collect();
        last.push(*next.last().expect("nonempty"));
        col = next;
    }
    let value = last[order];
    let corr: Vec<f64> = last.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    // Σ|ℓ_i(0)| for the Lagrange basis on the nodes used
    let lebesgue: f64 = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i)
                .map(|j| used[j].0 / (used[j].0 - used[i].0))
                .product::<f64>()
                .abs()
        })
        .sum();
    let amplified = lebesgue * noise.abs();
    // quadrature error estimates are not bounds; allow a factor of 10 before
    // calling a growing correction instability
    let floor = (1e-13 * value.abs()).max(NOISE_SAFETY * amplified).max(f64::MIN_POSITIVE);
    let error = corr[order - 1];
    if order >= 2 && error > corr[order - 2] && error > floor {
        return Err(Error::Unstable { estimate: value });
    }
    Ok(Extrapolation { value, error: error + amplified, samples: samples.to_vec() })
}

fn wynn_last(seq: &[f64]) -> f64 {
    let n = seq.len();
    if n == 0 {
        return 0.0;
    }
    // e[j] holds the current column; prev the one before it
    let mut prev = vec![0.0; n + 1];
    let mut cur: Vec<f64> = seq.to_vec();
    let mut best = seq[n - 1];
    let mut col = 0;
    while cur.len() > 1 {
        let mut next = Vec::with_capacity(cur.len() - 1);
        let mut broke = false;
        for j in 0..cur.len() - 1 {
            let d = cur[j + 1] - cur[j];
            if d == 0.0 || !d.is_finite() {
                broke = true;
                break;
            }
            next.push(prev[j + 1] + 1.0 / d);
        }
        if broke {
            break;
        }
        col += 1;
        prev = cur;
        cur = next;
        if col % 2 == 0 {
            best = *cur.last().expect("nonempty");
        }
    }
    best
}

/// Wynn epsilon acceleration of a sequence of partial sums. Returns the
/// estimate and the change against the estimate without the last term.
pub fn wynn_epsilon(seq: &[f64]) -> (f64, f64) {
    let est = wynn_last(seq);
    if seq.len() < 2 {
        return (est, f64::INFINITY);
    }
    let before = wynn_last(&seq[..seq.len() - 1]);
    (est, (est - before).abs())
}
