//! Verification harness: delta pairings, consistency sweeps and reports.

mod bump;
mod pairing;
mod report;
mod suites;

pub use bump::{apply_tricomi, BumpFunction, LinearCombination, Profile, TestFunction};
pub use pairing::{
    delta_pairing, homogeneous_pairing, pairing_integral, pairing_tolerance, refined, PairingOptions,
};
pub use report::{Diagnostics, Mode, VerificationReport};
pub use suites::*;
