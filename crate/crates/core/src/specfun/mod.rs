//! Real-argument special functions: Gamma, Bessel J/I/K/N and Airy.

pub mod airy;
pub mod bessel;
pub mod gamma;

pub use airy::{
    airy_ai, airy_ai_prime, airy_ai_prime_zero, airy_ai_zero, airy_bi, airy_bi_prime, airy_bi_prime_zero, airy_bi_zero,
    airy_wronskian,
};
pub use bessel::{
    bessel_i, bessel_i_scaled, bessel_j, bessel_j_scaled, bessel_k, bessel_k_scaled, neumann_n,
    neumann_n_scaled, Order, SeriesPolicy,
};
pub use gamma::{cos_pi, gamma, ln_gamma, rgamma, sin_pi};
