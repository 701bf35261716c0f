mod common;

use common::reference::*;
use proptest::prelude::*;
use std::f64::consts::PI;
use tricomi_core::specfun::bessel::methods;
use tricomi_core::specfun::*;

const THIRD: f64 = 1.0 / 3.0;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

#[test]
fn gamma_reference_table() {
    for &(x, g) in GAMMA_TABLE {
        let v = gamma(x).unwrap();
        assert!(rel(v, g) < 5e-15, "gamma({x}) = {v}, want {g}");
    }
    assert!(rel(gamma(4.0 / 3.0 - 2.0).unwrap(), GAMMA_MINUS_TWO_THIRDS) < 5e-15);
}

#[test]
fn gamma_two_thirds_four_thirds_product() {
    let v = gamma(2.0 / 3.0).unwrap() * gamma(4.0 / 3.0).unwrap();
    assert!(rel(v, 2.0 * PI * 3f64.powf(-1.5)) < 1e-14);
}

#[test]
fn rgamma_matches_reciprocal() {
    for &(x, g) in GAMMA_TABLE {
        assert!(rel(rgamma(x), 1.0 / g) < 5e-15);
    }
}

#[test]
fn bessel_point_values() {
    assert!(rel(bessel_j(THIRD, 5.0).unwrap(), J_THIRD_AT_5) < 1e-13);
    assert!(rel(bessel_i(-THIRD, 2.0).unwrap(), I_MINUS_THIRD_AT_2) < 1e-14);
    assert!(rel(bessel_k(THIRD, 1.0).unwrap(), K_THIRD_AT_1) < 1e-14);
    assert!(rel(neumann_n(-THIRD, 2.0).unwrap(), N_MINUS_THIRD_AT_2) < 1e-13);
    assert_eq!(bessel_j(THIRD, 0.0).unwrap(), 0.0);
    assert_eq!(bessel_i(THIRD, 0.0).unwrap(), 0.0);
}

#[test]
fn bessel_j_table() {
    for &(nu, x, v) in BESSEL_J_TABLE {
        let got = bessel_j(nu, x).unwrap();
        // absolute near zeros of J, relative elsewhere
        let err = (got - v).abs();
        assert!(err <= 2e-12_f64.max(1e-11 * v.abs()), "J_{nu}({x}) = {got}, want {v}");
    }
}

#[test]
fn bessel_i_table() {
    for &(nu, x, v) in BESSEL_I_TABLE {
        let got = bessel_i(nu, x).unwrap();
        assert!(rel(got, v) < 1e-12, "I_{nu}({x}) = {got}, want {v}");
    }
}

#[test]
fn bessel_k_table() {
    for &(nu, x, v) in BESSEL_K_TABLE {
        let got = bessel_k(nu, x).unwrap();
        assert!(rel(got, v) < 1e-12, "K_{nu}({x}) = {got}, want {v}");
    }
}

#[test]
fn airy_table() {
    for &(z, ai, aip, bi, bip) in AIRY_TABLE {
        for (name, got, want) in [
            ("Ai", airy_ai(z), ai),
            ("Ai'", airy_ai_prime(z), aip),
            ("Bi", airy_bi(z), bi),
            ("Bi'", airy_bi_prime(z), bip),
        ] {
            assert!((got - want).abs() <= 1e-13_f64.max(1e-12 * want.abs()), "{name}({z}) = {got}, want {want}");
        }
    }
    assert!(rel(airy_ai(1.0), AI_AT_1) < 1e-13);
    assert!(rel(airy_bi(-2.0), BI_AT_MINUS_2) < 1e-13);
}

#[test]
fn airy_values_at_origin() {
    let g23 = gamma(2.0 / 3.0).unwrap();
    let g43 = gamma(4.0 / 3.0).unwrap();
    assert!((airy_ai(0.0) - 3f64.powf(-2.0 / 3.0) / g23).abs() < 1e-15);
    assert!((airy_bi_prime(0.0) - 3f64.powf(-5.0 / 6.0) / g43).abs() < 1e-15);
}

#[test]
fn airy_wronskian_is_one_over_pi() {
    for z in [-2.0, -1.0, 0.0, 1.0, 2.0] {
        assert!((airy_wronskian(z) - 1.0 / PI).abs() < 1e-10, "z = {z}");
    }
}

#[test]
fn airy_ode_residual() {
    let h = 1e-3;
    let mut z = -2.0;
    while z <= 2.0 {
        for f in [airy_ai, airy_bi] {
            let d2 = (-f(z + 2.0 * h) + 16.0 * f(z + h) - 30.0 * f(z) + 16.0 * f(z - h) - f(z - 2.0 * h))
                / (12.0 * h * h);
            assert!((d2 - z * f(z)).abs() < 1e-7, "z = {z}");
        }
        z += 0.125;
    }
}

#[test]
fn k_symmetric_in_order() {
    let mut x: f64 = 1e-3;
    while x <= 30.0 {
        let a = bessel_k(THIRD, x).unwrap();
        let b = bessel_k(-THIRD, x).unwrap();
        assert!((a - b).abs() <= 1e-13 * a.max(1.0), "x = {x}");
        x *= 1.3;
    }
}

#[test]
fn k_large_argument_limit() {
    let x: f64 = 30.0;
    let v = x.sqrt() * x.exp() * bessel_k(THIRD, x).unwrap();
    // leading correction a_1/x = (4/9 - 1)/240
    assert!((v / (PI / 2.0).sqrt() - 1.0 - (4.0 / 9.0 - 1.0) / 240.0).abs() < 1e-4);
}

#[test]
fn neumann_consistency() {
    for nu in [THIRD, -THIRD] {
        for k in 1..40 {
            let x = 0.37 * k as f64;
            let n = neumann_n(nu, x).unwrap();
            let lhs = sin_pi(nu) * n + bessel_j(-nu, x).unwrap() - cos_pi(nu) * bessel_j(nu, x).unwrap();
            assert!(lhs.abs() < 1e-12, "nu = {nu}, x = {x}");
        }
    }
}

#[test]
fn series_asymptotic_seam() {
    let p = SeriesPolicy::default();
    let x = p.switchover_radius;
    for nu in [-2.0 / 3.0, -THIRD, 0.0, THIRD, 2.0 / 3.0, 0.5, 1.0] {
        let js = methods::pow_times_series(0.0, nu, x, -1.0, &p);
        let ja = methods::asymptotic_j(nu, x);
        assert!(rel(js, ja) < 1e-10, "J seam nu = {nu}: {js} vs {ja}");
        let is = methods::pow_times_series(0.0, nu, x, 1.0, &p);
        let ia = x.exp() * methods::asymptotic_i_scaled(nu, x);
        assert!(rel(is, ia) < 1e-10, "I seam nu = {nu}");
        let ki = methods::integral_k_scaled(nu, x);
        let ka = methods::asymptotic_k_scaled(nu, x);
        assert!(rel(ki, ka) < 1e-10, "K seam nu = {nu}");
    }
}

#[test]
fn k_difference_integral_seam() {
    let p = SeriesPolicy::default();
    for nu in [THIRD, 2.0 / 3.0, 0.25] {
        let d = methods::difference_k(nu, 2.0, &p);
        let i = (-2f64).exp() * methods::integral_k_scaled(nu, 2.0);
        assert!(rel(d, i) < 1e-13, "nu = {nu}");
    }
}

#[test]
fn scaled_forms_match_unscaled() {
    for nu in [-2.0 / 3.0, -THIRD, THIRD, 2.0 / 3.0] {
        for x in [0.2, 1.5, 4.0, 15.0] {
            let a = nu.abs();
            assert!(rel(bessel_j_scaled(nu, x).unwrap(), x.powf(a) * bessel_j(nu, x).unwrap()) < 1e-13);
            assert!(rel(bessel_i_scaled(nu, x).unwrap(), x.powf(a) * bessel_i(nu, x).unwrap()) < 1e-13);
            assert!(rel(bessel_k_scaled(nu, x).unwrap(), x.powf(a) * bessel_k(nu, x).unwrap()) < 1e-13);
            assert!(rel(neumann_n_scaled(nu, x).unwrap(), x.powf(a) * neumann_n(nu, x).unwrap()) < 1e-12);
        }
    }
}

#[test]
fn scaled_j_leading_coefficients() {
    let g43 = gamma(4.0 / 3.0).unwrap();
    let t: f64 = 1e-6;
    let v = bessel_j_scaled(THIRD, t).unwrap() / t.powf(2.0 / 3.0);
    assert!(rel(v, 1.0 / (2f64.powf(THIRD) * g43)) < 1e-10);
    // derivative of t^{1/3}J_{1/3}(t) behaves like (2/3) t^{-1/3} / (2^{1/3}Γ(4/3))
    let h = 1e-9;
    let d = (bessel_j_scaled(THIRD, t + h).unwrap() - bessel_j_scaled(THIRD, t - h).unwrap()) / (2.0 * h);
    assert!(rel(d, 2.0 / 3.0 * t.powf(-THIRD) / (2f64.powf(THIRD) * g43)) < 1e-5);
}

proptest! {
    #[test]
    fn gamma_recurrence(x in -20.0f64..60.0) {
        prop_assume!((x - x.round()).abs() > 1e-3);
        let g = gamma(x).unwrap();
        let g1 = gamma(x + 1.0).unwrap();
        prop_assert!((g1 / (x * g) - 1.0).abs() < 1e-13);
    }

    #[test]
    fn gamma_reflection(b in 0.01f64..0.99) {
        let v = gamma(1.0 - b).unwrap() * gamma(b).unwrap();
        prop_assert!((v * sin_pi(b) / PI - 1.0).abs() < 1e-14);
    }

    #[test]
    fn bessel_j_recurrence(nu in -0.9f64..2.0, x in 0.1f64..60.0) {
        // J_{ν-1} + J_{ν+1} = (2ν/x) J_ν
        prop_assume!((nu - nu.round()).abs() > 1e-3 || nu >= 1.0);
        let a = bessel_j(nu - 1.0, x).unwrap();
        let b = bessel_j(nu + 1.0, x).unwrap();
        let c = bessel_j(nu, x).unwrap();
        let scale = a.abs().max(b.abs()).max(c.abs() * 2.0 * nu.abs() / x).max(1e-3);
        prop_assert!((a + b - 2.0 * nu / x * c).abs() < 1e-10 * scale.max(1.0));
    }

    #[test]
    fn bessel_k_recurrence(nu in 0.05f64..1.5, x in 0.05f64..40.0) {
        // K_{ν+1} − K_{ν−1} = (2ν/x) K_ν
        let a = bessel_k(nu + 1.0, x).unwrap();
        let b = bessel_k(nu - 1.0, x).unwrap();
        let c = bessel_k(nu, x).unwrap();
        prop_assert!(((a - b) / (2.0 * nu / x * c) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn bessel_i_k_wronskian(nu in -0.95f64..0.95, x in 0.05f64..30.0) {
        // I_ν K_{ν+1} + I_{ν+1} K_ν = 1/x
        prop_assume!(nu.abs() > 1e-3);
        let v = bessel_i(nu, x).unwrap() * bessel_k(nu + 1.0, x).unwrap()
            + bessel_i(nu + 1.0, x).unwrap() * bessel_k(nu, x).unwrap();
        prop_assert!((v * x - 1.0).abs() < 1e-11);
    }

    #[test]
    fn airy_wronskian_everywhere(z in -30.0f64..8.0) {
        prop_assert!((airy_wronskian(z) * PI - 1.0).abs() < 1e-10);
    }
}
