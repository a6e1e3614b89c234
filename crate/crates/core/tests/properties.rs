use std::f64::consts::PI;

use num_complex::Complex;
use proptest::prelude::*;

use sae_radial::bound::{bound_energy, bound_wavefunction, orthogonality_defect, tau_from_coeffs};
use sae_radial::potential::{additional_window, anticentrifugal, compute_p};
use sae_radial::scattering::{
    boundary_coeffs, continuum_boundary_term, lambda_of_k, phase_shift, pole_energy, s_matrix,
    scattering_coeffs, standard_s_matrix,
};
use sae_radial::specfun::{
    bessel_i, bessel_i_deriv, bessel_j, bessel_j_deriv, bessel_k, bessel_k_deriv, i_large, i_series,
    j_large, j_series, k_reflection, series_switch,
};
use sae_radial::{BoundaryCoeffs, PParameter64, PotentialSpec64, Regime, SaeParam};

fn p_strategy() -> impl Strategy<Value = f64> {
    0.02..0.48f64
}

fn neg_tau() -> impl Strategy<Value = f64> {
    (-3.0..3.0f64).prop_map(|e| -(10f64.powf(e)))
}

fn any_tau() -> impl Strategy<Value = f64> {
    (-3.0..3.0f64, any::<bool>()).prop_map(|(e, s)| if s { 10f64.powf(e) } else { -(10f64.powf(e)) })
}

fn level(p: f64, mass: f64, tau: f64) -> sae_radial::BoundState64 {
    bound_energy(&PParameter64::from_p(p).unwrap(), mass, SaeParam::Finite(tau)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ik_wronskian(nu in prop::sample::select(vec![0.1, 0.25, 0.4]), x in 0.1..20.0f64) {
        let w = bessel_i(nu, x).unwrap() * bessel_k_deriv(nu, x).unwrap()
            - bessel_i_deriv(nu, x).unwrap() * bessel_k(nu, x).unwrap();
        prop_assert!((w + 1.0 / x).abs() < 1e-10);
    }

    #[test]
    fn j_wronskian(nu in prop::sample::select(vec![0.1, 0.25, 0.4]), x in 0.1..20.0f64) {
        let w = bessel_j(nu, x).unwrap() * bessel_j_deriv(-nu, x).unwrap()
            - bessel_j_deriv(nu, x).unwrap() * bessel_j(-nu, x).unwrap();
        prop_assert!((w + 2.0 * (nu * PI).sin() / (PI * x)).abs() < 1e-10);
    }

    #[test]
    fn k_positive_and_decreasing(nu in 0.01..0.99f64, x in 0.01..60.0f64) {
        let k1 = bessel_k(nu, x).unwrap();
        let k2 = bessel_k(nu, x * 1.01).unwrap();
        prop_assert!(k1 > 0.0 && k2 < k1);
    }

    #[test]
    fn window_consistency(l in 0u32..8, t in 0.0..1.0f64) {
        let (lo, hi) = additional_window::<f64>(l);
        let inside = lo + (hi - lo) * (0.001 + 0.998 * t);
        prop_assert_eq!(compute_p(&PotentialSpec64::from_two_m_v0(1.0, inside, l).unwrap()).regime, Regime::Transitive);
        let below = lo * t;
        prop_assert!(compute_p(&PotentialSpec64::from_two_m_v0(1.0, below, l).unwrap()).regime.standard_only());
        let above = hi + 0.01 + 10.0 * t;
        prop_assert_eq!(compute_p(&PotentialSpec64::from_two_m_v0(1.0, above, l).unwrap()).regime, Regime::Falling);
        let (next_lo, _) = additional_window::<f64>(l + 1);
        prop_assert!(hi < next_lo);
    }

    #[test]
    fn anticentrifugal_sign(two_m_v0 in -5.0..0.249f64, l in 0u32..3, r in 1e-3..1e3f64) {
        let p = compute_p(&PotentialSpec64::from_two_m_v0(1.0, two_m_v0, l).unwrap());
        let v = anticentrifugal(&p, 1.0, r).unwrap();
        prop_assert_eq!(v < 0.0, p.p_squared < 0.25);
    }

    #[test]
    fn energy_scaling(p in p_strategy(), tau in neg_tau(), s in 0.1..10.0f64) {
        let base = level(p, 1.0, tau).kappa;
        let scaled = level(p, 1.0, tau * s.powf(2.0 * p)).kappa;
        prop_assert!((scaled * s / base - 1.0).abs() < 1e-11);
    }

    #[test]
    fn tau_round_trip(p in p_strategy(), tau in neg_tau()) {
        let s = level(p, 1.0, tau);
        let back = tau_from_coeffs(1.0, -1.0, s.kappa, p).unwrap().to_float();
        prop_assert!((back / tau - 1.0).abs() < 1e-12);
        let again = level(p, 1.0, back);
        prop_assert!((again.kappa / s.kappa - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tau_homogeneous(p in p_strategy(), a in 0.1..10.0f64, b in -10.0..10.0f64, c in 0.1..10.0f64, k in 0.01..100.0f64) {
        let t1 = tau_from_coeffs(a, b, k, p).unwrap().to_float();
        let t2 = tau_from_coeffs(c * a, c * b, k, p).unwrap().to_float();
        prop_assert!((t1 - t2).abs() <= 1e-14 * t1.abs());
    }

    #[test]
    fn level_monotone_in_tau(p in p_strategy(), tau in neg_tau(), f in 1.001..10.0f64) {
        prop_assert!(level(p, 1.0, tau * f).energy.abs() < level(p, 1.0, tau).energy.abs());
    }

    #[test]
    fn wavefunction_single_signed(p in p_strategy(), tau in neg_tau()) {
        let s = level(p, 1.0, tau);
        for i in 0..1000 {
            let r = 10f64.powf(-6.0 + 8.0 * i as f64 / 999.0) / s.kappa;
            prop_assert!(bound_wavefunction(&s, 1.0, r).unwrap() < 0.0);
        }
    }

    #[test]
    fn defect_antisymmetric(a in -5.0..5.0f64, b in -5.0..5.0f64, c in -5.0..5.0f64, d in 0.1..5.0f64, p in p_strategy()) {
        let c1 = BoundaryCoeffs::new(a, b).unwrap();
        let c2 = BoundaryCoeffs::new(c, d).unwrap();
        prop_assert_eq!(orthogonality_defect(&c1, &c2, p), -orthogonality_defect(&c2, &c1, p));
        let same = BoundaryCoeffs::new(a * d, b * d).unwrap();
        prop_assert!(orthogonality_defect(&c1, &same, p).abs() < 1e-12 * (1.0 + (a * a + b * b) * d));
    }

    #[test]
    fn unitarity(l in 0u32..6, p in p_strategy(), k in 1e-3..1e3f64, tau in any_tau()) {
        let s = s_matrix(l, p, k, SaeParam::Finite(tau)).unwrap();
        prop_assert!((s.norm() - 1.0).abs() < 1e-12);
        let pw = phase_shift(l, p, k, SaeParam::Finite(tau)).unwrap();
        prop_assert!((Complex::from_polar(1.0, 2.0 * pw.delta_total) - s).norm() < 1e-12);
        prop_assert!((pw.delta_total - pw.delta_standard - pw.delta_sae).abs() < 1e-15);
    }

    #[test]
    fn limits_and_duality(l in 0u32..6, p in p_strategy(), k in 1e-3..1e3f64) {
        let std = standard_s_matrix(l, p);
        let add = standard_s_matrix(l, -p);
        prop_assert!((s_matrix(l, p, k, SaeParam::zero()).unwrap() - std).norm() < 1e-12);
        prop_assert!((s_matrix(l, p, k, SaeParam::PlusInfinity).unwrap() - add).norm() < 1e-12);
        prop_assert!((s_matrix(l, p, k, SaeParam::MinusInfinity).unwrap() - add).norm() < 1e-12);
        let lh = l as f64 + 0.5;
        prop_assert!((std - Complex::from_polar(1.0, PI * (lh - p))).norm() < 1e-12);
        prop_assert!((add - Complex::from_polar(1.0, PI * (lh + p))).norm() < 1e-12);
    }

    #[test]
    fn lambda_sign_and_monotonicity(p in p_strategy(), tau in any_tau(), k in 1e-3..1e3f64) {
        let t = SaeParam::Finite(tau);
        let l1 = lambda_of_k(t, p, k).unwrap().lam;
        let l2 = lambda_of_k(t, p, k * 1.1).unwrap().lam;
        prop_assert_eq!(l1 > 0.0, tau > 0.0);
        let increasing = l2 > l1;
        prop_assert_eq!(increasing, tau > 0.0);
    }

    #[test]
    fn delta_continuous_in_tau(p in p_strategy(), k in 0.01..100.0f64, tau in any_tau()) {
        let d = |t: f64| phase_shift(0, p, k, SaeParam::Finite(t)).unwrap().delta_sae;
        let a = d(tau);
        let b = d(tau * (1.0 + 1e-7));
        prop_assert!((a - b).abs() < 1e-5);
    }

    #[test]
    fn pole_is_level(p in p_strategy(), tau in neg_tau(), mass in 0.1..10.0f64) {
        let e = pole_energy(SaeParam::Finite(tau), p, mass).unwrap();
        let lv = level(p, mass, tau).energy;
        prop_assert!((e / lv - 1.0).abs() < 1e-12);
    }

    #[test]
    fn continuum_bracket_vanishes(p in p_strategy(), tau in any_tau(), k in 0.01..10.0f64, kp in 0.01..10.0f64) {
        prop_assume!((k - kp).abs() > 1e-3);
        let t = SaeParam::Finite(tau);
        let ck = boundary_coeffs(&scattering_coeffs(t, p, k).unwrap(), p, k).unwrap();
        let ckp = boundary_coeffs(&scattering_coeffs(t, p, kp).unwrap(), p, kp).unwrap();
        prop_assert!(((ck.a_add / ck.a_st) / tau - 1.0).abs() < 1e-12);
        let scale = 2.0 * p / (kp * kp - k * k).abs() * (ck.a_st * ckp.a_add).abs();
        let bracket = continuum_boundary_term(&ck, &ckp, p, k, kp).unwrap();
        prop_assert!(bracket.abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn scale_invariance_only_for_special_tau(p in p_strategy(), k in 0.01..10.0f64) {
        let d = |t: SaeParam<f64>, k: f64| phase_shift(0, p, k, t).unwrap().delta_sae;
        prop_assert!((d(SaeParam::Finite(-1.0), k) - d(SaeParam::Finite(-1.0), 2.0 * k)).abs() > 1e-6);
        prop_assert_eq!(d(SaeParam::zero(), k), 0.0);
        prop_assert!((d(SaeParam::PlusInfinity, k) - d(SaeParam::PlusInfinity, 2.0 * k)).abs() < 1e-15);
    }
}

#[test]
fn branch_consistency_at_switch() {
    for &nu in &[0.1, 0.25, 0.4, -0.3, 0.75] {
        let s = series_switch(nu);
        for i in 0..21 {
            let x = s * (0.8 + 0.02 * i as f64);
            let dj = (j_series(nu, x).unwrap() - j_large(nu, x).unwrap()).abs();
            assert!(dj < 1e-9, "J nu={nu} x={x}: {dj}");
            let di = i_series(nu, x).unwrap() / i_large(nu, x).unwrap() - 1.0;
            assert!(di.abs() < 1e-9, "I nu={nu} x={x}: {di}");
        }
    }
}

#[test]
fn reflection_identity_below_switch() {
    for &nu in &[0.1, 0.25, 0.4] {
        for i in 1..=100 {
            let x = 0.1 * i as f64;
            let d = (k_reflection(nu, x).unwrap() - bessel_k(nu, x).unwrap()).abs();
            assert!(d < 1e-9, "nu={nu} x={x}: {d}");
        }
    }
}
