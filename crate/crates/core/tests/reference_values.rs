//! Values frozen from a 40-digit evaluation (mpmath) before the build,
//! plus the closed-form examples.

#![allow(clippy::excessive_precision)]

use std::f64::consts::PI;

use sae_radial::bound::{bound_energy, bound_wavefunction, node_radius, orthogonality_defect, tau_from_coeffs};
use sae_radial::potential::{additional_window, anticentrifugal, compute_p};
use sae_radial::scattering::{lambda_of_k, phase_shift, pole_energy, scattering_coeffs};
use sae_radial::specfun::{bessel_i, bessel_j, bessel_k, gamma_real};
use sae_radial::{BoundaryCoeffs, Error, PParameter, PParameter64, PotentialSpec64, Regime, SaeParam};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn gamma_reference() {
    assert!((gamma_real(1.0_f64).unwrap() - 1.0).abs() < 1e-15);
    assert!(rel(gamma_real(0.5).unwrap(), PI.sqrt()) < 1e-14);
    for (x, want) in [
        (1.25, 0.906_402_477_055_477_077_982_671_288_966_918),
        (0.75, 1.225_416_702_465_177_645_129_098_303_362_890),
        (0.7, 1.298_055_332_647_557_785_681_171_179_152_811),
        (1.9, 0.961_765_831_907_387_419_407_574_802_125_032),
        (0.55, 1.616_124_268_733_575_134_058_458_493_444_525),
    ] {
        assert!(rel(gamma_real(x).unwrap(), want) < 1e-13, "x = {x}");
    }
    assert!(matches!(gamma_real(0.0), Err(Error::Pole(_))));
    assert!(matches!(gamma_real(-2.0), Err(Error::Pole(_))));
}

#[test]
fn bessel_reference() {
    let cases: [(&str, f64, f64, f64); 10] = [
        ("J", 0.3, 1.7, 0.557_578_403_452_082_138_041_777_027_988_856),
        ("I", 0.2, 3.4, 6.731_268_726_877_334_200_067_303_628_950_325),
        ("K", 0.25, 0.8, 0.580_861_873_684_534_495_195_329_584_371_435),
        ("J", 0.3, 25.0, 0.028_287_780_084_076_882_198_790_187_805_978_57),
        ("J", -0.3, 25.0, 0.143_674_601_241_154_894_077_228_408_843_056_7),
        ("J", 0.1, 40.0, 0.026_961_630_848_211_025_835_603_307_457_490_15),
        ("K", 0.25, 25.0, 3.468_411_261_478_802_342_643_787_466_930_980e-12),
        ("I", 0.25, 25.0, 5_767_196_111.738_630_962_067_788_176_709_651),
        ("K", 0.4, 15.0, 9.870_404_510_396_147_803_398_686_042_665_736e-8),
        ("I", 0.4, 15.0, 337_777.925_015_307_686_520_300_023_634_709_5),
    ];
    for (f, nu, x, want) in cases {
        let got = match f {
            "J" => bessel_j(nu, x),
            "I" => bessel_i(nu, x),
            _ => bessel_k(nu, x),
        }
        .unwrap();
        assert!(rel(got, want) < 1e-12, "{f}_{nu}({x}) = {got}, want {want}");
    }
}

#[test]
fn bessel_half_order_examples() {
    assert!(bessel_j(0.5, PI).unwrap().abs() < 1e-15);
    assert!(rel(bessel_j(0.5, PI / 2.0).unwrap(), 2.0 / PI) < 1e-14);
    assert!(rel(bessel_i(0.5, 1.0).unwrap(), (2.0 / PI).sqrt() * 1f64.sinh()) < 1e-14);
    assert!(rel(bessel_k(0.5, 1.0).unwrap(), (PI / 2.0).sqrt() * (-1f64).exp()) < 1e-14);
    let k = bessel_k(0.5, 2.0).unwrap();
    assert!(rel(k, (PI / 4.0).sqrt() * (-2f64).exp()) < 1e-13, "{k}");
    assert!(bessel_k(0.5, 0.0).is_err());
    assert!(bessel_j(0.3, -1.0).is_err());
}

#[test]
fn potential_examples() {
    let p = compute_p(&PotentialSpec64::from_two_m_v0(1.0, 0.21, 0).unwrap());
    assert_eq!(p.regime, Regime::Transitive);
    assert!((p.p().unwrap() - 0.2).abs() < 1e-15);
    let free = compute_p(&PotentialSpec64::new(1.0, 0.0, 0).unwrap());
    assert_eq!(free.p(), Some(0.5));
    assert!(free.regime.standard_only());
    let fall = compute_p(&PotentialSpec64::from_two_m_v0(1.0, 0.30, 0).unwrap());
    assert_eq!(fall.regime, Regime::Falling);
    assert!((fall.p_squared + 0.05).abs() < 1e-15);

    assert_eq!(additional_window::<f64>(0), (0.0, 0.25));
    assert_eq!(additional_window::<f64>(1), (2.0, 2.25));
    assert_eq!(additional_window::<f64>(2), (6.0, 6.25));

    let half = PParameter { p_squared: 0.25, regime: Regime::StandardOnly };
    assert_eq!(anticentrifugal(&half, 1.0, 1.0).unwrap(), 0.0);
    let p = PParameter64::from_p(0.2).unwrap();
    assert!((anticentrifugal(&p, 1.0, 1.0).unwrap() + 0.105).abs() < 1e-15);
    assert!((anticentrifugal(&p, 1.0, 0.5).unwrap() + 0.42).abs() < 1e-14);
    assert!(anticentrifugal(&p, 1.0, 0.0).is_err());
}

#[test]
fn bound_examples() {
    let z = |a, b| BoundaryCoeffs::new(a, b).unwrap();
    assert_eq!(orthogonality_defect(&z(1.0, 0.0), &z(1.0, 0.0), 0.25), 0.0);
    assert_eq!(orthogonality_defect(&z(1.0, -2.0), &z(3.0, -6.0), 0.3), 0.0);
    assert_eq!(orthogonality_defect(&z(1.0, 0.0), &z(0.0, 1.0), 0.25), 0.25);

    assert_eq!(tau_from_coeffs(1.0, 0.0, 1.3, 0.25).unwrap(), SaeParam::Finite(0.0));
    let t = tau_from_coeffs(1.0, -1.0, 1.0, 0.25).unwrap().to_float();
    assert!(rel(t, -1.046_049_620_053_101_648_952_162_128_423_120_889) < 1e-14);
    assert!(tau_from_coeffs(0.0, 1.0, 1.0, 0.25).is_err());

    let p = PParameter64::from_p(0.25).unwrap();
    assert!(matches!(bound_energy(&p, 1.0, SaeParam::zero()), Err(Error::NoBoundState(_))));
    assert!(matches!(bound_energy(&p, 1.0, SaeParam::PlusInfinity), Err(Error::NoBoundState(_))));
    assert!(matches!(bound_energy(&p, 1.0, SaeParam::Finite(1.0)), Err(Error::ComplexEnergy(_))));
    let s = bound_energy(&p, 1.0, SaeParam::Finite(-1.0)).unwrap();
    assert!(rel(s.energy, -0.598_658_493_686_576_140_207_020_172_712_062_894) < 1e-14);
    assert!(rel(s.kappa, 1.094_219_807_613_238_319_418_384_970_352_232) < 1e-14);
    assert!(s.node_free);

    let want = -(2.0 / PI) * (PI / 4.0).sin() * bessel_k(0.25, s.kappa).unwrap();
    assert!(rel(bound_wavefunction(&s, 1.0, 1.0).unwrap(), want) < 1e-15);
    assert!(bound_wavefunction(&s, 1.0, 0.0).is_err());
    assert!(PParameter64::from_p(0.5).is_err());

    assert!((node_radius(1.0_f64, -1.0, 0.25).unwrap() - 1.0).abs() < 1e-15);
    assert!((node_radius(1.0_f64, -4.0, 0.25).unwrap() - 16.0).abs() < 1e-12);
    assert!(matches!(node_radius(1.0, 1.0, 0.25), Err(Error::NoNode(_))));
    assert!(node_radius(0.0, 1.0, 0.25).is_err());
}

#[test]
fn scattering_examples() {
    let tau = SaeParam::Finite(-1.0);
    for (k, lam, dsae) in [
        (2.0, -1.351_956_480_134_569_457_990_895_369_341_611, -1.524_779_215_831_841_661_175_590_969_795_658),
        (1.0, -0.955_977_594_972_249_990_727_640_003_990_235, -1.123_814_885_106_418_834_386_387_508_723_188),
        (0.5, -0.675_978_240_067_284_728_995_447_684_670_805, -0.741_404_163_412_988_286_934_763_835_231_894),
    ] {
        assert!(rel(lambda_of_k(tau, 0.25, k).unwrap().lam, lam) < 1e-14, "k = {k}");
        let pw = phase_shift(0, 0.25, k, tau).unwrap();
        assert!(rel(pw.delta_sae, dsae) < 1e-13, "k = {k}");
    }
    assert_eq!(lambda_of_k(SaeParam::zero(), 0.25, 3.0).unwrap().lam, 0.0);

    let pw = phase_shift(1, 0.3, 0.7, SaeParam::zero()).unwrap();
    assert_eq!(pw.delta_sae, 0.0);
    assert!((pw.delta_total - (1.5 - 0.3) * PI / 2.0).abs() < 1e-15);

    let e1 = pole_energy(tau, 0.25, 1.0).unwrap();
    assert!(rel(e1, -0.598_658_493_686_576_140_207_020_172_712_062_894) < 1e-14);
    let e2 = pole_energy(SaeParam::Finite(-2.0), 0.25, 1.0).unwrap();
    assert!((e2 / e1 - 1.0 / 16.0).abs() < 1e-14);
    for t in [SaeParam::zero(), SaeParam::Finite(0.5), SaeParam::PlusInfinity, SaeParam::MinusInfinity] {
        assert!(matches!(pole_energy(t, 0.25, 1.0), Err(Error::NoPole(_))));
    }

    let c0 = scattering_coeffs(SaeParam::zero(), 0.25, 1.0).unwrap();
    assert_eq!(c0.b, 0.0);
    assert!(rel(c0.a, (2.0 * PI).sqrt()) < 1e-15);
    let c = scattering_coeffs(tau, 0.25, 2.0).unwrap();
    let lam = -1.351_956_480_134_569_457_990_895_369_341_611;
    assert!(rel(c.b / c.a, lam) < 1e-14);
    let bracket = c.a * c.a * (lam * lam + 2.0 * lam * (PI / 4.0).cos() + 1.0);
    assert!(rel(bracket, 2.0 * PI) < 1e-14);
}
