//! Self-reporting verification runs over the closed forms, one per
//! acceptance criterion. Used by the `verify` subcommand.
//!
//! Grids are evaluated with rayon; results are collected in input order so
//! reports are deterministic regardless of thread count.

use std::fmt;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bound::{bound_energy, bound_wavefunction, SaeParam};
use crate::potential::{compute_p, PParameter, PotentialSpec, Regime};
use crate::scattering::{
    boundary_coeffs, continuum_boundary_term, phase_shift, pole_energy, s_matrix,
    scattering_coeffs, standard_s_matrix,
};
use crate::specfun::{
    bessel_i, bessel_i_deriv, bessel_j, bessel_j_deriv, bessel_k, bessel_k_deriv,
};
use crate::Result;

use super::{
    default_bracket, extract_phase, orthogonality_integral_detailed, phase_distance_mod_pi,
    scan_matching_roots, shoot_bound_energy, OverlapState,
};

pub const P_GRID: [f64; 5] = [0.10, 0.20, 0.25, 0.33, 0.45];
pub const TAU_GRID: [f64; 3] = [-0.5, -1.0, -2.0];

/// Which criteria to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Bound,
    Pole,
    Phase,
    Unitarity,
    Orthogonality,
    Specfun,
    Uniqueness,
    Window,
}

impl Suite {
    pub const NAMES: [&'static str; 9] = [
        "all",
        "bound",
        "pole",
        "phase",
        "unitarity",
        "orthogonality",
        "specfun",
        "uniqueness",
        "window",
    ];

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "all" => Suite::All,
            "bound" => Suite::Bound,
            "pole" => Suite::Pole,
            "phase" => Suite::Phase,
            "unitarity" => Suite::Unitarity,
            "orthogonality" => Suite::Orthogonality,
            "specfun" => Suite::Specfun,
            "uniqueness" => Suite::Uniqueness,
            "window" => Suite::Window,
            _ => return None,
        })
    }
}

/// Outcome of one criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Worst observed value of the checked quantity.
    pub worst: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] #{} {}: worst={:.3e} tol={:.1e} ({})",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.worst,
            self.tolerance,
            self.detail
        )
    }
}

fn report(id: u8, name: &'static str, worst: f64, tolerance: f64, detail: String) -> CriterionReport {
    CriterionReport { id, name, passed: worst <= tolerance, worst, tolerance, detail }
}

fn failed(id: u8, name: &'static str, tolerance: f64, err: crate::Error) -> CriterionReport {
    CriterionReport {
        id,
        name,
        passed: false,
        worst: f64::INFINITY,
        tolerance,
        detail: format!("error: {err}"),
    }
}

pub fn run(suite: Suite) -> Vec<CriterionReport> {
    let all: [(Suite, fn() -> CriterionReport); 8] = [
        (Suite::Bound, bound_vs_shooting),
        (Suite::Pole, pole_vs_level),
        (Suite::Phase, phase_vs_oracle),
        (Suite::Unitarity, unitarity_and_limits),
        (Suite::Orthogonality, orthogonality),
        (Suite::Specfun, special_functions),
        (Suite::Uniqueness, single_level),
        (Suite::Window, window_classification),
    ];
    all.iter()
        .filter(|(s, _)| suite == Suite::All || *s == suite)
        .map(|(_, f)| f())
        .collect()
}

fn grid_pairs() -> Vec<(f64, f64)> {
    P_GRID.iter().flat_map(|&p| TAU_GRID.iter().map(move |&t| (p, t))).collect()
}

/// #1: shooting on the radial equation reproduces the closed-form level.
pub fn bound_vs_shooting() -> CriterionReport {
    const TOL: f64 = 1e-6;
    let name = "closed-form level vs shooting";
    let rows: Result<Vec<f64>> = grid_pairs()
        .par_iter()
        .map(|&(p, tau)| {
            let closed = bound_energy(&PParameter::from_p(p)?, 1.0, SaeParam::Finite(tau))?;
            let shot = shoot_bound_energy(p, 1.0, tau, default_bracket(p, 1.0, tau))?;
            Ok((shot.energy - closed.energy).abs() / closed.energy.abs())
        })
        .collect();
    match rows {
        Ok(r) => report(1, name, max(&r), TOL, format!("{} (P, tau) points, m = 1", r.len())),
        Err(e) => failed(1, name, TOL, e),
    }
}

/// #2: S-matrix pole energy equals the level.
pub fn pole_vs_level() -> CriterionReport {
    const TOL: f64 = 1e-12;
    let name = "pole energy vs level";
    let rows: Result<Vec<f64>> = grid_pairs()
        .iter()
        .map(|&(p, tau)| {
            let level = bound_energy(&PParameter::from_p(p)?, 1.0, SaeParam::Finite(tau))?.energy;
            let pole = pole_energy(SaeParam::Finite(tau), p, 1.0)?;
            Ok((pole - level).abs() / level.abs())
        })
        .collect();
    match rows {
        Ok(r) => report(2, name, max(&r), TOL, format!("{} (P, tau) points", r.len())),
        Err(e) => failed(2, name, TOL, e),
    }
}

/// #3: phase extracted from the integrated solution matches the closed form.
pub fn phase_vs_oracle() -> CriterionReport {
    const TOL: f64 = 1e-4;
    let name = "phase shift vs asymptotic fit";
    let p = 0.25;
    let cases: Vec<(f64, f64)> = [-1.0, 0.0]
        .iter()
        .flat_map(|&t| [0.5, 1.0, 2.0].into_iter().map(move |k| (t, k)))
        .collect();
    let rows: Result<Vec<f64>> = cases
        .par_iter()
        .map(|&(tau, k)| {
            let tau = SaeParam::Finite(tau);
            let pw = phase_shift(0, p, k, tau)?;
            if tau.is_zero() && pw.delta_total != (0.5 - p) * std::f64::consts::FRAC_PI_2 {
                return Ok(f64::INFINITY);
            }
            let fitted = extract_phase(k, p, tau, 0)?;
            Ok(phase_distance_mod_pi(fitted, pw.delta_total))
        })
        .collect();
    match rows {
        Ok(r) => report(3, name, max(&r), TOL, format!("{} (tau, k) points, P = 0.25, l = 0", r.len())),
        Err(e) => failed(3, name, TOL, e),
    }
}

/// #4: |S| = 1, the τ = 0 and τ = ±∞ limits, and the P → -P duality.
pub fn unitarity_and_limits() -> CriterionReport {
    const TOL: f64 = 1e-12;
    let name = "unitarity and limits";
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ae);
    let mut run = || -> Result<(f64, String)> {
        let mut worst = 0.0_f64;
        for _ in 0..100 {
            let p = rng.gen_range(0.01..0.49);
            let k = 10f64.powf(rng.gen_range(-3.0..3.0));
            let tau = rng.gen_range(-1.0..1.0) * 10f64.powf(rng.gen_range(-3.0..3.0));
            let l = rng.gen_range(0..5);
            let s = s_matrix(l, p, k, SaeParam::Finite(tau))?;
            worst = worst.max((s.norm() - 1.0).abs());
        }
        for &p in &P_GRID {
            for l in 0..3 {
                let k = 1.3;
                let lim = |s: Complex<f64>, want: Complex<f64>| (s - want).norm();
                worst = worst.max(lim(s_matrix(l, p, k, SaeParam::zero())?, standard_s_matrix(l, p)));
                let add = standard_s_matrix(l, -p);
                worst = worst.max(lim(s_matrix(l, p, k, SaeParam::PlusInfinity)?, add));
                worst = worst.max(lim(s_matrix(l, p, k, SaeParam::MinusInfinity)?, add));
                // the additional amplitude written out with +P
                let explicit = Complex::from_polar(1.0, std::f64::consts::PI * (l as f64 + 0.5 + p));
                worst = worst.max(lim(add, explicit));
                // finite but huge τ approaches the additional sector
                let big = s_matrix(l, p, k, SaeParam::Finite(-1e15))?;
                worst = worst.max(lim(big, add) * 1e-3);
            }
        }
        Ok((worst, "100 random (k, tau, P) triples plus limit grid".to_string()))
    };
    match run() {
        Ok((w, d)) => report(4, name, w, TOL, d),
        Err(e) => failed(4, name, TOL, e),
    }
}

/// #5: equal-τ bound and scattering states are orthogonal; a mismatched τ is not.
pub fn orthogonality() -> CriterionReport {
    const TOL: f64 = 1e-4;
    const CONTROL: f64 = 1e-2;
    let name = "orthogonality";
    let run = || -> Result<(f64, String)> {
        let p: f64 = 0.25;
        let kappa = bound_energy(&PParameter::from_p(p)?, 1.0, SaeParam::Finite(-1.0))?.kappa;
        let r_max = 40.0 / kappa;
        let bound = OverlapState::Bound { tau: -1.0 };
        let same = orthogonality_integral_detailed(
            p,
            1.0,
            &bound,
            &OverlapState::Scattering { k: 1.0, tau: SaeParam::Finite(-1.0) },
            r_max,
        )?;
        let other = orthogonality_integral_detailed(
            p,
            1.0,
            &bound,
            &OverlapState::Scattering { k: 1.0, tau: SaeParam::zero() },
            r_max,
        )?;
        let ck = boundary_coeffs(&scattering_coeffs(SaeParam::Finite(-1.0), p, 0.7)?, p, 0.7)?;
        let ckp = boundary_coeffs(&scattering_coeffs(SaeParam::Finite(-1.0), p, 1.9)?, p, 1.9)?;
        let bracket = continuum_boundary_term(&ck, &ckp, p, 0.7, 1.9)?.abs();
        // Express everything as "smaller is better" against TOL.
        let control = if other.value.abs() > CONTROL { 0.0 } else { f64::INFINITY };
        let worst = same.value.abs().max(control).max(bracket / 1e-12 * TOL);
        Ok((
            worst,
            format!(
                "equal tau {:.2e}, mismatched {:.3e} (> {CONTROL:.0e}), continuum bracket {:.1e}",
                same.value.abs(),
                other.value.abs(),
                bracket
            ),
        ))
    };
    match run() {
        Ok((w, d)) => report(5, name, w, TOL, d),
        Err(e) => failed(5, name, TOL, e),
    }
}

/// #6: Bessel Wronskians and half-integer closed forms.
pub fn special_functions() -> CriterionReport {
    const TOL: f64 = 1e-10;
    let name = "special-function kernel";
    let run = || -> Result<(f64, String)> {
        let mut w_worst = 0.0_f64;
        for &nu in &[0.1, 0.25, 0.4] {
            for i in 0..=199 {
                let x = 0.1 + (20.0 - 0.1) * i as f64 / 199.0;
                let wik = bessel_i(nu, x)? * bessel_k_deriv(nu, x)?
                    - bessel_i_deriv(nu, x)? * bessel_k(nu, x)?;
                w_worst = w_worst.max((wik + 1.0 / x).abs());
                let wj = bessel_j(nu, x)? * bessel_j_deriv(-nu, x)?
                    - bessel_j_deriv(nu, x)? * bessel_j(-nu, x)?;
                let want = -2.0 * (nu * std::f64::consts::PI).sin() / (std::f64::consts::PI * x);
                w_worst = w_worst.max((wj - want).abs());
            }
        }
        let mut h_worst = 0.0_f64;
        for i in 1..=400 {
            let x = 0.05 * i as f64;
            let s = (2.0 / (std::f64::consts::PI * x)).sqrt();
            let rel = |a: f64, b: f64| ((a - b) / b).abs();
            // J oscillates through zero; measure it against its envelope
            h_worst = h_worst.max(((bessel_j(0.5, x)? - s * x.sin()) / s).abs());
            h_worst = h_worst.max(rel(bessel_i(0.5, x)?, s * x.sinh()));
            h_worst = h_worst.max(rel(bessel_i(-0.5, x)?, s * x.cosh()));
            let k = (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp();
            h_worst = h_worst.max((bessel_k(0.5, x)? - k).abs() / k);
        }
        // Scale the half-integer error onto the Wronskian tolerance.
        let worst = w_worst.max(h_worst / 1e-12 * TOL);
        Ok((worst, format!("Wronskian {w_worst:.1e}, half-integer {h_worst:.1e}")))
    };
    match run() {
        Ok((w, d)) => report(6, name, w, TOL, d),
        Err(e) => failed(6, name, TOL, e),
    }
}

/// #7: a single matching root over four decades and a nodeless wave function.
pub fn single_level() -> CriterionReport {
    let name = "single bound level";
    let run = || -> Result<(f64, String)> {
        let mut bad = 0usize;
        let mut details = Vec::new();
        for &(p, tau) in &[(0.25_f64, -1.0_f64), (0.1, -0.5), (0.45, -2.0)] {
            let center = default_bracket(p, 1.0, tau);
            let center = (center.0 * center.1).sqrt();
            let roots = scan_matching_roots(p, 1.0, tau, -center, 4.0, 240)?;
            let state = bound_energy(&PParameter::from_p(p)?, 1.0, SaeParam::Finite(tau))?;
            let mut sign_changes = 0;
            let mut prev = 0.0;
            for i in 0..1000 {
                let r = 10f64.powf(-6.0 + 9.0 * i as f64 / 999.0) / state.kappa;
                let v = bound_wavefunction(&state, 1.0, r)?;
                if prev != 0.0 && (v > 0.0) != (prev > 0.0) {
                    sign_changes += 1;
                }
                prev = v;
            }
            if roots.len() != 1 || sign_changes != 0 {
                bad += 1;
            }
            details.push(format!("P={p} tau={tau}: {} root(s), {} node(s)", roots.len(), sign_changes));
        }
        Ok((bad as f64, details.join("; ")))
    };
    match run() {
        Ok((w, d)) => report(7, name, w, 0.0, d),
        Err(e) => failed(7, name, 0.0, e),
    }
}

/// #8: regime assignment agrees with the window inequalities.
pub fn window_classification() -> CriterionReport {
    let name = "window classification";
    let mut rng = ChaCha8Rng::seed_from_u64(0x2132);
    let mut mismatches = 0usize;
    for _ in 0..10_000 {
        let l: u32 = rng.gen_range(0..=4);
        let x: f64 = rng.gen_range(0.0..25.0);
        let spec = match PotentialSpec::from_two_m_v0(1.0, x, l) {
            Ok(s) => s,
            Err(_) => {
                mismatches += 1;
                continue;
            }
        };
        let got = compute_p(&spec).regime;
        let ll = (l * (l + 1)) as f64;
        let ok = if x > ll && x < ll + 0.25 {
            got == Regime::Transitive
        } else if x <= ll {
            got.standard_only()
        } else if x > ll + 0.25 {
            got == Regime::Falling
        } else {
            got == Regime::Critical
        };
        if !ok {
            mismatches += 1;
        }
    }
    report(8, name, mismatches as f64, 0.0, "10^4 random (l <= 4, 2mV0 in [0, 25])".to_string())
}

fn max(v: &[f64]) -> f64 {
    v.iter().copied().fold(0.0, f64::max)
}
