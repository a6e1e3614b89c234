//! Continuum sector: the τ-modified partial-wave S-matrix, the standard/SAE
//! phase decomposition, the bound-state pole and the δ-normalised
//! scattering solution R = √(k/r) [A J_P(kr) + B J_{-P}(kr)].
//!
//! The single user-facing extension parameter is τ = a_add / a_st, the same
//! number that fixes the bound level. It enters the S-matrix through the
//! dimensionless combination
//!
//! ```text
//! λ(k) = τ Γ(1-P)/Γ(1+P) (k/2)^{2P}  (= B/A)
//! S_l  = e^{iπ(l+1/2-P)} (1 + λ e^{iπP}) / (1 + λ e^{-iπP})
//! ```

use num_complex::Complex;

use crate::bound::{check_p, BoundaryCoeffs, SaeParam};
use crate::error::{domain, Error, Result};
use crate::potential::CRITICAL_TOLERANCE;
use crate::scalar::{half, lit, two, Real};
use crate::specfun::{bessel_j, gamma_ratio, gamma_real};

/// λ(k) = τ Γ(1-P)/Γ(1+P) (k/2)^{2P}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaParam<T> {
    pub lam: T,
}

/// One partial wave at momentum k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialWave<T> {
    pub l: u32,
    pub p: T,
    pub k: T,
    pub tau: SaeParam<T>,
    pub s_matrix: Complex<T>,
    pub delta_total: T,
    pub delta_standard: T,
    pub delta_sae: T,
}

impl<T: Real> PartialWave<T> {
    /// Sign of the total phase: positive reads as net attraction.
    pub fn attractive(&self) -> bool {
        self.delta_total > T::zero()
    }
}

/// Coefficients of J_P and J_{-P} in the δ-normalised scattering solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringCoeffs<T> {
    pub a: T,
    pub b: T,
}

fn check_k<T: Real>(k: T) -> Result<()> {
    if !(k > T::zero()) || !k.is_finite() {
        return Err(domain(format!("momentum k = {k} must be positive and finite")));
    }
    Ok(())
}

// τ = 0 is admissible for any P > 0; any other τ needs 0 < P < 1/2.
fn check_sector<T: Real>(p: T, tau: &SaeParam<T>) -> Result<()> {
    if !(p > lit(CRITICAL_TOLERANCE)) {
        return Err(domain(format!("P = {p} must be positive (P = 0 is critical)")));
    }
    if !tau.is_zero() && p >= half() {
        return Err(domain(format!(
            "tau = {tau} needs an additional solution, which P = {p} >= 1/2 does not admit"
        )));
    }
    Ok(())
}

pub fn lambda_of_k<T: Real>(tau: SaeParam<T>, p: T, k: T) -> Result<LambdaParam<T>> {
    check_k(k)?;
    let t = tau
        .value()
        .ok_or_else(|| domain("lambda is infinite for tau = +-inf"))?;
    if t == T::zero() {
        return Ok(LambdaParam { lam: T::zero() });
    }
    check_p(p)?;
    let lam = t / gamma_ratio(p)? * (k * half()).powf(two::<T>() * p);
    Ok(LambdaParam { lam })
}

/// e^{iπ(l+1/2-P)}, the standard-sector amplitude, for any real P.
///
/// With P replaced by -P this is the pure additional amplitude.
pub fn standard_s_matrix<T: Real>(l: u32, p: T) -> Complex<T> {
    Complex::from_polar(T::one(), T::PI() * (lit::<T>(l as f64) + half() - p))
}

/// S_l at real momentum k.
pub fn s_matrix<T: Real>(l: u32, p: T, k: T, tau: SaeParam<T>) -> Result<Complex<T>> {
    check_k(k)?;
    check_sector(p, &tau)?;
    let lh = lit::<T>(l as f64) + half();
    match tau {
        SaeParam::PlusInfinity | SaeParam::MinusInfinity => {
            Ok(Complex::from_polar(T::one(), T::PI() * (lh + p)))
        }
        SaeParam::Finite(_) => {
            let standard = Complex::from_polar(T::one(), T::PI() * (lh - p));
            let lam = lambda_of_k(tau, p, k)?.lam;
            if lam == T::zero() {
                return Ok(standard);
            }
            let e = Complex::from_polar(T::one(), T::PI() * p);
            let num = Complex::new(T::one(), T::zero()) + e.scale(lam);
            let den = Complex::new(T::one(), T::zero()) + e.conj().scale(lam);
            if den.norm_sqr() == T::zero() {
                return Err(Error::PoleOnAxis);
            }
            Ok(standard * num / den)
        }
    }
}

/// δ_SAE = arg(1 + λ e^{iπP}), continuous in k with δ_SAE(k → 0) = 0.
fn delta_sae<T: Real>(tau: SaeParam<T>, p: T, k: T) -> Result<T> {
    match tau {
        SaeParam::PlusInfinity => Ok(T::PI() * p),
        SaeParam::MinusInfinity => Ok(T::PI() * p - T::PI()),
        SaeParam::Finite(_) => {
            let lam = lambda_of_k(tau, p, k)?.lam;
            let (s, c) = (T::PI() * p).sin_cos();
            let den = T::one() + lam * c;
            let num = lam * s;
            if num == T::zero() && den == T::zero() {
                return Err(Error::PoleOnAxis);
            }
            Ok(num.atan2(den))
        }
    }
}

/// Fills a [`PartialWave`]: δ_st = (l + 1/2 - P)π/2 plus δ_SAE.
pub fn phase_shift<T: Real>(l: u32, p: T, k: T, tau: SaeParam<T>) -> Result<PartialWave<T>> {
    let s = s_matrix(l, p, k, tau)?;
    let delta_standard = (lit::<T>(l as f64) + half() - p) * T::FRAC_PI_2();
    let delta_sae = delta_sae(tau, p, k)?;
    Ok(PartialWave {
        l,
        p,
        k,
        tau,
        s_matrix: s,
        delta_total: delta_standard + delta_sae,
        delta_standard,
        delta_sae,
    })
}

/// Energy of the S-matrix pole on the positive imaginary k axis.
///
/// With k = iκ and (iκ)^{2P} = e^{iπP} κ^{2P}, the denominator
/// 1 + λ(iκ) e^{-iπP} vanishes at real κ only for τ < 0.
pub fn pole_energy<T: Real>(tau: SaeParam<T>, p: T, mass: T) -> Result<T> {
    check_p(p)?;
    if !(mass > T::zero()) {
        return Err(domain(format!("mass = {mass} must be positive")));
    }
    let t = match tau {
        SaeParam::Finite(t) if t < T::zero() => t,
        _ => return Err(Error::NoPole(format!("tau = {tau} (pole needs finite tau < 0)"))),
    };
    // 1 + c κ^{2P} = 0 with c = τ Γ(1-P)/Γ(1+P) 2^{-2P} i^{2P} e^{-iπP}
    let i_pow = Complex::new(T::zero(), T::one()).powf(two::<T>() * p);
    let c = i_pow
        * Complex::from_polar(T::one(), -T::PI() * p)
        * (t * gamma_real(T::one() - p)? / gamma_real(T::one() + p)?
            * two::<T>().powf(-two::<T>() * p));
    if c.im.abs() > lit::<T>(1e3) * T::epsilon() * c.norm() {
        return Err(Error::NoPole(format!("pole condition off the real kappa axis: {c}")));
    }
    let kappa_2p = -c.re.recip();
    if !(kappa_2p > T::zero()) {
        return Err(Error::NoPole(format!("tau = {tau}: kappa^(2P) = {kappa_2p}")));
    }
    let kappa = kappa_2p.powf((two::<T>() * p).recip());
    Ok(-kappa * kappa / (two::<T>() * mass))
}

/// A, B of the δ-normalised solution: B/A = λ(k), A² (λ² + 2λ cos πP + 1) = 2π.
pub fn scattering_coeffs<T: Real>(tau: SaeParam<T>, p: T, k: T) -> Result<ScatteringCoeffs<T>> {
    check_k(k)?;
    check_sector(p, &tau)?;
    let norm = (two::<T>() * T::PI()).sqrt();
    match tau {
        SaeParam::PlusInfinity => Ok(ScatteringCoeffs { a: T::zero(), b: norm }),
        SaeParam::MinusInfinity => Ok(ScatteringCoeffs { a: T::zero(), b: -norm }),
        SaeParam::Finite(_) => {
            let lam = lambda_of_k(tau, p, k)?.lam;
            let bracket = lam * lam + two::<T>() * lam * (T::PI() * p).cos() + T::one();
            if !(bracket > T::zero()) {
                return Err(domain(format!("normalisation bracket {bracket} vanishes")));
            }
            let a = (two::<T>() * T::PI() / bracket).sqrt();
            Ok(ScatteringCoeffs { a, b: lam * a })
        }
    }
}

/// R(r) = √(k/r) [A J_P(kr) + B J_{-P}(kr)].
pub fn radial_scattering_wf<T: Real>(c: &ScatteringCoeffs<T>, p: T, k: T, r: T) -> Result<T> {
    check_k(k)?;
    if !(r > T::zero()) {
        return Err(domain(format!("radius r = {r} must be positive")));
    }
    let x = k * r;
    let mut sum = T::zero();
    if c.a != T::zero() {
        sum = sum + c.a * bessel_j(p, x)?;
    }
    if c.b != T::zero() {
        sum = sum + c.b * bessel_j(-p, x)?;
    }
    Ok((k / r).sqrt() * sum)
}

/// Small-r coefficients of u = rR induced by A, B:
/// a_st = A k^{1/2+P} / (2^P Γ(1+P)), a_add = B k^{1/2-P} 2^P / Γ(1-P).
pub fn boundary_coeffs<T: Real>(c: &ScatteringCoeffs<T>, p: T, k: T) -> Result<BoundaryCoeffs<T>> {
    check_k(k)?;
    let two_p = two::<T>().powf(p);
    let a_st = c.a * k.powf(half::<T>() + p) / (two_p * gamma_real(T::one() + p)?);
    let a_add = if c.b == T::zero() {
        T::zero()
    } else {
        c.b * k.powf(half::<T>() - p) * two_p / gamma_real(T::one() - p)?
    };
    BoundaryCoeffs::new(a_st, a_add)
}

/// Lower-boundary Wronskian term of the continuum overlap,
/// 2P / (k'² - k²) {a_st(k) a_add(k') - a_st(k') a_add(k)}.
pub fn continuum_boundary_term<T: Real>(
    at_k: &BoundaryCoeffs<T>,
    at_kp: &BoundaryCoeffs<T>,
    p: T,
    k: T,
    kp: T,
) -> Result<T> {
    let dk2 = kp * kp - k * k;
    if dk2 == T::zero() {
        return Err(Error::Degenerate("k' = k".to_string()));
    }
    Ok(two::<T>() * p / dk2 * (at_k.a_st * at_kp.a_add - at_kp.a_st * at_k.a_add))
}
