//! Discrete sector: the extension parameter τ, the single bound level and
//! its wave function.
//!
//! Coefficients always refer to R(r) = a_st r^{-1/2+P} + a_add r^{-1/2-P};
//! the reduced function u = rR carries the same numbers.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::potential::PParameter;
use crate::scalar::{half, lit, two, Real};
use crate::specfun::{bessel_k, gamma_ratio};

/// Extension parameter τ = a_add / a_st.
///
/// τ has dimension length^{2P}. The two pure sectors τ = ±∞ (only the
/// additional solution) are kept symbolic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SaeParam<T> {
    Finite(T),
    PlusInfinity,
    MinusInfinity,
}

impl<T: Real> SaeParam<T> {
    pub fn finite(tau: T) -> Result<Self> {
        if tau.is_finite() {
            Ok(SaeParam::Finite(tau))
        } else if tau.is_nan() {
            Err(domain("tau is NaN"))
        } else if tau > T::zero() {
            Ok(SaeParam::PlusInfinity)
        } else {
            Ok(SaeParam::MinusInfinity)
        }
    }

    pub fn zero() -> Self {
        SaeParam::Finite(T::zero())
    }

    pub fn value(&self) -> Option<T> {
        match *self {
            SaeParam::Finite(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        !matches!(self, SaeParam::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(*self, SaeParam::Finite(t) if t == T::zero())
    }

    /// Lossy conversion for serialisation; the infinities map to ±∞.
    pub fn to_float(&self) -> T {
        match *self {
            SaeParam::Finite(t) => t,
            SaeParam::PlusInfinity => T::infinity(),
            SaeParam::MinusInfinity => T::neg_infinity(),
        }
    }
}

impl<T: Real> fmt::Display for SaeParam<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SaeParam::Finite(t) => write!(f, "{t}"),
            SaeParam::PlusInfinity => f.write_str("inf"),
            SaeParam::MinusInfinity => f.write_str("-inf"),
        }
    }
}

impl<T: Real + FromStr> FromStr for SaeParam<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "infinity" | "+infinity" => Ok(SaeParam::PlusInfinity),
            "-inf" | "-infinity" => Ok(SaeParam::MinusInfinity),
            other => other
                .parse::<T>()
                .map_err(|_| domain(format!("cannot parse tau from {s:?}")))
                .and_then(SaeParam::finite),
        }
    }
}

/// Small-r coefficients of the standard and additional branches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryCoeffs<T> {
    pub a_st: T,
    pub a_add: T,
}

impl<T: Real> BoundaryCoeffs<T> {
    pub fn new(a_st: T, a_add: T) -> Result<Self> {
        if a_st == T::zero() && a_add == T::zero() {
            return Err(domain("boundary coefficients are both zero"));
        }
        Ok(Self { a_st, a_add })
    }

    /// Unit-standard-coefficient representative of an extension parameter.
    pub fn from_tau(tau: SaeParam<T>) -> Self {
        match tau {
            SaeParam::Finite(t) => Self { a_st: T::one(), a_add: t },
            SaeParam::PlusInfinity => Self { a_st: T::zero(), a_add: T::one() },
            SaeParam::MinusInfinity => Self { a_st: T::zero(), a_add: -T::one() },
        }
    }

    pub fn tau(&self) -> SaeParam<T> {
        if self.a_st == T::zero() {
            if self.a_add > T::zero() {
                SaeParam::PlusInfinity
            } else {
                SaeParam::MinusInfinity
            }
        } else {
            SaeParam::Finite(self.a_add / self.a_st)
        }
    }

    pub fn scaled(&self, s: T) -> Self {
        Self { a_st: self.a_st * s, a_add: self.a_add * s }
    }
}

/// P (a1_st a2_add - a1_add a2_st): the boundary term that spoils
/// orthogonality of two levels. Vanishes iff both share one τ.
pub fn orthogonality_defect<T: Real>(c1: &BoundaryCoeffs<T>, c2: &BoundaryCoeffs<T>, p: T) -> T {
    p * (c1.a_st * c2.a_add - c1.a_add * c2.a_st)
}

/// τ induced by R = r^{-1/2} [A I_P(kr) + B I_{-P}(kr)]:
/// τ = (B/A) (k/2)^{-2P} Γ(1+P)/Γ(1-P).
pub fn tau_from_coeffs<T: Real>(a: T, b: T, k: T, p: T) -> Result<SaeParam<T>> {
    if a == T::zero() {
        return Err(domain("A = 0 gives tau = infinity; use SaeParam::PlusInfinity"));
    }
    if !(k > T::zero()) {
        return Err(domain(format!("k = {k} must be positive")));
    }
    check_p(p)?;
    let ratio = gamma_ratio(p)?;
    SaeParam::finite(b / a * (k * half()).powf(-two::<T>() * p) * ratio)
}

pub(crate) fn check_p<T: Real>(p: T) -> Result<()> {
    if !(p > T::zero() && p < half()) {
        return Err(domain(format!("P = {p} must lie in (0, 1/2)")));
    }
    Ok(())
}

/// The single bound level of a transitive partial wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState<T> {
    pub energy: T,
    pub kappa: T,
    pub mass: T,
    pub p: PParameter<T>,
    pub tau: SaeParam<T>,
    /// K_P has no zeros on the positive axis, so this is always true.
    pub node_free: bool,
}

impl<T: Real> BoundState<T> {
    pub fn p_value(&self) -> T {
        self.p.p().unwrap_or_else(T::nan)
    }
}

/// E = -(2/m) [Γ(1+P)/Γ(1-P)]^{1/P} (-1/τ)^{1/P}, equivalently
/// κ = 2 [Γ(1+P) / (Γ(1-P)(-τ))]^{1/(2P)}.
pub fn bound_energy<T: Real>(p: &PParameter<T>, mass: T, tau: SaeParam<T>) -> Result<BoundState<T>> {
    let pv = p.transitive()?;
    if !(mass > T::zero()) {
        return Err(domain(format!("mass = {mass} must be positive")));
    }
    let t = match tau {
        SaeParam::Finite(t) => t,
        _ => {
            return Err(Error::NoBoundState(format!(
                "tau = {tau}: pure additional sector is scale invariant"
            )))
        }
    };
    if t == T::zero() {
        return Err(Error::NoBoundState(
            "tau = 0: standard sector is scale invariant".to_string(),
        ));
    }
    if t > T::zero() {
        return Err(Error::ComplexEnergy(format!("{t}")));
    }
    let ratio = gamma_ratio(pv)?;
    let kappa = two::<T>() * (ratio / (-t)).powf((two::<T>() * pv).recip());
    Ok(BoundState {
        energy: -kappa * kappa / (two::<T>() * mass),
        kappa,
        mass,
        p: *p,
        tau,
        node_free: true,
    })
}

/// R(r) = -A (2/π) r^{-1/2} sin(Pπ) K_P(κr).
pub fn bound_wavefunction<T: Real>(state: &BoundState<T>, amplitude: T, r: T) -> Result<T> {
    if !(r > T::zero()) {
        return Err(domain(format!("radius r = {r} must be positive")));
    }
    let p = state.p.transitive()?;
    let k = bessel_k(p, state.kappa * r)?;
    Ok(-amplitude * two::<T>() / T::PI() * r.sqrt().recip() * (p * T::PI()).sin() * k)
}

/// Amplitude A for which ∫ |R|² r² dr = 1.
///
/// The integral of x K_P(x)² is taken with Simpson's rule on a logarithmic
/// grid; the small-x head uses the leading power law and the tail beyond
/// x = 40 uses the bound (π/4) e^{-2x}.
pub fn unit_norm_amplitude<T: Real>(state: &BoundState<T>) -> Result<T> {
    let p = state.p.transitive()?;
    let integral = x_k_squared_integral(p)?;
    let s = two::<T>() / T::PI() * (p * T::PI()).sin();
    // ∫ R² r² dr = A² s² ∫ r K_P(κr)² dr = A² s² I / κ².
    Ok(state.kappa / (s * integral.sqrt()))
}

pub(crate) fn x_k_squared_integral<T: Real>(p: T) -> Result<T> {
    let x_lo = lit::<T>(1e-8);
    let x_hi = lit::<T>(40.0);
    let n = 8000usize;
    let (t0, t1) = (x_lo.ln(), x_hi.ln());
    let h = (t1 - t0) / lit(n as f64);
    let mut sum = T::zero();
    for i in 0..=n {
        let x = (t0 + h * lit(i as f64)).exp();
        let k = bessel_k(p, x)?;
        // dx = x dt
        let f = x * x * k * k;
        let w = if i == 0 || i == n {
            T::one()
        } else if i % 2 == 1 {
            lit(4.0)
        } else {
            two()
        };
        sum = sum + w * f;
    }
    let body = sum * h / lit(3.0);
    // x K_P(x)² ≈ x (Γ(P)/2)² (x/2)^{-2P} near the origin.
    let g = crate::specfun::gamma_real(p)? * half();
    let head = g * g * two::<T>().powf(two::<T>() * p) * x_lo.powf(two::<T>() - two::<T>() * p)
        / (two::<T>() - two::<T>() * p);
    let tail = T::FRAC_PI_4() * (-two::<T>() * x_hi).exp();
    Ok(head + body + tail)
}

/// Zero-energy node r₀ = (-B/A)^{1/(2P)} of A r^{-1/2+P} + B r^{-1/2-P}.
pub fn node_radius<T: Real>(a: T, b: T, p: T) -> Result<T> {
    if a == T::zero() {
        return Err(domain("A = 0: pure additional solution has no node"));
    }
    check_p(p)?;
    let ratio = -b / a;
    if ratio <= T::zero() {
        return Err(Error::NoNode(format!("{ratio}")));
    }
    Ok(ratio.powf((two::<T>() * p).recip()))
}
