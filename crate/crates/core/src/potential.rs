//! Regime classification for V(r) = -V₀/r² plus the centrifugal barrier.
//!
//! Near the origin R(r) ~ a_st r^{-1/2+P} + a_add r^{-1/2-P} with
//! P² = (l + 1/2)² - 2mV₀. Both branches are square integrable at the
//! origin only for 0 < P < 1/2, which is the regime where an extension
//! parameter has to be chosen.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::scalar::{half, lit, two, Real};

/// |P| below this is treated as the critical point P = 0.
pub const CRITICAL_TOLERANCE: f64 = 1e-9;

/// One partial-wave problem: mass, strength of -V₀/r² and orbital momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSpec<T> {
    pub mass: T,
    pub v0: T,
    pub l: u32,
}

impl<T: Real> PotentialSpec<T> {
    pub fn new(mass: T, v0: T, l: u32) -> Result<Self> {
        if !(mass > T::zero()) || !mass.is_finite() {
            return Err(domain(format!("mass = {mass} must be positive")));
        }
        if !v0.is_finite() {
            return Err(domain(format!("v0 = {v0} must be finite")));
        }
        Ok(Self { mass, v0, l })
    }

    /// Builds the spec from the dimensionless strength 2mV₀.
    pub fn from_two_m_v0(mass: T, two_m_v0: T, l: u32) -> Result<Self> {
        Self::new(mass, two_m_v0 / (two::<T>() * mass), l)
    }

    pub fn two_m_v0(&self) -> T {
        two::<T>() * self.mass * self.v0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// V₀ = 0 exactly; a special case of `StandardOnly`.
    RegularFree,
    /// P >= 1/2: only the r^{-1/2+P} branch is admissible.
    StandardOnly,
    /// 0 < P < 1/2: both branches admissible, one extension parameter.
    Transitive,
    /// P = 0 within tolerance; classified but not solved.
    Critical,
    /// P² < 0: falling to the center.
    Falling,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::RegularFree => "RegularFree",
            Regime::StandardOnly => "StandardOnly",
            Regime::Transitive => "Transitive",
            Regime::Critical => "Critical",
            Regime::Falling => "Falling",
        }
    }

    /// True for the two regimes where only the standard solution survives.
    pub fn standard_only(self) -> bool {
        matches!(self, Regime::RegularFree | Regime::StandardOnly)
    }

    fn reason(self) -> &'static str {
        match self {
            Regime::RegularFree | Regime::StandardOnly => {
                "P >= 1/2, no additional solution and no extension parameter"
            }
            Regime::Transitive => "0 < P < 1/2",
            Regime::Critical => "P = 0 is excluded from the level formula",
            Regime::Falling => "falling to the center, not solvable",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The exponent P together with its regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PParameter<T> {
    pub p_squared: T,
    pub regime: Regime,
}

impl<T: Real> PParameter<T> {
    /// P, or `None` in the falling regime where it is imaginary.
    pub fn p(&self) -> Option<T> {
        (self.p_squared >= T::zero()).then(|| self.p_squared.sqrt())
    }

    /// P if the regime is `Transitive`, otherwise a regime error.
    pub fn transitive(&self) -> Result<T> {
        match (self.regime, self.p()) {
            (Regime::Transitive, Some(p)) => Ok(p),
            _ => Err(self.regime_error()),
        }
    }

    pub fn regime_error(&self) -> Error {
        Error::Regime {
            regime: self.regime.name().to_string(),
            reason: self.regime.reason().to_string(),
        }
    }

    /// Builds a transitive P directly, bypassing the potential.
    pub fn from_p(p: T) -> Result<Self> {
        let out = classify(p * p, false);
        if out.regime == Regime::Transitive {
            Ok(out)
        } else {
            Err(domain(format!("P = {p} must lie in (0, 1/2)")))
        }
    }
}

fn classify<T: Real>(p_squared: T, free: bool) -> PParameter<T> {
    let regime = if p_squared < T::zero() {
        Regime::Falling
    } else {
        let p = p_squared.sqrt();
        if p < lit(CRITICAL_TOLERANCE) {
            Regime::Critical
        } else if p < half() {
            Regime::Transitive
        } else if free {
            Regime::RegularFree
        } else {
            Regime::StandardOnly
        }
    };
    PParameter { p_squared, regime }
}

/// P² = (l + 1/2)² - 2mV₀ and the regime it falls in.
pub fn compute_p<T: Real>(spec: &PotentialSpec<T>) -> PParameter<T> {
    let lh = lit::<T>(spec.l as f64) + half();
    classify(lh * lh - spec.two_m_v0(), spec.v0 == T::zero())
}

/// Open interval of 2mV₀ in which partial wave `l` has an additional solution.
pub fn additional_window<T: Real>(l: u32) -> (T, T) {
    let lo = lit::<T>(l as f64 * (l as f64 + 1.0));
    (lo, lo + lit(0.25))
}

/// (P² - 1/4) / (2 m r²).
pub fn anticentrifugal<T: Real>(p: &PParameter<T>, mass: T, r: T) -> Result<T> {
    if !(r > T::zero()) {
        return Err(domain(format!("radius r = {r} must be positive")));
    }
    if !(mass > T::zero()) {
        return Err(domain(format!("mass = {mass} must be positive")));
    }
    Ok((p.p_squared - lit(0.25)) / (two::<T>() * mass * r * r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let s = PotentialSpec::from_two_m_v0(1.0_f64, 0.21, 0).unwrap();
        let p = compute_p(&s);
        assert_eq!(p.regime, Regime::Transitive);
        assert!((p.p().unwrap() - 0.2).abs() < 1e-15);

        let free = compute_p(&PotentialSpec::new(1.0, 0.0, 0).unwrap());
        assert_eq!(free.regime, Regime::RegularFree);
        assert!(free.regime.standard_only());
        assert_eq!(free.p(), Some(0.5));

        let fall = compute_p(&PotentialSpec::from_two_m_v0(1.0_f64, 0.30, 0).unwrap());
        assert_eq!(fall.regime, Regime::Falling);
        assert!((fall.p_squared + 0.05).abs() < 1e-15);
        assert!(fall.p().is_none());
        assert!(fall.transitive().is_err());
    }

    #[test]
    fn critical_and_repulsive() {
        let crit = compute_p(&PotentialSpec::from_two_m_v0(1.0, 0.25, 0).unwrap());
        assert_eq!(crit.regime, Regime::Critical);
        let rep = compute_p(&PotentialSpec::new(1.0, -3.0, 1).unwrap());
        assert_eq!(rep.regime, Regime::StandardOnly);
    }

    #[test]
    fn windows() {
        assert_eq!(additional_window::<f64>(0), (0.0, 0.25));
        assert_eq!(additional_window::<f64>(1), (2.0, 2.25));
        assert_eq!(additional_window::<f64>(2), (6.0, 6.25));
    }

    #[test]
    fn anticentrifugal_values() {
        let half_p = PParameter { p_squared: 0.25, regime: Regime::StandardOnly };
        assert_eq!(anticentrifugal(&half_p, 1.0, 1.0).unwrap(), 0.0);
        let p = PParameter::from_p(0.2_f64).unwrap();
        assert!((anticentrifugal(&p, 1.0, 1.0).unwrap() + 0.105).abs() < 1e-15);
        assert!((anticentrifugal(&p, 1.0, 0.5).unwrap() + 0.42).abs() < 1e-14);
        assert!(anticentrifugal(&p, 1.0, 0.0).is_err());
    }

    #[test]
    fn invalid_spec() {
        assert!(PotentialSpec::new(0.0, 1.0, 0).is_err());
        assert!(PotentialSpec::new(-1.0, 1.0, 0).is_err());
        assert!(PotentialSpec::new(1.0, f64::NAN, 0).is_err());
    }
}
