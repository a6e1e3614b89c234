//! Real-order special functions: Γ and the Bessel family J, I, K for
//! orders strictly inside (-1, 1).
//!
//! Everything here is pure; there is no cached state.

mod bessel;
mod gamma;

pub use bessel::{
    bessel_i, bessel_i_deriv, bessel_j, bessel_j_deriv, bessel_k, bessel_k_deriv, i_large,
    i_series, j_large, j_series, k_large, k_reflection, k_switch, series_switch,
};
pub use gamma::{gamma_ratio, gamma_real};

/// Bessel order restricted to the open interval (-1, 1).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order<T>(T);

impl<T: crate::Real> Order<T> {
    pub fn new(nu: T) -> crate::Result<Self> {
        if nu.is_finite() && nu.abs() < T::one() {
            Ok(Self(nu))
        } else {
            Err(crate::error::domain(format!("Bessel order {nu} outside (-1, 1)")))
        }
    }

    pub fn get(self) -> T {
        self.0
    }

    pub fn negated(self) -> Self {
        Self(-self.0)
    }
}
