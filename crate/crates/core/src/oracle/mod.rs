//! Independent numerical checks of the closed forms.
//!
//! The reduced radial equation u'' = [(P² - 1/4)/r² - 2mE] u is integrated
//! from Frobenius data whose coefficient ratio is τ. From the integrated
//! solutions we get the bound level by shooting, phase shifts by fitting the
//! asymptotic sine, and overlaps via the Wronskian boundary terms. None of
//! these routes call into [`crate::bound`] or [`crate::scattering`]; the
//! comparisons live in [`suite`].

mod integrate;
mod overlap;
mod phase;
mod shoot;
pub mod suite;

pub use integrate::{
    frobenius, initial_data, integrate_radial, propagate_linear, propagate_linear_steps, GridParams,
    RadialGrid, DEFAULT_LOCAL_TOL,
};
pub use overlap::{orthogonality_integral, orthogonality_integral_detailed, Overlap, OverlapState};
pub use phase::{extract_phase, extract_phase_with, fit_asymptote, PhaseFit, PhaseFitParams};
pub use shoot::{
    default_bracket, matching_function, scan_matching_roots, shoot_bound_energy, ShootResult,
    MATCH_EXTENT,
};

/// Distance between two angles modulo π, in [0, π/2].
pub fn phase_distance_mod_pi<T: crate::Real>(a: T, b: T) -> T {
    let pi = T::PI();
    let d = ((a - b) % pi + pi) % pi;
    d.min(pi - d)
}
