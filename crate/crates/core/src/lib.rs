//! Self-adjoint extension of the attractive inverse-square potential in the
//! three-dimensional radial Schrödinger equation (ħ = 1, k² = 2mE).
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: Γ and real-order Bessel functions J, I, K.
//! * [`potential`]: the P exponent, regime classification and the
//!   anti-centrifugal effective potential.
//! * [`bound`]: the extension parameter τ, the single bound level and its
//!   Macdonald-function wave function.
//! * [`scattering`]: the τ-modified partial-wave S-matrix, phase shifts and
//!   the bound-state pole.
//! * [`oracle`]: direct integration of the radial equation, used to check
//!   every closed form independently.
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below fix the scalar to `f64`.

// `!(x > 0)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bound;
pub mod error;
pub mod oracle;
pub mod potential;
pub mod scalar;
pub mod scattering;
pub mod specfun;

pub use error::{Error, Result};
pub use scalar::Real;

pub use bound::{BoundState, BoundaryCoeffs, SaeParam};
pub use oracle::{RadialGrid, ShootResult};
pub use potential::{PParameter, PotentialSpec, Regime};
pub use scattering::{LambdaParam, PartialWave, ScatteringCoeffs};

pub type PotentialSpec64 = PotentialSpec<f64>;
pub type PParameter64 = PParameter<f64>;
pub type SaeParam64 = SaeParam<f64>;
pub type BoundaryCoeffs64 = BoundaryCoeffs<f64>;
pub type BoundState64 = BoundState<f64>;
pub type PartialWave64 = PartialWave<f64>;
pub type LambdaParam64 = LambdaParam<f64>;
pub type ScatteringCoeffs64 = ScatteringCoeffs<f64>;
pub type RadialGrid64 = RadialGrid<f64>;
pub type ShootResult64 = ShootResult<f64>;

pub type PotentialSpec32 = PotentialSpec<f32>;
pub type PParameter32 = PParameter<f32>;
pub type SaeParam32 = SaeParam<f32>;
pub type BoundState32 = BoundState<f32>;
pub type PartialWave32 = PartialWave<f32>;
