use crate::bound::SaeParam;
use crate::error::{domain, Error, Result};
use crate::scalar::{half, lit, two, Real};

use super::integrate::{integrate_radial, GridParams, DEFAULT_LOCAL_TOL};

/// Settings of the asymptotic phase fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseFitParams<T> {
    /// Outer radius expressed as k·r_max; must be at least 50π.
    pub kr_max: T,
    /// Number of oscillations (2π in kr) fitted at the end of the grid.
    pub oscillations: usize,
    pub local_tol: T,
    /// Maximum RMS residual relative to the fitted amplitude.
    pub max_residual: T,
}

impl<T: Real> Default for PhaseFitParams<T> {
    fn default() -> Self {
        Self {
            kr_max: lit::<T>(200.0) * T::PI(),
            oscillations: 10,
            local_tol: lit(DEFAULT_LOCAL_TOL),
            max_residual: lit(1e-4),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseFit<T> {
    /// Phase shift reduced to [0, π).
    pub delta: T,
    /// Asymptotic amplitude of u.
    pub amplitude: T,
    pub relative_residual: T,
}

/// Least-squares fit of u ≈ α sin θ + β cos θ over samples, with
/// θ = kr - lπ/2 + (P² - 1/4)/(2kr) (first-order WKB phase of the
/// inverse-square tail).
pub fn fit_asymptote<T: Real>(
    r: &[T],
    u: &[T],
    k: T,
    p: T,
    l: u32,
) -> Result<PhaseFit<T>> {
    if r.len() != u.len() || r.len() < 3 {
        return Err(domain("phase fit needs at least three samples"));
    }
    let c = p * p - lit(0.25);
    let shift = lit::<T>(l as f64) * T::FRAC_PI_2();
    let theta = |x: T| k * x - shift + c / (two::<T>() * k * x);
    let (mut ss, mut sc, mut cc, mut us, mut uc) =
        (T::zero(), T::zero(), T::zero(), T::zero(), T::zero());
    for (&x, &v) in r.iter().zip(u) {
        let (s, co) = theta(x).sin_cos();
        ss = ss + s * s;
        sc = sc + s * co;
        cc = cc + co * co;
        us = us + v * s;
        uc = uc + v * co;
    }
    let det = ss * cc - sc * sc;
    if det.abs() <= T::epsilon() * ss * cc {
        return Err(domain("phase fit basis is degenerate on the sample window"));
    }
    let alpha = (us * cc - uc * sc) / det;
    let beta = (uc * ss - us * sc) / det;
    let amplitude = (alpha * alpha + beta * beta).sqrt();
    let mut sq = T::zero();
    for (&x, &v) in r.iter().zip(u) {
        let (s, co) = theta(x).sin_cos();
        let e = v - alpha * s - beta * co;
        sq = sq + e * e;
    }
    let rms = (sq / lit(r.len() as f64)).sqrt();
    let mut delta = beta.atan2(alpha) % T::PI();
    if delta < T::zero() {
        delta = delta + T::PI();
    }
    Ok(PhaseFit { delta, amplitude, relative_residual: rms / amplitude })
}

/// Phase shift δ_l (mod π) read off the integrated radial solution at
/// momentum k for extension parameter τ.
pub fn extract_phase<T: Real>(k: T, p: T, tau: SaeParam<T>, l: u32) -> Result<T> {
    Ok(extract_phase_with(k, p, tau, l, &PhaseFitParams::default())?.delta)
}

pub fn extract_phase_with<T: Real>(
    k: T,
    p: T,
    tau: SaeParam<T>,
    l: u32,
    params: &PhaseFitParams<T>,
) -> Result<PhaseFit<T>> {
    if !(k > T::zero()) {
        return Err(domain(format!("momentum k = {k} must be positive")));
    }
    if params.kr_max < lit::<T>(50.0) * T::PI() {
        return Err(domain(format!("k r_max = {} is below 50 pi", params.kr_max)));
    }
    let window = two::<T>() * T::PI() * lit(params.oscillations as f64);
    if window >= params.kr_max - T::one() {
        return Err(domain("fit window longer than the grid"));
    }
    // ħ = 1, mass 1/2 so that 2mE = k².
    let mass = half::<T>();
    let energy = k * k;
    let mut grid = GridParams::scaled(k.recip(), params.kr_max);
    grid.local_tol = params.local_tol;
    let sol = integrate_radial(energy, p, mass, tau, &grid)?;
    let r_from = (params.kr_max - window) / k;
    let start = sol.r.partition_point(|&x| x < r_from);
    let fit = fit_asymptote(&sol.r[start..], &sol.u[start..], k, p, l)?;
    if !(fit.relative_residual <= params.max_residual) {
        return Err(Error::Fit(format!("{}", fit.relative_residual)));
    }
    Ok(fit)
}
