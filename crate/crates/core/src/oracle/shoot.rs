use crate::bound::SaeParam;
use crate::error::{domain, Error, Result};
use crate::scalar::{half, lit, two, Real};
use crate::specfun::{bessel_k, bessel_k_deriv};

use super::integrate::{integrate_radial, GridParams};

/// Matching radius in units of 1/κ.
pub const MATCH_EXTENT: f64 = 10.0;

/// Outcome of a bound-state shooting run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootResult<T> {
    pub energy: T,
    pub iterations: usize,
    /// Normalised Wronskian mismatch at the matching radius.
    pub residual: T,
    /// Sign changes of the inward-integrated u up to the matching radius.
    pub nodes: usize,
}

/// Mismatch between the outward solution fixed by τ and the decaying
/// outer solution √r K_P(κr), as the sine of the angle between the two
/// vectors (u, u'/κ) at r_match = 10/κ.
///
/// For this potential the Wronskian of the two is independent of r, so the
/// sign change of this function marks the level regardless of r_match.
pub fn matching_function<T: Real>(energy: T, p: T, mass: T, tau: T) -> Result<(T, usize)> {
    if !(energy < T::zero()) {
        return Err(domain(format!("bound-state energy must be negative, got {energy}")));
    }
    let kappa = (-two::<T>() * mass * energy).sqrt();
    let grid = GridParams::for_energy(energy, mass, lit(MATCH_EXTENT));
    let sol = integrate_radial(energy, p, mass, SaeParam::Finite(tau), &grid)?;
    let (r, u, du) = sol.last();
    let x = kappa * r;
    let k = bessel_k(p, x)?;
    let sr = r.sqrt();
    let v = sr * k;
    let dv = half::<T>() * v / r + sr * kappa * bessel_k_deriv(p, x)?;
    let w = u * dv - du * v;
    let nu = (u * u + du * du / (kappa * kappa)).sqrt();
    let nv = (v * v + dv * dv / (kappa * kappa)).sqrt();
    Ok((w / (kappa * nu * nv), sol.count_nodes()))
}

/// Bisects the matching function in ln|E| inside `bracket`
/// (two negative energies) down to a relative width of 1e-12.
pub fn shoot_bound_energy<T: Real>(
    p: T,
    mass: T,
    tau: T,
    bracket: (T, T),
) -> Result<ShootResult<T>> {
    if !(tau < T::zero()) || !tau.is_finite() {
        return Err(domain(format!("shooting needs finite tau < 0, got {tau}")));
    }
    let (e1, e2) = bracket;
    if !(e1 < T::zero() && e2 < T::zero()) || e1 == e2 {
        return Err(domain(format!("bracket [{e1}, {e2}] must hold two distinct negative energies")));
    }
    let no_change = || Error::NoSignChange { lo: format!("{e1}"), hi: format!("{e2}") };
    let mut lo = e1.abs().min(e2.abs()).ln();
    let mut hi = e1.abs().max(e2.abs()).ln();
    let mut f_lo = matching_function(-lo.exp(), p, mass, tau)?.0;
    let f_hi = matching_function(-hi.exp(), p, mass, tau)?.0;
    if f_lo == T::zero() {
        hi = lo;
    } else if f_hi == T::zero() {
        lo = hi;
    } else if (f_lo > T::zero()) == (f_hi > T::zero()) {
        return Err(no_change());
    }
    let tol = lit::<T>(1e-12);
    let mut iterations = 0;
    while hi - lo > tol && iterations < 200 {
        iterations += 1;
        let mid = half::<T>() * (lo + hi);
        let f_mid = matching_function(-mid.exp(), p, mass, tau)?.0;
        if f_mid == T::zero() {
            lo = mid;
            hi = mid;
            break;
        }
        if (f_mid > T::zero()) == (f_lo > T::zero()) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let energy = -(half::<T>() * (lo + hi)).exp();
    let (residual, nodes) = matching_function(energy, p, mass, tau)?;
    Ok(ShootResult { energy, iterations, residual: residual.abs(), nodes })
}

/// Bracket of four decades in κ around the dimensional scale |τ|^{-1/(2P)}.
///
/// Uses only the units of τ, not the closed-form level.
pub fn default_bracket<T: Real>(p: T, mass: T, tau: T) -> (T, T) {
    let kappa_scale = tau.abs().powf(-(two::<T>() * p).recip());
    let e = |kappa: T| -kappa * kappa / (two::<T>() * mass);
    (e(kappa_scale * lit(100.0)), e(kappa_scale / lit(100.0)))
}

/// Energies (geometric midpoints) at which the matching function changes
/// sign on a log-spaced scan of `samples` points spanning `decades` decades
/// of |E| centred on `center`.
pub fn scan_matching_roots<T: Real>(
    p: T,
    mass: T,
    tau: T,
    center: T,
    decades: T,
    samples: usize,
) -> Result<Vec<T>> {
    if samples < 2 {
        return Err(domain("scan needs at least two samples"));
    }
    let lc = center.abs().ln();
    let span = decades * lit::<T>(10.0).ln();
    let lo = lc - half::<T>() * span;
    let step = span / lit((samples - 1) as f64);
    let mut roots = Vec::new();
    let mut prev: Option<(T, T)> = None;
    for i in 0..samples {
        let le = lo + step * lit(i as f64);
        let f = matching_function(-le.exp(), p, mass, tau)?.0;
        if let Some((lp, fp)) = prev {
            if (fp > T::zero()) != (f > T::zero()) || f == T::zero() {
                roots.push(-(half::<T>() * (lp + le)).exp());
            }
        }
        prev = Some((le, f));
    }
    Ok(roots)
}
