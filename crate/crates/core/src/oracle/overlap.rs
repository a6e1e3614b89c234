use crate::bound::SaeParam;
use crate::error::{domain, Error, Result};
use crate::scalar::{half, lit, two, Real};
use crate::specfun::{bessel_k, bessel_k_deriv};

use super::integrate::{initial_data, integrate_radial, propagate_linear, GridParams};
use super::phase::fit_asymptote;
use super::shoot::{default_bracket, shoot_bound_energy, MATCH_EXTENT};

/// One state entering an overlap integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OverlapState<T> {
    /// The bound level for τ < 0, normalised to ∫ u² dr = 1.
    Bound { tau: T },
    /// A scattering state at momentum k, normalised to u ~ 2 sin(kr - lπ/2 + δ).
    Scattering { k: T, tau: SaeParam<T> },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Overlap<T> {
    /// Truncated overlap ∫₀^{r_max} u_a u_b dr in Wronskian form.
    pub value: T,
    /// Limit of the lower-boundary Wronskian, -2P(a_add^a a_st^b - a_st^a a_add^b) / (K_a² - K_b²).
    pub boundary_term: T,
}

struct Sampled<T> {
    k2: T,
    at_min: (T, T),
    at_max: (T, T),
    a_st: T,
    a_add: T,
}

/// ∫₀^{r_max} u_a u_b dr = [u_a u_b' - u_b u_a']₀^{r_max} / (K_a² - K_b²),
/// with K² = 2mE. The bracket is evaluated from the integrated solutions at
/// r_min and r_max; the sliver below r_min uses the leading power laws.
pub fn orthogonality_integral<T: Real>(
    p: T,
    mass: T,
    a: &OverlapState<T>,
    b: &OverlapState<T>,
    r_max: T,
) -> Result<T> {
    Ok(orthogonality_integral_detailed(p, mass, a, b, r_max)?.value)
}

pub fn orthogonality_integral_detailed<T: Real>(
    p: T,
    mass: T,
    a: &OverlapState<T>,
    b: &OverlapState<T>,
    r_max: T,
) -> Result<Overlap<T>> {
    if let (OverlapState::Scattering { k: ka, .. }, OverlapState::Scattering { k: kb, .. }) = (a, b) {
        if ka == kb {
            return Err(Error::Degenerate(format!("two scattering states at k = {ka}")));
        }
    }
    let ea = prepare(p, mass, a)?;
    let eb = prepare(p, mass, b)?;
    if ea.1 == eb.1 {
        return Err(Error::Degenerate(format!("both states have 2mE = {}", ea.1)));
    }
    let r_min = lit::<T>(1e-3) * ea.2.min(eb.2);
    if !(r_max > r_min) {
        return Err(domain(format!("r_max = {r_max} must exceed r_min = {r_min}")));
    }
    let sa = sample(p, mass, a, ea, r_min, r_max)?;
    let sb = sample(p, mass, b, eb, r_min, r_max)?;

    let wr = |x: (T, T), y: (T, T)| x.0 * y.1 - y.0 * x.1;
    let dk2 = sa.k2 - sb.k2;
    let body = (wr(sa.at_max, sb.at_max) - wr(sa.at_min, sb.at_min)) / dk2;
    let head = power_law_overlap(p, r_min, (sa.a_st, sa.a_add), (sb.a_st, sb.a_add));
    let w0 = two::<T>() * p * (sa.a_add * sb.a_st - sa.a_st * sb.a_add);
    Ok(Overlap { value: body + head, boundary_term: -w0 / dk2 })
}

// (state energy, 2mE, length scale)
fn prepare<T: Real>(p: T, mass: T, s: &OverlapState<T>) -> Result<(T, T, T)> {
    match *s {
        OverlapState::Bound { tau } => {
            let shot = shoot_bound_energy(p, mass, tau, default_bracket(p, mass, tau))?;
            let k2 = two::<T>() * mass * shot.energy;
            Ok((shot.energy, k2, (-k2).sqrt().recip()))
        }
        OverlapState::Scattering { k, .. } => {
            if !(k > T::zero()) {
                return Err(domain(format!("momentum k = {k} must be positive")));
            }
            Ok((k * k / (two::<T>() * mass), k * k, k.recip()))
        }
    }
}

fn sample<T: Real>(
    p: T,
    mass: T,
    s: &OverlapState<T>,
    (energy, k2, length): (T, T, T),
    r_min: T,
    r_max: T,
) -> Result<Sampled<T>> {
    let local_tol = lit(super::integrate::DEFAULT_LOCAL_TOL);
    match *s {
        OverlapState::Bound { tau } => {
            let kappa = length.recip();
            let r_match = lit::<T>(MATCH_EXTENT) * length;
            let grid = GridParams { r_min, r_switch: length, r_max: r_match, local_tol };
            let inner = integrate_radial(energy, p, mass, SaeParam::Finite(tau), &grid)?;
            let (rm, um, _) = inner.last();
            let outer = |r: T| -> Result<(T, T)> {
                let x = kappa * r;
                let v = r.sqrt() * bessel_k(p, x)?;
                let dv = half::<T>() * v / r + r.sqrt() * kappa * bessel_k_deriv(p, x)?;
                Ok((v, dv))
            };
            let c = um / outer(rm)?.0;
            let tail = outer_norm(p, kappa, rm)? * c * c;
            let head = power_law_overlap(p, r_min, (T::one(), tau), (T::one(), tau));
            let norm = (head + inner.norm_squared() + tail).sqrt();

            let at_max = if r_max <= r_match {
                let g = GridParams { r_max, ..grid };
                let (_, u, du) = integrate_radial(energy, p, mass, SaeParam::Finite(tau), &g)?.last();
                (u, du)
            } else {
                let (v, dv) = outer(r_max)?;
                (c * v, c * dv)
            };
            let (u0, du0) = (inner.u[0], inner.du[0]);
            Ok(Sampled {
                k2,
                at_min: (u0 / norm, du0 / norm),
                at_max: (at_max.0 / norm, at_max.1 / norm),
                a_st: norm.recip(),
                a_add: tau / norm,
            })
        }
        OverlapState::Scattering { k, tau } => {
            let grid = GridParams { r_min, r_switch: length, r_max, local_tol };
            let mut sol = integrate_radial(energy, p, mass, tau, &grid)?;
            let end = sol.last();
            // Continue far enough to read off the asymptotic amplitude.
            let window = lit::<T>(20.0) * T::PI() / k;
            let r_fit_end = r_max.max(lit::<T>(200.0) * T::PI() / k) + window;
            propagate_linear(p, k2, end, r_fit_end, local_tol, &mut sol)?;
            let from = sol.r.partition_point(|&x| x < r_fit_end - window);
            let fit = fit_asymptote(&sol.r[from..], &sol.u[from..], k, p, 0)?;
            let s = two::<T>() / fit.amplitude;
            let (u0, du0) = initial_data(p, k2, tau, r_min);
            let (a_st, a_add) = match tau {
                SaeParam::Finite(t) => (T::one(), t),
                SaeParam::PlusInfinity => (T::zero(), T::one()),
                SaeParam::MinusInfinity => (T::zero(), -T::one()),
            };
            Ok(Sampled {
                k2,
                at_min: (u0 * s, du0 * s),
                at_max: (end.1 * s, end.2 * s),
                a_st: a_st * s,
                a_add: a_add * s,
            })
        }
    }
}

// ∫_{r0}^∞ r K_P(κr)² dr by Simpson's rule out to r0 + 50/κ.
fn outer_norm<T: Real>(p: T, kappa: T, r0: T) -> Result<T> {
    let n = 4000usize;
    let h = lit::<T>(50.0) / kappa / lit(n as f64);
    let mut s = T::zero();
    for i in 0..=n {
        let r = r0 + h * lit(i as f64);
        let k = bessel_k(p, kappa * r)?;
        let w = if i == 0 || i == n {
            T::one()
        } else if i % 2 == 1 {
            lit(4.0)
        } else {
            two()
        };
        s = s + w * r * k * k;
    }
    Ok(s * h / lit(3.0))
}

// ∫₀^{r0} (a r^{1/2+P} + b r^{1/2-P})(c r^{1/2+P} + d r^{1/2-P}) dr
fn power_law_overlap<T: Real>(p: T, r0: T, (a, b): (T, T), (c, d): (T, T)) -> T {
    let t = two::<T>();
    a * c * r0.powf(t + t * p) / (t + t * p)
        + (a * d + b * c) * r0 * r0 / t
        + b * d * r0.powf(t - t * p) / (t - t * p)
}
