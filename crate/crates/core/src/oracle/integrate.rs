use crate::bound::SaeParam;
use crate::error::{domain, Error, Result};
use crate::potential::CRITICAL_TOLERANCE;
use crate::scalar::{half, lit, two, Real};

/// Default per-step relative truncation target for the RK4 step choice.
pub const DEFAULT_LOCAL_TOL: f64 = 1e-11;

const MAX_STEPS: usize = 20_000_000;

/// Radial layout of one integration: a logarithmic segment on
/// `[r_min, r_switch]` followed by a uniform segment up to `r_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridParams<T> {
    pub r_min: T,
    pub r_switch: T,
    pub r_max: T,
    pub local_tol: T,
}

impl<T: Real> GridParams<T> {
    /// Layout in units of a length scale: r_min = 1e-3 L, r_switch = L,
    /// r_max = `extent` L.
    pub fn scaled(length: T, extent: T) -> Self {
        Self {
            r_min: lit::<T>(1e-3) * length,
            r_switch: length,
            r_max: extent * length,
            local_tol: lit(DEFAULT_LOCAL_TOL),
        }
    }

    /// Layout for energy `energy` using L = 1/√|2mE|.
    pub fn for_energy(energy: T, mass: T, extent: T) -> Self {
        let k2 = (two::<T>() * mass * energy).abs();
        Self::scaled(k2.sqrt().recip(), extent)
    }

    fn validate(&self) -> Result<()> {
        if !(self.r_min > T::zero() && self.r_min < self.r_max) {
            return Err(domain(format!(
                "grid needs 0 < r_min < r_max, got r_min = {}, r_max = {}",
                self.r_min, self.r_max
            )));
        }
        if !(self.local_tol > T::zero()) {
            return Err(domain("local tolerance must be positive"));
        }
        Ok(())
    }
}

/// Reduced wave function u = rR and its derivative on a strictly
/// increasing set of radii.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid<T> {
    pub r: Vec<T>,
    pub u: Vec<T>,
    pub du: Vec<T>,
}

impl<T: Real> RadialGrid<T> {
    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn r_min(&self) -> T {
        self.r[0]
    }

    pub fn r_max(&self) -> T {
        *self.r.last().expect("non-empty grid")
    }

    pub fn last(&self) -> (T, T, T) {
        let i = self.len() - 1;
        (self.r[i], self.u[i], self.du[i])
    }

    /// Sign changes of u, ignoring exact zeros.
    pub fn count_nodes(&self) -> usize {
        let mut prev = T::zero();
        let mut nodes = 0;
        for &v in &self.u {
            if v == T::zero() {
                continue;
            }
            if prev != T::zero() && (v > T::zero()) != (prev > T::zero()) {
                nodes += 1;
            }
            prev = v;
        }
        nodes
    }

    /// Trapezoid estimate of ∫ u² dr over the grid.
    pub fn norm_squared(&self) -> T {
        let mut s = T::zero();
        for i in 1..self.len() {
            let h = self.r[i] - self.r[i - 1];
            s = s + half::<T>() * h * (self.u[i] * self.u[i] + self.u[i - 1] * self.u[i - 1]);
        }
        s
    }
}

/// Frobenius solution u = Σ a_n r^{s+2n}, s = 1/2 ± P, of
/// u'' = [(P² - 1/4)/r² - K²] u with a_0 = 1. Returns (u, u').
pub fn frobenius<T: Real>(p: T, k2: T, r: T, additional: bool) -> (T, T) {
    let sp = if additional { -p } else { p };
    let s = half::<T>() + sp;
    let r2 = r * r;
    let mut coeff = T::one();
    let mut pow = r.powf(s);
    let mut u = pow;
    let mut du = s * pow / r;
    for n in 1..200 {
        let nf = lit::<T>(n as f64);
        coeff = -coeff * k2 * r2 / (lit::<T>(4.0) * nf * (nf + sp));
        pow = r.powf(s) * coeff;
        u = u + pow;
        du = du + (s + two::<T>() * nf) * pow / r;
        if pow.abs() <= T::epsilon() * u.abs() {
            break;
        }
    }
    (u, du)
}

/// Initial data at r for the extension parameter τ (a_st = 1, a_add = τ,
/// or the pure additional branch for τ = ±∞).
pub fn initial_data<T: Real>(p: T, k2: T, tau: SaeParam<T>, r: T) -> (T, T) {
    let (us, dus) = frobenius(p, k2, r, false);
    match tau {
        SaeParam::Finite(t) if t == T::zero() => (us, dus),
        SaeParam::Finite(t) => {
            let (ua, dua) = frobenius(p, k2, r, true);
            (us + t * ua, dus + t * dua)
        }
        SaeParam::PlusInfinity => frobenius(p, k2, r, true),
        SaeParam::MinusInfinity => {
            let (ua, dua) = frobenius(p, k2, r, true);
            (-ua, -dua)
        }
    }
}

fn rk4_step<T: Real>(x: T, y: T, dy: T, h: T, f: &impl Fn(T) -> T) -> (T, T) {
    let hh = half::<T>() * h;
    let six = lit::<T>(6.0);
    let fx = f(x);
    let fm = f(x + hh);
    let fe = f(x + h);
    let k1y = dy;
    let k1d = fx * y;
    let k2y = dy + hh * k1d;
    let k2d = fm * (y + hh * k1y);
    let k3y = dy + hh * k2d;
    let k3d = fm * (y + hh * k2y);
    let k4y = dy + h * k3d;
    let k4d = fe * (y + h * k3y);
    (
        y + h / six * (k1y + two::<T>() * k2y + two::<T>() * k3y + k4y),
        dy + h / six * (k1d + two::<T>() * k2d + two::<T>() * k3d + k4d),
    )
}

// Step from the RK4 local error model (hq)^5/120 <= tol.
fn step_for<T: Real>(q: T, tol: T, span: T) -> Result<(T, usize)> {
    let hq = (lit::<T>(120.0) * tol).powf(lit(0.2));
    let h = hq / q.max(T::epsilon());
    let n = (span / h).ceil().to_usize().unwrap_or(usize::MAX).max(1);
    if n > MAX_STEPS {
        return Err(Error::Stiffness(format!(
            "{n} steps needed to meet local tolerance {tol}"
        )));
    }
    Ok((span / lit(n as f64), n))
}

fn check_finite<T: Real>(u: T, du: T, r: T) -> Result<()> {
    if u.is_finite() && du.is_finite() {
        Ok(())
    } else {
        Err(Error::Stiffness(format!("solution overflowed at r = {r}")))
    }
}

/// Continues u'' = [(P² - 1/4)/r² - K²] u on a uniform grid from (r0, u0, du0)
/// to r1, appending every step to `out`.
pub fn propagate_linear<T: Real>(
    p: T,
    k2: T,
    start: (T, T, T),
    r1: T,
    local_tol: T,
    out: &mut RadialGrid<T>,
) -> Result<()> {
    let r0 = start.0;
    if r1 <= r0 {
        return Ok(());
    }
    let c = p * p - lit(0.25);
    let q = (c.abs() / (r0 * r0) + k2.abs()).sqrt();
    let (_, n) = step_for(q, local_tol, r1 - r0)?;
    propagate_linear_steps(p, k2, start, r1, n, out)
}

/// As [`propagate_linear`] with a fixed number of equal RK4 steps.
pub fn propagate_linear_steps<T: Real>(
    p: T,
    k2: T,
    start: (T, T, T),
    r1: T,
    steps: usize,
    out: &mut RadialGrid<T>,
) -> Result<()> {
    let (r0, mut u, mut du) = start;
    if r1 <= r0 || steps == 0 {
        return Ok(());
    }
    let c = p * p - lit(0.25);
    let h = (r1 - r0) / lit(steps as f64);
    let f = |r: T| c / (r * r) - k2;
    for i in 0..steps {
        let r = r0 + h * lit(i as f64);
        (u, du) = rk4_step(r, u, du, h, &f);
        let rn = if i + 1 == steps { r1 } else { r0 + h * lit((i + 1) as f64) };
        check_finite(u, du, rn)?;
        out.r.push(rn);
        out.u.push(u);
        out.du.push(du);
    }
    Ok(())
}

/// Integrates the reduced radial equation with effective potential
/// (P² - 1/4)/(2mr²) at energy E, starting from the Frobenius data selected
/// by τ at r_min.
pub fn integrate_radial<T: Real>(
    energy: T,
    p: T,
    mass: T,
    tau: SaeParam<T>,
    grid: &GridParams<T>,
) -> Result<RadialGrid<T>> {
    grid.validate()?;
    if !(mass > T::zero()) {
        return Err(domain(format!("mass = {mass} must be positive")));
    }
    if !(p > lit(CRITICAL_TOLERANCE)) {
        return Err(domain(format!("P = {p}: critical and falling regimes cannot be integrated")));
    }
    if !tau.is_zero() && p >= half() {
        return Err(domain(format!("tau = {tau} needs P < 1/2, got P = {p}")));
    }
    let k2 = two::<T>() * mass * energy;
    if k2.abs() * grid.r_min * grid.r_min >= lit(1e-4) {
        return Err(domain(format!(
            "r_min = {} too large for |2mE| = {}: need |2mE| r_min^2 < 1e-4",
            grid.r_min,
            k2.abs()
        )));
    }

    let (u0, du0) = initial_data(p, k2, tau, grid.r_min);
    let mut out = RadialGrid { r: vec![grid.r_min], u: vec![u0], du: vec![du0] };

    // Logarithmic segment: r = e^t, u = √r w, w_tt = (P² - K² r²) w.
    let r_switch = grid.r_switch.min(grid.r_max).max(grid.r_min);
    let (mut u, mut du) = (u0, du0);
    if r_switch > grid.r_min {
        let t0 = grid.r_min.ln();
        let t1 = r_switch.ln();
        let q = (p * p + k2.abs() * r_switch * r_switch).sqrt();
        let (h, n) = step_for(q, grid.local_tol, t1 - t0)?;
        let sq = grid.r_min.sqrt();
        let mut w = u0 / sq;
        let mut dw = du0 * sq - half::<T>() * w;
        let f = |t: T| p * p - k2 * (two::<T>() * t).exp();
        for i in 0..n {
            let t = t0 + h * lit(i as f64);
            (w, dw) = rk4_step(t, w, dw, h, &f);
            let r = if i + 1 == n { r_switch } else { (t + h).exp() };
            let s = r.sqrt();
            u = s * w;
            du = (half::<T>() * w + dw) / s;
            check_finite(u, du, r)?;
            out.r.push(r);
            out.u.push(u);
            out.du.push(du);
        }
    }
    propagate_linear(p, k2, (r_switch, u, du), grid.r_max, grid.local_tol, &mut out)?;
    Ok(out)
}
