//! Bessel functions J, I and K of real order |ν| < 1 and positive argument.
//!
//! Small arguments use the ascending power series. Beyond the switch point
//! J and I come from Steed's continued fractions (CF1 for the logarithmic
//! derivative, CF2 for the outgoing/decaying companion) tied together by the
//! Wronskian, which keeps full double precision where the plain Hankel
//! expansion is limited to about `exp(-2x)`.

use crate::error::{domain, Result};
use crate::scalar::{half, lit, two, Real};

use super::gamma::gamma_real;

const MAX_ITER: usize = 100_000;

/// Argument at which J and I leave the power series.
pub fn series_switch<T: Real>(nu: T) -> T {
    lit::<T>(10.0).max(two::<T>() * nu * nu)
}

/// Argument at which K leaves the reflection formula
/// `K = π / (2 sin νπ) (I_{-ν} - I_ν)`.
pub fn k_switch<T: Real>() -> T {
    two()
}

fn check_order<T: Real>(nu: T) -> Result<()> {
    if !nu.is_finite() || nu.abs() >= T::one() {
        return Err(domain(format!("Bessel order |nu| = {} must be < 1", nu.abs())));
    }
    Ok(())
}

fn check_arg<T: Real>(x: T) -> Result<()> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(domain(format!("Bessel argument x = {x} must be positive and finite")));
    }
    Ok(())
}

fn check_k_order<T: Real>(nu: T) -> Result<()> {
    if !(nu > T::zero() && nu < T::one()) {
        return Err(domain(format!("K order nu = {nu} must lie in (0, 1)")));
    }
    Ok(())
}

/// J_ν(x) for |ν| < 1, x > 0.
pub fn bessel_j<T: Real>(nu: T, x: T) -> Result<T> {
    check_order(nu)?;
    check_arg(x)?;
    if x <= series_switch(nu) {
        j_series(nu, x)
    } else {
        j_large(nu, x)
    }
}

/// I_ν(x) for |ν| < 1, x > 0.
pub fn bessel_i<T: Real>(nu: T, x: T) -> Result<T> {
    check_order(nu)?;
    check_arg(x)?;
    if x <= series_switch(nu) {
        i_series(nu, x)
    } else {
        i_large(nu, x)
    }
}

/// Macdonald function K_ν(x) for 0 < ν < 1, x > 0.
pub fn bessel_k<T: Real>(nu: T, x: T) -> Result<T> {
    check_k_order(nu)?;
    check_arg(x)?;
    if x <= k_switch() {
        k_reflection(nu, x)
    } else {
        k_large(nu, x)
    }
}

/// dJ_ν/dx through the order recurrences, keeping both orders inside (-1, 1).
pub fn bessel_j_deriv<T: Real>(nu: T, x: T) -> Result<T> {
    check_order(nu)?;
    if nu > T::zero() {
        Ok(bessel_j(nu - T::one(), x)? - nu / x * bessel_j(nu, x)?)
    } else if nu < T::zero() {
        Ok(-bessel_j(nu + T::one(), x)? + nu / x * bessel_j(nu, x)?)
    } else {
        Err(domain("J'_0 needs J_1, order 1 is not supported"))
    }
}

/// dI_ν/dx through the order recurrences.
pub fn bessel_i_deriv<T: Real>(nu: T, x: T) -> Result<T> {
    check_order(nu)?;
    if nu > T::zero() {
        Ok(bessel_i(nu - T::one(), x)? - nu / x * bessel_i(nu, x)?)
    } else if nu < T::zero() {
        Ok(bessel_i(nu + T::one(), x)? + nu / x * bessel_i(nu, x)?)
    } else {
        Err(domain("I'_0 needs I_1, order 1 is not supported"))
    }
}

/// dK_ν/dx = -K_{1-ν} - (ν/x) K_ν.
pub fn bessel_k_deriv<T: Real>(nu: T, x: T) -> Result<T> {
    check_k_order(nu)?;
    Ok(-bessel_k(T::one() - nu, x)? - nu / x * bessel_k(nu, x)?)
}

/// Ascending series for J_ν.
pub fn j_series<T: Real>(nu: T, x: T) -> Result<T> {
    ascending_series(nu, x, -T::one())
}

/// Ascending series for I_ν.
pub fn i_series<T: Real>(nu: T, x: T) -> Result<T> {
    ascending_series(nu, x, T::one())
}

// Σ_k sign^k (x/2)^{2k+ν} / (k! Γ(k+ν+1))
fn ascending_series<T: Real>(nu: T, x: T, sign: T) -> Result<T> {
    let half_x = x * half();
    let q = sign * half_x * half_x;
    let mut term = half_x.powf(nu) / gamma_real(nu + T::one())?;
    let mut sum = term;
    for k in 1..MAX_ITER {
        let kf = lit::<T>(k as f64);
        term = term * q / (kf * (kf + nu));
        sum = sum + term;
        if kf > half_x && term.abs() <= T::epsilon() * sum.abs() {
            return Ok(sum);
        }
    }
    Err(domain(format!("power series for order {nu} at x = {x} did not converge")))
}

/// Reflection formula K_ν = π/(2 sin νπ) (I_{-ν} - I_ν) on the ascending series.
pub fn k_reflection<T: Real>(nu: T, x: T) -> Result<T> {
    check_k_order(nu)?;
    let pref = T::PI() / (two::<T>() * (nu * T::PI()).sin());
    Ok(pref * (i_series(-nu, x)? - i_series(nu, x)?))
}

/// J_ν from the continued-fraction route (valid for x >= 2).
pub fn j_large<T: Real>(nu: T, x: T) -> Result<T> {
    let a = nu.abs();
    let (j, y) = jy_steed(a, x)?;
    if nu >= T::zero() {
        Ok(j)
    } else {
        let (s, c) = (a * T::PI()).sin_cos();
        Ok(c * j - s * y)
    }
}

/// I_ν from the continued-fraction route (valid for x >= 2).
pub fn i_large<T: Real>(nu: T, x: T) -> Result<T> {
    let a = nu.abs();
    let (i, k) = ik_steed(a, x)?;
    if nu >= T::zero() {
        Ok(i)
    } else {
        // I_{-a} = I_a + (2/π) sin(aπ) K_a, no cancellation.
        Ok(i + two::<T>() / T::PI() * (a * T::PI()).sin() * k)
    }
}

/// K_ν from Steed's CF2 (valid for x >= 2).
pub fn k_large<T: Real>(nu: T, x: T) -> Result<T> {
    check_k_order(nu)?;
    Ok(ik_steed(nu, x)?.1)
}

fn tiny<T: Real>() -> T {
    T::min_positive_value() / T::epsilon()
}

fn nearest_int_below_half<T: Real>(nu: T) -> usize {
    (nu + half()).floor().to_usize().unwrap_or(0)
}

// Returns (J_ν, Y_ν) for ν >= 0, x >= 2.
fn jy_steed<T: Real>(nu: T, x: T) -> Result<(T, T)> {
    if x < two() {
        return Err(domain(format!("continued-fraction branch needs x >= 2, got {x}")));
    }
    let eps = T::epsilon();
    let fpmin = tiny::<T>();
    let nl = nearest_int_below_half(nu);
    let mu = nu - lit(nl as f64);
    let mu2 = mu * mu;
    let xi = x.recip();
    let xi2 = two::<T>() * xi;
    let w = xi2 / T::PI();

    // CF1: J'_ν / J_ν
    let mut isign = T::one();
    let mut h = (nu * xi).max(fpmin);
    let mut b = xi2 * nu;
    let mut d = T::zero();
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        b = b + xi2;
        d = b - d;
        if d.abs() < fpmin {
            d = fpmin;
        }
        c = b - c.recip();
        if c.abs() < fpmin {
            c = fpmin;
        }
        d = d.recip();
        let del = c * d;
        h = del * h;
        if d < T::zero() {
            isign = -isign;
        }
        if (del - T::one()).abs() < eps {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(domain(format!("CF1 for J at x = {x} did not converge")));
    }

    let mut rjl = isign * fpmin;
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let tmp = fact * rjl + rjpl;
        fact = fact - xi;
        rjpl = fact * tmp - rjl;
        rjl = tmp;
    }
    if rjl == T::zero() {
        rjl = eps;
    }
    let f = rjpl / rjl;

    // CF2: p + iq = (J' + iY') / (J + iY)
    let mut a = lit::<T>(0.25) - mu2;
    let mut p = -half::<T>() * xi;
    let mut q = T::one();
    let br = two::<T>() * x;
    let mut bi = two::<T>();
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut tmp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = tmp;
    converged = false;
    for i in 2..MAX_ITER {
        a = a + lit(2.0 * (i as f64 - 1.0));
        bi = bi + two();
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < fpmin {
            dr = fpmin;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < fpmin {
            cr = fpmin;
        }
        den = dr * dr + di * di;
        dr = dr / den;
        di = -di / den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        tmp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = tmp;
        if (dlr - T::one()).abs() + dli.abs() < eps {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(domain(format!("CF2 for J at x = {x} did not converge")));
    }

    let gam = (p - f) / q;
    let mut rjmu = (w / ((p - f) * gam + q)).sqrt();
    if rjl < T::zero() {
        rjmu = -rjmu;
    }
    let mut rymu = rjmu * gam;
    let rymup = rymu * (p + q / gam);
    let mut ry1 = mu * xi * rymu - rymup;
    let scale = rjmu / rjl;
    let rj = rjl1 * scale;
    for i in 1..=nl {
        let t = (mu + lit(i as f64)) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = t;
    }
    Ok((rj, rymu))
}

// Returns (I_ν, K_ν) for ν >= 0, x >= 2.
fn ik_steed<T: Real>(nu: T, x: T) -> Result<(T, T)> {
    if x < two() {
        return Err(domain(format!("continued-fraction branch needs x >= 2, got {x}")));
    }
    let eps = T::epsilon();
    let fpmin = tiny::<T>();
    let nl = nearest_int_below_half(nu);
    let mu = nu - lit(nl as f64);
    let mu2 = mu * mu;
    let xi = x.recip();
    let xi2 = two::<T>() * xi;

    // CF1: I'_ν / I_ν
    let mut h = (nu * xi).max(fpmin);
    let mut b = xi2 * nu;
    let mut d = T::zero();
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        b = b + xi2;
        d = (b + d).recip();
        c = b + c.recip();
        let del = c * d;
        h = del * h;
        if (del - T::one()).abs() < eps {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(domain(format!("CF1 for I at x = {x} did not converge")));
    }
    let mut ril = fpmin;
    let mut ripl = h * ril;
    let ril1 = ril;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let t = fact * ril + ripl;
        fact = fact - xi;
        ripl = fact * t + ril;
        ril = t;
    }
    let f = ripl / ril;

    // CF2 (Steed): K_μ and K_{μ+1}
    let mut b = two::<T>() * (T::one() + x);
    let mut d = b.recip();
    let mut h = d;
    let mut delh = d;
    let mut q1 = T::zero();
    let mut q2 = T::one();
    let a1 = lit::<T>(0.25) - mu2;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = T::one() + q * delh;
    converged = false;
    for i in 2..MAX_ITER {
        let fi = lit::<T>(i as f64);
        a = a - two::<T>() * (fi - T::one());
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q = q + c * qnew;
        b = b + two();
        d = (b + a * d).recip();
        delh = (b * d - T::one()) * delh;
        h = h + delh;
        let dels = q * delh;
        s = s + dels;
        if (dels / s).abs() < eps {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(domain(format!("CF2 for K at x = {x} did not converge")));
    }
    h = a1 * h;
    let mut rkmu = (T::PI() / (two::<T>() * x)).sqrt() * (-x).exp() / s;
    let mut rk1 = rkmu * (mu + x + half() - h) * xi;
    let rkmup = mu * xi * rkmu - rk1;
    let rimu = xi / (f * rkmu - rkmup);
    let ri = rimu * ril1 / ril;
    for i in 1..=nl {
        let t = (mu + lit(i as f64)) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = t;
    }
    Ok((ri, rkmu))
}
