use crate::error::{Error, Result};
use crate::scalar::{half, lit, Real};

// Lanczos approximation, g = 7, nine coefficients.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Γ(x) for real `x`.
///
/// The rational Lanczos sum covers `x >= 0.5`; smaller arguments are lifted
/// with `Γ(x) = Γ(x + 1) / x`. Non-positive integers are poles.
pub fn gamma_real<T: Real>(x: T) -> Result<T> {
    if !x.is_finite() {
        return Err(crate::error::domain(format!("gamma of non-finite argument {x}")));
    }
    if x <= T::zero() && x == x.floor() {
        return Err(Error::Pole(format!("{x}")));
    }
    let mut shift = T::one();
    let mut z = x;
    while z < half() {
        shift = shift * z;
        z = z + T::one();
    }
    Ok(lanczos(z) / shift)
}

fn lanczos<T: Real>(x: T) -> T {
    let z = x - T::one();
    let mut sum = lit::<T>(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum = sum + lit::<T>(c) / (z + lit(i as f64));
    }
    let t = z + lit::<T>(LANCZOS_G) + half();
    let sqrt_two_pi = (lit::<T>(2.0) * T::PI()).sqrt();
    sqrt_two_pi * t.powf(z + half()) * (-t).exp() * sum
}

/// Γ(1 + p) / Γ(1 - p), the ratio that converts between the Bessel-basis
/// coefficients and the small-r extension parameter.
pub fn gamma_ratio<T: Real>(p: T) -> Result<T> {
    Ok(gamma_real(T::one() + p)? / gamma_real(T::one() - p)?)
}
