//! Float math routed through `libm` so the crate stays `no_std` and
//! bit-identical across platforms.

pub(crate) use core::f64::consts::PI;

pub(crate) const TAU: f64 = 2.0 * PI;

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn log1p(x: f64) -> f64 {
    libm::log1p(x)
}

#[inline]
pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub(crate) fn expm1(x: f64) -> f64 {
    libm::expm1(x)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    libm::hypot(x, y)
}

#[inline]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

/// `x^k` by binary exponentiation for integer exponents.
pub(crate) fn powi(x: f64, k: i32) -> f64 {
    let mut e = k.unsigned_abs();
    let mut base = x;
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    if k < 0 {
        1.0 / acc
    } else {
        acc
    }
}

/// `ln(num/den)` evaluated as `log1p((num-den)/den)`: accurate when the
/// ratio is close to 1 and identical to the plain logarithm elsewhere.
#[inline]
pub(crate) fn ln_ratio(num: f64, den: f64) -> f64 {
    log1p((num - den) / den)
}

/// `(num/den)^k - 1` without cancellation for ratios near 1.
#[inline]
pub(crate) fn pow_ratio_minus_one(num: f64, den: f64, k: f64) -> f64 {
    expm1(k * ln_ratio(num, den))
}
