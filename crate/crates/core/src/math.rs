//! Thin wrappers over `libm` for the float routines that are not in `core`.

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

/// Round to `decimals` decimal places, half away from zero.
#[inline]
pub fn round_to_decimals(x: f64, decimals: u32) -> f64 {
    let scale = powf(10.0, decimals as f64);
    libm::round(x * scale) / scale
}
