//! Poisson-kernel geometric expansions.
//!
//! sin φ /(1+2y cos φ+y²)    = Σ_{n≥1} (−1)^{n−1} y^{n−1} sin(nφ)
//! (1+y cos φ)/(1+2y cos φ+y²) = Σ_{n≥0} (−1)^n y^n cos(nφ)
//!
//! Both are plain geometric series in |y| < 1 with tail bound
//! |y|^N/(1−|y|).

use super::{SeriesError, SeriesMethod, SeriesResult};

fn geometric_tail(y: f64, n: usize) -> f64 {
    y.abs().powi(n as i32) / (1.0 - y.abs())
}

/// N-term partial sum of Σ (−1)^{n−1} y^{n−1} sin(nφ).
pub fn poisson_kernel_sin(y: f64, phi: f64, n_terms: usize) -> Result<SeriesResult, SeriesError> {
    if y.abs() >= 1.0 {
        return Err(SeriesError::Divergent { ratio: y.abs() });
    }
    let mut sum = 0.0;
    let mut ypow = 1.0;
    for n in 1..=n_terms as u64 {
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        sum += sign * ypow * (n as f64 * phi).sin();
        ypow *= y;
    }
    Ok(SeriesResult {
        value: sum,
        error_estimate: geometric_tail(y, n_terms),
        terms_used: n_terms,
        method: SeriesMethod::Direct,
    })
}

/// N-term partial sum of Σ_{n≥0} (−1)^n y^n cos(nφ).
pub fn poisson_kernel_cos(y: f64, phi: f64, n_terms: usize) -> Result<SeriesResult, SeriesError> {
    if y.abs() >= 1.0 {
        return Err(SeriesError::Divergent { ratio: y.abs() });
    }
    let mut sum = 0.0;
    let mut ypow = 1.0;
    for n in 0..n_terms as u64 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * ypow * (n as f64 * phi).cos();
        ypow *= y;
    }
    Ok(SeriesResult {
        value: sum,
        error_estimate: geometric_tail(y, n_terms),
        terms_used: n_terms,
        method: SeriesMethod::Direct,
    })
}

/// Closed forms of the two kernels, used as oracles.
#[cfg(test)]
fn sin_kernel_direct(y: f64, phi: f64) -> f64 {
    phi.sin() / (1.0 + 2.0 * y * phi.cos() + y * y)
}

#[cfg(test)]
fn cos_kernel_direct(y: f64, phi: f64) -> f64 {
    (1.0 + y * phi.cos()) / (1.0 + 2.0 * y * phi.cos() + y * y)
}
