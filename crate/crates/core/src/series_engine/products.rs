//! The Euler sine product and the Wallis product.
//!
//! Both converge like O(1/K); callers needing more accuracy must pick K
//! accordingly or extrapolate.

use std::f64::consts::PI;

/// x·Π_{k≤K} (1 − x²/(kπ)²).
pub fn sine_product(x: f64, factors: usize) -> f64 {
    let mut p = x;
    for k in 1..=factors as u64 {
        let kpi = k as f64 * PI;
        p *= 1.0 - (x / kpi) * (x / kpi);
    }
    p
}

/// Π_{k≤K} 4k²/(4k² − 1) → π/2.
pub fn wallis_product(factors: usize) -> f64 {
    let mut p = 1.0;
    for k in 1..=factors as u64 {
        let k2 = 4.0 * (k as f64) * (k as f64);
        p *= k2 / (k2 - 1.0);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn sine_product_at_half_pi() {
        // sin(π/2) = 1; truncation error ~ x²/(π²K).
        let v = sine_product(FRAC_PI_2, 200_000);
        assert!((v - 1.0).abs() < 2e-6);
    }

    #[test]
    fn sine_product_at_one() {
        let v = sine_product(1.0, 10_000);
        assert!((v - 1.0f64.sin()).abs() < 1e-4);
    }

    #[test]
    fn wallis_truncation() {
        // Π_{k≤K} = (π/2)(1 − 1/(4K) + O(1/K²)).
        let v = wallis_product(100_000);
        assert!((v - FRAC_PI_2).abs() < 4e-6);
        // and the empirical rate is the predicted one
        let v2 = wallis_product(200_000);
        let ratio = (FRAC_PI_2 - v) / (FRAC_PI_2 - v2);
        assert!((ratio - 2.0).abs() < 0.01, "ratio {ratio}");
    }
}
