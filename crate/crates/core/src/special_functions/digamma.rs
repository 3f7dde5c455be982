//! Digamma ψ(x) = d/dx ln Γ(x) via recurrence shifting and the Bernoulli
//! asymptotic expansion.

use super::SpecialError;

/// B_{2j}/(2j) for j = 1..8; coefficients of the asymptotic tail
/// ψ(x) ≈ ln x − 1/(2x) − Σ B_{2j}/(2j·x^{2j}).
const ASYMP: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

/// Arguments are shifted up to at least this value before the expansion.
const SHIFT: f64 = 10.0;

/// ψ(x) for x > 0, relative error well inside 1e−12.
pub fn digamma(x: f64) -> Result<f64, SpecialError> {
    if !(x > 0.0) {
        return Err(SpecialError::Domain {
            function: "digamma",
            argument: x,
        });
    }
    Ok(digamma_unchecked(x))
}

pub(crate) fn digamma_unchecked(x: f64) -> f64 {
    // ψ(x) = ψ(x+1) − 1/x shifts the argument into the asymptotic region.
    let mut acc = 0.0;
    let mut t = x;
    while t < SHIFT {
        acc -= 1.0 / t;
        t += 1.0;
    }

    let inv2 = 1.0 / (t * t);
    let mut tail = 0.0;
    let mut p = inv2;
    for c in ASYMP {
        tail += c * p;
        p *= inv2;
    }
    acc + t.ln() - 0.5 / t - tail
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::EULER_GAMMA;
    use crate::special_functions::ln_gamma;
    use std::f64::consts::{FRAC_PI_2, LN_2};

    #[test]
    fn psi_one_is_minus_gamma() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-14);
    }

    #[test]
    fn psi_half() {
        // ψ(1/2) = −γ − 2 ln 2
        let expected = -EULER_GAMMA - 2.0 * LN_2;
        assert!((digamma(0.5).unwrap() - expected).abs() < 1e-13);
    }

    #[test]
    fn psi_quarters() {
        // ψ(1/4) = −γ − π/2 − ln 8 and ψ(3/4) = −γ + π/2 − ln 8
        let ln8 = 3.0 * LN_2;
        let q = digamma(0.25).unwrap();
        let tq = digamma(0.75).unwrap();
        assert!((q - (-EULER_GAMMA - FRAC_PI_2 - ln8)).abs() < 1e-13);
        assert!((tq - (-EULER_GAMMA + FRAC_PI_2 - ln8)).abs() < 1e-13);
    }

    #[test]
    fn recurrence_on_grid() {
        // ψ(x+1) − ψ(x) = 1/x to 1e−12 for x ∈ {0.1, …, 10}.
        for i in 1..=100 {
            let x = i as f64 * 0.1;
            let lhs = digamma(x + 1.0).unwrap() - digamma(x).unwrap();
            assert!((lhs - 1.0 / x).abs() <= 1e-12, "x={x}");
        }
    }

    #[test]
    fn matches_ln_gamma_derivative() {
        // Central finite difference of ln Γ at h = 1e−5 within 1e−6.
        let h = 1e-5;
        for &x in &[0.3, 0.7, 1.0, 1.5, 2.4, 5.0, 9.7] {
            let fd = (ln_gamma(x + h).unwrap() - ln_gamma(x - h).unwrap()) / (2.0 * h);
            assert!((fd - digamma(x).unwrap()).abs() < 1e-6, "x={x}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(digamma(0.0).is_err());
        assert!(digamma(-1.5).is_err());
    }
}
