//! Dirichlet series values as Hurwitz zeta compositions.
//!
//! λ(s) = 2^{−s} ζ(s, 1/2)
//! β(s) = 4^{−s} [ζ(s, 1/4) − ζ(s, 3/4)]
//! η(s) = 2^{−s} [ζ(s, 1/2) − ζ(s, 1)]
//! ζ(s) = ζ(s, 1)
//!
//! η and β use the pole-cancelled difference evaluator, so they are defined
//! for every real s (η(1) = ln 2 comes out of the cancellation); ζ and λ
//! keep their pole at s = 1.

use super::hurwitz::{hurwitz_zeta, hurwitz_zeta_diff};
use super::SpecialError;

/// ζ(s) = Σ n^{−s}; pole at s = 1.
pub fn riemann_zeta(s: f64) -> Result<f64, SpecialError> {
    hurwitz_zeta(s, 1.0).map_err(|e| match e {
        SpecialError::Pole { argument, .. } => SpecialError::Pole {
            function: "riemann_zeta",
            argument,
        },
        other => other,
    })
}

/// λ(s) = Σ (2n+1)^{−s}; pole at s = 1.
pub fn dirichlet_lambda(s: f64) -> Result<f64, SpecialError> {
    Ok(0.5f64.powf(s) * hurwitz_zeta(s, 0.5)?)
}

/// η(s) = Σ (−1)^{n+1} n^{−s}; entire, defined for all real s.
pub fn dirichlet_eta(s: f64) -> f64 {
    // odd terms minus even terms; the ζ poles cancel inside the diff.
    0.5f64.powf(s)
        * hurwitz_zeta_diff(s, 0.5, 1.0).expect("fixed arguments are in domain")
}

/// β(s) = Σ (−1)^n (2n+1)^{−s}; entire.
pub fn dirichlet_beta(s: f64) -> f64 {
    0.25f64.powf(s)
        * hurwitz_zeta_diff(s, 0.25, 0.75).expect("fixed arguments are in domain")
}
