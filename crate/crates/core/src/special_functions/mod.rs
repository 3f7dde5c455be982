//! Real-argument special functions.
//!
//! `ln Γ`, the digamma function ψ, the Hurwitz zeta function ζ(s, q) with its
//! analytic continuation, and the Dirichlet series values η, λ, β, ζ built as
//! Hurwitz compositions. These underlie every closed form in the crate.
//!
//! ```
//! use loglog_core::special_functions::{digamma, dirichlet_eta, riemann_zeta};
//!
//! // ψ(1/2) = −γ − 2 ln 2
//! let psi_half = digamma(0.5).unwrap();
//! assert!((psi_half + 0.5772156649015329 + 2.0 * std::f64::consts::LN_2).abs() < 1e-13);
//!
//! // η is entire: η(1) = ln 2, and the continuation gives η(−1) = 1/4
//! assert!((dirichlet_eta(1.0) - std::f64::consts::LN_2).abs() < 1e-13);
//! assert!((dirichlet_eta(-1.0) - 0.25).abs() < 1e-12);
//!
//! // ζ keeps its pole
//! assert!(riemann_zeta(1.0).is_err());
//! ```

use std::fmt;

mod digamma;
mod dirichlet;
mod gamma;
mod hurwitz;

pub use digamma::digamma;
pub use dirichlet::{dirichlet_beta, dirichlet_eta, dirichlet_lambda, riemann_zeta};
pub use gamma::ln_gamma;
pub use hurwitz::{hurwitz_zeta, hurwitz_zeta_diff};

/// Errors from special-function evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecialError {
    /// Argument outside the function's real domain.
    Domain {
        function: &'static str,
        argument: f64,
    },
    /// Evaluation exactly at a pole.
    Pole {
        function: &'static str,
        argument: f64,
    },
}

impl fmt::Display for SpecialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialError::Domain { function, argument } => {
                write!(f, "{function}: argument {argument} outside domain")
            }
            SpecialError::Pole { function, argument } => {
                write!(f, "{function}: pole at {argument}")
            }
        }
    }
}

impl std::error::Error for SpecialError {}
