//! Series expansions and their evaluators.
//!
//! Partial-fraction expansions of the circular/hyperbolic ratios, the sine
//! and Wallis products, the Poisson-kernel geometric expansions, the
//! Chebyshev alternating-series accelerator used for every conditionally
//! convergent sum in the crate, and the Kummer Fourier series for
//! ln Γ(1/2+x)/Γ(1/2−x).

use std::fmt;

mod acceleration;
mod kummer;
mod partial_fractions;
mod poisson;
mod products;

pub(crate) use acceleration::accelerate_prefix;
pub use acceleration::{accelerated_alternating_sum, oscillatory_cosine_sum, oscillatory_sine_sum};
pub use kummer::kummer_series;
pub use partial_fractions::{cos_ratio_pf, sin_ratio_pf, sinh_ratio_pf, PartialFractionParams};
pub use poisson::{poisson_kernel_cos, poisson_kernel_sin};
pub use products::{sine_product, wallis_product};

/// How a series value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesMethod {
    /// Plain partial sum up to a caller-visible truncation index.
    Direct,
    /// Chebyshev (CVZ) accelerated evaluation.
    Accelerated,
}

/// Value of a series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    /// Tail bound (direct sums) or acceleration cross-check (accelerated).
    pub error_estimate: f64,
    /// Terms consumed.
    pub terms_used: usize,
    pub method: SeriesMethod,
}

/// Errors from series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SeriesError {
    /// A denominator (kπ)² − (bx)² collapsed for some k within the sum.
    PolePinch { k: u64, denominator: f64 },
    /// Geometric parameter |y| ≥ 1; the expansion diverges.
    Divergent { ratio: f64 },
    /// Acceleration cross-check failed; the sequence is not usable as an
    /// alternating-in-envelope series.
    UnreliableAcceleration { value: f64, discrepancy: f64 },
    /// Parameters outside the operation's domain.
    Domain { what: &'static str },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::PolePinch { k, denominator } => {
                write!(f, "series denominator pinched at k = {k} (D = {denominator:e})")
            }
            SeriesError::Divergent { ratio } => {
                write!(f, "series diverges for |y| = {ratio} ≥ 1")
            }
            SeriesError::UnreliableAcceleration { value, discrepancy } => write!(
                f,
                "acceleration unreliable (value {value}, consecutive-cap discrepancy {discrepancy:e})"
            ),
            SeriesError::Domain { what } => write!(f, "domain error: {what}"),
        }
    }
}

impl std::error::Error for SeriesError {}
