//! Double-exponential quadrature.
//!
//! Two rules cover every integral in the crate: tanh-sinh on a finite
//! interval (tolerant of logarithmic and algebraic endpoint singularities,
//! which the `ln ln(1/y)` integrands have at both ends) and exp-sinh on
//! (0, ∞) for exponentially decaying integrands.
//!
//! Both rules double the trapezoidal level until two consecutive level
//! differences sit under the requested tolerance; the reported error
//! estimate is the last level difference.
//!
//! ```
//! use loglog_core::quadrature::{integrate_unit_interval, QuadratureConfig};
//!
//! let r = integrate_unit_interval(|y| 1.0 / (1.0 + y * y), &QuadratureConfig::default())
//!     .unwrap();
//! assert!(r.converged);
//! assert!((r.value - std::f64::consts::FRAC_PI_4).abs() < 1e-12);
//! ```

use std::fmt;

mod exp_sinh;
mod tanh_sinh;

pub use exp_sinh::integrate_semi_infinite;
pub use tanh_sinh::{integrate_finite, integrate_unit_interval};

/// Tuning knobs shared by both rules.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureConfig {
    /// Absolute tolerance on the level-to-level difference.
    pub abs_tolerance: f64,
    /// Maximum number of step halvings.
    pub max_level: u32,
    /// Hard cap on integrand evaluations.
    pub budget: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tolerance: 1e-12,
            max_level: 12,
            budget: 1_000_000,
        }
    }
}

impl QuadratureConfig {
    /// Same limits but a different tolerance.
    pub fn with_tolerance(self, abs_tolerance: f64) -> Self {
        QuadratureConfig {
            abs_tolerance,
            ..self
        }
    }

    pub(crate) fn validate(&self) {
        assert!(
            self.abs_tolerance > 0.0,
            "quadrature tolerance must be positive"
        );
        assert!(self.max_level >= 3, "quadrature needs at least 3 levels");
    }
}

/// Outcome of one integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// |level-L value − level-(L−1) value| at the final level.
    pub error_estimate: f64,
    /// Integrand evaluations consumed.
    pub evaluations: usize,
    /// True only when two consecutive level differences met the tolerance.
    pub converged: bool,
}

/// Errors raised while integrating.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadratureError {
    /// The integrand returned NaN or ±∞ at the given abscissa.
    NonFiniteIntegrand { abscissa: f64 },
}

impl fmt::Display for QuadratureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadratureError::NonFiniteIntegrand { abscissa } => {
                write!(f, "integrand returned a non-finite value at x = {abscissa}")
            }
        }
    }
}

impl std::error::Error for QuadratureError {}

/// Shared level-doubling driver. `row` sums one trapezoid refinement:
/// level 0 sums t = k·h over all k, later levels only odd multiples of h.
pub(crate) struct LevelDriver {
    pub tol: f64,
    pub max_level: u32,
    pub budget: usize,
}

impl LevelDriver {
    pub(crate) fn run<R>(&self, mut row: R) -> Result<QuadratureResult, QuadratureError>
    where
        R: FnMut(f64, u32, &mut usize) -> Result<f64, QuadratureError>,
    {
        let mut evals = 0usize;
        let mut h = 1.0f64;
        let mut sum = row(h, 0, &mut evals)?;
        let mut value = h * sum;
        let mut last_diff = f64::INFINITY;

        for level in 1..=self.max_level {
            h *= 0.5;
            sum += row(h, level, &mut evals)?;
            let next = h * sum;
            let diff = (next - value).abs();
            value = next;
            if level >= 2 && diff <= self.tol && last_diff <= self.tol {
                return Ok(QuadratureResult {
                    value,
                    error_estimate: diff,
                    evaluations: evals,
                    converged: true,
                });
            }
            last_diff = diff;
            if evals >= self.budget {
                break;
            }
        }
        Ok(QuadratureResult {
            value,
            error_estimate: last_diff,
            evaluations: evals,
            converged: false,
        })
    }
}
