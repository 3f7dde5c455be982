//! Semi-infinite cosine integrals by half-period partition.
//!
//! ∫₀^∞ g(x) cos(fx) dx is split into cells between consecutive zeros of the
//! cosine: [0, π/2f] and then [(2m−1)π/2f, (2m+1)π/2f]. For single-signed
//! decaying g the cell integrals alternate strictly, so the cell series is
//! summed with the alternating accelerator; when the cells decay fast enough
//! on their own the direct sum is used instead. This is how conditionally
//! convergent oscillatory tails are evaluated — raw exp-sinh on the whole
//! ray is noise-dominated for them.

use crate::quadrature::{integrate_finite, QuadratureConfig, QuadratureError, QuadratureResult};
use crate::series_engine::SeriesError;

/// Most cells collected before handing the sequence to the accelerator.
const MAX_CELLS: usize = 48;

pub(crate) enum CellSumError {
    Quadrature(QuadratureError),
    Series(SeriesError),
}

impl From<QuadratureError> for CellSumError {
    fn from(e: QuadratureError) -> Self {
        CellSumError::Quadrature(e)
    }
}

/// ∫₀^∞ g(x)·cos(freq·x) dx with freq > 0.
pub(crate) fn cos_cells_semi_infinite<G>(
    g: G,
    freq: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult, CellSumError>
where
    G: Fn(f64) -> f64,
{
    debug_assert!(freq > 0.0);
    let integrand = |x: f64| g(x) * (freq * x).cos();
    let half = std::f64::consts::PI / freq;

    let cell_cfg = QuadratureConfig {
        abs_tolerance: (cfg.abs_tolerance / 32.0).max(5e-15),
        ..*cfg
    };

    let mut cells: Vec<f64> = Vec::new();
    let mut cell_noise = 0.0f64;
    let mut evals = 0usize;
    let mut all_converged = true;
    let mut quiet = 0u32;
    let mut upper = 0.5 * half; // first cell ends at the first cosine zero

    let mut lower = 0.0;
    for _ in 0..MAX_CELLS {
        let r = integrate_finite(integrand, lower, upper, &cell_cfg)?;
        evals += r.evaluations;
        cell_noise += r.error_estimate;
        all_converged &= r.converged;
        cells.push(r.value);

        if r.value.abs() <= 0.01 * cfg.abs_tolerance {
            quiet += 1;
            if quiet >= 2 {
                // tail decayed on its own; direct summation suffices
                let value = cells.iter().sum();
                let est = cell_noise + cells.last().unwrap().abs();
                return Ok(QuadratureResult {
                    value,
                    error_estimate: est,
                    evaluations: evals,
                    converged: all_converged && est <= 4.0 * cfg.abs_tolerance,
                });
            }
        } else {
            quiet = 0;
        }
        if evals >= cfg.budget {
            let value: f64 = cells.iter().sum();
            return Ok(QuadratureResult {
                value,
                error_estimate: cell_noise + cells.last().unwrap().abs(),
                evaluations: evals,
                converged: false,
            });
        }
        lower = upper;
        upper += half;
    }

    // Slowly decaying alternating cell series: accelerate it.
    let series = crate::series_engine::accelerate_prefix(&cells).map_err(CellSumError::Series)?;
    let est = series.error_estimate + cell_noise;
    Ok(QuadratureResult {
        value: series.value,
        error_estimate: est,
        evaluations: evals,
        converged: all_converged && est <= 4.0 * cfg.abs_tolerance,
    })
}
