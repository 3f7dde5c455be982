//! The catalogued integral identities.

use super::oscillatory::{cos_cells_semi_infinite, CellSumError};
use super::{CatalogError, IdentityReport};
use crate::quadrature::{integrate_semi_infinite, QuadratureConfig, QuadratureResult};
use crate::special_functions::ln_gamma;
use std::f64::consts::{FRAC_PI_2, PI};

fn lhs_cos_integral<G>(
    g: G,
    freq: f64,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult, CatalogError>
where
    G: Fn(f64) -> f64,
{
    if freq == 0.0 {
        Ok(integrate_semi_infinite(g, cfg)?)
    } else {
        cos_cells_semi_infinite(g, freq, cfg).map_err(|e| match e {
            CellSumError::Quadrature(q) => CatalogError::Quadrature(q),
            CellSumError::Series(s) => CatalogError::Series(s),
        })
    }
}

fn finish(
    id: &str,
    params: &[(&str, f64)],
    lhs: QuadratureResult,
    rhs: f64,
    tol: f64,
) -> IdentityReport {
    let report = IdentityReport::from_values(id, params, lhs.value, rhs, tol);
    if lhs.converged {
        report
    } else if report.pass {
        report.with_note(format!(
            "quadrature unconverged (estimate {:.2e}) but sides agree",
            lhs.error_estimate
        ))
    } else {
        report.failed(format!(
            "quadrature did not converge (estimate {:.2e}, {} evaluations)",
            lhs.error_estimate, lhs.evaluations
        ))
    }
}

/// ∫₀^∞ cos(nx)/(1+x²) dx = (π/2) e^{−n} for n ≥ 0.
pub fn legendre_cosine_integral(
    n: f64,
    cfg: &QuadratureConfig,
) -> Result<IdentityReport, CatalogError> {
    if !(n >= 0.0) {
        return Err(CatalogError::Domain {
            what: "legendre cosine integral needs n ≥ 0",
        });
    }
    let lhs = lhs_cos_integral(|x| 1.0 / (1.0 + x * x), n, cfg)?;
    let rhs = FRAC_PI_2 * (-n).exp();
    Ok(finish("legendre_cosine", &[("n", n)], lhs, rhs, 1e-9))
}

/// sinh(ax)/sinh(πx) extended by its limit a/π at x = 0, evaluated in a
/// cancellation-free form.
pub(crate) fn sinh_ratio_kernel(a: f64, x: f64) -> f64 {
    if x == 0.0 {
        return a / PI;
    }
    (-(PI - a) * x).exp() * (-2.0 * a * x).exp_m1() / (-2.0 * PI * x).exp_m1()
}

/// ∫₀^∞ [sinh(ax)/sinh(πx)] cos(nx) dx = sin(a) e^{−n} / (1 + 2e^{−n}cos a + e^{−2n}),
/// for |a| < π, n ≥ 0.
pub fn fundamental_identity(
    a: f64,
    n: f64,
    cfg: &QuadratureConfig,
) -> Result<IdentityReport, CatalogError> {
    if !(a.abs() < PI) {
        return Err(CatalogError::Domain {
            what: "fundamental identity needs |a| < π for integrand decay",
        });
    }
    if !(n >= 0.0) {
        return Err(CatalogError::Domain {
            what: "fundamental identity needs n ≥ 0",
        });
    }
    let lhs = lhs_cos_integral(|x| sinh_ratio_kernel(a, x), n, cfg)?;
    let e = (-n).exp();
    let rhs = a.sin() * e / (1.0 + 2.0 * e * a.cos() + e * e);
    Ok(finish("fundamental", &[("a", a), ("n", n)], lhs, rhs, 1e-8))
}

/// Closed form Γ(s)·(x²+u²)^{−s/2}·cos(s·arctan(u/x)).
fn mellin_rhs(s: f64, u: f64, x: f64) -> Result<f64, CatalogError> {
    let gamma_s = ln_gamma(s)?.exp();
    Ok(gamma_s * (x * x + u * u).powf(-0.5 * s) * (s * (u / x).atan()).cos())
}

/// ∫₀^∞ e^{−xz} z^{s−1} cos(uz) dz = Γ(s)(x²+u²)^{−s/2} cos(s·arctan(u/x)),
/// for s > 0, x > 0, u ≥ 0.
pub fn damped_mellin_cosine(
    s: f64,
    u: f64,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<IdentityReport, CatalogError> {
    if !(s > 0.0) || !(x > 0.0) || !(u >= 0.0) {
        return Err(CatalogError::Domain {
            what: "damped Mellin cosine needs s > 0, x > 0, u ≥ 0",
        });
    }
    let lhs = lhs_cos_integral(|z| (-x * z).exp() * z.powf(s - 1.0), u, cfg)?;
    let rhs = mellin_rhs(s, u, x)?;
    Ok(finish(
        "mellin_damped",
        &[("s", s), ("u", u), ("x", x)],
        lhs,
        rhs,
        1e-9,
    ))
}

/// Number of damping halvings in the x → 0 extrapolation.
const LIMIT_LEVELS: usize = 8;

/// ∫₀^∞ z^{s−1} cos(uz) dz = Γ(s) u^{−s} cos(sπ/2) for 0 < s < 1, u > 0.
///
/// The conditionally convergent integral is defined operationally as the
/// x → 0 limit of the damped transform: the damped left-hand sides at
/// x₀, x₀/2, x₀/4, … are Richardson-extrapolated to zero damping.
pub fn mellin_cosine_limit(
    s: f64,
    u: f64,
    cfg: &QuadratureConfig,
) -> Result<IdentityReport, CatalogError> {
    if !(s > 0.0 && s < 1.0) {
        return Err(CatalogError::Domain {
            what: "mellin limit needs 0 < s < 1",
        });
    }
    if !(u > 0.0) {
        return Err(CatalogError::Domain {
            what: "mellin limit needs u > 0",
        });
    }

    let mut diag: Vec<f64> = Vec::new(); // Neville diagonal
    let mut row: Vec<f64> = Vec::new();
    let mut x = 0.5;
    for j in 0..=LIMIT_LEVELS {
        let damped = lhs_cos_integral(|z| (-x * z).exp() * z.powf(s - 1.0), u, cfg)?;
        let mut current = damped.value;
        let mut next_row = Vec::with_capacity(j + 1);
        next_row.push(current);
        for (i, prev) in row.iter().enumerate() {
            let weight = 2f64.powi(i as i32 + 1) - 1.0;
            current += (current - prev) / weight;
            next_row.push(current);
        }
        row = next_row;
        diag.push(current);
        x *= 0.5;
    }

    let deltas: Vec<f64> = diag.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    let last = *deltas.last().unwrap();
    let prev = deltas[deltas.len() - 2];
    if last > 10.0 * prev.max(1e-12) && last > 1e-6 {
        return Err(CatalogError::ExtrapolationUnstable { last_delta: last });
    }

    let lhs = *diag.last().unwrap();
    let rhs = ln_gamma(s)?.exp() * u.powf(-s) * (s * FRAC_PI_2).cos();
    let report = IdentityReport::from_values("mellin_limit", &[("s", s), ("u", u)], lhs, rhs, 1e-8)
        .with_note(format!("extrapolated over {} dampings", LIMIT_LEVELS + 1));
    Ok(report)
}
