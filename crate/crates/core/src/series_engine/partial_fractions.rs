//! Partial-fraction expansions of sin(ax)/sin(bx), cos(ax)/sin(bx) and the
//! hyperbolic ratio sinh(ay)/sinh(by).
//!
//! Each evaluator returns a plain N-term partial sum with a caller-visible
//! truncation index and a Dirichlet-test tail bound: the oscillating factors
//! (−1)^{k+1} sin(akπ/b) / cos(akπ/b) have partial sums bounded by
//! 1/|cos(aπ/2b)|, and the envelopes decrease once kπ clears |bx|.

use super::{SeriesError, SeriesMethod, SeriesResult};
use std::f64::consts::PI;

/// Parameters shared by the circular-ratio expansions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialFractionParams {
    pub a: f64,
    pub b: f64,
    pub x: f64,
}

/// Partial-sum bound on the oscillating factor; infinite when a/b makes the
/// factor non-oscillating (|a| = |b| is handled separately).
fn dirichlet_bound(a: f64, b: f64) -> f64 {
    let c = (a * PI / (2.0 * b)).cos().abs();
    if c < 1e-12 {
        f64::INFINITY
    } else {
        1.0 / c
    }
}

fn check_ratio_domain(a: f64, b: f64) -> Result<(), SeriesError> {
    if b == 0.0 || !a.is_finite() || !b.is_finite() {
        return Err(SeriesError::Domain {
            what: "partial-fraction parameters must be finite with b ≠ 0",
        });
    }
    if a.abs() > b.abs() {
        // The expansion only represents the ratio for |a| ≤ |b|.
        return Err(SeriesError::Domain {
            what: "partial-fraction expansion requires |a| ≤ |b|",
        });
    }
    Ok(())
}

/// sin(ax)/sin(bx) = 2π Σ (−1)^{k+1} sin(akπ/b) · k/((kπ)² − (bx)²).
pub fn sin_ratio_pf(p: &PartialFractionParams, n_terms: usize) -> Result<SeriesResult, SeriesError> {
    check_ratio_domain(p.a, p.b)?;
    if p.a.abs() == p.b.abs() {
        // Every residue sin(akπ/b) = sin(±kπ) vanishes and the expansion
        // degenerates; the ratio itself is exactly ±1.
        return Ok(SeriesResult {
            value: (p.a / p.b).signum(),
            error_estimate: 0.0,
            terms_used: 0,
            method: SeriesMethod::Direct,
        });
    }
    let bx = p.b * p.x;
    let mut sum = 0.0;
    for k in 1..=n_terms as u64 {
        let kpi = k as f64 * PI;
        let denom = kpi * kpi - bx * bx;
        if denom == 0.0 || denom.abs() < f64::MIN_POSITIVE {
            return Err(SeriesError::PolePinch {
                k,
                denominator: denom,
            });
        }
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        sum += 2.0 * PI * sign * (p.a * kpi / p.b).sin() * k as f64 / denom;
    }
    let est = sin_tail_bound(p, n_terms);
    Ok(SeriesResult {
        value: sum,
        error_estimate: est,
        terms_used: n_terms,
        method: SeriesMethod::Direct,
    })
}

fn sin_tail_bound(p: &PartialFractionParams, n: usize) -> f64 {
    let bx = (p.b * p.x).abs();
    let k1 = (n + 1) as f64 * PI;
    if k1 * k1 <= 2.0 * bx * bx {
        return f64::INFINITY; // envelope not yet decreasing
    }
    2.0 * dirichlet_bound(p.a, p.b) * 2.0 * PI * (n + 1) as f64 / (k1 * k1 - bx * bx)
}

/// cos(ax)/sin(bx) = 1/(bx) + Σ (−1)^{k+1} cos(akπ/b) · 2bx/((kπ)² − (bx)²).
///
/// a = b = 1 reproduces the cotangent expansion.
pub fn cos_ratio_pf(p: &PartialFractionParams, n_terms: usize) -> Result<SeriesResult, SeriesError> {
    check_ratio_domain(p.a, p.b)?;
    let bx = p.b * p.x;
    if bx == 0.0 {
        return Err(SeriesError::Domain {
            what: "cos/sin ratio needs bx ≠ 0 for its leading 1/(bx) term",
        });
    }
    let mut sum = 1.0 / bx;
    for k in 1..=n_terms as u64 {
        let kpi = k as f64 * PI;
        let denom = kpi * kpi - bx * bx;
        if denom == 0.0 || denom.abs() < f64::MIN_POSITIVE {
            return Err(SeriesError::PolePinch {
                k,
                denominator: denom,
            });
        }
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        sum += sign * (p.a * kpi / p.b).cos() * 2.0 * bx / denom;
    }
    // Tail: Dirichlet bound when the factor oscillates, absolute bound always.
    let k1 = (n_terms + 1) as f64 * PI;
    let est = if k1 * k1 <= 2.0 * bx * bx {
        f64::INFINITY
    } else {
        let envelope = 2.0 * bx.abs() / (k1 * k1 - bx * bx);
        let dirichlet = 2.0 * dirichlet_bound(p.a, p.b) * envelope;
        // |Σ_{k>N} cos(·)·2bx/((kπ)²−(bx)²)| ≤ Σ envelope ≈ 2|bx|/π²·1/N
        let absolute = 2.0 * bx.abs() / (PI * PI) * (1.0 / n_terms as f64)
            / (1.0 - (bx / k1) * (bx / k1));
        dirichlet.min(absolute)
    };
    Ok(SeriesResult {
        value: sum,
        error_estimate: est,
        terms_used: n_terms,
        method: SeriesMethod::Direct,
    })
}

/// sinh(ay)/sinh(by) = 2π Σ (−1)^{k+1} sin(akπ/b) · k/((kπ)² + (by)²).
///
/// The printed source carries (bx)² in the final denominator; the
/// substitution x = iy that produces the hyperbolic form makes it (by)²,
/// which is what is implemented (and what matches the ratio numerically).
pub fn sinh_ratio_pf(a: f64, b: f64, y: f64, n_terms: usize) -> Result<SeriesResult, SeriesError> {
    check_ratio_domain(a, b)?;
    if a.abs() == b.abs() {
        return Ok(SeriesResult {
            value: (a / b).signum(),
            error_estimate: 0.0,
            terms_used: 0,
            method: SeriesMethod::Direct,
        });
    }
    let by = b * y;
    let mut sum = 0.0;
    for k in 1..=n_terms as u64 {
        let kpi = k as f64 * PI;
        let denom = kpi * kpi + by * by;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        sum += 2.0 * PI * sign * (a * kpi / b).sin() * k as f64 / denom;
    }
    let k1 = (n_terms + 1) as f64 * PI;
    let est = 2.0 * dirichlet_bound(a, b) * 2.0 * PI * (n_terms + 1) as f64 / (k1 * k1 + by * by);
    Ok(SeriesResult {
        value: sum,
        error_estimate: est,
        terms_used: n_terms,
        method: SeriesMethod::Direct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_ratio_matches_direct_evaluation() {
        let p = PartialFractionParams {
            a: 1.0,
            b: 2.0,
            x: 0.3,
        };
        let direct = (p.a * p.x).sin() / (p.b * p.x).sin();
        let r = sin_ratio_pf(&p, 20_000).unwrap();
        assert!(
            (r.value - direct).abs() <= r.error_estimate,
            "err {} > est {}",
            (r.value - direct).abs(),
            r.error_estimate
        );
        assert!((r.value - direct).abs() < 1e-3);
    }

    #[test]
    fn sin_ratio_degenerate_equal_arguments() {
        let p = PartialFractionParams {
            a: 1.3,
            b: 1.3,
            x: 0.77,
        };
        let r = sin_ratio_pf(&p, 100).unwrap();
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn sin_ratio_partial_sums_bracket_the_limit() {
        // (a=1, b=3): the residues (−1)^{k+1} sin(kπ/3) carry the pattern
        // (+, −, 0, +, −, 0)·√3/2, so consecutive nonzero-term partial sums
        // land on opposite sides of the limit.
        let p = PartialFractionParams {
            a: 1.0,
            b: 3.0,
            x: 0.5,
        };
        let direct = (p.a * p.x).sin() / (p.b * p.x).sin();
        let mut signs = Vec::new();
        for n in 30..42 {
            if n % 3 == 0 {
                continue; // zero residue, partial sum unchanged
            }
            let r = sin_ratio_pf(&p, n).unwrap();
            signs.push((r.value - direct).signum());
        }
        for pair in signs.windows(2) {
            assert_ne!(pair[0], pair[1], "partial sums should bracket: {signs:?}");
        }
    }

    #[test]
    fn cos_ratio_is_cotangent_at_equal_arguments() {
        let p = PartialFractionParams {
            a: 1.0,
            b: 1.0,
            x: 0.7,
        };
        let cot = p.x.cos() / p.x.sin();
        let r = cos_ratio_pf(&p, 50_000).unwrap();
        assert!((r.value - cot).abs() <= r.error_estimate);
        assert!((r.value - cot).abs() < 1e-4);
    }

    #[test]
    fn cos_ratio_general_point() {
        let p = PartialFractionParams {
            a: 1.0,
            b: 2.0,
            x: 0.4,
        };
        let direct = (p.a * p.x).cos() / (p.b * p.x).sin();
        let r = cos_ratio_pf(&p, 20_000).unwrap();
        assert!((r.value - direct).abs() <= r.error_estimate);
    }

    #[test]
    fn cos_ratio_small_x_stays_bounded_after_pole_removal() {
        // series value − 1/(bx) is the removable part at x → 0.
        let mut previous = f64::NAN;
        for &x in &[1e-2, 1e-4, 1e-6] {
            let p = PartialFractionParams { a: 1.0, b: 2.0, x };
            let r = cos_ratio_pf(&p, 2_000).unwrap();
            let removable = r.value - 1.0 / (p.b * p.x);
            assert!(removable.abs() < 1.0, "x={x} removable={removable}");
            if previous.is_finite() {
                assert!((removable - previous).abs() < 0.05);
            }
            previous = removable;
        }
    }

    #[test]
    fn sinh_ratio_matches_direct() {
        let direct = 2.0f64.sinh() / (2.0 * PI).sinh();
        let r = sinh_ratio_pf(1.0, PI, 2.0, 40_000).unwrap();
        assert!((r.value - direct).abs() <= r.error_estimate);
        assert!((r.value - direct).abs() < 1e-3);
    }

    #[test]
    fn sinh_ratio_zero_numerator() {
        let r = sinh_ratio_pf(0.0, PI, 2.0, 100).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn sinh_ratio_small_y_limit() {
        // y → 0 gives a/b by L'Hôpital; at (a, b) = (1, π) that is 1/π.
        let r = sinh_ratio_pf(1.0, PI, 1e-8, 40_000).unwrap();
        assert!((r.value - 1.0 / PI).abs() <= r.error_estimate + 1e-9);
    }

    #[test]
    fn pole_pinch_detected() {
        // bx = 2π puts the k = 2 denominator at zero.
        let p = PartialFractionParams {
            a: 0.5,
            b: 1.0,
            x: 2.0 * PI,
        };
        let err = sin_ratio_pf(&p, 10).unwrap_err();
        assert!(matches!(err, SeriesError::PolePinch { k: 2, .. }));
    }

    #[test]
    fn rejects_a_larger_than_b() {
        let p = PartialFractionParams {
            a: 3.0,
            b: 1.0,
            x: 0.2,
        };
        assert!(sin_ratio_pf(&p, 10).is_err());
    }
}
