//! Exp-sinh rule on (0, ∞).
//!
//! The transform x(t) = e^{(π/2) sinh t} maps ℝ onto (0, ∞) with weight
//! w(t) = x(t)·(π/2)·cosh t. Suitable for integrands that decay at least
//! exponentially (or fast algebraically) at infinity; conditionally
//! convergent oscillatory tails are handled elsewhere by half-period
//! partitioning, not by this rule.

use super::{LevelDriver, QuadratureConfig, QuadratureError, QuadratureResult};
use std::f64::consts::FRAC_PI_2;

/// Abscissas beyond this are dropped; decaying integrands are long dead and
/// anything else was never integrable on (0, ∞).
const X_MAX: f64 = 1e300;

fn node(t: f64) -> Option<(f64, f64)> {
    let x = (FRAC_PI_2 * t.sinh()).exp();
    if x <= 0.0 || x >= X_MAX {
        return None;
    }
    let w = x * FRAC_PI_2 * t.cosh();
    if !w.is_finite() || w == 0.0 {
        return None;
    }
    Some((x, w))
}

/// ∫₀^∞ f(x) dx. `f` is never evaluated at 0 and never past 1e300.
pub fn integrate_semi_infinite<F>(
    f: F,
    cfg: &QuadratureConfig,
) -> Result<QuadratureResult, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    cfg.validate();
    let driver = LevelDriver {
        tol: cfg.abs_tolerance,
        max_level: cfg.max_level,
        budget: cfg.budget,
    };

    driver.run(|h, level, evals| {
        let mut sum = 0.0;
        if level == 0 {
            sum += eval_at(&f, 0.0, evals)?.unwrap_or(0.0);
        }
        for dir in [1.0f64, -1.0] {
            let mut scale = 0.0f64;
            let mut quiet = 0u32;
            let step = if level == 0 { 1.0 } else { 2.0 };
            let mut k = 1.0;
            loop {
                let t = dir * k * h;
                match eval_at(&f, t, evals)? {
                    None => break,
                    Some(contrib) => {
                        sum += contrib;
                        let mag = contrib.abs();
                        scale = scale.max(mag);
                        if mag <= 1e-18 * scale {
                            quiet += 1;
                            // oscillatory integrands cross zero; require a
                            // run of negligible terms before stopping
                            if quiet >= 4 {
                                break;
                            }
                        } else {
                            quiet = 0;
                        }
                    }
                }
                k += step;
            }
        }
        Ok(sum)
    })
}

fn eval_at<F>(f: &F, t: f64, evals: &mut usize) -> Result<Option<f64>, QuadratureError>
where
    F: Fn(f64) -> f64,
{
    match node(t) {
        None => Ok(None),
        Some((x, w)) => {
            *evals += 1;
            let v = f(x);
            if !v.is_finite() {
                return Err(QuadratureError::NonFiniteIntegrand { abscissa: x });
            }
            Ok(Some(w * v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn laplace_cosine() {
        // ∫₀^∞ e^{−2t} cos(3t) dt = 2/13
        let r = integrate_semi_infinite(|t| (-2.0 * t).exp() * (3.0 * t).cos(), &cfg()).unwrap();
        assert!((r.value - 2.0 / 13.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn laplace_sine() {
        // ∫₀^∞ e^{−2t} sin(3t) dt = 3/13
        let r = integrate_semi_infinite(|t| (-2.0 * t).exp() * (3.0 * t).sin(), &cfg()).unwrap();
        assert!((r.value - 3.0 / 13.0).abs() < 1e-12, "{}", r.value);
    }

    #[test]
    fn plain_exponential() {
        let r = integrate_semi_infinite(|t| (-t).exp(), &cfg()).unwrap();
        assert!(r.converged);
        assert!((r.value - 1.0).abs() < 1e-12);
    }

    #[test]
    fn gamma_three() {
        // ∫₀^∞ t² e^{−t} dt = 2
        let r = integrate_semi_infinite(|t| t * t * (-t).exp(), &cfg()).unwrap();
        assert!((r.value - 2.0).abs() < 1e-11);
    }

    #[test]
    fn algebraic_decay() {
        // ∫₀^∞ dx/(1+x²) = π/2
        let r = integrate_semi_infinite(|x| 1.0 / (1.0 + x * x), &cfg()).unwrap();
        assert!(r.converged);
        assert!((r.value - FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn oscillatory_algebraic_decay() {
        // ∫₀^∞ cos(2x)/(1+x²) dx = (π/2) e^{−2}; the rule is not designed
        // for conditionally convergent oscillation, so only modest accuracy
        // is demanded of it here (the catalog uses half-period cells).
        let r = integrate_semi_infinite(|x| (2.0 * x).cos() / (1.0 + x * x), &cfg()).unwrap();
        let expect = FRAC_PI_2 * (-2.0f64).exp();
        assert!(
            (r.value - expect).abs() < 1e-4,
            "value={} expect={expect}",
            r.value
        );
    }

    #[test]
    fn singular_endpoint_times_decay() {
        // ∫₀^∞ z^{−1/2} e^{−z} dz = Γ(1/2) = √π
        let r = integrate_semi_infinite(|z| (-z).exp() / z.sqrt(), &cfg()).unwrap();
        assert!((r.value - PI.sqrt()).abs() < 1e-11);
    }
}
