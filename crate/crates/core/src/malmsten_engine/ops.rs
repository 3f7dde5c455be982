//! Closed-form evaluation of the log-log integral family.
//!
//! The master formula for the Malmsten kernel, its a-derivative family, the
//! moment and digamma integrals feeding them, and the Kummer Fourier-series
//! check. Each closed form has quadrature and series counterparts used as
//! independent oracles.

use super::angle::RationalAngle;
use super::expr::{Atom, ClosedFormExpr, Term};
use super::rational::Rational;
use crate::constants::EULER_GAMMA;
use crate::identity_catalog::{CatalogError, IdentityReport};
use crate::series_engine::{
    kummer_series, oscillatory_cosine_sum, oscillatory_sine_sum, SeriesResult,
};
use crate::special_functions::{digamma, ln_gamma};
use std::f64::consts::PI;

/// ln ln(1/y) for y ∈ (0, 1).
pub fn log_log(y: f64) -> f64 {
    (-(y.ln())).ln()
}

/// Kernel selector: the order-0 kernel 1/(1+2y cos a+y²) or its
/// a-derivative ((1+y²)cos a + 2y)/(1+2y cos a+y²)².
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MalmstenKernelSpec {
    pub angle: RationalAngle,
    derivative_order: u8,
}

impl MalmstenKernelSpec {
    pub fn new(angle: RationalAngle, derivative_order: u8) -> Result<Self, CatalogError> {
        if derivative_order > 1 {
            return Err(CatalogError::Domain {
                what: "kernel derivative order must be 0 or 1",
            });
        }
        Ok(MalmstenKernelSpec {
            angle,
            derivative_order,
        })
    }

    pub fn derivative_order(&self) -> u8 {
        self.derivative_order
    }
}

/// ∫₀¹ ln ln(1/y) y^{n−1} dy = −(γ + ln n)/n.
///
/// ln n is expanded over the ln 2 atom when n is a power of two; otherwise
/// it stays a numeric unit term (the expression exists for evaluation and
/// display, not symbolic algebra).
pub fn loglog_moment(n: u32) -> ClosedFormExpr {
    assert!(n >= 1, "moment index starts at 1");
    let n_i = n as i64;
    let mut terms = vec![Term::exact(-1, n_i, 0, 1, Atom::EulerGamma)];
    if n > 1 {
        if n.is_power_of_two() {
            let m = n.trailing_zeros() as i64;
            terms.push(Term::exact(-m, n_i, 0, 1, Atom::LnTwo));
        } else {
            terms.push(Term::numeric(-(n as f64).ln() / n as f64, Atom::Unit));
        }
    }
    ClosedFormExpr::new(terms)
}

/// ∫₀¹ ln^{s−1}(1/y) y^{n−1} dy = Γ(s)/n^s for s > 0.
pub fn power_moment(s: f64, n: u32) -> Result<f64, CatalogError> {
    if !(s > 0.0) {
        return Err(CatalogError::Domain {
            what: "power moment needs s > 0",
        });
    }
    assert!(n >= 1, "moment index starts at 1");
    Ok((ln_gamma(s)? - s * (n as f64).ln()).exp())
}

/// ∫₀¹ (y^a − y^b)/(1−y²) dy = [ψ((b+1)/2) − ψ((a+1)/2)]/2 for a, b > −1.
pub fn digamma_difference_integral(a: f64, b: f64) -> Result<f64, CatalogError> {
    if !(a > -1.0) || !(b > -1.0) {
        return Err(CatalogError::Domain {
            what: "digamma integral needs a, b > −1",
        });
    }
    Ok(0.5 * (digamma(0.5 * (b + 1.0))? - digamma(0.5 * (a + 1.0))?))
}

/// The integrand of [`digamma_difference_integral`], extended by continuity
/// at y = 1 where its limit is (b − a)/2.
pub fn digamma_integrand(a: f64, b: f64) -> impl Fn(f64) -> f64 {
    move |y: f64| {
        let denom = 1.0 - y * y;
        if denom.abs() < 1e-12 {
            (b - a) / 2.0
        } else {
            (y.powf(a) - y.powf(b)) / denom
        }
    }
}

fn master_terms(k: i64, l: i64) -> ClosedFormExpr {
    debug_assert!(l > 0 && k.abs() < l);
    let two_l = 2 * l;
    ClosedFormExpr::new(vec![
        Term::exact(k, two_l, 1, 1, Atom::LnTwoPi),
        Term::exact(
            1,
            2,
            1,
            1,
            Atom::LnGamma(Rational::new(l + k, two_l)),
        ),
        Term::exact(
            -1,
            2,
            1,
            1,
            Atom::LnGamma(Rational::new(l - k, two_l)),
        ),
    ])
}

/// Master formula: for a = kπ/l,
///
/// F(a) = ∫₀¹ ln ln(1/y)·sin a/(1+2y cos a+y²) dy
///      = (π/2)[(a/π) ln 2π + ln Γ(1/2 + a/2π) − ln Γ(1/2 − a/2π)].
pub fn master_f(angle: &RationalAngle) -> ClosedFormExpr {
    master_terms(angle.k() as i64, angle.l() as i64)
}

/// F with the angle negated: the ln Γ arguments swap and every sign flips.
/// Exposed for the oddness property; the public surface stays on 0 < k < l.
pub fn master_f_negated(angle: &RationalAngle) -> ClosedFormExpr {
    master_terms(-(angle.k() as i64), angle.l() as i64)
}

/// Real-angle extension of F for finite-difference tests only; |a| < π.
pub fn master_f_real(a: f64) -> Result<f64, CatalogError> {
    if !(a.abs() < PI) {
        return Err(CatalogError::Domain {
            what: "master formula extension needs |a| < π",
        });
    }
    let x = a / (2.0 * PI);
    Ok(PI / 2.0
        * ((a / PI) * crate::constants::LN_TWO_PI + ln_gamma(0.5 + x)? - ln_gamma(0.5 - x)?))
}

/// The integrand of the master formula at a real angle.
pub fn master_integrand(a: f64) -> impl Fn(f64) -> f64 {
    let (sin_a, cos_a) = a.sin_cos();
    move |y: f64| log_log(y) * sin_a / (1.0 + 2.0 * y * cos_a + y * y)
}

/// Closed form of ∫₀¹ ln ln(1/y)·K(y) dy for the selected kernel.
///
/// Order 0 divides F(a) by sin a, carrying the sine exactly as a √-factor
/// for the tabulated denominators; order 1 is
/// (ln 2π)/2 + ψ(1/2 + a/2π)/4 + ψ(1/2 − a/2π)/4.
pub fn kernel_integral(spec: &MalmstenKernelSpec) -> ClosedFormExpr {
    let angle = &spec.angle;
    match spec.derivative_order {
        0 => {
            let f = master_f(angle);
            match angle.exact_sin() {
                // 1/(c·√q) = (1/(c·q))·√q keeps the expression exact
                Some((c, q)) => f.scale(&c.mul_int(q as i64).recip(), q),
                None => f.scale_numeric(1.0 / angle.radians().sin()),
            }
        }
        _ => {
            let (k, l) = (angle.k() as i64, angle.l() as i64);
            let two_l = 2 * l;
            ClosedFormExpr::new(vec![
                Term::exact(1, 2, 0, 1, Atom::LnTwoPi),
                Term::exact(1, 4, 0, 1, Atom::Digamma(Rational::new(l + k, two_l))),
                Term::exact(1, 4, 0, 1, Atom::Digamma(Rational::new(l - k, two_l))),
            ])
        }
    }
}

/// The integrand matching [`kernel_integral`] at a real angle.
pub fn kernel_integrand(order: u8, a: f64) -> impl Fn(f64) -> f64 {
    let cos_a = a.cos();
    move |y: f64| {
        let quad = 1.0 + 2.0 * y * cos_a + y * y;
        match order {
            0 => log_log(y) / quad,
            _ => log_log(y) * ((1.0 + y * y) * cos_a + 2.0 * y) / (quad * quad),
        }
    }
}

/// Series route for F(a): expand the kernel into Σ (−1)^{n−1} y^{n−1} sin(na),
/// integrate termwise with the log-log moments, accelerate.
///
/// F(a) = Σ (−1)^{n−1} sin(na)·(−(γ+ln n)/n) = −Σ sin(n(π−a))·(γ+ln n)/n.
pub fn master_f_series(a: f64, cap: usize) -> Result<SeriesResult, CatalogError> {
    let mut r = oscillatory_sine_sum(
        |n| (EULER_GAMMA + (n as f64).ln()) / n as f64,
        PI - a,
        cap,
    )?;
    r.value = -r.value;
    Ok(r)
}

/// Series route for the kernel integrals: order 0 is F-series/sin a; order 1
/// is the termwise a-derivative Σ (−1)^{n−1} cos(na)·(−(γ+ln n)), whose
/// accelerated (Abel) value matches the closed form.
pub fn kernel_series(spec: &MalmstenKernelSpec, cap: usize) -> Result<SeriesResult, CatalogError> {
    let a = spec.angle.radians();
    match spec.derivative_order {
        0 => {
            let mut r = master_f_series(a, cap)?;
            r.value /= a.sin();
            r.error_estimate /= a.sin().abs();
            Ok(r)
        }
        _ => Ok(oscillatory_cosine_sum(
            |n| EULER_GAMMA + (n as f64).ln(),
            PI - a,
            cap,
        )?),
    }
}

/// Kummer's Fourier series against ln Γ directly: |x| < 1/2.
pub fn kummer_fourier_check(x: f64, cap: usize) -> Result<IdentityReport, CatalogError> {
    if !(x.abs() < 0.5) {
        return Err(CatalogError::Domain {
            what: "kummer check needs |x| < 1/2",
        });
    }
    let lhs = ln_gamma(0.5 + x)? - ln_gamma(0.5 - x)?;
    let rhs = kummer_series(x, cap)?;
    Ok(
        IdentityReport::from_values("kummer", &[("x", x)], lhs, rhs.value, 1e-7).with_note(
            format!("series consumed {} terms", rhs.terms_used),
        ),
    )
}
