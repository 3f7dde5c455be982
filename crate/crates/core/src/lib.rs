//! Numerics for log-log integrals and their closed forms.
//!
//! This crate evaluates and machine-checks a family of classical identities:
//! integrals of the form `∫₀¹ ln ln(1/y) K(y) dy` for Malmsten-type kernels,
//! the Dirichlet series functional equations they rest on, and the partial
//! fraction / Fourier expansions that connect the two.
//!
//! Every identity is treated as a pair of independent evaluation routes:
//!
//! * a numerical route (double-exponential quadrature or accelerated series
//!   summation), and
//! * a closed-form route (special-function compositions, exact symbolic
//!   expressions over the constants γ, π, ln 2π, ln Γ, ψ).
//!
//! Agreement between routes is reported through
//! [`identity_catalog::IdentityReport`] values, which the CLI and the test
//! suite consume.
//!
//! Module map:
//!
//! * [`constants`] — fixed constants (γ, ln 2π, …).
//! * [`special_functions`] — ln Γ, ψ, Hurwitz ζ and the Dirichlet values
//!   η, λ, β, ζ.
//! * [`quadrature`] — tanh-sinh and exp-sinh rules; the oracle for every
//!   integral identity.
//! * [`series_engine`] — partial-fraction expansions, Poisson kernels, and
//!   the alternating-series accelerator.
//! * [`identity_catalog`] — the registry of integral identities with
//!   verification reports.
//! * [`dirichlet_functional`] — two-parameter odd Dirichlet series and the
//!   η/λ/ζ functional equations.
//! * [`malmsten_engine`] — closed-form evaluation of the log-log integral
//!   family and exact expression rendering.
//!
//! # Example
//!
//! Vardi's integral ∫₀¹ ln ln(1/y)/(1+y²) dy, evaluated by quadrature and
//! by its closed form (π/2)[½ ln 2π + ln Γ(3/4) − ln Γ(1/4)]:
//!
//! ```
//! use loglog_core::malmsten_engine::{log_log, master_f, RationalAngle};
//! use loglog_core::quadrature::{integrate_unit_interval, QuadratureConfig};
//!
//! let quad = integrate_unit_interval(
//!     |y| log_log(y) / (1.0 + y * y),
//!     &QuadratureConfig::default(),
//! )
//! .unwrap();
//! let closed = master_f(&RationalAngle::new(1, 2).unwrap()).numeric_eval();
//!
//! assert!((quad.value - closed).abs() < 1e-9);
//! assert!((closed - (-0.2604428063)).abs() < 1e-9);
//! ```

// `!(x > 0.0)`-style domain guards intentionally treat NaN as out of domain.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constants;
pub mod dirichlet_functional;
pub mod identity_catalog;
pub mod malmsten_engine;
pub mod quadrature;
pub mod series_engine;
pub mod special_functions;

/// IEEE-754 binary64 scalar; every real quantity in the crate is one of these.
pub type Real = f64;
