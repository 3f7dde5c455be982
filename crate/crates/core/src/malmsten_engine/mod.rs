//! Closed-form evaluation of ∫₀¹ ln ln(1/y)·K(y) dy for the Malmsten kernel
//! family, the moment and digamma integrals behind it, the master formula
//! F(a) and its a-derivative family, and exact symbolic rendering of the
//! results.

mod angle;
mod expr;
mod named;
mod ops;
mod rational;

pub use angle::RationalAngle;
pub use expr::{parse, render, Atom, ClosedFormExpr, Coeff, ParseError, Term};
pub use named::{named_example, NAMED_EXAMPLE_IDS};
pub use ops::{
    digamma_difference_integral, digamma_integrand, kernel_integral, kernel_integrand,
    kernel_series, kummer_fourier_check, log_log, loglog_moment, master_f, master_f_negated,
    master_f_real, master_f_series, master_integrand, power_moment, MalmstenKernelSpec,
};
pub use rational::Rational;
