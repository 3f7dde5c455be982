//! Fixed numerical constants.
//!
//! γ is a stored constant rather than something recomputed from its limit
//! definition; all closed forms treat it as the atom −Γ′(1).

/// Euler–Mascheroni constant γ = −Γ′(1) = 0.577215664901…
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// ln(2π).
pub const LN_TWO_PI: f64 = 1.837_877_066_409_345_5;

/// ln(π).
pub const LN_PI: f64 = 1.144_729_885_849_400_2;

/// The constants every closed form in the crate is assembled from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalConstants {
    pub euler_gamma: f64,
    pub pi: f64,
    pub ln_two_pi: f64,
}

/// Compile-time instance; never recomputed.
pub const FUNDAMENTAL: FundamentalConstants = FundamentalConstants {
    euler_gamma: EULER_GAMMA,
    pi: std::f64::consts::PI,
    ln_two_pi: LN_TWO_PI,
};
