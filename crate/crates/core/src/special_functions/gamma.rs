//! Log-gamma via the Lanczos approximation (Pugh's g = 10.900511 fit).

use super::SpecialError;
use crate::constants::LN_PI;
use std::f64::consts::{E, PI};

/// ln(2·√(e/π)).
const LN_2_SQRT_E_OVER_PI: f64 = 0.620_782_237_635_245_2;

/// Lanczos shift parameter.
const LANCZOS_G: f64 = 10.900_511;

/// Lanczos partial-fraction coefficients d₀..d₁₀.
const LANCZOS_D: [f64; 11] = [
    2.485_740_891_387_535_5e-5,
    1.051_423_785_817_219_7,
    -3.456_870_972_220_162_5,
    4.512_277_094_668_948,
    -2.982_852_253_235_766_4,
    1.056_397_115_771_267,
    -1.954_287_731_916_458_7e-1,
    1.709_705_434_044_412e-2,
    -5.719_261_174_043_057e-4,
    4.633_994_733_599_057e-6,
    -2.719_949_084_886_077_2e-9,
];

fn lanczos_sum(shifted: impl Fn(usize) -> f64) -> f64 {
    let mut s = LANCZOS_D[0];
    for (k, d) in LANCZOS_D.iter().enumerate().skip(1) {
        s += d / shifted(k);
    }
    s
}

/// ln Γ(x) for x > 0, relative error well inside 1e−13.
pub fn ln_gamma(x: f64) -> Result<f64, SpecialError> {
    if !(x > 0.0) {
        return Err(SpecialError::Domain {
            function: "ln_gamma",
            argument: x,
        });
    }
    Ok(ln_gamma_unchecked(x))
}

/// ln Γ for arguments already known to be positive.
pub(crate) fn ln_gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection: ln Γ(x) = ln(π / sin πx) − ln Γ(1 − x).
        let s = lanczos_sum(|k| k as f64 - x);
        LN_PI
            - (PI * x).sin().ln()
            - s.ln()
            - LN_2_SQRT_E_OVER_PI
            - (0.5 - x) * ((0.5 - x + LANCZOS_G) / E).ln()
    } else {
        let s = lanczos_sum(|k| x + k as f64 - 1.0);
        s.ln() + LN_2_SQRT_E_OVER_PI + (x - 0.5) * ((x - 0.5 + LANCZOS_G) / E).ln()
    }
}
