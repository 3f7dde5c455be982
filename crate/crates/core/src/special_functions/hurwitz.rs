//! Hurwitz zeta ζ(s, q) by Euler–Maclaurin summation.
//!
//! The same formula evaluates the series region s > 1 and the analytic
//! continuation s < 1: shift the argument until N + q is comfortably large,
//! then apply the trapezoidal correction and a dozen Bernoulli terms.
//!
//! ζ(s,q) = Σ_{n<N} (n+q)^{−s} + a^{1−s}/(s−1) + a^{−s}/2
//!          + Σ_j B_{2j}/(2j)! · s(s+1)…(s+2j−2) · a^{−s−2j+1},   a = N+q.
//!
//! [`hurwitz_zeta_diff`] evaluates ζ(s,q₁) − ζ(s,q₂) with the two poles at
//! s = 1 cancelled explicitly, which keeps zero-sum Dirichlet combinations
//! finite through s = 1.

use super::SpecialError;

/// B_{2j}/(2j)! for j = 1..=12.
const BERNOULLI_OVER_FACT: [f64; 12] = [
    8.333_333_333_333_333e-2,    //  B2/2!   =  1/12
    -1.388_888_888_888_889e-3,   //  B4/4!   = -1/720
    3.306_878_306_878_307e-5,    //  B6/6!   =  1/30240
    -8.267_195_767_195_768e-7,   //  B8/8!   = -1/1209600
    2.087_675_698_786_81e-8,    //  B10/10! =  1/47900160
    -5.284_190_138_687_493e-10,  //  B12/12! = -691/1307674368000
    1.338_253_653_068_468e-11,   //  B14/14!
    -3.389_680_296_322_583e-13,  //  B16/16!
    8.586_062_056_277_845e-15,   //  B18/18!
    -2.174_868_698_558_062e-16,  //  B20/20!
    5.509_002_828_360_229e-18,   //  B22/22!
    -1.395_446_468_581_252e-19,  //  B24/24!
];

/// The shifted argument N + q is pushed to at least this value. Larger
/// shifts sharpen the Bernoulli tail but inflate the cancellation between
/// the head sum and the a^{1−s}/(s−1) term when s < 0, so the target is kept
/// moderate.
const TARGET: f64 = 10.0;

fn shift_count(s: f64, q: f64) -> usize {
    let need = (TARGET - q).max(s.abs() + 2.0 - q).max(0.0);
    need.ceil() as usize
}

/// Euler–Maclaurin correction terms: a^{1−s}/(s−1) is handled by the caller,
/// the rest (trapezoid + Bernoulli) is shared between the plain and the
/// difference evaluators.
fn em_tail(s: f64, a: f64) -> f64 {
    let mut tail = 0.5 * a.powf(-s);
    let mut rising = s; // s(s+1)…(s+2j−2), starting at (s)₁ = s
    let mut apow = a.powf(-s - 1.0);
    let inv_a2 = 1.0 / (a * a);
    for (j, c) in BERNOULLI_OVER_FACT.iter().enumerate() {
        tail += c * rising * apow;
        let m = s + (2 * j + 1) as f64;
        rising *= m * (m + 1.0);
        apow *= inv_a2;
    }
    tail
}

/// ζ(s, q) = Σ_{n≥0} (n+q)^{−s} for s > 1, analytic continuation elsewhere.
///
/// Relative error ≤ 1e−11 over the moderate-argument range used here.
pub fn hurwitz_zeta(s: f64, q: f64) -> Result<f64, SpecialError> {
    if !(q > 0.0) {
        return Err(SpecialError::Domain {
            function: "hurwitz_zeta",
            argument: q,
        });
    }
    if s == 1.0 {
        return Err(SpecialError::Pole {
            function: "hurwitz_zeta",
            argument: s,
        });
    }
    if s.is_nan() {
        return Err(SpecialError::Domain {
            function: "hurwitz_zeta",
            argument: s,
        });
    }
    let n = shift_count(s, q);
    let mut head = 0.0;
    for j in 0..n {
        head += (j as f64 + q).powf(-s);
    }
    let a = n as f64 + q;
    Ok(head + a.powf(1.0 - s) / (s - 1.0) + em_tail(s, a))
}

/// (e^z − 1)/z, accurate through z = 0.
fn expm1_over(z: f64) -> f64 {
    if z.abs() < 1e-150 {
        1.0
    } else {
        z.exp_m1() / z
    }
}

/// ζ(s, q₁) − ζ(s, q₂) with the poles at s = 1 cancelled analytically.
///
/// Both evaluations share one shift so the pole pieces combine into
/// (a₁^{1−s} − a₂^{1−s})/(s−1), which is computed through expm1 and stays
/// finite (and accurate) at s = 1, where the limit is ln(a₂/a₁).
pub fn hurwitz_zeta_diff(s: f64, q1: f64, q2: f64) -> Result<f64, SpecialError> {
    if !(q1 > 0.0) || !(q2 > 0.0) {
        return Err(SpecialError::Domain {
            function: "hurwitz_zeta_diff",
            argument: q1.min(q2),
        });
    }
    if s.is_nan() {
        return Err(SpecialError::Domain {
            function: "hurwitz_zeta_diff",
            argument: s,
        });
    }
    if q1 == q2 {
        return Ok(0.0);
    }
    let n = shift_count(s, q1.min(q2));
    let mut head = 0.0;
    for j in 0..n {
        let jf = j as f64;
        head += (jf + q1).powf(-s) - (jf + q2).powf(-s);
    }
    let a1 = n as f64 + q1;
    let a2 = n as f64 + q2;

    // (a1^u − a2^u)/(−u) with u = 1−s, via a2^u · L · φ(uL), L = ln(a1/a2).
    let u = 1.0 - s;
    let l = ((q1 - q2) / a2).ln_1p();
    let pole_piece = -a2.powf(u) * l * expm1_over(u * l);

    Ok(head + pole_piece + em_tail(s, a1) - em_tail(s, a2))
}
