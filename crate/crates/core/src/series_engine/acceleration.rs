//! Alternating-series acceleration (Cohen–Rodriguez Villegas–Zagier).
//!
//! The single accelerator in the crate is the Chebyshev-polynomial scheme of
//! CVZ: given the first n terms of Σ (−1)^k a_k it returns the sum with
//! error roughly (3+√8)^{−n} when a_k is a moment sequence. The scheme is
//! linear with real weights, so feeding it the real or imaginary part of a
//! geometrically carried sequence a_k = g(k)·z^k inherits the complex
//! convergence rate; it therefore also sums sine/cosine-weighted series
//! whose phase step is not exactly π, at a slower but still geometric rate.
//!
//! Slowly oscillating series are folded to alternating form first by pairing
//! half-periods: consecutive same-sign terms are grouped into blocks whose
//! sums alternate strictly. The fold is exact when the sign runs have one
//! uniform length (a whole-term half-period); otherwise the block envelope
//! is sampled non-uniformly and would poison the acceleration, so sums with
//! a known phase step are instead index-decimated until the effective step
//! folds near π, and black-box sums fall back to the raw scheme or to lossy
//! pairing with an honest cross-checked estimate.

use super::{SeriesError, SeriesMethod, SeriesResult};

/// Σ_{k≥0} (−1)^k a_k from the first `a.len()` terms (CVZ Algorithm 1).
///
/// The scheme's internal weights reach (3+√8)^n, so n must stay below ~380
/// to avoid overflow; [`accelerate_prefix`] windows longer inputs.
pub(crate) fn cvz_sum(a: &[f64]) -> f64 {
    let n = a.len();
    if n == 0 {
        return 0.0;
    }
    debug_assert!(n <= 380, "CVZ weights overflow past ~380 entries");
    let nf = n as f64;
    let mut d = (3.0 + 8.0f64.sqrt()).powi(n as i32);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut s = 0.0;
    for (k, ak) in a.iter().enumerate() {
        let kf = k as f64;
        c = b - c;
        s += c * ak;
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// Accelerated Σ entries[k] where the entries already carry their signs and
/// should behave like (−1)^k · (moment sequence). Returns the value and the
/// consecutive-cap discrepancy used as the error cross-check.
fn cvz_signed_tail(entries: &[f64]) -> (f64, f64) {
    let n = entries.len();
    let alt: Vec<f64> = entries
        .iter()
        .enumerate()
        .map(|(k, t)| if k % 2 == 0 { *t } else { -*t })
        .collect();
    let full = cvz_sum(&alt);
    if n < 3 {
        return (full, f64::INFINITY);
    }
    let d1 = (full - cvz_sum(&alt[..n - 1])).abs();
    let d2 = (full - cvz_sum(&alt[..n - 2])).abs();
    (full, d1.max(d2))
}

/// Sign runs of a term prefix. Zeros extend the current run.
fn run_lengths(terms: &[f64]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut len = 0usize;
    let mut sign = 0i8;
    for &t in terms {
        let s = if t > 0.0 {
            1
        } else if t < 0.0 {
            -1
        } else {
            0
        };
        if s != 0 && sign != 0 && s != sign {
            runs.push(len);
            len = 0;
        }
        if s != 0 {
            sign = s;
        }
        len += 1;
    }
    if len > 0 {
        runs.push(len);
    }
    runs
}

/// True when the interior sign runs all have the same length ≥ 2: the
/// half-period is then a whole number of terms and block sums sample the
/// envelope uniformly.
fn uniform_half_period(runs: &[usize]) -> bool {
    if runs.len() < 4 {
        return false;
    }
    // first run may be clipped by leading zeros, last by truncation
    let interior = &runs[1..runs.len() - 1];
    let l = interior[0];
    l >= 2 && interior.iter().all(|r| *r == l)
}

/// Mean run length over the complete interior runs.
fn mean_run_length(runs: &[usize]) -> f64 {
    if runs.len() < 3 {
        return f64::INFINITY;
    }
    let interior = &runs[1..runs.len() - 1];
    interior.iter().sum::<usize>() as f64 / interior.len() as f64
}

/// Group consecutive same-sign terms (zeros continue the current run) into
/// block sums; the blocks alternate strictly in sign.
fn sign_run_blocks(terms: &[f64]) -> Vec<f64> {
    let mut blocks = Vec::new();
    let mut acc = 0.0f64;
    let mut sign = 0i8;
    for &t in terms {
        if t != 0.0 {
            let s = if t > 0.0 { 1 } else { -1 };
            if sign == 0 {
                sign = s;
            } else if s != sign {
                blocks.push(acc);
                acc = 0.0;
                sign = s;
            }
        }
        acc += t;
    }
    if acc != 0.0 {
        blocks.push(acc);
    }
    blocks
}

/// Heuristic error estimate 3^{−entries} · envelope with a machine floor.
fn heuristic_estimate(entries: usize, envelope: f64) -> f64 {
    let rate = 3.0f64.powi(-(entries.min(300) as i32));
    envelope * rate.max(4.0 * f64::EPSILON)
}

/// Accelerated sum of Σ_{k≥1} term(k).
///
/// The terms must alternate in envelope, or oscillate so that sign
/// extraction yields an accelerable series. `cap` bounds the number of terms
/// consumed. The error estimate combines the 3^{−cap} heuristic with a
/// consecutive-cap cross-check; when the cross-check is an order of
/// magnitude out the evaluation is reported unreliable instead of returned.
pub fn accelerated_alternating_sum<F>(mut term: F, cap: usize) -> Result<SeriesResult, SeriesError>
where
    F: FnMut(u64) -> f64,
{
    if cap < 8 {
        return Err(SeriesError::Domain {
            what: "acceleration cap must be at least 8",
        });
    }
    let terms: Vec<f64> = (1..=cap as u64).map(&mut term).collect();
    accelerate_prefix(&terms)
}

/// Entries beyond this are summed directly and only the trailing window is
/// accelerated; the CVZ weights would overflow past ~380 entries anyway, and
/// the head sum shrinks the envelope the scheme has to work against.
const CVZ_WINDOW: usize = 340;

/// Shared driver for a fully materialised prefix of signed terms.
pub(crate) fn accelerate_prefix(terms: &[f64]) -> Result<SeriesResult, SeriesError> {
    let consumed = terms.len();
    if terms.iter().all(|t| *t == 0.0) {
        return Ok(SeriesResult {
            value: 0.0,
            error_estimate: 0.0,
            terms_used: consumed,
            method: SeriesMethod::Accelerated,
        });
    }

    let runs = run_lengths(terms);
    // Uniform runs fold exactly; short irregular runs keep a usable carrier
    // for the raw scheme; long irregular runs fold with some envelope jitter
    // (the cross-check keeps the estimate honest).
    let entries: Vec<f64> = if uniform_half_period(&runs) || mean_run_length(&runs) > 4.5 {
        sign_run_blocks(terms)
    } else {
        terms.to_vec()
    };

    if entries.len() < 4 || runs.len() < 3 {
        // no alternating structure to accelerate
        return Err(SeriesError::UnreliableAcceleration {
            value: entries.iter().sum(),
            discrepancy: f64::INFINITY,
        });
    }

    let split = entries.len().saturating_sub(CVZ_WINDOW);
    let head: f64 = entries[..split].iter().sum();
    let window = &entries[split..];

    let envelope = window.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    let (tail, discrepancy) = cvz_signed_tail(window);
    let value = head + tail;
    let heuristic = heuristic_estimate(window.len(), envelope);
    // Irregular half-period folds carry sampling jitter a few orders above
    // machine precision; that comes back as an honest error estimate. The
    // unreliable signal is reserved for sequences with no usable alternating
    // structure at all.
    if discrepancy > 10.0 * heuristic && discrepancy > 2e-4 * envelope {
        return Err(SeriesError::UnreliableAcceleration { value, discrepancy });
    }
    Ok(SeriesResult {
        value,
        error_estimate: discrepancy.max(heuristic),
        terms_used: consumed,
        method: SeriesMethod::Accelerated,
    })
}

/// Reduce θ to [0, π] with a sign so that sin(nθ) = sign·sin(nθ_r) for all n.
fn fold_sine_angle(theta: f64) -> (f64, f64) {
    let two_pi = std::f64::consts::TAU;
    let mut t = theta % two_pi;
    if t < 0.0 {
        t += two_pi;
    }
    if t > std::f64::consts::PI {
        (two_pi - t, -1.0)
    } else {
        (t, 1.0)
    }
}

/// Fold an arbitrary phase into [0, π].
fn fold_to_pi(theta: f64) -> f64 {
    let two_pi = std::f64::consts::TAU;
    let mut t = theta % two_pi;
    if t < 0.0 {
        t += two_pi;
    }
    if t > std::f64::consts::PI {
        two_pi - t
    } else {
        t
    }
}

/// Head-sum plus accelerated window over literally signed terms.
fn direct_window_sum(terms: &[f64]) -> (f64, f64, f64) {
    let split = terms.len().saturating_sub(CVZ_WINDOW);
    let head: f64 = terms[..split].iter().sum();
    let window = &terms[split..];
    let envelope = window.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    let (tail, discrepancy) = cvz_signed_tail(window);
    (head + tail, discrepancy, envelope)
}

/// Interleave factor D ∈ 1..=10 whose sub-series phase D·φ folds near π,
/// where the alternating scheme converges fastest. A phase folding into the
/// slow band near 0 makes the direct scheme crawl and irregular blocks
/// jitter; decimating the index moves it out. Small factors are preferred
/// (each sub-series gets cap/D terms), so the smallest D reaching the good
/// band wins and only a material score improvement justifies a larger one.
fn best_decimation(phi: f64) -> usize {
    const GOOD_PHASE: f64 = 0.95;
    let mut best = (1usize, fold_to_pi(phi));
    for d in 1..=10usize {
        let score = fold_to_pi(d as f64 * phi);
        if score >= GOOD_PHASE {
            return d;
        }
        if score > best.1 + 1e-6 {
            best = (d, score);
        }
    }
    best.0
}

/// Σ_{n≥1} envelope(n)·trig(nφ) for a known phase φ ∈ (0, π), by exact
/// half-period folding when the sign runs are uniform, and by decimated
/// direct acceleration otherwise.
fn trig_sum_known_phase<F, T>(
    envelope: F,
    trig: T,
    phi: f64,
    cap: usize,
) -> Result<SeriesResult, SeriesError>
where
    F: Fn(u64) -> f64,
    T: Fn(f64) -> f64,
{
    let terms: Vec<f64> = (1..=cap as u64)
        .map(|n| envelope(n) * trig(n as f64 * phi))
        .collect();
    if terms.iter().all(|t| *t == 0.0) {
        return Ok(SeriesResult {
            value: 0.0,
            error_estimate: 0.0,
            terms_used: cap,
            method: SeriesMethod::Accelerated,
        });
    }

    let runs = run_lengths(&terms);
    if uniform_half_period(&runs) {
        // whole-term half-periods: the fold is exact
        return accelerate_prefix(&terms);
    }

    let d = best_decimation(phi);
    if d == 1 {
        let (value, discrepancy, envelope) = direct_window_sum(&terms);
        return finish_accelerated(value, discrepancy, envelope, cap);
    }

    // Σ_n t_n = Σ_{r=1}^{D} Σ_m t_{Dm+r}; each sub-series carries the phase
    // step D·φ, which best_decimation placed near π.
    let mut value = 0.0;
    let mut discrepancy = 0.0;
    let mut envelope_max = 0.0f64;
    for r in 1..=d {
        let sub: Vec<f64> = terms.iter().skip(r - 1).step_by(d).copied().collect();
        if sub.iter().all(|t| *t == 0.0) {
            continue;
        }
        let (v, disc, env) = direct_window_sum(&sub);
        value += v;
        discrepancy += disc;
        envelope_max = envelope_max.max(env);
    }
    finish_accelerated(value, discrepancy, envelope_max, cap)
}

fn finish_accelerated(
    value: f64,
    discrepancy: f64,
    envelope: f64,
    consumed: usize,
) -> Result<SeriesResult, SeriesError> {
    let heuristic = heuristic_estimate(CVZ_WINDOW, envelope);
    if discrepancy > 10.0 * heuristic && discrepancy > 2e-4 * envelope {
        return Err(SeriesError::UnreliableAcceleration { value, discrepancy });
    }
    Ok(SeriesResult {
        value,
        error_estimate: discrepancy.max(heuristic),
        terms_used: consumed,
        method: SeriesMethod::Accelerated,
    })
}

/// Σ_{n≥1} envelope(n)·sin(nθ), accelerated. The envelope should vary
/// smoothly; it may grow slowly, in which case the accelerated value is the
/// Abel value of the series.
pub fn oscillatory_sine_sum<F>(
    envelope: F,
    theta: f64,
    cap: usize,
) -> Result<SeriesResult, SeriesError>
where
    F: Fn(u64) -> f64,
{
    let (t, sign) = fold_sine_angle(theta);
    if t == 0.0 || t == std::f64::consts::PI {
        return Ok(SeriesResult {
            value: 0.0,
            error_estimate: 0.0,
            terms_used: 0,
            method: SeriesMethod::Accelerated,
        });
    }
    let mut r = trig_sum_known_phase(envelope, f64::sin, t, cap)?;
    r.value *= sign;
    Ok(r)
}

/// Σ_{n≥1} envelope(n)·cos(nθ), accelerated (Abel value for constant or
/// growing envelopes).
pub fn oscillatory_cosine_sum<F>(
    envelope: F,
    theta: f64,
    cap: usize,
) -> Result<SeriesResult, SeriesError>
where
    F: Fn(u64) -> f64,
{
    let t = fold_to_pi(theta);
    if t == 0.0 {
        return Err(SeriesError::Domain {
            what: "cosine sum with zero phase step is not oscillatory",
        });
    }
    trig_sum_known_phase(envelope, f64::cos, t, cap)
}
