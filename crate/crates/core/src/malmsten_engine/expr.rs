//! Exact symbolic values: sums of (coefficient × π^p × √q × atom) terms.
//!
//! The atom vocabulary is the constant basis every closed form in the paper
//! family lives in: γ, ln 2π, ln 2, ln π, ln Γ(r), ψ(r) and the unit. The
//! coefficients are exact fractions except where an irreducible number such
//! as ln 3 has to be carried; those terms hold a float coefficient and mark
//! the whole expression non-exact.
//!
//! Render grammar (one term):
//!
//! ```text
//! term := coeff ["*pi^"p] ["*sqrt("q")"] "*" atom
//! ```
//!
//! atoms spelled `gamma`, `ln2pi`, `ln2`, `lnpi`, `lnGamma(p/q)`, `psi(p/q)`,
//! `1`; terms joined by " + " with signs folded into the coefficient.

use super::rational::Rational;
use crate::constants::{EULER_GAMMA, LN_PI, LN_TWO_PI};
use crate::special_functions::{digamma, ln_gamma};
use std::f64::consts::{LN_2, PI};
use std::fmt;

/// A constant from the closed-form basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    EulerGamma,
    LnTwoPi,
    LnTwo,
    LnPi,
    /// ln Γ(r) for an exact fraction r ∈ (0, 1).
    LnGamma(Rational),
    /// ψ(r) for an exact fraction r ∈ (0, 1).
    Digamma(Rational),
    Unit,
}

impl Atom {
    fn rank(&self) -> (u8, Rational) {
        match self {
            Atom::EulerGamma => (0, Rational::ZERO),
            Atom::LnTwoPi => (1, Rational::ZERO),
            Atom::LnTwo => (2, Rational::ZERO),
            Atom::LnPi => (3, Rational::ZERO),
            Atom::LnGamma(r) => (4, *r),
            Atom::Digamma(r) => (5, *r),
            Atom::Unit => (6, Rational::ZERO),
        }
    }

    fn value(&self) -> f64 {
        match self {
            Atom::EulerGamma => EULER_GAMMA,
            Atom::LnTwoPi => LN_TWO_PI,
            Atom::LnTwo => LN_2,
            Atom::LnPi => LN_PI,
            Atom::LnGamma(r) => ln_gamma(r.to_f64()).expect("atom argument in (0,1)"),
            Atom::Digamma(r) => digamma(r.to_f64()).expect("atom argument in (0,1)"),
            Atom::Unit => 1.0,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::EulerGamma => write!(f, "gamma"),
            Atom::LnTwoPi => write!(f, "ln2pi"),
            Atom::LnTwo => write!(f, "ln2"),
            Atom::LnPi => write!(f, "lnpi"),
            Atom::LnGamma(r) => write!(f, "lnGamma({r})"),
            Atom::Digamma(r) => write!(f, "psi({r})"),
            Atom::Unit => write!(f, "1"),
        }
    }
}

/// Exact or numeric coefficient; numeric ones mark the expression non-exact
/// and render as decimals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Coeff {
    Exact(Rational),
    Numeric(f64),
}

impl Coeff {
    fn to_f64(self) -> f64 {
        match self {
            Coeff::Exact(r) => r.to_f64(),
            Coeff::Numeric(v) => v,
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Coeff::Exact(r) => r.is_zero(),
            Coeff::Numeric(v) => *v == 0.0,
        }
    }

    fn add(self, other: Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Exact(a), Coeff::Exact(b)) => Coeff::Exact(a.add(&b)),
            (a, b) => Coeff::Numeric(a.to_f64() + b.to_f64()),
        }
    }

    fn mul_rational(self, r: &Rational) -> Coeff {
        match self {
            Coeff::Exact(a) => Coeff::Exact(a.mul(r)),
            Coeff::Numeric(v) => Coeff::Numeric(v * r.to_f64()),
        }
    }

    fn mul_int(self, n: i64) -> Coeff {
        match self {
            Coeff::Exact(a) => Coeff::Exact(a.mul_int(n)),
            Coeff::Numeric(v) => Coeff::Numeric(v * n as f64),
        }
    }
}

/// One closed-form term coeff · π^p · √q · atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coeff: Coeff,
    pub pi_power: i32,
    /// Positive square-free radicand; 1 means no radical.
    pub sqrt_factor: u64,
    pub atom: Atom,
}

impl Term {
    pub fn exact(num: i64, den: i64, pi_power: i32, sqrt_factor: u64, atom: Atom) -> Term {
        Term {
            coeff: Coeff::Exact(Rational::new(num, den)),
            pi_power,
            sqrt_factor,
            atom,
        }
    }

    pub fn numeric(value: f64, atom: Atom) -> Term {
        Term {
            coeff: Coeff::Numeric(value),
            pi_power: 0,
            sqrt_factor: 1,
            atom,
        }
    }

    fn key(&self) -> (u8, Rational, i32, u64) {
        let (rank, r) = self.atom.rank();
        (rank, r, self.pi_power, self.sqrt_factor)
    }

    /// Pull square factors of the radicand into the coefficient.
    fn normalize_sqrt(mut self) -> Term {
        let mut q = self.sqrt_factor.max(1);
        let mut d = 2u64;
        while d * d <= q {
            while q.is_multiple_of(d * d) {
                q /= d * d;
                self.coeff = self.coeff.mul_int(d as i64);
            }
            d += 1;
        }
        self.sqrt_factor = q;
        self
    }

    fn value(&self) -> f64 {
        self.coeff.to_f64()
            * PI.powi(self.pi_power)
            * (self.sqrt_factor as f64).sqrt()
            * self.atom.value()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.coeff {
            Coeff::Exact(r) => write!(f, "{r}")?,
            // Debug formatting keeps a decimal point, which is what marks
            // the coefficient (and the expression) non-exact on re-parse.
            Coeff::Numeric(v) => write!(f, "{v:?}")?,
        }
        if self.pi_power != 0 {
            write!(f, "*pi^{}", self.pi_power)?;
        }
        if self.sqrt_factor != 1 {
            write!(f, "*sqrt({})", self.sqrt_factor)?;
        }
        write!(f, "*{}", self.atom)
    }
}

/// Exact symbolic value: a canonically ordered sum of terms.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormExpr {
    terms: Vec<Term>,
}

impl ClosedFormExpr {
    /// Normalise: square-free radicands, equal atoms merged, zero terms
    /// dropped, canonical order (atom kind, then argument ascending).
    pub fn new(terms: Vec<Term>) -> ClosedFormExpr {
        let mut normalized: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            let t = t.normalize_sqrt();
            if let Some(existing) = normalized.iter_mut().find(|e| e.key() == t.key()) {
                existing.coeff = existing.coeff.add(t.coeff);
            } else {
                normalized.push(t);
            }
        }
        normalized.retain(|t| !t.coeff.is_zero());
        normalized.sort_by_key(|t| t.key());
        ClosedFormExpr { terms: normalized }
    }

    pub fn zero() -> ClosedFormExpr {
        ClosedFormExpr { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// True when every coefficient is an exact fraction.
    pub fn is_exact(&self) -> bool {
        self.terms
            .iter()
            .all(|t| matches!(t.coeff, Coeff::Exact(_)))
    }

    /// Evaluate to a float.
    pub fn numeric_eval(&self) -> f64 {
        self.terms.iter().map(Term::value).sum()
    }

    pub fn neg(&self) -> ClosedFormExpr {
        self.scale(&Rational::integer(-1), 1)
    }

    /// Multiply by r·√q exactly.
    pub fn scale(&self, r: &Rational, sqrt_factor: u64) -> ClosedFormExpr {
        ClosedFormExpr::new(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.mul_rational(r),
                    sqrt_factor: t.sqrt_factor * sqrt_factor,
                    ..*t
                })
                .collect(),
        )
    }

    /// Multiply by a float, demoting every coefficient to numeric.
    pub fn scale_numeric(&self, factor: f64) -> ClosedFormExpr {
        ClosedFormExpr::new(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: Coeff::Numeric(t.coeff.to_f64() * factor),
                    ..*t
                })
                .collect(),
        )
    }

    pub fn add(&self, other: &ClosedFormExpr) -> ClosedFormExpr {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().copied());
        ClosedFormExpr::new(terms)
    }
}

/// Canonical rendering under the term grammar; "0" for the empty sum.
pub fn render(expr: &ClosedFormExpr) -> String {
    if expr.terms.is_empty() {
        return "0".to_string();
    }
    expr.terms
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Errors from [`parse`].
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "closed-form parse error: {}", self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(message: impl Into<String>) -> ParseError {
    ParseError {
        message: message.into(),
    }
}

fn parse_fraction_in_unit_interval(text: &str) -> Result<Rational, ParseError> {
    let r = Rational::parse(text).ok_or_else(|| err(format!("bad fraction '{text}'")))?;
    if r <= Rational::ZERO || r >= Rational::ONE {
        return Err(err(format!("atom argument {r} outside (0,1)")));
    }
    Ok(r)
}

fn parse_atom(token: &str) -> Result<Atom, ParseError> {
    match token {
        "gamma" => Ok(Atom::EulerGamma),
        "ln2pi" => Ok(Atom::LnTwoPi),
        "ln2" => Ok(Atom::LnTwo),
        "lnpi" => Ok(Atom::LnPi),
        "1" => Ok(Atom::Unit),
        _ => {
            if let Some(arg) = token.strip_prefix("lnGamma(").and_then(|s| s.strip_suffix(')')) {
                Ok(Atom::LnGamma(parse_fraction_in_unit_interval(arg)?))
            } else if let Some(arg) = token.strip_prefix("psi(").and_then(|s| s.strip_suffix(')')) {
                Ok(Atom::Digamma(parse_fraction_in_unit_interval(arg)?))
            } else {
                Err(err(format!("unknown atom '{token}'")))
            }
        }
    }
}

fn parse_term(text: &str) -> Result<Term, ParseError> {
    let tokens: Vec<&str> = text.split('*').map(str::trim).collect();
    if tokens.len() < 2 {
        return Err(err(format!("term '{text}' needs coeff*...*atom")));
    }
    let coeff_text = tokens[0];
    let coeff = if coeff_text.contains('.') || coeff_text.contains('e') {
        let v: f64 = coeff_text
            .parse()
            .map_err(|_| err(format!("bad numeric coefficient '{coeff_text}'")))?;
        Coeff::Numeric(v)
    } else {
        Coeff::Exact(
            Rational::parse(coeff_text)
                .ok_or_else(|| err(format!("bad coefficient '{coeff_text}'")))?,
        )
    };

    let mut pi_power = 0i32;
    let mut sqrt_factor = 1u64;
    for token in &tokens[1..tokens.len() - 1] {
        if let Some(p) = token.strip_prefix("pi^") {
            pi_power = p
                .parse()
                .map_err(|_| err(format!("bad pi power '{token}'")))?;
        } else if let Some(q) = token.strip_prefix("sqrt(").and_then(|s| s.strip_suffix(')')) {
            sqrt_factor = q
                .parse()
                .map_err(|_| err(format!("bad radicand '{token}'")))?;
        } else {
            return Err(err(format!("unexpected factor '{token}'")));
        }
    }
    let atom = parse_atom(tokens[tokens.len() - 1])?;
    Ok(Term {
        coeff,
        pi_power,
        sqrt_factor,
        atom,
    })
}

/// Parse a rendered expression back into canonical form.
pub fn parse(text: &str) -> Result<ClosedFormExpr, ParseError> {
    let text = text.trim();
    if text == "0" {
        return Ok(ClosedFormExpr::zero());
    }
    let terms: Result<Vec<Term>, ParseError> = text.split(" + ").map(parse_term).collect();
    Ok(ClosedFormExpr::new(terms?))
}
