//! Exact rational angles a = (k/l)·π.

use crate::identity_catalog::CatalogError;
use std::f64::consts::PI;

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An angle a = kπ/l held as an exact integer pair, reduced to lowest terms
/// with 0 < k < l.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    k: u32,
    l: u32,
}

impl RationalAngle {
    pub fn new(k: u32, l: u32) -> Result<Self, CatalogError> {
        if k == 0 || l == 0 || k >= l {
            return Err(CatalogError::Domain {
                what: "rational angle needs 0 < k < l",
            });
        }
        let g = gcd(k, l);
        Ok(RationalAngle { k: k / g, l: l / g })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// The angle in radians.
    pub fn radians(&self) -> f64 {
        self.k as f64 * PI / self.l as f64
    }

    /// sin(kπ/l) as (rational, square-free radicand) when the denominator is
    /// one of {2, 3, 4, 6}: sin = c·√q exactly. Other denominators have no
    /// such form here and return None.
    pub fn exact_sin(&self) -> Option<(crate::malmsten_engine::Rational, u64)> {
        use crate::malmsten_engine::Rational;
        let half = Rational::new(1, 2);
        match (self.k, self.l) {
            (1, 2) => Some((Rational::ONE, 1)),
            (1, 3) | (2, 3) => Some((half, 3)),
            (1, 4) | (3, 4) => Some((half, 2)),
            (1, 6) | (5, 6) => Some((half, 1)),
            _ => None,
        }
    }
}
