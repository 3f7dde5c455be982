//! Minimal exact fractions for closed-form coefficients.

use std::cmp::Ordering;
use std::fmt;

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Signed fraction in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Panics on a zero denominator or overflow of the reduced form; the
    /// coefficients appearing in closed forms are tiny.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "rational denominator must be nonzero");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Rational {
        let g = gcd(num, den);
        let sign = if den < 0 { -1 } else { 1 };
        let num = sign * num / g;
        let den = (den / g).abs();
        assert!(
            num >= i64::MIN as i128 && num <= i64::MAX as i128 && den <= i64::MAX as i128,
            "rational overflow"
        );
        Rational {
            num: num as i64,
            den: den as i64,
        }
    }

    pub fn integer(n: i64) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn add(&self, other: &Rational) -> Rational {
        Self::from_i128(
            self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        Self::from_i128(
            self.num as i128 * other.num as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn mul_int(&self, n: i64) -> Rational {
        Self::from_i128(self.num as i128 * n as i128, self.den as i128)
    }

    pub fn neg(&self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }

    pub fn recip(&self) -> Rational {
        assert!(self.num != 0, "reciprocal of zero");
        Self::from_i128(self.den as i128, self.num as i128)
    }

    /// Parse "p", "-p" or "p/q".
    pub fn parse(text: &str) -> Option<Rational> {
        match text.split_once('/') {
            Some((n, d)) => {
                let num: i64 = n.trim().parse().ok()?;
                let den: i64 = d.trim().parse().ok()?;
                if den == 0 {
                    None
                } else {
                    Some(Rational::new(num, den))
                }
            }
            None => text.trim().parse::<i64>().ok().map(Rational::integer),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_sign() {
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert_eq!(Rational::new(1, -2), Rational::new(-1, 2));
        assert_eq!(Rational::new(-3, -6), Rational::new(1, 2));
        assert_eq!(Rational::new(0, 5), Rational::ZERO);
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(1, 6);
        let b = Rational::new(1, 3);
        assert_eq!(a.add(&b), Rational::new(1, 2));
        assert_eq!(a.mul(&b), Rational::new(1, 18));
        assert_eq!(a.neg().add(&a), Rational::ZERO);
        assert_eq!(Rational::new(2, 3).recip(), Rational::new(3, 2));
        assert_eq!(Rational::new(5, 27).mul_int(3), Rational::new(5, 9));
    }

    #[test]
    fn ordering() {
        assert!(Rational::new(1, 4) < Rational::new(1, 3));
        assert!(Rational::new(-1, 2) < Rational::ZERO);
    }

    #[test]
    fn display_and_parse_round_trip() {
        for r in [
            Rational::new(1, 2),
            Rational::new(-5, 27),
            Rational::integer(7),
            Rational::integer(-1),
        ] {
            assert_eq!(Rational::parse(&r.to_string()), Some(r));
        }
        assert_eq!(Rational::parse("x"), None);
        assert_eq!(Rational::parse("1/0"), None);
    }
}
