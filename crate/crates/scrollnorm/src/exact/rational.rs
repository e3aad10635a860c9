//! Arbitrary-precision rational scalars.
//!
//! All section and cokernel computations run over Q. `Rational` is
//! `num_rational::BigRational`, which keeps every value reduced with a
//! positive denominator, so equality and hashing are canonical.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational p/q from machine integers. Panics if q = 0.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical rendering: `p` when the denominator is 1, else `p/q`.
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root, if `r` is the square of a rational.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sn = r.numer().sqrt();
    let sd = r.denom().sqrt();
    if &(&sn * &sn) == r.numer() && &(&sd * &sd) == r.denom() {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// True iff `r` is the square of a rational.
pub fn is_square(r: &Rational) -> bool {
    sqrt_exact(r).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_with_positive_denominator() {
        let r = ratio(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert!(rat(0).numer().is_zero());
        assert!(rat(0).denom().is_one());
    }

    #[test]
    fn render_is_canonical() {
        assert_eq!(render(&rat(5)), "5");
        assert_eq!(render(&ratio(-1, 2)), "-1/2");
        assert_eq!(render(&ratio(2, 4)), "1/2");
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_exact(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(sqrt_exact(&rat(30)), None);
        assert_eq!(sqrt_exact(&rat(0)), Some(rat(0)));
        assert_eq!(sqrt_exact(&rat(-4)), None);
    }
}
