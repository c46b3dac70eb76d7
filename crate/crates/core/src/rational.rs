//! Exact rational helpers. All Hurwitz numbers and move weights are
//! [`Rational`]s; floating point never appears in this crate.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

pub use num_rational::BigRational as Rational;

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn half() -> Rational {
    ratio(1, 2)
}

pub fn factorial(n: u32) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `binomial(n, k)`, zero whenever `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// True when the denominator of `q` is a power of two.
pub fn has_dyadic_denominator(q: &Rational) -> bool {
    let d = q.denom();
    let twos = d.trailing_zeros().unwrap_or(0);
    (d >> twos).is_one()
}

/// `num/den`, with the denominator always present.
pub fn fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// `a` as an exact value, `a/b` when not an integer.
pub fn compact_string(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        fraction_string(q)
    }
}

pub(crate) fn is_reduced(num: &BigInt, den: &BigInt) -> bool {
    den > &BigInt::zero() && num.gcd(den).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(3, 4), BigUint::zero());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(3, -1), BigUint::zero());
        // Pascal's rule as an independent check.
        for n in 1..30i64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn dyadic() {
        assert!(has_dyadic_denominator(&ratio(3, 8)));
        assert!(has_dyadic_denominator(&ratio(5, 1)));
        assert!(!has_dyadic_denominator(&ratio(4, 3)));
        assert!(!has_dyadic_denominator(&ratio(1, 12)));
    }

    #[test]
    fn formatting() {
        assert_eq!(fraction_string(&ratio(4, 1)), "4/1");
        assert_eq!(compact_string(&ratio(4, 1)), "4");
        assert_eq!(compact_string(&ratio(2, 4)), "1/2");
    }
}
