//! Closed forms for coverings of the sphere in cover genus zero and one.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::partition::Partition;
use crate::rational::{factorial, Rational};

fn big(n: BigUint) -> BigInt {
    BigInt::from(n)
}

/// `prod alpha_i^alpha_i / (alpha_i - 1)!`
fn part_product(alpha: &Partition) -> Rational {
    alpha
        .parts()
        .iter()
        .fold(Rational::one(), |acc, &a| acc * Rational::new(big(BigUint::from(a).pow(a)), big(factorial(a - 1))))
}

fn class_fraction(alpha: &Partition) -> Rational {
    Rational::new(big(alpha.conjugacy_class_size()), big(factorial(alpha.degree())))
}

/// `k^e` for a possibly negative exponent.
fn signed_power(k: u32, e: i64) -> Rational {
    let p = Rational::from_integer(BigInt::from(k).pow(e.unsigned_abs() as u32));
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Genus-zero covers of the sphere:
/// `|c_alpha|/k! (k+m-2)! k^(m-3) prod alpha_i^alpha_i/(alpha_i-1)!`.
pub fn closed_form_g0(alpha: &Partition) -> Rational {
    let k = alpha.degree();
    let m = alpha.num_parts();
    class_fraction(alpha)
        * Rational::from_integer(big(factorial(k + m - 2)))
        * signed_power(k, i64::from(m) - 3)
        * part_product(alpha)
}

/// Genus-one covers of the sphere:
/// `|c_alpha|/(24 k!) (k+m)! prod alpha_i^alpha_i/(alpha_i-1)!
///  (k^m - k^(m-1) - sum_{i=2}^m (i-2)! e_i k^(m-i))`.
pub fn closed_form_g1(alpha: &Partition) -> Rational {
    let k = alpha.degree();
    let m = alpha.num_parts();
    let kk = BigInt::from(k);
    let mut bracket = kk.pow(m) - kk.pow(m - 1);
    for i in 2..=m {
        bracket -= big(factorial(i - 2)) * big(alpha.elementary_symmetric(i as usize)) * kk.pow(m - i);
    }
    class_fraction(alpha) / Rational::from_integer(24.into())
        * Rational::from_integer(big(factorial(k + m)))
        * part_product(alpha)
        * Rational::from_integer(bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn genus_zero_values() {
        assert_eq!(closed_form_g0(&p(&[1, 2])), ratio(4, 1));
        assert_eq!(closed_form_g0(&p(&[3])), ratio(1, 1));
        assert_eq!(closed_form_g0(&p(&[1, 1])), ratio(1, 2));
        assert_eq!(closed_form_g0(&p(&[1])), ratio(1, 1));
        assert_eq!(closed_form_g0(&p(&[1, 1, 1, 2])), ratio(8400, 1));
    }

    #[test]
    fn genus_one_values() {
        assert_eq!(closed_form_g1(&p(&[3])), ratio(9, 1));
        assert_eq!(closed_form_g1(&p(&[1, 2])), ratio(40, 1));
        assert_eq!(closed_form_g1(&p(&[2])), ratio(1, 2));
        assert_eq!(closed_form_g1(&p(&[1, 1, 3])), ratio(234360, 1));
        // No genus-one cover of degree one.
        assert_eq!(closed_form_g1(&p(&[1])), ratio(0, 1));
    }
}
