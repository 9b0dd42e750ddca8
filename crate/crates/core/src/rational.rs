//! Exact rational helpers shared by the pseudo-weight and bound code.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator(values: &[Rational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Ceiling of a rational number.
pub fn ceil(value: &Rational) -> BigInt {
    value.ceil().to_integer()
}

/// Integer square root of a non-negative big integer together with an
/// exactness flag.
pub fn isqrt(value: &BigInt) -> (BigInt, bool) {
    if value.is_negative() {
        return (BigInt::zero(), false);
    }
    let root = value.sqrt();
    let exact = &root * &root == *value;
    (root, exact)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_flags_exact_squares() {
        assert_eq!(isqrt(&BigInt::from(144)), (BigInt::from(12), true));
        assert_eq!(isqrt(&BigInt::from(145)), (BigInt::from(12), false));
    }

    #[test]
    fn common_denominator_of_halves_and_thirds() {
        assert_eq!(common_denominator(&[rat(1, 2), rat(2, 3)]), BigInt::from(6));
    }
}
