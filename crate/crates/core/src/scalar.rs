//! Exact scalar types.
//!
//! Everything in this crate is computed exactly. Weights, coweights and the
//! linear forms that act on them are generic over a [`Field`] (an exact
//! rational type); the polyhedral engine works over an [`Integral`] ring and
//! keeps its vectors primitive. Floating point types deliberately do not
//! implement either trait: zero tests have to be exact.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, ToPrimitive};

/// An exact ordered field (in practice: a rational number type).
pub trait Field:
    Clone + Debug + Display + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self;

    fn to_big_rational(&self) -> BigRational;

    /// `None` when the value does not fit the target representation.
    fn from_big_rational(q: &BigRational) -> Option<Self>;

    fn is_integer(&self) -> bool;
}

/// An exact ordered integral domain with gcd.
pub trait Integral:
    Clone + Debug + Display + Ord + Hash + Integer + Signed + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    fn to_bigint(&self) -> BigInt;

    fn from_bigint(n: &BigInt) -> Option<Self>;
}

impl Field for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_frac(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_big_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_big_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }

    fn is_integer(&self) -> bool {
        Ratio::is_integer(self)
    }
}

macro_rules! small_ratio_field {
    ($int:ty) => {
        impl Field for Ratio<$int> {
            fn from_int(n: i64) -> Self {
                Ratio::from_integer(n as $int)
            }

            fn from_frac(num: i64, den: i64) -> Self {
                Ratio::new(num as $int, den as $int)
            }

            fn to_big_rational(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }

            fn from_big_rational(q: &BigRational) -> Option<Self> {
                let n = q.numer().to_i128()?;
                let d = q.denom().to_i128()?;
                let n: $int = n.try_into().ok()?;
                let d: $int = d.try_into().ok()?;
                Some(Ratio::new(n, d))
            }

            fn is_integer(&self) -> bool {
                Ratio::is_integer(self)
            }
        }
    };
}

small_ratio_field!(i64);
small_ratio_field!(i128);

impl Integral for BigInt {
    fn from_int(n: i64) -> Self {
        BigInt::from(n)
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }

    fn from_bigint(n: &BigInt) -> Option<Self> {
        Some(n.clone())
    }
}

impl Integral for i128 {
    fn from_int(n: i64) -> Self {
        n as i128
    }

    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }

    fn from_bigint(n: &BigInt) -> Option<Self> {
        n.to_i128()
    }
}

/// Divides a vector by the gcd of its entries. The zero vector is returned
/// unchanged.
pub fn primitive<I: Integral>(v: &[I]) -> Vec<I> {
    let g = v.iter().fold(I::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x.clone() / g.clone()).collect()
}

/// Scales a rational vector to the unique primitive integer vector on the same
/// ray (positive multiple).
pub fn clear_denominators<F: Field>(v: &[F]) -> Vec<BigInt> {
    let qs: Vec<BigRational> = v.iter().map(Field::to_big_rational).collect();
    let lcm = qs
        .iter()
        .fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let ints: Vec<BigInt> = qs
        .iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect();
    primitive(&ints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn primitive_divides_by_content() {
        let v: Vec<BigInt> = [4, -6, 0, 10].iter().map(|&x| BigInt::from(x)).collect();
        let p = primitive(&v);
        assert_eq!(p, [2, -3, 0, 5].iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        let z = vec![BigInt::zero(); 3];
        assert_eq!(primitive(&z), z);
    }

    #[test]
    fn clear_denominators_keeps_direction() {
        let v = vec![
            Ratio::<i64>::new(1, 2),
            Ratio::<i64>::new(-1, 3),
            Ratio::<i64>::from_integer(0),
        ];
        let c = clear_denominators(&v);
        assert_eq!(c, vec![BigInt::from(3), BigInt::from(-2), BigInt::zero()]);
    }

    #[test]
    fn small_ratio_rejects_overflow() {
        let big = BigRational::from_integer(BigInt::from(i64::MAX) * 4);
        assert!(<Ratio<i64> as Field>::from_big_rational(&big).is_none());
        assert!(<Ratio<i128> as Field>::from_big_rational(&big).is_some());
    }
}
