use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::scalar::Field;

/// A weight, stored by its coordinates in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight<T> {
    pub coords: Vec<T>,
}

/// An element of the Cartan subalgebra, stored by its coordinates in the basis
/// `x_1, ..., x_r` dual to the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight<T> {
    pub coords: Vec<T>,
}

impl<T: Field> Weight<T> {
    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![T::zero(); rank] }
    }

    /// `omega_i`, 0-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coords[i] = T::one();
        w
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| T::from_int(c)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &T) -> Self {
        Weight { coords: self.coords.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    /// Changes the scalar type; `None` if some coordinate does not fit.
    pub fn convert<U: Field>(&self) -> Option<Weight<U>> {
        let coords = self
            .coords
            .iter()
            .map(|c| U::from_big_rational(&c.to_big_rational()))
            .collect::<Option<Vec<U>>>()?;
        Some(Weight { coords })
    }
}

impl<T: Field> Coweight<T> {
    pub fn zero(rank: usize) -> Self {
        Coweight { coords: vec![T::zero(); rank] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// `alpha_k(h)`, which is the `x_k` coordinate.
    pub fn alpha(&self, k: usize) -> T {
        self.coords[k].clone()
    }
}

macro_rules! vector_ops {
    ($ty:ident) => {
        impl<T: Field> Add for $ty<T> {
            type Output = $ty<T>;
            fn add(self, rhs: Self) -> Self {
                &self + &rhs
            }
        }

        impl<T: Field> Add for &$ty<T> {
            type Output = $ty<T>;
            fn add(self, rhs: Self) -> $ty<T> {
                debug_assert_eq!(self.coords.len(), rhs.coords.len());
                $ty {
                    coords: self
                        .coords
                        .iter()
                        .zip(&rhs.coords)
                        .map(|(a, b)| a.clone() + b.clone())
                        .collect(),
                }
            }
        }

        impl<T: Field> Sub for $ty<T> {
            type Output = $ty<T>;
            fn sub(self, rhs: Self) -> Self {
                &self - &rhs
            }
        }

        impl<T: Field> Sub for &$ty<T> {
            type Output = $ty<T>;
            fn sub(self, rhs: Self) -> $ty<T> {
                debug_assert_eq!(self.coords.len(), rhs.coords.len());
                $ty {
                    coords: self
                        .coords
                        .iter()
                        .zip(&rhs.coords)
                        .map(|(a, b)| a.clone() - b.clone())
                        .collect(),
                }
            }
        }

        impl<T: Field> AddAssign<&$ty<T>> for $ty<T> {
            fn add_assign(&mut self, rhs: &$ty<T>) {
                for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
                    *a = a.clone() + b.clone();
                }
            }
        }

        impl<T: Field> SubAssign<&$ty<T>> for $ty<T> {
            fn sub_assign(&mut self, rhs: &$ty<T>) {
                for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
                    *a = a.clone() - b.clone();
                }
            }
        }

        impl<T: Field> Neg for $ty<T> {
            type Output = $ty<T>;
            fn neg(self) -> Self {
                $ty { coords: self.coords.into_iter().map(|a| -a).collect() }
            }
        }

        impl<T: Field> Mul<T> for &$ty<T> {
            type Output = $ty<T>;
            fn mul(self, c: T) -> $ty<T> {
                $ty { coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect() }
            }
        }
    };
}

vector_ops!(Weight);
vector_ops!(Coweight);

/// Formats as a combination of fundamental weights, e.g. `ω1+2ω3`, or `0`.
impl<T: Field> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.coords, "ω")
    }
}

impl<T: Field> fmt::Display for Coweight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.coords, "x")
    }
}

fn write_combination<T: Field>(f: &mut fmt::Formatter<'_>, coords: &[T], sym: &str) -> fmt::Result {
    let mut first = true;
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { "-" } else { "+" })?;
        }
        first = false;
        if abs.is_one() {
            write!(f, "{sym}{}", i + 1)?;
        } else if abs.is_integer() {
            write!(f, "{abs}{sym}{}", i + 1)?;
        } else {
            write!(f, "({abs}){sym}{}", i + 1)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type W = Weight<Ratio<i64>>;

    #[test]
    fn display_combination() {
        let w = W::from_ints(&[-1, 2, -1, -1]);
        assert_eq!(w.to_string(), "-ω1+2ω2-ω3-ω4");
        assert_eq!(W::zero(3).to_string(), "0");
        let h = W { coords: vec![Ratio::new(-1, 2), Ratio::from_integer(0), Ratio::from_integer(1)] };
        assert_eq!(h.to_string(), "-(1/2)ω1+ω3");
    }

    #[test]
    fn arithmetic() {
        let a = W::from_ints(&[1, 0, 2]);
        let b = W::from_ints(&[0, 1, -1]);
        assert_eq!(&a + &b, W::from_ints(&[1, 1, 1]));
        assert_eq!(&a - &b, W::from_ints(&[1, -1, 3]));
        assert!(a.is_dominant() && !b.is_dominant());
        assert_eq!(&a * Ratio::from_integer(2), W::from_ints(&[2, 0, 4]));
    }
}
