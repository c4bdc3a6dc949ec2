//! Exact arbitrary-precision rational numbers.
//!
//! Every density, partition value, and certified bound in this crate is a
//! [`Rational`]. The type is a thin wrapper over `num`'s big rational that
//! pins down the two contracts the rest of the crate relies on:
//!
//! - values are always stored reduced with a positive denominator, and all
//!   arithmetic is exact (no rounding anywhere);
//! - the canonical text encoding is `"num/den"` in base 10 (`"13/30"`),
//!   which round-trips bit-exactly through [`Display`]/[`FromStr`].

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub};
use std::str::FromStr;

use num::bigint::{BigInt, BigUint, Sign};
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact signed rational, always reduced, denominator >= 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_biguint(n: BigUint) -> Self {
        Self::from_bigint(BigInt::from_biguint(Sign::Plus, n))
    }

    /// Build `num/den`, reducing. Errors on a zero denominator.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::validation("rational denominator must be nonzero"));
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(BigInt::from(num), BigInt::from(den)).expect("nonzero literal denominator")
    }

    /// `1 - 1/p`, the per-prime factor appearing in every density formula.
    pub fn one_minus_inv(p: u64) -> Self {
        debug_assert!(p >= 1);
        Rational(BigRational::new(BigInt::from(p - 1), BigInt::from(p)))
    }

    /// `p / (p - 1)`, the argument of the log weight `-log(1 - 1/p)`.
    pub fn inv_complement(p: u64) -> Self {
        debug_assert!(p >= 2);
        Rational(BigRational::new(BigInt::from(p), BigInt::from(p - 1)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::validation("cannot invert zero"));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    /// Floor as a big integer.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// `max(self, 1/self)` for positive values: the distance-from-1 proxy
    /// used when hunting for the ratio closest to 1.
    pub fn max_with_recip(&self) -> Result<Self> {
        let r = self.recip()?;
        Ok(if *self >= r { self.clone() } else { r })
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"num/den"` or a bare integer; reduces on input.
    fn from_str(s: &str) -> Result<Self> {
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num_s.trim())
            .map_err(|e| Error::validation(format!("bad rational numerator {num_s:?}: {e}")))?;
        let den = BigInt::from_str(den_s.trim())
            .map_err(|e| Error::validation(format!("bad rational denominator {den_s:?}: {e}")))?;
        Rational::new(num, den)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}
