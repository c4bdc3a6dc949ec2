//! Certified dyadic enclosures for the knapsack-bridge weights
//! `w(p) = -ln(1 - 1/p) = ln(p / (p-1))`.
//!
//! Exact rational arithmetic cannot represent these logarithms, but every
//! decision that depends on them (floors, printed digits) can be made from
//! a two-sided enclosure: compute `[lo, hi]` with `lo/2^prec <= w <=
//! hi/2^prec`, act only when both endpoints agree, and otherwise retry at
//! doubled precision. The enclosure comes from
//! `w(p) = 2*atanh(1/t) = 2*sum_{k>=0} 1/((2k+1) t^(2k+1))` with
//! `t = 2p - 1`: partial sums in fixed point with floored terms give the
//! lower end, and the floor slack plus the geometric tail bound
//! `2 t^2 / ((2K+1) t^(2K+1) (t^2 - 1))` gives the upper end. Since
//! `w(p) * x` is irrational for integer `x >= 1`, the doubling loop always
//! terminates in principle; a precision cap turns pathological cases into
//! an error rather than a wrong floor.

use num::bigint::BigUint;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Fractional-bit cap for the precision-doubling loop.
pub const DEFAULT_PRECISION_CAP_BITS: u32 = 4096;
/// Extra working bits absorbing floored-term slack before rounding back.
const GUARD_BITS: u32 = 16;
/// Precision the doubling loop starts from.
const STARTING_PRECISION_BITS: u32 = 64;

/// A certified enclosure `[lo / 2^prec, hi / 2^prec]` of a non-negative
/// real number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: BigUint,
    hi: BigUint,
    prec: u32,
}

impl DyadicInterval {
    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Interval width in units of `2^-prec`.
    pub fn width_ulps(&self) -> BigUint {
        &self.hi - &self.lo
    }

    /// Exact rational endpoints `(lo / 2^prec, hi / 2^prec)`.
    pub fn to_rational_bounds(&self) -> (Rational, Rational) {
        let scale = BigUint::one() << self.prec;
        let lo = Rational::new(self.lo.clone().into(), scale.clone().into())
            .expect("power-of-two denominator");
        let hi = Rational::new(self.hi.clone().into(), scale.into())
            .expect("power-of-two denominator");
        (lo, hi)
    }

    /// Endpoint-wise sum; encloses the sum of the enclosed values.
    pub fn add(&self, other: &DyadicInterval) -> DyadicInterval {
        assert_eq!(self.prec, other.prec, "mismatched precisions");
        DyadicInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            prec: self.prec,
        }
    }

    /// Enclosure of `value * x` for a non-negative integer `x`.
    pub fn scale(&self, x: &BigUint) -> DyadicInterval {
        DyadicInterval {
            lo: &self.lo * x,
            hi: &self.hi * x,
            prec: self.prec,
        }
    }

    /// Exact halving: the same endpoints read with one more fractional bit.
    pub fn halve(&self) -> DyadicInterval {
        DyadicInterval {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            prec: self.prec + 1,
        }
    }

    /// The common floor of every value in the interval, or `None` when the
    /// endpoints floor differently and the answer is still ambiguous.
    pub fn floor_if_certain(&self) -> Option<BigUint> {
        let lo_floor = &self.lo >> self.prec;
        let hi_floor = &self.hi >> self.prec;
        (lo_floor == hi_floor).then_some(lo_floor)
    }

    /// Decimal strings `(lower, upper)` with exactly `digits` fractional
    /// digits, rounded outward, so `lower <= value <= upper`.
    pub fn to_decimal_bounds(&self, digits: u32) -> (String, String) {
        let pow10 = BigUint::from(10u32).pow(digits);
        let lo = (&self.lo * &pow10) >> self.prec;
        let hi_num = &self.hi * &pow10;
        let unit = BigUint::one() << self.prec;
        let hi = (hi_num + &unit - BigUint::one()) >> self.prec;
        (
            format_scaled_decimal(&lo, digits),
            format_scaled_decimal(&hi, digits),
        )
    }
}

fn format_scaled_decimal(value: &BigUint, digits: u32) -> String {
    let pow10 = BigUint::from(10u32).pow(digits);
    let int = value / &pow10;
    let frac = value % &pow10;
    if digits == 0 {
        int.to_string()
    } else {
        format!("{int}.{frac:0width$}", width = digits as usize)
    }
}

/// Certified enclosure of `w(p) = ln(p / (p - 1))` with `prec` fractional
/// bits; the width is at most 2 ulps.
pub fn log_weight(p: u64, prec: u32) -> Result<DyadicInterval> {
    if p < 2 {
        return Err(Error::validation(format!(
            "weight ln(p/(p-1)) needs p >= 2, got {p}"
        )));
    }
    let scale_bits = prec + GUARD_BITS;
    let t = BigUint::from(2 * p - 1);
    let t_sq = &t * &t;
    // 2 * 2^scale, the numerator shared by every term.
    let top = BigUint::from(2u32) << scale_bits;

    let mut lower = BigUint::zero();
    let mut t_pow = t.clone(); // t^(2k+1)
    let mut k = 0u64;
    loop {
        let denom = BigUint::from(2 * k + 1) * &t_pow;
        let term = &top / &denom;
        if term.is_zero() {
            break;
        }
        lower += term;
        t_pow *= &t_sq;
        k += 1;
    }
    // Floor slack: each of the k summed terms lost < 1.
    // Tail: 2 sum_{j>=k} 1/((2j+1) t^(2j+1))
    //         <= 2 / ((2k+1) t^(2k+1)) * t^2 / (t^2 - 1), rounded up.
    let tail_num = &top * &t_sq;
    let tail_den = BigUint::from(2 * k + 1) * &t_pow * (&t_sq - BigUint::one());
    let tail = (&tail_num + &tail_den - BigUint::one()) / &tail_den;
    let upper = &lower + BigUint::from(k) + tail;

    // Round outward from the guarded scale back to `prec` bits.
    let guard_round = (BigUint::one() << GUARD_BITS) - BigUint::one();
    Ok(DyadicInterval {
        lo: &lower >> GUARD_BITS,
        hi: (upper + guard_round) >> GUARD_BITS,
        prec,
    })
}

/// `floor(w(p) * x)` certified by interval arithmetic under the default
/// precision cap.
pub fn floor_weight_times_x(p: u64, x: &BigUint) -> Result<BigUint> {
    floor_weight_times_x_with_cap(p, x, DEFAULT_PRECISION_CAP_BITS)
}

/// As [`floor_weight_times_x`]: doubles the working precision until the
/// enclosure of `w(p) * x` contains no integer, failing with a precision
/// error once `cap_bits` fractional bits are exceeded.
pub fn floor_weight_times_x_with_cap(p: u64, x: &BigUint, cap_bits: u32) -> Result<BigUint> {
    if x.is_zero() {
        return Ok(BigUint::zero());
    }
    let mut prec = STARTING_PRECISION_BITS.min(cap_bits);
    loop {
        let product = log_weight(p, prec)?.scale(x);
        if let Some(floor) = product.floor_if_certain() {
            return Ok(floor);
        }
        if prec >= cap_bits {
            return Err(Error::Precision {
                cap_bits,
                context: format!("floor of weight({p}) times a {}-bit integer", x.bits()),
            });
        }
        prec = (prec * 2).min(cap_bits);
    }
}
