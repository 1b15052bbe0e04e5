//! Exact angles measured in units of π.
//!
//! A [`PiRational`] holds the rational number `r` for the angle `r·π`
//! radians. All arithmetic is carried out on arbitrary-precision rationals,
//! so sums, differences, halvings and reductions modulo `2π` never round
//! and never overflow.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ParseAngleError;

/// An angle `(numerator / denominator)·π`, always stored in lowest terms
/// with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PiRational(BigRational);

impl PiRational {
    /// Builds `(numerator / denominator)·π`.
    ///
    /// Panics if `denominator` is zero.
    pub fn new(numerator: i64, denominator: i64) -> Self {
        assert!(denominator != 0, "PiRational with zero denominator");
        PiRational(BigRational::new(numerator.into(), denominator.into()))
    }

    pub fn from_ratio(ratio: BigRational) -> Self {
        PiRational(ratio)
    }

    pub fn integer(n: i64) -> Self {
        PiRational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        PiRational(BigRational::zero())
    }

    /// The angle π itself.
    pub fn pi() -> Self {
        PiRational(BigRational::one())
    }

    pub fn half_pi() -> Self {
        Self::new(1, 2)
    }

    pub fn two_pi() -> Self {
        Self::integer(2)
    }

    /// The coefficient of π as an exact rational.
    pub fn ratio(&self) -> &BigRational {
        &self.0
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

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        PiRational(self.0.abs())
    }

    pub fn half(&self) -> Self {
        PiRational(&self.0 / BigInt::from(2))
    }

    pub fn double(&self) -> Self {
        PiRational(&self.0 * BigInt::from(2))
    }

    /// Integer multiple `n·self`.
    pub fn scale(&self, n: i64) -> Self {
        PiRational(&self.0 * BigInt::from(n))
    }

    pub fn scale_big(&self, n: &BigInt) -> Self {
        PiRational(&self.0 * n)
    }

    /// Reduces the angle modulo `2π` into the half-open interval `[0, 2π)`.
    pub fn rem_two_pi(&self) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        let turns = (&self.0 / &two).floor();
        PiRational(&self.0 - turns * two)
    }

    /// Same residue class modulo `2π`.
    pub fn congruent_mod_two_pi(&self, other: &Self) -> bool {
        (self - other).rem_two_pi().is_zero()
    }

    pub fn to_radians(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN) * std::f64::consts::PI
    }

    /// Finds `p/q` with `1 ≤ q ≤ max_denominator` such that `(p/q)·π` lies
    /// within `tolerance` radians of `radians`.
    ///
    /// Returns the fraction with the smallest such denominator.
    pub fn rationalize(radians: f64, max_denominator: u32, tolerance: f64) -> Option<Self> {
        if !radians.is_finite() {
            return None;
        }
        let turns = radians / std::f64::consts::PI;
        (1..=max_denominator).find_map(|q| {
            let p = (turns * f64::from(q)).round();
            let err = (p / f64::from(q) - turns).abs() * std::f64::consts::PI;
            if err <= tolerance && p.abs() < i64::MAX as f64 {
                Some(Self::new(p as i64, i64::from(q)))
            } else {
                None
            }
        })
    }
}

impl Default for PiRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Ord for PiRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for PiRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for PiRational {
    type Output = PiRational;
    fn add(self, rhs: PiRational) -> PiRational {
        PiRational(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a PiRational> for &'a PiRational {
    type Output = PiRational;
    fn add(self, rhs: &PiRational) -> PiRational {
        PiRational(&self.0 + &rhs.0)
    }
}

impl Sub for PiRational {
    type Output = PiRational;
    fn sub(self, rhs: PiRational) -> PiRational {
        PiRational(self.0 - rhs.0)
    }
}

impl<'a> Sub<&'a PiRational> for &'a PiRational {
    type Output = PiRational;
    fn sub(self, rhs: &PiRational) -> PiRational {
        PiRational(&self.0 - &rhs.0)
    }
}

impl Neg for PiRational {
    type Output = PiRational;
    fn neg(self) -> PiRational {
        PiRational(-self.0)
    }
}

impl Neg for &PiRational {
    type Output = PiRational;
    fn neg(self) -> PiRational {
        PiRational(-&self.0)
    }
}

impl std::iter::Sum for PiRational {
    fn sum<I: Iterator<Item = PiRational>>(iter: I) -> Self {
        iter.fold(PiRational::zero(), |acc, x| acc + x)
    }
}

/// Formats as `p/q·π`, `p·π` or `0`.
impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else if self.denom().is_one() {
            write!(f, "{}·π", self.numer())
        } else {
            write!(f, "{}/{}·π", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PiRational({})", self)
    }
}

/// Parses the coefficient of π: `"p/q"`, `"p"`, with an optional sign.
impl FromStr for PiRational {
    type Err = ParseAngleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseAngleError::Malformed(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(ParseAngleError::ZeroDenominator(s.to_string()));
        }
        Ok(PiRational(BigRational::new(num, den)))
    }
}
