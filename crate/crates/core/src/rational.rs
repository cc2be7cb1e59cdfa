// Copyright 2026 The pairdecomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Exact rational scalars.
//!
//! Every value in the crate is a [`Rational`]: a reduced fraction with `i128`
//! numerator and denominator. Arithmetic is checked and panics on overflow
//! rather than wrapping.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(Ratio<i128>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

#[track_caller]
fn overflow(op: &str) -> ! {
    panic!("rational overflow in {op}")
}

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `numer / denom` in lowest terms. Panics if `denom` is zero.
    pub fn new(numer: i128, denom: i128) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(Ratio::new(numer, denom))
    }

    pub fn from_integer(value: i128) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -*self
        } else {
            *self
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.numer().cmp(&0) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        self.0.checked_add(&rhs.0).map(Rational)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        self.0.checked_sub(&rhs.0).map(Rational)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        self.0.checked_mul(&rhs.0).map(Rational)
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        self.0.checked_div(&rhs.0).map(Rational)
    }

    /// Lossy conversion, used only for display-side summaries.
    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    /// True when the decimal expansion terminates (denominator is 2^a 5^b).
    fn is_terminating(&self) -> bool {
        let mut d = self.denom();
        while d % 2 == 0 {
            d /= 2;
        }
        while d % 5 == 0 {
            d /= 5;
        }
        d == 1
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value as i128)
    }
}

impl From<i32> for Rational {
    fn from(value: i32) -> Self {
        Rational::from_integer(value as i128)
    }
}

impl From<usize> for Rational {
    fn from(value: usize) -> Self {
        Rational::from_integer(i128::try_from(value).unwrap_or_else(|_| overflow("conversion")))
    }
}

impl Add for Rational {
    type Output = Rational;
    #[track_caller]
    fn add(self, rhs: Rational) -> Rational {
        self.checked_add(&rhs)
            .unwrap_or_else(|| overflow("addition"))
    }
}

impl Sub for Rational {
    type Output = Rational;
    #[track_caller]
    fn sub(self, rhs: Rational) -> Rational {
        self.checked_sub(&rhs)
            .unwrap_or_else(|| overflow("subtraction"))
    }
}

impl Mul for Rational {
    type Output = Rational;
    #[track_caller]
    fn mul(self, rhs: Rational) -> Rational {
        self.checked_mul(&rhs)
            .unwrap_or_else(|| overflow("multiplication"))
    }
}

impl Div for Rational {
    type Output = Rational;
    #[track_caller]
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        self.checked_div(&rhs)
            .unwrap_or_else(|| overflow("division"))
    }
}

impl Neg for Rational {
    type Output = Rational;
    #[track_caller]
    fn neg(self) -> Rational {
        Rational::ZERO - self
    }
}

impl AddAssign for Rational {
    #[track_caller]
    fn add_assign(&mut self, rhs: Rational) {
        *self = *self + rhs;
    }
}

impl SubAssign for Rational {
    #[track_caller]
    fn sub_assign(&mut self, rhs: Rational) {
        *self = *self - rhs;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + *x)
    }
}

impl fmt::Display for Rational {
    /// Integers print bare, terminating fractions as decimals, the rest as `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            return write!(f, "{}", self.numer());
        }
        if !self.is_terminating() {
            return write!(f, "{}/{}", self.numer(), self.denom());
        }
        let mut scale = 0u32;
        let mut pow = 1i128;
        while pow % self.denom() != 0 {
            pow *= 10;
            scale += 1;
        }
        let scaled = self.numer().abs() * (pow / self.denom());
        let (int, frac) = scaled.div_rem(&pow);
        let sign = if self.is_negative() { "-" } else { "" };
        write!(f, "{sign}{int}.{frac:0width$}", width = scale as usize)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `P/Q`, integers, and decimals (`-2.5`), all parsed exactly.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: i128 = p.trim().parse().map_err(|_| bad())?;
            let q: i128 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            return Ok(Rational::new(p, q));
        }
        let (negative, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        if int.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let all_digits = |x: &str| x.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(int) || !all_digits(frac) || frac.len() > 30 {
            return Err(bad());
        }
        let digits = format!("{int}{frac}");
        let numer: i128 = if digits.is_empty() {
            0
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let denom = 10i128.pow(frac.len() as u32);
        let value = Rational::new(numer, denom);
        Ok(if negative { -value } else { value })
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand used throughout tests and fixtures.
pub fn rat(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(rat(5, 1).to_string(), "5");
        assert_eq!(rat(-5, 2).to_string(), "-2.5");
        assert_eq!(rat(35, 3).to_string(), "35/3");
        assert_eq!(rat(-1, 8).to_string(), "-0.125");
        assert_eq!(rat(1, 20).to_string(), "0.05");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("-2.5".parse::<Rational>().unwrap(), rat(-5, 2));
        assert_eq!("35/3".parse::<Rational>().unwrap(), rat(35, 3));
        assert_eq!(" 7 ".parse::<Rational>().unwrap(), rat(7, 1));
        assert_eq!(".5".parse::<Rational>().unwrap(), rat(1, 2));
        assert_eq!("4/-8".parse::<Rational>().unwrap(), rat(-1, 2));
        for bad in ["", "1/0", "abc", "1.2.3", "-", ".", "1e5"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_parse_round_trip() {
        for (p, q) in [(1, 3), (-7, 4), (0, 1), (123, 1000), (-22, 7)] {
            let r = rat(p, q);
            assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }

    #[test]
    #[should_panic(expected = "rational overflow")]
    fn overflow_is_loud() {
        let big = Rational::from_integer(i128::MAX);
        let _ = big + Rational::ONE;
    }

    #[test]
    fn ordering_is_numeric() {
        assert!(rat(1, 3) < rat(1, 2));
        assert!(rat(-1, 2) < rat(0, 1));
        assert_eq!(rat(2, 4), rat(1, 2));
    }
}
