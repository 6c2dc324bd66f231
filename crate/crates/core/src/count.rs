//! Exact nonnegative integers and rationals.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
pub type BigCount = BigUint;

/// `C(n, k)` in exact arithmetic.
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Nonnegative rational kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactRatio(Ratio<BigCount>);

impl ExactRatio {
    pub fn new(numerator: impl Into<BigCount>, denominator: impl Into<BigCount>) -> Result<Self> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::range("ratio with zero denominator"));
        }
        Ok(ExactRatio(Ratio::new(numerator.into(), den)))
    }

    pub fn integer(value: impl Into<BigCount>) -> Self {
        ExactRatio(Ratio::from_integer(value.into()))
    }

    pub fn numerator(&self) -> &BigCount {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigCount {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn mul(&self, other: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 * &other.0)
    }

    pub fn add(&self, other: &ExactRatio) -> ExactRatio {
        ExactRatio(&self.0 + &other.0)
    }

    /// `self / other`; `None` when `other` is zero.
    pub fn div(&self, other: &ExactRatio) -> Option<ExactRatio> {
        (!other.is_zero()).then(|| ExactRatio(&self.0 / &other.0))
    }

    /// `|self - other|`.
    pub fn abs_diff(&self, other: &ExactRatio) -> ExactRatio {
        if self.0 >= other.0 {
            ExactRatio(&self.0 - &other.0)
        } else {
            ExactRatio(&other.0 - &self.0)
        }
    }

    pub fn to_f64(&self) -> f64 {
        // Scale down huge operands so the division does not overflow to inf/inf.
        let (n, d) = (self.numerator(), self.denominator());
        let shift = n.bits().max(d.bits()).saturating_sub(1000);
        let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    }

    /// Decimal rendering rounded half-up to `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        let (num, den) = (self.numerator().clone(), self.denominator().clone());
        if num.is_zero() {
            return "0".into();
        }
        let ten = BigCount::from(10u32);
        // Find e with 10^(digits-1) <= num * 10^e / den < 10^digits.
        let int_part = &num / &den;
        let mut exp: i64 = if int_part.is_zero() {
            -((den.to_str_radix(10).len() as i64) - (num.to_str_radix(10).len() as i64))
        } else {
            int_part.to_str_radix(10).len() as i64 - 1
        };
        let scaled = |e: i64| -> BigCount {
            let shift = digits as i64 - 1 - e;
            if shift >= 0 {
                (&num * ten.pow(shift as u32) * 2u32 + &den) / (&den * 2u32)
            } else {
                (&num * 2u32 + &den * ten.pow((-shift) as u32)) / (&den * ten.pow((-shift) as u32) * 2u32)
            }
        };
        let lower = ten.pow(digits as u32 - 1);
        let upper = ten.pow(digits as u32);
        let mut mant = scaled(exp);
        while mant < lower {
            exp -= 1;
            mant = scaled(exp);
        }
        while mant >= upper {
            exp += 1;
            mant = scaled(exp);
        }
        let s = mant.to_str_radix(10);
        let point = exp + 1; // digits before the decimal point
        let mut out = if point <= 0 {
            format!("0.{}{}", "0".repeat((-point) as usize), s)
        } else if point as usize >= s.len() {
            format!("{}{}", s, "0".repeat(point as usize - s.len()))
        } else {
            format!("{}.{}", &s[..point as usize], &s[point as usize..])
        };
        if out.contains('.') {
            while out.ends_with('0') {
                out.pop();
            }
            if out.ends_with('.') {
                out.pop();
            }
        }
        out
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

impl fmt::Debug for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `value / divisor`; an inexact division is reported as an internal error.
pub(crate) fn exact_div(value: BigCount, divisor: u32, what: &str) -> Result<BigCount> {
    let (q, r) = value.div_rem(&BigCount::from(divisor));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Internal(format!("{what}: not divisible by {divisor}")))
    }
}
