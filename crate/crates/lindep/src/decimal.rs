//! Fixed-point decimals with 50 fractional digits.
//!
//! The only irrational quantity anywhere in this crate is a single square
//! root per energy value, so a fixed scale is enough: integers embed exactly,
//! square roots are floored at scale 100 and land within 10^-50 of the true
//! value, and sums of a few such terms stay correct to well past the 30
//! significant digits the reports promise.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Fractional digits carried by every [`Decimal`].
pub const SCALE: u32 = 50;

fn pow10(e: u32) -> BigInt {
    BigInt::from(10u32).pow(e)
}

/// value = units / 10^SCALE.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Decimal {
    units: BigInt,
}

impl Decimal {
    pub fn zero() -> Decimal {
        Decimal {
            units: BigInt::zero(),
        }
    }

    pub fn from_bigint(v: &BigInt) -> Decimal {
        Decimal {
            units: v * pow10(SCALE),
        }
    }

    pub fn from_u64(v: u64) -> Decimal {
        Decimal::from_bigint(&BigInt::from(v))
    }

    /// Nearest fixed-point value (ties away from zero).
    pub fn from_ratio(r: &BigRational) -> Decimal {
        let scaled_num = r.numer() * pow10(SCALE);
        let den = r.denom(); // always positive for BigRational
        let twice = BigInt::from(2) * &scaled_num;
        let units = if scaled_num.is_negative() {
            (twice - den) / (BigInt::from(2) * den)
        } else {
            (twice + den) / (BigInt::from(2) * den)
        };
        Decimal { units }
    }

    /// √v at full scale (floored in the last place).
    pub fn sqrt_biguint(v: &BigUint) -> Decimal {
        let scaled = v * BigUint::from(10u32).pow(2 * SCALE);
        Decimal {
            units: BigInt::from(scaled.sqrt()),
        }
    }

    pub fn add(&self, other: &Decimal) -> Decimal {
        Decimal {
            units: &self.units + &other.units,
        }
    }

    pub fn sub(&self, other: &Decimal) -> Decimal {
        Decimal {
            units: &self.units - &other.units,
        }
    }

    pub fn abs(&self) -> Decimal {
        Decimal {
            units: self.units.abs(),
        }
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Decimal {
        Decimal {
            units: &self.units * k,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.units.is_zero()
    }

    /// |a - b| <= max(|a|, |b|) / 10^9, with equality-of-zeros allowed.
    pub fn rel_close_1e9(&self, other: &Decimal) -> bool {
        let diff = (&self.units - &other.units).abs();
        let scale = self.units.abs().max(other.units.abs());
        diff * pow10(9) <= scale
    }

    /// Shortest decimal string rounded to `sig` significant digits
    /// (integers render plain, no trailing zeros).
    pub fn to_sig_string(&self, sig: u32) -> String {
        assert!(sig >= 1);
        if self.units.is_zero() {
            return "0".to_string();
        }
        let neg = self.units.is_negative();
        let mag = self.units.abs();
        let digits = mag.to_string();
        let ndigits = digits.len() as i64;
        let drop = ndigits - sig as i64;
        let (kept, exp) = if drop > 0 {
            let half = BigInt::from(5) * pow10(drop as u32 - 1);
            let rounded = (mag + half) / pow10(drop as u32);
            (rounded.to_string(), drop - SCALE as i64)
        } else {
            (digits, -(SCALE as i64))
        };
        // value = kept * 10^exp; render as plain decimal
        let mut s = if exp >= 0 {
            format!("{kept}{}", "0".repeat(exp as usize))
        } else {
            let point = kept.len() as i64 + exp;
            if point > 0 {
                let (int_part, frac) = kept.split_at(point as usize);
                format!("{int_part}.{frac}")
            } else {
                format!("0.{}{kept}", "0".repeat((-point) as usize))
            }
        };
        if s.contains('.') {
            s = s.trim_end_matches('0').trim_end_matches('.').to_string();
        }
        if neg && s != "0" {
            s.insert(0, '-');
        }
        s
    }

    /// Full-scale rendering (all 50 fractional digits, trimmed).
    pub fn to_full_string(&self) -> String {
        let neg = self.units.is_negative();
        let mag = self.units.abs().to_string();
        let mag = if mag.len() <= SCALE as usize {
            format!("{}{mag}", "0".repeat(SCALE as usize + 1 - mag.len()))
        } else {
            mag
        };
        let (int_part, frac) = mag.split_at(mag.len() - SCALE as usize);
        let frac = frac.trim_end_matches('0');
        let mut s = if frac.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac}")
        };
        if neg && s.chars().any(|c| c != '0' && c != '.') {
            s.insert(0, '-');
        }
        s
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_full_string())
    }
}

impl FromStr for Decimal {
    type Err = String;

    /// Parses `-12.345`-style literals, truncating past 50 fractional digits.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(format!("empty decimal literal {s:?}"));
        }
        let mut frac = frac_part.to_string();
        frac.truncate(SCALE as usize);
        let pad = SCALE as usize - frac.len();
        let digits = format!(
            "{}{}{}",
            if int_part.is_empty() { "0" } else { int_part },
            frac,
            "0".repeat(pad)
        );
        let mut units = digits
            .parse::<BigInt>()
            .map_err(|e| format!("bad decimal literal {s:?}: {e}"))?;
        if neg {
            units = -units;
        }
        Ok(Decimal { units })
    }
}
