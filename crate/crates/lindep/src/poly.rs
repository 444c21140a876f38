//! Univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored in ascending degree with a nonzero leading
//! coefficient (the zero polynomial is the empty vector). These carry the
//! exact characteristic polynomials, so every operation is exact; nothing
//! here rounds.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPoly {
    coeffs: Vec<BigInt>,
}

impl ExactPoly {
    /// Normalising constructor: trims leading zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> ExactPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> ExactPoly {
        ExactPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> ExactPoly {
        ExactPoly { coeffs: vec![] }
    }

    pub fn one() -> ExactPoly {
        ExactPoly::from_i64(&[1])
    }

    /// The monomial x.
    pub fn x() -> ExactPoly {
        ExactPoly::from_i64(&[0, 1])
    }

    /// x - r.
    pub fn linear(r: &BigInt) -> ExactPoly {
        ExactPoly::new(vec![-r.clone(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Ascending coefficients, leading coefficient last.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &ExactPoly) -> ExactPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        ExactPoly::new(coeffs)
    }

    pub fn sub(&self, other: &ExactPoly) -> ExactPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        ExactPoly::new(coeffs)
    }

    pub fn mul(&self, other: &ExactPoly) -> ExactPoly {
        if self.is_zero() || other.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ExactPoly::new(coeffs)
    }

    pub fn pow(&self, e: u64) -> ExactPoly {
        let mut out = ExactPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for ExactPoly {
    /// Human form, descending powers: `x^4 - 3x^2`, `x^2 - 2x`, `-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for ExactPoly {
    /// `{"coeffs": ["-3", "0", "1"]}` — decimal strings, ascending degree.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        let mut st = serializer.serialize_struct("ExactPoly", 1)?;
        st.serialize_field("coeffs", &strings)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ExactPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<String>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalisation_trims_leading_zeros() {
        let p = ExactPoly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), 1);
        assert_eq!(ExactPoly::from_i64(&[0, 0]), ExactPoly::zero());
    }

    #[test]
    fn arithmetic_basics() {
        let x = ExactPoly::x();
        let p = x.mul(&x).sub(&ExactPoly::one()); // x^2 - 1
        assert_eq!(p, ExactPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(
            ExactPoly::linear(&BigInt::from(1)).pow(3),
            ExactPoly::from_i64(&[-1, 3, -3, 1])
        );
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(8));
        assert!(p.is_monic());
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            ExactPoly::from_i64(&[0, 0, -3, 0, 1]).to_string(),
            "x^4 - 3x^2"
        );
        assert_eq!(ExactPoly::from_i64(&[0, -2, 1]).to_string(), "x^2 - 2x");
        assert_eq!(
            ExactPoly::from_i64(&[-2, -3, 0, 1]).to_string(),
            "x^3 - 3x - 2"
        );
        assert_eq!(ExactPoly::from_i64(&[0, 1]).to_string(), "x");
        assert_eq!(ExactPoly::from_i64(&[-2]).to_string(), "-2");
        assert_eq!(ExactPoly::zero().to_string(), "0");
        assert_eq!(ExactPoly::from_i64(&[1, -1]).to_string(), "-x + 1");
    }

    #[test]
    fn json_round_trip_uses_decimal_strings() {
        let p = ExactPoly::from_i64(&[-3, 0, 1]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"coeffs":["-3","0","1"]}"#);
        let back: ExactPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_poly() -> impl Strategy<Value = ExactPoly> {
            proptest::collection::vec(-9i64..=9, 0..6).prop_map(|v| ExactPoly::from_i64(&v))
        }

        proptest! {
            #[test]
            fn mul_distributes_over_add(a in small_poly(), b in small_poly(), c in small_poly()) {
                prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            }

            #[test]
            fn eval_is_homomorphic(a in small_poly(), b in small_poly(), x in -5i64..=5) {
                let x = BigInt::from(x);
                prop_assert_eq!(a.mul(&b).eval(&x), a.eval(&x) * b.eval(&x));
                prop_assert_eq!(a.add(&b).eval(&x), a.eval(&x) + b.eval(&x));
            }
        }
    }
}
