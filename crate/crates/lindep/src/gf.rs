//! Arithmetic in GF(p^k).
//!
//! Elements are polynomial residues over Z_p modulo a monic irreducible
//! polynomial of degree `k`, stored as coefficient vectors of length `k`
//! (ascending degree, every entry reduced mod `p`). The canonical integer
//! encoding of an element is the base-`p` value of its coefficient vector,
//! which gives the field a total order used everywhere downstream for
//! deterministic enumeration.
//!
//! The modulus is chosen deterministically: the monic irreducible polynomial
//! of degree `k` whose coefficient vector has the smallest base-`p` encoding.
//! Irreducibility is certified by exhaustive trial division, which is exact
//! at the scales this crate targets (`k <= 6`, `q <= 64` for the exhaustive
//! validation paths; larger presentations are accepted but validated by the
//! same trial-division sweep, which merely gets slower).

use crate::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest extension degree `find_irreducible` will search.
pub const MAX_EXTENSION_DEGREE: u32 = 6;

/// A concrete presentation of GF(p^k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    k: u32,
    modulus: Vec<u64>,
    q: u64,
}

/// An element of GF(p^k): `k` coefficients in `[0, p)`, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

/// Trial-division primality test; ample for desk-scale p.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients mod `p`.
fn poly_rem_monic(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    debug_assert_eq!(*m.last().unwrap(), 1, "divisor must be monic");
    let dm = m.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|&c| c % p).collect();
    while r.len() > dm {
        let lead = *r.last().unwrap();
        if lead != 0 {
            // cancel the leading term with lead·x^shift·m
            let shift = r.len() - m.len();
            for (i, &mc) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * mc) % p) % p;
            }
        }
        r.pop();
    }
    r.resize(dm, 0);
    r
}

fn poly_mul_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

/// True if the monic polynomial `f` (ascending coefficients) has no monic
/// divisor of degree in `[1, deg(f)/2]` over Z_p. Exhaustive trial division.
fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for d in 1..=(deg / 2) {
        // all monic polynomials of degree d: low coefficients run through p^d
        let count = p.pow(d as u32);
        for m in 0..count {
            let mut divisor = digits_base_p(m, p, d as u32);
            divisor.push(1);
            let rem = poly_rem_monic(f, &divisor, p);
            if rem.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn digits_base_p(mut v: u64, p: u64, len: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(len as usize);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

/// The monic irreducible polynomial of degree `k` over Z_p whose coefficient
/// vector has the smallest base-`p` encoding. For `k = 1` this is `x`.
pub fn find_irreducible(p: u64, k: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("p must be prime, got {p}")));
    }
    if k == 0 || k > MAX_EXTENSION_DEGREE {
        return Err(Error::InvalidField(format!(
            "extension degree must be in 1..={MAX_EXTENSION_DEGREE}, got {k}"
        )));
    }
    if k == 1 {
        return Ok(vec![0, 1]);
    }
    let count = p.pow(k);
    for m in 0..count {
        let mut f = digits_base_p(m, p, k);
        f.push(1);
        if is_irreducible_mod_p(&f, p) {
            return Ok(f);
        }
    }
    unreachable!("an irreducible polynomial of degree k always exists over Z_p")
}

impl FieldSpec {
    /// GF(p^k) with the deterministic (smallest-encoding) modulus.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        let modulus = find_irreducible(p, k)?;
        Self::with_modulus(p, k, modulus)
    }

    /// GF(p^k) with a caller-supplied modulus, which is validated: monic of
    /// degree `k`, coefficients reduced mod `p`, and irreducible over Z_p.
    pub fn with_modulus(p: u64, k: u32, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("p must be prime, got {p}")));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        if modulus.len() != k as usize + 1 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidField(format!(
                "modulus must be monic of degree {k}"
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(
                "modulus coefficients must lie in [0, p)".into(),
            ));
        }
        if !is_irreducible_mod_p(&modulus, p) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:?} is reducible over Z_{p}"
            )));
        }
        let q = (0..k)
            .try_fold(1u64, |acc, _| acc.checked_mul(p))
            .ok_or(Error::InvalidField(
                "p^k overflows the supported element range".into(),
            ))?;
        Ok(FieldSpec { p, k, modulus, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field order q = p^k.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.k as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.element_from_enc(1)
    }

    /// Element with canonical encoding `e` (base-p digits of `e`).
    ///
    /// Panics if `e >= q`.
    pub fn element_from_enc(&self, e: u64) -> FieldElement {
        assert!(e < self.q, "encoding {e} out of range for q = {}", self.q);
        FieldElement {
            coeffs: digits_base_p(e, self.p, self.k),
        }
    }

    /// Canonical encoding: Σ coeffs[i]·p^i, a bijection onto `[0, q)`.
    pub fn enc(&self, a: &FieldElement) -> u64 {
        a.coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c)
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    /// Polynomial product reduced modulo the field modulus and mod p.
    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let prod = poly_mul_mod_p(&a.coeffs, &b.coeffs, self.p);
        let coeffs = poly_rem_monic(&prod, &self.modulus, self.p);
        FieldElement { coeffs }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm on
    /// polynomials over Z_p.
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        // Invariants: old_r = old_s * modulus + old_t * a (as polynomials).
        let mut old_r: Vec<u64> = self.modulus.clone();
        let mut r: Vec<u64> = trim(&a.coeffs);
        let mut old_t: Vec<u64> = vec![];
        let mut t: Vec<u64> = vec![1];
        while !r.is_empty() {
            let (quot, rem) = poly_divmod(&old_r, &r, self.p);
            let qt = if t.is_empty() {
                vec![]
            } else {
                poly_mul_mod_p(&quot, &t, self.p)
            };
            let new_t = poly_sub(&old_t, &qt, self.p);
            old_r = r;
            r = rem;
            old_t = t;
            t = new_t;
        }
        // old_r is now gcd(modulus, a): a nonzero constant since the modulus
        // is irreducible and a != 0. Scale old_t by its inverse mod p.
        debug_assert_eq!(old_r.len(), 1);
        let scale = inv_mod_p(old_r[0], self.p);
        let mut coeffs: Vec<u64> = old_t.iter().map(|&c| (c * scale) % self.p).collect();
        coeffs.resize(self.k as usize, 0);
        Ok(FieldElement { coeffs })
    }

    /// All q elements in increasing encoding order: 0, 1, then the rest.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.q).map(|e| self.element_from_enc(e)).collect()
    }
}

fn trim(v: &[u64]) -> Vec<u64> {
    let mut out = v.to_vec();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let len = a.len().max(b.len());
    let out: Vec<u64> = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&out)
}

/// Long division of `a` by a nonzero (not necessarily monic) `b` over Z_p.
fn poly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let b = trim(b);
    let lead_inv = inv_mod_p(*b.last().unwrap(), p);
    let db = b.len() - 1;
    let mut rem = trim(a);
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    while rem.len() > db {
        let c = (*rem.last().unwrap() * lead_inv) % p;
        let shift = rem.len() - b.len();
        quot[shift] = c;
        for (i, &bc) in b.iter().enumerate() {
            rem[shift + i] = (rem[shift + i] + p - (c * bc) % p) % p;
        }
        rem = trim(&rem);
        if rem.is_empty() {
            break;
        }
    }
    (quot, rem)
}

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // extended Euclid on integers
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of {a} mod {p} requires gcd 1");
    old_s.rem_euclid(p as i128) as u64
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("FieldSpec", 3)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("modulus", &self.modulus)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            p: u64,
            k: u32,
            modulus: Vec<u64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        FieldSpec::with_modulus(raw.p, raw.k, raw.modulus).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducible_degree_one_is_x() {
        assert_eq!(find_irreducible(2, 1).unwrap(), vec![0, 1]);
        assert_eq!(find_irreducible(7, 1).unwrap(), vec![0, 1]);
    }

    #[test]
    fn irreducible_gf4_is_x2_x_1() {
        // oracle: the three smaller monic quadratics over Z_2 all factor
        assert!(!is_irreducible_mod_p(&[0, 0, 1], 2)); // x^2 = x·x
        assert!(!is_irreducible_mod_p(&[1, 0, 1], 2)); // x^2+1 = (x+1)^2
        assert!(!is_irreducible_mod_p(&[0, 1, 1], 2)); // x^2+x = x(x+1)
        assert_eq!(find_irreducible(2, 2).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn irreducible_gf9_is_x2_plus_1() {
        // oracle: x^2+1 has no root mod 3 (0->1, 1->2, 2->2)
        for r in 0..3u64 {
            assert_ne!((r * r + 1) % 3, 0);
        }
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn non_prime_p_is_rejected() {
        assert!(matches!(
            find_irreducible(4, 1),
            Err(Error::InvalidField(_))
        ));
        assert!(matches!(FieldSpec::new(6, 1), Err(Error::InvalidField(_))));
        assert!(matches!(FieldSpec::new(1, 1), Err(Error::InvalidField(_))));
    }

    #[test]
    fn with_modulus_validates() {
        // x^2+1 is reducible over Z_2
        assert!(FieldSpec::with_modulus(2, 2, vec![1, 0, 1]).is_err());
        // wrong degree
        assert!(FieldSpec::with_modulus(2, 2, vec![1, 1]).is_err());
        // not monic
        assert!(FieldSpec::with_modulus(3, 2, vec![1, 0, 2]).is_err());
        // unreduced coefficient
        assert!(FieldSpec::with_modulus(3, 2, vec![4, 0, 1]).is_err());
        // a valid alternative modulus for GF(9)
        let f9 = FieldSpec::with_modulus(3, 2, vec![2, 2, 1]).unwrap();
        assert_eq!(f9.q(), 9);
    }

    #[test]
    fn add_examples() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let w = f4.element_from_enc(2);
        assert_eq!(f4.add(&w, &w), f4.zero()); // characteristic 2
        assert_eq!(f4.enc(&f4.add(&w, &f4.one())), 3); // ω + 1

        let f3 = FieldSpec::new(3, 1).unwrap();
        let two = f3.element_from_enc(2);
        assert_eq!(f3.enc(&f3.add(&two, &two)), 1);
    }

    #[test]
    fn mul_examples() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let w = f4.element_from_enc(2);
        assert_eq!(f4.enc(&f4.mul(&w, &w)), 3); // ω·ω = ω+1 under x^2+x+1

        let f3 = FieldSpec::new(3, 1).unwrap();
        let two = f3.element_from_enc(2);
        assert_eq!(f3.enc(&f3.mul(&two, &two)), 1);

        for e in 0..4 {
            let a = f4.element_from_enc(e);
            assert_eq!(f4.mul(&a, &f4.one()), a);
        }
    }

    #[test]
    fn inv_examples() {
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f3.enc(&f3.inv(&f3.element_from_enc(2)).unwrap()), 2);

        let f4 = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f4.enc(&f4.inv(&f4.element_from_enc(2)).unwrap()), 3);

        let f5 = FieldSpec::new(5, 1).unwrap();
        // oracle: exhaustive search for 3·x ≡ 1 mod 5
        let by_search = (1..5u64).find(|x| (3 * x) % 5 == 1).unwrap();
        assert_eq!(by_search, 2);
        assert_eq!(f5.enc(&f5.inv(&f5.element_from_enc(3)).unwrap()), 2);

        assert!(matches!(f5.inv(&f5.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn enumerate_examples() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let encs: Vec<u64> = f2.elements().iter().map(|e| f2.enc(e)).collect();
        assert_eq!(encs, vec![0, 1]);

        let f4 = FieldSpec::new(2, 2).unwrap();
        let encs: Vec<u64> = f4.elements().iter().map(|e| f4.enc(e)).collect();
        assert_eq!(encs, vec![0, 1, 2, 3]);
        assert_eq!(f4.elements().len(), 4);

        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f3.elements().len(), 3);
        assert_eq!(f3.elements()[0], f3.zero());
        assert_eq!(f3.elements()[1], f3.one());
    }

    #[test]
    fn gf4_multiplication_table_oracle() {
        // frozen 4x4 table for GF(4) with modulus x^2+x+1, encodings 0..3
        let expected: [[u64; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        let f4 = FieldSpec::new(2, 2).unwrap();
        for a in 0..4u64 {
            for b in 0..4u64 {
                let prod = f4.mul(&f4.element_from_enc(a), &f4.element_from_enc(b));
                assert_eq!(f4.enc(&prod), expected[a as usize][b as usize]);
            }
        }
    }

    fn desk_fields() -> Vec<FieldSpec> {
        [
            (2, 1),
            (3, 1),
            (2, 2),
            (5, 1),
            (7, 1),
            (2, 3),
            (3, 2),
            (2, 4),
            (5, 2),
            (3, 3),
            (2, 5),
            (7, 2),
            (2, 6),
        ]
        .into_iter()
        .map(|(p, k)| FieldSpec::new(p, k).unwrap())
        .collect()
    }

    #[test]
    fn exhaustive_inverses_up_to_q64() {
        for f in desk_fields() {
            assert!(f.q() <= 64);
            for e in 1..f.q() {
                let a = f.element_from_enc(e);
                let b = f.inv(&a).unwrap();
                assert_eq!(f.mul(&a, &b), f.one(), "inverse failed in GF({})", f.q());
            }
        }
    }

    #[test]
    fn moduli_admit_no_proper_monic_divisor() {
        for f in desk_fields() {
            let k = f.k() as usize;
            let p = f.p();
            for d in 1..k {
                let count = p.pow(d as u32);
                for m in 0..count {
                    let mut divisor = digits_base_p(m, p, d as u32);
                    divisor.push(1);
                    let rem = poly_rem_monic(f.modulus(), &divisor, p);
                    assert!(
                        rem.iter().any(|&c| c != 0),
                        "modulus of GF({}) divisible by {divisor:?}",
                        f.q()
                    );
                }
            }
        }
    }

    #[test]
    fn field_spec_json_shape() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let json = serde_json::to_string(&f9).unwrap();
        assert_eq!(json, r#"{"p":3,"k":2,"modulus":[1,0,1]}"#);
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f9);
        // deserialisation re-validates
        assert!(serde_json::from_str::<FieldSpec>(r#"{"p":2,"k":2,"modulus":[1,0,1]}"#).is_err());
    }

    mod axioms {
        use super::*;
        use proptest::prelude::*;

        fn check_axioms(f: &FieldSpec, ea: u64, eb: u64, ec: u64) {
            let (a, b, c) = (
                f.element_from_enc(ea % f.q()),
                f.element_from_enc(eb % f.q()),
                f.element_from_enc(ec % f.q()),
            );
            assert_eq!(f.add(&a, &b), f.add(&b, &a));
            assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
            assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c))
            );
            assert_eq!(f.add(&a, &f.zero()), a);
            assert_eq!(f.mul(&a, &f.one()), a);
            assert_eq!(f.add(&a, &f.neg(&a)), f.zero());
            if !f.is_zero(&a) {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
        }

        proptest! {
            #[test]
            fn gf8_axioms(a in 0u64..8, b in 0u64..8, c in 0u64..8) {
                check_axioms(&FieldSpec::new(2, 3).unwrap(), a, b, c);
            }

            #[test]
            fn gf9_axioms(a in 0u64..9, b in 0u64..9, c in 0u64..9) {
                check_axioms(&FieldSpec::new(3, 2).unwrap(), a, b, c);
            }

            #[test]
            fn gf49_axioms(a in 0u64..49, b in 0u64..49, c in 0u64..49) {
                check_axioms(&FieldSpec::new(7, 2).unwrap(), a, b, c);
            }
        }
    }
}
