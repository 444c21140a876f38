//! Closed-form predictors in (q, n), with no access to any graph.
//!
//! Every prediction is a pure formula evaluation. The two energy quantities
//! that the source corollaries get wrong are carried twice, on purpose:
//! `*_corollary` fields evaluate the quoted corollary formulas verbatim,
//! `*_derived` fields evaluate the closed forms implied by the
//! (independently verified) factorisation theorems. They are never merged; the verifier reports both
//! and flags the disagreement.
//!
//! Derivation of the `_derived` forms from the factored spectra: the two
//! roots of x² - b·x - c multiply to -c < 0, so they straddle zero and their
//! moduli add to √(b² + 4c). For the adjacency form b = q-2, c = qⁿ-1, and
//! the remaining roots contribute |q-2|·(N-1) + |-1|·(q-2)N, giving
//!
//! ```text
//! ε = √((q-2)² + 4(qⁿ-1)) + (q-2)(2N-1)
//! ```
//!
//! For the distance form b = 2(qⁿ-1)-q, c = qⁿ-1, and the integer roots -q
//! and -1 contribute q(N-1) + (q-2)N:
//!
//! ```text
//! E_D = √(b² + 4c) + q(N-1) + (q-2)N
//! ```

use crate::decimal::Decimal;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Decompose a prime power q = p^j; `None` if q is not one.
pub fn prime_power_root(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let mut rest = q;
    let mut j = 0u32;
    while rest % p == 0 {
        rest /= p;
        j += 1;
    }
    (rest == 1).then_some((p, j))
}

/// Every predicted invariant of Γ(F_q^n).
#[derive(Debug, Clone, PartialEq)]
pub struct PredictionSet {
    pub q: u64,
    pub n: u32,
    /// m = q(qⁿ-1)/2
    pub size: BigInt,
    /// 2 for n >= 2, 1 for n = 1
    pub diameter: u64,
    pub domination: u64,
    /// N = (qⁿ-1)/(q-1)
    pub independence: BigInt,
    pub clique: u64,
    pub chromatic: u64,
    pub eulerian: bool,
    pub edge_connectivity: u64,
    /// 1 for n >= 2, q-1 for n = 1
    pub vertex_connectivity: u64,
    pub planar: bool,
    /// τ = q^((q-2)N)
    pub spanning_trees: BigInt,
    /// 1 for n >= 2, q for n = 1
    pub algebraic_connectivity: u64,
    /// the corollary formula 2(q-2)N, kept verbatim
    pub adjacency_energy_corollary: BigInt,
    /// corollary formula qⁿ + ((qⁿ(q-1)-q)/qⁿ)(N-1) + (q/qⁿ)(q-2)N
    pub laplacian_energy_corollary: BigRational,
    /// corollary formula 2(2qⁿ-q-2), kept verbatim
    pub distance_energy_corollary: BigInt,
    /// √((q-2)²+4(qⁿ-1)) + (q-2)(2N-1), from the factored spectrum
    pub adjacency_energy_derived: Decimal,
    /// √(b²+4c) + q(N-1) + (q-2)N with b = 2(qⁿ-1)-q, c = qⁿ-1
    pub distance_energy_derived: Decimal,
}

/// Evaluate every prediction for Γ(F_q^n).
pub fn predict_all(q: u64, n: u32) -> Result<PredictionSet> {
    if prime_power_root(q).is_none() {
        return Err(Error::InvalidInput(format!(
            "q must be a prime power >= 2, got {q}"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidInput("dimension must be >= 1".into()));
    }
    let qb = BigInt::from(q);
    let qn = qb.pow(n);
    let qn1 = &qn - BigInt::one(); // qⁿ - 1
    let big_n = &qn1 / BigInt::from(q - 1);
    let unit_mult = BigInt::from(q - 2) * &big_n; // (q-2)N

    let size = &qb * &qn1 / BigInt::from(2);
    let tau_exp = unit_mult
        .to_u32()
        .expect("spanning-tree exponent (q-2)N fits u32 at desk scale");
    let spanning_trees = qb.pow(tau_exp);

    // LE corollary, verbatim: qⁿ + ((qⁿ(q-1)-q)/qⁿ)(N-1) + (q/qⁿ)(q-2)N
    let laplacian_energy_corollary = BigRational::from(qn.clone())
        + BigRational::new(&qn * BigInt::from(q - 1) - &qb, qn.clone())
            * BigRational::from(&big_n - BigInt::one())
        + BigRational::new(qb.clone(), qn.clone()) * BigRational::from(unit_mult.clone());

    let adjacency_energy_corollary = BigInt::from(2) * &unit_mult;
    let distance_energy_corollary =
        BigInt::from(2) * (BigInt::from(2) * &qn - BigInt::from(q) - BigInt::from(2));

    let adj_disc = BigInt::from((q - 2) * (q - 2)) + BigInt::from(4) * &qn1;
    let adjacency_energy_derived = Decimal::sqrt_biguint(&adj_disc.to_biguint().unwrap()).add(
        &Decimal::from_bigint(&(BigInt::from(q - 2) * (BigInt::from(2) * &big_n - BigInt::one()))),
    );

    let b = BigInt::from(2) * &qn1 - &qb;
    let dist_disc = &b * &b + BigInt::from(4) * &qn1;
    let distance_energy_derived = Decimal::sqrt_biguint(&dist_disc.to_biguint().unwrap()).add(
        &Decimal::from_bigint(&(&qb * (&big_n - BigInt::one()) + &unit_mult)),
    );

    Ok(PredictionSet {
        q,
        n,
        size,
        diameter: if n >= 2 { 2 } else { 1 },
        domination: 1,
        independence: big_n,
        clique: q,
        chromatic: q,
        eulerian: q % 2 == 1,
        edge_connectivity: q - 1,
        vertex_connectivity: if n >= 2 { 1 } else { q - 1 },
        planar: q <= 4,
        spanning_trees,
        algebraic_connectivity: if n >= 2 { 1 } else { q },
        adjacency_energy_corollary,
        laplacian_energy_corollary,
        distance_energy_corollary,
        adjacency_energy_derived,
        distance_energy_derived,
    })
}

/// Canonical rendering of a rational: plain integer when the denominator is
/// one, else a 12-significant-digit decimal.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        Decimal::from_ratio(r).to_sig_string(12)
    }
}

impl Serialize for PredictionSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PredictionSet", 19)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("size", &self.size.to_string())?;
        st.serialize_field("diameter", &self.diameter)?;
        st.serialize_field("domination_number", &self.domination)?;
        st.serialize_field("independence_number", &self.independence.to_string())?;
        st.serialize_field("clique_number", &self.clique)?;
        st.serialize_field("chromatic_number", &self.chromatic)?;
        st.serialize_field("eulerian", &self.eulerian)?;
        st.serialize_field("edge_connectivity", &self.edge_connectivity)?;
        st.serialize_field("vertex_connectivity", &self.vertex_connectivity)?;
        st.serialize_field("planar", &self.planar)?;
        st.serialize_field("spanning_trees", &self.spanning_trees.to_string())?;
        st.serialize_field("algebraic_connectivity", &self.algebraic_connectivity)?;
        st.serialize_field(
            "adjacency_energy_corollary",
            &self.adjacency_energy_corollary.to_string(),
        )?;
        st.serialize_field(
            "laplacian_energy_corollary",
            &rational_string(&self.laplacian_energy_corollary),
        )?;
        st.serialize_field(
            "distance_energy_corollary",
            &self.distance_energy_corollary.to_string(),
        )?;
        st.serialize_field(
            "adjacency_energy_derived",
            &self.adjacency_energy_derived.to_sig_string(12),
        )?;
        st.serialize_field(
            "distance_energy_derived",
            &self.distance_energy_derived.to_sig_string(12),
        )?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power_root(2), Some((2, 1)));
        assert_eq!(prime_power_root(9), Some((3, 2)));
        assert_eq!(prime_power_root(64), Some((2, 6)));
        assert_eq!(prime_power_root(6), None);
        assert_eq!(prime_power_root(12), None);
        assert_eq!(prime_power_root(1), None);
        assert_eq!(prime_power_root(0), None);
    }

    #[test]
    fn friendship_graph_predictions() {
        let p = predict_all(3, 2).unwrap();
        assert_eq!(p.size, BigInt::from(12));
        assert_eq!(p.independence, BigInt::from(4));
        assert_eq!(p.clique, 3);
        assert_eq!(p.chromatic, 3);
        assert_eq!(p.spanning_trees, BigInt::from(81));
        assert!(p.eulerian);
        assert_eq!(p.diameter, 2);
        assert_eq!(p.vertex_connectivity, 1);
        assert_eq!(p.algebraic_connectivity, 1);
    }

    #[test]
    fn laplacian_energy_corollary_star() {
        // 4 + (2/4)·2 + 0 = 5
        let p = predict_all(2, 2).unwrap();
        assert_eq!(
            p.laplacian_energy_corollary,
            BigRational::from(BigInt::from(5))
        );
    }

    #[test]
    fn energy_fields_diverge_for_star() {
        let p = predict_all(2, 2).unwrap();
        assert_eq!(p.adjacency_energy_corollary, BigInt::zero());
        assert_eq!(
            p.adjacency_energy_derived.to_sig_string(12),
            "3.46410161514"
        );
        assert_eq!(p.distance_energy_corollary, BigInt::from(8));
        assert_eq!(p.distance_energy_derived.to_sig_string(12), "9.29150262213");
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(matches!(predict_all(6, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(predict_all(1, 1), Err(Error::InvalidInput(_))));
        assert!(matches!(predict_all(2, 0), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn dimension_one_specialisations() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let p = predict_all(q, 1).unwrap();
            assert_eq!(p.diameter, 1);
            assert_eq!(p.vertex_connectivity, q - 1);
            assert_eq!(p.algebraic_connectivity, q);
            assert_eq!(p.independence, BigInt::one());
        }
    }

    #[test]
    fn subspace_counting_identity() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
            for n in 1..=4 {
                let p = predict_all(q, n).unwrap();
                let lhs = BigInt::from(q - 1) * &p.independence + BigInt::one();
                assert_eq!(lhs, BigInt::from(q).pow(n));
            }
        }
    }

    #[test]
    fn predictions_are_deterministic() {
        assert_eq!(predict_all(5, 2).unwrap(), predict_all(5, 2).unwrap());
    }

    #[test]
    fn json_mirrors_report_names() {
        let p = predict_all(3, 2).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(v["size"], "12");
        assert_eq!(v["spanning_trees"], "81");
        // 9 + (15/9)·3 + (3/9)·4 = 46/3
        assert_eq!(v["laplacian_energy_corollary"], "15.3333333333");
        assert_eq!(v["adjacency_energy_corollary"], "8");
    }
}
