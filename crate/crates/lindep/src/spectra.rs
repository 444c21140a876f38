//! Exact spectra: characteristic polynomials, factored eigenvalue
//! descriptions, energies, and spanning-tree counts.
//!
//! Everything is integer-exact. [`charpoly_exact`] runs the division-free
//! Berkowitz recursion over big integers, so coefficientwise equality against
//! the predicted factorisations is a meaningful certificate rather than a
//! float comparison. [`charpoly_naive`] is its deliberately-dumb oracle: a
//! Leibniz sum over all permutations, only viable to order 8, sharing no code
//! with the Berkowitz path.
//!
//! The predicted factorisations for the dependence-graph family are
//!
//! * adjacency: `{x² - (q-2)x - (qⁿ-1)}·{x - (q-2)}^(N-1)·(x+1)^((q-2)N)`
//! * Laplacian: `x·(x - qⁿ)·(x-1)^(N-1)·(x-q)^((q-2)N)`
//! * distance:  `[x² - {2(qⁿ-1)-q}x - (qⁿ-1)]·(x+q)^(N-1)·(x+1)^((q-2)N)`
//!
//! with `N = (qⁿ-1)/(q-1)` and the empty-product convention `N-1 = 0` at
//! `n = 1`. Each factorisation is also available as a
//! [`SpectrumDescription`] — integer roots with multiplicities plus at most
//! one quadratic surd pair — from which energies are computed with a single
//! high-precision square root.

use crate::decimal::Decimal;
use crate::graph::IntMatrix;
use crate::poly::ExactPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

/// Which of the three graph matrices a spectrum describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    Distance,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::Distance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::Distance => "distance",
        }
    }
}

/// Division-free characteristic polynomial det(xI - M) by the Berkowitz
/// recursion on leading principal submatrices. Exact for any integer matrix.
pub fn charpoly_exact(m: &IntMatrix) -> ExactPoly {
    let n = m.order();
    if n == 0 {
        return ExactPoly::one();
    }
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect())
        .collect();

    // coefficients in descending order, index 0 = leading 1
    let mut p: Vec<BigInt> = vec![BigInt::one(), -a[0][0].clone()];
    for r in 1..n {
        // first column of the (r+2)x(r+1) Toeplitz factor:
        // 1, -a_rr, -S·R, -S·A·R, ..., -S·A^(r-1)·R
        let mut col: Vec<BigInt> = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-a[r][r].clone());
        let mut v: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for step in 0..r {
            let mut dot = BigInt::zero();
            for j in 0..r {
                dot += &a[r][j] * &v[j];
            }
            col.push(-dot);
            if step + 1 < r {
                let mut next = vec![BigInt::zero(); r];
                for (i, slot) in next.iter_mut().enumerate() {
                    let mut acc = BigInt::zero();
                    for j in 0..r {
                        acc += &a[i][j] * &v[j];
                    }
                    *slot = acc;
                }
                v = next;
            }
        }
        // banded Toeplitz multiply, truncated to the r+2 valid rows
        let mut pnew = vec![BigInt::zero(); r + 2];
        for (k, pk) in p.iter().enumerate() {
            if pk.is_zero() {
                continue;
            }
            for (i, ci) in col.iter().enumerate() {
                if k + i >= r + 2 {
                    break;
                }
                if !ci.is_zero() {
                    pnew[k + i] += ci * pk;
                }
            }
        }
        p = pnew;
    }
    p.reverse();
    ExactPoly::new(p)
}

/// Leibniz-expansion characteristic polynomial: the independent oracle for
/// [`charpoly_exact`]. Sums sign·Π (xI - M)[i, σ(i)] over all permutations σ,
/// so it is capped at order 8.
pub fn charpoly_naive(m: &IntMatrix) -> Result<ExactPoly> {
    let n = m.order();
    if n > 8 {
        return Err(Error::Capacity {
            what: "matrix order for the Leibniz charpoly",
            requested: n as u128,
            bound: 8,
        });
    }
    if n == 0 {
        return Ok(ExactPoly::one());
    }
    let mut total = vec![BigInt::zero(); n + 1];
    for_each_permutation(n, |perm, sign| {
        let mut prod = vec![BigInt::zero(); n + 1];
        prod[0] = BigInt::one();
        let mut deg = 0usize;
        for (i, &j) in perm.iter().enumerate() {
            let c = -BigInt::from(m.get(i, j));
            if i == j {
                // multiply by (x + c) in place
                for d in (0..=deg).rev() {
                    let old = prod[d].clone();
                    prod[d + 1] += &old;
                    prod[d] = old * &c;
                }
                deg += 1;
            } else {
                if c.is_zero() {
                    prod.iter_mut().for_each(|v| *v = BigInt::zero());
                    break;
                }
                for item in prod.iter_mut().take(deg + 1) {
                    *item *= &c;
                }
            }
        }
        for (t, p) in total.iter_mut().zip(&prod) {
            if sign > 0 {
                *t += p;
            } else {
                *t -= p;
            }
        }
    });
    Ok(ExactPoly::new(total))
}

/// Heap's algorithm; the callback receives each permutation and its sign.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize], i64)) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut sign = 1i64;
    f(&perm, sign);
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
}

fn q_pow_n(q: u64, n: u32) -> BigInt {
    BigInt::from(q).pow(n)
}

/// N = (q^n - 1)/(q - 1), the number of 1-dimensional subspaces.
pub fn subspace_count(q: u64, n: u32) -> BigInt {
    (q_pow_n(q, n) - BigInt::one()) / BigInt::from(q - 1)
}

fn as_exp(v: BigInt) -> u64 {
    u64::try_from(v).expect("exponent fits u64 at desk scale")
}

/// Expansion of {x² - (q-2)x - (qⁿ-1)}·{x - (q-2)}^(N-1)·(x+1)^((q-2)N).
pub fn predicted_adjacency_poly(q: u64, n: u32) -> ExactPoly {
    assert!(q >= 2 && n >= 1);
    let big_n = subspace_count(q, n);
    let quad = ExactPoly::new(vec![
        -(q_pow_n(q, n) - BigInt::one()),
        -BigInt::from(q - 2),
        BigInt::one(),
    ]);
    let lin = ExactPoly::linear(&BigInt::from(q - 2)).pow(as_exp(&big_n - BigInt::one()));
    let unit = ExactPoly::linear(&BigInt::from(-1)).pow(as_exp(BigInt::from(q - 2) * big_n));
    quad.mul(&lin).mul(&unit)
}

/// Expansion of x·(x - qⁿ)·(x-1)^(N-1)·(x-q)^((q-2)N).
pub fn predicted_laplacian_poly(q: u64, n: u32) -> ExactPoly {
    assert!(q >= 2 && n >= 1);
    let big_n = subspace_count(q, n);
    ExactPoly::x()
        .mul(&ExactPoly::linear(&q_pow_n(q, n)))
        .mul(&ExactPoly::linear(&BigInt::one()).pow(as_exp(&big_n - 1)))
        .mul(&ExactPoly::linear(&BigInt::from(q)).pow(as_exp(BigInt::from(q - 2) * big_n)))
}

/// Expansion of [x² - {2(qⁿ-1)-q}x - (qⁿ-1)]·(x+q)^(N-1)·(x+1)^((q-2)N).
pub fn predicted_distance_poly(q: u64, n: u32) -> ExactPoly {
    assert!(q >= 2 && n >= 1);
    let big_n = subspace_count(q, n);
    let c = q_pow_n(q, n) - BigInt::one();
    let b = BigInt::from(2) * &c - BigInt::from(q);
    let quad = ExactPoly::new(vec![-c, -b, BigInt::one()]);
    let lin = ExactPoly::linear(&BigInt::from(-(q as i64))).pow(as_exp(&big_n - BigInt::one()));
    let unit = ExactPoly::linear(&BigInt::from(-1)).pow(as_exp(BigInt::from(q - 2) * big_n));
    quad.mul(&lin).mul(&unit)
}

pub fn predicted_poly(q: u64, n: u32, which: MatrixKind) -> ExactPoly {
    match which {
        MatrixKind::Adjacency => predicted_adjacency_poly(q, n),
        MatrixKind::Laplacian => predicted_laplacian_poly(q, n),
        MatrixKind::Distance => predicted_distance_poly(q, n),
    }
}

/// Eigenvalues in factored form: integer roots with multiplicities, plus at
/// most one quadratic factor x² - b·x - c contributing a conjugate surd pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumDescription {
    /// (value, multiplicity), ascending by value, multiplicities positive.
    pub integer_roots: Vec<(BigInt, u64)>,
    /// (b, c) for the two roots of x² - b·x - c, multiplicity 1 each.
    pub surd_pair: Option<(BigInt, BigInt)>,
}

#[derive(Serialize, Deserialize)]
struct RootJson {
    value: String,
    multiplicity: u64,
}

#[derive(Serialize, Deserialize)]
struct SurdJson {
    b: String,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct SpectrumJson {
    integer_roots: Vec<RootJson>,
    surd: Option<SurdJson>,
}

impl Serialize for SpectrumDescription {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let json = SpectrumJson {
            integer_roots: self
                .integer_roots
                .iter()
                .map(|(v, m)| RootJson {
                    value: v.to_string(),
                    multiplicity: *m,
                })
                .collect(),
            surd: self.surd_pair.as_ref().map(|(b, c)| SurdJson {
                b: b.to_string(),
                c: c.to_string(),
            }),
        };
        json.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpectrumDescription {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let json = SpectrumJson::deserialize(deserializer)?;
        let parse = |s: &str| s.parse::<BigInt>().map_err(D::Error::custom);
        let integer_roots = json
            .integer_roots
            .iter()
            .map(|r| Ok((parse(&r.value)?, r.multiplicity)))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let surd_pair = match json.surd {
            Some(s) => Some((parse(&s.b)?, parse(&s.c)?)),
            None => None,
        };
        Ok(SpectrumDescription {
            integer_roots,
            surd_pair,
        })
    }
}

impl SpectrumDescription {
    fn from_parts(roots: Vec<(BigInt, BigInt)>, surd_pair: Option<(BigInt, BigInt)>) -> Self {
        let mut merged: BTreeMap<BigInt, u64> = BTreeMap::new();
        for (value, mult) in roots {
            if mult.is_zero() {
                continue;
            }
            *merged.entry(value).or_insert(0) += as_exp(mult);
        }
        SpectrumDescription {
            integer_roots: merged.into_iter().collect(),
            surd_pair,
        }
    }

    /// Total number of eigenvalues described.
    pub fn degree(&self) -> u64 {
        let ints: u64 = self.integer_roots.iter().map(|(_, m)| m).sum();
        ints + if self.surd_pair.is_some() { 2 } else { 0 }
    }

    /// Multiply the description back out; must reproduce the matching
    /// characteristic polynomial exactly.
    pub fn reconstruct(&self) -> ExactPoly {
        let mut out = match &self.surd_pair {
            Some((b, c)) => ExactPoly::new(vec![-c.clone(), -b.clone(), BigInt::one()]),
            None => ExactPoly::one(),
        };
        for (value, mult) in &self.integer_roots {
            out = out.mul(&ExactPoly::linear(value).pow(*mult));
        }
        out
    }
}

/// The eigenvalue description the factorisation theorems assign to Γ(V).
pub fn spectrum_from_factored_form(q: u64, n: u32, which: MatrixKind) -> SpectrumDescription {
    assert!(q >= 2 && n >= 1);
    let big_n = subspace_count(q, n);
    let qn1 = q_pow_n(q, n) - BigInt::one(); // q^n - 1
    let unit_mult = BigInt::from(q - 2) * &big_n;
    match which {
        MatrixKind::Adjacency => SpectrumDescription::from_parts(
            vec![
                (BigInt::from(q - 2), &big_n - BigInt::one()),
                (BigInt::from(-1), unit_mult),
            ],
            Some((BigInt::from(q - 2), qn1)),
        ),
        MatrixKind::Laplacian => SpectrumDescription::from_parts(
            vec![
                (BigInt::zero(), BigInt::one()),
                (q_pow_n(q, n), BigInt::one()),
                (BigInt::one(), &big_n - BigInt::one()),
                (BigInt::from(q), unit_mult),
            ],
            None,
        ),
        MatrixKind::Distance => SpectrumDescription::from_parts(
            vec![
                (BigInt::from(-(q as i64)), &big_n - BigInt::one()),
                (BigInt::from(-1), unit_mult),
            ],
            Some((BigInt::from(2) * &qn1 - BigInt::from(q), qn1)),
        ),
    }
}

/// Σ multiplicity·|root| over the surd pair alone.
///
/// The roots of x² - b·x - c sum to b and multiply to -c, so when c > 0 they
/// straddle zero and |r₁| + |r₂| = √(b² + 4c); when c <= 0 they share a sign
/// and the sum of moduli collapses to |b|.
fn surd_abs_sum(b: &BigInt, c: &BigInt) -> Decimal {
    let disc = b * b + BigInt::from(4) * c;
    assert!(
        !disc.is_negative(),
        "surd pair with negative discriminant cannot come from a symmetric matrix"
    );
    if c.is_positive() {
        Decimal::sqrt_biguint(&disc.to_biguint().unwrap())
    } else {
        Decimal::from_bigint(&b.abs())
    }
}

fn abs_eigen_sum(s: &SpectrumDescription) -> Decimal {
    let int_part: BigInt = s
        .integer_roots
        .iter()
        .map(|(v, m)| v.abs() * BigInt::from(*m))
        .sum();
    let mut out = Decimal::from_bigint(&int_part);
    if let Some((b, c)) = &s.surd_pair {
        out = out.add(&surd_abs_sum(b, c));
    }
    out
}

/// Graph energy Σ|λᵢ| from an adjacency spectrum, to 50 decimal places.
pub fn adjacency_energy(s: &SpectrumDescription) -> Decimal {
    abs_eigen_sum(s)
}

/// Distance energy Σ|λᵢ| from a distance spectrum.
pub fn distance_energy(s: &SpectrumDescription) -> Decimal {
    abs_eigen_sum(s)
}

/// Laplacian energy Σ|λᵢ - 2m/n| as an exact rational.
///
/// `num_edges` is the graph size m, `num_vertices` its order.
pub fn laplacian_energy(
    s: &SpectrumDescription,
    num_edges: &BigInt,
    num_vertices: u64,
) -> Result<BigRational> {
    if s.surd_pair.is_some() {
        return Err(Error::InvalidInput(
            "Laplacian spectra are integral; a surd pair does not belong here".into(),
        ));
    }
    let mean = BigRational::new(BigInt::from(2) * num_edges, BigInt::from(num_vertices));
    let mut sum = BigRational::zero();
    for (value, mult) in &s.integer_roots {
        let dev = (BigRational::from(value.clone()) - &mean).abs();
        sum += dev * BigRational::from(BigInt::from(*mult));
    }
    Ok(sum)
}

/// Second-smallest Laplacian eigenvalue, counted with multiplicity.
pub fn algebraic_connectivity(s: &SpectrumDescription) -> Result<BigRational> {
    if s.surd_pair.is_some() {
        return Err(Error::InvalidInput(
            "algebraic connectivity reads an integral Laplacian spectrum".into(),
        ));
    }
    if s.degree() < 2 {
        return Err(Error::InvalidInput(
            "need at least two eigenvalues for a second-smallest".into(),
        ));
    }
    // integer_roots is ascending
    let (first, mult) = &s.integer_roots[0];
    let second = if *mult >= 2 {
        first.clone()
    } else {
        s.integer_roots[1].0.clone()
    };
    Ok(BigRational::from(second))
}

/// Exact determinant by fraction-free Bareiss elimination with row pivoting.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Spanning-tree count: determinant of the Laplacian with row and column
/// `index` deleted (matrix-tree theorem; the answer is index-independent).
pub fn spanning_trees_kirchhoff_at(l: &IntMatrix, index: usize) -> BigInt {
    let n = l.order();
    assert!(index < n);
    let keep: Vec<usize> = (0..n).filter(|&i| i != index).collect();
    let minor: Vec<Vec<BigInt>> = keep
        .iter()
        .map(|&i| keep.iter().map(|&j| BigInt::from(l.get(i, j))).collect())
        .collect();
    bareiss_det(minor)
}

/// Spanning-tree count via the (0,0) cofactor of the Laplacian.
pub fn spanning_trees_kirchhoff(l: &IntMatrix) -> BigInt {
    spanning_trees_kirchhoff_at(l, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::graph::{
        adjacency_matrix, build_graph, distance_matrix, laplacian_matrix, DepGraph,
    };

    fn gamma(p: u64, k: u32, n: u32) -> DepGraph {
        build_graph(&FieldSpec::new(p, k).unwrap(), n, 1024).unwrap()
    }

    #[test]
    fn naive_charpoly_examples() {
        let id3 = IntMatrix::from_fn(3, |i, j| i64::from(i == j));
        assert_eq!(
            charpoly_naive(&id3).unwrap(),
            ExactPoly::from_i64(&[-1, 3, -3, 1])
        );
        let zero2 = IntMatrix::from_fn(2, |_, _| 0);
        assert_eq!(
            charpoly_naive(&zero2).unwrap(),
            ExactPoly::from_i64(&[0, 0, 1])
        );
        let a3 = adjacency_matrix(&gamma(3, 1, 1));
        assert_eq!(
            charpoly_naive(&a3).unwrap(),
            ExactPoly::from_i64(&[-2, -3, 0, 1])
        );
        let big = IntMatrix::from_fn(9, |_, _| 0);
        assert!(matches!(charpoly_naive(&big), Err(Error::Capacity { .. })));
    }

    #[test]
    fn exact_charpoly_examples() {
        let a2 = adjacency_matrix(&gamma(2, 1, 1));
        assert_eq!(charpoly_exact(&a2), ExactPoly::from_i64(&[-1, 0, 1]));

        let a3 = adjacency_matrix(&gamma(3, 1, 1));
        assert_eq!(charpoly_exact(&a3), ExactPoly::from_i64(&[-2, -3, 0, 1]));
        assert_eq!(charpoly_exact(&a3), charpoly_naive(&a3).unwrap());

        let l_star = laplacian_matrix(&gamma(2, 1, 2));
        assert_eq!(
            charpoly_exact(&l_star),
            ExactPoly::from_i64(&[0, -4, 9, -6, 1])
        );
    }

    #[test]
    fn predicted_adjacency_examples() {
        assert_eq!(
            predicted_adjacency_poly(2, 2),
            ExactPoly::from_i64(&[0, 0, -3, 0, 1])
        );
        assert_eq!(
            predicted_adjacency_poly(2, 1),
            ExactPoly::from_i64(&[-1, 0, 1])
        );
        assert_eq!(
            predicted_adjacency_poly(3, 1),
            ExactPoly::from_i64(&[-2, -3, 0, 1])
        );
    }

    #[test]
    fn predicted_laplacian_examples() {
        assert_eq!(
            predicted_laplacian_poly(2, 2),
            ExactPoly::from_i64(&[0, -4, 9, -6, 1])
        );
        assert_eq!(
            predicted_laplacian_poly(2, 1),
            ExactPoly::from_i64(&[0, -2, 1])
        );
        // x(x-3)^2 = x^3 - 6x^2 + 9x, the K_3 Laplacian charpoly
        let k3 = laplacian_matrix(&gamma(3, 1, 1));
        assert_eq!(predicted_laplacian_poly(3, 1), charpoly_exact(&k3));
    }

    #[test]
    fn predicted_distance_examples() {
        assert_eq!(
            predicted_distance_poly(2, 1),
            ExactPoly::from_i64(&[-1, 0, 1])
        );
        assert_eq!(
            predicted_distance_poly(2, 2),
            ExactPoly::from_i64(&[-12, -28, -15, 0, 1])
        );
        let d_star = distance_matrix(&gamma(2, 1, 2)).unwrap();
        assert_eq!(predicted_distance_poly(2, 2), charpoly_exact(&d_star));
        // 𝔻 = A for the diameter-1 graph K_3
        assert_eq!(
            predicted_distance_poly(3, 1),
            ExactPoly::from_i64(&[-2, -3, 0, 1])
        );
    }

    #[test]
    fn spectrum_examples() {
        let s = spectrum_from_factored_form(2, 2, MatrixKind::Adjacency);
        assert_eq!(s.integer_roots, vec![(BigInt::zero(), 2)]);
        assert_eq!(s.surd_pair, Some((BigInt::zero(), BigInt::from(3))));
        assert_eq!(s.degree(), 4);

        let s = spectrum_from_factored_form(2, 2, MatrixKind::Laplacian);
        assert_eq!(
            s.integer_roots,
            vec![
                (BigInt::zero(), 1),
                (BigInt::one(), 2),
                (BigInt::from(4), 1)
            ]
        );
        assert_eq!(s.surd_pair, None);

        let s = spectrum_from_factored_form(3, 1, MatrixKind::Distance);
        assert_eq!(s.integer_roots, vec![(BigInt::from(-1), 1)]);
        assert_eq!(s.surd_pair, Some((BigInt::one(), BigInt::from(2))));
    }

    #[test]
    fn spectrum_reconstruction_matches_predictions() {
        for (q, n) in [
            (2, 1),
            (2, 2),
            (3, 1),
            (3, 2),
            (4, 1),
            (5, 1),
            (4, 2),
            (8, 1),
        ] {
            for which in MatrixKind::ALL {
                let s = spectrum_from_factored_form(q, n, which);
                assert_eq!(
                    s.reconstruct(),
                    predicted_poly(q, n, which),
                    "reconstruction mismatch at q={q}, n={n}, {which:?}"
                );
                assert_eq!(s.degree(), u64::pow(q, n));
            }
        }
    }

    #[test]
    fn adjacency_energy_examples() {
        let k2 = adjacency_energy(&spectrum_from_factored_form(2, 1, MatrixKind::Adjacency));
        assert_eq!(k2.to_sig_string(12), "2");

        let star = adjacency_energy(&spectrum_from_factored_form(2, 2, MatrixKind::Adjacency));
        assert_eq!(star.to_sig_string(12), "3.46410161514"); // 2√3

        let k3 = adjacency_energy(&spectrum_from_factored_form(3, 1, MatrixKind::Adjacency));
        assert_eq!(k3.to_sig_string(12), "4");
    }

    #[test]
    fn laplacian_energy_examples() {
        let le = |q: u64, n: u32| {
            let s = spectrum_from_factored_form(q, n, MatrixKind::Laplacian);
            let m = (q_pow_n(q, n) - BigInt::one()) * BigInt::from(q) / BigInt::from(2);
            laplacian_energy(&s, &m, u64::pow(q, n)).unwrap()
        };
        assert_eq!(le(2, 1), BigRational::from(BigInt::from(2)));
        assert_eq!(le(2, 2), BigRational::from(BigInt::from(5)));
        assert_eq!(le(3, 1), BigRational::from(BigInt::from(4)));
    }

    #[test]
    fn distance_energy_examples() {
        let k2 = distance_energy(&spectrum_from_factored_form(2, 1, MatrixKind::Distance));
        assert_eq!(k2.to_sig_string(12), "2");

        let star = distance_energy(&spectrum_from_factored_form(2, 2, MatrixKind::Distance));
        assert_eq!(star.to_sig_string(12), "9.29150262213"); // 4 + 2√7

        let k3 = distance_energy(&spectrum_from_factored_form(3, 1, MatrixKind::Distance));
        assert_eq!(k3.to_sig_string(12), "4");
    }

    #[test]
    fn algebraic_connectivity_examples() {
        let a = |q, n| {
            algebraic_connectivity(&spectrum_from_factored_form(q, n, MatrixKind::Laplacian))
                .unwrap()
        };
        assert_eq!(a(2, 2), BigRational::from(BigInt::one()));
        assert_eq!(a(2, 1), BigRational::from(BigInt::from(2)));
        assert_eq!(a(3, 1), BigRational::from(BigInt::from(3)));

        let adjacency = spectrum_from_factored_form(2, 2, MatrixKind::Adjacency);
        assert!(algebraic_connectivity(&adjacency).is_err());
    }

    #[test]
    fn spanning_tree_examples() {
        assert_eq!(
            spanning_trees_kirchhoff(&laplacian_matrix(&gamma(2, 1, 1))),
            BigInt::one()
        );
        assert_eq!(
            spanning_trees_kirchhoff(&laplacian_matrix(&gamma(2, 1, 2))),
            BigInt::one()
        );
        let l9 = laplacian_matrix(&gamma(3, 1, 2));
        assert_eq!(spanning_trees_kirchhoff(&l9), BigInt::from(81));
        // index independence
        for idx in [1, 4, 8] {
            assert_eq!(spanning_trees_kirchhoff_at(&l9, idx), BigInt::from(81));
        }
    }

    #[test]
    fn spectrum_json_shape() {
        let s = spectrum_from_factored_form(2, 2, MatrixKind::Adjacency);
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "integer_roots": [{"value": "0", "multiplicity": 2}],
                "surd": {"b": "0", "c": "3"}
            })
        );
        let back: SpectrumDescription = serde_json::from_value(json).unwrap();
        assert_eq!(back, s);

        let lap = spectrum_from_factored_form(2, 1, MatrixKind::Laplacian);
        let json = serde_json::to_value(&lap).unwrap();
        assert_eq!(json["surd"], serde_json::Value::Null);
    }

    #[test]
    fn subleading_coefficients_track_traces() {
        let g = gamma(3, 1, 2);
        let (a, l, d) = (
            adjacency_matrix(&g),
            laplacian_matrix(&g),
            distance_matrix(&g).unwrap(),
        );
        let deg = g.order();
        assert_eq!(charpoly_exact(&a).coeff(deg - 1), BigInt::zero());
        assert_eq!(charpoly_exact(&d).coeff(deg - 1), BigInt::zero());
        // -Σ degrees = -q(q^n - 1)
        assert_eq!(charpoly_exact(&l).coeff(deg - 1), BigInt::from(-24));
    }

    #[test]
    fn laplacian_roots_nonnegative_single_zero() {
        for (q, n) in [(2, 3), (3, 2), (4, 1), (5, 2), (8, 1)] {
            let s = spectrum_from_factored_form(q, n, MatrixKind::Laplacian);
            assert!(s.integer_roots.iter().all(|(v, _)| !v.is_negative()));
            let zero_mult: u64 = s
                .integer_roots
                .iter()
                .filter(|(v, _)| v.is_zero())
                .map(|(_, m)| *m)
                .sum();
            assert_eq!(zero_mult, 1);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn symmetric_matrix() -> impl Strategy<Value = IntMatrix> {
            (2usize..=6).prop_flat_map(|n| {
                proptest::collection::vec(-3i64..=3, n * n).prop_map(move |vals| {
                    IntMatrix::from_fn(n, |i, j| {
                        if i <= j {
                            vals[i * n + j]
                        } else {
                            vals[j * n + i]
                        }
                    })
                })
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn berkowitz_agrees_with_leibniz(m in symmetric_matrix()) {
                prop_assert_eq!(charpoly_exact(&m), charpoly_naive(&m).unwrap());
            }
        }
    }
}
