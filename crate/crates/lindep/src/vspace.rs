//! The vector space V = F_q^n: enumeration, scalar action, and the pairwise
//! linear-dependence relation.
//!
//! Vectors carry a canonical index Σ enc(coords[i])·q^i, a bijection onto
//! `[0, q^n)` with the null vector θ at index 0. The nonzero vectors split
//! into `N = (q^n - 1)/(q - 1)` classes, each the nonzero part of one
//! 1-dimensional subspace; class representatives are the least-index members
//! and fix the canonical vertex order of the dependence graph.

use crate::gf::{FieldElement, FieldSpec};
use crate::{Error, Result};

/// An element of F_q^n together with its canonical enumeration index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqVector {
    coords: Vec<FieldElement>,
    index: u64,
}

impl FqVector {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn is_zero(&self, spec: &FieldSpec) -> bool {
        self.coords.iter().all(|c| spec.is_zero(c))
    }
}

/// The nonzero part of one 1-dimensional subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceClass {
    /// Least vector index in the class.
    pub representative: u64,
    /// All member indices, ascending; `q - 1` of them.
    pub members: Vec<u64>,
}

/// Partition of the nonzero vectors of V into 1-dimensional subspace classes,
/// ordered by representative index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspacePartition {
    pub classes: Vec<SubspaceClass>,
}

impl SubspacePartition {
    /// N = (q^n - 1)/(q - 1).
    pub fn num_classes(&self) -> u64 {
        self.classes.len() as u64
    }
}

fn vector_from_index(spec: &FieldSpec, n: u32, mut idx: u64) -> FqVector {
    let q = spec.q();
    let mut coords = Vec::with_capacity(n as usize);
    let index = idx;
    for _ in 0..n {
        coords.push(spec.element_from_enc(idx % q));
        idx /= q;
    }
    FqVector { coords, index }
}

/// All q^n vectors in index order, θ first.
pub fn enumerate_vectors(spec: &FieldSpec, n: u32, max_vectors: u64) -> Result<Vec<FqVector>> {
    if n == 0 {
        return Err(Error::InvalidInput("dimension must be >= 1".into()));
    }
    let total = (0..n)
        .try_fold(1u64, |acc, _| acc.checked_mul(spec.q()))
        .filter(|&t| t <= max_vectors)
        .ok_or(Error::Capacity {
            what: "q^n",
            requested: (spec.q() as u128).checked_pow(n).unwrap_or(u128::MAX),
            bound: max_vectors as u128,
        })?;
    Ok((0..total).map(|i| vector_from_index(spec, n, i)).collect())
}

/// Componentwise scalar multiplication λ·v.
pub fn scalar_mul(spec: &FieldSpec, lambda: &FieldElement, v: &FqVector) -> FqVector {
    let coords: Vec<FieldElement> = v.coords.iter().map(|c| spec.mul(lambda, c)).collect();
    let index = coords
        .iter()
        .rev()
        .fold(0u64, |acc, c| acc * spec.q() + spec.enc(c));
    FqVector { coords, index }
}

/// True iff `u` and `v` are distinct and linearly dependent as a pair, i.e.
/// some nontrivial combination αu + βv vanishes. No special case for θ: the
/// scan over (α, β) covers it.
pub fn is_dependent(spec: &FieldSpec, u: &FqVector, v: &FqVector) -> bool {
    if u == v {
        return false;
    }
    let elements = spec.elements();
    for alpha in &elements {
        for beta in &elements {
            if spec.is_zero(alpha) && spec.is_zero(beta) {
                continue;
            }
            let vanishes = u.coords.iter().zip(&v.coords).all(|(uc, vc)| {
                let term = spec.add(&spec.mul(alpha, uc), &spec.mul(beta, vc));
                spec.is_zero(&term)
            });
            if vanishes {
                return true;
            }
        }
    }
    false
}

/// Group the nonzero vectors into 1-dimensional subspace classes.
///
/// Expects the full enumeration of V in index order. Classes come out
/// ordered by representative (least member) index, members ascending.
pub fn partition_subspaces(spec: &FieldSpec, vectors: &[FqVector]) -> SubspacePartition {
    let mut assigned = vec![false; vectors.len()];
    assigned[0] = true; // θ belongs to no class
    let nonzero_scalars: Vec<FieldElement> = spec
        .elements()
        .into_iter()
        .filter(|e| !spec.is_zero(e))
        .collect();

    let mut classes = Vec::new();
    for v in vectors.iter().skip(1) {
        if assigned[v.index() as usize] {
            continue;
        }
        let mut members: Vec<u64> = nonzero_scalars
            .iter()
            .map(|lambda| scalar_mul(spec, lambda, v).index())
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            assigned[m as usize] = true;
        }
        classes.push(SubspaceClass {
            representative: members[0],
            members,
        });
    }
    debug_assert!(assigned.iter().all(|&a| a));
    SubspacePartition { classes }
}
