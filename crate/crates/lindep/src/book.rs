//! Compile-and-run gate for the guide in `book/`.
//!
//! Each chapter is attached as documentation here so that `cargo test --doc`
//! builds and executes every code block in the book. If the guide drifts
//! from the crate's API or its claims stop holding, the test suite fails.

#[doc = include_str!("../../../book/src/introduction.md")]
pub struct Introduction;

#[doc = include_str!("../../../book/src/finite-fields.md")]
pub struct FiniteFields;

#[doc = include_str!("../../../book/src/vector-spaces.md")]
pub struct VectorSpaces;

#[doc = include_str!("../../../book/src/building-the-graph.md")]
pub struct BuildingTheGraph;

#[doc = include_str!("../../../book/src/invariants.md")]
pub struct BruteForceInvariants;

#[doc = include_str!("../../../book/src/exact-spectra.md")]
pub struct ExactSpectra;

#[doc = include_str!("../../../book/src/energies.md")]
pub struct EnergiesAndADiscrepancy;

#[doc = include_str!("../../../book/src/verification.md")]
pub struct VerificationSuite;

#[doc = include_str!("../../../book/src/cli.md")]
pub struct CommandLine;
