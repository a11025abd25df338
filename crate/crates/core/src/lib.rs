//! Exact linear algebra over the Gaussian rationals for subspace lattices of
//! projection operators.
//!
//! Subspaces of `C^n` are kept in canonical reduced row-echelon form so that
//! set identities between meets and joins are decided exactly. On top of
//! that the crate builds invariant-subspace lattices of maximal contexts,
//! checks lattice axioms with replayable counterexamples, and decides
//! irreducibility of operator families by the dimension of the algebra they
//! generate.

pub mod burnside;
pub mod context_lattice;
mod error;
pub mod lattice;
pub mod matrix;
pub mod projector;
pub mod random;
pub mod scalar;
pub mod spin_half;
pub mod subspace;

pub use burnside::{
    algebra_closure, common_invariant_filter, is_irreducible, pauli_decompose, AlgebraSpan,
    Irreducibility, PauliDecomposition,
};
pub use context_lattice::{
    context_lattice, intersect_lattices, operator_lattice, product_lattice,
    projector_meet_in_context, subset_projector, SubsetSum,
};
pub use error::Error;
pub use lattice::{
    check_closure, check_distributive, check_modular, check_modular_identity, check_orthomodular,
    hasse_dot, Axiom, AxiomReport, Counterexample, SubspaceLattice, Witness,
};
pub use matrix::{ExactMatrix, ExactVector, Rref};
pub use projector::{
    invariant_lattice_of_projector, is_invariant, projector_from_subspace, validate_context,
    validate_projector, MaximalContext, Projector,
};
pub use scalar::GaussianRational;
pub use subspace::Subspace;
