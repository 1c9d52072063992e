//! Finite-dimensional (non-associative) bialgebras and Hopf algebras over exact
//! fields, given by structure constants: actions, semidirect products, split
//! extensions, and machine checks of every identity relating them.
//!
//! Everything is generic over the scalar field `K: Field`; the aliases at the
//! crate root fix `K` to the rationals.

pub mod actions;
pub mod catalog;
pub mod error;
pub mod extensions;
pub mod field;
pub mod linalg;
pub mod linmap;
pub mod report;
pub mod space;
pub mod structures;

pub use actions::{
    build_theta, verify_action, verify_assoc_conditions, verify_hopf_action,
    verify_theta_identities, ActionData, ThetaMap,
};
pub use catalog::{build, monoid_semidirect_eval, CatalogEntry};
pub use error::{Error, Result};
pub use extensions::{
    build_iso_pair, check_reexpressed_action, induce_action, kernel, lambda_from_antipode,
    reconstruct_lambda, semidirect, split_short_five, verify_cleft_exact, verify_kernel_cokernel,
    verify_morphism_triple, verify_split_extension, CleftData, KernelKind, MorphismTriple,
    SemidirectProduct, SplitExtension,
};
pub use field::{Field, FieldSpec, Fp, Rational};
pub use linalg::{equalizer, invert, quotient, rank, Subspace};
pub use linmap::{chain, compose, symmetry, tensor, tensor_all, LinMap};
pub use report::{Check, Outcome, Report, Witness};
pub use space::Space;
pub use structures::{
    linearize_magma, structural_flags, trivial_bialgebra, verify_morphism, verify_structure,
    Antipodes, Bialgebra, Flags, Level, MagmaTable,
};

/// Maps over the rationals.
pub type LinMapQ = LinMap<Rational>;
pub type SubspaceQ = Subspace<Rational>;
pub type BialgebraQ = Bialgebra<Rational>;
