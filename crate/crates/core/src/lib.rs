//! Extended Schur functions and the 0-Hecke modules whose quasisymmetric
//! characteristics they are.
//!
//! The crate builds, for each composition `α`, the module spanned by the
//! standard extended tableaux of shape `α`, realizes the generators `π_i`
//! as exact integer matrices, and reads off its composition factors,
//! characteristic and endomorphism algebra.
//!
//! ```
//! use extschur::{characteristic, extended_schur_in_fundamental, Composition};
//!
//! let alpha: Composition = "2,1,3".parse().unwrap();
//! let e = extended_schur_in_fundamental(&alpha);
//! assert_eq!(e.to_string(), "F(1,1,2,2) + F(1,2,3) + F(2,1,3)");
//! assert_eq!(characteristic(&alpha), e);
//! ```

pub mod analysis;
pub mod cli;
pub mod composition;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod qsym;
pub mod tableau;
pub mod verify;

pub use analysis::{
    analyze, characteristic, commutant_basis, composition_factors, is_indecomposable, matrices,
    verify_submodule_closure, AnalysisReport, CompositionFactorList, EndomorphismSpace,
    ModuleMatrices, Verdict,
};
pub use composition::{
    composition_of_subset, compositions_of, descent_subset, is_partition, refines, Composition,
    DescentSubset,
};
pub use error::{Error, Result};
pub use hecke::{
    apply_word, filtration, generation_path, pi_full, pi_quotient, preceq, verify_relations,
    ActionKind, ActionResult, Filtration, RelationReport,
};
pub use qsym::{
    extended_schur_in_fundamental, extended_schur_in_monomial, fundamental_to_monomial, k_matrix,
    monomial_to_fundamental, ribbon_in_shin, schur_in_fundamental, specialize, Basis, KMatrix,
    QSymElement,
};
pub use tableau::{
    descent_composition, enumerate_set, enumerate_srit, is_standard_extended, row_sum_vector,
    super_standard, Cell, RowSumVector, Tableau,
};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/compositions.md")]
    mod compositions {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/hecke-action.md")]
    mod hecke_action {}
    #[doc = include_str!("../../../book/src/characteristic.md")]
    mod characteristic {}
    #[doc = include_str!("../../../book/src/indecomposability.md")]
    mod indecomposability {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
