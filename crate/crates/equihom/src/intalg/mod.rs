//! Exact integer linear algebra: matrices, Smith normal form, finitely
//! generated abelian groups, and homology of chain complexes over them.

mod group;
mod homology;
mod matrix;
mod reduce;
mod snf;

pub use group::{present, FGAbelianGroup, GroupHom, IntAlgError, PresentedGroup};
pub use homology::{
    hom_profile, homology_at, induce_on_homology, is_isomorphism, is_surjective, zero_from_trivial,
    zero_to_trivial, ChainWindow, HomProfile, HomologyData,
};
pub use matrix::IntMatrix;
pub use snf::{invariant_factors, is_unimodular, kernel_basis, smith_normal_form, SmithForm, SnfSolver};

pub(crate) use group::normalize_mod_orders;
