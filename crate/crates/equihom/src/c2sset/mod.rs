//! Finite C2-simplicial sets and Mackey-functor-valued Bredon homology.
//!
//! Spaces are stored as nondegenerate simplices with explicit face data;
//! every construction validates the simplicial identities and the
//! equivariance of the involution. The chain engine assigns a copy of the
//! coefficient functor to each fixed orbit and an induced functor to each
//! free orbit, and checks d.d = 0 together with the Mackey structure of
//! every boundary.

mod bredon;
mod catalog;
mod constructions;
mod james;
mod simplex;
mod space;
mod sphere;

pub use bredon::{
    bredon_chains, bredon_homology, bredon_homology_range, classical_homology, f2_betti,
    free_rank, incidence_matrix, two_torsion_generators, MackeyChainComplex, Orbit, OrbitKind,
};
pub use catalog::{
    builtin, c2, circle_wedge2, pt, rp2, s0, s1, s2, s_rho, s_sigma, BUILTIN_NAMES,
};
pub use constructions::{
    coinduce, disjoint_basepoint, disjoint_union, fat_wedge, map_space, norm_space, product,
    quotient, smash, suspend_sigma, suspend_trivial, wedge, MapDomain,
};
pub use james::{
    james_quotient, james_quotient_model, james_stage, james_stage_with_previous,
    norm_smash_power,
};
pub use simplex::{DegSimplex, SimplexRef};
pub use space::{
    cell_budget, check_budget, C2SimplicialSet, FiniteSimplicialSet, SimplicialSetBuilder,
    SsetError, SubObject,
};
pub use sphere::{build_sphere_table, sphere_model};
