//! Mackey functors for the cyclic group of order two.
//!
//! A Mackey functor here is a pair of finitely generated abelian groups in
//! canonical form (the value at the one-point orbit and the value at the
//! free orbit) together with restriction, transfer, and the Weyl involution
//! satisfying the double coset law `res . tr = 1 + weyl`. All constructors
//! validate the axioms and every map is checked to commute with the
//! structure maps, so invalid data cannot circulate.

mod boxprod;
mod compare;
mod functor;
mod standard;

pub use boxprod::{
    associator, box_mackey, box_product, braiding, induced_comparison, unitor, BoxProduct,
};
pub use compare::{
    compare, find_isomorphism, invariant_mismatch, isomorphic, mackey_hom_group,
    ComparisonReport, IsoVerdict, MackeyHomGroup, SearchOutcome,
};
pub use functor::{MackeyAxiom, MackeyError, MackeyFunctor, MackeyMap};
pub use standard::{
    burnside, burnside_induced, constant_z, direct_sum, induced, norm_f2, norm_f2_induced,
    zero, NormF2Ring,
};

pub(crate) use standard::{sum_groups, GroupSum};
