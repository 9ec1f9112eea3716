//! # equihom
//!
//! An exact-arithmetic workbench for algebra over the cyclic group of order
//! two: Mackey functors and their box products, RO(C2)-graded free modules
//! over the norm of F2, and a cellular Bredon homology engine for finite
//! simplicial sets with involution.
//!
//! The primary interface is the `examples/` directory; each example is a
//! runnable tour of one capability:
//!
//! * `mackey_basics` - building and validating Mackey functors
//! * `box_products` - box products, units, symmetry, associativity
//! * `descriptor_algebra` - symbolic RO(C2)-graded module descriptors
//! * `bredon_engine` - equivariant chain complexes and their homology
//! * `coinduction_homology` - homology of coinduced spaces vs. predictions
//! * `james_construction` - filtration stages of the sigma-James construction
//! * `splitting_coinduction` - the suspension splitting of a coinduction
//! * `configuration_counts` - configuration-space combinatorics
//!
//! Run one with `cargo run --example mackey_basics`. A thin command-line
//! front end (`equihom`) exposes the same computations; see the README.

pub mod c2sset;
pub mod checks;
pub mod confcomb;
pub mod expr;
pub mod grfree;
pub mod intalg;
pub mod mackey;
pub mod report;
