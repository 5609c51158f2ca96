//! The chain-complex engine: bounded complexes of finitely presented abelian
//! groups, exact integer linear algebra via Smith normal form.

pub mod complex;
pub mod engine;
pub mod group;
pub mod matrix;
pub mod snf;

pub use complex::{
    chain_is_homology_iso, complex_homology, homology_in_degree, homology_range, mapping_cone, tensor_complex,
    ChainComplex, ChainMap,
};
pub use engine::{chain_coinvariants, find_chain_isomorphism, sign_action_power, Chain};
pub use group::FPAbelianGroup;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SnfResult};
