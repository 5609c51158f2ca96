//! The simplicial-set engine: finitely many nondegenerate simplices, faces
//! stored in Eilenberg–Zilber normal form.

pub mod cells;
pub mod colimit;
pub mod engine;
pub mod homology;
pub mod homotopy;
pub mod iso;
pub mod nerve;
pub mod product;
pub mod set;
pub mod simplex;
pub mod text;

pub use cells::{cell_inclusion, generate_cell, map_from_vertices, ordered_complex, CellKind};
pub use engine::{discrete_map, discrete_object, SSet};
pub use homology::{chain_map_of, is_homology_iso, normalized_chains, sset_homology};
pub use homotopy::{build_horn_contraction, verify_homotopy, HomotopyWitness};
pub use iso::find_sset_isomorphism;
pub use nerve::esigma_skeleton;
pub use product::{sset_product, ProductStructure};
pub use set::{SimplicialMap, SimplicialSet, Subobject};
pub use simplex::{Degeneracy, Simplex};

pub fn sset_is_mono(f: &SimplicialMap) -> bool {
    f.is_mono()
}
