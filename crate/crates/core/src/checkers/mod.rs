//! Instance-level checks that produce verdicts and reports.

pub mod verdict;

pub use verdict::{Verdict, Witness, HOMOLOGY_SURROGATE, SAMPLED_SURROGATE};
pub mod symmetric;
pub mod chain_report;
pub mod laws;
pub mod random;
pub mod report;
pub mod topology;

pub use chain_report::chain_counterexample_report;
pub use laws::check_pp_preserves_pushout;
pub use report::{CheckReport, Instance};
pub use symmetric::{
    build_power_contraction, check_projective_cofibration, check_symmetric_flat_instance, check_symmetric_h_instance,
    check_symmetroidal_instance,
};
pub use topology::{bsigma_homology, strict_vs_homotopy_pushout};
