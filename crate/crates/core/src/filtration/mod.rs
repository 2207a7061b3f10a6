//! Identity checkers and sweep suites.
//!
//! Every check returns a [`VerificationReport`]; a mismatch is a failed
//! report carrying both sides, never an error. Errors are reserved for
//! parameters outside a formula's domain.
//!
//! The `M_j` dimension calculus lives in [`section8`], the multiplicity
//! layers of tensor-product filtrations in [`layers`], and the named sweeps
//! used by `verify` in [`suites`].

mod checks;
pub mod layers;
mod report;
pub mod section8;
pub mod suites;

pub use checks::{
    m_expansion_terms, normalize_terms, truncated_dim_check, verify_decompose_product, verify_lemma51,
    verify_lemma64, verify_lemma72, verify_oracle, verify_pieri, verify_pop_count, verify_qbinomial,
    verify_specialization, verify_truncation_step, weyl_module_dim,
};
pub use layers::{extract_filtration, verify_filtration, FiltrationLayer, FiltrationTheorem, LayerFamily};
pub use report::{Side, Status, VerificationReport};
pub use section8::{
    fusion_dim, verify_section8_identity, verify_section8_recurrences, verify_truncated_m, Section8Bounds,
    Section8Identity, XiTuple,
};
pub use suites::{bounded_partitions, dominant_weights, run_suite, run_suites, Suite, SuiteConfig};
