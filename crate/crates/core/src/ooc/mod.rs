//! Optical orthogonal codes: index sets, correlation checks, the field-side
//! conditions, the Johnson bound, and the subspace-code pipeline.

mod bound;
mod correlation;
mod field_conditions;
mod index_set;
mod pipeline;

pub use bound::{johnson_bound, optimality_ratio, params_table, TableRow, TableSpec};
pub use correlation::{
    autocorr_max, crosscorr_max, shifted_intersection, verify_oos, Peak, VerificationReport,
    Witness, WitnessKind,
};
pub use field_conditions::{check_field_conditions, s_of_w, FieldConditionReport, FieldWitness};
pub use index_set::{Codeword, IndexSet};
pub use pipeline::{build_ooc, OocCode, OocConstruction, OocParams};
