//! Verdicts on codes: MDS, GRS-equivalence, self-orthogonality and LCD.
//!
//! Each property has a fast test (an analytic predicate where one applies) and an
//! independent direct oracle; [`run_checks`] combines them into a [`CodeReport`].

mod duality;
mod grs;
mod mds;
mod multitwist;
mod report;

pub use duality::{
    gram, is_lcd, is_self_orthogonal, lcd_by_dual, power_sum, power_sum_closed_form,
    self_orthogonal_by_dual,
};
pub use grs::{count_rs_equivalent_etas, is_grs_equivalent, EtaCount, MinorWitness};
pub use mds::{
    macwilliams_transform, mds_by_distance, mds_by_minors, mds_plus_condition, mds_star_condition,
    weight_distribution, DistanceReport, EnumeratedCode, ENUMERATION_LIMIT,
};
pub use multitwist::{lcd_multitwist_predicate, multitwist_spec, GramCase, MultitwistVerdict};
pub use report::{
    run_checks, spec_digest, Check, CodeReport, OracleMode, Verdict, VerdictValue, Witness,
};
