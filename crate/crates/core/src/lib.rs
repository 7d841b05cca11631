//! Exact-arithmetic toric geometry of Bott towers built from words in
//! Kac-Moody root systems.
//!
//! Starting from a generalized Cartan matrix and a word in simple
//! reflections, the crate constructs the fan of the associated Bott tower
//! (the toric limit of the Bott-Samelson variety of the word) and computes
//! its classification data:
//!
//! * the pairing matrix β_ij of the word and the rays e_i^± of the fan
//!   ([`bott_fan`]);
//! * primitive relations, walls, Schubert lines, the index sets Ĩ_i and the
//!   Mori cone basis r(P_1) .. r(P_r) ([`curves`]);
//! * ample/nef tests through the numbers d_i, the word conditions I and II,
//!   Fano / weak-Fano / log-Fano verdicts, the Mori-ray criterion and
//!   divisor-basis conversion ([`classify`]);
//! * roots, coroots, reflections and the heights b_i feeding the log-Fano
//!   test ([`root_data`]).
//!
//! Every coefficient is an exact integer (or exact rational) and every fast
//! formula has a brute-force oracle in [`oracle`]; the seeded randomized
//! harness in [`selftest`] cross-checks them.

mod arith;
pub mod bott_fan;
pub mod classify;
pub mod curves;
pub mod error;
pub mod oracle;
pub mod root_data;
pub mod selftest;

pub use bott_fan::{
    cone_determinant, locate_point, ray_vector, BottMatrix, LatticePoint, Location, RayId, Sign,
    SignVector,
};
pub use classify::{
    condition_i, condition_ii, consistency_report, d_values, g_values, h_table,
    intersection_number, is_ample, is_fano, is_log_fano, is_mori_ray, is_nef, is_weak_fano,
    log_fano_f, ClassificationReport, ConditionReport, Discrepancy, LogFanoReport, PositionCheck,
    ToricDivisor,
};
pub use curves::{
    curve_in_basis, enumerate_walls, index_set_wall, mori_cone_basis, mori_index_set,
    primitive_relation, relation_class, schubert_line, wall_relation, CurveClass, MoriIndexSet,
    PrimitiveRelation, TraceEntry, Wall,
};
pub use error::{Error, Result};
pub use root_data::{
    gamma_data, reflect_coroot, reflect_root, Coroot, Family, GammaEntry, GeneralizedCartanMatrix,
    Root, Word, MAX_WORD_LEN,
};

/// Cap on the word length of exhaustive (2^r) oracle computations.
pub const EXHAUSTIVE_CAP: usize = 16;
