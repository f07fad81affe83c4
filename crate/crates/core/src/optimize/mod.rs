//! Maximizing `E p(X, d)` over measures on `[-d, d]` with mean 0 and second
//! moment `d`, one degree at a time, in exact arithmetic.

mod majorant;
mod measure;
mod sturm;
mod threshold;
mod unipoly;

pub use majorant::{
    majorant_check_even, majorant_check_odd, transform_even, transform_odd, MajorantCertificate, OptParity,
    Verdict, Witness,
};
pub use measure::{
    expectation, extremal_measure, extremal_y_measure, moment, tangent_quotient, tangent_remainder, Measure,
};
pub use sturm::{isolate_roots, sturm_nonneg_on_interval, SturmSequence, SturmVerdict, WITNESS_WIDTH_BITS};
pub use threshold::{certify_threshold, check, ThresholdReport};
pub use unipoly::UniPoly;
