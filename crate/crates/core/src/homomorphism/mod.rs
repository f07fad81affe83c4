//! Homomorphism and injective homomorphism counts, set partitions of the
//! pattern, quotients, and the inversion identities linking the two counts.

mod count;
mod moebius;
mod partition;
mod quotient;

pub use count::{hom_count, inj_count};
pub use moebius::{hom_via_inj_sum, inj_via_moebius, moebius_coeff};
pub use partition::{enumerate_partitions, Partition, Partitions, MAX_PARTITION_ORDER};
pub use quotient::{quotient, QuotientGraph};
