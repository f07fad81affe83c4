//! Bounding polynomials `p_H(λ, d)` with `inj(H, G) ≤ Σ_{λ∈σ(G)} p_H(λ, d)`
//! for every d-regular `G`, built from exact homomorphism identities and
//! one-sided estimates, with a record of every step.

mod certificate;
mod poly;
mod profile;
mod verify;

pub use certificate::{
    anchor_clique, anchor_name, build_bound_poly, inj_into_anchor, BoundCertificate, Direction, EqualityRow, Rule,
    Step, MAX_BOUND_ORDER,
};
pub use poly::{rational_string, BivarPoly};
pub use profile::{choose_unicyclic_subgraph, cycle_profile, neg_hom_majorant, unicyclic_hom_poly, CycleProfile, Parity};
pub use verify::{verify_bound, GapRow, VerifyReport};
