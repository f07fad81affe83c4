//! Exact homomorphism densities of small patterns in regular graphs.
//!
//! ```
//! use hdensity::graphs::{construct_family, Family};
//! use hdensity::homomorphism::inj_count;
//!
//! let c5 = construct_family(&"C5".parse::<Family>()?)?;
//! let octahedron = construct_family(&"K2,2,2".parse::<Family>()?)?;
//! assert_eq!(inj_count(&c5, &octahedron), 240);
//! # Ok::<(), hdensity::Error>(())
//! ```

pub mod bounds;
pub mod error;
pub mod graphs;
pub mod harness;
pub mod homomorphism;
pub mod optimize;
pub mod spectral;

pub use error::{Error, Result};
pub use graphs::Graph;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub struct Graphs;
    #[doc = include_str!("../../../book/src/homomorphisms.md")]
    pub struct Homomorphisms;
    #[doc = include_str!("../../../book/src/spectral.md")]
    pub struct Spectral;
    #[doc = include_str!("../../../book/src/bounds.md")]
    pub struct Bounds;
    #[doc = include_str!("../../../book/src/optimization.md")]
    pub struct Optimization;
    #[doc = include_str!("../../../book/src/campaigns.md")]
    pub struct Campaigns;
}
