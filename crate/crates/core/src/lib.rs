//! Generalized double semion (GDS) dual disentanglers as exact phase
//! polynomials on triangulated manifolds.
//!
//! The dual disentangler on a complex L assigns the amplitude
//! (−1)^{χ(L[↓])} to a spin configuration, where L[↓] is the subcomplex
//! induced by down spins. This crate builds that operator as a phase
//! polynomial, decomposes it into group-cochain gate layers V₀ ⋯ V_d whose
//! gate locations are the Stiefel–Whitney chains of the barycentric
//! subdivision, and emits machine-checkable certificates for the identities
//! relating the two presentations.

#![forbid(unsafe_code)]

pub mod certify;
pub mod chain;
pub mod cochain;
pub mod corpus;
pub mod error;
pub mod f2;
pub mod fileio;
pub mod gauge;
pub mod homology;
pub mod phase;
pub mod simplex;
pub mod subdivide;

pub use chain::Chain;
pub use error::Error;
pub use simplex::{Simplex, SimplicialComplex, Vertex};

pub type Result<T> = std::result::Result<T, Error>;
