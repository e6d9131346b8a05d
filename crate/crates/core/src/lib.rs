//! Exact computations for the ring generated by equivariant line bundles on
//! the complexified complement of a real hyperplane arrangement.
//!
//! The ring is modeled combinatorially as `P(A) = Z[e_1..e_n, x] / I_A`
//! with an additive basis indexed by nbc-sets, embedded in the chamber ring
//! `⊕_C Z[x]/x(2-x)`. Certificates check the structural statements about
//! this ring on concrete inputs.

pub mod arrangement;
pub mod catalog;
pub mod certificate;
pub mod cli;
pub mod delres;
pub mod error;
pub mod exactla;
pub mod kring;
pub mod ormatroid;
pub mod ratk;
pub mod subring;

pub use error::{Error, Result};
