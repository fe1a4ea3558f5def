//! Householder and Givens constructions for quaternion vectors.

mod givens;
mod householder;

pub use givens::{jrs_givens4, make_givens, Givens2, GivensVariant, JrsGivens4};
pub use householder::{make_householder, HouseholderQ, HouseholderVariant};
