//! Polyhedral convex cones with generator and inequality descriptions.
//!
//! Every cone here is finitely generated and therefore closed, so closure
//! operators in identities such as `(C^-)^- = cl cone C` are identities.

mod dd;
mod polycone;

pub use polycone::{linear_image, linear_preimage, ConeRepPair, PolarSign, PolyCone};

#[cfg(test)]
mod tests;
