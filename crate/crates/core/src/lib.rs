//! Exact data-driven reachability and null-controllability analysis for
//! linear systems with conic constraints, modelled as polyhedral convex
//! processes.

pub mod analysis;
pub mod cli;
pub mod cone;
pub mod error;
pub mod exactnum;
pub mod informativity;
pub mod linalg;
pub mod process;

pub use error::{Error, Result};
