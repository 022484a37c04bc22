//! Exact scalars, rational polynomials and certified real-root isolation.

mod poly;
mod rational;
mod roots;

pub use poly::UniPoly;
pub use rational::{
    dot, format_rational, frac, int, is_zero_vec, parse_rational, primitive, to_f64, Rational,
    Sign,
};
pub use roots::{
    descartes_bound, isolate_real_roots, rational_roots, sign_at, sort_points, AlgebraicPoint,
    REFINEMENT_CAP,
};
