//! Exact scalars, polynomials with real root isolation, and dense matrix
//! kernels.

mod any;
mod field;
mod matrix;
mod poly;
mod quad;
mod rational;
mod roots;

pub use any::AnyMatrix;
pub use field::{ratio_to_f64, Field};
pub(crate) use matrix::check_split;
pub use matrix::{mat_mul_rows, matrix_poly_eval, rank_of_rows, same_dimension, ExactMatrix};
pub use poly::{poly_from_roots, Poly};
pub use quad::QuadExt;
pub use rational::{
    agreeing_decimals, common_denominator, format_rational, int, parse_rational, rat, sqrt_lower, to_decimal, Rational,
};
pub use roots::{
    isolate_nonneg_roots, isolate_real_roots, isolate_smallest_nonneg_root, refine, root_bound, sturm_root_count,
    IsolatingInterval, SturmSequence,
};
