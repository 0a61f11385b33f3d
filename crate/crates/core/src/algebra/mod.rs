//! Exact integer and rational algebra.

pub mod matrix;
pub mod poly;
pub mod snf;
pub mod sturm;

pub use matrix::{hnf_rows, solve_rational, IntMatrix};
pub use poly::IntPoly;
pub use snf::{smith_normal_form, Snf};
pub use sturm::{isolate_real_roots, rational_roots, sturm_real_roots};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

/// True iff x = r² for some rational r.
pub fn is_rational_square(x: &BigRational) -> bool {
    if x.is_negative() {
        return false;
    }
    is_square(x.numer()) && is_square(x.denom())
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}
