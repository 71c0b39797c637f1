//! Exact linear algebra: sparse integer matrices, Smith normal form, and
//! dense elimination over prime fields and the rationals.

pub mod dense;
pub mod field;
pub mod snf;
pub mod sparse;

pub use dense::IntMatrix;
pub use field::{rank_of, Field, IndependentSet, Matrix, PrimeField, Rationals};
pub use snf::{smith_normal_form, SnfResult, SnfTransforms};
pub use sparse::SparseIntMatrix;
