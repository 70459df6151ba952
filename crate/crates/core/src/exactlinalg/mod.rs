//! Exact arithmetic substrate: coefficient fields, dense and block-sparse
//! linear algebra over them, univariate polynomials, and Smith/Hermite
//! normal forms over `k[t]`.

mod dense;
mod field;
mod polymatrix;
mod ring;
mod sparse;
mod upoly;

pub use dense::DenseMatrix;
pub use field::{Field, Scalar};
pub use polymatrix::{
    column_span_equal, hermite_column_form, invariant_factors, kernel_generators,
    smith_normal_form, ColumnSpan, PolyMatrix, SmithData,
};
pub use ring::CommRing;
pub use sparse::SparseMatrix;
pub use upoly::{UPoly, UnivariateRing};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("literal {literal} has a denominator divisible by {modulus}")]
    DenominatorVanishes { literal: String, modulus: u32 },
}

/// Field rank of a dense matrix.
pub fn rank(m: &DenseMatrix) -> usize {
    m.rank()
}

/// Columns of the result form a basis of the right kernel of `m`.
pub fn kernel_basis(m: &DenseMatrix) -> DenseMatrix {
    m.kernel_basis()
}
