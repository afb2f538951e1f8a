//! Finite fields, matrices and subspaces over `F_q`.

mod field;
mod matrix;
mod subspace;

pub use field::FieldSpec;
pub use matrix::{trace_pairing, FqMatrix, Rref};
pub use subspace::{col_space, enumerate_subspaces, row_space, Subspace, SubspaceEnumeration};
