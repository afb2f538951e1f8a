//! Exact q-combinatorics: q-binomials, q-Bernstein polynomials, ordinary
//! Bell polynomials and truncated power series over the rationals.

mod bell;
mod bernstein;
mod poly;
mod qbin;
pub mod rational;
mod series;

pub use bell::{bell_full, bell_partial, BellTable};
pub use bernstein::{bernstein, from_bernstein, monomial_in_bernstein_basis};
pub use poly::HomogeneousPoly;
pub use qbin::{
    identity_binomial_theorem, identity_product, identity_vandermonde, qbin, qbin_big,
    qbin_identities_check, qmbin,
};
pub use series::TruncatedSeries;

pub use num_rational::BigRational;
