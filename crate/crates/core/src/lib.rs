pub mod budget;
pub mod classify;
pub mod crosscheck;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod gflinalg;
pub mod hamming;
pub mod invariants;
pub mod par;
pub mod qcombinat;
pub mod random;
pub mod rmcode;
pub mod zeta;

pub use budget::Budget;
pub use error::{Error, Result};
