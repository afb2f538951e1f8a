//! Generalized binomial moments, rank weight distributions, normalized
//! moments and weight enumerators.

mod analysis;
mod moments;
mod oracle;
mod profile;

pub use analysis::Analysis;
pub use moments::{
    bernstein_expansion, binomial_moments, distribution_to_moments, moments_from_profile,
    moments_to_distribution, non_integral, normalized_moment_with, normalized_moments,
    rank_distribution, weight_enumerator, BernsteinExpansion,
};
pub use oracle::{rank_distribution_oracle, rank_distribution_oracle_with, subcode_support_counts};
pub use profile::InvariantProfile;
