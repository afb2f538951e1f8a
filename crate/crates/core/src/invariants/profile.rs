use super::analysis::Analysis;
use super::moments::{binomial_moments, moments_to_distribution, normalized_moments};
use crate::error::Result;
use crate::qcombinat::{rational, HomogeneousPoly};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// All invariants of a code at one index `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantProfile {
    pub i: usize,
    pub d_i: usize,
    #[serde(rename = "B", with = "rational::vec")]
    pub moments: Vec<BigRational>,
    #[serde(rename = "A", with = "rational::vec")]
    pub distribution: Vec<BigRational>,
    #[serde(rename = "b", with = "rational::vec")]
    pub normalized: Vec<BigRational>,
    #[serde(rename = "W")]
    pub enumerator: HomogeneousPoly,
}

impl InvariantProfile {
    pub fn compute(a: &Analysis, i: usize) -> Result<Self> {
        let moments = binomial_moments(a, i)?;
        let distribution = moments_to_distribution(&moments, a.q());
        Ok(InvariantProfile {
            i,
            d_i: a.d_i(i),
            normalized: normalized_moments(a, i)?,
            enumerator: HomogeneousPoly::from_coeffs(distribution.clone()),
            moments,
            distribution,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("profile serializes")
    }
}
