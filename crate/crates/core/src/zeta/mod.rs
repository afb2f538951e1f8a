//! Generalized zeta functions and polynomials, reference series of BMD codes,
//! and the expansion of weight enumerators over the reference enumerators.

mod beta;
mod reference;
mod series;

pub use beta::{beta_coefficients, enumerator_from_beta, BetaExpansion};
pub use reference::{phi, rational_rank, reference_b, series_times_phi, BmdReference};
pub use series::{default_order, degree_bound, p_from_b, zeta_denominator, zeta_polynomial, zeta_series};

use crate::error::{Error, Result};
use crate::invariants::{weight_enumerator, Analysis};
use crate::qcombinat::{rational, HomogeneousPoly};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

/// `W^(i)` read off as the coefficient of `T^(n-d_i)` in `Z^(i)(T) phi_n(X, Y, T)`,
/// checked against the enumerator computed from the moments.
pub fn enumerator_from_zeta(a: &Analysis, i: usize) -> Result<HomogeneousPoly> {
    let t = a.n() - a.d_i(i);
    let z = zeta_series(a, i, t)?;
    let w = series_times_phi(&z, a.n(), a.q(), t)?.swap_remove(t);
    if w != weight_enumerator(a, i)? {
        return Err(Error::Inconsistent(format!("zeta-derived enumerator differs at i = {i}")));
    }
    Ok(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaValues {
    pub tau: usize,
    /// `beta_0..beta_{n-d_i}`.
    #[serde(with = "rational::vec")]
    pub values: Vec<BigRational>,
    /// `beta_0..beta_order`.
    #[serde(with = "rational::vec")]
    pub series: Vec<BigRational>,
}

/// Zeta data of a code at one index `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaProfile {
    pub i: usize,
    pub order: usize,
    #[serde(rename = "Z", with = "rational::vec")]
    pub z: Vec<BigRational>,
    #[serde(rename = "P", with = "rational::vec")]
    pub p: Vec<BigRational>,
    pub degree_bound: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<BetaValues>,
}

impl ZetaProfile {
    pub fn compute(a: &Analysis, i: usize, order: Option<usize>, tau: Option<usize>) -> Result<Self> {
        let order = order.unwrap_or_else(|| default_order(a, i));
        let z = zeta_series(a, i, order)?;
        let p = zeta_polynomial(a, i, order)?;
        let beta = match tau {
            Some(tau) => {
                let e = beta_coefficients(a, i, tau, Some(order))?;
                Some(BetaValues {
                    tau,
                    values: e.values().to_vec(),
                    series: e.series.coeffs().to_vec(),
                })
            }
            None => None,
        };
        let bound = degree_bound(a, i);
        let plen = (bound.max(0) as usize + 1).min(order + 1);
        Ok(ZetaProfile {
            i,
            order,
            z: z.into_coeffs(),
            p: p.coeffs()[..plen].to_vec(),
            degree_bound: bound,
            beta,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("zeta profile serializes")
    }
}
