use super::reference::BmdReference;
use super::series::{default_order, zeta_polynomial, zeta_series};
use crate::error::{Error, Result};
use crate::invariants::Analysis;
use crate::qcombinat::{BellTable, HomogeneousPoly, TruncatedSeries};
use num_rational::BigRational;
use num_traits::Zero;

/// `sum_{j<=u} c_j / x_0^(u-j+1) P_{u-j}(x_0, -x_1, ..., -x_{u-j})` for `u = 0..=order`.
fn bell_quotient(c: &[BigRational], x: &[BigRational], order: usize) -> Vec<BigRational> {
    let mut args = vec![x[0].clone()];
    args.extend(x[1..].iter().map(|v| -v.clone()));
    let table = BellTable::new(&args, order);
    let inv = BigRational::from_integer(1.into()) / &x[0];
    let mut inv_pows = vec![inv.clone()];
    for _ in 0..order {
        let next = inv_pows.last().expect("nonempty") * &inv;
        inv_pows.push(next);
    }
    (0..=order)
        .map(|u| (0..=u).map(|j| &c[j] * &inv_pows[u - j] * table.full(u - j)).sum())
        .collect()
}

/// Coefficients `beta_{tau,u}^(i)` of `Z_C = Z_tau sum_u beta_u T^u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaExpansion {
    pub tau: usize,
    pub i: usize,
    /// `beta_0..beta_order`.
    pub series: TruncatedSeries,
    pub reference: BmdReference,
    /// `d_i` of the code.
    pub d_i: usize,
}

impl BetaExpansion {
    /// `beta_0..beta_{n-d_i}`.
    pub fn values(&self) -> &[BigRational] {
        let n = self.reference.n;
        &self.series.coeffs()[..=n - self.d_i]
    }

    /// `sum_j beta_j M_{tau,d_i+j}`.
    pub fn enumerator(&self) -> HomogeneousPoly {
        let mut acc = HomogeneousPoly::zero(self.reference.n);
        for (j, b) in self.values().iter().enumerate() {
            acc = &acc + &self.reference.enumerator(self.d_i + j).scale(b);
        }
        acc
    }
}

/// `beta_{tau,u}^(i)` by the Bell formula in the `p` coefficients, checked
/// against the Bell formula in the `b` coefficients and against plain series
/// division `Z_C / Z_tau`.
pub fn beta_coefficients(a: &Analysis, i: usize, tau: usize, order: Option<usize>) -> Result<BetaExpansion> {
    let order = order
        .unwrap_or_else(|| default_order(a, i))
        .max(a.n() - a.d_i(i).min(a.n()));
    let reference = BmdReference::new(tau, i, a.q(), a.m(), a.n(), order)?;
    if reference.p_coeff(0).is_zero() {
        return Err(Error::DegenerateReference { tau, i });
    }
    let z = zeta_series(a, i, order)?;
    let p = zeta_polynomial(a, i, order)?;

    let via_p = bell_quotient(p.coeffs(), reference.p.coeffs(), order);
    let via_b = bell_quotient(z.coeffs(), reference.z.coeffs(), order);
    let via_div = z.div(&reference.z)?;
    if via_p != via_b || via_p != via_div.coeffs() {
        return Err(Error::Inconsistent(format!(
            "beta coefficients disagree between routes (i = {i}, tau = {tau})"
        )));
    }
    let series = TruncatedSeries::new(order, via_p);
    if reference.z.mul(&series)? != z || reference.p.mul(&series)? != p {
        return Err(Error::Inconsistent(format!(
            "beta series does not factor the zeta data (i = {i}, tau = {tau})"
        )));
    }
    Ok(BetaExpansion {
        tau,
        i,
        series,
        reference,
        d_i: a.d_i(i),
    })
}

/// `W^(i) = sum_j beta_{tau,j} M_{tau,d_i+j}`.
pub fn enumerator_from_beta(a: &Analysis, i: usize, tau: usize) -> Result<HomogeneousPoly> {
    Ok(beta_coefficients(a, i, tau, None)?.enumerator())
}
