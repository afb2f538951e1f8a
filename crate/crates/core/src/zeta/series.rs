use crate::error::{Error, Result};
use crate::invariants::{binomial_moments, normalized_moment_with, Analysis};
use crate::qcombinat::rational::{q_pow, sign};
use crate::qcombinat::{qmbin, TruncatedSeries};
use num_rational::BigRational;
use num_traits::Zero;

/// `n - d_perp - d_i + i + 1`, the largest possible degree of `P^(i)`.
pub fn degree_bound(a: &Analysis, i: usize) -> i64 {
    a.n() as i64 - a.d_perp() as i64 - a.d_i(i) as i64 + i as i64 + 1
}

/// Default truncation order: `2n + 2`, raised to clear the degree bound by two.
pub fn default_order(a: &Analysis, i: usize) -> usize {
    let bound = degree_bound(a, i).max(0) as usize;
    (2 * a.n() + 2).max(bound + 2)
}

/// `Z^(i)(T) = sum_u b_u^(i) T^u` modulo `T^(order+1)`.
pub fn zeta_series(a: &Analysis, i: usize, order: usize) -> Result<TruncatedSeries> {
    let moments = binomial_moments(a, i)?;
    let coeffs = (0..=order as i64)
        .map(|u| normalized_moment_with(a, &moments, i, u))
        .collect();
    Ok(TruncatedSeries::new(order, coeffs))
}

/// `prod_{j=0}^{i} (1 - q^(m j) T)`.
pub fn zeta_denominator(q: u64, m: usize, i: usize, order: usize) -> TruncatedSeries {
    let ratios: Vec<BigRational> = (0..=i).map(|j| q_pow(q, (m * j) as i64)).collect();
    TruncatedSeries::linear_product(order, &ratios)
}

/// `p_u = sum_{j=0}^{i+1} [i+1, j]_{q^m} (-1)^j q^(m C(j,2)) b_{u-j}` from a coefficient list
/// (`b_v = 0` for `v < 0`).
pub fn p_from_b(b: &[BigRational], q: u64, m: usize, i: usize) -> Vec<BigRational> {
    (0..b.len())
        .map(|u| {
            (0..=(i + 1).min(u))
                .map(|j| {
                    let j = j as i64;
                    qmbin(i as i64 + 1, j, q, m) * sign(j) * q_pow(q, m as i64 * j * (j - 1) / 2) * &b[u - j as usize]
                })
                .sum()
        })
        .collect()
}

/// `P^(i)(T) = Z^(i)(T) prod_{j=0}^{i} (1 - q^(m j) T)`.
///
/// The product is checked against the coefficient formula, and every
/// coefficient above the degree bound must vanish.
pub fn zeta_polynomial(a: &Analysis, i: usize, order: usize) -> Result<TruncatedSeries> {
    let bound = degree_bound(a, i);
    if (order as i64) < bound + 1 {
        return Err(Error::out_of_range(
            format!("order must exceed the degree bound {bound}"),
            order as i64,
        ));
    }
    let z = zeta_series(a, i, order)?;
    let p = z.mul(&zeta_denominator(a.q(), a.m(), i, order))?;
    if p_from_b(z.coeffs(), a.q(), a.m(), i) != p.coeffs() {
        return Err(Error::Inconsistent(format!(
            "zeta polynomial coefficients disagree at i = {i}"
        )));
    }
    if let Some(u) = (0..=order).find(|&u| u as i64 > bound && !p.coeff(u).is_zero()) {
        return Err(Error::Inconsistent(format!(
            "zeta polynomial has a nonzero coefficient at T^{u} above the bound {bound} (i = {i})"
        )));
    }
    Ok(p)
}
