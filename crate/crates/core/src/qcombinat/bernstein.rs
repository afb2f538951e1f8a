use super::poly::HomogeneousPoly;
use super::qbin::qbin;
use super::rational::q_pow;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::One;

/// The q-Bernstein polynomial `[n,u] Y^u prod_{j<n-u} (X - q^j Y)`.
pub fn bernstein(n: usize, u: usize, q: u64) -> Result<HomogeneousPoly> {
    if u > n {
        return Err(Error::out_of_range("Bernstein index u must satisfy u <= n", u as i64));
    }
    let one = BigRational::one();
    let mut p = HomogeneousPoly::monomial(u, u);
    for j in 0..(n - u) {
        p = p.mul_linear(&one, &-q_pow(q, j as i64));
    }
    Ok(p.scale(&qbin(n as i64, u as i64, q)))
}

/// Coefficients `lambda_u` (for `u = t..=n`) with
/// `X^(n-t) Y^t = sum_u lambda_u B_{n,u}`.
pub fn monomial_in_bernstein_basis(n: usize, t: usize, q: u64) -> Result<Vec<BigRational>> {
    if t > n {
        return Err(Error::out_of_range("monomial index t must satisfy t <= n", t as i64));
    }
    let denom = qbin(n as i64, t as i64, q);
    Ok((t..=n)
        .map(|u| qbin(u as i64, t as i64, q) / &denom)
        .collect())
}

/// Expand `sum_u coeffs[u - start] B_{n,u}` into the monomial basis.
pub fn from_bernstein(n: usize, start: usize, coeffs: &[BigRational], q: u64) -> Result<HomogeneousPoly> {
    let mut acc = HomogeneousPoly::zero(n);
    for (off, c) in coeffs.iter().enumerate() {
        acc = &acc + &bernstein(n, start + off, q)?.scale(c);
    }
    Ok(acc)
}
