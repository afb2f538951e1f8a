use super::series::{p_from_b, zeta_denominator};
use crate::error::{Error, Result};
use crate::qcombinat::{bernstein, qbin, HomogeneousPoly, TruncatedSeries};
use num_rational::BigRational;
use num_traits::Zero;

/// `b_{tau,u}^(j) = [tau + m (u - floor((tau - j) / m)), j]`.
pub fn reference_b(tau: usize, j: usize, u: i64, q: u64, m: usize) -> BigRational {
    if u < 0 {
        return BigRational::zero();
    }
    let m_i = m as i64;
    let shift = (tau as i64 - j as i64).div_euclid(m_i);
    qbin(tau as i64 + m_i * (u - shift), j as i64, q)
}

/// Series and enumerators of a `j`-BMD code of dimension `k = tau mod m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BmdReference {
    pub tau: usize,
    pub j: usize,
    pub q: u64,
    pub m: usize,
    pub n: usize,
    /// `Z_tau^(j)`, coefficients `b_{tau,u}`.
    pub z: TruncatedSeries,
    /// `P_tau^(j)`, coefficients `p_{tau,u}` (with `b_{tau,v} = 0` for `v < 0`).
    pub p: TruncatedSeries,
    /// `M_{tau,r}^(j)` for `r = 0..=n`.
    pub enumerators: Vec<HomogeneousPoly>,
}

impl BmdReference {
    pub fn new(tau: usize, j: usize, q: u64, m: usize, n: usize, order: usize) -> Result<Self> {
        if tau >= m {
            return Err(Error::out_of_range(format!("tau must be below m = {m}"), tau as i64));
        }
        let len = order.max(n);
        let b: Vec<BigRational> = (0..=len as i64).map(|u| reference_b(tau, j, u, q, m)).collect();
        let z = TruncatedSeries::new(order, b.clone());
        let p = z.mul(&zeta_denominator(q, m, j, order))?;
        debug_assert_eq!(p.coeffs(), &p_from_b(z.coeffs(), q, m, j)[..]);
        let mut enumerators = Vec::with_capacity(n + 1);
        for r in 0..=n {
            let mut acc = HomogeneousPoly::zero(n);
            for u in 0..=n - r {
                acc = &acc + &bernstein(n, u + r, q)?.scale(&b[u]);
            }
            enumerators.push(acc);
        }
        Ok(BmdReference {
            tau,
            j,
            q,
            m,
            n,
            z,
            p,
            enumerators,
        })
    }

    pub fn b(&self, u: usize) -> &BigRational {
        self.z.coeff(u)
    }

    pub fn p_coeff(&self, u: usize) -> &BigRational {
        self.p.coeff(u)
    }

    /// `M_{tau,r}^(j)`.
    pub fn enumerator(&self, r: usize) -> &HomogeneousPoly {
        &self.enumerators[r]
    }

    /// Rank of the coefficient matrix of `M_{tau,0..n}`.
    pub fn enumerator_rank(&self) -> usize {
        let rows: Vec<Vec<BigRational>> = self.enumerators.iter().map(|p| p.coeffs().to_vec()).collect();
        rational_rank(rows)
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = &rows[r][c] / &pivot[c];
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coefficients of `phi_n(X, Y, T) = sum_u B_{n,u} T^(n-u)`: entry `t` is `B_{n,n-t}`.
pub fn phi(n: usize, q: u64) -> Result<Vec<HomogeneousPoly>> {
    (0..=n).map(|t| bernstein(n, n - t, q)).collect()
}

/// Coefficients of `T^0..T^upto` in `Z(T) phi_n(X, Y, T)`.
pub fn series_times_phi(z: &TruncatedSeries, n: usize, q: u64, upto: usize) -> Result<Vec<HomogeneousPoly>> {
    if upto > z.order() {
        return Err(Error::OrderMismatch {
            left: upto,
            right: z.order(),
        });
    }
    let ph = phi(n, q)?;
    Ok((0..=upto)
        .map(|t| {
            let mut acc = HomogeneousPoly::zero(n);
            for (s, f) in ph.iter().enumerate().take(t + 1) {
                acc = &acc + &f.scale(z.coeff(t - s));
            }
            acc
        })
        .collect())
}
