use super::analysis::Analysis;
use crate::error::{Error, Result};
use crate::qcombinat::rational::{int, q_pow, sign};
use crate::qcombinat::{bernstein, from_bernstein, qbin, HomogeneousPoly};
use crate::rmcode::SupportProfile;
use num_rational::BigRational;
use num_traits::Zero;

fn check_index(a: &Analysis, i: usize) -> Result<()> {
    if i > a.k() {
        return Err(Error::out_of_range(format!("index i must be at most k = {}", a.k()), i as i64));
    }
    Ok(())
}

/// `B_0..B_n` from a support profile, for any `i >= 0` (zero rows when `i > k`).
pub fn moments_from_profile(p: &SupportProfile, i: usize, q: u64) -> Vec<BigRational> {
    let weigh = |h: &Vec<u64>| -> BigRational {
        h.iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(d, &c)| int(c as i64) * qbin(d as i64, i as i64, q))
            .sum()
    };
    (0..=p.n)
        .map(|u| match &p.row {
            None => weigh(&p.column[u]),
            Some(row) => (weigh(&p.column[u]) + weigh(&row[u])) / int(2),
        })
        .collect()
}

/// Generalized binomial moments `B_0^(i)..B_n^(i)`.
pub fn binomial_moments(a: &Analysis, i: usize) -> Result<Vec<BigRational>> {
    check_index(a, i)?;
    Ok(moments_from_profile(&a.profile, i, a.q()))
}

/// `A_w = sum_{u<=w} [n-u, w-u] (-1)^(w-u) q^C(w-u,2) B_u`.
pub fn moments_to_distribution(b: &[BigRational], q: u64) -> Vec<BigRational> {
    let n = b.len() as i64 - 1;
    (0..=n)
        .map(|w| {
            (0..=w)
                .map(|u| {
                    let t = w - u;
                    qbin(n - u, t, q) * sign(t) * q_pow(q, t * (t - 1) / 2) * &b[u as usize]
                })
                .sum()
        })
        .collect()
}

/// `B_u = sum_{w<=u} [n-w, u-w] A_w`.
pub fn distribution_to_moments(a: &[BigRational], q: u64) -> Vec<BigRational> {
    let n = a.len() as i64 - 1;
    (0..=n)
        .map(|u| (0..=u).map(|w| qbin(n - w, u - w, q) * &a[w as usize]).sum())
        .collect()
}

/// Generalized rank weight distribution `A_0^(i)..A_n^(i)`, from the moments.
pub fn rank_distribution(a: &Analysis, i: usize) -> Result<Vec<BigRational>> {
    Ok(moments_to_distribution(&binomial_moments(a, i)?, a.q()))
}

/// `b_u^(i)` for any integer `u`, using the closed form past `n - d_perp - d_i`.
pub fn normalized_moment_with(a: &Analysis, moments: &[BigRational], i: usize, u: i64) -> BigRational {
    let (n, m, k) = (a.n() as i64, a.m() as i64, a.k() as i64);
    let di = a.d_i(i) as i64;
    if u < 0 {
        return BigRational::zero();
    }
    if u <= n - a.d_perp() as i64 - di {
        let idx = u + di;
        moments[idx as usize].clone() / qbin(n, idx, a.q())
    } else {
        qbin(k - m * (n - u - di), i as i64, a.q())
    }
}

/// `b_0^(i)..b_{n-d_i}^(i)`.
pub fn normalized_moments(a: &Analysis, i: usize) -> Result<Vec<BigRational>> {
    let moments = binomial_moments(a, i)?;
    let top = a.n() as i64 - a.d_i(i) as i64;
    Ok((0..=top).map(|u| normalized_moment_with(a, &moments, i, u)).collect())
}

/// `W^(i) = sum_w A_w X^(n-w) Y^w`.
pub fn weight_enumerator(a: &Analysis, i: usize) -> Result<HomogeneousPoly> {
    Ok(HomogeneousPoly::from_coeffs(rank_distribution(a, i)?))
}

/// Coefficients `b_{u-d_i}` of `W^(i)` on `B_{n,u}` for `u = d_i..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernsteinExpansion {
    pub n: usize,
    pub start: usize,
    pub coeffs: Vec<BigRational>,
}

impl BernsteinExpansion {
    /// Expand back into the monomial basis.
    pub fn reconstruct(&self, q: u64) -> Result<HomogeneousPoly> {
        from_bernstein(self.n, self.start, &self.coeffs, q)
    }

    /// The terms `b_{u-d_i} B_{n,u}` individually.
    pub fn terms(&self, q: u64) -> Result<Vec<HomogeneousPoly>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| Ok(bernstein(self.n, self.start + j, q)?.scale(c)))
            .collect()
    }
}

pub fn bernstein_expansion(a: &Analysis, i: usize) -> Result<BernsteinExpansion> {
    Ok(BernsteinExpansion {
        n: a.n(),
        start: a.d_i(i),
        coeffs: normalized_moments(a, i)?,
    })
}

/// Indices `u` with a non-integral entry.
pub fn non_integral(values: &[BigRational]) -> Vec<usize> {
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_integer())
        .map(|(u, _)| u)
        .collect()
}
