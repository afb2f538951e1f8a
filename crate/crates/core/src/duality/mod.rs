//! MacWilliams identities for generalized binomial moments, and the derived
//! transforms for normalized moments, zeta functions and distributions.

use crate::classify::wei_dual_weights;
use crate::error::{Error, Result};
use crate::invariants::{binomial_moments, distribution_to_moments, moments_to_distribution, normalized_moment_with, Analysis};
use crate::qcombinat::rational::q_pow;
use crate::qcombinat::{qbin, TruncatedSeries};
use num_rational::BigRational;
use num_traits::Zero;

/// `q^(j (kappa - i + j)) [kappa, i - j]`.
fn mac_coeff(q: u64, kappa: i64, i: usize, j: usize) -> BigRational {
    let (i, j) = (i as i64, j as i64);
    q_pow(q, j * (kappa - i + j)) * qbin(kappa, i - j, q)
}

fn row(table: &[Vec<BigRational>], j: usize, n: usize) -> Result<&Vec<BigRational>> {
    match table.get(j) {
        Some(r) if r.len() == n + 1 => Ok(r),
        Some(r) => Err(Error::Shape(format!("moment row {j} has {} entries, expected {}", r.len(), n + 1))),
        None => Err(Error::MissingRow(j)),
    }
}

/// `B_u^(i)(C) = sum_{j<=i} q^(j(kappa-i+j)) [kappa, i-j] B_{n-u}^(j)(C_perp)`,
/// `kappa = k - m(n-u)`, for `u = 0..=n`.
///
/// `dual_table[j]` holds `B_0^(j)(C_perp)..B_n^(j)(C_perp)`; `k = dim C`.
pub fn moments_of_dual_to_primal(
    dual_table: &[Vec<BigRational>],
    i: usize,
    n: usize,
    m: usize,
    k: usize,
    q: u64,
) -> Result<Vec<BigRational>> {
    let rows = (0..=i).map(|j| row(dual_table, j, n)).collect::<Result<Vec<_>>>()?;
    Ok((0..=n)
        .map(|u| {
            let kappa = k as i64 - (m * (n - u)) as i64;
            (0..=i)
                .map(|j| mac_coeff(q, kappa, i, j) * &rows[j][n - u])
                .sum()
        })
        .collect())
}

/// Moment table of `C_perp` (rows `j = 0..=i_max`) from that of `C`, by
/// solving the identity upwards in `j`; the pivot of row `i` is `q^(i kappa)`.
pub fn primal_to_dual_moments(
    table: &[Vec<BigRational>],
    i_max: usize,
    n: usize,
    m: usize,
    k: usize,
    q: u64,
) -> Result<Vec<Vec<BigRational>>> {
    let mut dual: Vec<Vec<BigRational>> = Vec::with_capacity(i_max + 1);
    for i in 0..=i_max {
        let primal = row(table, i, n)?;
        let mut out = vec![BigRational::zero(); n + 1];
        for u in 0..=n {
            let kappa = k as i64 - (m * (n - u)) as i64;
            let mut rest = primal[u].clone();
            for (j, dj) in dual.iter().enumerate() {
                rest -= mac_coeff(q, kappa, i, j) * &dj[n - u];
            }
            out[n - u] = rest / mac_coeff(q, kappa, i, i);
        }
        dual.push(out);
    }
    Ok(dual)
}

/// Moment tables `B^(0..=i_max)` of a code, using zero rows past its dimension.
pub fn moment_table(a: &Analysis, i_max: usize) -> Vec<Vec<BigRational>> {
    (0..=i_max)
        .map(|j| {
            if j <= a.k() {
                binomial_moments(a, j).expect("index checked")
            } else {
                vec![BigRational::zero(); a.n() + 1]
            }
        })
        .collect()
}

/// Data of `C` recovered from `C_perp` alone.
struct Primal {
    n: usize,
    m: usize,
    k: usize,
    q: u64,
    d_i: usize,
}

fn primal_of(dual: &Analysis, i: usize) -> Result<Primal> {
    let (n, m) = (dual.n(), dual.m());
    let k = n * m - dual.k();
    if i > k {
        return Err(Error::out_of_range(format!("index i must be at most k = {k}"), i as i64));
    }
    let w = wei_dual_weights(&dual.weights, n, m)?;
    Ok(Primal {
        n,
        m,
        k,
        q: dual.q(),
        d_i: w.get(i),
    })
}

/// `b^(j)_v(C_perp)` with `d_j(C_perp) = n + 1` past its dimension.
fn dual_b(dual: &Analysis, moments: &[Vec<BigRational>], j: usize, v: i64) -> BigRational {
    if j > dual.k() || v < 0 {
        return BigRational::zero();
    }
    normalized_moment_with(dual, &moments[j], j, v)
}

/// `b_u^(i)(C)` from `C_perp` data only:
/// `sum_j q^(j(kappa-i+j)) [kappa, i-j] b^(j)_{n-u-d_j_perp-d_i}(C_perp)`,
/// `kappa = k - m(n - d_i - u)`, for `0 <= u <= n - d_i`.
pub fn dual_normalized_moment(dual: &Analysis, i: usize, u: usize) -> Result<BigRational> {
    let p = primal_of(dual, i)?;
    let moments = moment_table(dual, i);
    dual_normalized_moment_with(dual, &p, &moments, i, u)
}

fn dual_normalized_moment_with(
    dual: &Analysis,
    p: &Primal,
    moments: &[Vec<BigRational>],
    i: usize,
    u: usize,
) -> Result<BigRational> {
    if u + p.d_i > p.n {
        return Err(Error::out_of_range(
            format!("u must be at most n - d_i = {}", p.n - p.d_i),
            u as i64,
        ));
    }
    let kappa = p.k as i64 - (p.m * (p.n - p.d_i - u)) as i64;
    Ok((0..=i)
        .map(|j| {
            let v = (p.n - u - p.d_i) as i64 - dual.d_i(j) as i64;
            mac_coeff(p.q, kappa, i, j) * dual_b(dual, moments, j, v)
        })
        .sum())
}

/// `b_0^(i)(C)..b_{n-d_i}^(i)(C)` from `C_perp` data.
pub fn dual_normalized_moments(dual: &Analysis, i: usize) -> Result<Vec<BigRational>> {
    let p = primal_of(dual, i)?;
    let moments = moment_table(dual, i);
    (0..=p.n - p.d_i)
        .map(|u| dual_normalized_moment_with(dual, &p, &moments, i, u))
        .collect()
}

/// `Z_C^(i)(T)` from `C_perp` data: the terms `T^(n-d_i-d_j_perp-t)` of the
/// double sum over `j` and `t`, then the closed form past `n - d_i`.
pub fn dual_zeta(dual: &Analysis, i: usize, order: usize) -> Result<TruncatedSeries> {
    let p = primal_of(dual, i)?;
    let moments = moment_table(dual, i);
    let (n, m, k, q) = (p.n as i64, p.m as i64, p.k as i64, p.q);
    let top = n - p.d_i as i64;
    let mut coeffs = vec![BigRational::zero(); order + 1];
    for j in 0..=i.min(dual.k()) {
        let dj = dual.d_i(j) as i64;
        let jj = j as i64;
        let lead = q_pow(q, jj * (k - m * dj - i as i64 + jj));
        for t in 0..=(top - dj) {
            let u = top - dj - t;
            if u as usize > order {
                continue;
            }
            let term = &lead * qbin(k - m * (t + dj), i as i64 - jj, q) / q_pow(q, jj * m * t)
                * dual_b(dual, &moments, j, t);
            coeffs[u as usize] += term;
        }
    }
    for (u, c) in coeffs.iter_mut().enumerate().skip((top + 1).max(0) as usize) {
        *c = qbin(k - m * (n - u as i64 - p.d_i as i64), i as i64, q);
    }
    Ok(TruncatedSeries::new(order, coeffs))
}

/// `A^(i)(C)` from the distributions `A^(0..=i)(C_perp)`, through the moments.
pub fn dual_rank_distribution(
    dual_distributions: &[Vec<BigRational>],
    i: usize,
    n: usize,
    m: usize,
    k: usize,
    q: u64,
) -> Result<Vec<BigRational>> {
    let table = (0..=i)
        .map(|j| Ok(distribution_to_moments(row(dual_distributions, j, n)?, q)))
        .collect::<Result<Vec<_>>>()?;
    Ok(moments_to_distribution(&moments_of_dual_to_primal(&table, i, n, m, k, q)?, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::fixtures::example;
    use crate::gflinalg::FieldSpec;
    use crate::invariants::{normalized_moments, rank_distribution};
    use crate::qcombinat::rational::{int, parse};
    use crate::rmcode::RankMetricCode;
    use crate::zeta::zeta_series;

    fn both(j: usize) -> (Analysis, Analysis) {
        let a = Analysis::new(&example(j), &Budget::default()).unwrap();
        let d = a.swapped();
        (a, d)
    }

    #[test]
    fn reconstruct_b22_of_c1() {
        let (a, d) = both(1);
        let dual_table = moment_table(&d, 2);
        assert_eq!(dual_table[0][1], int(7));
        assert_eq!(dual_table[1][1], int(1));
        assert_eq!(dual_table[2][1], int(0));
        let b = moments_of_dual_to_primal(&dual_table, 2, 3, 4, 6, 2).unwrap();
        assert_eq!(b[2], int(13));
        assert_eq!(b, binomial_moments(&a, 2).unwrap());
        assert!(matches!(moments_of_dual_to_primal(&dual_table[..1], 2, 3, 4, 6, 2), Err(Error::MissingRow(1))));
    }

    #[test]
    fn identity_on_all_fixtures_and_duals() {
        for j in 1..=7 {
            for a in [both(j).0, both(j).1] {
                let d = a.swapped();
                let kmax = a.k().max(d.k());
                let dual_table = moment_table(&d, kmax);
                for i in 0..=a.k() {
                    let b = moments_of_dual_to_primal(&dual_table, i, a.n(), a.m(), a.k(), a.q()).unwrap();
                    assert_eq!(b, binomial_moments(&a, i).unwrap(), "C{j} i={i}");
                }
                let primal = moment_table(&a, kmax);
                let inv = primal_to_dual_moments(&primal, kmax, a.n(), a.m(), a.k(), a.q()).unwrap();
                assert_eq!(inv, moment_table(&d, kmax));
                let back = primal_to_dual_moments(&inv, a.k(), a.n(), a.m(), d.k(), a.q()).unwrap();
                assert_eq!(back, moment_table(&a, a.k()));
            }
        }
    }

    #[test]
    fn zero_and_full_codes() {
        let f = FieldSpec::new(2).unwrap();
        let z = Analysis::new(&RankMetricCode::zero(f, 3, 4).unwrap(), &Budget::default()).unwrap();
        let full = z.swapped();
        let inv = primal_to_dual_moments(&moment_table(&z, 12), 12, 3, 4, 0, 2).unwrap();
        assert_eq!(inv, moment_table(&full, 12));
    }

    #[test]
    fn normalized_moments_from_dual() {
        for j in 1..=7 {
            let (a, d) = both(j);
            for i in 0..=a.k() {
                let direct = normalized_moments(&a, i).unwrap();
                assert_eq!(dual_normalized_moments(&d, i).unwrap(), direct, "C{j} i={i}");
                let order = 8;
                assert_eq!(dual_zeta(&d, i, order).unwrap(), zeta_series(&a, i, order).unwrap(), "C{j} i={i}");
            }
        }
        let (_, d) = both(1);
        assert_eq!(dual_normalized_moment(&d, 2, 0).unwrap(), parse("13/7").unwrap());
        assert!(dual_normalized_moment(&d, 2, 2).is_err());
    }

    #[test]
    fn distributions_from_dual() {
        for j in 1..=7 {
            let (a, d) = both(j);
            let dual_dists: Vec<_> = (0..=a.k())
                .map(|t| if t <= d.k() { rank_distribution(&d, t).unwrap() } else { vec![BigRational::zero(); 4] })
                .collect();
            for i in 0..=a.k() {
                let got = dual_rank_distribution(&dual_dists, i, 3, 4, a.k(), 2).unwrap();
                assert_eq!(got, rank_distribution(&a, i).unwrap(), "C{j} i={i}");
            }
        }
    }
}
