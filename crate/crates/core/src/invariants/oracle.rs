use crate::budget::{self, Budget};
use crate::error::Result;
use crate::gflinalg::{FqMatrix, SubspaceEnumeration};
use crate::par::{fold_range, ExecMode};
use crate::qcombinat::qbin;
use crate::qcombinat::rational::int;
use crate::rmcode::RankMetricCode;
use num_rational::BigRational;

/// Dimensions of the column and row supports of the span of `rows` (flattened).
fn support_dims(code: &RankMetricCode, rows: &FqMatrix) -> (usize, usize) {
    let (n, m) = (code.n(), code.m());
    let f = code.field();
    let mut cols = FqMatrix::zeros(rows.rows() * m, n);
    let mut rws = FqMatrix::zeros(rows.rows() * n, m);
    for t in 0..rows.rows() {
        let w = rows.row(t);
        for r in 0..n {
            rws.row_mut(t * n + r).copy_from_slice(&w[r * m..(r + 1) * m]);
            for c in 0..m {
                cols.set(t * m + c, r, w[r * m + c]);
            }
        }
    }
    (cols.rank(f), rws.rank(f))
}

/// Counts of `i`-dimensional subcodes by support dimension, by enumerating
/// every subcode: `(column[w], row[w])`.
pub fn subcode_support_counts(
    code: &RankMetricCode,
    i: usize,
    budget: &Budget,
    mode: ExecMode,
) -> Result<(Vec<u64>, Vec<u64>)> {
    let k = code.k();
    if i > k {
        return Ok((vec![0; code.n() + 1], vec![0; code.n() + 1]));
    }
    let size = qbin(k as i64, i as i64, code.q());
    budget::check("subcodes", size.numer(), budget.subcodes)?;
    let e = SubspaceEnumeration::new(code.q(), k, i, u64::MAX)?;
    let n = code.n();
    Ok(fold_range(
        mode,
        e.len(),
        || (vec![0u64; n + 1], vec![0u64; n + 1]),
        |(mut c, mut r), idx| {
            let s = e.nth(idx);
            let rows = s.basis().mul(code.field(), code.basis()).expect("shapes agree");
            let (dc, dr) = support_dims(code, &rows);
            c[dc] += 1;
            if dr <= n {
                r[dr] += 1;
            }
            (c, r)
        },
        |(mut c1, mut r1), (c2, r2)| {
            for (x, y) in c1.iter_mut().zip(c2) {
                *x += y;
            }
            for (x, y) in r1.iter_mut().zip(r2) {
                *x += y;
            }
            (c1, r1)
        },
    ))
}

/// `A_0^(i)..A_n^(i)` counted directly over all `i`-dimensional subcodes.
pub fn rank_distribution_oracle(code: &RankMetricCode, i: usize, budget: &Budget) -> Result<Vec<BigRational>> {
    rank_distribution_oracle_with(code, i, budget, ExecMode::default())
}

pub fn rank_distribution_oracle_with(
    code: &RankMetricCode,
    i: usize,
    budget: &Budget,
    mode: ExecMode,
) -> Result<Vec<BigRational>> {
    let (col, row) = subcode_support_counts(code, i, budget, mode)?;
    Ok(if code.n() == code.m() {
        col.iter()
            .zip(&row)
            .map(|(&c, &r)| int((c + r) as i64) / int(2))
            .collect()
    } else {
        col.iter().map(|&c| int(c as i64)).collect()
    })
}
