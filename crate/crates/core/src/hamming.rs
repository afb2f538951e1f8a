//! Linear block codes in the Hamming metric: generalized weights, the BMD
//! predicate, and the closed forms for minimally BMD codes.

use crate::budget::{self, Budget};
use crate::error::{Error, Result};
use crate::gflinalg::{FieldSpec, FqMatrix, SubspaceEnumeration};
use crate::par::{fold_range, ExecMode};
use crate::qcombinat::qbin;
use crate::qcombinat::rational::{big, int, sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// JSON form: `{"q", "n", "generators": [[int]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSpec {
    pub q: u64,
    pub n: usize,
    pub generators: Vec<Vec<u64>>,
}

impl BlockSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn build(&self) -> Result<BlockCode> {
        let field = FieldSpec::new(self.q)?;
        let mut rows = Vec::with_capacity(self.generators.len());
        for (g, r) in self.generators.iter().enumerate() {
            if let Some(&x) = r.iter().find(|&&x| x >= self.q) {
                return Err(Error::out_of_range(format!("generator {g}: entry outside F_{}", self.q), x as i64));
            }
            rows.push(r.iter().map(|&x| x as u8).collect());
        }
        BlockCode::new(field, &FqMatrix::from_rows(&rows, self.n)?)
    }
}

/// A linear `[n, k]` code over `F_q`.
#[derive(Clone, Debug)]
pub struct BlockCode {
    field: Arc<FieldSpec>,
    n: usize,
    basis: FqMatrix,
}

impl PartialEq for BlockCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.basis == other.basis
    }
}

impl Eq for BlockCode {}

impl BlockCode {
    /// The code spanned by the rows of `generators`, which must be independent.
    pub fn new(field: Arc<FieldSpec>, generators: &FqMatrix) -> Result<Self> {
        generators.check_entries(&field)?;
        let r = generators.rref(&field);
        if r.rank < generators.rows() {
            return Err(Error::DependentGenerators {
                rank: r.rank,
                count: generators.rows(),
            });
        }
        Ok(BlockCode {
            n: generators.cols(),
            basis: r.matrix,
            field,
        })
    }

    fn spanned(field: Arc<FieldSpec>, rows: &FqMatrix) -> Self {
        let r = rows.rref(&field);
        let keep: Vec<usize> = (0..r.rank).collect();
        BlockCode {
            n: rows.cols(),
            basis: r.matrix.select_rows(&keep),
            field,
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }

    /// The generalized weights are characterized by anticodes only for `q >= 3`.
    pub fn in_stated_regime(&self) -> bool {
        self.q() >= 3
    }

    pub fn dual(&self) -> BlockCode {
        Self::spanned(self.field.clone(), &self.basis.null_space(&self.field))
    }

    /// Minimum weight of a nonzero codeword, `n + 1` for the zero code.
    pub fn min_distance(&self, budget: &Budget) -> Result<usize> {
        let size = num_traits::pow(BigInt::from(self.q()), self.k());
        let total = budget::check("codewords", &size, budget.codewords)?;
        let f = &self.field;
        let best = fold_range(
            ExecMode::default(),
            total.saturating_sub(1),
            || self.n + 1,
            |best, idx| {
                let mut w = vec![0u8; self.n];
                let mut rest = idx + 1;
                for t in 0..self.k() {
                    f.axpy(&mut w, (rest % self.q()) as u8, self.basis.row(t));
                    rest /= self.q();
                }
                best.min(w.iter().filter(|&&x| x != 0).count())
            },
            usize::min,
        );
        Ok(best)
    }

    /// `|supp D|` for the span `D` of the given rows.
    fn support_size(rows: &FqMatrix) -> usize {
        (0..rows.cols())
            .filter(|&c| (0..rows.rows()).any(|r| rows.get(r, c) != 0))
            .count()
    }

    /// Counts of `i`-dimensional subcodes by support size.
    pub fn subcode_support_counts(&self, i: usize, budget: &Budget, mode: ExecMode) -> Result<Vec<u64>> {
        let n = self.n;
        if i > self.k() {
            return Ok(vec![0; n + 1]);
        }
        let size = qbin(self.k() as i64, i as i64, self.q());
        budget::check("subcodes", size.numer(), budget.subcodes)?;
        let e = SubspaceEnumeration::new(self.q(), self.k(), i, u64::MAX)?;
        Ok(fold_range(
            mode,
            e.len(),
            || vec![0u64; n + 1],
            |mut h, idx| {
                let rows = e.nth(idx).basis().mul(&self.field, &self.basis).expect("shapes agree");
                h[Self::support_size(&rows)] += 1;
                h
            },
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        ))
    }

    /// `dim C(J)` for `C(J) = {c in C : supp c <= J}`, with `J` given as a bit mask.
    pub fn supported_dim(&self, mask: u64) -> usize {
        let outside: Vec<usize> = (0..self.n).filter(|&c| mask >> c & 1 == 0).collect();
        self.k() - self.basis.select_cols(&outside).rank(&self.field)
    }
}

/// `(d_0, d_1, ..., d_k)`, `d_i` the least support size of an `i`-dimensional subcode.
pub fn generalized_hamming_weights(c: &BlockCode, budget: &Budget) -> Result<Vec<usize>> {
    let mut d = vec![0];
    for i in 1..=c.k() {
        let h = c.subcode_support_counts(i, budget, ExecMode::default())?;
        d.push(h.iter().position(|&x| x > 0).expect("some subcode exists"));
    }
    Ok(d)
}

fn subsets_len_check(n: usize, budget: &Budget) -> Result<()> {
    if n >= 63 || (1u64 << n) > budget.subspaces {
        return Err(budget::budget_error("coordinate subsets", format!("2^{n}"), budget.subspaces));
    }
    Ok(())
}

/// `d_i = min{|J| : dim C(J) >= i}` over coordinate subsets `J`.
pub fn weights_by_supports(c: &BlockCode, budget: &Budget) -> Result<Vec<usize>> {
    subsets_len_check(c.n, budget)?;
    let mut best = vec![usize::MAX; c.k() + 1];
    best[0] = 0;
    for mask in 0..(1u64 << c.n) {
        let size = mask.count_ones() as usize;
        let dim = c.supported_dim(mask);
        for b in best.iter_mut().take(dim + 1).skip(1) {
            *b = (*b).min(size);
        }
    }
    Ok(best)
}

/// `B_u^(j) = sum_{|J| = u} [dim C(J), j]` for `u = 0..=n`.
pub fn binomial_moments(c: &BlockCode, j: usize, budget: &Budget) -> Result<Vec<BigRational>> {
    subsets_len_check(c.n, budget)?;
    let mut out = vec![int(0); c.n + 1];
    for mask in 0..(1u64 << c.n) {
        out[mask.count_ones() as usize] += qbin(c.supported_dim(mask) as i64, j as i64, c.q());
    }
    Ok(out)
}

/// `n - d_perp - d_i < 0`.
pub fn is_i_bmd(n: usize, d_perp: usize, d_i: usize) -> bool {
    (n as i64) - (d_perp as i64) - (d_i as i64) < 0
}

/// `d_i = n - k + i`.
pub fn is_i_mds(n: usize, k: usize, i: usize, d_i: usize) -> bool {
    d_i as i64 == n as i64 - k as i64 + i as i64
}

fn binom(n: i64, k: i64) -> BigRational {
    if k < 0 || k > n {
        return int(0);
    }
    let mut acc = BigInt::from(1);
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    big(acc)
}

/// `b_u^(j) = [k - n + u + d_j, j]` for `u >= 0`, zero for `u < 0`.
pub fn closed_form_b(n: usize, k: usize, d_j: usize, j: usize, u: i64, q: u64) -> BigRational {
    if u < 0 {
        return int(0);
    }
    qbin(k as i64 - n as i64 + u + d_j as i64, j as i64, q)
}

/// `A_w^(j) = C(n, w) sum_{u=d_j}^{w} (-1)^(w-u) C(w, u) [k - n + u, j]`.
pub fn closed_form_a(n: usize, k: usize, d_j: usize, j: usize, w: usize, q: u64) -> BigRational {
    let (n, k, w) = (n as i64, k as i64, w as i64);
    binom(n, w)
        * (d_j as i64..=w)
            .map(|u| sign(w - u) * binom(w, u) * qbin(k - n + u, j as i64, q))
            .sum::<BigRational>()
}

/// Weights, duals and predicates of a block code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HammingReport {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub weights: Vec<usize>,
    pub dual_weights: Vec<usize>,
    pub d_perp: usize,
    /// Indexed by `i = 0..=k`.
    pub bmd: Vec<bool>,
    /// Indexed by `i = 0..=k`.
    pub mds: Vec<bool>,
    pub minimal_bmd: Option<usize>,
    pub in_stated_regime: bool,
}

impl HammingReport {
    pub fn compute(c: &BlockCode, budget: &Budget) -> Result<Self> {
        let weights = generalized_hamming_weights(c, budget)?;
        let dual = c.dual();
        let dual_weights = weights_by_supports(&dual, budget)?;
        let d_perp = dual_weights.get(1).copied().unwrap_or(c.n + 1);
        let (n, k) = (c.n, c.k());
        let bmd: Vec<bool> = (0..=k).map(|i| is_i_bmd(n, d_perp, weights[i])).collect();
        Ok(HammingReport {
            q: c.q(),
            n,
            k,
            mds: (0..=k).map(|i| is_i_mds(n, k, i, weights[i])).collect(),
            minimal_bmd: (1..=k).find(|&i| bmd[i]),
            bmd,
            weights,
            dual_weights,
            d_perp,
            in_stated_regime: c.in_stated_regime(),
        })
    }

    /// Whether `i`-BMD and `i`-MDS agree at every `1 <= i <= k`.
    pub fn bmd_iff_mds(&self) -> bool {
        (1..=self.k).all(|i| self.bmd[i] == self.mds[i])
    }
}

/// Whether `C` is `i`-BMD exactly when it is `i`-MDS.
pub fn ibmd_iff_imds_check(c: &BlockCode, i: usize, budget: &Budget) -> Result<bool> {
    let r = HammingReport::compute(c, budget)?;
    if i == 0 || i > r.k {
        return Err(Error::out_of_range(format!("index must lie in 1..={}", r.k), i as i64));
    }
    Ok(r.bmd[i] == r.mds[i])
}
