use crate::budget::{self, Budget};
use crate::error::{Error, Result};
use crate::gflinalg::{FieldSpec, FqMatrix};
use crate::par::{fold_range, ExecMode};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// What to do with linearly dependent generators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GeneratorMode {
    /// Reject them.
    #[default]
    Strict,
    /// Keep a basis of their span.
    Reduce,
}

/// An `F_q`-linear space of `n x m` matrices, `n <= m`.
///
/// Matrices are flattened row-major (entry `(r, c)` at `r * m + c`); the code
/// is stored as the reduced echelon basis of the flattened generators.
#[derive(Clone)]
pub struct RankMetricCode {
    field: Arc<FieldSpec>,
    n: usize,
    m: usize,
    transposed: bool,
    basis: FqMatrix,
    generators: Vec<FqMatrix>,
}

/// JSON form of a code: `{"q", "n", "m", "generators": [[[int]]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub q: u64,
    pub n: usize,
    pub m: usize,
    pub generators: Vec<Vec<Vec<u64>>>,
}

impl CodeSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("code spec serializes")
    }

    pub fn build(&self, mode: GeneratorMode) -> Result<RankMetricCode> {
        let field = FieldSpec::new(self.q)?;
        let mut gens = Vec::with_capacity(self.generators.len());
        for (g, rows) in self.generators.iter().enumerate() {
            if rows.len() != self.n {
                return Err(Error::Shape(format!(
                    "generator {g} has {} rows, expected {}",
                    rows.len(),
                    self.n
                )));
            }
            let mut data = Vec::with_capacity(self.n * self.m);
            for (r, row) in rows.iter().enumerate() {
                if row.len() != self.m {
                    return Err(Error::Shape(format!(
                        "generator {g} row {r} has {} entries, expected {}",
                        row.len(),
                        self.m
                    )));
                }
                for &x in row {
                    if x >= self.q {
                        return Err(Error::out_of_range(
                            format!("generator {g} row {r}: entry outside F_{}", self.q),
                            x as i64,
                        ));
                    }
                    data.push(x as u8);
                }
            }
            gens.push(FqMatrix::from_flat(self.n, self.m, data)?);
        }
        make_code(field, self.n, self.m, &gens, mode)
    }
}

/// Build a code from generator matrices, each `n x m`.
///
/// Codes with `n > m` are transposed; see [`RankMetricCode::is_transposed`].
pub fn make_code(
    field: Arc<FieldSpec>,
    n: usize,
    m: usize,
    generators: &[FqMatrix],
    mode: GeneratorMode,
) -> Result<RankMetricCode> {
    if n == 0 || m == 0 {
        return Err(Error::Shape(format!("matrix space {n}x{m} is empty")));
    }
    for (g, mat) in generators.iter().enumerate() {
        if mat.rows() != n || mat.cols() != m {
            return Err(Error::Shape(format!(
                "generator {g} is {}x{}, expected {n}x{m}",
                mat.rows(),
                mat.cols()
            )));
        }
        mat.check_entries(&field)?;
    }
    let transposed = n > m;
    let gens: Vec<FqMatrix> = if transposed {
        generators.iter().map(FqMatrix::transpose).collect()
    } else {
        generators.to_vec()
    };
    let (n, m) = if transposed { (m, n) } else { (n, m) };
    let mut flat = FqMatrix::zeros(0, n * m);
    for g in &gens {
        flat = flat.stack(&FqMatrix::from_flat(1, n * m, g.data().to_vec())?)?;
    }
    let r = flat.rref(&field);
    if r.rank < gens.len() && mode == GeneratorMode::Strict {
        return Err(Error::DependentGenerators {
            rank: r.rank,
            count: gens.len(),
        });
    }
    let keep: Vec<usize> = (0..r.rank).collect();
    let basis = r.matrix.select_rows(&keep);
    let generators = if r.rank == gens.len() {
        gens
    } else {
        unflatten(&basis, n, m)
    };
    Ok(RankMetricCode {
        field,
        n,
        m,
        transposed,
        basis,
        generators,
    })
}

fn unflatten(basis: &FqMatrix, n: usize, m: usize) -> Vec<FqMatrix> {
    (0..basis.rows())
        .map(|t| FqMatrix::from_flat(n, m, basis.row(t).to_vec()).expect("row length nm"))
        .collect()
}

impl RankMetricCode {
    /// The code spanned by the rows of a flattened `k' x nm` matrix.
    pub fn from_flat_span(field: Arc<FieldSpec>, n: usize, m: usize, rows: &FqMatrix) -> Result<Self> {
        if rows.cols() != n * m {
            return Err(Error::Shape(format!(
                "flattened rows have length {}, expected {}",
                rows.cols(),
                n * m
            )));
        }
        let gens = unflatten(rows, n, m);
        make_code(field, n, m, &gens, GeneratorMode::Reduce)
    }

    pub fn zero(field: Arc<FieldSpec>, n: usize, m: usize) -> Result<Self> {
        make_code(field, n, m, &[], GeneratorMode::Strict)
    }

    /// All of `F_q^{n x m}`.
    pub fn full(field: Arc<FieldSpec>, n: usize, m: usize) -> Result<Self> {
        let id = FqMatrix::identity(n * m);
        Self::from_flat_span(field, n, m, &id)
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

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.basis.rows()
    }

    /// `nm - k`.
    pub fn dual_dimension(&self) -> usize {
        self.n * self.m - self.k()
    }

    /// True when the input had more rows than columns and was transposed.
    pub fn is_transposed(&self) -> bool {
        self.transposed
    }

    /// The `k x nm` reduced echelon basis.
    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }

    /// Generator matrices, `n x m`, in the normalized orientation.
    pub fn generators(&self) -> &[FqMatrix] {
        &self.generators
    }

    /// Write `k = alpha * m + rho` with `0 <= rho < m`.
    pub fn alpha_rho(&self) -> (usize, usize) {
        (self.k() / self.m, self.k() % self.m)
    }

    /// The trace dual `{N : sum_ij M_ij N_ij = 0 for all M in C}`.
    pub fn dual(&self) -> RankMetricCode {
        let ns = self.basis.null_space(&self.field);
        Self::from_flat_span(self.field.clone(), self.n, self.m, &ns).expect("dual shape")
    }

    pub fn contains(&self, mat: &FqMatrix) -> bool {
        let v = FqMatrix::from_flat(1, self.n * self.m, mat.data().to_vec());
        v.and_then(|v| self.basis.stack(&v))
            .is_ok_and(|s| s.rank(&self.field) == self.k())
    }

    /// The codeword `sum_t x_t B_t` for coefficient digits of `idx` in base `q`.
    pub fn codeword(&self, idx: u64) -> FqMatrix {
        let q = self.q();
        let mut out = vec![0u8; self.n * self.m];
        let mut rest = idx;
        for t in 0..self.k() {
            let c = (rest % q) as u8;
            rest /= q;
            self.field.axpy(&mut out, c, self.basis.row(t));
        }
        FqMatrix::from_flat(self.n, self.m, out).expect("codeword shape")
    }

    /// Number of codewords, after checking it against `cap`.
    pub fn codeword_count(&self, cap: u64) -> Result<u64> {
        let size = num_traits::pow(BigInt::from(self.q()), self.k());
        budget::check("codewords", &size, cap)
    }

    /// `(min rank, max rank)` over nonzero codewords; `None` for the zero code.
    pub fn rank_range(&self, cap: u64, mode: ExecMode) -> Result<Option<(usize, usize)>> {
        let total = self.codeword_count(cap)?;
        let (lo, hi) = fold_range(
            mode,
            total.saturating_sub(1),
            || (usize::MAX, 0usize),
            |(lo, hi), i| {
                let r = self.codeword(i + 1).rank(&self.field);
                (lo.min(r), hi.max(r))
            },
            |a, b| (a.0.min(b.0), a.1.max(b.1)),
        );
        Ok((hi > 0).then_some((lo, hi)))
    }

    /// Minimum rank distance; `n + 1` for the zero code.
    pub fn min_distance(&self, budget: &Budget) -> Result<usize> {
        Ok(self
            .rank_range(budget.codewords, ExecMode::default())?
            .map_or(self.n + 1, |r| r.0))
    }

    /// Maximum rank of a codeword; 0 for the zero code.
    pub fn maxrank(&self, budget: &Budget) -> Result<usize> {
        Ok(self
            .rank_range(budget.codewords, ExecMode::default())?
            .map_or(0, |r| r.1))
    }

    /// JSON form of the code, using its basis as generators.
    pub fn to_spec(&self) -> CodeSpec {
        CodeSpec {
            q: self.q(),
            n: self.n,
            m: self.m,
            generators: self
                .generators
                .iter()
                .map(|g| g.to_rows().into_iter().map(|r| r.into_iter().map(u64::from).collect()).collect())
                .collect(),
        }
    }
}

impl PartialEq for RankMetricCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n == other.n && self.m == other.m && self.basis == other.basis
    }
}

impl Eq for RankMetricCode {}

impl fmt::Debug for RankMetricCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RankMetricCode")
            .field("q", &self.q())
            .field("n", &self.n)
            .field("m", &self.m)
            .field("k", &self.k())
            .field("transposed", &self.transposed)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c1() -> RankMetricCode {
        CodeSpec::from_json(include_str!("../../../../fixtures/c1.json"))
            .unwrap()
            .build(GeneratorMode::Strict)
            .unwrap()
    }

    #[test]
    fn construction() {
        let c = c1();
        assert_eq!((c.n(), c.m(), c.k()), (3, 4, 6));
        let f = FieldSpec::new(2).unwrap();
        assert_eq!(RankMetricCode::zero(f.clone(), 3, 4).unwrap().k(), 0);
        assert_eq!(RankMetricCode::full(f, 3, 4).unwrap().k(), 12);
    }

    #[test]
    fn first_generator_has_rank_three() {
        let c = c1();
        assert_eq!(c.generators()[0].rank(c.field()), 3);
    }

    #[test]
    fn dependent_generators() {
        let f = FieldSpec::new(2).unwrap();
        let g = FqMatrix::identity(2);
        let err = make_code(f.clone(), 2, 2, &[g.clone(), g.clone()], GeneratorMode::Strict);
        assert!(matches!(err, Err(Error::DependentGenerators { rank: 1, count: 2 })));
        let c = make_code(f, 2, 2, &[g.clone(), g], GeneratorMode::Reduce).unwrap();
        assert_eq!(c.k(), 1);
    }

    #[test]
    fn tall_codes_are_transposed() {
        let f = FieldSpec::new(2).unwrap();
        let g = FqMatrix::from_rows(&[vec![1, 0], vec![0, 0], vec![0, 1]], 2).unwrap();
        let c = make_code(f, 3, 2, &[g], GeneratorMode::Strict).unwrap();
        assert!(c.is_transposed());
        assert_eq!((c.n(), c.m()), (2, 3));
    }

    #[test]
    fn dual_basics() {
        let c = c1();
        let d = c.dual();
        assert_eq!(d.k(), 6);
        assert_eq!(d.dual(), c);
        let b = Budget::default();
        assert_eq!(c.min_distance(&b).unwrap(), 1);
        assert_eq!(d.min_distance(&b).unwrap(), 1);
        let f = FieldSpec::new(2).unwrap();
        let z = RankMetricCode::zero(f.clone(), 3, 4).unwrap();
        assert_eq!(z.dual().k(), 12);
        assert_eq!(z.min_distance(&b).unwrap(), 4);
        assert_eq!(z.maxrank(&b).unwrap(), 0);
        assert_eq!(RankMetricCode::full(f, 3, 4).unwrap().maxrank(&b).unwrap(), 3);
    }

    #[test]
    fn codeword_budget() {
        let c = c1();
        assert!(matches!(c.min_distance(&Budget::uniform(10)), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn malformed_json() {
        assert!(matches!(CodeSpec::from_json("{\"q\": 2"), Err(Error::Parse(_))));
        let bad = CodeSpec { q: 2, n: 2, m: 2, generators: vec![vec![vec![1, 2], vec![0, 0]]] };
        assert!(bad.build(GeneratorMode::Strict).is_err());
    }
}
