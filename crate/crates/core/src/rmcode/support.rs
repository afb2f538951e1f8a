use super::code::RankMetricCode;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gflinalg::{enumerate_subspaces, FqMatrix, Subspace};
use crate::par::{fold_range, ExecMode};
use serde::{Deserialize, Serialize};

/// Which side of the matrix a support condition applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SupportKind {
    /// Column space contained in `U <= F_q^n`.
    Column,
    /// Row space contained in `U <= F_q^m`.
    Row,
}

impl RankMetricCode {
    fn ambient_of(&self, kind: SupportKind) -> usize {
        match kind {
            SupportKind::Column => self.n(),
            SupportKind::Row => self.m(),
        }
    }

    /// The `k x c` matrix whose kernel (acting on coefficient vectors) is the
    /// supported subcode: row `t` lists the conditions evaluated at `B_t`.
    fn condition_rows(&self, kind: SupportKind, perp: &FqMatrix) -> FqMatrix {
        let f = self.field();
        let (n, m) = (self.n(), self.m());
        let h = perp.rows();
        let width = h * match kind {
            SupportKind::Column => m,
            SupportKind::Row => n,
        };
        let mut out = FqMatrix::zeros(self.k(), width);
        for t in 0..self.k() {
            let b = self.basis().row(t);
            let row = out.row_mut(t);
            match kind {
                SupportKind::Column => {
                    // h^T B_t for each h
                    for a in 0..h {
                        let dst = &mut row[a * m..(a + 1) * m];
                        for r in 0..n {
                            let c = perp.get(a, r);
                            if c != 0 {
                                f.axpy(dst, c, &b[r * m..(r + 1) * m]);
                            }
                        }
                    }
                }
                SupportKind::Row => {
                    // B_t g for each g
                    for a in 0..h {
                        for r in 0..n {
                            row[a * n + r] = f.dot(&b[r * m..(r + 1) * m], perp.row(a));
                        }
                    }
                }
            }
        }
        out
    }

    fn check_ambient(&self, kind: SupportKind, u: &Subspace) -> Result<()> {
        let want = self.ambient_of(kind);
        if u.ambient() != want {
            return Err(Error::Shape(format!(
                "support space lives in F_q^{}, expected F_q^{want}",
                u.ambient()
            )));
        }
        Ok(())
    }

    /// `dim C(U)` (column) or `dim C[U]` (row), by linear algebra.
    pub fn supported_dim(&self, kind: SupportKind, u: &Subspace) -> Result<usize> {
        self.check_ambient(kind, u)?;
        Ok(self.supported_dim_unchecked(kind, u))
    }

    pub(crate) fn supported_dim_unchecked(&self, kind: SupportKind, u: &Subspace) -> usize {
        if self.k() == 0 {
            return 0;
        }
        let perp = u.basis().null_space(self.field());
        if perp.rows() == 0 {
            return self.k();
        }
        self.k() - self.condition_rows(kind, &perp).rank(self.field())
    }

    /// The supported subcode `{M in C : support of M <= U}`.
    pub fn supported_subcode(&self, kind: SupportKind, u: &Subspace) -> Result<RankMetricCode> {
        self.check_ambient(kind, u)?;
        let perp = u.basis().null_space(self.field());
        let cond = self.condition_rows(kind, &perp);
        let coeffs = cond.transpose().null_space(self.field());
        let words = coeffs.mul(self.field(), self.basis())?;
        RankMetricCode::from_flat_span(self.field().clone(), self.n(), self.m(), &words)
    }

    /// `C(U) = {M in C : colsp(M) <= U}` for `U <= F_q^n`.
    pub fn supported_subcode_col(&self, u: &Subspace) -> Result<RankMetricCode> {
        self.supported_subcode(SupportKind::Column, u)
    }

    /// `C[U] = {M in C : rowsp(M) <= U}` for `U <= F_q^m`.
    pub fn supported_subcode_row(&self, u: &Subspace) -> Result<RankMetricCode> {
        self.supported_subcode(SupportKind::Row, u)
    }

    /// `(column support, row support)`: the sums of all column and row spaces.
    pub fn code_supports(&self) -> (Subspace, Subspace) {
        let (n, m) = (self.n(), self.m());
        let mut cols = FqMatrix::zeros(0, n);
        let mut rows = FqMatrix::zeros(0, m);
        for g in self.generators() {
            cols = cols.stack(&g.transpose()).expect("column length n");
            rows = rows.stack(g).expect("row length m");
        }
        (
            Subspace::span(self.field(), &cols),
            Subspace::span(self.field(), &rows),
        )
    }
}

/// An optimal anticode `F_q^{n x m}(U)` (column) or `F_q^{n x m}[U]` (row).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Anticode {
    pub kind: SupportKind,
    pub space: Subspace,
}

impl Anticode {
    /// `u`, the dimension of the defining space.
    pub fn u(&self) -> usize {
        self.space.dim()
    }

    /// `dim_q A = m u`.
    pub fn dimension(&self, m: usize) -> usize {
        m * self.u()
    }

    /// The dual anticode, of the same kind on `U^perp`.
    pub fn dual(&self, code: &RankMetricCode) -> Anticode {
        Anticode {
            kind: self.kind,
            space: self.space.orthogonal_complement(code.field()),
        }
    }

    /// Whether `mat` lies in the anticode.
    pub fn contains(&self, code: &RankMetricCode, mat: &FqMatrix) -> bool {
        let f = code.field();
        match self.kind {
            SupportKind::Column => crate::gflinalg::col_space(f, mat).is_subspace_of(f, &self.space),
            SupportKind::Row => crate::gflinalg::row_space(f, mat).is_subspace_of(f, &self.space),
        }
    }

    /// `dim(C cap A)`.
    pub fn meet_dim(&self, code: &RankMetricCode) -> Result<usize> {
        code.supported_dim(self.kind, &self.space)
    }
}

/// All optimal anticodes of dimension `m u` in `F_q^{n x m}`.
///
/// Column type always; row type as well when `n = m` and `0 < u < n`.
pub fn optimal_anticodes(n: usize, m: usize, q: u64, u: usize, budget: &Budget) -> Result<Vec<Anticode>> {
    if u > n {
        return Err(Error::out_of_range(format!("anticode parameter must be at most {n}"), u as i64));
    }
    let mut out: Vec<Anticode> = enumerate_subspaces(q, n, u, budget.subspaces)?
        .iter()
        .map(|space| Anticode {
            kind: SupportKind::Column,
            space,
        })
        .collect();
    if n == m && u > 0 && u < n {
        let rows: Vec<Anticode> = out
            .iter()
            .map(|a| Anticode {
                kind: SupportKind::Row,
                space: a.space.clone(),
            })
            .collect();
        out.extend(rows);
    }
    Ok(out)
}

/// Histograms of supported-subcode dimensions over all support spaces.
///
/// `column[u][d]` counts `u`-dimensional `U <= F_q^n` with `dim C(U) = d`;
/// `row[u][d]` does the same for `C[U]` and is present only when `n = m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportProfile {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub column: Vec<Vec<u64>>,
    pub row: Option<Vec<Vec<u64>>>,
}

fn add_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn scan(code: &RankMetricCode, kind: SupportKind, u: usize, budget: &Budget, mode: ExecMode) -> Result<Vec<u64>> {
    let e = enumerate_subspaces(code.q(), code.ambient_of(kind), u, budget.subspaces)?;
    let k = code.k();
    Ok(fold_range(
        mode,
        e.len(),
        || vec![0u64; k + 1],
        |mut h, i| {
            h[code.supported_dim_unchecked(kind, &e.nth(i))] += 1;
            h
        },
        add_hist,
    ))
}

impl SupportProfile {
    pub fn compute(code: &RankMetricCode, budget: &Budget) -> Result<Self> {
        Self::compute_with(code, budget, ExecMode::default())
    }

    pub fn compute_with(code: &RankMetricCode, budget: &Budget, mode: ExecMode) -> Result<Self> {
        let n = code.n();
        let column = (0..=n)
            .map(|u| scan(code, SupportKind::Column, u, budget, mode))
            .collect::<Result<Vec<_>>>()?;
        let row = if n == code.m() {
            Some(
                (0..=n)
                    .map(|u| scan(code, SupportKind::Row, u, budget, mode))
                    .collect::<Result<Vec<_>>>()?,
            )
        } else {
            None
        };
        Ok(SupportProfile {
            n,
            m: code.m(),
            k: code.k(),
            column,
            row,
        })
    }

    /// Largest `dim(C cap A)` over optimal anticodes with parameter `u`.
    pub fn max_meet(&self, u: usize) -> usize {
        let top = |h: &Vec<u64>| h.iter().rposition(|&c| c > 0).unwrap_or(0);
        let col = top(&self.column[u]);
        match &self.row {
            Some(r) => col.max(top(&r[u])),
            None => col,
        }
    }

    pub fn weights(&self) -> WeightTuple {
        let mut d = vec![0usize];
        for i in 1..=self.k {
            let u = (0..=self.n)
                .find(|&u| self.max_meet(u) >= i)
                .expect("C itself is supported on the full space");
            d.push(u);
        }
        WeightTuple { d }
    }
}

/// Generalized rank weights `(d_0, d_1, ..., d_k)` with `d_0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightTuple {
    d: Vec<usize>,
}

impl WeightTuple {
    /// Validate a tuple `d_0..d_k` against the bounds for an `n x m` code of dimension `k`.
    pub fn new(d: Vec<usize>, n: usize, m: usize) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidWeights(msg));
        if d.first() != Some(&0) {
            return bad("d_0 must be 0".into());
        }
        let k = d.len() - 1;
        if k > n * m {
            return bad(format!("{k} weights for a {n}x{m} space"));
        }
        for i in 1..=k {
            if d[i] < d[i - 1] {
                return bad(format!("d_{i} < d_{}", i - 1));
            }
            let lo = i.div_ceil(m);
            let hi = n - (k - i) / m;
            if d[i] < lo || d[i] > hi {
                return bad(format!("d_{i} = {} outside [{lo}, {hi}]", d[i]));
            }
            if i + m <= k && d[i] >= d[i + m] {
                return bad(format!("d_{i} >= d_{}", i + m));
            }
        }
        Ok(WeightTuple { d })
    }

    pub fn k(&self) -> usize {
        self.d.len() - 1
    }

    /// `d_i` for `0 <= i <= k`.
    pub fn get(&self, i: usize) -> usize {
        self.d[i]
    }

    /// `d_1..d_k`.
    pub fn nonzero(&self) -> &[usize] {
        &self.d[1..]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.d
    }
}

/// Generalized rank weights of `code`.
pub fn generalized_weights(code: &RankMetricCode, budget: &Budget) -> Result<WeightTuple> {
    Ok(SupportProfile::compute(code, budget)?.weights())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gflinalg::FieldSpec;
    use crate::rmcode::{CodeSpec, GeneratorMode};

    fn load(text: &str) -> RankMetricCode {
        CodeSpec::from_json(text).unwrap().build(GeneratorMode::Strict).unwrap()
    }

    fn c1() -> RankMetricCode {
        load(include_str!("../../../../fixtures/c1.json"))
    }

    #[test]
    fn weights_of_c1_and_dual() {
        let b = Budget::default();
        let c = c1();
        assert_eq!(generalized_weights(&c, &b).unwrap().nonzero(), &[1, 2, 2, 3, 3, 3]);
        assert_eq!(generalized_weights(&c.dual(), &b).unwrap().nonzero(), &[1, 2, 2, 3, 3, 3]);
        let c4 = load(include_str!("../../../../fixtures/c4.json"));
        assert_eq!(generalized_weights(&c4.dual(), &b).unwrap().nonzero(), &[1, 2, 3, 3, 3, 3]);
    }

    #[test]
    fn trivial_supports() {
        let c = c1();
        let f = c.field().clone();
        assert_eq!(c.supported_subcode_col(&Subspace::full(3)).unwrap(), c);
        assert_eq!(c.supported_subcode_col(&Subspace::zero(3)).unwrap().k(), 0);
        assert!(c.supported_subcode_col(&Subspace::full(4)).is_err());
        let z = RankMetricCode::zero(f.clone(), 3, 4).unwrap();
        assert_eq!(z.code_supports(), (Subspace::zero(3), Subspace::zero(4)));
        let mut e11 = FqMatrix::zeros(3, 4);
        e11.set(0, 0, 1);
        let d = crate::rmcode::make_code(f.clone(), 3, 4, &[e11], GeneratorMode::Strict).unwrap();
        let (cs, rs) = d.code_supports();
        assert!(cs.dim() == 1 && cs.contains(&f, &[1, 0, 0]));
        assert!(rs.dim() == 1 && rs.contains(&f, &[1, 0, 0, 0]));
    }

    #[test]
    fn b22_of_c1_from_column_supports() {
        let c = c1();
        let p = SupportProfile::compute(&c, &Budget::default()).unwrap();
        // sum over 2-dim U of [dim C(U), 2]_2
        let total: u64 = p.column[2]
            .iter()
            .enumerate()
            .map(|(d, &cnt)| cnt * crate::qcombinat::qbin(d as i64, 2, 2).to_integer().try_into().unwrap_or(0u64))
            .sum();
        assert_eq!(total, 13);
    }

    #[test]
    fn anticode_counts() {
        let b = Budget::default();
        assert_eq!(optimal_anticodes(3, 4, 2, 1, &b).unwrap().len(), 7);
        assert_eq!(optimal_anticodes(3, 3, 2, 0, &b).unwrap().len(), 1);
        let a = optimal_anticodes(3, 3, 2, 1, &b).unwrap();
        assert_eq!(a.len(), 14);
        let distinct: std::collections::HashSet<_> = a.iter().collect();
        assert_eq!(distinct.len(), 14);
    }

    #[test]
    fn weight_tuple_validation() {
        assert!(WeightTuple::new(vec![0, 1, 2, 2, 3, 3, 3], 3, 4).is_ok());
        assert!(WeightTuple::new(vec![1, 2], 3, 4).is_err());
        assert!(WeightTuple::new(vec![0, 2, 1], 3, 4).is_err());
        assert!(WeightTuple::new(vec![0, 1, 1, 1, 1, 1], 3, 4).is_err()); // d_1 = d_5
        let _ = FieldSpec::new(2).unwrap();
    }

    #[test]
    fn sequential_and_parallel_profiles_agree() {
        let c = c1().dual();
        let b = Budget::default();
        assert_eq!(
            SupportProfile::compute_with(&c, &b, ExecMode::Sequential).unwrap(),
            SupportProfile::compute_with(&c, &b, ExecMode::Parallel).unwrap()
        );
    }
}
