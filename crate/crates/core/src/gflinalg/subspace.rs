use super::field::FieldSpec;
use super::matrix::FqMatrix;
use crate::budget;
use crate::error::{Error, Result};
use crate::qcombinat::qbin;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// A subspace of `F_q^ambient`, stored by its canonical RREF basis.
///
/// Equality, hashing and ordering are those of the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subspace {
    basis: FqMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            basis: FqMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            basis: FqMatrix::identity(ambient),
        }
    }

    /// The span of the rows of `m`.
    pub fn span(field: &FieldSpec, m: &FqMatrix) -> Self {
        let r = m.rref(field);
        let keep: Vec<usize> = (0..r.rank).collect();
        Subspace {
            basis: r.matrix.select_rows(&keep),
        }
    }

    /// Wrap a basis already in canonical RREF.
    pub(crate) fn from_rref_unchecked(basis: FqMatrix) -> Self {
        Subspace { basis }
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }

    pub fn contains(&self, field: &FieldSpec, v: &[u8]) -> bool {
        let single = FqMatrix::from_flat(1, v.len(), v.to_vec()).expect("vector shape");
        self.basis.stack(&single).is_ok_and(|s| s.rank(field) == self.dim())
    }

    pub fn is_subspace_of(&self, field: &FieldSpec, other: &Subspace) -> bool {
        self.ambient() == other.ambient()
            && other
                .basis
                .stack(&self.basis)
                .is_ok_and(|s| s.rank(field) == other.dim())
    }

    /// `{x : <x, u> = 0 for all u}` under the standard dot product.
    pub fn orthogonal_complement(&self, field: &FieldSpec) -> Subspace {
        Subspace::span(field, &self.basis.null_space(field))
    }

    pub fn sum(&self, field: &FieldSpec, other: &Subspace) -> Result<Subspace> {
        Ok(Subspace::span(field, &self.basis.stack(&other.basis)?))
    }

    pub fn intersection(&self, field: &FieldSpec, other: &Subspace) -> Result<Subspace> {
        let s = self
            .orthogonal_complement(field)
            .sum(field, &other.orthogonal_complement(field))?;
        Ok(s.orthogonal_complement(field))
    }
}

/// Row space of `m`, a subspace of `F_q^cols`.
pub fn row_space(field: &FieldSpec, m: &FqMatrix) -> Subspace {
    Subspace::span(field, m)
}

/// Column space of `m`, a subspace of `F_q^rows`.
pub fn col_space(field: &FieldSpec, m: &FqMatrix) -> Subspace {
    Subspace::span(field, &m.transpose())
}

#[derive(Clone, Debug)]
struct Pattern {
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    offset: u64,
}

/// All `dim`-dimensional subspaces of `F_q^ambient`, addressable by index.
///
/// Order: pivot sets lexicographically, then the free RREF entries read as
/// base-`q` digits with the first free entry most significant.
#[derive(Clone, Debug)]
pub struct SubspaceEnumeration {
    q: u64,
    ambient: usize,
    dim: usize,
    patterns: Vec<Pattern>,
    total: u64,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

impl SubspaceEnumeration {
    pub fn new(q: u64, ambient: usize, dim: usize, cap: u64) -> Result<Self> {
        if dim > ambient {
            return Err(Error::out_of_range(
                format!("subspace dimension must be at most {ambient}"),
                dim as i64,
            ));
        }
        let count = qbin(ambient as i64, dim as i64, q);
        budget::check("subspaces", count.numer(), cap)?;
        let mut patterns = Vec::new();
        let mut offset = 0u64;
        for pivots in combinations(ambient, dim) {
            let mut free = Vec::new();
            for (r, &p) in pivots.iter().enumerate() {
                for c in p + 1..ambient {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let size = q.pow(free.len() as u32);
            patterns.push(Pattern {
                pivots,
                free,
                offset,
            });
            offset += size;
        }
        debug_assert_eq!(BigInt::from(offset), *count.numer());
        Ok(SubspaceEnumeration {
            q,
            ambient,
            dim,
            patterns,
            total: offset,
        })
    }

    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The subspace at position `idx < len()`.
    pub fn nth(&self, idx: u64) -> Subspace {
        assert!(idx < self.total, "subspace index out of range");
        let pi = self.patterns.partition_point(|p| p.offset <= idx) - 1;
        let pat = &self.patterns[pi];
        let mut m = FqMatrix::zeros(self.dim, self.ambient);
        for (r, &c) in pat.pivots.iter().enumerate() {
            m.set(r, c, 1);
        }
        let mut rest = idx - pat.offset;
        for &(r, c) in pat.free.iter().rev() {
            m.set(r, c, (rest % self.q) as u8);
            rest /= self.q;
        }
        Subspace::from_rref_unchecked(m)
    }

    pub fn iter(&self) -> impl Iterator<Item = Subspace> + '_ {
        (0..self.total).map(move |i| self.nth(i))
    }
}

/// Stream every `u`-dimensional subspace of `F_q^ambient` once, in canonical order.
pub fn enumerate_subspaces(q: u64, ambient: usize, u: usize, cap: u64) -> Result<SubspaceEnumeration> {
    SubspaceEnumeration::new(q, ambient, u, cap)
}
