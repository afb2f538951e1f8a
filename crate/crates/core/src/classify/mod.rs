//! BMD and MRD-type predicates and the duality of weight hierarchies.

use crate::error::{Error, Result};
use crate::invariants::Analysis;
use crate::rmcode::WeightTuple;
use serde::{Deserialize, Serialize};

/// `n - d_perp - d_i < 0`, with `d_i = n + 1` for `i > k`.
pub fn is_i_bmd(a: &Analysis, i: usize) -> bool {
    (a.n() as i64) - (a.d_perp() as i64) - (a.d_i(i) as i64) < 0
}

/// Smallest `i` in `1..=max(k, 1)` with `is_i_bmd`, by binary search.
pub fn minimal_bmd_index(a: &Analysis) -> Option<usize> {
    let top = a.k().max(1);
    let (mut lo, mut hi) = (1usize, top + 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if is_i_bmd(a, mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    (lo <= top).then_some(lo)
}

/// `n - floor((k - i) / m)`.
pub fn mrd_bound(n: usize, m: usize, k: usize, i: usize) -> i64 {
    n as i64 - (k as i64 - i as i64).div_euclid(m as i64)
}

/// `d_i = n - floor((k - i) / m)`.
pub fn is_i_mrd(a: &Analysis, i: usize) -> bool {
    a.d_i(i) as i64 == mrd_bound(a.n(), a.m(), a.k(), i)
}

/// `k = m (n - d + 1)`.
pub fn is_mrd(a: &Analysis) -> bool {
    a.k() as i64 == a.m() as i64 * (a.n() as i64 - a.d() as i64 + 1)
}

/// `m` does not divide `k` and `d = n - ceil(k / m) + 1`.
pub fn is_qmrd(a: &Analysis) -> bool {
    a.k() % a.m() != 0 && a.d() == a.n() + 1 - a.k().div_ceil(a.m())
}

/// Both the code and its dual are QMRD.
pub fn is_dqmrd(a: &Analysis) -> bool {
    is_qmrd(a) && is_qmrd(&a.swapped())
}

/// The weights `d_1..d_k` forced on a DQMRD code of dimension `k = alpha m + rho`.
pub fn dqmrd_weight_ladder(n: usize, m: usize, k: usize) -> Vec<usize> {
    let (alpha, rho) = (k / m, k % m);
    (1..=k)
        .map(|i| {
            if i <= rho {
                n - alpha
            } else if alpha >= 1 && i >= rho + 1 + (alpha - 1) * m {
                n
            } else {
                let s = (i - rho - 1) / m;
                n + 1 + s - alpha
            }
        })
        .collect()
}

/// Weights of the dual code determined by those of the code:
/// `V_p(C_perp) = {1..n} \ {n + 1 - d_i : i = p + k mod m}` for `p = 1..m`.
pub fn wei_dual_weights(weights: &WeightTuple, n: usize, m: usize) -> Result<WeightTuple> {
    let w = WeightTuple::new(weights.as_slice().to_vec(), n, m)?;
    let k = w.k();
    let kd = n * m - k;
    let mut dual = vec![0usize; kd + 1];
    for p in 1..=m {
        let excluded: Vec<usize> = (1..=k)
            .filter(|&i| (i + m - (p + k) % m) % m == 0)
            .map(|i| n + 1 - w.get(i))
            .collect();
        let vp: Vec<usize> = (1..=n).filter(|x| !excluded.contains(x)).collect();
        let slots: Vec<usize> = (p..=kd).step_by(m).collect();
        if vp.len() != slots.len() {
            return Err(Error::InvalidWeights(format!(
                "residue class {p}: {} dual weights for {} indices",
                vp.len(),
                slots.len()
            )));
        }
        for (i, v) in slots.into_iter().zip(vp) {
            dual[i] = v;
        }
    }
    WeightTuple::new(dual, n, m)
}

/// All predicates for one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub alpha: usize,
    pub rho: usize,
    pub d: usize,
    pub d_perp: usize,
    pub weights: Vec<usize>,
    pub dual_weights: Vec<usize>,
    /// Indexed by `i = 0..=k`.
    pub bmd: Vec<bool>,
    /// Indexed by `i = 0..=k`.
    pub i_mrd: Vec<bool>,
    pub minimal_bmd: Option<usize>,
    pub mrd: bool,
    pub qmrd: bool,
    pub dqmrd: bool,
}

impl ClassificationReport {
    pub fn compute(a: &Analysis) -> Self {
        let k = a.k();
        ClassificationReport {
            n: a.n(),
            m: a.m(),
            k,
            alpha: k / a.m(),
            rho: k % a.m(),
            d: a.d(),
            d_perp: a.d_perp(),
            weights: a.weights.as_slice().to_vec(),
            dual_weights: a.dual_weights.as_slice().to_vec(),
            bmd: (0..=k).map(|i| is_i_bmd(a, i)).collect(),
            i_mrd: (0..=k).map(|i| is_i_mrd(a, i)).collect(),
            minimal_bmd: minimal_bmd_index(a),
            mrd: is_mrd(a),
            qmrd: is_qmrd(a),
            dqmrd: is_dqmrd(a),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Check the implications every code must satisfy; returns the violations.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 1..=self.k {
            if self.bmd[i] && !self.i_mrd[i] {
                out.push(format!("{i}-BMD but not {i}-MRD"));
            }
            if i < self.k && self.bmd[i] && !self.bmd[i + 1] {
                out.push(format!("{i}-BMD but not {}-BMD", i + 1));
            }
            if i + self.m <= self.k && self.i_mrd[i] && !self.i_mrd[i + self.m] {
                out.push(format!("{i}-MRD but not {}-MRD", i + self.m));
            }
        }
        if let Some(i) = self.minimal_bmd {
            if i >= 2 && i <= self.k && self.i_mrd[i - 1] {
                out.push(format!("minimally {i}-BMD but {}-MRD", i - 1));
            }
        }
        if self.k >= 1 && self.bmd[self.k] && self.weights[self.k] != self.n {
            out.push("k-BMD with d_k < n".into());
        }
        let ladder_ok = self.k % self.m != 0 && (1..=self.k).all(|i| self.i_mrd[i]);
        if self.dqmrd != ladder_ok {
            out.push("DQMRD status disagrees with the i-MRD characterization".into());
        }
        if self.dqmrd && self.weights[1..] != dqmrd_weight_ladder(self.n, self.m, self.k)[..] {
            out.push("DQMRD weights differ from the forced ladder".into());
        }
        out
    }
}
