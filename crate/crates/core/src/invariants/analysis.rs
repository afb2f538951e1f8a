use crate::budget::Budget;
use crate::error::Result;
use crate::par::ExecMode;
use crate::rmcode::{RankMetricCode, SupportProfile, WeightTuple};

/// A code together with its dual, support profiles and weight hierarchies.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub code: RankMetricCode,
    pub dual: RankMetricCode,
    pub profile: SupportProfile,
    pub dual_profile: SupportProfile,
    pub weights: WeightTuple,
    pub dual_weights: WeightTuple,
}

impl Analysis {
    pub fn new(code: &RankMetricCode, budget: &Budget) -> Result<Self> {
        Self::with_mode(code, budget, ExecMode::default())
    }

    pub fn with_mode(code: &RankMetricCode, budget: &Budget, mode: ExecMode) -> Result<Self> {
        let dual = code.dual();
        let profile = SupportProfile::compute_with(code, budget, mode)?;
        let dual_profile = SupportProfile::compute_with(&dual, budget, mode)?;
        Ok(Analysis {
            code: code.clone(),
            dual,
            weights: profile.weights(),
            dual_weights: dual_profile.weights(),
            profile,
            dual_profile,
        })
    }

    /// The same data with the roles of the code and its dual exchanged.
    pub fn swapped(&self) -> Analysis {
        Analysis {
            code: self.dual.clone(),
            dual: self.code.clone(),
            profile: self.dual_profile.clone(),
            dual_profile: self.profile.clone(),
            weights: self.dual_weights.clone(),
            dual_weights: self.weights.clone(),
        }
    }

    pub fn q(&self) -> u64 {
        self.code.q()
    }

    pub fn n(&self) -> usize {
        self.code.n()
    }

    pub fn m(&self) -> usize {
        self.code.m()
    }

    pub fn k(&self) -> usize {
        self.code.k()
    }

    /// `d_i` for `i <= k`, and `n + 1` beyond.
    pub fn d_i(&self, i: usize) -> usize {
        if i <= self.k() {
            self.weights.get(i)
        } else {
            self.n() + 1
        }
    }

    /// Minimum distance, `n + 1` for the zero code.
    pub fn d(&self) -> usize {
        self.d_i(1)
    }

    /// Minimum distance of the dual, `n + 1` when the dual is zero.
    pub fn d_perp(&self) -> usize {
        if self.dual.k() == 0 {
            self.n() + 1
        } else {
            self.dual_weights.get(1)
        }
    }
}
