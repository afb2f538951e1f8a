//! Matrix rank-metric codes, their duals, supports and generalized weights.

mod code;
mod support;

pub use code::{make_code, CodeSpec, GeneratorMode, RankMetricCode};
pub use support::{generalized_weights, optimal_anticodes, Anticode, SupportKind, SupportProfile, WeightTuple};
