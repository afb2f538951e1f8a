//! The bundled example codes `C1`..`C7` (binary, 3 x 4, dimensions 6 and 5).

use crate::error::{Error, Result};
use crate::rmcode::{CodeSpec, GeneratorMode, RankMetricCode};

const SOURCES: [(&str, &str); 8] = [
    ("c1", include_str!("../../../fixtures/c1.json")),
    ("c2", include_str!("../../../fixtures/c2.json")),
    ("c3", include_str!("../../../fixtures/c3.json")),
    ("c4", include_str!("../../../fixtures/c4.json")),
    ("c5", include_str!("../../../fixtures/c5.json")),
    ("c6", include_str!("../../../fixtures/c6.json")),
    ("c7", include_str!("../../../fixtures/c7.json")),
    ("zero_3x4", include_str!("../../../fixtures/zero_3x4.json")),
];

/// Names of all bundled fixtures.
pub fn names() -> Vec<&'static str> {
    SOURCES.iter().map(|(n, _)| *n).collect()
}

/// JSON text of a fixture, by name (case-insensitive).
pub fn source(name: &str) -> Option<&'static str> {
    let name = name.to_ascii_lowercase();
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Load a fixture by name.
pub fn load(name: &str) -> Result<RankMetricCode> {
    let text = source(name).ok_or_else(|| Error::Parse(format!("unknown fixture {name:?}")))?;
    CodeSpec::from_json(text)?.build(GeneratorMode::Strict)
}

/// `C_j` for `j = 1..=7`.
pub fn example(j: usize) -> RankMetricCode {
    load(&format!("c{j}")).expect("bundled fixture is valid")
}
