//! Seeded random codes.

use crate::error::{Error, Result};
use crate::gflinalg::{FieldSpec, FqMatrix};
use crate::hamming::BlockCode;
use crate::rmcode::{make_code, GeneratorMode, RankMetricCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

/// Parameters of a random rank-metric code, written `n=3 m=3 k=4 q=2 seed=7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub q: u64,
    pub seed: u64,
}

impl FromStr for RandomSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (mut n, mut m, mut k, mut q, mut seed) = (None, None, None, None, None);
        for tok in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, found `{tok}`")))?;
            let v: u64 = val
                .parse()
                .map_err(|_| Error::Parse(format!("`{key}`: `{val}` is not a nonnegative integer")))?;
            let slot = match key {
                "n" => &mut n,
                "m" => &mut m,
                "k" => &mut k,
                "q" => &mut q,
                "seed" => &mut seed,
                _ => return Err(Error::Parse(format!("unknown key `{key}`"))),
            };
            *slot = Some(v);
        }
        let need = |v: Option<u64>, key: &str| v.ok_or_else(|| Error::Parse(format!("missing `{key}`")));
        Ok(RandomSpec {
            n: need(n, "n")? as usize,
            m: need(m, "m")? as usize,
            k: need(k, "k")? as usize,
            q: need(q, "q")?,
            seed: seed.unwrap_or(0),
        })
    }
}

impl fmt::Display for RandomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={} k={} q={} seed={}", self.n, self.m, self.k, self.q, self.seed)
    }
}

impl RandomSpec {
    pub fn build(&self) -> Result<RankMetricCode> {
        random_code(self.q, self.n, self.m, self.k, &mut ChaCha8Rng::seed_from_u64(self.seed))
    }
}

fn random_rows<R: Rng>(field: &FieldSpec, rows: usize, cols: usize, rng: &mut R) -> FqMatrix {
    loop {
        let data = (0..rows * cols).map(|_| rng.random_range(0..field.q()) as u8).collect();
        let mat = FqMatrix::from_flat(rows, cols, data).expect("length rows * cols");
        if mat.rank(field) == rows {
            return mat;
        }
    }
}

/// A uniformly random `k`-dimensional code in `F_q^{n x m}`.
pub fn random_code<R: Rng>(q: u64, n: usize, m: usize, k: usize, rng: &mut R) -> Result<RankMetricCode> {
    if k > n * m {
        return Err(Error::out_of_range(format!("dimension exceeds {n}*{m}"), k as i64));
    }
    let field = FieldSpec::new(q)?;
    let flat = random_rows(&field, k, n * m, rng);
    let gens: Vec<FqMatrix> = (0..k)
        .map(|t| FqMatrix::from_flat(n, m, flat.row(t).to_vec()).expect("row length nm"))
        .collect();
    make_code(field, n, m, &gens, GeneratorMode::Strict)
}

/// A uniformly random `[n, k]` block code over `F_q`.
pub fn random_block_code<R: Rng>(q: u64, n: usize, k: usize, rng: &mut R) -> Result<BlockCode> {
    if k > n {
        return Err(Error::out_of_range(format!("dimension exceeds length {n}"), k as i64));
    }
    let field = FieldSpec::new(q)?;
    let gens = random_rows(&field, k, n, rng);
    BlockCode::new(field, &gens)
}

/// A seeded generator for reproducible sampling.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        let s: RandomSpec = "n=3 m=3 k=4 q=2 seed=7".parse().unwrap();
        assert_eq!(s.to_string(), "n=3 m=3 k=4 q=2 seed=7");
        assert_eq!(s.build().unwrap(), s.build().unwrap());
        assert_eq!(s.build().unwrap().k(), 4);
        assert!("n=3 m=3 q=2".parse::<RandomSpec>().is_err());
        assert!("n=3 m=x k=1 q=2".parse::<RandomSpec>().is_err());
    }

    #[test]
    fn block_codes_have_requested_dimension() {
        let mut r = rng(1);
        for _ in 0..20 {
            let c = random_block_code(3, 6, 3, &mut r).unwrap();
            assert_eq!((c.n(), c.k()), (6, 3));
        }
    }
}
