//! Homogeneous ordinary Bell polynomials, evaluated at rational arguments.
//!
//! Values come from the power-series identity
//! `(sum_{j>=1} x_j x_0^(j-1) X^j)^b = sum_a P_{a,b} X^a`, unrolled as the
//! convolution `P_{a,b} = sum_{j=1}^{a-b+1} x_j x_0^(j-1) P_{a-j,b-1}`.

use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Table of `P_{a,b}(x)` for `0 <= b <= a <= max_a`.
#[derive(Debug, Clone, PartialEq)]
pub struct BellTable {
    args: Vec<BigRational>,
    values: Vec<Vec<BigRational>>,
}

impl BellTable {
    /// Evaluate every partial Bell polynomial up to `max_a`. Missing
    /// arguments are taken to be zero.
    pub fn new(args: &[BigRational], max_a: usize) -> Self {
        let mut x: Vec<BigRational> = args.iter().take(max_a + 1).cloned().collect();
        x.resize(max_a + 1, BigRational::zero());

        // weight[j] = x_j x_0^(j-1), j >= 1
        let mut weight = vec![BigRational::zero(); max_a + 1];
        let mut x0_pow = BigRational::one();
        for j in 1..=max_a {
            weight[j] = &x[j] * &x0_pow;
            x0_pow *= &x[0];
        }

        let mut values: Vec<Vec<BigRational>> = Vec::with_capacity(max_a + 1);
        for a in 0..=max_a {
            let mut row = vec![BigRational::zero(); a + 1];
            if a == 0 {
                row[0] = BigRational::one();
            }
            for b in 1..=a {
                let mut acc = BigRational::zero();
                for j in 1..=(a + 1 - b) {
                    let prev = &values[a - j];
                    if b - 1 < prev.len() && !weight[j].is_zero() {
                        acc += &weight[j] * &prev[b - 1];
                    }
                }
                row[b] = acc;
            }
            values.push(row);
        }
        Self { args: x, values }
    }

    pub fn max_a(&self) -> usize {
        self.values.len() - 1
    }

    pub fn args(&self) -> &[BigRational] {
        &self.args
    }

    /// `P_{a,b}`; zero when `b > a`.
    pub fn partial(&self, a: usize, b: usize) -> BigRational {
        self.values[a].get(b).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `P_a = sum_b P_{a,b}`.
    pub fn full(&self, a: usize) -> BigRational {
        self.values[a].iter().sum()
    }
}

/// The homogeneous ordinary partial Bell polynomial `P_{a,b}` at `x`.
pub fn bell_partial(a: usize, b: usize, x: &[BigRational]) -> Result<BigRational> {
    if b > a {
        return Err(Error::out_of_range("Bell index b must not exceed a", b as i64));
    }
    if a == 0 {
        return Ok(BigRational::one());
    }
    if b == 0 {
        return Ok(BigRational::zero());
    }
    let needed = a - b + 2;
    if x.len() < needed {
        return Err(Error::Arity { needed, got: x.len() });
    }
    Ok(BellTable::new(x, a).partial(a, b))
}

/// The homogeneous ordinary Bell polynomial `P_a` at `x` (needs `x_0..x_a`).
pub fn bell_full(a: usize, x: &[BigRational]) -> Result<BigRational> {
    if a == 0 {
        return Ok(BigRational::one());
    }
    if x.len() < a + 1 {
        return Err(Error::Arity { needed: a + 1, got: x.len() });
    }
    Ok(BellTable::new(x, a).full(a))
}
