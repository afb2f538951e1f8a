use super::bell::BellTable;
use super::rational;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A power series in `T` known exactly modulo `T^(order+1)`.
///
/// Binary operations require both operands to carry the same order; use
/// [`TruncatedSeries::truncate`] to compare series of different orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    order: usize,
    #[serde(with = "rational::vec")]
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn new(order: usize, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![BigRational::one()])
    }

    /// `prod (1 - r_j T)` over the given ratios.
    pub fn linear_product(order: usize, ratios: &[BigRational]) -> Self {
        let mut acc = Self::one(order);
        for r in ratios {
            acc = acc.mul_linear(r);
        }
        acc
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, u: usize) -> &BigRational {
        &self.coeffs[u]
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    /// Re-truncate to a lower (or equal) order.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order {
            return Err(Error::OrderMismatch { left: self.order, right: order });
        }
        Ok(Self::new(order, self.coeffs[..=order].to_vec()))
    }

    /// Highest index with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.order,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.order,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self::new(n, out))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `(1 - r T)`.
    pub fn mul_linear(&self, r: &BigRational) -> Self {
        let mut out = self.coeffs.clone();
        for u in (1..=self.order).rev() {
            out[u] -= r * &self.coeffs[u - 1];
        }
        Self::new(self.order, out)
    }

    /// `1 / self` by long division.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::SingularSeries);
        }
        let inv0 = c0.recip();
        let mut y: Vec<BigRational> = Vec::with_capacity(self.order + 1);
        y.push(inv0.clone());
        for a in 1..=self.order {
            let mut acc = BigRational::zero();
            for j in 1..=a {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &y[a - j];
                }
            }
            y.push(-acc * &inv0);
        }
        Ok(Self::new(self.order, y))
    }

    /// `1 / self` through ordinary Bell polynomials:
    /// `1/S = (1/s_0) sum_a (1/s_0)^a P_a(s_0, -s_1, ..., -s_a) T^a`.
    pub fn reciprocal_bell(&self) -> Result<Self> {
        let s0 = &self.coeffs[0];
        if s0.is_zero() {
            return Err(Error::SingularSeries);
        }
        let inv0 = s0.recip();
        let args: Vec<BigRational> = std::iter::once(s0.clone())
            .chain(self.coeffs[1..].iter().map(|c| -c))
            .collect();
        let table = BellTable::new(&args, self.order);
        let mut scale = inv0.clone();
        let mut y = Vec::with_capacity(self.order + 1);
        for a in 0..=self.order {
            y.push(table.full(a) * &scale);
            scale *= &inv0;
        }
        Ok(Self::new(self.order, y))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.reciprocal()?)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (u, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            let c = rational::to_string(c);
            match u {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}T")?,
                _ => write!(f, "{c}T^{u}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(T^{})", self.order + 1)
    }
}
