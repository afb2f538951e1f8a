use super::rational::{self, int};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// A homogeneous polynomial of degree `n` in `X`, `Y`.
///
/// `coeffs[w]` multiplies `X^(n-w) Y^w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomogeneousPoly {
    degree: usize,
    #[serde(with = "rational::vec")]
    coeffs: Vec<BigRational>,
}

impl HomogeneousPoly {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            coeffs: vec![BigRational::zero(); degree + 1],
        }
    }

    /// `X^(n-w) Y^w`.
    pub fn monomial(degree: usize, w: usize) -> Self {
        let mut p = Self::zero(degree);
        p.coeffs[w] = BigRational::one();
        p
    }

    /// Build from coefficients ordered by ascending `Y` degree.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a homogeneous polynomial needs degree + 1 coefficients");
        Self {
            degree: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `X^(n-w) Y^w`.
    pub fn coeff(&self, w: usize) -> &BigRational {
        &self.coeffs[w]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let n = self.degree as i32;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(w, c)| c * num_traits::pow(x.clone(), (n - w as i32) as usize) * num_traits::pow(y.clone(), w))
            .sum()
    }

    /// Multiply by the linear form `a X + b Y`.
    pub fn mul_linear(&self, a: &BigRational, b: &BigRational) -> Self {
        let mut out = Self::zero(self.degree + 1);
        for (w, c) in self.coeffs.iter().enumerate() {
            out.coeffs[w] += c * a;
            out.coeffs[w + 1] += c * b;
        }
        out
    }
}

impl Add for &HomogeneousPoly {
    type Output = HomogeneousPoly;

    fn add(self, rhs: &HomogeneousPoly) -> HomogeneousPoly {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        HomogeneousPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &HomogeneousPoly {
    type Output = HomogeneousPoly;

    fn sub(self, rhs: &HomogeneousPoly) -> HomogeneousPoly {
        assert_eq!(self.degree, rhs.degree, "degree mismatch");
        HomogeneousPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &HomogeneousPoly {
    type Output = HomogeneousPoly;

    fn mul(self, rhs: &HomogeneousPoly) -> HomogeneousPoly {
        let mut out = HomogeneousPoly::zero(self.degree + rhs.degree);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Rendering such as `13XY^2 + 638Y^3`.
impl fmt::Display for HomogeneousPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = format!("{}{}", power("X", self.degree - w), power("Y", w));
            let mag = c.abs();
            let body = if mono.is_empty() {
                rational::to_string(&mag)
            } else if mag.is_one() {
                mono
            } else if mag.is_integer() {
                format!("{}{}", mag.numer(), mono)
            } else {
                format!("({}){}", rational::to_string(&mag), mono)
            };
            let neg = c.is_negative();
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl From<&[BigInt]> for HomogeneousPoly {
    fn from(v: &[BigInt]) -> Self {
        Self::from_coeffs(v.iter().cloned().map(BigRational::from_integer).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_notation() {
        assert_eq!(HomogeneousPoly::from_ints(&[0, 0, 13, 638]).to_string(), "13XY^2 + 638Y^3");
        assert_eq!(HomogeneousPoly::from_ints(&[1, -7, 14, -8]).to_string(), "X^3 - 7X^2Y + 14XY^2 - 8Y^3");
        assert_eq!(HomogeneousPoly::zero(2).to_string(), "0");
        let frac = HomogeneousPoly::from_coeffs(vec![int(0), BigRational::new((-13).into(), 7.into())]);
        assert_eq!(frac.to_string(), "-(13/7)Y");
        assert_eq!(HomogeneousPoly::from_ints(&[5]).to_string(), "5");
    }

    #[test]
    fn products() {
        // (X - Y)(X - 2Y) = X^2 - 3XY + 2Y^2
        let a = HomogeneousPoly::from_ints(&[1, -1]);
        let b = HomogeneousPoly::from_ints(&[1, -2]);
        assert_eq!(&a * &b, HomogeneousPoly::from_ints(&[1, -3, 2]));
        assert_eq!(a.mul_linear(&int(1), &int(-2)), &a * &b);
        assert_eq!((&a * &b).eval(&int(3), &int(1)), int(2));
    }

    #[test]
    fn json_shape() {
        let p = HomogeneousPoly::from_coeffs(vec![int(1), BigRational::new(1.into(), 2.into())]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"degree":1,"coeffs":["1","1/2"]}"#);
        let back: HomogeneousPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }
}
