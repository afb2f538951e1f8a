//! Extended q-binomial coefficients and the identities they satisfy.

use super::rational::{big, int, pow_i, q_pow, sign};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Gaussian binomial `[a, b]_q` for `a >= b >= 0`, as an integer.
fn gaussian(a: i64, b: i64, q: &BigInt) -> BigInt {
    debug_assert!(a >= b && b >= 0);
    // [a, b] = [a, a - b]
    let b = b.min(a - b);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=b {
        num *= num_traits::pow(q.clone(), (a - i + 1) as usize) - 1;
        den *= num_traits::pow(q.clone(), i as usize) - 1;
    }
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero());
    quot
}

/// The extended q-binomial coefficient with an arbitrary (big) base.
///
/// * `b < 0`, or `0 <= a < b`: 0
/// * `b = 0`: 1
/// * `a >= b > 0`: the usual product formula
/// * `a < 0 < b`: `(-1)^b q^(ab - b(b-1)/2) [-a+b-1, b]`
pub fn qbin_big(a: i64, b: i64, q: &BigInt) -> BigRational {
    if b < 0 {
        return BigRational::zero();
    }
    if b == 0 {
        return BigRational::one();
    }
    if a >= 0 {
        if a < b {
            return BigRational::zero();
        }
        return big(gaussian(a, b, q));
    }
    let exp = a * b - b * (b - 1) / 2;
    sign(b) * pow_i(q, exp) * big(gaussian(-a + b - 1, b, q))
}

/// The extended q-binomial coefficient `[a, b]_q`.
pub fn qbin(a: i64, b: i64, q: u64) -> BigRational {
    qbin_big(a, b, &BigInt::from(q))
}

/// `[a, b]` with base `q^m`, written `[a, b]_{q^m}`.
pub fn qmbin(a: i64, b: i64, q: u64, m: usize) -> BigRational {
    qbin_big(a, b, &num_traits::pow(BigInt::from(q), m))
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `[a,b][b,c] = [a,c][a-c,a-b]` for `a, b, c >= 0`; vacuously true otherwise.
pub fn identity_product(a: i64, b: i64, c: i64, q: u64) -> bool {
    if a < 0 || b < 0 || c < 0 {
        return true;
    }
    qbin(a, b, q) * qbin(b, c, q) == qbin(a, c, q) * qbin(a - c, a - b, q)
}

/// The q-binomial theorem evaluated at the integers `x`, `y`:
/// `sum_j [c,j] (-1)^j q^(j choose 2) x^(c-j) y^j = prod_{j<c} (x - q^j y)`.
/// Vacuously true for `c < 0`.
pub fn identity_binomial_theorem(x: i64, y: i64, c: i64, q: u64) -> bool {
    if c < 0 {
        return true;
    }
    let (xr, yr) = (BigInt::from(x), BigInt::from(y));
    let lhs: BigRational = (0..=c)
        .map(|j| {
            qbin(c, j, q)
                * sign(j)
                * q_pow(q, binom2(j))
                * pow_i(&xr, c - j)
                * pow_i(&yr, j)
        })
        .sum();
    let rhs: BigRational = (0..c)
        .map(|j| int(x) - q_pow(q, j) * int(y))
        .product();
    lhs == rhs
}

/// Both forms of the q-Vandermonde convolution for `[a+b, c]`.
pub fn identity_vandermonde(a: i64, b: i64, c: i64, q: u64) -> bool {
    let target = qbin(a + b, c, q);
    if c < 0 {
        return target.is_zero();
    }
    let first: BigRational = (0..=c)
        .map(|j| q_pow(q, j * (b - c + j)) * qbin(a, j, q) * qbin(b, c - j, q))
        .sum();
    let second: BigRational = (0..=c)
        .map(|j| q_pow(q, (c - j) * (a - j)) * qbin(a, j, q) * qbin(b, c - j, q))
        .sum();
    first == target && second == target
}

/// True when all three q-binomial identities hold at `(a, b, c)`.
///
/// The binomial-theorem identity is evaluated with `a`, `b` as the two
/// numeric arguments.
pub fn qbin_identities_check(a: i64, b: i64, c: i64, q: u64) -> bool {
    identity_product(a, b, c, q)
        && identity_binomial_theorem(a, b, c, q)
        && identity_vandermonde(a, b, c, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(qbin(3, 1, 2), int(7));
        assert_eq!(qbin(6, 3, 2), int(1395));
        assert_eq!(qbin(-1, 1, 2), r(-1, 2));
        for a in 0..6 {
            assert_eq!(qbin(a, 0, 3), int(1));
            assert_eq!(qbin(a, a, 3), int(1));
        }
        assert_eq!(qbin(2, 3, 2), int(0));
        assert_eq!(qbin(4, -1, 2), int(0));
    }

    #[test]
    fn negative_top_matches_product_formula() {
        // For a < 0 the product formula still applies term by term.
        for q in [2u64, 3] {
            for a in -5..0 {
                for b in 1..4 {
                    let direct: BigRational = (1..=b)
                        .map(|i| {
                            (q_pow(q, a - i + 1) - int(1)) / (q_pow(q, i) - int(1))
                        })
                        .product();
                    assert_eq!(qbin(a, b, q), direct, "a={a} b={b} q={q}");
                }
            }
        }
    }

    #[test]
    fn identity_examples() {
        assert!(identity_product(5, 3, 2, 2));
        assert!(identity_vandermonde(2, 2, 2, 2));
        assert!(identity_binomial_theorem(7, -3, 0, 2));
        assert!(qbin_identities_check(3, 1, 2, 3));
    }

    #[test]
    fn qmbin_uses_power_base() {
        // [2,1]_{16} = 17
        assert_eq!(qmbin(2, 1, 2, 4), int(17));
    }
}
