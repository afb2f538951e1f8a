use crate::error::{Error, Result};
use serde::{Serialize, Serializer};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// The finite field `F_q`, `q = p^e <= 256`, with full operation tables.
///
/// Elements are encoded as integers `0..q`: the element `sum c_i x^i` of
/// `F_p[x]/(f)` is stored as `sum c_i p^i`. For `e > 1`, `f` is the first
/// monic primitive polynomial of degree `e` when the lower coefficients are
/// read as a base-`p` number `c_0 + c_1 p + ...` and scanned upwards.
pub struct FieldSpec {
    q: u64,
    p: u64,
    e: u32,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if !(2..=256).contains(&q) {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut e = 0;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn digits(v: u64, p: u64, e: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(e as usize);
    let mut v = v;
    for _ in 0..e {
        out.push(v % p);
        v /= p;
    }
    out
}

fn undigits(d: &[u64], p: u64) -> u64 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiply two encoded elements of `F_p[x]/(f)` without tables.
fn slow_mul(a: u64, b: u64, p: u64, e: u32, modulus: &[u64]) -> u64 {
    let (da, db) = (digits(a, p, e), digits(b, p, e));
    let e = e as usize;
    let mut prod = vec![0u64; 2 * e];
    for i in 0..e {
        for j in 0..e {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    // reduce by the monic modulus, highest degree first
    for deg in (e..2 * e).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (k, &mk) in modulus.iter().enumerate() {
            let idx = deg - e + k;
            prod[idx] = (prod[idx] + p * p - c * mk % p) % p;
        }
    }
    undigits(&prod[..e], p)
}

fn is_primitive(p: u64, e: u32, modulus: &[u64]) -> bool {
    let q = p.pow(e);
    if modulus[0] == 0 {
        return false;
    }
    let x = p; // encoding of the polynomial x
    let mut acc = 1u64;
    for step in 1..q {
        acc = slow_mul(acc, x, p, e, modulus);
        if acc == 1 {
            return step == q - 1;
        }
    }
    false
}

fn find_modulus(p: u64, e: u32) -> Vec<u64> {
    if e == 1 {
        return vec![0, 1];
    }
    let q = p.pow(e);
    for low in 0..q {
        let mut m = digits(low, p, e);
        m.push(1);
        if is_primitive(p, e, &m) {
            return m;
        }
    }
    unreachable!("a primitive polynomial of every degree exists")
}

impl FieldSpec {
    /// The field of order `q`. Fields are cached, so repeated calls are cheap.
    pub fn new(q: u64) -> Result<Arc<FieldSpec>> {
        static CACHE: OnceLock<Mutex<HashMap<u64, Arc<FieldSpec>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().expect("field cache poisoned").get(&q) {
            return Ok(f.clone());
        }
        let field = Arc::new(Self::build(q)?);
        cache
            .lock()
            .expect("field cache poisoned")
            .insert(q, field.clone());
        Ok(field)
    }

    fn build(q: u64) -> Result<FieldSpec> {
        let (p, e) = prime_power(q).ok_or(Error::InvalidField(q))?;
        let modulus = find_modulus(p, e);
        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..q {
            let da = digits(a, p, e);
            for b in 0..q {
                let db = digits(b, p, e);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&sum, p) as u8;
                mul[(a * q + b) as usize] = if e == 1 {
                    (a * b % p) as u8
                } else {
                    slow_mul(a, b, p, e, &modulus) as u8
                };
            }
        }
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..qs {
            neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).expect("additive inverse") as u8;
            if a != 0 {
                inv[a] = (1..qs)
                    .find(|&b| mul[a * qs + b] == 1)
                    .ok_or_else(|| Error::Inconsistent(format!("no inverse for {a} in F_{q}")))?
                    as u8;
            }
        }
        let field = FieldSpec {
            q,
            p,
            e,
            modulus: modulus.iter().map(|&c| c as u8).collect(),
            add,
            mul,
            neg,
            inv,
        };
        if q <= 16 {
            field.check_axioms()?;
        }
        Ok(field)
    }

    fn check_axioms(&self) -> Result<()> {
        let q = self.q as u8;
        for a in 0..q {
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::Inconsistent("field tables are not commutative".into()));
                }
                for c in 0..q {
                    let dist = self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c));
                    let assoc = self.mul(a, self.mul(b, c)) == self.mul(self.mul(a, b), c)
                        && self.add(a, self.add(b, c)) == self.add(self.add(a, b), c);
                    if !dist || !assoc {
                        return Err(Error::Inconsistent("field tables violate the axioms".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Coefficients `c_0..c_e` of the defining polynomial (monic).
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.q
    }

    /// `dst += c * src`, entrywise.
    #[inline]
    pub fn axpy(&self, dst: &mut [u8], c: u8, src: &[u8]) {
        if c == 0 {
            return;
        }
        if self.q == 2 {
            for (d, s) in dst.iter_mut().zip(src) {
                *d ^= s;
            }
            return;
        }
        let q = self.q as usize;
        let mrow = &self.mul[c as usize * q..(c as usize + 1) * q];
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = self.add[*d as usize * q + mrow[s as usize] as usize];
        }
    }

    /// `row *= c`.
    #[inline]
    pub fn scale(&self, row: &mut [u8], c: u8) {
        if c == 1 {
            return;
        }
        for x in row.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// Standard dot product.
    pub fn dot(&self, a: &[u8], b: &[u8]) -> u8 {
        a.iter()
            .zip(b)
            .fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("q", &self.q)
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FieldSpec", 4)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("e", &self.e)?;
        st.serialize_field("modulus", &self.modulus)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_prime_powers() {
        for q in [0, 1, 6, 10, 12, 257, 1000] {
            assert!(FieldSpec::new(q).is_err(), "q = {q}");
        }
    }

    #[test]
    fn all_small_fields_build() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 125, 128, 243, 256] {
            let f = FieldSpec::new(q).unwrap();
            assert_eq!(f.characteristic().pow(f.degree()), q);
            for a in 1..q as u8 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn gf4_modulus_and_table() {
        let f = FieldSpec::new(4).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]); // x^2 + x + 1
        // x * x = x + 1, encoded 2 * 2 = 3
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn gf256_modulus() {
        // x^8 + x^4 + x^3 + x^2 + 1 is the first primitive octic over F_2
        let f = FieldSpec::new(256).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1, 1, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn axpy_matches_scalar_ops() {
        let f = FieldSpec::new(9).unwrap();
        let mut dst = vec![1, 2, 3, 4];
        let src = vec![5, 6, 7, 8];
        let expect: Vec<u8> = dst.iter().zip(&src).map(|(&d, &s)| f.add(d, f.mul(4, s))).collect();
        f.axpy(&mut dst, 4, &src);
        assert_eq!(dst, expect);
    }
}
