//! Finite fields `F_p` and `F_{p^k}`.
//!
//! An element of `F_{p^k}` is a residue polynomial in `t` of degree `< k`,
//! packed into a `u64` as its base-`p` digit string (digit `i` is the
//! coefficient of `t^i`). For `k = 1` this is just the residue itself.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::numth;
use crate::poly::Poly;

#[derive(PartialEq, Eq)]
struct Inner {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, coefficients low to high, length `k + 1`.
    modulus: Vec<u64>,
}

/// The field with `q = p^k` elements and its canonical modulus.
#[derive(Clone)]
pub struct Fq(Arc<Inner>);

impl Fq {
    /// Builds `F_{p^k}` with the lexicographically least monic irreducible
    /// modulus (coefficient tuple `(c_{k-1}, ..., c_0)`); `X` for `k = 1`.
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !numth::is_prime(p as u128)? {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidArgument("extension degree must be positive".into()));
        }
        let q = p
            .checked_pow(k)
            .filter(|q| *q <= u32::MAX as u64)
            .ok_or_else(|| Error::Unsupported(format!("field of order {p}^{k}")))?;
        if k == 1 {
            if p > u32::MAX as u64 {
                return Err(Error::Unsupported(format!("prime {p} too large")));
            }
            return Ok(Fq(Arc::new(Inner { p, k, q, modulus: vec![0, 1] })));
        }
        let prime = Fq::new(p, 1)?;
        let k_us = k as usize;
        // index i enumerates (c_{k-1}, ..., c_0) with c_{k-1} most significant
        for idx in 0..q {
            let mut coeffs = vec![0u64; k_us + 1];
            let mut rest = idx;
            for c in coeffs.iter_mut().take(k_us) {
                *c = rest % p;
                rest /= p;
            }
            coeffs[k_us] = 1;
            if coeffs[0] == 0 {
                continue;
            }
            if has_no_low_degree_factor(&prime, &coeffs) {
                return Ok(Fq(Arc::new(Inner { p, k, q, modulus: coeffs })));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Modulus as a polynomial over the prime field.
    pub fn modulus(&self) -> Poly<Fq> {
        let prime = Fq::new(self.p(), 1).expect("prime subfield");
        Poly::new(prime, self.0.modulus.clone())
    }

    /// The element with encoding `i` (`i < q`).
    pub fn elem_from_index(&self, i: u64) -> u64 {
        assert!(i < self.0.q, "index out of range");
        i
    }

    /// The generator `t` (class of `X`); equals 0 in a prime field.
    pub fn generator(&self) -> u64 {
        if self.k() == 1 {
            0
        } else {
            self.p()
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.0.q
    }

    pub fn from_bigint(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.p())).to_u64().expect("residue fits")
    }

    pub fn frobenius(&self, a: &u64) -> u64 {
        self.pow(a, self.p() as u128)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: &u64) -> Result<u128> {
        if *a == 0 {
            return Err(Error::ZeroElement);
        }
        let group = (self.0.q - 1) as u128;
        let factored = numth::factor_integer(group)?;
        Ok(numth::order_in_group(group, &factored, |e| {
            self.pow(a, e) == 1
        }))
    }

    fn digits(&self, a: u64) -> Vec<u64> {
        let p = self.p();
        let mut a = a;
        (0..self.k())
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    fn pack(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p() + d)
    }

    fn digitwise(&self, a: u64, b: u64, op: impl Fn(u64, u64) -> u64) -> u64 {
        let (p, mut a, mut b) = (self.p(), a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k() {
            out += op(a % p, b % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }
}

/// True when `gcd(X^{p^i} - X, f) = 1` for `1 <= i <= deg f / 2`.
fn has_no_low_degree_factor(prime: &Fq, coeffs: &[u64]) -> bool {
    let f = Poly::new(prime.clone(), coeffs.to_vec());
    let x = Poly::x(prime.clone());
    let mut xp = x.clone();
    for _ in 0..f.deg() / 2 {
        xp = xp.powmod(prime.p() as u128, &f).expect("nonzero modulus");
        if !(&xp - &x).gcd(&f).expect("same field").is_one() {
            return false;
        }
    }
    true
}

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Fq {}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0.q)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0.q)
    }
}

/// Parses descriptors like `F3`, `F9`, `F25`.
impl FromStr for Fq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedField(s.to_string());
        let q: u64 = s
            .trim()
            .strip_prefix('F')
            .and_then(|n| n.parse().ok())
            .ok_or_else(bad)?;
        if q < 2 {
            return Err(bad());
        }
        let fact = numth::factor_integer(q as u128)?;
        match fact.factors.as_slice() {
            [(p, k)] => Fq::new(*p as u64, *k),
            _ => Err(bad()),
        }
    }
}

impl Field for Fq {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let p = self.p();
        if self.k() == 1 {
            return (a + b) % p;
        }
        self.digitwise(*a, *b, |x, y| (x + y) % p)
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        let p = self.p();
        if self.k() == 1 {
            return (a + p - b) % p;
        }
        self.digitwise(*a, *b, |x, y| (x + p - y) % p)
    }

    fn neg(&self, a: &u64) -> u64 {
        self.sub(&0, a)
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        let p = self.p();
        if self.k() == 1 {
            return a * b % p;
        }
        let (da, db) = (self.digits(*a), self.digits(*b));
        let k = self.k() as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let m = &self.0.modulus;
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                prod[i - k + j] = (prod[i - k + j] + (p - c) * m[j]) % p;
            }
            prod[i] = 0;
        }
        self.pack(&prod[..k])
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(a, (self.0.q - 2) as u128))
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p() as i64) as u64
    }

    fn characteristic(&self) -> u64 {
        self.p()
    }

    fn cmp_elems(&self, a: &u64, b: &u64) -> Ordering {
        a.cmp(b)
    }

    fn fmt_elem(&self, a: &u64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k() == 1 || *a == 0 {
            return write!(f, "{a}");
        }
        let mut first = true;
        for (i, d) in self.digits(*a).iter().enumerate().rev() {
            if *d == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, d) {
                (0, _) => write!(f, "{d}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "{d}*t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{d}*t^{i}")?,
            }
        }
        Ok(())
    }

    fn name(&self) -> String {
        format!("F{}", self.0.q)
    }

    fn is_atomic(&self, a: &u64) -> bool {
        self.k() == 1 || self.digits(*a).iter().filter(|d| **d != 0).count() <= 1
    }

    fn pth_root(&self, a: &u64) -> Option<u64> {
        Some(self.pow(a, (self.0.q / self.p()) as u128))
    }
}
