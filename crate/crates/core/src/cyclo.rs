//! Cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Q;
use crate::numth;
use crate::poly::Poly;

type Table<V> = OnceLock<RwLock<HashMap<u64, V>>>;

static PHI: Table<Arc<Vec<BigInt>>> = OnceLock::new();
static INV_TOTIENT: Table<Arc<Vec<u64>>> = OnceLock::new();

fn memo<V: Clone>(table: &'static Table<V>, key: u64, make: impl FnOnce() -> V) -> V {
    let map = table.get_or_init(Default::default);
    if let Some(v) = map.read().expect("cache lock").get(&key) {
        return v.clone();
    }
    let v = make();
    map.write().expect("cache lock").entry(key).or_insert(v).clone()
}

/// Integer coefficients of `Φ_d`, low to high.
pub fn cyclotomic_coeffs(d: u64) -> Arc<Vec<BigInt>> {
    assert!(d >= 1, "cyclotomic index must be positive");
    memo(&PHI, d, || Arc::new(compute_phi(d)))
}

/// `Φ_d = prod_{e | d} (X^e - 1)^{μ(d/e)}`, multiplying first and then
/// dividing so every step stays in `Z[X]`.
fn compute_phi(d: u64) -> Vec<BigInt> {
    let divs = numth::divisors(d as u128);
    let mut acc = vec![BigInt::one()];
    for &e in &divs {
        if numth::mobius(d as u128 / e) == 1 {
            acc = mul_xe_minus_one(&acc, e as usize);
        }
    }
    for &e in &divs {
        if numth::mobius(d as u128 / e) == -1 {
            acc = div_xe_minus_one(&acc, e as usize);
        }
    }
    acc
}

fn mul_xe_minus_one(a: &[BigInt], e: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + e];
    for (i, c) in a.iter().enumerate() {
        out[i + e] += c;
        out[i] -= c;
    }
    out
}

fn div_xe_minus_one(a: &[BigInt], e: usize) -> Vec<BigInt> {
    // a = q * (X^e - 1): q_i = q_{i-e} - a_i, read from the low end
    let n = a.len() - e;
    let mut q = vec![BigInt::zero(); n];
    for i in 0..n {
        let prev = if i >= e { q[i - e].clone() } else { BigInt::zero() };
        q[i] = prev - &a[i];
    }
    q
}

/// `Φ_d` as a polynomial over `Q`.
pub fn cyclotomic(d: u64) -> Poly<Q> {
    Poly::from_bigints(&cyclotomic_coeffs(d))
}

/// All `d` with `φ(d) = m`, ascending (cached).
pub fn inverse_totient(m: u64) -> Arc<Vec<u64>> {
    memo(&INV_TOTIENT, m, || Arc::new(numth::inverse_totient_candidates(m)))
}

/// All `d` with `φ(d) <= n`, ordered by `(φ(d), d)`.
pub fn indices_up_to_degree(n: u64) -> Vec<u64> {
    (1..=n).flat_map(|m| inverse_totient(m).as_ref().clone()).collect()
}

/// Which case of `Φ_d(X^p)` applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerIdentity {
    /// `p ∤ d`: `Φ_d(X^p) = Φ_{pd}(X) Φ_d(X)`.
    Coprime { d: u64, p: u64 },
    /// `p | d`: `Φ_d(X^p) = Φ_{pd}(X)`.
    Divides { d: u64, p: u64 },
}

impl PowerIdentity {
    /// Indices of the right-hand side factors.
    pub fn factors(&self) -> Vec<u64> {
        match *self {
            PowerIdentity::Coprime { d, p } => vec![p * d, d],
            PowerIdentity::Divides { d, p } => vec![p * d],
        }
    }
}

/// The identity for `Φ_d(X^p)`, checked by exact multiplication.
pub fn cyclotomic_power_identity(d: u64, p: u64) -> Result<PowerIdentity> {
    if d == 0 {
        return Err(Error::InvalidArgument("cyclotomic index must be positive".into()));
    }
    if !numth::is_prime(p as u128)? {
        return Err(Error::NotPrime(p));
    }
    let id = if d % p == 0 {
        PowerIdentity::Divides { d, p }
    } else {
        PowerIdentity::Coprime { d, p }
    };
    let lhs = cyclotomic(d).compose_power(p as usize);
    let rhs = id
        .factors()
        .into_iter()
        .fold(Poly::one(Q::new()), |acc, e| &acc * &cyclotomic(e));
    assert_eq!(lhs, rhs, "cyclotomic identity failed for d={d}, p={p}");
    Ok(id)
}

/// The `d` with `f = Φ_d`, if any. Expects `f` monic.
pub fn detect_cyclotomic(f: &Poly<Q>) -> Option<u64> {
    let n = f.degree()?;
    if n == 0 {
        return None;
    }
    let c0 = f.constant_term();
    if !(c0.is_integer() && (c0.to_integer() == BigInt::one() || c0.to_integer() == -BigInt::one())) {
        return None;
    }
    let coeffs = f.to_bigints()?;
    inverse_totient(n as u64)
        .iter()
        .copied()
        .find(|&d| *cyclotomic_coeffs(d) == coeffs)
}
