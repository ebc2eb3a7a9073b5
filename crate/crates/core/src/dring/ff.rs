//! Primes of `D` over a finite field `F_q`.
//!
//! Odd `q` uses the square-root tower: `f` is prime iff `f(X^4)` is
//! irreducible (path A), equivalently iff `4 | q^m - 1`, the order `n` of
//! `f` has `2n ∤ q^m - 1`, and `f` is a degree `ord_n(q)` factor of `Φ_n`
//! (path B). In characteristic `p` the `p`-th root tower is also available.

use crate::cyclo;
use crate::error::{Error, Result};
use crate::factor_ff::{factor_ff, is_irreducible_ff};
use crate::field::Field;
use crate::gf::Fq;
use crate::numth;
use crate::poly::Poly;

/// `(n, m, q^m - 1)` witnessing path B.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderCertificate {
    pub n: u128,
    pub m: u32,
    pub group_order: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeVerdictFF {
    pub is_prime: bool,
    pub path_a: bool,
    pub path_b: bool,
    pub certificate: Option<OrderCertificate>,
}

fn require_odd(field: &Fq) -> Result<()> {
    if field.p() == 2 {
        Err(Error::CharTwoUnsupported)
    } else {
        Ok(())
    }
}

/// Path A: `f(X^4)` irreducible.
pub fn prime_by_lift(f: &Poly<Fq>) -> bool {
    f.deg() > 0 && is_irreducible_ff(&f.compose_power(4))
}

/// Path B, using only powers of `X` modulo `f`.
pub fn prime_by_order(f: &Poly<Fq>) -> Result<Option<OrderCertificate>> {
    let m = f.deg() as u32;
    if m == 0 {
        return Ok(None);
    }
    let q = f.field().order() as u128;
    let group = q
        .checked_pow(m)
        .ok_or_else(|| Error::Unsupported(format!("{q}^{m} exceeds 128 bits")))?
        - 1;
    if group % 4 != 0 {
        return Ok(None);
    }
    let x = Poly::x(f.field().clone());
    let one = Poly::one(f.field().clone());
    if !x.powmod(group, f)?.is_one() {
        return Ok(None);
    }
    let fact = numth::factor_integer(group)?;
    let n = numth::order_in_group(group, &fact, |e| x.powmod(e, f).expect("nonzero").is_one());
    if group % (2 * n) == 0 || numth::multiplicative_order(q, n)? != m as u128 {
        return Ok(None);
    }
    // f | X^n - 1 already; f | Φ_n iff no root has smaller order
    for r in numth::factor_integer(n)?.primes() {
        let h = &x.powmod(n / r, f)? - &one;
        if !h.gcd(f)?.is_one() {
            return Ok(None);
        }
    }
    Ok(Some(OrderCertificate { n, m, group_order: group }))
}

/// Primality of `f` in `D` over `F_q`, `q` odd, by both criteria.
pub fn is_prime_ff(f: &Poly<Fq>) -> Result<PrimeVerdictFF> {
    require_odd(f.field())?;
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    if f.field().is_zero(&f.constant_term()) {
        return Err(Error::ZeroConstantTerm);
    }
    let f = f.monic();
    let path_a = prime_by_lift(&f);
    let certificate = prime_by_order(&f)?;
    let path_b = certificate.is_some();
    if path_a != path_b {
        return Err(Error::CriteriaDisagree(format!("{f}: lift {path_a}, order {path_b}")));
    }
    Ok(PrimeVerdictFF { is_prime: path_a, path_a, path_b, certificate })
}

fn odd_prime_power(q: u64) -> Result<()> {
    if q % 2 == 0 {
        return Err(Error::CharTwoUnsupported);
    }
    let fact = numth::factor_integer(q as u128)?;
    if q < 3 || fact.factors.len() != 1 {
        return Err(Error::InvalidArgument(format!("{q} is not a prime power")));
    }
    Ok(())
}

/// The `n` whose `Φ_n` factors supply the degree `m` primes.
fn qualifying_orders(q: u64, m: u32) -> Result<(u128, Vec<u128>)> {
    odd_prime_power(q)?;
    if m == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let group = (q as u128)
        .checked_pow(m)
        .ok_or_else(|| Error::Unsupported(format!("{q}^{m} exceeds 128 bits")))?
        - 1;
    if group % 4 != 0 {
        return Ok((group, Vec::new()));
    }
    let fact = numth::factor_integer(group)?;
    let mut out = Vec::new();
    for n in numth::divisors_of(&fact) {
        if group % (2 * n) != 0 && numth::multiplicative_order(q as u128, n)? == m as u128 {
            out.push(n);
        }
    }
    Ok((group, out))
}

/// Number of monic degree `m` polynomials over `F_q` that are prime in `D`.
pub fn count_primes_ff(q: u64, m: u32) -> Result<u128> {
    let (_, ns) = qualifying_orders(q, m)?;
    Ok(ns.iter().map(|&n| numth::euler_phi(n) / m as u128).sum())
}

/// The monic degree `m` primes of `D` over `field`, in canonical order.
pub fn enumerate_primes_ff(field: &Fq, m: u32) -> Result<Vec<Poly<Fq>>> {
    let (_, ns) = qualifying_orders(field.order(), m)?;
    let mut out = Vec::new();
    for n in ns {
        let n = u64::try_from(n).map_err(|_| Error::Unsupported(format!("Φ_{n}")))?;
        let coeffs = cyclo::cyclotomic_coeffs(n);
        let phi = Poly::new(field.clone(), coeffs.iter().map(|c| field.from_bigint(c)).collect());
        for (g, _) in factor_ff(&phi)?.factors {
            debug_assert_eq!(g.deg(), m as usize);
            out.push(g);
        }
    }
    out.sort_by(|a, b| a.cmp_canonical(b));
    Ok(out)
}

/// The `g` with `g(Z)^p = f(Z^p)`: each coefficient replaced by its `p`-th
/// root. `f` must be irreducible.
pub fn charp_pth_root_step(f: &Poly<Fq>) -> Result<Poly<Fq>> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    if f.field().is_zero(&f.constant_term()) {
        return Err(Error::ZeroConstantTerm);
    }
    if !is_irreducible_ff(f) {
        return Err(Error::NotIrreducible(f.to_string()));
    }
    let field = f.field().clone();
    let f = f.monic();
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| field.pth_root(c).expect("finite fields are perfect"))
        .collect();
    Ok(Poly::new(field, coeffs))
}

/// Whether `f` is a unit times a power of one irreducible.
pub fn charp_is_primary(f: &Poly<Fq>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    if f.deg() == 0 {
        return Ok(false);
    }
    Ok(factor_ff(f)?.distinct_count() == 1)
}
