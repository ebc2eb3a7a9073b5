#![allow(dead_code)]

use adk_core::cyclo::cyclotomic;
use adk_core::dring::{prime_witness_q, DElement, PrimeElementD};
use adk_core::{Field, Poly, Q};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

pub fn q(c: &[i64]) -> Poly<Q> {
    Poly::from_i64s(Q::new(), c)
}

pub fn elem(c: &[i64]) -> DElement<Q> {
    DElement::from_poly(q(c)).unwrap()
}

/// A random prime `g(X^(1/2^level))`, `g` monic of degree `<= 2`, level `<= 2`.
pub fn random_prime<R: Rng>(rng: &mut R) -> PrimeElementD {
    loop {
        let deg = rng.gen_range(1..=2);
        let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-6..=6)).collect();
        c.push(1);
        if c[0] == 0 {
            continue;
        }
        let g = q(&c);
        if prime_witness_q(&g).is_prime() {
            return PrimeElementD::new(rng.gen_range(0..=2), g).unwrap();
        }
    }
}

/// `c * X^(s/2^l)` with `l <= 3`.
pub fn random_unit<R: Rng>(rng: &mut R) -> DElement<Q> {
    let num = rng.gen_range(1..=9i64) * if rng.gen_bool(0.5) { -1 } else { 1 };
    let den = rng.gen_range(1..=5i64);
    let c = BigRational::new(BigInt::from(num), BigInt::from(den));
    DElement::unit(Q::new(), c, rng.gen_range(0..=3), rng.gen_range(-6..=6)).unwrap()
}

/// `Φ_d(X^(1/2^level))^k` with `d <= 15` odd, `k <= 3`, level `<= 1`.
pub fn random_odd_cyclotomic_power<R: Rng>(rng: &mut R) -> DElement<Q> {
    let d = 2 * rng.gen_range(0..8u64) + 1;
    let k = rng.gen_range(1..=3);
    DElement::at_level(rng.gen_range(0..=1), cyclotomic(d)).unwrap().pow(k)
}

/// Product of up to `np` random primes, up to `nc` odd cyclotomic powers and
/// a unit; also returns the primes used.
pub fn random_element<R: Rng>(
    rng: &mut R,
    np: usize,
    nc: usize,
) -> (DElement<Q>, Vec<PrimeElementD>) {
    let mut e = random_unit(rng);
    let mut primes = Vec::new();
    for _ in 0..rng.gen_range(0..=np) {
        let p = random_prime(rng);
        e = e.mul(&p.to_element());
        primes.push(p);
    }
    for _ in 0..rng.gen_range(0..=nc) {
        e = e.mul(&random_odd_cyclotomic_power(rng));
    }
    (e, primes)
}

pub fn one() -> BigRational {
    Q::new().one()
}

/// Primes where the exponent functions of the given factorizations can
/// differ: every listed finite prime and the first few members of each
/// family carrying a tail.
pub fn probe_primes(fs: &[&adk_core::dring::CanonicalFactorizationQ]) -> Vec<PrimeElementD> {
    let mut out: Vec<PrimeElementD> = Vec::new();
    let top = fs.iter().flat_map(|f| f.tails.iter().map(|t| t.root_level)).max().unwrap_or(0);
    for f in fs {
        out.extend(f.finite_primes.keys().cloned());
        for t in &f.tails {
            for i in 0..=top + 3 {
                out.push(PrimeElementD::cyclotomic(2 * t.d, i).unwrap());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
