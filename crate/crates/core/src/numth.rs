//! Elementary number theory on `u128`: factorization, totients, orders.
//!
//! Everything here is deterministic. Primality is decided by Miller-Rabin
//! over the first thirteen primes, which is exact below [`MR_LIMIT`]; larger
//! composites that survive trial division are rejected as unsupported.

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin with the first 13 prime bases is exact below this.
pub const MR_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

const TRIAL_LIMIT: u128 = 1_000_000;
const MR_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Prime factorization of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntFactorization {
    pub value: u128,
    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub factors: Vec<(u128, u32)>,
}

impl IntFactorization {
    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn product(&self) -> u128 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

pub fn mul_mod(a: u128, b: u128, n: u128) -> u128 {
    let (a, b) = (a % n, b % n);
    if n <= u64::MAX as u128 {
        return a * b % n;
    }
    let mut result = 0u128;
    let mut a = a;
    let mut b = b;
    while b > 0 {
        if b & 1 == 1 {
            result = add_mod(result, a, n);
        }
        a = add_mod(a, a, n);
        b >>= 1;
    }
    result
}

fn add_mod(a: u128, b: u128, n: u128) -> u128 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= n {
        s.wrapping_sub(n)
    } else {
        s
    }
}

pub fn pow_mod(base: u128, mut exp: u128, n: u128) -> u128 {
    if n == 1 {
        return 0;
    }
    let mut base = base % n;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Deterministic primality test; `Err(Unsupported)` above [`MR_LIMIT`].
pub fn is_prime(n: u128) -> Result<bool> {
    if n < 2 {
        return Ok(false);
    }
    for &p in &MR_BASES {
        if n == p {
            return Ok(true);
        }
        if n % p == 0 {
            return Ok(false);
        }
    }
    if n >= MR_LIMIT {
        return Err(Error::Unsupported(format!(
            "primality of {n} is beyond the deterministic Miller-Rabin range"
        )));
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Brent's variant of Pollard rho; returns a nontrivial factor of composite `n`.
fn brent_rho(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let step = |x: u128, c: u128| add_mod(mul_mod(x, x, n), c, n);
    for c in 1u128.. {
        let mut y = 2u128;
        let mut r = 1u64;
        let mut q = 1u128;
        let mut g = 1u128;
        let mut x = y;
        let mut ys = y;
        const BLOCK: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y, c);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..BLOCK.min(r - k) {
                    y = step(y, c);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BLOCK;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = step(ys, c);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn split_into(n: u128, out: &mut Vec<u128>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime(n)? {
        out.push(n);
        return Ok(());
    }
    let d = brent_rho(n);
    split_into(d, out)?;
    split_into(n / d, out)
}

/// Factors `n >= 1`: trial division up to 10^6, then Brent-Pollard rho.
pub fn factor_integer(n: u128) -> Result<IntFactorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let mut rest = n;
    let mut primes = Vec::new();
    let mut push = |p: u128, rest: &mut u128| {
        while *rest % p == 0 {
            *rest /= p;
            primes.push(p);
        }
    };
    push(2, &mut rest);
    let mut p = 3u128;
    while p <= TRIAL_LIMIT && p * p <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        if rest < TRIAL_LIMIT * TRIAL_LIMIT || p * p > rest {
            primes.push(rest);
        } else {
            split_into(rest, &mut primes)?;
        }
    }
    primes.sort_unstable();
    let mut factors: Vec<(u128, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(IntFactorization { value: n, factors })
}

fn factor_small(n: u128) -> IntFactorization {
    factor_integer(n).expect("factorization of a desk-scale integer")
}

pub fn euler_phi(n: u128) -> u128 {
    assert!(n >= 1, "euler_phi of 0");
    factor_small(n)
        .factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

pub fn mobius(n: u128) -> i8 {
    assert!(n >= 1, "mobius of 0");
    let f = factor_small(n);
    if f.factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Divisors of a factored integer, ascending.
pub fn divisors_of(f: &IntFactorization) -> Vec<u128> {
    let mut divs = vec![1u128];
    for &(p, e) in &f.factors {
        let len = divs.len();
        let mut pk = 1u128;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn divisors(n: u128) -> Vec<u128> {
    assert!(n >= 1, "divisors of 0");
    divisors_of(&factor_small(n))
}

/// Least `k >= 1` with `b^k = 1 (mod n)`, found by stripping prime factors
/// from the group order `phi(n)`.
pub fn multiplicative_order(b: u128, n: u128) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidArgument("modulus 0".into()));
    }
    if n == 1 {
        return Ok(1);
    }
    if gcd(b % n, n) != 1 {
        return Err(Error::NotCoprime(b, n));
    }
    let group = euler_phi(n);
    Ok(order_in_group(group, &factor_small(group), |e| {
        pow_mod(b, e, n) == 1
    }))
}

/// Order of an element in a cyclic-or-not group of known order, given a
/// predicate `is_identity_power(e)` for "x^e = 1".
pub fn order_in_group(
    group_order: u128,
    factored: &IntFactorization,
    mut is_identity_power: impl FnMut(u128) -> bool,
) -> u128 {
    let mut order = group_order;
    for &(p, e) in &factored.factors {
        for _ in 0..e {
            if order % p == 0 && is_identity_power(order / p) {
                order /= p;
            } else {
                break;
            }
        }
    }
    order
}

/// Totients of `0..=limit` by sieve (`phi[0]` is 0).
pub fn phi_table(limit: usize) -> Vec<u64> {
    let mut phi: Vec<u64> = (0..=limit as u64).collect();
    for i in 2..=limit {
        if phi[i] == i as u64 {
            let mut j = i;
            while j <= limit {
                phi[j] -= phi[j] / i as u64;
                j += i;
            }
        }
    }
    phi
}

/// All `d` with `phi(d) = m`, ascending. Uses `phi(d) >= sqrt(d/2)`, so
/// `d <= 2m^2 + 2` is an exhaustive search range.
pub fn inverse_totient_candidates(m: u64) -> Vec<u64> {
    assert!(m >= 1, "inverse totient of 0");
    let bound = (2 * (m as u128) * (m as u128) + 2) as usize;
    let phi = phi_table(bound);
    (1..=bound as u64).filter(|&d| phi[d as usize] == m).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(n: u128) -> u128 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u128
    }

    #[test]
    fn factor_examples() {
        assert!(factor_integer(1).unwrap().factors.is_empty());
        assert_eq!(factor_integer(80).unwrap().factors, vec![(2, 4), (5, 1)]);
        assert_eq!(factor_integer(3u128.pow(4) - 1).unwrap().factors, vec![(2, 4), (5, 1)]);
    }

    #[test]
    fn factor_beyond_trial_division() {
        let p = 1_000_000_007u128;
        let q = 998_244_353u128;
        let f = factor_integer(p * q * 4).unwrap();
        assert_eq!(f.factors, vec![(2, 2), (q, 1), (p, 1)]);
        let m61 = (1u128 << 61) - 1;
        assert_eq!(factor_integer(m61).unwrap().factors, vec![(m61, 1)]);
        let big = (1u128 << 89) - 1;
        assert!(matches!(factor_integer(big), Err(Error::Unsupported(_))));
        // 3^40 - 1
        let n = 3u128.pow(40) - 1;
        assert_eq!(factor_integer(n).unwrap().product(), n);
    }

    #[test]
    fn reconstruction_to_ten_thousand() {
        for n in 1..=10_000u128 {
            let f = factor_integer(n).unwrap();
            assert_eq!(f.product(), n);
            assert!(f.factors.windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.primes().all(|p| is_prime(p).unwrap()));
        }
    }

    #[test]
    fn phi_examples_and_brute_force() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(16), 8);
        assert_eq!(euler_phi(80), 32);
        let table = phi_table(2000);
        for n in 1..=2000u128 {
            let phi = euler_phi(n);
            assert_eq!(phi, brute_phi(n), "n = {n}");
            assert_eq!(phi as u64, table[n as usize]);
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(4), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(6), 1);
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        let brute: Vec<u128> = (1..=80).filter(|d| 80 % d == 0).collect();
        assert_eq!(divisors(80), brute);
        assert_eq!(divisors(80), vec![1, 2, 4, 5, 8, 10, 16, 20, 40, 80]);
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(1, 5).unwrap(), 1);
        assert_eq!(multiplicative_order(3, 16).unwrap(), 4);
        assert_eq!(multiplicative_order(3, 80).unwrap(), 4);
        assert_eq!(multiplicative_order(6, 9), Err(Error::NotCoprime(6, 9)));
    }

    #[test]
    fn order_matches_linear_scan_and_divides_phi() {
        for n in 2..300u128 {
            for b in 1..n {
                if gcd(b, n) != 1 {
                    continue;
                }
                let k = multiplicative_order(b, n).unwrap();
                let mut x = b % n;
                let mut scan = 1;
                while x != 1 {
                    x = x * b % n;
                    scan += 1;
                }
                assert_eq!(k, scan);
                assert_eq!(euler_phi(n) % k, 0);
            }
        }
    }

    #[test]
    fn inverse_totient_examples() {
        assert_eq!(inverse_totient_candidates(1), vec![1, 2]);
        assert_eq!(inverse_totient_candidates(2), vec![3, 4, 6]);
        assert_eq!(inverse_totient_candidates(4), vec![5, 8, 10, 12]);
    }

    #[test]
    fn inverse_totient_matches_scan() {
        let limit = 2 * 64 * 64 + 2;
        let brute: Vec<u128> = (0..=limit as u128)
            .map(|d| if d == 0 { 0 } else { brute_phi(d) })
            .collect();
        for m in 1..=64u64 {
            let bound = 2 * m * m + 2;
            let scan: Vec<u64> = (1..=bound)
                .filter(|&d| brute[d as usize] == m as u128)
                .collect();
            assert_eq!(inverse_totient_candidates(m), scan, "m = {m}");
        }
    }

    #[test]
    fn mul_mod_wide_modulus() {
        use num_bigint::BigUint;
        let n = (1u128 << 100) + 277;
        let a = (1u128 << 99) + 12345;
        let b = (1u128 << 127) + 999;
        let expect = BigUint::from(a) * BigUint::from(b) % BigUint::from(n);
        assert_eq!(BigUint::from(mul_mod(a, b, n)), expect);
        let e = 1_000_003u128;
        let expect = BigUint::from(a).modpow(&BigUint::from(e), &BigUint::from(n));
        assert_eq!(BigUint::from(pow_mod(a, e, n)), expect);
    }
}
