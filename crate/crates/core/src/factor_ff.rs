//! Factorization over finite fields and polynomial orders.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gf::Fq;
use crate::numth;
use crate::poly::Poly;

/// `leading_unit * prod f_i^m_i`, factors monic irreducible and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FFFactorization {
    pub leading_unit: u64,
    pub factors: Vec<(Poly<Fq>, usize)>,
}

impl FFFactorization {
    pub fn reconstruct(&self, field: &Fq) -> Poly<Fq> {
        self.factors.iter().fold(
            Poly::constant(field.clone(), self.leading_unit),
            |acc, (g, m)| &acc * &g.pow(*m as u32),
        )
    }

    /// Total number of irreducible factors counted without multiplicity.
    pub fn distinct_count(&self) -> usize {
        self.factors.len()
    }
}

/// Complete factorization of a nonzero polynomial.
pub fn factor_ff(f: &Poly<Fq>) -> Result<FFFactorization> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot factor the zero polynomial".into()));
    }
    let mut factors = Vec::new();
    for (g, m) in f.squarefree_decomposition() {
        for (h, d) in distinct_degree(&g) {
            for irred in equal_degree(&h, d) {
                factors.push((irred, m));
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp_canonical(&b.0).then(a.1.cmp(&b.1)));
    Ok(FFFactorization { leading_unit: f.leading_coeff(), factors })
}

/// `X^{q^i} mod f` for `i = 1, 2, ...`, by repeated exponentiation.
fn frobenius_iter(f: &Poly<Fq>) -> impl Iterator<Item = Poly<Fq>> + '_ {
    let q = f.field().order() as u128;
    let x = Poly::x(f.field().clone());
    std::iter::successors(Some(x), move |h| Some(h.powmod(q, f).expect("nonzero modulus"))).skip(1)
}

/// Splits a monic squarefree polynomial into products of irreducibles of
/// equal degree, tagged with that degree.
fn distinct_degree(f: &Poly<Fq>) -> Vec<(Poly<Fq>, usize)> {
    let field = f.field().clone();
    let q = field.order() as u128;
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut i = 0;
    while rest.deg() >= 2 * (i + 1) {
        i += 1;
        h = h.powmod(q, &rest).expect("nonzero modulus");
        let g = (&h - &x).gcd(&rest).expect("same field");
        if g.deg() > 0 {
            rest = rest.div_exact(&g).unwrap().expect("gcd divides");
            h = h.rem(&rest).expect("nonzero modulus");
            out.push((g, i));
        }
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn seeded_rng(f: &Poly<Fq>) -> ChaCha8Rng {
    let mut hasher = DefaultHasher::new();
    f.field().name().hash(&mut hasher);
    f.hash(&mut hasher);
    ChaCha8Rng::seed_from_u64(hasher.finish())
}

/// Cantor-Zassenhaus: splits a monic squarefree product of irreducibles of
/// degree `d` into its factors.
fn equal_degree(f: &Poly<Fq>, d: usize) -> Vec<Poly<Fq>> {
    let n = f.deg();
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field().clone();
    let q = field.order();
    let mut rng = seeded_rng(f);
    loop {
        let coeffs = (0..n).map(|_| rng.gen_range(0..q)).collect();
        let a = Poly::new(field.clone(), coeffs);
        if a.deg() == 0 {
            continue;
        }
        let b = split_candidate(&a, f, d);
        let g = b.gcd(f).expect("same field");
        if g.deg() > 0 && g.deg() < n {
            let other = f.div_exact(&g).unwrap().expect("gcd divides");
            let mut out = equal_degree(&g, d);
            out.extend(equal_degree(&other, d));
            return out;
        }
    }
}

/// Odd `q`: `a^{(q^d - 1)/2} - 1`, computed as `N(a)^{(q-1)/2} - 1` with
/// `N(a) = a^{1 + q + ... + q^{d-1}}`. Even `q`: the absolute trace of `a`.
fn split_candidate(a: &Poly<Fq>, f: &Poly<Fq>, d: usize) -> Poly<Fq> {
    let field = f.field();
    let q = field.order() as u128;
    if field.p() == 2 {
        let mut term = a.rem(f).expect("nonzero");
        let mut acc = term.clone();
        for _ in 1..(field.k() as usize * d) {
            term = term.mulmod(&term, f).expect("nonzero");
            acc = &acc + &term;
        }
        return acc;
    }
    let mut conj = a.rem(f).expect("nonzero");
    let mut norm = conj.clone();
    for _ in 1..d {
        conj = conj.powmod(q, f).expect("nonzero");
        norm = norm.mulmod(&conj, f).expect("nonzero");
    }
    &norm.powmod((q - 1) / 2, f).expect("nonzero") - &Poly::one(field.clone())
}

/// Rabin's test.
pub fn is_irreducible_ff(f: &Poly<Fq>) -> bool {
    let n = f.deg();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = f.monic();
    let x = Poly::x(f.field().clone());
    let powers: Vec<Poly<Fq>> = frobenius_iter(&f).take(n).collect();
    if powers[n - 1] != x {
        return false;
    }
    let fact = numth::factor_integer(n as u128).expect("small integer");
    let irreducible = fact.primes().all(|l| {
        let h = &powers[n / l as usize - 1];
        (h - &x).gcd(&f).expect("same field").is_one()
    });
    irreducible
}

/// Order of `f`: least `n` with `f | X^n - 1`.
pub fn poly_order(f: &Poly<Fq>) -> Result<u128> {
    if f.is_zero() || f.field().is_zero(&f.constant_term()) {
        return Err(Error::ZeroConstantTerm);
    }
    if !is_irreducible_ff(f) {
        return Err(Error::NotIrreducible(f.to_string()));
    }
    let f = f.monic();
    let m = f.deg() as u32;
    let group = (f.field().order() as u128)
        .checked_pow(m)
        .ok_or_else(|| Error::Unsupported(format!("order of degree {m} polynomial")))?
        - 1;
    let fact = numth::factor_integer(group)?;
    let x = Poly::x(f.field().clone());
    Ok(numth::order_in_group(group, &fact, |e| {
        x.powmod(e, &f).expect("nonzero").is_one()
    }))
}

/// Number of monic irreducible polynomials of degree `m` over `F_q`.
pub fn count_irreducible(q: u128, m: u32) -> Result<u128> {
    if m == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let overflow = || Error::Unsupported(format!("{q}^{m} exceeds 128 bits"));
    let mut total: i128 = 0;
    for d in numth::divisors(m as u128) {
        let mu = numth::mobius(d);
        if mu == 0 {
            continue;
        }
        let term = q.checked_pow(m / d as u32).ok_or_else(overflow)?;
        let term = i128::try_from(term).map_err(|_| overflow())?;
        total += mu as i128 * term;
    }
    Ok(total as u128 / m as u128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f3() -> Fq {
        Fq::new(3, 1).unwrap()
    }

    fn p3(c: &[i64]) -> Poly<Fq> {
        Poly::from_i64s(f3(), c)
    }

    /// Coefficients from the highest power down, as printed.
    fn p3_hi(c: &[i64]) -> Poly<Fq> {
        let mut v = c.to_vec();
        v.reverse();
        p3(&v)
    }

    fn phi80_mod3() -> Poly<Fq> {
        let mut c = vec![0i64; 33];
        for (i, s) in [(0, 1), (8, -1), (16, 1), (24, -1), (32, 1)] {
            c[i] = s;
        }
        p3(&c)
    }

    #[test]
    fn factor_examples() {
        let fact = factor_ff(&p3_hi(&[1, 0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            fact.factors,
            vec![(p3_hi(&[1, 0, 1, 0, 2]), 1), (p3_hi(&[1, 0, 2, 0, 2]), 1)]
        );
        let fact = factor_ff(&p3(&[-1, 0, 1])).unwrap();
        assert_eq!(fact.factors, vec![(p3(&[1, 1]), 1), (p3(&[2, 1]), 1)]);
    }

    #[test]
    fn phi80_splits_into_listed_quartics() {
        let listed = [
            [1, 0, 0, 1, 2],
            [1, 0, 0, 2, 2],
            [1, 1, 0, 0, 2],
            [1, 1, 1, 2, 2],
            [1, 1, 2, 2, 2],
            [1, 2, 0, 0, 2],
            [1, 2, 1, 1, 2],
            [1, 2, 2, 1, 2],
        ];
        let expected: Vec<(Poly<Fq>, usize)> = listed.iter().map(|c| (p3_hi(c), 1)).collect();
        let fact = factor_ff(&phi80_mod3()).unwrap();
        assert_eq!(fact.factors, expected);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible_ff(&p3_hi(&[1, 0, 0, 1, 2])));
        assert!(!is_irreducible_ff(&p3(&[-1, 0, 1])));
        assert!(is_irreducible_ff(&p3_hi(&[1, 0, 1, 1, 1])));
    }

    #[test]
    fn order_examples() {
        assert_eq!(poly_order(&p3(&[1, 1])).unwrap(), 2);
        assert_eq!(poly_order(&p3(&[2, 1])).unwrap(), 1);
        assert_eq!(poly_order(&p3_hi(&[1, 0, 0, 1, 2])).unwrap(), 80);
        assert_eq!(poly_order(&p3(&[0, 1])), Err(Error::ZeroConstantTerm));
        assert!(matches!(poly_order(&p3(&[-1, 0, 1])), Err(Error::NotIrreducible(_))));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_irreducible(3, 1).unwrap(), 3);
        assert_eq!(count_irreducible(3, 4).unwrap(), 18);
        assert_eq!(count_irreducible(2, 3).unwrap(), 2);
    }

    fn monics(field: &Fq, m: usize) -> impl Iterator<Item = Poly<Fq>> + '_ {
        let q = field.order();
        (0..q.pow(m as u32)).map(move |idx| {
            let mut c = vec![0u64; m + 1];
            let mut r = idx;
            for x in c.iter_mut().take(m) {
                *x = r % q;
                r /= q;
            }
            c[m] = 1;
            Poly::new(field.clone(), c)
        })
    }

    /// Irreducible iff no monic factor of degree `1..=m/2` divides it.
    fn brute_irreducible(field: &Fq, f: &Poly<Fq>) -> bool {
        (1..=f.deg() / 2).all(|d| monics(field, d).all(|g| !f.rem(&g).unwrap().is_zero()))
    }

    #[test]
    fn exhaustive_counts_over_f3() {
        let field = f3();
        for m in 1..=4 {
            let fast = monics(&field, m).filter(is_irreducible_ff).count() as u128;
            let brute = monics(&field, m).filter(|f| brute_irreducible(&field, f)).count() as u128;
            assert_eq!(fast, brute);
            assert_eq!(fast, count_irreducible(3, m as u32).unwrap());
        }
        let f2 = Fq::new(2, 1).unwrap();
        let brute = monics(&f2, 3).filter(|f| brute_irreducible(&f2, f)).count() as u128;
        assert_eq!(brute, count_irreducible(2, 3).unwrap());
    }

    #[test]
    fn orders_divide_group_order() {
        let field = Fq::new(3, 2).unwrap();
        for m in 1..=3 {
            for f in monics(&field, m).filter(is_irreducible_ff) {
                if field.is_zero(&f.constant_term()) {
                    continue;
                }
                let n = poly_order(&f).unwrap();
                assert_eq!((9u128.pow(m as u32) - 1) % n, 0);
                assert_eq!(numth::multiplicative_order(9, n).unwrap(), m as u128);
            }
        }
    }

    /// Φ_n via X^n - 1 divided by Φ_e for proper divisors, over the field.
    fn cyclotomic_over(field: &Fq, n: usize, cache: &mut Vec<Option<Poly<Fq>>>) -> Poly<Fq> {
        if let Some(Some(p)) = cache.get(n) {
            return p.clone();
        }
        let mut num = Poly::monomial(field.clone(), 1, n);
        num = &num - &Poly::one(field.clone());
        for e in 1..n {
            if n % e == 0 {
                let phi = cyclotomic_over(field, e, cache);
                num = num.div_exact(&phi).unwrap().unwrap();
            }
        }
        if cache.len() <= n {
            cache.resize(n + 1, None);
        }
        cache[n] = Some(num.clone());
        num
    }

    #[test]
    fn cyclotomic_consistency() {
        for desc in ["F3", "F5", "F7", "F9"] {
            let field: Fq = desc.parse().unwrap();
            let q = field.order() as u128;
            let mut cache = Vec::new();
            for n in 1..=100usize {
                let phi = cyclotomic_over(&field, n, &mut cache);
                if numth::gcd(q, n as u128) != 1 {
                    continue;
                }
                let d = numth::multiplicative_order(q, n as u128).unwrap() as usize;
                let fact = factor_ff(&phi).unwrap();
                let count = numth::euler_phi(n as u128) as usize / d;
                assert_eq!(fact.factors.len(), count, "{desc} n={n}");
                assert!(fact.factors.iter().all(|(g, m)| g.deg() == d && *m == 1));
                assert_eq!(fact.reconstruct(&field), phi);
            }
        }
    }

    fn fields() -> Vec<Fq> {
        ["F3", "F5", "F7", "F9"].iter().map(|s| s.parse().unwrap()).collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn factor_reconstructs(which in 0usize..4, raw in prop::collection::vec(0u64..100, 2..=25)) {
            let field = &fields()[which];
            let coeffs = raw.iter().map(|c| c % field.order()).collect();
            let f = Poly::new(field.clone(), coeffs);
            prop_assume!(!f.is_zero());
            let fact = factor_ff(&f).unwrap();
            prop_assert_eq!(fact.reconstruct(field), f);
            for (g, _) in &fact.factors {
                prop_assert!(g.is_monic());
                prop_assert!(is_irreducible_ff(g));
            }
            for w in fact.factors.windows(2) {
                prop_assert!(w[0].0.cmp_canonical(&w[1].0).is_lt());
            }
        }

        #[test]
        fn factor_is_deterministic(raw in prop::collection::vec(0u64..9, 2..=16)) {
            let field: Fq = "F9".parse().unwrap();
            let f = Poly::new(field, raw);
            prop_assume!(!f.is_zero());
            prop_assert_eq!(factor_ff(&f).unwrap(), factor_ff(&f).unwrap());
        }
    }
}
