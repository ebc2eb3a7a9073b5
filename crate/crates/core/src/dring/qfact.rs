//! Primality and the canonical countable factorization over `Q`.
//!
//! A nonzero nonunit of `D` over `Q` factors uniquely as a unit, finitely
//! many prime powers, and for finitely many odd `d` a tail
//! `prod_{i>n} Φ_{2d}(X^(1/2^i))^b`, which equals `Φ_d(X^(1/2^n))^b`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::element::DElement;
use crate::cyclo;
use crate::error::{Error, Result};
use crate::factor_q::{eisenstein_check, factor_q, is_irreducible_q};
use crate::field::Q;
use crate::poly::Poly;

/// Refinement depth beyond which factorization gives up.
const MAX_REFINE_LEVELS: u32 = 64;

/// Why a monic `g` with `g(0) != 0` is or is not prime in `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeWitnessQ {
    /// Eisenstein at this prime; survives every substitution `X -> X^(2^k)`.
    Eisenstein(u128),
    /// `g` and `g(X^4)` are both irreducible.
    LiftIrreducible,
    /// A unit of `D`.
    Unit,
    NotIrreducible,
    /// `g` is irreducible but `g(X^4)` is not.
    LiftReducible,
}

impl PrimeWitnessQ {
    pub fn is_prime(&self) -> bool {
        matches!(self, PrimeWitnessQ::Eisenstein(_) | PrimeWitnessQ::LiftIrreducible)
    }
}

static CERTIFICATES: OnceLock<RwLock<HashMap<Vec<BigInt>, PrimeWitnessQ>>> = OnceLock::new();

fn primitive_key(g: &Poly<Q>) -> Vec<BigInt> {
    let (_, prim) = g.content_primitive();
    prim.to_bigints().expect("integral")
}

/// Primality certificate for the part `g` of an element (cached).
pub fn prime_witness_q(g: &Poly<Q>) -> PrimeWitnessQ {
    if g.deg() == 0 {
        return PrimeWitnessQ::Unit;
    }
    let key = primitive_key(g);
    let cache = CERTIFICATES.get_or_init(Default::default);
    if let Some(w) = cache.read().expect("cache lock").get(&key) {
        return w.clone();
    }
    let prim = Poly::from_bigints(&key);
    let witness = if let Some(p) = eisenstein_check(&prim) {
        PrimeWitnessQ::Eisenstein(p)
    } else if !is_irreducible_q(&prim) {
        PrimeWitnessQ::NotIrreducible
    } else if is_irreducible_q(&prim.compose_power(4)) {
        PrimeWitnessQ::LiftIrreducible
    } else {
        PrimeWitnessQ::LiftReducible
    };
    cache.write().expect("cache lock").insert(key, witness.clone());
    witness
}

/// Whether `e` is a prime element of `D`.
pub fn is_prime_q(e: &DElement<Q>) -> bool {
    prime_witness_q(e.part()).is_prime()
}

/// A monic prime `g(X^(1/2^level))` of `D` in minimal-level form.
#[derive(Clone, Debug)]
pub struct PrimeElementD {
    level: u32,
    g: Poly<Q>,
    key: Vec<BigInt>,
    cyclo: Option<u64>,
}

impl PrimeElementD {
    /// Certifies primality of `g(X^(1/2^level))` and normalizes it.
    pub fn new(level: u32, g: Poly<Q>) -> Result<Self> {
        let e = DElement::at_level(level, g.clone())?;
        if !is_prime_q(&e) {
            let shown = DElement::at_level(level, g).map(|e| e.to_string()).unwrap_or_default();
            return Err(Error::NotAPrime(shown));
        }
        Ok(Self::trusted(e.level(), e.part().clone()))
    }

    /// `Φ_d(X^(1/2^level))`, certified.
    pub fn cyclotomic(d: u64, level: u32) -> Result<Self> {
        Self::new(level, cyclo::cyclotomic(d))
    }

    /// Caller guarantees `g` monic, prime in `D`, and minimal at `level`.
    pub(crate) fn trusted(level: u32, g: Poly<Q>) -> Self {
        let key = primitive_key(&g);
        let cyclo = cyclo::detect_cyclotomic(&g);
        PrimeElementD { level, g, key, cyclo }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn poly(&self) -> &Poly<Q> {
        &self.g
    }

    /// `d` when the prime is `Φ_d(X^(1/2^level))`.
    pub fn cyclotomic_index(&self) -> Option<u64> {
        self.cyclo
    }

    /// Odd `d` when this prime is `Φ_{2d}` at some level, the family whose
    /// tail is `Φ_d`.
    pub fn family(&self) -> Option<u64> {
        self.cyclo.filter(|n| n % 4 == 2).map(|n| n / 2)
    }

    pub fn to_element(&self) -> DElement<Q> {
        DElement::at_level(self.level, self.g.clone()).expect("nonzero")
    }
}

impl PartialEq for PrimeElementD {
    fn eq(&self, other: &Self) -> bool {
        self.level == other.level && self.g == other.g
    }
}

impl Eq for PrimeElementD {}

impl Ord for PrimeElementD {
    /// Level, then degree, then primitive integer coefficients top down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.level
            .cmp(&other.level)
            .then(self.key.len().cmp(&other.key.len()))
            .then_with(|| self.key.iter().rev().cmp(other.key.iter().rev()))
    }
}

impl PartialOrd for PrimeElementD {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimeElementD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_element())
    }
}

/// `Φ_d(X^(1/2^root_level))^exponent` for odd `d`, i.e. the countable
/// product of `Φ_{2d}(X^(1/2^i))^exponent` over `i > root_level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TailTerm {
    pub d: u64,
    pub root_level: u32,
    pub exponent: u64,
}

impl TailTerm {
    pub fn collapsed(&self) -> DElement<Q> {
        DElement::at_level(self.root_level, cyclo::cyclotomic(self.d))
            .expect("nonzero")
            .pow(self.exponent as u32)
    }
}

/// The unit `coeff * X^(shift/2^level)`, exponent in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitQ {
    pub coeff: BigRational,
    pub shift: i64,
    pub level: u32,
}

impl UnitQ {
    pub fn new(coeff: BigRational, mut shift: i64, mut level: u32) -> Self {
        while level > 0 && shift % 2 == 0 {
            shift /= 2;
            level -= 1;
        }
        UnitQ { coeff, shift, level }
    }

    pub fn one() -> Self {
        UnitQ::new(BigRational::one(), 0, 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let level = self.level.max(other.level);
        let shift = (self.shift << (level - self.level)) + (other.shift << (level - other.level));
        UnitQ::new(&self.coeff * &other.coeff, shift, level)
    }

    pub fn to_element(&self) -> DElement<Q> {
        DElement::unit(Q::new(), self.coeff.clone(), self.level, self.shift).expect("nonzero")
    }
}

/// Exponent function restricted to one family `i -> Φ_{2d}(X^(1/2^i))`:
/// explicit values at `i <= root`, the constant `tail` beyond.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Family {
    root: u32,
    tail: u64,
    entries: BTreeMap<u32, u64>,
}

impl Family {
    fn value(&self, i: u32) -> u64 {
        if i > self.root {
            self.tail
        } else {
            self.entries.get(&i).copied().unwrap_or(0)
        }
    }

    fn expand(&mut self, root: u32) {
        while self.root < root {
            self.root += 1;
            if self.tail > 0 {
                self.entries.insert(self.root, self.tail);
            }
        }
    }

    fn add_point(&mut self, i: u32, k: u64) {
        self.expand(i);
        *self.entries.entry(i).or_insert(0) += k;
    }

    fn add_tail(&mut self, n: u32, b: u64) {
        self.expand(n);
        for (_, v) in self.entries.range_mut(n + 1..) {
            *v += b;
        }
        self.tail += b;
    }

    fn normalize(&mut self) {
        self.entries.retain(|_, v| *v > 0);
        while self.root > 0 && self.value(self.root) == self.tail {
            self.entries.remove(&self.root);
            self.root -= 1;
        }
    }

    fn combine(a: &Family, b: &Family, op: impl Fn(u64, u64) -> u64) -> Family {
        let root = a.root.max(b.root);
        let entries = (0..=root)
            .map(|i| (i, op(a.value(i), b.value(i))))
            .filter(|(_, v)| *v > 0)
            .collect();
        let mut out = Family { root, tail: op(a.tail, b.tail), entries };
        out.normalize();
        out
    }

    fn dominated_by(&self, other: &Family) -> bool {
        let root = self.root.max(other.root);
        self.tail <= other.tail && (0..=root).all(|i| self.value(i) <= other.value(i))
    }
}

/// The exponent function of a factorization, families kept apart.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct ExpFn {
    plain: BTreeMap<PrimeElementD, u64>,
    families: BTreeMap<u64, Family>,
}

impl ExpFn {
    pub(crate) fn add_prime(&mut self, p: PrimeElementD, k: u64) {
        if k == 0 {
            return;
        }
        match p.family() {
            Some(d) => self.families.entry(d).or_default().add_point(p.level, k),
            None => *self.plain.entry(p).or_insert(0) += k,
        }
    }

    pub(crate) fn add_tail(&mut self, d: u64, n: u32, b: u64) {
        debug_assert!(d % 2 == 1);
        if b > 0 {
            self.families.entry(d).or_default().add_tail(n, b);
        }
    }

    fn normalize(&mut self) {
        self.plain.retain(|_, v| *v > 0);
        for fam in self.families.values_mut() {
            fam.normalize();
        }
        self.families.retain(|_, f| f.tail > 0 || !f.entries.is_empty());
    }

    fn combine(a: &ExpFn, b: &ExpFn, op: impl Fn(u64, u64) -> u64 + Copy) -> ExpFn {
        let mut plain = BTreeMap::new();
        for p in a.plain.keys().chain(b.plain.keys()) {
            let v = op(
                a.plain.get(p).copied().unwrap_or(0),
                b.plain.get(p).copied().unwrap_or(0),
            );
            plain.insert(p.clone(), v);
        }
        let empty = Family::default();
        let mut families = BTreeMap::new();
        for d in a.families.keys().chain(b.families.keys()) {
            let fa = a.families.get(d).unwrap_or(&empty);
            let fb = b.families.get(d).unwrap_or(&empty);
            families.insert(*d, Family::combine(fa, fb, op));
        }
        let mut out = ExpFn { plain, families };
        out.normalize();
        out
    }

    fn dominated_by(&self, other: &ExpFn) -> bool {
        let empty = Family::default();
        self.plain
            .iter()
            .all(|(p, k)| other.plain.get(p).is_some_and(|m| k <= m))
            && self
                .families
                .iter()
                .all(|(d, f)| f.dominated_by(other.families.get(d).unwrap_or(&empty)))
    }

    pub(crate) fn into_factorization(mut self, unit: UnitQ) -> CanonicalFactorizationQ {
        self.normalize();
        let mut finite_primes = self.plain;
        let mut tails = Vec::new();
        for (d, fam) in self.families {
            let phi = cyclo::cyclotomic(2 * d);
            for (level, k) in fam.entries {
                finite_primes.insert(PrimeElementD::trusted(level, phi.clone()), k);
            }
            if fam.tail > 0 {
                tails.push(TailTerm { d, root_level: fam.root, exponent: fam.tail });
            }
        }
        CanonicalFactorizationQ { unit, finite_primes, tails }
    }
}

/// `unit * prod p^k * prod tails`, in the normal form where each tail's
/// root level is minimal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFactorizationQ {
    pub unit: UnitQ,
    pub finite_primes: BTreeMap<PrimeElementD, u64>,
    pub tails: Vec<TailTerm>,
}

impl CanonicalFactorizationQ {
    pub(crate) fn exp_fn(&self) -> ExpFn {
        let mut f = ExpFn::default();
        for (p, k) in &self.finite_primes {
            f.add_prime(p.clone(), *k);
        }
        for t in &self.tails {
            f.add_tail(t.d, t.root_level, t.exponent);
        }
        f
    }

    /// The factorization of a unit.
    pub fn of_unit(unit: UnitQ) -> Self {
        CanonicalFactorizationQ { unit, finite_primes: BTreeMap::new(), tails: Vec::new() }
    }

    pub fn is_unit(&self) -> bool {
        self.finite_primes.is_empty() && self.tails.is_empty()
    }

    /// Whether only finitely many primes occur.
    pub fn is_finite(&self) -> bool {
        self.tails.is_empty()
    }

    /// Exponent of `p` in this factorization.
    pub fn exponent(&self, p: &PrimeElementD) -> u64 {
        match p.family() {
            Some(d) => self.exp_fn().families.get(&d).map_or(0, |f| f.value(p.level)),
            None => self.finite_primes.get(p).copied().unwrap_or(0),
        }
    }

    /// Same factorization with the unit replaced by 1.
    pub fn without_unit(&self) -> Self {
        CanonicalFactorizationQ { unit: UnitQ::one(), ..self.clone() }
    }

    /// Factorization of the product.
    pub fn mul(&self, other: &Self) -> Self {
        ExpFn::combine(&self.exp_fn(), &other.exp_fn(), |a, b| a + b)
            .into_factorization(self.unit.mul(&other.unit))
    }

    /// The element itself; tails collapse to `Φ_d(X^(1/2^n))^b`.
    pub fn reconstruct(&self) -> DElement<Q> {
        let mut acc = self.unit.to_element();
        for (p, k) in &self.finite_primes {
            acc = acc.mul(&p.to_element().pow(*k as u32));
        }
        for t in &self.tails {
            acc = acc.mul(&t.collapsed());
        }
        acc
    }
}

impl fmt::Display for CanonicalFactorizationQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit.to_element())?;
        for (p, k) in &self.finite_primes {
            write!(f, " * ({p})")?;
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        for t in &self.tails {
            let phi = DElement::at_level(t.root_level, cyclo::cyclotomic(t.d)).expect("nonzero");
            write!(f, " * [tail d={} from level {}: ({phi})", t.d, t.root_level)?;
            if t.exponent > 1 {
                write!(f, "^{}", t.exponent)?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// Irreducible factors over `Q` of `p(Y)` with multiplicities. Above level 0
/// the norm `p(Y) p(-Y)`, a polynomial in `Y^2`, is factored one level down
/// first; lifted factors then collapse to their low-degree ancestors.
pub(crate) fn factor_part(p: &Poly<Q>, level: u32) -> Vec<(Poly<Q>, usize)> {
    if level == 0 || p.deg() <= 1 {
        return factor_q(p).expect("nonzero").factors;
    }
    let norm = (p * &p.substitute_neg_unchecked()).deflate(2).monic();
    let mut rest = p.monic();
    let mut out = Vec::new();
    for (f, _) in factor_part(&norm, level - 1) {
        let candidates = factor_q(&f.compose_power(2)).expect("nonzero").factors;
        for (g, _) in candidates {
            let mut v = 0;
            while let Some(q) = rest.div_exact(&g).expect("same field") {
                rest = q;
                v += 1;
            }
            if v > 0 {
                out.push((g, v));
            }
        }
    }
    assert_eq!(rest.deg(), 0, "norm descent missed a factor");
    out
}

/// The two factors of a non-prime irreducible `h` one or two levels up.
fn split(h: &Poly<Q>) -> (u32, Poly<Q>, Poly<Q>) {
    for step in [1u32, 2] {
        let lifted = h.compose_power(1 << step);
        let fact = factor_q(&lifted).expect("nonzero").factors;
        match fact.as_slice() {
            [_] => continue,
            [(a, 1), (b, 1)] => {
                let mirror = a.substitute_neg_unchecked().monic();
                assert!(
                    mirror == *b && a != b,
                    "splitting of {h} is not a conjugate pair: {a} / {b}"
                );
                return (step, a.clone(), b.clone());
            }
            other => panic!("splitting of {h} has unexpected shape: {other:?}"),
        }
    }
    panic!("{h} is not prime but stays irreducible two levels up")
}

fn refine(h: Poly<Q>, level: u32, m: u64, acc: &mut ExpFn) -> Result<()> {
    let (mut h, mut level) = (h, level);
    while level > 0 && h.is_even() {
        h = h.deflate(2);
        level -= 1;
    }
    if level > MAX_REFINE_LEVELS {
        return Err(Error::Unsupported(format!("refinement of {h} exceeds {MAX_REFINE_LEVELS} levels")));
    }
    if let Some(d) = cyclo::detect_cyclotomic(&h).filter(|d| d % 2 == 1) {
        acc.add_tail(d, level, m);
        return Ok(());
    }
    if prime_witness_q(&h).is_prime() {
        acc.add_prime(PrimeElementD::trusted(level, h), m);
        return Ok(());
    }
    let (step, a, b) = split(&h);
    refine(a, level + step, m, acc)?;
    refine(b, level + step, m, acc)
}

/// The canonical factorization of `e`; a unit factors with empty maps.
pub fn factor_in_d(e: &DElement<Q>) -> Result<CanonicalFactorizationQ> {
    let unit = UnitQ::new(e.coeff().clone(), e.shift(), e.level());
    let mut acc = ExpFn::default();
    if !e.is_unit() {
        for (h, m) in factor_part(e.part(), e.level()) {
            refine(h, e.level(), m as u64, &mut acc)?;
        }
    }
    Ok(acc.into_factorization(unit))
}

/// The product of the factorization.
pub fn reconstruct(c: &CanonicalFactorizationQ) -> DElement<Q> {
    c.reconstruct()
}

/// Pointwise minimum of exponents, unit 1.
pub fn gcd_d(a: &CanonicalFactorizationQ, b: &CanonicalFactorizationQ) -> CanonicalFactorizationQ {
    ExpFn::combine(&a.exp_fn(), &b.exp_fn(), u64::min).into_factorization(UnitQ::one())
}

/// Pointwise maximum of exponents, unit 1.
pub fn lcm_d(a: &CanonicalFactorizationQ, b: &CanonicalFactorizationQ) -> CanonicalFactorizationQ {
    ExpFn::combine(&a.exp_fn(), &b.exp_fn(), u64::max).into_factorization(UnitQ::one())
}

/// Whether `a` divides `b` in `D`.
pub fn divides_d(a: &CanonicalFactorizationQ, b: &CanonicalFactorizationQ) -> bool {
    a.exp_fn().dominated_by(&b.exp_fn())
}

impl Default for UnitQ {
    fn default() -> Self {
        UnitQ::one()
    }
}

impl UnitQ {
    pub fn is_one(&self) -> bool {
        self.coeff.is_one() && self.shift == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn q(c: &[i64]) -> Poly<Q> {
        Poly::from_i64s(Q::new(), c)
    }

    fn elem(level: u32, c: &[i64]) -> DElement<Q> {
        DElement::at_level(level, q(c)).unwrap()
    }

    fn fact(level: u32, c: &[i64]) -> CanonicalFactorizationQ {
        factor_in_d(&elem(level, c)).unwrap()
    }

    fn phi_prime(d: u64, level: u32) -> PrimeElementD {
        PrimeElementD::cyclotomic(d, level).unwrap()
    }

    #[test]
    fn prime_examples() {
        assert!(is_prime_q(&elem(0, &[1, 0, 0, 0, 1])));
        assert!(is_prime_q(&elem(0, &[-2, 1])));
        assert!(!is_prime_q(&elem(0, &[1, 1, 1])));
        assert_eq!(prime_witness_q(&q(&[-2, 1])), PrimeWitnessQ::Eisenstein(2));
        assert_eq!(prime_witness_q(&q(&[1, 0, 0, 0, 1])), PrimeWitnessQ::LiftIrreducible);
        assert_eq!(prime_witness_q(&q(&[-1, 1])), PrimeWitnessQ::LiftReducible);
        assert_eq!(prime_witness_q(&q(&[-1, 0, 1])), PrimeWitnessQ::NotIrreducible);
    }

    #[test]
    fn cyclotomic_primality() {
        for d in 1..=40 {
            let e = DElement::from_poly(cyclo::cyclotomic(d)).unwrap();
            assert_eq!(is_prime_q(&e), d % 2 == 0, "d={d}");
        }
    }

    #[test]
    fn x_minus_one() {
        let f = fact(0, &[-1, 1]);
        assert!(f.finite_primes.is_empty());
        assert_eq!(f.tails, vec![TailTerm { d: 1, root_level: 0, exponent: 1 }]);
        assert_eq!(f.unit, UnitQ::one());
        assert_eq!(f.reconstruct(), elem(0, &[-1, 1]));
    }

    #[test]
    fn x_squared_minus_one() {
        let f = fact(0, &[-1, 0, 1]);
        assert_eq!(f.tails, vec![TailTerm { d: 1, root_level: 0, exponent: 1 }]);
        let expect: BTreeMap<_, _> = [(phi_prime(2, 0), 1)].into_iter().collect();
        assert_eq!(f.finite_primes, expect);
    }

    #[test]
    fn phi3_squared() {
        let f = factor_in_d(&DElement::from_poly(cyclo::cyclotomic(3).pow(2)).unwrap()).unwrap();
        assert!(f.finite_primes.is_empty());
        assert_eq!(f.tails, vec![TailTerm { d: 3, root_level: 0, exponent: 2 }]);
    }

    #[test]
    fn reconstruct_examples() {
        let c = CanonicalFactorizationQ {
            unit: UnitQ::one(),
            finite_primes: BTreeMap::new(),
            tails: vec![TailTerm { d: 1, root_level: 0, exponent: 1 }],
        };
        assert_eq!(c.reconstruct(), elem(0, &[-1, 1]));
        let c = CanonicalFactorizationQ {
            unit: UnitQ::one(),
            finite_primes: [(PrimeElementD::new(0, q(&[-2, 1])).unwrap(), 2)].into_iter().collect(),
            tails: vec![],
        };
        assert_eq!(c.reconstruct(), elem(0, &[4, -4, 1]));
        let c = CanonicalFactorizationQ {
            unit: UnitQ::one(),
            finite_primes: [(phi_prime(2, 1), 1)].into_iter().collect(),
            tails: vec![TailTerm { d: 1, root_level: 1, exponent: 2 }],
        };
        // (Y - 1)^2 (Y + 1) at level 1
        assert_eq!(c.reconstruct(), elem(1, &[1, -1, -1, 1]));
        assert_eq!(factor_in_d(&c.reconstruct()).unwrap(), c);
    }

    #[test]
    fn gcd_lcm_examples() {
        let a = factor_in_d(&elem(0, &[-1, -1, 1, 1])).unwrap(); // (X^2-1)(X+1)
        let b = factor_in_d(&elem(0, &[1, -1, -1, 1])).unwrap(); // (X-1)^2 (X+1)
        assert_eq!(gcd_d(&a, &b), fact(0, &[-1, 0, 1]));
        assert_eq!(lcm_d(&a, &b), fact(0, &[1, 0, -2, 0, 1]));
        assert_eq!(gcd_d(&a, &a), a.without_unit());
    }

    #[test]
    fn divides_examples() {
        let minus = fact(0, &[-1, 1]);
        for n in 1..=5 {
            assert!(divides_d(&fact(n, &[1, 1]), &minus), "n={n}");
        }
        // X + 1 itself is coprime to X - 1: (X - 1)/(X + 1) lies in no level
        let plus = fact(0, &[1, 1]);
        assert!(!divides_d(&plus, &minus));
        assert!(!divides_d(&minus, &plus));
        assert!(divides_d(&minus, &minus));
        assert!(divides_d(&fact(3, &[1, 1]), &minus));
    }

    #[test]
    fn units_and_monomials() {
        let e = DElement::unit(Q::new(), Q::new().from_i64(-3), 2, 3).unwrap();
        let f = factor_in_d(&e).unwrap();
        assert!(f.is_unit());
        assert_eq!(f.unit, UnitQ::new(BigRational::from_integer((-3).into()), 3, 2));
        assert_eq!(f.reconstruct(), e);
    }

    #[test]
    fn non_prime_irreducible_splits() {
        // X^2 + 4 is irreducible, yet X^4 + 4 is not
        let f = fact(0, &[4, 0, 1]);
        assert!(f.tails.is_empty());
        assert_eq!(f.finite_primes.len(), 2);
        for (p, k) in &f.finite_primes {
            assert_eq!(*k, 1);
            assert_eq!(p.level(), 1);
        }
        assert_eq!(f.reconstruct(), elem(0, &[4, 0, 1]));
    }

    #[test]
    fn prime_constructor_rejects() {
        assert!(matches!(PrimeElementD::new(0, q(&[1, 1, 1])), Err(Error::NotAPrime(_))));
        let p = PrimeElementD::new(2, q(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!((p.level(), p.poly().clone()), (0, q(&[1, 1])));
    }
}
