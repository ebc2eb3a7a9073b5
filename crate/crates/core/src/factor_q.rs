//! Factorization over `Q` by the Zassenhaus method.
//!
//! Integer polynomials are plain `Vec<BigInt>` (low to high, trimmed).

use std::cmp::Ordering;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cyclo;
use crate::error::{Error, Result};
use crate::factor_ff::factor_ff;
use crate::field::Q;
use crate::gf::Fq;
use crate::numth;
use crate::poly::Poly;

type ZPoly = Vec<BigInt>;

/// `unit * prod f_i^m_i` with monic irreducible `f_i` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFactorization {
    pub unit: BigRational,
    pub factors: Vec<(Poly<Q>, usize)>,
}

impl QFactorization {
    pub fn reconstruct(&self) -> Poly<Q> {
        self.factors.iter().fold(
            Poly::constant(Q::new(), self.unit.clone()),
            |acc, (g, m)| &acc * &g.pow(*m as u32),
        )
    }
}

/// Order on monic factors: degree, then the primitive integer coefficients
/// from the top down.
pub fn cmp_q_factors(a: &Poly<Q>, b: &Poly<Q>) -> Ordering {
    let key = |p: &Poly<Q>| {
        let (_, prim) = p.content_primitive();
        prim.to_bigints().expect("integral")
    };
    a.deg().cmp(&b.deg()).then_with(|| {
        let (ka, kb) = (key(a), key(b));
        ka.iter().rev().cmp(kb.iter().rev())
    })
}

/// Complete factorization of a nonzero polynomial.
pub fn factor_q(f: &Poly<Q>) -> Result<QFactorization> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot factor the zero polynomial".into()));
    }
    let unit = f.leading_coeff();
    let mut factors = Vec::new();
    if f.deg() > 0 {
        for (g, m) in f.squarefree_decomposition() {
            let (_, prim) = g.content_primitive();
            let z = prim.to_bigints().expect("primitive part is integral");
            for h in factor_squarefree(&z, false) {
                factors.push((Poly::from_bigints(&h).monic(), m));
            }
        }
    }
    factors.sort_by(|a, b| cmp_q_factors(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(QFactorization { unit, factors })
}

/// Whether `f` is irreducible over `Q`; constants are not.
pub fn is_irreducible_q(f: &Poly<Q>) -> bool {
    match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        _ => {}
    }
    let (_, prim) = f.content_primitive();
    let z = prim.to_bigints().expect("primitive part is integral");
    if z[0].is_zero() {
        return false;
    }
    if eisenstein_check(&prim).is_some() {
        return true;
    }
    if !prim.gcd(&prim.derivative()).expect("same field").is_one() {
        return false;
    }
    factor_squarefree(&z, true).len() == 1
}

/// A prime witnessing Eisenstein's criterion for `f`, if one exists among
/// the primes that can be found by factoring the gcd of the lower
/// coefficients.
pub fn eisenstein_check(f: &Poly<Q>) -> Option<u128> {
    let n = f.degree().filter(|&n| n >= 1)?;
    let z = f.to_bigints()?;
    let g = z[..n].iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let g = g.to_u128().filter(|&g| g > 1)?;
    let primes = numth::factor_integer(g).ok()?;
    let found = primes.primes().find(|&q| {
        let q = BigInt::from(q);
        !z[n].is_multiple_of(&q) && !z[0].is_multiple_of(&(&q * &q))
    });
    found
}

fn trim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn deg(v: &ZPoly) -> usize {
    v.len().saturating_sub(1)
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact quotient `a / b` in `Z[X]`, or `None` if `b` does not divide `a`.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = deg(&b.to_vec());
    if a.len() < b.len() {
        return a.iter().all(Zero::is_zero).then(Vec::new);
    }
    if !b[0].is_zero() && !a[0].is_multiple_of(&b[0]) {
        return None;
    }
    let lc = b.last().expect("nonzero divisor");
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(quot))
}

/// Arithmetic in `(Z / m)[X]` with nonnegative residues.
struct ModRing {
    m: BigInt,
}

impl ModRing {
    fn red(&self, x: &BigInt) -> BigInt {
        x.mod_floor(&self.m)
    }

    fn poly(&self, a: &[BigInt]) -> ZPoly {
        trim(a.iter().map(|c| self.red(c)).collect())
    }

    fn add(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        let n = a.len().max(b.len());
        let zero = BigInt::zero();
        let v: ZPoly = (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
            .collect();
        self.poly(&v)
    }

    fn sub(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        let neg: ZPoly = b.iter().map(|c| -c).collect();
        self.add(a, &neg)
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> ZPoly {
        self.poly(&zmul(a, b))
    }

    fn scale(&self, a: &[BigInt], c: &BigInt) -> ZPoly {
        self.poly(&a.iter().map(|x| x * c).collect::<ZPoly>())
    }

    /// Division by a monic `b`.
    fn divmod_monic(&self, a: &[BigInt], b: &[BigInt]) -> (ZPoly, ZPoly) {
        let db = b.len() - 1;
        let mut rem = self.poly(a);
        if rem.len() <= db {
            return (Vec::new(), rem);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = self.red(&rem[k + db]);
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &c * bj;
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (self.poly(&quot), self.poly(&rem))
    }

    fn inv(&self, x: &BigInt) -> BigInt {
        self.red(x).modinv(&self.m).expect("unit modulo m")
    }

    /// Symmetric representative in `(-m/2, m/2]`.
    fn sym(&self, x: &BigInt) -> BigInt {
        let r = self.red(x);
        if &r + &r > self.m {
            r - &self.m
        } else {
            r
        }
    }
}

fn to_fq(field: &Fq, a: &[BigInt]) -> Poly<Fq> {
    Poly::new(field.clone(), a.iter().map(|c| field.from_bigint(c)).collect())
}

fn from_fq(a: &Poly<Fq>) -> ZPoly {
    a.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f = g h`, `s g + t h = 1` modulo `m`
/// (with `h` monic) to the same relations modulo `m^2`.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let r2 = ModRing { m: m * m };
    let e = r2.sub(f, &r2.mul(g, h));
    let (q, r) = r2.divmod_monic(&r2.mul(s, &e), h);
    let g1 = r2.add(&r2.add(g, &r2.mul(t, &e)), &r2.mul(&q, g));
    let h1 = r2.add(h, &r);
    let b = r2.sub(&r2.add(&r2.mul(s, &g1), &r2.mul(t, &h1)), &[BigInt::one()]);
    let (c, d) = r2.divmod_monic(&r2.mul(s, &b), &h1);
    let s1 = r2.sub(s, &d);
    let t1 = r2.sub(&r2.sub(t, &r2.mul(t, &b)), &r2.mul(&c, &g1));
    (g1, h1, s1, t1)
}

/// Lifts `f = lc * prod factors (mod p)` to monic factors modulo `p^(2^steps)`.
fn multi_lift(f: &[BigInt], factors: &[Poly<Fq>], p: &BigInt, steps: u32) -> Vec<ZPoly> {
    let modulus = (0..steps).fold(p.clone(), |m, _| &m * &m);
    let ring = ModRing { m: modulus };
    if factors.len() == 1 {
        let inv = ring.inv(f.last().expect("nonzero"));
        return vec![ring.scale(f, &inv)];
    }
    let field = factors[0].field().clone();
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[Poly<Fq>]| fs.iter().fold(Poly::one(field.clone()), |acc, x| &acc * x);
    let fbar = to_fq(&field, f);
    let a0 = prod(left).scale(&fbar.leading_coeff());
    let b0 = prod(right);
    let (one, s0, t0) = a0.xgcd(&b0).expect("same field");
    debug_assert!(one.is_one());
    let (mut g, mut h, mut s, mut t) = (from_fq(&a0), from_fq(&b0), from_fq(&s0), from_fq(&t0));
    let mut m = p.clone();
    for _ in 0..steps {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let mut out = multi_lift(&g, left, p, steps);
    out.extend(multi_lift(&h, right, p, steps));
    out
}

fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| numth::is_prime(n as u128).unwrap_or(false))
}

/// Subset sums of factor degrees, as a membership table over `0..=n`.
fn degree_sums(degs: &[usize], n: usize) -> Vec<bool> {
    let mut ok = vec![false; n + 1];
    ok[0] = true;
    for &d in degs {
        for s in (d..=n).rev() {
            if ok[s - d] {
                ok[s] = true;
            }
        }
    }
    ok
}

struct ModularData {
    p: u64,
    factors: Vec<Poly<Fq>>,
    /// `allowed[d]`: some factor of degree `d` is consistent with every
    /// prime tried.
    allowed: Vec<bool>,
}

/// Tries up to five admissible primes. `None` means some reduction is
/// irreducible, or the admissible degrees rule out any proper factor.
fn modular_data(g: &[BigInt]) -> Option<ModularData> {
    let n = deg(&g.to_vec());
    let lc = g.last().expect("nonzero");
    let mut allowed = vec![true; n + 1];
    let mut best: Option<(u64, Vec<Poly<Fq>>)> = None;
    let mut tried = 0;
    for p in odd_primes().take(2000) {
        if tried == 5 {
            break;
        }
        if lc.is_multiple_of(&BigInt::from(p)) {
            continue;
        }
        let field = Fq::new(p, 1).expect("small prime");
        let gbar = to_fq(&field, g);
        if !gbar.gcd(&gbar.derivative()).expect("same field").is_one() {
            continue;
        }
        tried += 1;
        let fact = factor_ff(&gbar).expect("nonzero");
        if fact.factors.len() == 1 {
            return None;
        }
        let degs: Vec<usize> = fact.factors.iter().map(|(h, _)| h.deg()).collect();
        for (a, b) in allowed.iter_mut().zip(degree_sums(&degs, n)) {
            *a &= b;
        }
        if !allowed[1..n].iter().any(|&b| b) {
            return None;
        }
        if best.as_ref().map_or(true, |(_, f)| fact.factors.len() < f.len()) {
            best = Some((p, fact.factors.into_iter().map(|(h, _)| h).collect()));
        }
    }
    let (p, factors) = best.expect("an admissible prime exists below the search limit");
    Some(ModularData { p, factors, allowed })
}

/// Factors with coefficient bound of `2^n * ceil(|g|_2) * |lc|`; returns
/// the least power-of-two exponent `K` with `p^K > 2B`.
fn lift_exponent(g: &[BigInt], p: u64) -> u32 {
    let norm_sq: BigInt = g.iter().map(|c| c * c).sum();
    let mut norm = norm_sq.sqrt();
    if &norm * &norm < norm_sq {
        norm += 1;
    }
    let bound = (BigInt::one() << deg(&g.to_vec())) * norm * g.last().expect("nonzero").abs();
    let target = bound * 2;
    let p = BigInt::from(p);
    let mut steps = 0;
    let mut pk = p.clone();
    while pk <= target {
        pk = &pk * &pk;
        steps += 1;
    }
    steps
}

fn primitive_positive(v: ZPoly) -> ZPoly {
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if v.last().expect("nonzero").is_negative() {
        g = -g;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Removes cyclotomic factors whose degree is admissible; returns them
/// and the cofactor.
fn extract_cyclotomic(g: &[BigInt], allowed: &[bool]) -> (Vec<ZPoly>, ZPoly) {
    let mut rest = g.to_vec();
    let mut found = Vec::new();
    let n = deg(&rest);
    for d in cyclo::indices_up_to_degree(n as u64) {
        let phi = cyclo::cyclotomic_coeffs(d);
        let k = phi.len() - 1;
        if k >= deg(&rest) || !allowed.get(k).copied().unwrap_or(false) {
            continue;
        }
        if !divisible_mod_prime(&rest, &phi, d as usize) {
            continue;
        }
        if let Some(q) = zdiv_exact(&rest, &phi) {
            found.push(phi.to_vec());
            rest = q;
        }
    }
    (found, rest)
}

/// Necessary condition for `Φ_d | f`: it holds modulo a 61-bit prime after
/// folding `f` modulo `X^d - 1`.
fn divisible_mod_prime(f: &[BigInt], phi: &[BigInt], d: usize) -> bool {
    const P: u128 = (1 << 61) - 1;
    let big_p = BigInt::from(P);
    let red = |c: &BigInt| c.mod_floor(&big_p).to_u128().expect("fits");
    let mut folded = vec![0u128; d];
    for (i, c) in f.iter().enumerate() {
        let slot = &mut folded[i % d];
        *slot = (*slot + red(c)) % P;
    }
    let phi: Vec<u128> = phi.iter().map(red).collect();
    let k = phi.len() - 1;
    for top in (k..folded.len()).rev() {
        let c = folded[top];
        if c == 0 {
            continue;
        }
        for (j, pj) in phi.iter().enumerate() {
            let idx = top - k + j;
            folded[idx] = (folded[idx] + P - numth::mul_mod(c, *pj, P)) % P;
        }
    }
    folded[..k].iter().all(|&c| c == 0)
}

/// Irreducible factors of a primitive squarefree `g` with positive leading
/// coefficient. With `first_only`, stops after finding one proper factor
/// (the result then has length 2 but is not a full factorization).
fn factor_squarefree(g: &[BigInt], first_only: bool) -> Vec<ZPoly> {
    let g = primitive_positive(trim(g.to_vec()));
    let n = deg(&g);
    if n <= 1 {
        return vec![g];
    }
    if g[0].is_zero() {
        let rest: ZPoly = g[1..].to_vec();
        if first_only {
            return vec![vec![BigInt::zero(), BigInt::one()], rest];
        }
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree(&rest, false));
        return out;
    }
    let Some(data) = modular_data(&g) else {
        return vec![g];
    };
    let (mut found, rest) = extract_cyclotomic(&g, &data.allowed);
    if !found.is_empty() {
        if first_only {
            found.push(rest);
            return found.into_iter().take(2).collect();
        }
        if deg(&rest) > 0 {
            found.extend(factor_squarefree(&rest, false));
        }
        return found;
    }
    zassenhaus(&g, &data, first_only)
}

fn zassenhaus(g: &[BigInt], data: &ModularData, first_only: bool) -> Vec<ZPoly> {
    let steps = lift_exponent(g, data.p);
    let lifted = multi_lift(g, &data.factors, &BigInt::from(data.p), steps);
    let modulus = (0..steps).fold(BigInt::from(data.p), |m, _| &m * &m);
    let ring = ModRing { m: modulus };

    let mut rest = g.to_vec();
    let mut pool: Vec<ZPoly> = lifted;
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= pool.len() {
        let lc = rest.last().expect("nonzero").clone();
        let target0 = &lc * &rest[0];
        for subset in (0..pool.len()).combinations(size) {
            let d: usize = subset.iter().map(|&i| deg(&pool[i])).sum();
            if !data.allowed[d] {
                continue;
            }
            let c0 = subset
                .iter()
                .fold(lc.clone(), |acc, &i| ring.red(&(acc * &pool[i][0])));
            let c0 = ring.sym(&c0);
            if c0.is_zero() || !target0.is_multiple_of(&c0) {
                continue;
            }
            let prod = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| ring.mul(&acc, &pool[i]));
            let cand = primitive_positive(prod.iter().map(|c| ring.sym(c)).collect());
            if let Some(q) = zdiv_exact(&rest, &cand) {
                out.push(cand);
                rest = q;
                if first_only {
                    out.push(rest);
                    return out;
                }
                let mut keep = Vec::new();
                for (i, h) in pool.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(h);
                    }
                }
                pool = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    out.push(primitive_positive(rest));
    out
}
