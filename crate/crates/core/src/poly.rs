//! Dense univariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Q};

/// Polynomial with coefficients `coeffs[i]` of `X^i`, trailing zeros trimmed.
#[derive(Clone)]
pub struct Poly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Poly { field, coeffs };
        p.trim();
        p
    }

    pub fn zero(field: F) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Poly { field, coeffs: vec![one] }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The indeterminate `X`.
    pub fn x(field: F) -> Self {
        Self::monomial(field.clone(), field.one(), 1)
    }

    /// `c * X^k`.
    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self::new(field, coeffs)
    }

    pub fn from_i64s(field: F, coeffs: &[i64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.from_i64(c)).collect();
        Self::new(field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    /// Coefficient of `X^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> F::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> F::Elem {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.field.is_one(c))
    }

    pub fn ensure_same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field.name(), other.field.name()))
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self::new(self.field.clone(), coeffs)
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    fn add_impl(&self, other: &Self) -> Self {
        assert!(self.field == other.field, "polynomial field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => self.field.add(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(self.field.clone(), coeffs)
    }

    fn neg_impl(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.neg(a)).collect();
        Poly { field: self.field.clone(), coeffs }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        assert!(self.field == other.field, "polynomial field mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field.clone());
        }
        let f = &self.field;
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(&coeffs[i + j], &f.mul(a, b));
            }
        }
        Self::new(f.clone(), coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn divmod(&self, b: &Self) -> Result<(Self, Self)> {
        self.ensure_same_field(b)?;
        let lc = b.coeffs.last().ok_or(Error::DivisionByZeroPoly)?;
        let f = &self.field;
        let inv = f.inv(lc).expect("nonzero leading coefficient");
        let db = b.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = f.mul(&rem[k + db], &inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(&rem[k + j], &f.mul(&c, bj));
            }
            quot[k] = c;
        }
        rem.truncate(db);
        Ok((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        Ok(self.divmod(b)?.1)
    }

    /// Quotient when `b` divides `self` exactly, `None` otherwise.
    pub fn div_exact(&self, b: &Self) -> Result<Option<Self>> {
        let (q, r) = self.divmod(b)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, b: &Self) -> Result<Self> {
        self.ensure_same_field(b)?;
        let mut a = self.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let r = a.rem(&b)?.monic();
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*b = g`, `g` monic.
    pub fn xgcd(&self, b: &Self) -> Result<(Self, Self, Self)> {
        self.ensure_same_field(b)?;
        let f = self.field.clone();
        let (mut r0, mut r1) = (self.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(f.clone()), Self::zero(f.clone()));
        let (mut t0, mut t1) = (Self::zero(f.clone()), Self::one(f.clone()));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let inv = f.inv(&r0.leading_coeff()).expect("nonzero");
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
            .collect();
        Self::new(f.clone(), coeffs)
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    /// `f(X^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        if self.is_zero() {
            return self.clone();
        }
        let f = &self.field;
        let mut coeffs = vec![f.zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Poly { field: f.clone(), coeffs }
    }

    /// Whether only exponents divisible by `k` occur.
    pub fn is_power_composite(&self, k: usize) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % k == 0 || self.field.is_zero(c))
    }

    /// `g` with `g(X^k) = self`; requires [`Self::is_power_composite`].
    pub fn deflate(&self, k: usize) -> Self {
        debug_assert!(self.is_power_composite(k));
        let coeffs = self.coeffs.iter().step_by(k).cloned().collect();
        Self::new(self.field.clone(), coeffs)
    }

    pub fn is_even(&self) -> bool {
        self.is_power_composite(2)
    }

    /// `f(-X)`.
    pub fn substitute_neg(&self) -> Result<Self> {
        if self.field.characteristic() == 2 {
            return Err(Error::CharTwoUnsupported);
        }
        Ok(self.substitute_neg_unchecked())
    }

    pub(crate) fn substitute_neg_unchecked(&self) -> Self {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { f.neg(c) } else { c.clone() })
            .collect();
        Poly { field: f.clone(), coeffs }
    }

    /// `self * other mod m`.
    pub fn mulmod(&self, other: &Self, m: &Self) -> Result<Self> {
        (self * other).rem(m)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u128, m: &Self) -> Result<Self> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one(self.field.clone()).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(&base, m)?;
            }
        }
        Ok(acc)
    }

    /// Canonical order: degree first, then coefficients from `X^(deg-1)`
    /// down to the constant term.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for i in (0..self.coeffs.len()).rev() {
                let ord = self.field.cmp_elems(&self.coeffs[i], &other.coeffs[i]);
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }

    /// Square-free decomposition of a nonzero polynomial: pairwise coprime
    /// monic square-free `g_i` with `self = lc * prod g_i^m_i`, sorted by
    /// multiplicity. Characteristic `p` fields must provide p-th roots.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "square-free decomposition of zero");
        let f = self.monic();
        let mut out = if self.field.characteristic() == 0 {
            yun(&f)
        } else {
            squarefree_char_p(&f)
        };
        out.sort_by_key(|(_, m)| *m);
        out
    }

    pub fn to_string_in(&self, var: &str) -> String {
        struct Show<'a, F: Field>(&'a Poly<F>, &'a str);
        impl<F: Field> fmt::Display for Show<'_, F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_in(self.1, f)
            }
        }
        Show(self, var).to_string()
    }

    fn fmt_in(&self, var: &str, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = &self.field;
        if self.is_zero() {
            return out.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if f.is_zero(c) {
                continue;
            }
            let negative = f.characteristic() == 0 && f.cmp_elems(c, &f.zero()) == Ordering::Less;
            let mag = if negative { f.neg(c) } else { c.clone() };
            match (first, negative) {
                (true, true) => out.write_str("-")?,
                (true, false) => {}
                (false, true) => out.write_str(" - ")?,
                (false, false) => out.write_str(" + ")?,
            }
            first = false;
            let unit = f.is_one(&mag);
            if i == 0 || !unit {
                if i == 0 || f.is_atomic(&mag) {
                    f.fmt_elem(&mag, out)?;
                } else {
                    out.write_str("(")?;
                    f.fmt_elem(&mag, out)?;
                    out.write_str(")")?;
                }
                if i > 0 {
                    out.write_str("*")?;
                }
            }
            match i {
                0 => {}
                1 => out.write_str(var)?,
                _ => write!(out, "{var}^{i}")?,
            }
        }
        Ok(())
    }
}

fn yun<F: Field>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    let b = f.gcd(&df).unwrap();
    let mut c = f.div_exact(&b).unwrap().expect("gcd divides");
    let mut d = &df.div_exact(&b).unwrap().expect("gcd divides") - &c.derivative();
    let mut i = 1;
    while c.deg() > 0 {
        let a = c.gcd(&d).unwrap();
        c = c.div_exact(&a).unwrap().expect("gcd divides");
        d = &d.div_exact(&a).unwrap().expect("gcd divides") - &c.derivative();
        if a.deg() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn squarefree_char_p<F: Field + PthRoot>(f: &Poly<F>) -> Vec<(Poly<F>, usize)> {
    let p = f.field.characteristic() as usize;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        let root = f.field.pth_root_poly(f);
        return squarefree_char_p(&root)
            .into_iter()
            .map(|(g, m)| (g, m * p))
            .collect();
    }
    let mut c = f.gcd(&df).unwrap();
    let mut w = f.div_exact(&c).unwrap().expect("gcd divides");
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c).unwrap();
        let fac = w.div_exact(&y).unwrap().expect("gcd divides");
        if fac.deg() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(&w).unwrap().expect("gcd divides");
        i += 1;
    }
    if c.deg() > 0 {
        let root = f.field.pth_root_poly(&c);
        out.extend(
            squarefree_char_p(&root)
                .into_iter()
                .map(|(g, m)| (g, m * p)),
        );
    }
    out
}

/// p-th roots of coefficients; only meaningful for perfect fields of
/// characteristic `p`. The blanket impl panics for fields without them.
pub trait PthRoot: Field {
    fn pth_root_poly(&self, f: &Poly<Self>) -> Poly<Self>;
}

impl<F: Field> PthRoot for F {
    fn pth_root_poly(&self, f: &Poly<Self>) -> Poly<Self> {
        let p = self.characteristic() as usize;
        assert!(p > 0 && f.is_power_composite(p), "no p-th root available");
        let g = f.deflate(p);
        let coeffs = g
            .coeffs()
            .iter()
            .map(|c| self.pth_root(c).expect("field provides p-th roots"))
            .collect();
        Poly::new(self.clone(), coeffs)
    }
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> Hash for Poly<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{:?}]({})", self.field, self)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_in("X", f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl<F: Field> $trait<&Poly<F>> for &Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: &Poly<F>) -> Poly<F> {
                $imp(self, rhs)
            }
        }
        impl<F: Field> $trait<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                $imp(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Poly<F>, b: &Poly<F>| a.add_impl(b));
forward_binop!(Sub, sub, |a: &Poly<F>, b: &Poly<F>| a.add_impl(&b.neg_impl()));
forward_binop!(Mul, mul, |a: &Poly<F>, b: &Poly<F>| a.mul_impl(b));

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.neg_impl()
    }
}

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.neg_impl()
    }
}

impl Poly<Q> {
    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        let coeffs = coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        Poly::new(Q::new(), coeffs)
    }

    /// Integer coefficients, when all coefficients are integral.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// `(content, primitive)` with `self = content * primitive`, the primitive
    /// part having coprime integer coefficients and positive leading coefficient.
    pub fn content_primitive(&self) -> (BigRational, Self) {
        assert!(!self.is_zero(), "content of zero polynomial");
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if ints.last().expect("nonzero").is_negative() {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (BigRational::new(g, den), Self::from_bigints(&prim))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Fq;
    use proptest::prelude::*;

    fn q(coeffs: &[i64]) -> Poly<Q> {
        Poly::from_i64s(Q::new(), coeffs)
    }

    fn fq(field: &Fq, coeffs: &[i64]) -> Poly<Fq> {
        Poly::from_i64s(field.clone(), coeffs)
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&q(&[1, 1]) * &q(&[-1, 1]), q(&[-1, 0, 1]));
        let (quo, rem) = q(&[-1, 0, 1]).divmod(&q(&[-1, 1])).unwrap();
        assert_eq!(quo, q(&[1, 1]));
        assert!(rem.is_zero());
        assert_eq!(
            q(&[1, 2]).divmod(&Poly::zero(Q::new())).unwrap_err(),
            Error::DivisionByZeroPoly
        );
    }

    #[test]
    fn f3_product_matches_convolution() {
        let f3 = Fq::new(3, 1).unwrap();
        let a = [2i64, 1, 1];
        let b = [2i64, 2, 1];
        let mut conv = [0i64; 5];
        for i in 0..3 {
            for j in 0..3 {
                conv[i + j] += a[i] * b[j];
            }
        }
        let conv: Vec<i64> = conv.iter().map(|c| c % 3).collect();
        let prod = &fq(&f3, &a) * &fq(&f3, &b);
        assert_eq!(prod, fq(&f3, &conv));
    }

    #[test]
    fn field_mismatch() {
        let f3 = Fq::new(3, 1).unwrap();
        let f5 = Fq::new(5, 1).unwrap();
        assert!(matches!(
            fq(&f3, &[1, 1]).gcd(&fq(&f5, &[1, 1])),
            Err(Error::FieldMismatch(..))
        ));
        assert!(matches!(
            fq(&f3, &[1, 1]).divmod(&fq(&f5, &[1, 1])),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[-1, 1])).unwrap(), q(&[-1, 1]));
        let f = q(&[4, 0, 2]);
        assert_eq!(f.gcd(&f).unwrap(), f.monic());
        let phi3 = q(&[1, 1, 1]);
        let phi4 = q(&[1, 0, 1]);
        let phi5 = q(&[1, 1, 1, 1, 1]);
        let g = (&phi3 * &phi4).gcd(&(&phi4 * &phi5)).unwrap();
        assert_eq!(g, phi4);
    }

    #[test]
    fn xgcd_bezout() {
        let a = q(&[1, 2, 3, 4]);
        let b = q(&[5, 0, 1]);
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert!(g.is_one());
    }

    #[test]
    fn compose_power_examples() {
        assert_eq!(q(&[1, 1]).compose_power(2), q(&[1, 0, 1]));
        assert_eq!(q(&[1, 1, 1]).compose_power(2), q(&[1, 0, 1, 0, 1]));
        let f3 = Fq::new(3, 1).unwrap();
        let f = fq(&f3, &[2, 1, 0, 0, 1]);
        let mut expect = vec![0i64; 17];
        expect[0] = 2;
        expect[4] = 1;
        expect[16] = 1;
        assert_eq!(f.compose_power(4), fq(&f3, &expect));
    }

    #[test]
    fn substitute_neg_examples() {
        assert_eq!(q(&[1, 1]).substitute_neg().unwrap(), q(&[1, -1]));
        assert_eq!(q(&[1, 0, 1]).substitute_neg().unwrap(), q(&[1, 0, 1]));
        let f3 = Fq::new(3, 1).unwrap();
        assert_eq!(
            fq(&f3, &[2, 0, 0, 1, 1]).substitute_neg().unwrap(),
            fq(&f3, &[2, 0, 0, 2, 1])
        );
        let f2 = Fq::new(2, 1).unwrap();
        assert_eq!(
            fq(&f2, &[1, 1]).substitute_neg(),
            Err(Error::CharTwoUnsupported)
        );
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(
            q(&[1, -2, 1]).squarefree_decomposition(),
            vec![(q(&[-1, 1]), 2)]
        );
        assert_eq!(
            q(&[0, -1, 0, 1]).squarefree_decomposition(),
            vec![(q(&[0, -1, 0, 1]), 1)]
        );
        let f3 = Fq::new(3, 1).unwrap();
        let base = fq(&f3, &[2, 1, 1]);
        let cube = base.pow(3);
        assert_eq!(cube, fq(&f3, &[2, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cube.squarefree_decomposition(), vec![(base, 3)]);
    }

    #[test]
    fn squarefree_mixed_char_p() {
        let f3 = Fq::new(3, 1).unwrap();
        let a = fq(&f3, &[1, 1]);
        let b = fq(&f3, &[2, 0, 1, 1]);
        let c = fq(&f3, &[1, 0, 1]);
        let f = &(&a.pow(4) * &b.pow(3)) * &c.pow(2);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(c, 2), (b.monic(), 3), (a, 4)]);
    }

    #[test]
    fn content_primitive_examples() {
        let f = Poly::new(Q::new(), vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(f.content_primitive(), (ratio(1, 2), q(&[1, 1])));
        assert_eq!(q(&[0, 4, 6]).content_primitive(), (ratio(2, 1), q(&[0, 2, 3])));
        assert_eq!(q(&[2, -1]).content_primitive(), (ratio(-1, 1), q(&[-2, 1])));
    }

    #[test]
    fn display() {
        assert_eq!(q(&[-1, 0, 1]).to_string(), "X^2 - 1");
        assert_eq!(q(&[2, -3, 0, 1]).to_string(), "X^3 - 3*X + 2");
        let f = Poly::new(Q::new(), vec![ratio(1, 2), ratio(-3, 4)]);
        assert_eq!(f.to_string(), "-(3/4)*X + 1/2");
        assert_eq!(Poly::zero(Q::new()).to_string(), "0");
    }

    fn arb_small(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-9i64..=9, 1..=max_len)
    }

    fn fields() -> Vec<Fq> {
        vec![
            Fq::new(3, 1).unwrap(),
            Fq::new(5, 1).unwrap(),
            Fq::new(3, 2).unwrap(),
        ]
    }

    fn random_fq(field: &Fq, raw: &[i64]) -> Poly<Fq> {
        let q = field.order() as i64;
        let coeffs = raw
            .iter()
            .map(|&c| field.elem_from_index(c.rem_euclid(q) as u64))
            .collect();
        Poly::new(field.clone(), coeffs)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn divmod_roundtrip_q(a in arb_small(10), b in arb_small(6)) {
            let (a, b) = (q(&a), q(&b));
            prop_assume!(!b.is_zero());
            let (quo, rem) = a.divmod(&b).unwrap();
            prop_assert_eq!(&(&quo * &b) + &rem, a);
            prop_assert!(rem.is_zero() || rem.deg() < b.deg());
        }

        #[test]
        fn divmod_roundtrip_fq(which in 0usize..3, a in arb_small(12), b in arb_small(6)) {
            let field = &fields()[which];
            let (a, b) = (random_fq(field, &a), random_fq(field, &b));
            prop_assume!(!b.is_zero());
            let (quo, rem) = a.divmod(&b).unwrap();
            prop_assert_eq!(&(&quo * &b) + &rem, a);
            prop_assert!(rem.is_zero() || rem.deg() < b.deg());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(250))]

        #[test]
        fn squarefree_reconstructs_q(parts in prop::collection::vec((arb_small(3), 1u32..4), 1..4)) {
            let mut f = q(&[3]);
            for (c, e) in &parts {
                let g = q(c);
                if g.is_zero() { continue; }
                f = &f * &g.pow(*e);
            }
            let dec = f.squarefree_decomposition();
            let mut prod = Poly::constant(Q::new(), f.leading_coeff());
            for (g, m) in &dec {
                prod = &prod * &g.pow(*m as u32);
                prop_assert!(g.gcd(&g.derivative()).unwrap().is_one());
            }
            prop_assert_eq!(prod, f);
            for i in 0..dec.len() {
                for j in i + 1..dec.len() {
                    prop_assert!(dec[i].0.gcd(&dec[j].0).unwrap().is_one());
                }
            }
        }

        #[test]
        fn squarefree_reconstructs_fq(which in 0usize..3, parts in prop::collection::vec((arb_small(4), 1u32..7), 1..4)) {
            let field = &fields()[which];
            let mut f = Poly::one(field.clone());
            for (c, e) in &parts {
                let g = random_fq(field, c);
                if g.is_zero() { continue; }
                f = &f * &g.pow(*e);
            }
            let dec = f.squarefree_decomposition();
            let mut prod = Poly::constant(field.clone(), f.leading_coeff());
            for (g, m) in &dec {
                prod = &prod * &g.pow(*m as u32);
            }
            prop_assert_eq!(prod, f);
            for i in 0..dec.len() {
                for j in i + 1..dec.len() {
                    prop_assert!(dec[i].0.gcd(&dec[j].0).unwrap().is_one());
                }
            }
        }

        #[test]
        fn compose_power_evaluates(c in arb_small(6), k in 1usize..5, t in -5i64..5) {
            let f = q(&c);
            let t = BigRational::from_integer(t.into());
            let tk = Q::new().pow(&t, k as u128);
            prop_assert_eq!(f.compose_power(k).eval(&t), f.eval(&tk));
        }

        #[test]
        fn compose_power_evaluates_fq(which in 0usize..3, c in arb_small(6), k in 1usize..5, t in 0u64..9) {
            let field = &fields()[which];
            let f = random_fq(field, &c);
            let t = field.elem_from_index(t % field.order() as u64);
            let tk = field.pow(&t, k as u128);
            prop_assert_eq!(f.compose_power(k).eval(&t), f.eval(&tk));
        }

        #[test]
        fn substitute_neg_involution(c in arb_small(8)) {
            let f = q(&c);
            let g = f.substitute_neg().unwrap();
            prop_assert_eq!(g.substitute_neg().unwrap(), f.clone());
            prop_assert_eq!(g == f, f.is_even());
        }
    }
}
