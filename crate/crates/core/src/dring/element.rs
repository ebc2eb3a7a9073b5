//! Elements of `D = ⋃_n F[X^(1/2^n), X^(-1/2^n)]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// `coeff * X^(shift/2^level) * part(X^(1/2^level))` in normal form:
/// `part` is monic with nonzero constant term, and the level is minimal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DElement<F: Field> {
    coeff: F::Elem,
    level: u32,
    shift: i64,
    part: Poly<F>,
}

impl<F: Field> DElement<F> {
    /// Normal form of `X^(shift/2^level) * poly(X^(1/2^level))`.
    pub fn normalize(level: u32, shift: i64, poly: Poly<F>) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroElement);
        }
        let low = poly
            .coeffs()
            .iter()
            .position(|c| !poly.field().is_zero(c))
            .expect("nonzero polynomial");
        let field = poly.field().clone();
        let coeff = poly.leading_coeff();
        let stripped = Poly::new(field, poly.coeffs()[low..].to_vec()).monic();
        let mut e = DElement {
            coeff,
            level,
            shift: shift + low as i64,
            part: stripped,
        };
        while e.level > 0 && e.shift % 2 == 0 && e.part.is_even() {
            e.part = e.part.deflate(2);
            e.shift /= 2;
            e.level -= 1;
        }
        Ok(e)
    }

    /// `poly(X)` at level 0.
    pub fn from_poly(poly: Poly<F>) -> Result<Self> {
        Self::normalize(0, 0, poly)
    }

    /// `poly(X^(1/2^level))`.
    pub fn at_level(level: u32, poly: Poly<F>) -> Result<Self> {
        Self::normalize(level, 0, poly)
    }

    /// The unit `c * X^(shift/2^level)`.
    pub fn unit(field: F, coeff: F::Elem, level: u32, shift: i64) -> Result<Self> {
        Self::normalize(level, shift, Poly::constant(field, coeff))
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::unit(field, one, 0, 0).expect("nonzero")
    }

    pub fn field(&self) -> &F {
        self.part.field()
    }

    pub fn coeff(&self) -> &F::Elem {
        &self.coeff
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Monic part with nonzero constant term, in `Y = X^(1/2^level)`.
    pub fn part(&self) -> &Poly<F> {
        &self.part
    }

    pub fn is_unit(&self) -> bool {
        self.part.deg() == 0
    }

    /// `(shift, part)` rewritten at a level `>= self.level()`.
    pub fn at(&self, level: u32) -> (i64, Poly<F>) {
        assert!(level >= self.level, "cannot lower the level");
        let k = 1usize << (level - self.level);
        (self.shift * k as i64, self.part.compose_power(k))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let level = self.level.max(other.level);
        let (sa, pa) = self.at(level);
        let (sb, pb) = other.at(level);
        let field = self.field();
        let c = field.mul(&self.coeff, &other.coeff);
        let prod = (&pa * &pb).scale(&c);
        Self::normalize(level, sa + sb, prod).expect("domain has no zero divisors")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field().clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient, when `other` divides `self` in `D`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let level = self.level.max(other.level);
        let (sa, pa) = self.at(level);
        let (sb, pb) = other.at(level);
        let q = pa.div_exact(&pb).ok()??;
        let field = self.field();
        let c = field.div(&self.coeff, &other.coeff)?;
        Some(Self::normalize(level, sa - sb, q.scale(&c)).expect("nonzero"))
    }

    /// Terms `(coefficient, numerator, level)` of the Laurent expansion, each
    /// exponent `numerator / 2^level` in lowest terms, highest first.
    pub fn terms(&self) -> Vec<(F::Elem, i64, u32)> {
        let field = self.field();
        let mut out = Vec::new();
        for (i, c) in self.part.coeffs().iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let (mut num, mut lev) = (self.shift + i as i64, self.level);
            while lev > 0 && num % 2 == 0 {
                num /= 2;
                lev -= 1;
            }
            out.push((field.mul(&self.coeff, c), num, lev));
        }
        out
    }
}

/// Writes `X^(num/2^level)` in lowest terms; exponent 1 is omitted.
pub fn fmt_monomial(num: i64, level: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match (num, level) {
        (1, 0) => f.write_str("X"),
        (n, 0) => write!(f, "X^{n}"),
        (n, l) => write!(f, "X^({n}/{})", 1u64 << l),
    }
}

impl<F: Field> fmt::Display for DElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field();
        let zero = field.zero();
        for (idx, (c, num, lev)) in self.terms().into_iter().enumerate() {
            let negative = field.characteristic() == 0
                && field.cmp_elems(&c, &zero) == std::cmp::Ordering::Less;
            let mag = if negative { field.neg(&c) } else { c };
            match (idx == 0, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let constant = num == 0;
            if constant || !field.is_one(&mag) {
                let bare = constant || field.is_atomic(&mag);
                if !bare {
                    f.write_str("(")?;
                }
                field.fmt_elem(&mag, f)?;
                if !bare {
                    f.write_str(")")?;
                }
                if !constant {
                    f.write_str("*")?;
                }
            }
            if !constant {
                fmt_monomial(num, lev, f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::gf::Fq;
    use proptest::prelude::*;

    fn q(c: &[i64]) -> Poly<Q> {
        Poly::from_i64s(Q::new(), c)
    }

    #[test]
    fn normalize_examples() {
        // Y^2 at level 1 is X
        let e = DElement::normalize(1, 0, q(&[0, 0, 1])).unwrap();
        assert_eq!((e.level(), e.shift(), e.part().clone()), (0, 1, q(&[1])));
        // Y^3 - Y at level 1
        let e = DElement::normalize(1, 0, q(&[0, -1, 0, 1])).unwrap();
        assert_eq!((e.level(), e.shift(), e.part().clone()), (1, 1, q(&[-1, 0, 1])));
        let e = DElement::from_poly(q(&[2, 2])).unwrap();
        assert_eq!(*e.coeff(), Q::new().from_i64(2));
        assert_eq!(e.part(), &q(&[1, 1]));
        assert_eq!(
            DElement::normalize(2, 0, Poly::zero(Q::new())),
            Err(Error::ZeroElement)
        );
    }

    #[test]
    fn display() {
        let e = DElement::at_level(1, q(&[1, 1])).unwrap();
        assert_eq!(e.to_string(), "X^(1/2) + 1");
        let e = DElement::normalize(2, -1, q(&[-1, 0, 3])).unwrap();
        assert_eq!(e.to_string(), "3*X^(1/4) - X^(-1/4)");
        let f9: Fq = "F9".parse().unwrap();
        let t = f9.generator();
        let e = DElement::from_poly(Poly::new(f9.clone(), vec![f9.add(&t, &1), 1])).unwrap();
        assert_eq!(e.to_string(), "X + t + 1");
    }

    #[test]
    fn arithmetic() {
        let a = DElement::at_level(1, q(&[-1, 1])).unwrap();
        let b = DElement::at_level(1, q(&[1, 1])).unwrap();
        assert_eq!(a.mul(&b), DElement::from_poly(q(&[-1, 1])).unwrap());
        let x_half = DElement::unit(Q::new(), Q::new().one(), 1, 1).unwrap();
        assert!(x_half.is_unit());
        assert_eq!(x_half.pow(2), DElement::unit(Q::new(), Q::new().one(), 0, 1).unwrap());
        let c = DElement::from_poly(q(&[-1, 1])).unwrap();
        assert_eq!(c.div_exact(&a), Some(b.clone()));
        assert_eq!(b.div_exact(&c), None);
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(
            level in 0u32..4,
            shift in -6i64..6,
            c in prop::collection::vec(-3i64..=3, 1..8),
        ) {
            let p = q(&c);
            prop_assume!(!p.is_zero());
            let e = DElement::normalize(level, shift, p).unwrap();
            let again = DElement::normalize(e.level(), e.shift(), e.part().scale(e.coeff())).unwrap();
            prop_assert_eq!(&again, &e);
            let (s, lifted) = e.at(e.level() + 2);
            prop_assert_eq!(DElement::normalize(e.level() + 2, s, lifted.scale(e.coeff())).unwrap(), e);
        }
    }
}
