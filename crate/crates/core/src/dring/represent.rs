//! Which exponent assignments on the primes of `D` over `Q` come from an
//! element.
//!
//! An assignment is realized by an element exactly when its support is a
//! finite set plus, for finitely many odd `d`, a cofinite part of the family
//! `Φ_{2d}(X^(1/2^i))` carrying an eventually constant exponent.

use super::element::DElement;
use super::qfact::{CanonicalFactorizationQ, ExpFn, PrimeElementD, TailTerm, UnitQ};
use crate::error::{Error, Result};
use crate::field::Q;
use crate::poly::Poly;

/// A prime named in an [`ExponentSpec`]; certified before use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeRef {
    /// `g(X^(1/2^level))`.
    Poly { level: u32, g: Poly<Q> },
    /// `Φ_d(X^(1/2^level))`.
    Cyclotomic { d: u64, level: u32 },
}

/// Exponents on `Φ_{2d}(X^(1/2^i))` for `i >= start`: `prefix` first, then
/// `cycle` repeated forever.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyPattern {
    pub d: u64,
    pub start: u32,
    pub prefix: Vec<u64>,
    pub cycle: Vec<u64>,
}

impl FamilyPattern {
    /// Exponent at level `i`.
    pub fn at(&self, i: u32) -> u64 {
        if i < self.start {
            return 0;
        }
        let k = (i - self.start) as usize;
        match self.prefix.get(k) {
            Some(v) => *v,
            None => self.cycle[(k - self.prefix.len()) % self.cycle.len()],
        }
    }
}

/// Unvalidated exponent data.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExponentSpec {
    pub finite_entries: Vec<(PrimeRef, u64)>,
    pub tails: Vec<TailTerm>,
    pub families: Vec<FamilyPattern>,
}

fn resolve(r: &PrimeRef) -> Result<PrimeElementD> {
    match r {
        PrimeRef::Poly { level, g } => PrimeElementD::new(*level, g.clone()),
        PrimeRef::Cyclotomic { d, level } => {
            if *d == 0 {
                return Err(Error::InvalidArgument("cyclotomic index 0".into()));
            }
            PrimeElementD::cyclotomic(*d, *level)
        }
    }
}

/// The normal form of the element realizing `spec` (unit 1), or the
/// violated condition.
pub fn is_representable(spec: &ExponentSpec) -> Result<CanonicalFactorizationQ> {
    let mut acc = ExpFn::default();
    for (r, k) in &spec.finite_entries {
        acc.add_prime(resolve(r)?, *k);
    }
    for t in &spec.tails {
        if t.d % 2 == 0 {
            return Err(Error::InvalidArgument(format!("tail index {} is even", t.d)));
        }
        acc.add_tail(t.d, t.root_level, t.exponent);
    }
    for fam in &spec.families {
        if fam.d % 2 == 0 {
            return Err(Error::InvalidArgument(format!("family index {} is even", fam.d)));
        }
        let Some(&b) = fam.cycle.first() else {
            return Err(Error::InvalidArgument("empty repeating part".into()));
        };
        if fam.cycle.iter().any(|&v| v != b) {
            let support_cofinite = fam.cycle.iter().all(|&v| v > 0);
            let reason = if support_cofinite {
                "exponents are not eventually constant"
            } else {
                "support is infinite but not cofinite"
            };
            return Err(Error::NotRepresentable(format!(
                "family Φ_{}(X^(1/2^i)): {reason}",
                2 * fam.d
            )));
        }
        let settled = fam.start + fam.prefix.len() as u32;
        for i in fam.start..settled {
            let p = PrimeElementD::cyclotomic(2 * fam.d, i)?;
            acc.add_prime(p, fam.at(i));
        }
        if b > 0 {
            // constant b from level `settled` on
            if settled == 0 {
                acc.add_prime(PrimeElementD::cyclotomic(2 * fam.d, 0)?, b);
                acc.add_tail(fam.d, 0, b);
            } else {
                acc.add_tail(fam.d, settled - 1, b);
            }
        }
    }
    Ok(acc.into_factorization(UnitQ::one()))
}

/// The element realizing a representable spec.
pub fn realize(spec: &ExponentSpec) -> Result<DElement<Q>> {
    Ok(is_representable(spec)?.reconstruct())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dring::factor_in_d;

    fn q(c: &[i64]) -> Poly<Q> {
        Poly::from_i64s(Q::new(), c)
    }

    fn single(fam: FamilyPattern) -> ExponentSpec {
        ExponentSpec { families: vec![fam], ..Default::default() }
    }

    #[test]
    fn accepts_x_minus_one() {
        let spec = single(FamilyPattern { d: 1, start: 1, prefix: vec![], cycle: vec![1] });
        let c = is_representable(&spec).unwrap();
        assert_eq!(c.reconstruct(), DElement::from_poly(q(&[-1, 1])).unwrap());
        assert_eq!(factor_in_d(&c.reconstruct()).unwrap(), c);
    }

    #[test]
    fn rejects_alternating_support() {
        let spec = single(FamilyPattern { d: 1, start: 1, prefix: vec![], cycle: vec![0, 1] });
        assert!(matches!(is_representable(&spec), Err(Error::NotRepresentable(_))));
        let spec = single(FamilyPattern { d: 1, start: 1, prefix: vec![], cycle: vec![1, 2] });
        assert!(matches!(is_representable(&spec), Err(Error::NotRepresentable(_))));
    }

    #[test]
    fn accepts_dip_below_eventual_value() {
        let spec = single(FamilyPattern { d: 1, start: 1, prefix: vec![1], cycle: vec![2] });
        let c = is_representable(&spec).unwrap();
        let expect = DElement::at_level(1, q(&[1, -1, -1, 1])).unwrap();
        assert_eq!(c.reconstruct(), expect);
        assert_eq!(factor_in_d(&expect).unwrap(), c);
    }

    #[test]
    fn finite_entries_are_certified() {
        let spec = ExponentSpec {
            finite_entries: vec![(PrimeRef::Poly { level: 0, g: q(&[1, 1, 1]) }, 1)],
            ..Default::default()
        };
        assert!(matches!(is_representable(&spec), Err(Error::NotAPrime(_))));
        let spec = ExponentSpec {
            finite_entries: vec![
                (PrimeRef::Poly { level: 0, g: q(&[-2, 1]) }, 2),
                (PrimeRef::Cyclotomic { d: 2, level: 3 }, 1),
            ],
            tails: vec![TailTerm { d: 3, root_level: 1, exponent: 1 }],
            families: vec![],
        };
        let c = is_representable(&spec).unwrap();
        assert_eq!(factor_in_d(&c.reconstruct()).unwrap(), c);
    }

    #[test]
    fn pattern_from_level_zero() {
        // every Φ_2(X^(1/2^i)), i >= 0, once: (X - 1)(X + 1)
        let spec = single(FamilyPattern { d: 1, start: 0, prefix: vec![], cycle: vec![1] });
        let c = is_representable(&spec).unwrap();
        assert_eq!(c.reconstruct(), DElement::from_poly(q(&[-1, 0, 1])).unwrap());
    }
}
