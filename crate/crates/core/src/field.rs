//! Coefficient fields.
//!
//! A [`Field`] is a context object that owns the arithmetic; its elements are
//! plain values. This lets runtime-parameterized fields such as `F_9` share
//! one polynomial implementation with `Q`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;
    /// Total order used for canonical sorting of factor lists.
    fn cmp_elems(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering;
    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    /// Short human-readable name, e.g. `Q` or `F9`.
    fn name(&self) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|b| self.mul(a, &b))
    }

    fn pow(&self, a: &Self::Elem, mut exp: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Whether the element prints as a single token (no `+`/`-` inside).
    fn is_atomic(&self, _a: &Self::Elem) -> bool {
        true
    }

    /// The unique `b` with `b^p = a` in a perfect field of characteristic `p`.
    fn pth_root(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }
}

/// The rationals over arbitrary-precision integers.
pub type Q = Rationals<num_bigint::BigInt>;

/// Bounds on the integer type backing [`Rationals`].
pub trait RationalInt:
    Integer + Signed + Clone + Hash + FromPrimitive + fmt::Display + fmt::Debug + Send + Sync
{
}

impl<T> RationalInt for T where
    T: Integer + Signed + Clone + Hash + FromPrimitive + fmt::Display + fmt::Debug + Send + Sync
{
}

/// The rational numbers with numerators and denominators of type `T`.
pub struct Rationals<T = num_bigint::BigInt>(PhantomData<T>);

impl<T> Rationals<T> {
    pub const fn new() -> Self {
        Rationals(PhantomData)
    }
}

impl<T> Default for Rationals<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T> Clone for Rationals<T> {
    fn clone(&self) -> Self {
        Self::new()
    }
}

impl<T> Copy for Rationals<T> {}

impl<T> PartialEq for Rationals<T> {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl<T> Eq for Rationals<T> {}

impl<T> fmt::Debug for Rationals<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Q")
    }
}

impl<T: RationalInt> Field for Rationals<T> {
    type Elem = Ratio<T>;

    fn zero(&self) -> Ratio<T> {
        Ratio::zero()
    }

    fn one(&self) -> Ratio<T> {
        Ratio::one()
    }

    fn add(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a + b
    }

    fn sub(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a - b
    }

    fn neg(&self, a: &Ratio<T>) -> Ratio<T> {
        -a.clone()
    }

    fn mul(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        a * b
    }

    fn inv(&self, a: &Ratio<T>) -> Option<Ratio<T>> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn from_i64(&self, n: i64) -> Ratio<T> {
        Ratio::from_integer(T::from_i64(n).expect("i64 fits the integer type"))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn cmp_elems(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ordering {
        a.cmp(b)
    }

    fn fmt_elem(&self, a: &Ratio<T>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }

    fn name(&self) -> String {
        "Q".into()
    }

    fn is_zero(&self, a: &Ratio<T>) -> bool {
        a.is_zero()
    }

    fn is_atomic(&self, a: &Ratio<T>) -> bool {
        a.is_integer()
    }
}
