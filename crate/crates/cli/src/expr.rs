//! Expressions in `X^(a/2^n)` over `Q` or `F_q`.
//!
//! Grammar, whitespace insensitive:
//!
//! ```text
//! expr     := [+|-] term {(+|-) term}
//! term     := power {[*|/] power}          juxtaposition multiplies
//! power    := atom [^ exponent]
//! atom     := integer | X | t | ( expr )
//! exponent := [-] integer | ( [+|-] integer [/ integer] )
//! ```
//!
//! `t` is the generator of `F_q` when `q` is not prime. Fractional
//! exponents must have a power of two as denominator and apply to `X`
//! only.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use adk_core::dring::DElement;
use adk_core::{Field, Fq, Poly, Q};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use thiserror::Error;

/// Largest supported level `n` in `X^(a/2^n)`.
pub const MAX_LEVEL: u32 = 62;
/// Largest integer power of a compound subexpression.
pub const MAX_POWER: u64 = 4096;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("parse error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent at column {pos} has denominator {den}, not a power of 2")]
    NonDyadicExponent { pos: usize, den: String },
    #[error("at column {pos}: {msg} (field {field})")]
    FieldMismatch { pos: usize, field: String, msg: String },
}

/// Scalar fields the parser can read coefficients in.
pub trait Scalars: Field {
    fn from_integer(&self, n: &BigInt) -> Self::Elem;
    /// The field generator `t`, when the field is not prime.
    fn generator_t(&self) -> Option<Self::Elem>;
    /// Whether `a/b` coefficients are accepted.
    fn rational_coefficients(&self) -> bool;
}

impl Scalars for Q {
    fn from_integer(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }

    fn generator_t(&self) -> Option<BigRational> {
        None
    }

    fn rational_coefficients(&self) -> bool {
        true
    }
}

impl Scalars for Fq {
    fn from_integer(&self, n: &BigInt) -> u64 {
        self.from_bigint(n)
    }

    fn generator_t(&self) -> Option<u64> {
        (self.k() > 1).then(|| self.generator())
    }

    fn rational_coefficients(&self) -> bool {
        false
    }
}

/// The exponent `num / 2^level` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    pub num: i64,
    pub level: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, level: 0 };

    pub fn new(mut num: i64, mut level: u32) -> Self {
        while level > 0 && num % 2 == 0 {
            num /= 2;
            level -= 1;
        }
        Dyadic { num, level }
    }

    /// Numerator at a level `>= self.level`.
    pub fn at(&self, level: u32) -> Option<i64> {
        self.num.checked_mul(1i64.checked_shl(level - self.level)?)
    }

    fn checked_add(&self, o: &Dyadic) -> Option<Dyadic> {
        let l = self.level.max(o.level);
        Some(Dyadic::new(self.at(l)?.checked_add(o.at(l)?)?, l))
    }

    fn checked_mul_int(&self, k: i64) -> Option<Dyadic> {
        Some(Dyadic::new(self.num.checked_mul(k)?, self.level))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, o: &Self) -> Ordering {
        let l = self.level.max(o.level);
        let a = (self.num as i128) << (l - self.level);
        let b = (o.num as i128) << (l - o.level);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u64 << self.level)
        }
    }
}

/// A sum of terms `c * X^e`, exponents distinct and descending, no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAST<F: Field> {
    pub terms: Vec<(F::Elem, Dyadic)>,
}

impl<F: Field> ExprAST<F> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The element of `D` this expression denotes.
    pub fn to_element(&self, field: &F) -> adk_core::Result<DElement<F>> {
        let Some(level) = self.terms.iter().map(|(_, e)| e.level).max() else {
            return Err(adk_core::Error::ZeroElement);
        };
        let too_big = || adk_core::Error::Unsupported("exponent out of range".into());
        let nums = self
            .terms
            .iter()
            .map(|(_, e)| e.at(level).ok_or_else(too_big))
            .collect::<adk_core::Result<Vec<_>>>()?;
        let low = *nums.iter().min().expect("nonempty");
        let span = usize::try_from(nums.iter().max().expect("nonempty") - low).map_err(|_| too_big())?;
        if span > 1 << 24 {
            return Err(too_big());
        }
        let mut coeffs = vec![field.zero(); span + 1];
        for ((c, _), n) in self.terms.iter().zip(&nums) {
            coeffs[(n - low) as usize] = c.clone();
        }
        DElement::normalize(level, low, Poly::new(field.clone(), coeffs))
    }

    /// The expression as an ordinary polynomial, when every exponent is a
    /// nonnegative integer.
    pub fn to_poly(&self, field: &F) -> adk_core::Result<Poly<F>> {
        if self.terms.iter().any(|(_, e)| e.level > 0 || e.num < 0) {
            return Err(adk_core::Error::InvalidArgument(
                "expected a polynomial in X with nonnegative integer exponents".into(),
            ));
        }
        let deg = self.terms.first().map_or(0, |(_, e)| e.num as usize);
        let mut coeffs = vec![field.zero(); deg + 1];
        for (c, e) in &self.terms {
            coeffs[e.num as usize] = c.clone();
        }
        Ok(Poly::new(field.clone(), coeffs))
    }
}

/// Working value: exponent to coefficient.
type Value<E> = BTreeMap<Dyadic, E>;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    T,
    Op(char),
}

struct Parser<'a, F: Scalars> {
    field: &'a F,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

fn tokenize(s: &str) -> Result<(Vec<(usize, Tok)>, usize), ExprError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        match c {
            c if c.is_whitespace() => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push((pos, Tok::Num(digits.parse().expect("digits"))));
            }
            'X' | 'x' => out.push((pos, Tok::X)),
            't' => out.push((pos, Tok::T)),
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => out.push((pos, Tok::Op(c))),
            other => {
                return Err(ExprError::Syntax { pos, msg: format!("unexpected character '{other}'") })
            }
        }
        i += 1;
    }
    Ok((out, chars.len() + 1))
}

impl<'a, F: Scalars> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<(), ExprError> {
        if self.eat(op) {
            Ok(())
        } else {
            self.syntax(format!("expected '{op}'"))
        }
    }

    fn constant(&self, c: F::Elem) -> Value<F::Elem> {
        let mut v = Value::new();
        if !self.field.is_zero(&c) {
            v.insert(Dyadic::ZERO, c);
        }
        v
    }

    fn add_into(&self, acc: &mut Value<F::Elem>, e: Dyadic, c: F::Elem) {
        let sum = match acc.remove(&e) {
            Some(old) => self.field.add(&old, &c),
            None => c,
        };
        if !self.field.is_zero(&sum) {
            acc.insert(e, sum);
        }
    }

    fn mul(&self, a: &Value<F::Elem>, b: &Value<F::Elem>, pos: usize) -> Result<Value<F::Elem>, ExprError> {
        let mut out = Value::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e = ea.checked_add(eb).ok_or_else(|| overflow(pos))?;
                self.add_into(&mut out, e, self.field.mul(ca, cb));
            }
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Value<F::Elem>, ExprError> {
        let mut acc = Value::new();
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            for (e, c) in self.term()? {
                let c = if negate { self.field.neg(&c) } else { c };
                self.add_into(&mut acc, e, c);
            }
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::X | Tok::T | Tok::Op('(')))
    }

    fn term(&mut self) -> Result<Value<F::Elem>, ExprError> {
        let mut acc = self.power()?;
        loop {
            let pos = self.pos();
            if self.eat('*') || self.starts_atom() {
                let rhs = self.power()?;
                acc = self.mul(&acc, &rhs, pos)?;
            } else if self.eat('/') {
                let rhs = self.power()?;
                let inv = self.invert_monomial(&rhs, pos)?;
                acc = self.mul(&acc, &inv, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn invert_monomial(&self, v: &Value<F::Elem>, pos: usize) -> Result<Value<F::Elem>, ExprError> {
        let mut it = v.iter();
        let (Some((e, c)), None) = (it.next(), it.next()) else {
            return Err(ExprError::Syntax {
                pos,
                msg: if v.is_empty() { "division by zero" } else { "divisor must be a single term" }.into(),
            });
        };
        if !self.field.is_one(c) && !self.field.rational_coefficients() {
            return Err(ExprError::FieldMismatch {
                pos,
                field: self.field.name(),
                msg: "rational coefficients need the field Q".into(),
            });
        }
        let inv = self.field.inv(c).expect("nonzero");
        let e = e.checked_mul_int(-1).ok_or_else(|| overflow(pos))?;
        Ok(Value::from([(e, inv)]))
    }

    fn power(&mut self) -> Result<Value<F::Elem>, ExprError> {
        let base = self.atom()?;
        let pos = self.pos();
        if !self.eat('^') {
            return Ok(base);
        }
        let exp = self.exponent()?;
        self.raise(base, exp, pos)
    }

    fn raise(&self, base: Value<F::Elem>, exp: Dyadic, pos: usize) -> Result<Value<F::Elem>, ExprError> {
        if base.len() == 1 {
            let (e, c) = base.into_iter().next().expect("one term");
            if exp.level > 0 && !self.field.is_one(&c) {
                return self.syntax_at(pos, "fractional powers apply to X only");
            }
            let coeff = if exp.num >= 0 {
                self.field.pow(&c, exp.num as u128)
            } else {
                let inv = self.field.inv(&c).expect("nonzero");
                self.field.pow(&inv, exp.num.unsigned_abs() as u128)
            };
            let prod = e.num.checked_mul(exp.num).ok_or_else(|| overflow(pos))?;
            let num = Dyadic::new(prod, e.level + exp.level);
            if num.level > MAX_LEVEL {
                return Err(overflow(pos));
            }
            return Ok(Value::from([(num, coeff)]));
        }
        if base.is_empty() {
            return if exp.num > 0 { Ok(base) } else { self.syntax_at(pos, "0 to a nonpositive power") };
        }
        if exp.level > 0 || exp.num < 0 || exp.num as u64 > MAX_POWER {
            return self.syntax_at(
                pos,
                format!("powers of a sum must be integers in 0..={MAX_POWER}"),
            );
        }
        let mut acc = self.constant(self.field.one());
        for _ in 0..exp.num {
            acc = self.mul(&acc, &base, pos)?;
        }
        Ok(acc)
    }

    fn syntax_at<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { pos, msg: msg.into() })
    }

    fn integer(&mut self) -> Result<i64, ExprError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Num(n)) => {
                let v = n.to_i64().ok_or_else(|| overflow(pos))?;
                self.at += 1;
                Ok(v)
            }
            _ => self.syntax("expected an integer"),
        }
    }

    fn exponent(&mut self) -> Result<Dyadic, ExprError> {
        if !self.eat('(') {
            let neg = self.eat('-');
            let n = self.integer()?;
            return Ok(Dyadic::new(if neg { -n } else { n }, 0));
        }
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let n = self.integer()?;
        let n = if neg { -n } else { n };
        let mut den = 1;
        let den_pos = self.pos();
        if self.eat('/') {
            let dp = self.pos();
            den = self.integer()?;
            if den == 0 {
                return self.syntax_at(dp, "zero denominator");
            }
        }
        self.expect(')')?;
        let g = gcd(n.unsigned_abs(), den as u64) as i64;
        let (n, den) = (n / g, den / g);
        if (den as u64).is_power_of_two() {
            let level = den.trailing_zeros();
            if level > MAX_LEVEL {
                return Err(overflow(den_pos));
            }
            Ok(Dyadic::new(n, level))
        } else {
            Err(ExprError::NonDyadicExponent { pos: den_pos + 1, den: den.to_string() })
        }
    }

    fn atom(&mut self) -> Result<Value<F::Elem>, ExprError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(self.constant(self.field.from_integer(&n)))
            }
            Some(Tok::X) => {
                self.at += 1;
                Ok(Value::from([(Dyadic::new(1, 0), self.field.one())]))
            }
            Some(Tok::T) => {
                self.at += 1;
                match self.field.generator_t() {
                    Some(t) => Ok(self.constant(t)),
                    None => Err(ExprError::FieldMismatch {
                        pos,
                        field: self.field.name(),
                        msg: "'t' names the generator of a non-prime F_q".into(),
                    }),
                }
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(Tok::Op(c)) => self.syntax(format!("unexpected '{c}'")),
            None => self.syntax("unexpected end of input"),
        }
    }
}

fn overflow(pos: usize) -> ExprError {
    ExprError::Syntax { pos, msg: "exponent out of range".into() }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Parses `s` as an element expression over `field`.
pub fn parse_expr<F: Scalars>(s: &str, field: &F) -> Result<ExprAST<F>, ExprError> {
    let (toks, end) = tokenize(s)?;
    if toks.is_empty() {
        return Err(ExprError::Syntax { pos: 1, msg: "empty expression".into() });
    }
    let mut p = Parser { field, toks, at: 0, end };
    let v = p.expr()?;
    if p.at < p.toks.len() {
        return p.syntax("unexpected trailing input");
    }
    Ok(ExprAST { terms: v.into_iter().rev().map(|(e, c)| (c, e)).collect() })
}

/// Parses and lowers in one step.
pub fn parse_element<F: Scalars>(s: &str, field: &F) -> Result<DElement<F>, crate::CliError> {
    Ok(parse_expr(s, field)?.to_element(field)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Q {
        Q::new()
    }

    fn show(s: &str) -> String {
        parse_element(s, &q()).unwrap().to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(show("X - 1"), "X - 1");
        let e = parse_element("X^(1/2) + 1", &q()).unwrap();
        assert_eq!((e.level(), e.part().deg()), (1, 1));
        assert!(matches!(
            parse_expr("X^(1/3) + 1", &q()),
            Err(ExprError::NonDyadicExponent { .. })
        ));
    }

    #[test]
    fn arithmetic_forms() {
        assert_eq!(show("(X-1)*(X+1)"), "X^2 - 1");
        assert_eq!(show("(X - 1)(X + 1)"), "X^2 - 1");
        assert_eq!(show("X^-1 + X"), "X + X^-1");
        assert_eq!(show("-X^-1 + X"), "X - X^-1");
        assert_eq!(show("(3/4)*X + 1/2"), "(3/4)*X + 1/2");
        assert_eq!(show("-(3/4)*X^(1/2)"), "-(3/4)*X^(1/2)");
        assert_eq!(show("X^(2/4)"), "X^(1/2)");
        assert_eq!(show("(X^(1/2))^2"), "X");
        assert_eq!(show("(X^(1/4) + 1)^2"), "X^(1/2) + 2*X^(1/4) + 1");
        assert_eq!(show("2X^3/X"), "2*X^2");
    }

    #[test]
    fn finite_fields() {
        let f9: Fq = "F9".parse().unwrap();
        let e = parse_element("X + t + 1", &f9).unwrap();
        assert_eq!(e.to_string(), "X + t + 1");
        assert_eq!(parse_element("(t+1)*X + 2*t", &f9).unwrap().to_string(), "(t + 1)*X + 2*t");
        let f3: Fq = "F3".parse().unwrap();
        assert_eq!(parse_element("X + 4", &f3).unwrap().to_string(), "X + 1");
        assert!(matches!(parse_expr("X + t", &f3), Err(ExprError::FieldMismatch { .. })));
        assert!(matches!(parse_expr("X/2", &f3), Err(ExprError::FieldMismatch { .. })));
        assert!(matches!(parse_expr("t", &q()), Err(ExprError::FieldMismatch { .. })));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_expr("X + ", &q()),
            Err(ExprError::Syntax { pos: 5, msg: "unexpected end of input".into() })
        );
        assert_eq!(
            parse_expr("X ? 1", &q()),
            Err(ExprError::Syntax { pos: 3, msg: "unexpected character '?'".into() })
        );
        assert!(matches!(parse_expr("(X+1)^(1/2)", &q()), Err(ExprError::Syntax { pos: 6, .. })));
        assert!(matches!(parse_expr("X/0", &q()), Err(ExprError::Syntax { .. })));
        assert!(parse_expr("", &q()).is_err());
        assert!(matches!(parse_element("X - X", &q()), Err(crate::CliError::Domain(_))));
    }

    #[test]
    fn dyadic_order_and_display() {
        assert!(Dyadic::new(1, 1) < Dyadic::new(1, 0));
        assert_eq!(Dyadic::new(6, 3).to_string(), "3/4");
        assert_eq!(Dyadic::new(-4, 1).to_string(), "-2");
    }
}
