//! JSON form of a canonical factorization.

use adk_core::dring::{CanonicalFactorizationQ, DElement, UnitQ};
use serde::{Deserialize, Serialize};

use crate::expr::Dyadic;

pub const SCHEMA: &str = "adk-factor/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitJson {
    /// Exact rational, e.g. `"-3/4"`.
    pub coeff: String,
    /// Exponent of `X`, e.g. `"1/2"`.
    pub monomial: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimeJson {
    /// The prime as an expression in `X`.
    pub element: String,
    /// `g` in `g(X^(1/2^level))`, written in `Y`.
    pub poly: String,
    pub level: u32,
    pub exp: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TailJson {
    pub d: u64,
    pub level: u32,
    pub exp: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorJson {
    pub schema: String,
    pub unit: UnitJson,
    pub primes: Vec<PrimeJson>,
    pub tails: Vec<TailJson>,
}

impl FactorJson {
    pub fn new(c: &CanonicalFactorizationQ) -> Self {
        let UnitQ { coeff, shift, level } = &c.unit;
        FactorJson {
            schema: SCHEMA.to_string(),
            unit: UnitJson {
                coeff: coeff.to_string(),
                monomial: Dyadic::new(*shift, *level).to_string(),
            },
            primes: c
                .finite_primes
                .iter()
                .map(|(p, k)| PrimeJson {
                    element: p.to_element().to_string(),
                    poly: p.poly().to_string_in("Y"),
                    level: p.level(),
                    exp: *k,
                })
                .collect(),
            tails: c
                .tails
                .iter()
                .map(|t| TailJson { d: t.d, level: t.root_level, exp: t.exponent })
                .collect(),
        }
    }
}

/// One line per unit, finite prime and tail.
pub fn factorization_text(c: &CanonicalFactorizationQ) -> String {
    let mut lines = vec![format!("unit: {}", c.unit.to_element())];
    for (p, k) in &c.finite_primes {
        lines.push(format!("prime: {p}  exponent {k}"));
    }
    for t in &c.tails {
        let root = DElement::at_level(t.root_level, adk_core::cyclo::cyclotomic(t.d)).expect("nonzero");
        let power = if t.exponent > 1 { format!("^{}", t.exponent) } else { String::new() };
        lines.push(format!(
            "tail: Φ_{}(X^(1/2^i)) for all i > {}  exponent {}  (collapses to ({root}){power})",
            2 * t.d,
            t.root_level,
            t.exponent,
        ));
    }
    lines.join("\n")
}
