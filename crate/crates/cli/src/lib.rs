//! Command implementations behind the `adk` binary. Each returns the text
//! to print.

pub mod expr;
pub mod report;

use adk_core::dring::{
    count_primes_ff, enumerate_primes_ff, factor_in_d, factor_tree, gcd_d, is_prime_ff,
    lcm_d, prime_witness_q, reconstruct, render_forest, DElement, PrimeWitnessQ,
};
use adk_core::factor_ff::{count_irreducible, factor_ff, poly_order};
use adk_core::{cyclo, Field, Fq, Poly, Q};
use thiserror::Error;

pub use expr::{parse_element, parse_expr, Dyadic, ExprAST, ExprError, Scalars};
pub use report::{FactorJson, SCHEMA};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ExprError),
    #[error(transparent)]
    Domain(#[from] adk_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error(
        "input of degree {degree} lifts to degree {lifted} under X -> X^4, above the limit \
         {limit} (raise --max-degree or ADK_MAX_DEGREE)"
    )]
    TooLarge { degree: usize, lifted: usize, limit: usize },
}

pub type CliResult<T> = Result<T, CliError>;

/// `Q` or a finite field, as named on the command line.
#[derive(Clone, Debug)]
pub enum FieldArg {
    Q,
    Fq(Fq),
}

impl FieldArg {
    pub fn parse(s: &str) -> CliResult<Self> {
        match s.trim() {
            "Q" | "QQ" => Ok(FieldArg::Q),
            other => Ok(FieldArg::Fq(other.parse()?)),
        }
    }

    fn finite(&self, what: &str) -> CliResult<&Fq> {
        match self {
            FieldArg::Fq(f) => Ok(f),
            FieldArg::Q => Err(CliError::Usage(format!("{what} needs a finite field, e.g. --field F3"))),
        }
    }
}

fn guard<F: Field>(e: &DElement<F>, limit: usize) -> CliResult<()> {
    let degree = e.part().deg();
    let lifted = degree.saturating_mul(4);
    if lifted > limit {
        return Err(CliError::TooLarge { degree, lifted, limit });
    }
    Ok(())
}

fn element_q(s: &str, limit: usize) -> CliResult<DElement<Q>> {
    let e = parse_element(s, &Q::new())?;
    guard(&e, limit)?;
    Ok(e)
}

fn only_q(field: &FieldArg, what: &str) -> CliResult<()> {
    match field {
        FieldArg::Q => Ok(()),
        FieldArg::Fq(_) => Err(CliError::Usage(format!("{what} is implemented over Q only"))),
    }
}

pub fn factor(expr: &str, field: &FieldArg, json: bool, limit: usize) -> CliResult<String> {
    only_q(field, "canonical factorization")?;
    let e = element_q(expr, limit)?;
    let c = factor_in_d(&e)?;
    if json {
        Ok(serde_json::to_string(&FactorJson::new(&c)).expect("serializable"))
    } else {
        Ok(format!("{e}\n{}", report::factorization_text(&c)))
    }
}

pub fn is_prime(expr: &str, field: &FieldArg, limit: usize) -> CliResult<String> {
    match field {
        FieldArg::Q => {
            let e = element_q(expr, limit)?;
            let g = e.part();
            let lifted = || g.compose_power(4).to_string_in("Y");
            Ok(match prime_witness_q(g) {
                PrimeWitnessQ::Eisenstein(p) => format!("true  (Eisenstein at {p})"),
                PrimeWitnessQ::LiftIrreducible => format!("true  (f(Y^4) = {} is irreducible)", lifted()),
                PrimeWitnessQ::Unit => "false  (unit)".into(),
                PrimeWitnessQ::NotIrreducible => {
                    format!("false  ({} is reducible)", g.to_string_in("Y"))
                }
                PrimeWitnessQ::LiftReducible => format!("false  (f(Y^4) = {} is reducible)", lifted()),
            })
        }
        FieldArg::Fq(f) => {
            let e = parse_element(expr, f)?;
            guard(&e, limit)?;
            if e.is_unit() {
                return Ok("false  (unit)".into());
            }
            let v = is_prime_ff(e.part())?;
            Ok(match v.certificate {
                Some(c) => format!("true  (n={}, m={}, q^m-1={})", c.n, c.m, c.group_order),
                None => "false".into(),
            })
        }
    }
}

pub fn primes(field: &FieldArg, degree: u32) -> CliResult<String> {
    let f = field.finite("primes")?;
    let list = enumerate_primes_ff(f, degree)?;
    Ok(list.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("\n"))
}

pub fn count(field: &FieldArg, degree: u32) -> CliResult<String> {
    let f = field.finite("count")?;
    let n = count_irreducible(f.order() as u128, degree)?;
    let p = count_primes_ff(f.order(), degree)?;
    Ok(format!("N_q(m)={n}, primes-in-D={p}"))
}

pub fn order(poly: &str, field: &FieldArg) -> CliResult<String> {
    let f = field.finite("order")?;
    let g = parse_expr(poly, f)?.to_poly(f)?;
    Ok(poly_order(&g)?.to_string())
}

pub fn cyclotomic(d: u64, modulus: Option<&FieldArg>) -> CliResult<String> {
    if d == 0 {
        return Err(CliError::Usage("cyclotomic index must be positive".into()));
    }
    let phi = cyclo::cyclotomic(d);
    let Some(m) = modulus else {
        return Ok(phi.to_string());
    };
    let f = m.finite("--mod")?;
    let reduced = Poly::new(f.clone(), cyclo::cyclotomic_coeffs(d).iter().map(|c| f.from_bigint(c)).collect());
    let fact = factor_ff(&reduced)?;
    let shown: Vec<String> = fact
        .factors
        .iter()
        .map(|(g, k)| if *k > 1 { format!("({g})^{k}") } else { format!("({g})") })
        .collect();
    Ok(format!("{reduced} = {}", shown.join(" * ")))
}

pub fn gcd_or_lcm(a: &str, b: &str, field: &FieldArg, lcm: bool, limit: usize) -> CliResult<String> {
    only_q(field, if lcm { "lcm" } else { "gcd" })?;
    let fa = factor_in_d(&element_q(a, limit)?)?;
    let fb = factor_in_d(&element_q(b, limit)?)?;
    let c = if lcm { lcm_d(&fa, &fb) } else { gcd_d(&fa, &fb) };
    Ok(format!("{}\n= {}", report::factorization_text(&c), reconstruct(&c)))
}

pub fn tree(expr: &str, field: &FieldArg, depth: u32, limit: usize) -> CliResult<String> {
    only_q(field, "tree")?;
    let e = element_q(expr, limit)?;
    Ok(render_forest(&factor_tree(&e, depth)?).trim_end().to_string())
}
