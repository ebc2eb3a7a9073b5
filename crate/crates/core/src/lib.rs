//! Factorization in the ring of dyadic Puiseux-Laurent polynomials
//! `D = ⋃_n F[X^(1/2^n), X^(-1/2^n)]` over `Q` and odd finite fields.

pub mod error;
pub mod cyclo;
pub mod dring;
pub mod factor_ff;
pub mod factor_q;
pub mod field;
pub mod gf;
pub mod numth;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Field, Rationals, Q};
pub use gf::Fq;
pub use poly::Poly;

/// Polynomials over the rationals.
pub type QPoly = Poly<Q>;
/// Polynomials over a finite field.
pub type FqPoly = Poly<Fq>;
