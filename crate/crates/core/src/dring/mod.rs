//! The ring `D = ⋃_n F[X^(1/2^n), X^(-1/2^n)]`: elements, primality,
//! canonical factorization over `Q`, and the finite-field criteria.

mod element;
mod ff;
mod qfact;
mod represent;
mod tree;

pub use element::{fmt_monomial, DElement};
pub use ff::{
    charp_is_primary, charp_pth_root_step, count_primes_ff, enumerate_primes_ff, is_prime_ff,
    prime_by_lift, prime_by_order, OrderCertificate, PrimeVerdictFF,
};
pub use qfact::{
    divides_d, factor_in_d, gcd_d, is_prime_q, lcm_d, prime_witness_q, reconstruct,
    CanonicalFactorizationQ, PrimeElementD, PrimeWitnessQ, TailTerm, UnitQ,
};
pub use represent::{is_representable, realize, ExponentSpec, FamilyPattern, PrimeRef};
pub use tree::{factor_tree, render_forest, NodeKind, TreeNode};
