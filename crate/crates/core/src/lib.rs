//! Bounded-degree algebraic dependence over commutative rings.
//!
//! Elements `a_1..a_n` of an `R`-algebra `A` are dependent with respect to a
//! monomial ordering when some polynomial `f` over `R`, whose least term has
//! coefficient `1`, vanishes at them. This crate searches for such relations
//! up to a degree bound, issues certificates that can be checked
//! independently, and provides the exact algebra underneath: big-integer
//! scalars, sparse polynomials, monomial orderings, Hermite normal forms and
//! Groebner bases.
//!
//! ```
//! use trdeg::{search_submonic_relation, AlgebraConfig, DependenceVerdict, MonomialOrdering, Ring};
//!
//! let config = AlgebraConfig::new(Ring::ZZ, Ring::ZZ).unwrap();
//! let elems = config.parse_elements(&["12", "18"]).unwrap();
//! let ord: MonomialOrdering = "lex:x1>x2".parse().unwrap();
//! match search_submonic_relation(&config, &elems, &ord, 3).unwrap() {
//!     DependenceVerdict::Dependent(cert) => assert_eq!(cert.poly_string(), "x2^2 - 27*x1"),
//!     other => panic!("{other:?}"),
//! }
//! ```

pub mod arith;
pub mod cli;
pub mod cl;
pub mod dependence;
pub mod error;
pub mod experiment;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod ordering;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod weights;

pub use cl::{cl_search, cl_to_submonic, cl_verify, finite_ring_dim_lt, ClCertificate, ClOutcome, FiniteDimDecision};
pub use dependence::{
    dependence_matrix, eval_poly, pid_pair_certificate, search_submonic_relation, verify_certificate,
    AlgebraConfig, DependenceMatrix, DependenceVerdict, SubmonicCertificate, VerifyFailure,
};
pub use error::{Error, Result};
pub use experiment::{known_dim, run_experiment, ExperimentReport, ExperimentSpec};
pub use groebner::{buchberger, ideal_membership, staircase_dimension, GroebnerBasis};
pub use linalg::{hnf, solve_in_span, IntMatrix, SpanSolution};
pub use monomial::Monomial;
pub use ordering::{is_submonic, is_weight_graded, trailing_term, MonomialOrdering};
pub use parse::{parse_poly, parse_ring};
pub use poly::Polynomial;
pub use ring::{Elem, Ring, RingElement};
pub use scalar::Scalar;
pub use weights::{separating_weights, WeightVector};
