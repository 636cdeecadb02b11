//! Exact symbolic arithmetic in the Grassmann algebra on finitely many
//! generators `x_1, ..., x_n` over the rationals.
//!
//! Elements are kept in canonical form: a sparse map from strictly
//! increasing generator sequences to nonzero rational coefficients, iterated
//! in graded-lex order. On top of the arithmetic the crate provides the
//! Z2-grading, body/soul decomposition, left derivatives and Berezin
//! integrals, nil indices, and polynomial-identity checking for free
//! noncommutative polynomials.
//!
//! ```
//! use grassmann::{Element, scalar};
//!
//! let x1 = Element::generator(1);
//! let x2 = Element::generator(2);
//! let theta = x1.mul(&x2);
//! assert!(theta.mul(&theta).is_zero());
//! assert_eq!(x2.mul(&x1), theta.scalar_mul(&scalar::int(-1)));
//! ```

pub mod calculus;
pub mod cli;
pub mod element;
pub mod error;
pub mod grading;
pub mod pi;
pub mod scalar;
pub mod word;

pub use calculus::{berezin_integral, body, left_derivative, nil_index, soul, NilReport};
pub use element::Element;
pub use error::{Error, Result};
pub use grading::{
    anticommutator, commutator, even_part, is_central, is_homogeneous, odd_part, parity, Parity,
};
pub use pi::{
    evaluate, in_ideal, is_identity, is_multilinear, project, CheckMode, Domain, FreePolynomial,
    FreeWord, IdentityVerdict, Substitution,
};
pub use scalar::Scalar;
pub use word::{normalize_word, Monomial, Sign, SignedMonomial, Word};
