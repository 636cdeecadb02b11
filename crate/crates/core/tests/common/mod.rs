#![allow(dead_code)]

use grassmann::pi::{basis, Domain};
use grassmann::{Element, Monomial, Scalar};
use num_bigint::BigInt;
use rand::Rng;

pub fn rational<R: Rng>(rng: &mut R) -> Scalar {
    let numer = rng.gen_range(-9i64..=9);
    let denom = rng.gen_range(1i64..=5);
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Scalar {
    loop {
        let q = rational(rng);
        if q != Scalar::from_integer(0.into()) {
            return q;
        }
    }
}

/// Sparse random element: each admitted basis monomial present with
/// probability 1/2, random rational coefficient.
pub fn element<R: Rng>(rng: &mut R, n: u32, domain: Domain) -> Element {
    let mut terms = Vec::new();
    for m in basis(n, domain) {
        if rng.gen_bool(0.5) {
            terms.push((m, rational(rng)));
        }
    }
    terms.into_iter().collect()
}

pub fn monomial(indices: &[u32]) -> Monomial {
    Monomial::from_sorted(indices.to_vec()).expect("ascending")
}
