//! Z2-grading: even/odd projections, (anti)commutators and the center.

use std::fmt;

use crate::element::Element;
use crate::word::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(degree: usize) -> Parity {
        if degree.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Addition in Z2.
    pub fn sum(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

pub fn parity(m: &Monomial) -> Parity {
    Parity::of_degree(m.degree())
}

pub fn even_part(p: &Element) -> Element {
    p.filter(|m| parity(m) == Parity::Even)
}

pub fn odd_part(p: &Element) -> Element {
    p.filter(|m| parity(m) == Parity::Odd)
}

/// Common parity of the support. Zero counts as even; mixed elements give
/// `None`.
pub fn is_homogeneous(p: &Element) -> Option<Parity> {
    let mut parities = p.terms().map(|(m, _)| parity(m));
    let first = match parities.next() {
        Some(first) => first,
        None => return Some(Parity::Even),
    };
    parities.all(|q| q == first).then_some(first)
}

/// `[p, q] = pq - qp`
pub fn commutator(p: &Element, q: &Element) -> Element {
    &(p * q) - &(q * p)
}

/// `{p, q} = pq + qp`
pub fn anticommutator(p: &Element, q: &Element) -> Element {
    &(p * q) + &(q * p)
}

/// Whether `p` commutes with every element of the algebra on `n` generators.
///
/// Checking the generators suffices: `[p, ab] = [p, a]b + a[p, b]`, so an
/// element commuting with each `x_i` commutes with every product of them.
pub fn is_central(p: &Element, n: u32) -> bool {
    (1..=n).all(|i| commutator(p, &Element::generator(i)).is_zero())
}
