//! Sparse elements of the Grassmann algebra.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::Scalar;
use crate::word::{normalize_word, Monomial, Sign, SignedMonomial, Word};

/// A finite linear combination of canonical monomials.
///
/// No stored coefficient is zero, so two elements are equal exactly when
/// their term maps are. Terms iterate in graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::constant(Scalar::one())
    }

    pub fn constant(value: Scalar) -> Self {
        Element::term(Monomial::unit(), value)
    }

    /// The generator `x_index`. Panics on index 0.
    pub fn generator(index: u32) -> Self {
        let m = Monomial::generator(index).expect("generator indices are 1-based");
        Element::term(m, Scalar::one())
    }

    pub fn term(monomial: Monomial, coefficient: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(monomial, coefficient);
        }
        Element { terms }
    }

    /// Projects a list of (word, coefficient) pairs into the algebra:
    /// each word is normalized and like monomials are combined.
    pub fn from_words<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut out = Element::zero();
        for (word, coefficient) in pairs {
            if let SignedMonomial::Term(sign, m) = normalize_word(&word) {
                out.accumulate(m, sign, &coefficient);
            }
        }
        out
    }

    fn accumulate(&mut self, monomial: Monomial, sign: Sign, coefficient: &Scalar) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            Entry::Vacant(slot) => {
                slot.insert(match sign {
                    Sign::Plus => coefficient.clone(),
                    Sign::Minus => -coefficient.clone(),
                });
            }
            Entry::Occupied(mut slot) => {
                match sign {
                    Sign::Plus => *slot.get_mut() += coefficient,
                    Sign::Minus => *slot.get_mut() -= coefficient,
                }
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Scalar {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Maximum monomial degree, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest generator index appearing in the support, 0 if none.
    pub fn max_generator(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::max_index)
            .max()
            .unwrap_or(0)
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter<F>(&self, mut keep: F) -> Element
    where
        F: FnMut(&Monomial) -> bool,
    {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a signed linear map on basis monomials, extended linearly.
    pub(crate) fn map_monomials<F>(&self, mut f: F) -> Element
    where
        F: FnMut(&Monomial) -> Option<(Sign, Monomial)>,
    {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            if let Some((sign, image)) = f(m) {
                out.accumulate(image, sign, c);
            }
        }
        out
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), Sign::Plus, c);
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), Sign::Minus, c);
        }
        out
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scalar_mul(&self, alpha: &Scalar) -> Element {
        if alpha.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * alpha))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((sign, m)) = ma.product(mb) {
                    out.accumulate(m, sign, &(ca * cb));
                }
            }
        }
        out
    }

    /// `self^exponent` by sequential multiplication; `p^0 = 1`.
    pub fn pow(&self, exponent: u32) -> Element {
        let mut acc = Element::one();
        for _ in 0..exponent {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(self);
        }
        acc
    }
}

impl FromIterator<(Monomial, Scalar)> for Element {
    fn from_iter<I: IntoIterator<Item = (Monomial, Scalar)>>(iter: I) -> Self {
        let mut out = Element::zero();
        for (m, c) in iter {
            out.accumulate(m, Sign::Plus, &c);
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element::add(self, rhs)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element::sub(self, rhs)
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn w(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    fn x(i: u32) -> Element {
        Element::generator(i)
    }

    fn m(v: &[u32]) -> Monomial {
        Monomial::from_sorted(v.to_vec()).unwrap()
    }

    #[test]
    fn make_element_canonical_input() {
        let p = Element::from_words([(w(&[1]), int(2)), (w(&[2]), int(3))]);
        assert_eq!(p, &x(1).scalar_mul(&int(2)) + &x(2).scalar_mul(&int(3)));
    }

    #[test]
    fn make_element_combines_reordered_words() {
        let (d, e) = (int(5), int(2));
        let p = Element::from_words([(w(&[1, 2]), d), (w(&[2, 1]), e)]);
        assert_eq!(p, Element::term(m(&[1, 2]), int(3)));
    }

    #[test]
    fn make_element_repeated_index_annihilates() {
        assert!(Element::from_words([(w(&[1, 1]), int(7))]).is_zero());
    }

    #[test]
    fn add_examples() {
        assert!((&x(1) + &x(1).neg()).is_zero());
        let lhs = &(&Element::one() + &x(1)) + &x(2);
        assert_eq!(lhs.len(), 3);
        assert_eq!(lhs.coefficient(&Monomial::unit()), int(1));
    }

    #[test]
    fn scalar_mul_examples() {
        let p = &Element::one() + &Element::term(m(&[1, 2]), int(1));
        assert!(p.scalar_mul(&int(0)).is_zero());
        assert_eq!(p.scalar_mul(&int(1)), p);
        assert_eq!(x(1).scalar_mul(&int(2)).scalar_mul(&ratio(1, 2)), x(1));
    }

    #[test]
    fn mul_examples() {
        let theta = Element::term(m(&[1, 2]), int(1));
        assert!((&theta * &theta).is_zero());

        let p = &Element::constant(int(1)) + &x(1).scalar_mul(&int(2));
        let q = &Element::constant(int(3)) + &x(1).scalar_mul(&int(5));
        let expected = &Element::constant(int(3)) + &x(1).scalar_mul(&int(11));
        assert_eq!(&p * &q, expected);

        assert_eq!(&x(2) * &x(1), Element::term(m(&[1, 2]), int(-1)));
    }

    #[test]
    fn equals_examples() {
        let sym = Element::from_words([(w(&[1, 2]), int(1)), (w(&[2, 1]), int(1))]);
        assert_eq!(sym, Element::zero());
        assert_ne!(x(1), x(2));
    }

    #[test]
    fn degree_examples() {
        let p = &Element::one() + &Element::term(m(&[1, 2]), int(1));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(Element::zero().degree(), None);
        assert_eq!(Element::constant(int(5)).degree(), Some(0));
    }

    #[test]
    fn anticommuting_generators() {
        for i in 1..=8 {
            for j in 1..=8 {
                assert!(
                    (&(&x(i) * &x(j)) + &(&x(j) * &x(i))).is_zero(),
                    "x{i}, x{j}"
                );
            }
        }
    }

    #[test]
    fn pow_edge_cases() {
        assert_eq!(x(1).pow(0), Element::one());
        assert!(x(1).pow(2).is_zero());
        assert_eq!(Element::constant(int(2)).pow(3), Element::constant(int(8)));
    }
}
