//! Free noncommutative polynomials, substitution into the Grassmann algebra,
//! polynomial-identity checking and membership in the anticommutator ideal.
//!
//! Free polynomials live over indeterminates `y_1, y_2, ...`, a namespace
//! distinct from the generators `x_i` of the algebra. [`project`] is the one
//! explicit bridge: it reads a free polynomial's letters as generators and
//! applies the quotient map.
//!
//! # Deciding multilinear identities
//!
//! If every word of `f` contains each of its `k` indeterminates exactly once,
//! then `f(a_1, ..., a_k)` is linear in each argument separately. Expanding
//! each `a_j` in the monomial basis writes `f(a_1, ..., a_k)` as a linear
//! combination of values `f(m_1, ..., m_k)` on basis monomials, so `f`
//! vanishes on the whole algebra iff it vanishes on every tuple of basis
//! monomials. [`is_identity`] scans those `B^k` tuples. For any other `f` it
//! only samples random substitutions, and a passing verdict means no
//! counterexample was found.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::grading::{parity, Parity};
use crate::scalar::{self, Scalar};
use crate::word::{Monomial, Word};

/// A word in the free algebra over indeterminates. Order matters and letters
/// may repeat; ordered graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<u32>);

impl FreeWord {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroIndex);
        }
        Ok(FreeWord(letters))
    }

    pub fn unit() -> Self {
        FreeWord(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        FreeWord(letters)
    }
}

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the free associative algebra `K<y_1, y_2, ...>`; no relations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreePolynomial {
    terms: BTreeMap<FreeWord, Scalar>,
}

impl FreePolynomial {
    pub fn zero() -> Self {
        FreePolynomial::default()
    }

    pub fn one() -> Self {
        FreePolynomial::constant(Scalar::one())
    }

    pub fn constant(value: Scalar) -> Self {
        FreePolynomial::term(FreeWord::unit(), value)
    }

    /// The indeterminate `y_index`. Panics on index 0.
    pub fn indeterminate(index: u32) -> Self {
        let word = FreeWord::new(vec![index]).expect("indeterminate indices are 1-based");
        FreePolynomial::term(word, Scalar::one())
    }

    pub fn term(word: FreeWord, coefficient: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(word, coefficient);
        }
        FreePolynomial { terms }
    }

    fn accumulate(&mut self, word: FreeWord, coefficient: Scalar) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &Scalar)> {
        self.terms.iter()
    }

    /// Indeterminates occurring anywhere in the support.
    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .flat_map(|w| w.0.iter().copied())
            .collect()
    }

    pub fn add(&self, other: &FreePolynomial) -> FreePolynomial {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.accumulate(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FreePolynomial) -> FreePolynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FreePolynomial {
        FreePolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scalar_mul(&self, alpha: &Scalar) -> FreePolynomial {
        if alpha.is_zero() {
            return FreePolynomial::zero();
        }
        FreePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * alpha))
                .collect(),
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &FreePolynomial) -> FreePolynomial {
        let mut out = FreePolynomial::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.accumulate(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, exponent: u32) -> FreePolynomial {
        (0..exponent).fold(FreePolynomial::one(), |acc, _| acc.mul(self))
    }
}

/// `[f, g] = fg - gf` in the free algebra.
pub fn commutator_poly(f: &FreePolynomial, g: &FreePolynomial) -> FreePolynomial {
    f.mul(g).sub(&g.mul(f))
}

/// `{f, g} = fg + gf` in the free algebra.
pub fn anticommutator_poly(f: &FreePolynomial, g: &FreePolynomial) -> FreePolynomial {
    f.mul(g).add(&g.mul(f))
}

/// Assignment of algebra elements to indeterminates; induces the algebra
/// homomorphism `K<Y> -> G` used by [`evaluate`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Substitution {
    assignments: BTreeMap<u32, Element>,
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    pub fn assign(&mut self, indeterminate: u32, value: Element) {
        self.assignments.insert(indeterminate, value);
    }

    pub fn with(mut self, indeterminate: u32, value: Element) -> Self {
        self.assign(indeterminate, value);
        self
    }

    pub fn get(&self, indeterminate: u32) -> Option<&Element> {
        self.assignments.get(&indeterminate)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Element)> {
        self.assignments.iter().map(|(&k, v)| (k, v))
    }
}

impl FromIterator<(u32, Element)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (u32, Element)>>(iter: I) -> Self {
        Substitution {
            assignments: iter.into_iter().collect(),
        }
    }
}

/// Image of `f` under the homomorphism induced by `s`.
pub fn evaluate(f: &FreePolynomial, s: &Substitution) -> Result<Element> {
    let mut out = Element::zero();
    for (word, coefficient) in &f.terms {
        let mut product = Element::constant(coefficient.clone());
        for &letter in &word.0 {
            let value = s.get(letter).ok_or(Error::MissingAssignment(letter))?;
            product = product.mul(value);
            if product.is_zero() {
                break;
            }
        }
        out = out.add(&product);
    }
    Ok(out)
}

/// Every support word contains each of `y_1..y_k` exactly once.
pub fn is_multilinear(f: &FreePolynomial, k: u32) -> bool {
    let vars: Vec<u32> = (1..=k).collect();
    multilinear_in(f, &vars)
}

fn multilinear_in(f: &FreePolynomial, vars: &[u32]) -> bool {
    f.terms.keys().all(|w| {
        let mut letters = w.0.clone();
        letters.sort_unstable();
        letters == vars
    })
}

/// Which part of the algebra substitutions are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    All,
    Even,
    Odd,
}

impl Domain {
    pub fn admits(self, m: &Monomial) -> bool {
        match self {
            Domain::All => true,
            Domain::Even => parity(m) == Parity::Even,
            Domain::Odd => parity(m) == Parity::Odd,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::All => "all",
            Domain::Even => "even",
            Domain::Odd => "odd",
        })
    }
}

/// All basis monomials over `n` generators admitted by `domain`, in
/// graded-lex order.
pub fn basis(n: u32, domain: Domain) -> Vec<Monomial> {
    (0..=n as usize)
        .flat_map(|d| (1..=n).combinations(d))
        .filter_map(Monomial::from_sorted)
        .filter(|m| domain.admits(m))
        .collect()
}

/// Random element over `n` generators with every admitted basis coefficient
/// drawn uniformly from `{-2, ..., 2}`.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, n: u32, domain: Domain) -> Element {
    basis(n, domain)
        .into_iter()
        .map(|m| (m, scalar::int(rng.gen_range(-2..=2))))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckMode {
    ExhaustiveMultilinear,
    Randomized,
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::ExhaustiveMultilinear => "exhaustive-multilinear",
            CheckMode::Randomized => "randomized",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub holds: bool,
    /// First substitution found on which `f` does not vanish.
    pub witness: Option<Substitution>,
    pub mode: CheckMode,
    /// Number of substitutions evaluated.
    pub cases: u64,
}

/// Checks whether `f` vanishes on the algebra with `n` generators, with
/// substitutions restricted to `domain`.
///
/// Multilinear `f` is decided exactly by scanning all tuples of basis
/// monomials in graded-lex order (first variable most significant); the
/// first failing tuple is the witness regardless of evaluation order.
/// Otherwise `trials` random substitutions are drawn from a generator
/// seeded with `seed`.
pub fn is_identity(
    f: &FreePolynomial,
    n: u32,
    domain: Domain,
    trials: u64,
    seed: u64,
) -> Result<IdentityVerdict> {
    if n == 0 {
        return Err(Error::InvalidGeneratorCount);
    }
    let vars: Vec<u32> = f.variables().into_iter().collect();
    if multilinear_in(f, &vars) {
        Ok(exhaustive(f, n, domain, &vars))
    } else {
        if trials == 0 {
            return Err(Error::InvalidTrials);
        }
        Ok(randomized(f, n, domain, &vars, trials, seed))
    }
}

fn exhaustive(f: &FreePolynomial, n: u32, domain: Domain, vars: &[u32]) -> IdentityVerdict {
    let basis = basis(n, domain);
    let b = basis.len() as u64;
    let k = vars.len() as u32;
    let total = b.saturating_pow(k);

    let tuple = |mut t: u64| -> Substitution {
        let mut picks = vec![0usize; vars.len()];
        for slot in picks.iter_mut().rev() {
            *slot = (t % b) as usize;
            t /= b;
        }
        vars.iter()
            .zip(picks)
            .map(|(&v, i)| (v, Element::term(basis[i].clone(), Scalar::one())))
            .collect()
    };

    let failing = (0..total).into_par_iter().find_first(|&t| {
        let s = tuple(t);
        !evaluate(f, &s)
            .expect("tuple covers every variable")
            .is_zero()
    });

    IdentityVerdict {
        holds: failing.is_none(),
        witness: failing.map(tuple),
        mode: CheckMode::ExhaustiveMultilinear,
        cases: failing.map_or(total, |t| t + 1),
    }
}

fn randomized(
    f: &FreePolynomial,
    n: u32,
    domain: Domain,
    vars: &[u32],
    trials: u64,
    seed: u64,
) -> IdentityVerdict {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let s: Substitution = vars
            .iter()
            .map(|&v| (v, random_element(&mut rng, n, domain)))
            .collect();
        if !evaluate(f, &s)
            .expect("substitution covers every variable")
            .is_zero()
        {
            return IdentityVerdict {
                holds: false,
                witness: Some(s),
                mode: CheckMode::Randomized,
                cases: trial + 1,
            };
        }
    }
    IdentityVerdict {
        holds: true,
        witness: None,
        mode: CheckMode::Randomized,
        cases: trials,
    }
}

/// Quotient map: reads each letter `k` as the generator `x_k` (`k <= n`) and
/// reduces modulo the anticommutator ideal.
pub fn project(f: &FreePolynomial, n: u32) -> Result<Element> {
    for word in f.terms.keys() {
        if let Some(&index) = word.0.iter().find(|&&i| i > n) {
            return Err(Error::IndexOutOfRange { index, n });
        }
    }
    Ok(Element::from_words(f.terms.iter().map(|(w, c)| {
        (
            Word::new(w.0.clone()).expect("free words are 1-based"),
            c.clone(),
        )
    })))
}

/// Membership in the two-sided ideal generated by `x_i x_j + x_j x_i`.
pub fn in_ideal(f: &FreePolynomial, n: u32) -> Result<bool> {
    Ok(project(f, n)?.is_zero())
}
