//! Words over the generators and their canonical signed normal form.
//!
//! A [`Word`] is an unreduced product `x_{i_1} x_{i_2} ... x_{i_k}` in the free
//! algebra. Modulo the anticommutator ideal, every word is either zero (some
//! generator repeats) or `±` a [`Monomial`], the product of its distinct
//! generators in increasing order. The sign is the parity of the number of
//! inversions in the index sequence.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite sequence of 1-based generator indices. Letters may repeat and
/// appear in any order; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroIndex);
        }
        Ok(Word(letters))
    }

    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Sign picked up while reordering a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        Sign::from_parity(self.is_negative() != other.is_negative())
    }
}

/// A canonical basis element: strictly increasing generator indices.
///
/// Ordered graded-lexicographically: first by degree, then lexicographically
/// on the index sequence. This is the display and iteration order everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    /// The empty monomial, i.e. the unit `1`.
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(Monomial(vec![index]))
    }

    /// Accepts an index sequence only if it is already strictly increasing
    /// and 1-based.
    pub fn from_sorted(indices: Vec<u32>) -> Option<Self> {
        let ascending = indices.windows(2).all(|w| w[0] < w[1]);
        let positive = indices.first().is_none_or(|&i| i >= 1);
        (ascending && positive).then_some(Monomial(indices))
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used, or 0 for the unit.
    pub fn max_index(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn contains(&self, index: u32) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    /// 0-based position of `index` within the sorted sequence.
    pub fn position(&self, index: u32) -> Option<usize> {
        self.0.binary_search(&index).ok()
    }

    pub(crate) fn without_position(&self, pos: usize) -> Monomial {
        let mut indices = self.0.clone();
        indices.remove(pos);
        Monomial(indices)
    }

    /// Product of two basis monomials in the Grassmann algebra: `None` when
    /// they share a generator, otherwise the merged monomial with the sign of
    /// the shuffle that brings the concatenation into ascending order.
    pub fn product(&self, other: &Monomial) -> Option<(Sign, Monomial)> {
        let (lhs, rhs) = (&self.0, &other.0);
        let mut merged = Vec::with_capacity(lhs.len() + rhs.len());
        let mut swaps = 0usize;
        let (mut i, mut j) = (0, 0);
        while i < lhs.len() && j < rhs.len() {
            match lhs[i].cmp(&rhs[j]) {
                Ordering::Less => {
                    merged.push(lhs[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    // rhs[j] passes every remaining letter of lhs
                    swaps += lhs.len() - i;
                    merged.push(rhs[j]);
                    j += 1;
                }
                Ordering::Equal => return None,
            }
        }
        merged.extend_from_slice(&lhs[i..]);
        merged.extend_from_slice(&rhs[j..]);
        Some((Sign::from_parity(swaps % 2 == 1), Monomial(merged)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

/// Image of a word in the Grassmann algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SignedMonomial {
    /// The word contained a repeated generator.
    Zero,
    Term(Sign, Monomial),
}

impl SignedMonomial {
    pub fn is_zero(&self) -> bool {
        matches!(self, SignedMonomial::Zero)
    }
}

/// Reduces a word modulo `x_i x_j + x_j x_i`.
pub fn normalize_word(word: &Word) -> SignedMonomial {
    let mut letters = word.0.clone();
    let inversions = count_inversions(&mut letters);
    if letters.windows(2).any(|w| w[0] == w[1]) {
        return SignedMonomial::Zero;
    }
    SignedMonomial::Term(Sign::from_parity(inversions % 2 == 1), Monomial(letters))
}

/// Sorts `values` in place and returns the number of inversions, O(k log k).
pub(crate) fn count_inversions(values: &mut [u32]) -> u64 {
    let mut scratch = values.to_vec();
    merge_count(values, &mut scratch)
}

fn merge_count(values: &mut [u32], scratch: &mut [u32]) -> u64 {
    let len = values.len();
    if len < 2 {
        return 0;
    }
    let mid = len / 2;
    let mut count = {
        let (left, right) = values.split_at_mut(mid);
        let (sl, sr) = scratch.split_at_mut(mid);
        merge_count(left, sl) + merge_count(right, sr)
    };
    let (mut i, mut j, mut k) = (0, mid, 0);
    while i < mid && j < len {
        if values[j] < values[i] {
            count += (mid - i) as u64;
            scratch[k] = values[j];
            j += 1;
        } else {
            scratch[k] = values[i];
            i += 1;
        }
        k += 1;
    }
    scratch[k..k + (mid - i)].copy_from_slice(&values[i..mid]);
    k += mid - i;
    scratch[k..k + (len - j)].copy_from_slice(&values[j..len]);
    values.copy_from_slice(&scratch[..len]);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(v: &[u32]) -> Word {
        Word::new(v.to_vec()).unwrap()
    }

    fn mono(v: &[u32]) -> Monomial {
        Monomial::from_sorted(v.to_vec()).unwrap()
    }

    // Independent oracle: quadratic pair count.
    fn pair_inversions(v: &[u32]) -> usize {
        let mut n = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn swap_of_two() {
        assert_eq!(
            normalize_word(&word(&[2, 1])),
            SignedMonomial::Term(Sign::Minus, mono(&[1, 2]))
        );
    }

    #[test]
    fn theta_squared_vanishes() {
        assert!(normalize_word(&word(&[1, 2, 1, 2])).is_zero());
    }

    #[test]
    fn cyclic_three() {
        assert_eq!(
            normalize_word(&word(&[3, 1, 2])),
            SignedMonomial::Term(Sign::Plus, mono(&[1, 2, 3]))
        );
    }

    #[test]
    fn unit_word() {
        assert_eq!(
            normalize_word(&Word::unit()),
            SignedMonomial::Term(Sign::Plus, Monomial::unit())
        );
    }

    #[test]
    fn zero_index_rejected() {
        assert_eq!(Word::new(vec![1, 0]), Err(Error::ZeroIndex));
        assert!(Monomial::from_sorted(vec![0, 1]).is_none());
        assert!(Monomial::from_sorted(vec![2, 2]).is_none());
        assert!(Monomial::from_sorted(vec![3, 1]).is_none());
    }

    #[test]
    fn graded_lex_order() {
        let mut ms = vec![
            mono(&[1, 2]),
            mono(&[3]),
            Monomial::unit(),
            mono(&[1]),
            mono(&[1, 3]),
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                Monomial::unit(),
                mono(&[1]),
                mono(&[3]),
                mono(&[1, 2]),
                mono(&[1, 3])
            ]
        );
    }

    #[test]
    fn display() {
        assert_eq!(mono(&[1, 3]).to_string(), "x1*x3");
        assert_eq!(Monomial::unit().to_string(), "1");
    }

    #[test]
    fn monomial_product_signs() {
        assert_eq!(
            mono(&[2]).product(&mono(&[1])),
            Some((Sign::Minus, mono(&[1, 2])))
        );
        assert_eq!(mono(&[1, 2]).product(&mono(&[1])), None);
        assert_eq!(
            mono(&[2, 3]).product(&mono(&[1])),
            Some((Sign::Plus, mono(&[1, 2, 3])))
        );
    }

    proptest! {
        #[test]
        fn inversion_count_matches_oracle(v in proptest::collection::vec(1u32..40, 0..16)) {
            let mut sorted = v.clone();
            let fast = count_inversions(&mut sorted);
            prop_assert_eq!(fast as usize, pair_inversions(&v));
            let mut expected = v.clone();
            expected.sort_unstable();
            prop_assert_eq!(sorted, expected);
        }

        #[test]
        fn single_rewrite_preserves_normal_form(
            v in proptest::collection::vec(1u32..8, 2..10),
            at in 0usize..9,
        ) {
            let at = at % (v.len() - 1);
            let original = normalize_word(&Word(v.clone()));
            let (a, b) = (v[at], v[at + 1]);
            // x_j x_i -> -x_i x_j for j > i, or x_i x_i -> 0
            let rewritten = if a == b {
                SignedMonomial::Zero
            } else {
                let mut w = v.clone();
                w.swap(at, at + 1);
                match normalize_word(&Word(w)) {
                    SignedMonomial::Zero => SignedMonomial::Zero,
                    SignedMonomial::Term(s, m) => SignedMonomial::Term(s.flip(), m),
                }
            };
            prop_assert_eq!(original, rewritten);
        }

        #[test]
        fn product_agrees_with_concatenation(
            a in proptest::collection::btree_set(1u32..10, 0..6),
            b in proptest::collection::btree_set(1u32..10, 0..6),
        ) {
            let ma = Monomial(a.iter().copied().collect());
            let mb = Monomial(b.iter().copied().collect());
            let mut concat = ma.0.clone();
            concat.extend_from_slice(&mb.0);
            let via_word = match normalize_word(&Word(concat)) {
                SignedMonomial::Zero => None,
                SignedMonomial::Term(s, m) => Some((s, m)),
            };
            prop_assert_eq!(ma.product(&mb), via_word);
        }
    }
}
