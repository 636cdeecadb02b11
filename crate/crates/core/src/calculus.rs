//! Body/soul split, left derivatives, Berezin integration and nil indices.
//!
//! Sign convention: derivatives act from the **left**. To differentiate a
//! monomial by `x_i`, anticommute `x_i` to the front (one sign flip per
//! generator it passes) and delete it. The Berezin integral `∫dx_i` is the
//! same operator, so `∫dx_i x_i = 1` and `∫dx_i 1 = 0`. Iterated integrals
//! are written as nested single-variable calls, innermost applied first;
//! under a right-derivative convention the signs of odd terms would flip.

use std::fmt;

use num_traits::Zero;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::word::{Monomial, Sign};

/// Coefficient of the unit monomial.
pub fn body(p: &Element) -> Scalar {
    p.coefficient(&Monomial::unit())
}

/// `p - body(p)`.
pub fn soul(p: &Element) -> Element {
    p.filter(|m| !m.is_unit())
}

/// Left derivative `∂/∂x_index`.
pub fn left_derivative(p: &Element, index: u32) -> Element {
    p.map_monomials(|m| {
        m.position(index)
            .map(|pos| (Sign::from_parity(pos % 2 == 1), m.without_position(pos)))
    })
}

/// Berezin integral `∫dx_index p`, identical to the left derivative.
pub fn berezin_integral(p: &Element, index: u32) -> Element {
    left_derivative(p, index)
}

/// Outcome of [`nil_index`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NilReport {
    /// Smallest `k <= cap` with `p^k = 0`, or `None` if every power up to
    /// the cap is nonzero.
    pub index: Option<u32>,
    pub cap: u32,
}

impl NilReport {
    pub fn exceeds_cap(&self) -> bool {
        self.index.is_none()
    }
}

impl fmt::Display for NilReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(k) => write!(f, "{k}"),
            None => write!(f, "exceeds cap {}", self.cap),
        }
    }
}

/// Finds the least `k` with `p^k = 0` by computing `p, p^2, p^3, ...` up to
/// `cap`. Zero is rejected.
///
/// An element is nilpotent iff its body vanishes, and on `n` generators the
/// index of a soul is at most `n + 1` (every product of more than `n`
/// generators repeats one), so `cap = n + 1` always decides.
pub fn nil_index(p: &Element, cap: u32) -> Result<NilReport> {
    if p.is_zero() {
        return Err(Error::ZeroElement);
    }
    if cap == 0 {
        return Err(Error::InvalidCap);
    }
    let mut power = p.clone();
    for k in 2..=cap {
        power = power.mul(p);
        if power.is_zero() {
            return Ok(NilReport {
                index: Some(k),
                cap,
            });
        }
    }
    Ok(NilReport { index: None, cap })
}

/// `true` iff the body is zero.
pub fn is_nilpotent(p: &Element) -> bool {
    body(p).is_zero()
}
