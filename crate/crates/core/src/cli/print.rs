//! Canonical text and JSON renderings.

use num_traits::{One, Signed};
use serde_json::{Map, Value};

use crate::element::Element;
use crate::pi::{FreePolynomial, Substitution};
use crate::scalar::{self, Scalar};
use crate::word::Monomial;

fn write_terms<'a, I>(terms: I) -> String
where
    I: Iterator<Item = (String, &'a Scalar)>,
{
    let mut out = String::new();
    for (k, (body, coefficient)) in terms.enumerate() {
        let negative = coefficient.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = coefficient.abs();
        if body.is_empty() {
            out.push_str(&scalar::format(&magnitude));
        } else if magnitude.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&scalar::format(&magnitude));
            out.push('*');
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Terms in graded-lex order as `coef*xI*xJ`, with unit coefficients
/// omitted, the constant term as a bare rational, and zero as `0`.
pub fn print_element(p: &Element) -> String {
    write_terms(p.terms().map(|(m, c)| {
        let body = if m.is_unit() {
            String::new()
        } else {
            m.to_string()
        };
        (body, c)
    }))
}

/// Same layout as [`print_element`] over the letters `y1, y2, ...`.
pub fn print_free(f: &FreePolynomial) -> String {
    write_terms(f.terms().map(|(w, c)| {
        let body = w
            .letters()
            .iter()
            .map(|i| format!("y{i}"))
            .collect::<Vec<_>>()
            .join("*");
        (body, c)
    }))
}

/// `y1 -> x1` style listing, one assignment per line.
pub fn print_substitution(s: &Substitution) -> String {
    s.iter()
        .map(|(i, value)| format!("y{i} -> {}", print_element(value)))
        .collect::<Vec<_>>()
        .join("\n")
}

/// JSON key for a monomial: dot-joined indices, `""` for the unit.
pub fn monomial_key(m: &Monomial) -> String {
    m.indices()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(".")
}

/// Object mapping monomial keys to rational strings, in graded-lex order.
pub fn element_json(p: &Element) -> Value {
    let map: Map<String, Value> = p
        .terms()
        .map(|(m, c)| (monomial_key(m), Value::String(scalar::format(c))))
        .collect();
    Value::Object(map)
}

pub fn substitution_json(s: &Substitution) -> Value {
    let map: Map<String, Value> = s
        .iter()
        .map(|(i, value)| (format!("y{i}"), element_json(value)))
        .collect();
    Value::Object(map)
}
