//! Folding parsed expressions into algebra values.

use crate::cli::parse::Expr;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::pi::FreePolynomial;
use crate::scalar::Scalar;

/// The ring operations an expression needs.
trait Ring: Sized {
    fn constant(value: Scalar) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn pow(&self, exponent: u32) -> Self;
}

macro_rules! impl_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn constant(value: Scalar) -> Self {
                <$t>::constant(value)
            }
            fn add(&self, other: &Self) -> Self {
                <$t>::add(self, other)
            }
            fn sub(&self, other: &Self) -> Self {
                <$t>::sub(self, other)
            }
            fn mul(&self, other: &Self) -> Self {
                <$t>::mul(self, other)
            }
            fn neg(&self) -> Self {
                <$t>::neg(self)
            }
            fn pow(&self, exponent: u32) -> Self {
                <$t>::pow(self, exponent)
            }
        }
    };
}

impl_ring!(Element);
impl_ring!(FreePolynomial);

fn fold<R, F>(expr: &Expr, var: &F) -> Result<R>
where
    R: Ring,
    F: Fn(&Expr) -> Result<R>,
{
    Ok(match expr {
        Expr::Rational(q) => R::constant(q.clone()),
        Expr::Generator(_) | Expr::Indeterminate(_) => var(expr)?,
        Expr::Sum(a, b) => fold::<R, F>(a, var)?.add(&fold(b, var)?),
        Expr::Difference(a, b) => fold::<R, F>(a, var)?.sub(&fold(b, var)?),
        Expr::Product(a, b) => fold::<R, F>(a, var)?.mul(&fold(b, var)?),
        Expr::Power(a, k) => fold::<R, F>(a, var)?.pow(*k),
        Expr::Negation(a) => fold::<R, F>(a, var)?.neg(),
        Expr::Group(a) => fold(a, var)?,
        Expr::Commutator(a, b) => {
            let (p, q): (R, R) = (fold(a, var)?, fold(b, var)?);
            p.mul(&q).sub(&q.mul(&p))
        }
        Expr::Anticommutator(a, b) => {
            let (p, q): (R, R) = (fold(a, var)?, fold(b, var)?);
            p.mul(&q).add(&q.mul(&p))
        }
    })
}

/// Evaluates a generator-namespace expression in the algebra on `n`
/// generators.
pub fn eval_element(expr: &Expr, n: u32) -> Result<Element> {
    fold(expr, &|leaf: &Expr| match *leaf {
        Expr::Generator(i) if i > n => Err(Error::IndexOutOfRange { index: i, n }),
        Expr::Generator(i) => Ok(Element::generator(i)),
        Expr::Indeterminate(i) => Err(Error::Namespace(format!(
            "indeterminate y{i} cannot be evaluated in the Grassmann algebra"
        ))),
        _ => unreachable!("leaf"),
    })
}

/// Evaluates an expression in the free algebra, without any rewriting. Both
/// `xK` and `yK` become the free letter `K`.
pub fn eval_free(expr: &Expr) -> Result<FreePolynomial> {
    fold(expr, &|leaf: &Expr| match *leaf {
        Expr::Generator(i) | Expr::Indeterminate(i) => Ok(FreePolynomial::indeterminate(i)),
        _ => unreachable!("leaf"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse::{parse, Namespace};
    use crate::cli::print::print_element;

    fn run(text: &str, n: u32) -> String {
        let expr = parse(text, Namespace::Generators).unwrap();
        print_element(&eval_element(&expr, n).unwrap())
    }

    #[test]
    fn reduces_two_generator_polynomial() {
        assert_eq!(
            run("1 + 2*x1 + 3*x2 + 5*x1*x2 + 2*x2*x1", 4),
            "1 + 2*x1 + 3*x2 + 3*x1*x2"
        );
    }

    #[test]
    fn theta_squared() {
        assert_eq!(run("(x1*x2)^2", 4), "0");
    }

    #[test]
    fn brackets() {
        assert_eq!(run("{x1,x2}", 4), "0");
        assert_eq!(run("[x1,x2]", 4), "2*x1*x2");
        assert_eq!(run("x1^0", 4), "1");
    }

    #[test]
    fn out_of_range_generator() {
        let expr = parse("x5", Namespace::Generators).unwrap();
        assert_eq!(
            eval_element(&expr, 4),
            Err(Error::IndexOutOfRange { index: 5, n: 4 })
        );
    }

    #[test]
    fn free_evaluation_keeps_order() {
        let expr = parse("x1*x2 + x2*x1", Namespace::Generators).unwrap();
        let f = eval_free(&expr).unwrap();
        assert_eq!(f.terms().count(), 2);
        let g = eval_free(&parse("[y1,y2]", Namespace::Indeterminates).unwrap()).unwrap();
        assert_eq!(g.terms().count(), 2);
    }
}
