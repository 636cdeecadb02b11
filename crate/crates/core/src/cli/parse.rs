//! Tokenizer and recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | 'x' nat | 'y' nat | '(' expr ')'
//!         | '[' expr ',' expr ']' | '{' expr ',' expr '}' | '-' atom
//! rational := nat ('/' nat)?
//! ```
//!
//! There is no implicit multiplication: `x1 x2` is a syntax error. Offsets
//! in errors are 1-based character positions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which variable letter an expression may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Namespace {
    /// `x1, x2, ...`: generators of the Grassmann algebra.
    Generators,
    /// `y1, y2, ...`: indeterminates of the free algebra.
    Indeterminates,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Rational(Scalar),
    Generator(u32),
    Indeterminate(u32),
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, u32),
    Negation(Box<Expr>),
    Group(Box<Expr>),
    Commutator(Box<Expr>, Box<Expr>),
    Anticommutator(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(String),
    Var(char, String),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    offset: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let offset = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits = chars[start..i].iter().collect();
            tokens.push(Spanned {
                token: Token::Number(digits),
                offset,
            });
        } else if c == 'x' || c == 'y' {
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(syntax(offset, format!("expected an index after '{c}'")));
            }
            let digits = chars[start..i].iter().collect();
            tokens.push(Spanned {
                token: Token::Var(c, digits),
                offset,
            });
        } else if "+-*/^()[]{},".contains(c) {
            tokens.push(Spanned {
                token: Token::Sym(c),
                offset,
            });
            i += 1;
        } else {
            return Err(syntax(offset, format!("unexpected character '{c}'")));
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end: usize,
    namespace: Namespace,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |s| s.offset)
    }

    fn eat(&mut self, sym: char) -> bool {
        if self.peek() == Some(&Token::Sym(sym)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: char) -> Result<()> {
        if self.eat(sym) {
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected '{sym}'")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Sum(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Difference(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            lhs = Expr::Product(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let offset = self.offset();
            let exponent = match self.peek() {
                Some(Token::Number(digits)) => digits
                    .parse::<u32>()
                    .map_err(|_| syntax(offset, "exponent too large"))?,
                _ => return Err(syntax(offset, "expected a nonnegative integer exponent")),
            };
            self.pos += 1;
            return Ok(Expr::Power(Box::new(base), exponent));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let offset = self.offset();
        let token = match self.peek() {
            Some(token) => token.clone(),
            None => return Err(syntax(offset, "unexpected end of input")),
        };
        self.pos += 1;
        match token {
            Token::Number(numer) => {
                let numer: BigInt = numer.parse().expect("digits");
                if self.eat('/') {
                    let denom_offset = self.offset();
                    let denom: BigInt = match self.peek() {
                        Some(Token::Number(d)) => d.parse().expect("digits"),
                        _ => return Err(syntax(denom_offset, "expected a denominator")),
                    };
                    self.pos += 1;
                    if denom.is_zero() {
                        return Err(syntax(denom_offset, "denominator must be positive"));
                    }
                    Ok(Expr::Rational(Scalar::new(numer, denom)))
                } else {
                    Ok(Expr::Rational(Scalar::from_integer(numer)))
                }
            }
            Token::Var(letter, digits) => {
                let index: u32 = digits
                    .parse()
                    .map_err(|_| syntax(offset, "index too large"))?;
                if index == 0 {
                    return Err(syntax(offset, format!("{letter}0: indices are 1-based")));
                }
                match (letter, self.namespace) {
                    ('x', Namespace::Generators) => Ok(Expr::Generator(index)),
                    ('y', Namespace::Indeterminates) => Ok(Expr::Indeterminate(index)),
                    ('x', Namespace::Indeterminates) => Err(Error::Namespace(format!(
                        "generator x{index} at offset {offset} in an expression over indeterminates y1, y2, ..."
                    ))),
                    _ => Err(Error::Namespace(format!(
                        "indeterminate y{index} at offset {offset} in an expression over generators x1, x2, ..."
                    ))),
                }
            }
            Token::Sym('(') => {
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(Expr::Group(Box::new(inner)))
            }
            Token::Sym('[') => {
                let lhs = self.expr()?;
                self.expect(',')?;
                let rhs = self.expr()?;
                self.expect(']')?;
                Ok(Expr::Commutator(Box::new(lhs), Box::new(rhs)))
            }
            Token::Sym('{') => {
                let lhs = self.expr()?;
                self.expect(',')?;
                let rhs = self.expr()?;
                self.expect('}')?;
                Ok(Expr::Anticommutator(Box::new(lhs), Box::new(rhs)))
            }
            Token::Sym('-') => Ok(Expr::Negation(Box::new(self.atom()?))),
            Token::Sym(c) => Err(syntax(offset, format!("unexpected '{c}'"))),
        }
    }
}

/// Parses `text` as an expression over `namespace`. Variables from the other
/// namespace are rejected rather than coerced.
pub fn parse(text: &str, namespace: Namespace) -> Result<Expr> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.chars().count() + 1,
        namespace,
    };
    let expr = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(syntax(parser.offset(), "unexpected trailing input"));
    }
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn gens(text: &str) -> Result<Expr> {
        parse(text, Namespace::Generators)
    }

    fn b(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    #[test]
    fn commutator_node() {
        assert_eq!(
            gens("[x1,x2]").unwrap(),
            Expr::Commutator(b(Expr::Generator(1)), b(Expr::Generator(2)))
        );
    }

    #[test]
    fn precedence() {
        // 1 + 2*x1^2 groups as 1 + (2 * (x1^2))
        assert_eq!(
            gens("1 + 2*x1^2").unwrap(),
            Expr::Sum(
                b(Expr::Rational(int(1))),
                b(Expr::Product(
                    b(Expr::Rational(int(2))),
                    b(Expr::Power(b(Expr::Generator(1)), 2))
                ))
            )
        );
        // unary minus binds tighter than ^
        assert_eq!(
            gens("-x1^2").unwrap(),
            Expr::Power(b(Expr::Negation(b(Expr::Generator(1)))), 2)
        );
        assert_eq!(
            gens("1 - x1 - x2").unwrap(),
            Expr::Difference(
                b(Expr::Difference(
                    b(Expr::Rational(int(1))),
                    b(Expr::Generator(1))
                )),
                b(Expr::Generator(2))
            )
        );
    }

    #[test]
    fn rationals() {
        assert_eq!(gens("3/6").unwrap(), Expr::Rational(ratio(1, 2)));
        assert_eq!(
            gens("-3/2").unwrap(),
            Expr::Negation(b(Expr::Rational(ratio(3, 2))))
        );
        assert!(matches!(gens("3/0"), Err(Error::Syntax { offset: 3, .. })));
        assert!(gens("123456789012345678901234567890").is_ok());
    }

    #[test]
    fn zero_index_rejected() {
        assert!(matches!(gens("x0"), Err(Error::Syntax { offset: 1, .. })));
        assert!(matches!(
            gens("1 + y0"),
            Err(Error::Syntax { offset: 5, .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert!(matches!(
            gens("x1 x2"),
            Err(Error::Syntax { offset: 4, .. })
        ));
        assert!(matches!(gens("x1 +"), Err(Error::Syntax { offset: 5, .. })));
        assert!(matches!(gens("(x1"), Err(Error::Syntax { offset: 4, .. })));
        assert!(matches!(
            gens("x1 ^ x2"),
            Err(Error::Syntax { offset: 6, .. })
        ));
        assert!(matches!(gens("x"), Err(Error::Syntax { offset: 1, .. })));
        assert!(matches!(
            gens("2 % 3"),
            Err(Error::Syntax { offset: 3, .. })
        ));
        assert!(matches!(gens(""), Err(Error::Syntax { offset: 1, .. })));
    }

    #[test]
    fn namespaces_do_not_mix() {
        assert!(matches!(gens("x1 + y2"), Err(Error::Namespace(_))));
        assert!(matches!(
            parse("y1*x1", Namespace::Indeterminates),
            Err(Error::Namespace(_))
        ));
        assert!(parse("[[y1,y2],y3]", Namespace::Indeterminates).is_ok());
    }
}
