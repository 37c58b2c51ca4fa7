//! Surface syntax for algebra expressions.
//!
//! ```text
//! expr   := '-'? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' NAT)?
//! atom   := NAME | NUMBER | NUMBER '/' NUMBER | NAME '(' expr (',' expr)? ')' | '(' expr ')'
//! ```

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigUint),
    Frac(BigUint, BigUint),
    Name(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(String, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Num(BigUint),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Name(s) => format!("name `{s}`"),
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".to_string(),
    }
}

fn tokenize(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            Tok::Name(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    chars.next();
                    column += 1;
                } else {
                    break;
                }
            }
            Tok::Num(s.parse().expect("digits"))
        } else if "+-*/^(),".contains(c) {
            chars.next();
            column += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Syntax {
                line: l,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        };
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, message: String) -> Error {
        Error::Syntax {
            line: t.line,
            column: t.column,
            message,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            Err(Self::error_at(&t, format!("expected `{c}`, found {}", describe(&t.tok))))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let t = self.next();
        match &t.tok {
            Tok::Num(k) => {
                let k = u32::try_from(k)
                    .map_err(|_| Self::error_at(&t, format!("exponent {k} is too large")))?;
                Ok(Expr::Pow(Box::new(base), k))
            }
            other => Err(Self::error_at(
                &t,
                format!("expected a natural exponent after `^`, found {}", describe(other)),
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.next();
        match t.tok.clone() {
            Tok::Num(num) => {
                if !self.eat('/') {
                    return Ok(Expr::Int(num));
                }
                let d = self.next();
                match d.tok.clone() {
                    Tok::Num(den) if den.is_zero() => {
                        Err(Self::error_at(&d, "zero denominator".to_string()))
                    }
                    Tok::Num(den) => Ok(Expr::Frac(num, den)),
                    other => Err(Self::error_at(
                        &d,
                        format!("expected a denominator, found {}", describe(&other)),
                    )),
                }
            }
            Tok::Name(name) => {
                if !self.eat('(') {
                    return Ok(Expr::Name(name));
                }
                let mut args = vec![self.expr()?];
                if self.eat(',') {
                    args.push(self.expr()?);
                }
                self.expect(')')?;
                Ok(Expr::Call(name, args))
            }
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            other => Err(Self::error_at(
                &t,
                format!("expected a name, number or `(`, found {}", describe(&other)),
            )),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr> {
    let mut p = Parser {
        tokens: tokenize(input)?,
        pos: 0,
    };
    let e = p.expr()?;
    let t = p.next();
    if t.tok != Tok::End {
        return Err(Parser::error_at(&t, format!("unexpected {}", describe(&t.tok))));
    }
    Ok(e)
}

// Printing levels: 0 = expr, 1 = term, 2 = factor, 3 = atom.
fn write_at(e: &Expr, level: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let own = match e {
        Expr::Add(..) | Expr::Sub(..) | Expr::Neg(..) => 0,
        Expr::Mul(..) => 1,
        Expr::Pow(..) => 2,
        _ => 3,
    };
    if own < level {
        f.write_str("(")?;
        write_at(e, 0, f)?;
        return f.write_str(")");
    }
    match e {
        Expr::Int(k) => write!(f, "{k}"),
        Expr::Frac(p, q) => write!(f, "{p}/{q}"),
        Expr::Name(s) => f.write_str(s),
        Expr::Neg(x) => {
            f.write_str("-")?;
            write_at(x, 1, f)
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            write_at(a, 0, f)?;
            f.write_str(if matches!(e, Expr::Add(..)) { " + " } else { " - " })?;
            // level 1 parenthesizes a negation, which may only lead an expression
            write_at(b, 1, f)
        }
        Expr::Mul(a, b) => {
            write_at(a, 1, f)?;
            f.write_str("*")?;
            write_at(b, 2, f)
        }
        Expr::Pow(base, k) => {
            // fractions are parenthesized so `1/2^3` never reads as `1/(2^3)`
            if matches!(**base, Expr::Frac(..)) {
                f.write_str("(")?;
                write_at(base, 0, f)?;
                f.write_str(")")?;
            } else {
                write_at(base, 3, f)?;
            }
            write!(f, "^{k}")
        }
        Expr::Call(name, args) => {
            write!(f, "{name}(")?;
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write_at(a, 0, f)?;
            }
            f.write_str(")")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(self, 0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn name(s: &str) -> Box<Expr> {
        Box::new(Expr::Name(s.to_string()))
    }

    #[test]
    fn sums_and_products() {
        let e = parse("A*U^2 + 3*E").unwrap();
        assert_eq!(
            e,
            Expr::Add(
                Box::new(Expr::Mul(name("A"), Box::new(Expr::Pow(name("U"), 2)))),
                Box::new(Expr::Mul(Box::new(Expr::Int(3u32.into())), name("E"))),
            )
        );
        assert_eq!(e.to_string(), "A*U^2 + 3*E");
    }

    #[test]
    fn nested_calls() {
        let e = parse("P(q(U^2), q(U^2))").unwrap();
        let q = Expr::Call("q".into(), vec![Expr::Pow(name("U"), 2)]);
        assert_eq!(e, Expr::Call("P".into(), vec![q.clone(), q]));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse("U^^2"),
            Err(Error::Syntax {
                line: 1,
                column: 3,
                message: "expected a natural exponent after `^`, found `^`".into()
            })
        );
        assert!(matches!(parse("A U"), Err(Error::Syntax { column: 3, .. })));
        assert!(matches!(parse("A +\n  $"), Err(Error::Syntax { line: 2, column: 3, .. })));
        assert!(matches!(parse("1/0"), Err(Error::Syntax { column: 3, .. })));
        assert!(matches!(parse("q(A"), Err(Error::Syntax { .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(parse("--A"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn leading_minus_and_grouping() {
        let e = parse("-1/2*U - (A + E)").unwrap();
        assert_eq!(e.to_string(), "-1/2*U - (A + E)");
        let e = parse("A - -U").err();
        assert!(e.is_some());
        let e = Expr::Sub(name("A"), Box::new(Expr::Neg(name("U"))));
        assert_eq!(parse(&e.to_string()).unwrap(), e);
        let e = Expr::Mul(name("A"), Box::new(Expr::Mul(name("U"), name("E"))));
        assert_eq!(parse(&e.to_string()).unwrap(), e);
        let e = Expr::Pow(Box::new(Expr::Frac(1u32.into(), 2u32.into())), 3);
        assert_eq!(e.to_string(), "(1/2)^3");
        assert_eq!(parse("1/2^3").unwrap(), e);
    }
}
