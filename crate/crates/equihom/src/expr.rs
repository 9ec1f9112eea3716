//! Space expressions: a tiny prefix grammar over the built-in spaces and
//! the equivariant constructions, with evaluation to simplicial sets.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr  ::= atom | comb
//! atom  ::= pt | S0 | S1 | S2 | Ssigma | Srho | C2 | RP2
//! comb  ::= wedge(expr, expr) | smash(expr, expr) | prod(expr, expr)
//!         | coind(expr) | norm(expr) | susp(expr) | suspsigma(expr)
//!         | james(expr, k) | plus(expr)
//! ```
//!
//! `coind` and `norm` take a trivial-action argument; `norm`, `susp`,
//! `suspsigma`, and `james` need a pointed one.

use std::fmt;

use thiserror::Error;

use crate::c2sset::{
    builtin, cell_budget, check_budget, coinduce, disjoint_basepoint, james_stage, norm_space,
    product, smash, suspend_sigma, suspend_trivial, wedge, C2SimplicialSet, SsetError,
    BUILTIN_NAMES,
};

#[derive(Debug, Error)]
pub enum ExprError {
    #[error("unexpected token `{token}` at byte {position}")]
    Parse { token: String, position: usize },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("{op} requires a trivial involution on its argument, but `{arg}` carries a nontrivial one")]
    NeedsTrivialAction { op: &'static str, arg: String },
    #[error(transparent)]
    Sset(#[from] SsetError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceExpr {
    Atom(String),
    Wedge(Box<SpaceExpr>, Box<SpaceExpr>),
    Smash(Box<SpaceExpr>, Box<SpaceExpr>),
    Prod(Box<SpaceExpr>, Box<SpaceExpr>),
    Coind(Box<SpaceExpr>),
    Norm(Box<SpaceExpr>),
    Susp(Box<SpaceExpr>),
    SuspSigma(Box<SpaceExpr>),
    James(Box<SpaceExpr>, usize),
    Plus(Box<SpaceExpr>),
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Atom(name) => write!(f, "{name}"),
            SpaceExpr::Wedge(a, b) => write!(f, "wedge({a},{b})"),
            SpaceExpr::Smash(a, b) => write!(f, "smash({a},{b})"),
            SpaceExpr::Prod(a, b) => write!(f, "prod({a},{b})"),
            SpaceExpr::Coind(a) => write!(f, "coind({a})"),
            SpaceExpr::Norm(a) => write!(f, "norm({a})"),
            SpaceExpr::Susp(a) => write!(f, "susp({a})"),
            SpaceExpr::SuspSigma(a) => write!(f, "suspsigma({a})"),
            SpaceExpr::James(a, k) => write!(f, "james({a},{k})"),
            SpaceExpr::Plus(a) => write!(f, "plus({a})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String, usize),
    LParen(usize),
    RParen(usize),
    Comma(usize),
}

impl Token {
    fn describe(&self) -> (String, usize) {
        match self {
            Token::Ident(s, p) => (s.clone(), *p),
            Token::LParen(p) => ("(".into(), *p),
            Token::RParen(p) => (")".into(), *p),
            Token::Comma(p) => (",".into(), *p),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<Token>, ExprError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' {
            out.push(Token::LParen(i));
            i += 1;
        } else if c == ')' {
            out.push(Token::RParen(i));
            i += 1;
        } else if c == ',' {
            out.push(Token::Comma(i));
            i += 1;
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let start = i;
            while i < bytes.len() && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
            {
                i += 1;
            }
            out.push(Token::Ident(src[start..i].to_string(), start));
        } else {
            return Err(ExprError::Parse {
                token: c.to_string(),
                position: i,
            });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Token, ExprError> {
        let t = self.tokens.get(self.pos).cloned().ok_or(ExprError::UnexpectedEnd)?;
        self.pos += 1;
        Ok(t)
    }

    fn expect_lparen(&mut self) -> Result<(), ExprError> {
        match self.next()? {
            Token::LParen(_) => Ok(()),
            t => Err(unexpected(&t)),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ExprError> {
        match self.next()? {
            Token::RParen(_) => Ok(()),
            t => Err(unexpected(&t)),
        }
    }

    fn expect_comma(&mut self) -> Result<(), ExprError> {
        match self.next()? {
            Token::Comma(_) => Ok(()),
            t => Err(unexpected(&t)),
        }
    }

    fn expr(&mut self) -> Result<SpaceExpr, ExprError> {
        let t = self.next()?;
        let (name, position) = match t {
            Token::Ident(name, p) => (name, p),
            other => return Err(unexpected(&other)),
        };
        let applied = matches!(self.peek(), Some(Token::LParen(_)));
        if !applied {
            if BUILTIN_NAMES.contains(&name.as_str()) {
                return Ok(SpaceExpr::Atom(name));
            }
            return Err(ExprError::Parse { token: name, position });
        }
        self.expect_lparen()?;
        let e = match name.as_str() {
            "wedge" | "smash" | "prod" => {
                let a = Box::new(self.expr()?);
                self.expect_comma()?;
                let b = Box::new(self.expr()?);
                match name.as_str() {
                    "wedge" => SpaceExpr::Wedge(a, b),
                    "smash" => SpaceExpr::Smash(a, b),
                    _ => SpaceExpr::Prod(a, b),
                }
            }
            "coind" | "norm" | "susp" | "suspsigma" | "plus" => {
                let a = Box::new(self.expr()?);
                match name.as_str() {
                    "coind" => SpaceExpr::Coind(a),
                    "norm" => SpaceExpr::Norm(a),
                    "susp" => SpaceExpr::Susp(a),
                    "suspsigma" => SpaceExpr::SuspSigma(a),
                    _ => SpaceExpr::Plus(a),
                }
            }
            "james" => {
                let a = Box::new(self.expr()?);
                self.expect_comma()?;
                let (tok, pos) = self.next()?.describe();
                let k: usize = tok
                    .parse()
                    .map_err(|_| ExprError::Parse { token: tok, position: pos })?;
                SpaceExpr::James(a, k)
            }
            _ => return Err(ExprError::Parse { token: name, position }),
        };
        self.expect_rparen()?;
        Ok(e)
    }
}

fn unexpected(t: &Token) -> ExprError {
    let (token, position) = t.describe();
    ExprError::Parse { token, position }
}

/// Parses an expression; the whole input must be consumed.
pub fn parse(src: &str) -> Result<SpaceExpr, ExprError> {
    let tokens = tokenize(src)?;
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(unexpected(t));
    }
    Ok(e)
}

/// Evaluates under the environment-configured cell budget.
pub fn evaluate(e: &SpaceExpr, dim_bound: usize) -> Result<C2SimplicialSet, ExprError> {
    evaluate_with_budget(e, dim_bound, cell_budget())
}

/// Evaluates to a simplicial set with involution, truncated at `dim_bound`.
/// Every intermediate space is checked against the cell budget.
pub fn evaluate_with_budget(
    e: &SpaceExpr,
    dim_bound: usize,
    budget: usize,
) -> Result<C2SimplicialSet, ExprError> {
    let space = match e {
        SpaceExpr::Atom(name) => builtin(name)?,
        SpaceExpr::Wedge(a, b) => {
            let x = evaluate_with_budget(a, dim_bound, budget)?;
            let y = evaluate_with_budget(b, dim_bound, budget)?;
            wedge(&x, &y)?
        }
        SpaceExpr::Smash(a, b) => {
            let x = evaluate_with_budget(a, dim_bound, budget)?;
            let y = evaluate_with_budget(b, dim_bound, budget)?;
            smash(&x, &y, dim_bound)?
        }
        SpaceExpr::Prod(a, b) => {
            let x = evaluate_with_budget(a, dim_bound, budget)?;
            let y = evaluate_with_budget(b, dim_bound, budget)?;
            product(&x, &y, dim_bound)?
        }
        SpaceExpr::Coind(a) => {
            let x = require_trivial(evaluate_with_budget(a, dim_bound, budget)?, "coind", a)?;
            coinduce(&x.space, x.basepoint().map(|r| r.idx), dim_bound)?
        }
        SpaceExpr::Norm(a) => {
            let x = require_trivial(evaluate_with_budget(a, dim_bound, budget)?, "norm", a)?;
            norm_space(&x.space, x.basepoint().map(|r| r.idx), dim_bound)?
        }
        SpaceExpr::Susp(a) => {
            let x = evaluate_with_budget(a, dim_bound, budget)?;
            suspend_trivial(&x, dim_bound)?
        }
        SpaceExpr::SuspSigma(a) => {
            let x = evaluate_with_budget(a, dim_bound, budget)?;
            suspend_sigma(&x, dim_bound)?
        }
        SpaceExpr::James(a, k) => {
            let x = evaluate_with_budget(a, dim_bound, budget)?;
            james_stage(&x, *k, dim_bound)?
        }
        SpaceExpr::Plus(a) => {
            let x = evaluate_with_budget(a, dim_bound, budget)?;
            disjoint_basepoint(&x)?
        }
    };
    check_budget(&space.space, budget)?;
    Ok(space)
}

fn require_trivial(
    x: C2SimplicialSet,
    op: &'static str,
    arg: &SpaceExpr,
) -> Result<C2SimplicialSet, ExprError> {
    if x.is_trivial_action() {
        Ok(x)
    } else {
        Err(ExprError::NeedsTrivialAction {
            op,
            arg: arg.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips_through_display() {
        for src in [
            "pt",
            "RP2",
            "wedge(S1,S1)",
            "smash(coind(S1),Ssigma)",
            "james(Ssigma,2)",
            "suspsigma(coind(S2))",
            "plus(C2)",
            "prod(norm(S1),S0)",
        ] {
            let e = parse(src).unwrap();
            assert_eq!(e.to_string(), src);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(
            parse(" wedge ( S1 ,\n\tS1 ) ").unwrap(),
            parse("wedge(S1,S1)").unwrap()
        );
    }

    #[test]
    fn errors_name_the_offending_token() {
        match parse("S3") {
            Err(ExprError::Parse { token, .. }) => assert_eq!(token, "S3"),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse("wedge(S1)") {
            Err(ExprError::Parse { token, .. }) => assert_eq!(token, ")"),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse("james(Ssigma,two)") {
            Err(ExprError::Parse { token, .. }) => assert_eq!(token, "two"),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse("pt pt") {
            Err(ExprError::Parse { token, .. }) => assert_eq!(token, "pt"),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse("wedge(S1,"), Err(ExprError::UnexpectedEnd)));
    }

    #[test]
    fn atoms_evaluate_to_the_catalog_spaces() {
        let e = parse("Ssigma").unwrap();
        let x = evaluate(&e, 2).unwrap();
        assert_eq!(x.space.count(0), 2);
        assert_eq!(x.space.count(1), 2);
        assert_eq!(x.fixed_count(1), 0);
    }

    #[test]
    fn coind_rejects_genuine_actions() {
        let e = parse("coind(C2)").unwrap();
        match evaluate(&e, 1) {
            Err(ExprError::NeedsTrivialAction { op, arg }) => {
                assert_eq!(op, "coind");
                assert_eq!(arg, "C2");
            }
            other => panic!("expected trivial-action error, got {other:?}"),
        }
    }

    #[test]
    fn james_needs_a_basepoint() {
        let e = parse("james(C2,2)").unwrap();
        assert!(matches!(
            evaluate(&e, 2),
            Err(ExprError::Sset(SsetError::NotPointed(_)))
        ));
    }

    #[test]
    fn the_cell_budget_is_enforced() {
        let e = parse("coind(RP2)").unwrap();
        match evaluate_with_budget(&e, 4, 50) {
            Err(ExprError::Sset(SsetError::CellBudget { cells, budget })) => {
                assert!(cells > 50);
                assert_eq!(budget, 50);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        assert!(evaluate_with_budget(&e, 4, 100_000).is_ok());
    }
}
