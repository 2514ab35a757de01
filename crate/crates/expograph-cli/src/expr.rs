//! Expression grammar for graph constructions.
//!
//! Atoms: `K4`, `C8`, `P4`, `Q3`, `MQ3`, `B(2,3)`, `KZ(2,3)`.
//! Operations (nestable): `EXP(a,b)`, `CPOW(a,n)`, `OMEGA(k)`, `PSI(k)`.

use std::fmt;

use expograph::expo::{cartesian_power_with_budget, ExpoSpace};
use expograph::iterated::{self, BigOrder, IteratedStats};
use expograph::{generators, Budget, Error, Graph, Result};
use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Hypercube(usize),
    MobiusCube(usize),
    DeBruijn(usize, usize),
    Kautz(usize, usize),
    Exp(Box<Expr>, Box<Expr>),
    Cpow(Box<Expr>, usize),
    Omega(usize),
    Psi(usize),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Complete(n) => write!(f, "K{n}"),
            Expr::Cycle(n) => write!(f, "C{n}"),
            Expr::Path(n) => write!(f, "P{n}"),
            Expr::Hypercube(n) => write!(f, "Q{n}"),
            Expr::MobiusCube(n) => write!(f, "MQ{n}"),
            Expr::DeBruijn(d, k) => write!(f, "B({d},{k})"),
            Expr::Kautz(d, k) => write!(f, "KZ({d},{k})"),
            Expr::Exp(a, b) => write!(f, "EXP({a},{b})"),
            Expr::Cpow(a, n) => write!(f, "CPOW({a},{n})"),
            Expr::Omega(k) => write!(f, "OMEGA({k})"),
            Expr::Psi(k) => write!(f, "PSI({k})"),
        }
    }
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Name(String),
    Number(usize),
    LParen,
    RParen,
    Comma,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' {
            out.push(Token::LParen);
            i += 1;
        } else if c == ')' {
            out.push(Token::RParen);
            i += 1;
        } else if c == ',' {
            out.push(Token::Comma);
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let value = text
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("number out of range: {text}")))?;
            out.push(Token::Number(value));
        } else if c.is_ascii_alphabetic() {
            // a name token may carry a trailing numeric suffix, as in "K4"
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Token::Name(text.to_ascii_uppercase()));
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}'")));
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

    fn next(&mut self) -> Result<Token> {
        let t = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, t: Token, what: &str) -> Result<()> {
        let got = self.next()?;
        if got != t {
            return Err(Error::Parse(format!("expected {what}, got {got:?}")));
        }
        Ok(())
    }

    fn number(&mut self) -> Result<usize> {
        match self.next()? {
            Token::Number(n) => Ok(n),
            other => Err(Error::Parse(format!("expected a number, got {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let name = match self.next()? {
            Token::Name(n) => n,
            other => Err(Error::Parse(format!(
                "expected a family or operation name, got {other:?}"
            )))?,
        };
        match name.as_str() {
            "EXP" => {
                self.expect(Token::LParen, "'('")?;
                let a = self.expr()?;
                self.expect(Token::Comma, "','")?;
                let b = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(Expr::Exp(Box::new(a), Box::new(b)))
            }
            "CPOW" => {
                self.expect(Token::LParen, "'('")?;
                let a = self.expr()?;
                self.expect(Token::Comma, "','")?;
                let n = self.number()?;
                self.expect(Token::RParen, "')'")?;
                Ok(Expr::Cpow(Box::new(a), n))
            }
            "OMEGA" => {
                self.expect(Token::LParen, "'('")?;
                let k = self.number()?;
                self.expect(Token::RParen, "')'")?;
                Ok(Expr::Omega(k))
            }
            "PSI" => {
                self.expect(Token::LParen, "'('")?;
                let k = self.number()?;
                self.expect(Token::RParen, "')'")?;
                Ok(Expr::Psi(k))
            }
            "B" | "KZ" => {
                self.expect(Token::LParen, "'('")?;
                let d = self.number()?;
                self.expect(Token::Comma, "','")?;
                let k = self.number()?;
                self.expect(Token::RParen, "')'")?;
                Ok(if name == "B" {
                    Expr::DeBruijn(d, k)
                } else {
                    Expr::Kautz(d, k)
                })
            }
            _ => {
                // families written with an attached order, e.g. K4, C8, MQ3
                let split = name.find(|c: char| c.is_ascii_digit()).ok_or_else(|| {
                    Error::Parse(format!("unknown name '{name}'"))
                })?;
                let (family, digits) = name.split_at(split);
                let n: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad order in '{name}'")))?;
                match family {
                    "K" => Ok(Expr::Complete(n)),
                    "C" => Ok(Expr::Cycle(n)),
                    "P" => Ok(Expr::Path(n)),
                    "Q" => Ok(Expr::Hypercube(n)),
                    "MQ" => Ok(Expr::MobiusCube(n)),
                    _ => Err(Error::Parse(format!("unknown family '{family}'"))),
                }
            }
        }
    }
}

pub fn parse(s: &str) -> Result<Expr> {
    let mut p = Parser {
        tokens: tokenize(s)?,
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(Error::Parse(format!(
            "trailing input after expression: {:?}",
            p.tokens[p.pos..].to_vec()
        )));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Evaluation

/// Result of evaluating an expression: the materialized graph when it fits
/// the budget, the exponential-codec view when the top level is `EXP`, and
/// formula-level stats for iterated expressions that outgrow the budget.
#[derive(Debug)]
pub struct Evaluated {
    pub expr: String,
    pub graph: Option<Graph>,
    pub space: Option<ExpoSpace>,
    pub stats: Option<IteratedStats>,
}

impl Evaluated {
    /// The order as a big integer, from the graph when materialized, else
    /// from the formula-level stats.
    pub fn order(&self) -> BigOrder {
        if let Some(g) = &self.graph {
            return BigOrder::from_exact(BigUint::from(g.order()));
        }
        self.stats
            .as_ref()
            .map(|s| s.order.clone())
            .expect("either graph or stats is always present")
    }
}

/// Evaluates an expression, materializing within `budget`. Everything except
/// `OMEGA`/`PSI` must materialize (budget overruns are reported); the
/// iterated families fall back to formula-level stats beyond budget.
pub fn eval(e: &Expr, budget: &Budget) -> Result<Evaluated> {
    let expr = e.to_string();
    match e {
        Expr::Exp(a, b) => {
            let g = eval_concrete(a, budget)?;
            let h = eval_concrete(b, budget)?;
            let space = ExpoSpace::new(g, h)?;
            let graph = space.materialize(budget)?;
            Ok(Evaluated {
                expr,
                graph: Some(graph),
                space: Some(space),
                stats: None,
            })
        }
        Expr::Omega(k) => {
            let base = generators::complete(2)?;
            let r = iterated::omega_with_budget(&base, *k, budget)?;
            // the last expansion codec describes the full graph only when the
            // final level was actually materialized
            let space = r.graph.is_some().then(|| r.spaces.into_iter().last()).flatten();
            Ok(Evaluated {
                expr,
                graph: r.graph,
                space,
                stats: Some(r.stats),
            })
        }
        Expr::Psi(k) => {
            let base = generators::complete(2)?;
            let r = iterated::psi_with_budget(&base, *k, budget)?;
            let space = r.graph.is_some().then(|| r.spaces.into_iter().last()).flatten();
            Ok(Evaluated {
                expr,
                graph: r.graph,
                space,
                stats: Some(r.stats),
            })
        }
        _ => {
            let graph = eval_concrete(e, budget)?;
            Ok(Evaluated {
                expr,
                graph: Some(graph),
                space: None,
                stats: None,
            })
        }
    }
}

/// Evaluates to a materialized graph or fails (used for operands, which must
/// exist concretely to build codecs on top of them).
pub fn eval_concrete(e: &Expr, budget: &Budget) -> Result<Graph> {
    match e {
        Expr::Complete(n) => generators::complete(*n),
        Expr::Cycle(n) => generators::cycle(*n),
        Expr::Path(n) => generators::path(*n),
        Expr::Hypercube(n) => generators::hypercube(*n),
        Expr::MobiusCube(n) => generators::mobius_cube(*n),
        Expr::DeBruijn(d, k) => generators::de_bruijn(*d, *k),
        Expr::Kautz(d, k) => generators::kautz(*d, *k),
        Expr::Exp(a, b) => {
            let g = eval_concrete(a, budget)?;
            let h = eval_concrete(b, budget)?;
            ExpoSpace::new(g, h)?.materialize(budget)
        }
        Expr::Cpow(a, n) => {
            let g = eval_concrete(a, budget)?;
            cartesian_power_with_budget(&g, *n, budget)
        }
        Expr::Omega(k) => {
            let base = generators::complete(2)?;
            iterated::omega_with_budget(&base, *k, budget)?
                .graph
                .ok_or(Error::BudgetExceeded {
                    what: "iterated exponential",
                    needed: "more than the vertex budget".into(),
                    cap: budget.max_vertices,
                })
        }
        Expr::Psi(k) => {
            let base = generators::complete(2)?;
            iterated::psi_with_budget(&base, *k, budget)?
                .graph
                .ok_or(Error::BudgetExceeded {
                    what: "iterated exponential",
                    needed: "more than the vertex budget".into(),
                    cap: budget.max_vertices,
                })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_canonically() {
        for s in [
            "EXP(C8,K2)",
            "CPOW(K2,3)",
            "OMEGA(3)",
            "PSI(3)",
            "EXP(K4,EXP(K2,K2))",
            "B(2,3)",
            "KZ(2,3)",
            "MQ3",
        ] {
            assert_eq!(parse(s).unwrap().to_string(), s);
        }
        assert_eq!(parse(" exp( c8 , k2 ) ").unwrap().to_string(), "EXP(C8,K2)");
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "EXP(C8)", "K", "Z4", "EXP(C8,K2))", "C8 K2", "EXP(C8,,K2)"] {
            assert!(parse(s).is_err(), "should reject {s:?}");
        }
    }

    #[test]
    fn evaluates_basic_shapes() {
        let b = Budget::default();
        let e = eval(&parse("EXP(K2,K2)").unwrap(), &b).unwrap();
        let g = e.graph.unwrap();
        assert_eq!((g.order(), g.size()), (8, 8));
        assert!(e.space.is_some());

        let e = eval(&parse("OMEGA(4)").unwrap(), &b).unwrap();
        assert_eq!(e.graph.unwrap().order(), 32768);

        let e = eval(&parse("CPOW(K2,3)").unwrap(), &b).unwrap();
        let g = e.graph.unwrap();
        assert_eq!((g.order(), g.size()), (8, 12));
    }

    #[test]
    fn budget_respected() {
        let b = Budget {
            max_vertices: 100,
            max_edges: 1000,
        };
        let err = eval(&parse("EXP(C8,K2)").unwrap(), &b).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        // iterated families degrade to stats instead of failing
        let e = eval(&parse("OMEGA(4)").unwrap(), &b).unwrap();
        assert!(e.graph.is_none());
        assert_eq!(e.order().display, "32768");
    }
}
