//! Text form of group expressions:
//!
//! ```text
//! expr     := term ( "x" term )*
//! term     := "Alt(" int ")" | "Sym(" int ")"
//!           | "Ab(" int "," "[" int ("," int)* "]" ")"
//!           | "Grp(" factored ";" "pi=" int ("," int)* ";" "edges=" edgelist? ")"
//! factored := int ("*" int)*      each int of form p or p^k
//! edgelist := pair ("," pair)*    pair := int "-" int
//! ```
//!
//! Whitespace is ignored everywhere. Products associate to the left.

use std::collections::BTreeSet;
use std::fmt;

use super::GroupExpr;
use crate::numtheory::{FactoredInteger, Partition};

/// Parser failure: either malformed syntax or a well-formed construct with
/// an invalid argument (composite prime base, mismatched pi list, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    Argument {
        pos: usize,
        message: String,
    },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax {
                pos,
                expected,
                found,
            } => write!(
                f,
                "syntax error at position {pos}: expected {expected}, found {found}"
            ),
            ParseError::Argument { pos, message } => {
                write!(f, "invalid argument at position {pos}: {message}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Star,
    Caret,
    Dash,
    Eq,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Semi => "';'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Dash => "'-'".into(),
            Tok::Eq => "'='".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let lit = &text[start..i];
            let value: u64 = lit.parse().map_err(|_| ParseError::Argument {
                pos: start,
                message: format!("integer literal {lit} does not fit in 64 bits"),
            })?;
            toks.push((start, Tok::Int(value)));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_alphabetic() {
                i += 1;
            }
            let word = &text[start..i];
            // the product operator may be glued to the next keyword:
            // "Alt(624)xAb(5,[4])"
            if word.len() > 1
                && word.starts_with('x')
                && word[1..].starts_with(|ch: char| ch.is_ascii_uppercase())
            {
                toks.push((start, Tok::Ident("x".into())));
                toks.push((start + 1, Tok::Ident(word[1..].into())));
            } else {
                toks.push((start, Tok::Ident(word.into())));
            }
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            ';' => Tok::Semi,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '-' => Tok::Dash,
            '=' => Tok::Eq,
            _ => {
                return Err(ParseError::Syntax {
                    pos: i,
                    expected: "a token".into(),
                    found: format!("'{c}'"),
                })
            }
        };
        toks.push((i, tok));
        i += 1;
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.i)
    }

    fn pos(&self) -> usize {
        self.peek().map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn syntax_err<T>(&self, expected: &str) -> Result<T, ParseError> {
        let (pos, found) = match self.peek() {
            Some((p, t)) => (*p, t.describe()),
            None => (self.end, "end of input".into()),
        };
        Err(ParseError::Syntax {
            pos,
            expected: expected.into(),
            found,
        })
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.i).cloned();
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<usize, ParseError> {
        match self.peek() {
            Some((pos, t)) if *t == want => {
                let pos = *pos;
                self.i += 1;
                Ok(pos)
            }
            _ => self.syntax_err(&want.describe()),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(usize, u64), ParseError> {
        match self.peek() {
            Some((pos, Tok::Int(n))) => {
                let out = (*pos, *n);
                self.i += 1;
                Ok(out)
            }
            _ => self.syntax_err(what),
        }
    }

    fn argument_err<T>(pos: usize, err: impl fmt::Display) -> Result<T, ParseError> {
        Err(ParseError::Argument {
            pos,
            message: err.to_string(),
        })
    }

    fn expr(&mut self) -> Result<GroupExpr, ParseError> {
        let mut acc = self.term()?;
        while matches!(self.peek(), Some((_, Tok::Ident(w))) if w == "x") {
            self.i += 1;
            let rhs = self.term()?;
            acc = GroupExpr::product(acc, rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GroupExpr, ParseError> {
        let (pos, tok) = match self.bump() {
            Some(t) => t,
            None => return self.syntax_err("'Alt', 'Sym', 'Ab' or 'Grp'"),
        };
        let word = match tok {
            Tok::Ident(w) => w,
            other => {
                return Err(ParseError::Syntax {
                    pos,
                    expected: "'Alt', 'Sym', 'Ab' or 'Grp'".into(),
                    found: other.describe(),
                })
            }
        };
        match word.as_str() {
            "Alt" | "Sym" => {
                self.expect(Tok::LParen)?;
                let (npos, n) = self.expect_int("a degree")?;
                self.expect(Tok::RParen)?;
                let made = if word == "Alt" {
                    GroupExpr::alt(n)
                } else {
                    GroupExpr::sym(n)
                };
                made.or_else(|e| Self::argument_err(npos, e))
            }
            "Ab" => {
                self.expect(Tok::LParen)?;
                let (ppos, p) = self.expect_int("a prime base")?;
                self.expect(Tok::Comma)?;
                self.expect(Tok::LBracket)?;
                let mut parts = vec![];
                let (part_pos, first) = self.expect_int("a partition part")?;
                parts.push(first);
                while matches!(self.peek(), Some((_, Tok::Comma))) {
                    self.i += 1;
                    parts.push(self.expect_int("a partition part")?.1);
                }
                self.expect(Tok::RBracket)?;
                self.expect(Tok::RParen)?;
                let shape = Partition::new(parts).or_else(|e| Self::argument_err(part_pos, e))?;
                GroupExpr::abelian_p_group(p, shape).or_else(|e| Self::argument_err(ppos, e))
            }
            "Grp" => {
                self.expect(Tok::LParen)?;
                let order = self.factored()?;
                self.expect(Tok::Semi)?;
                let pi_pos = self.pos();
                self.keyword("pi")?;
                self.expect(Tok::Eq)?;
                let mut pi = BTreeSet::new();
                pi.insert(self.expect_int("a prime")?.1);
                while matches!(self.peek(), Some((_, Tok::Comma))) {
                    self.i += 1;
                    pi.insert(self.expect_int("a prime")?.1);
                }
                self.expect(Tok::Semi)?;
                self.keyword("edges")?;
                self.expect(Tok::Eq)?;
                let mut edges = vec![];
                if matches!(self.peek(), Some((_, Tok::Int(_)))) {
                    edges.push(self.edge_pair()?);
                    while matches!(self.peek(), Some((_, Tok::Comma))) {
                        self.i += 1;
                        edges.push(self.edge_pair()?);
                    }
                }
                self.expect(Tok::RParen)?;
                let declared: BTreeSet<u64> = order.primes().collect();
                if pi != declared {
                    return Self::argument_err(
                        pi_pos,
                        format!(
                            "pi list {{{}}} does not match the primes of the order ({})",
                            pi.iter()
                                .map(|p| p.to_string())
                                .collect::<Vec<_>>()
                                .join(","),
                            order
                        ),
                    );
                }
                GroupExpr::abstract_group(order, edges).or_else(|e| Self::argument_err(pos, e))
            }
            "x" => self.syntax_err("a term before 'x'"),
            other => Err(ParseError::Syntax {
                pos,
                expected: "'Alt', 'Sym', 'Ab' or 'Grp'".into(),
                found: format!("'{other}'"),
            }),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some((_, Tok::Ident(w))) if w == word => {
                self.i += 1;
                Ok(())
            }
            _ => self.syntax_err(&format!("'{word}'")),
        }
    }

    /// `int ("*" int)*` with each int of form p or p^k.
    fn factored(&mut self) -> Result<FactoredInteger, ParseError> {
        let mut pairs: Vec<(usize, u64, u64)> = vec![self.prime_power()?];
        while matches!(self.peek(), Some((_, Tok::Star))) {
            self.i += 1;
            pairs.push(self.prime_power()?);
        }
        let first_pos = pairs[0].0;
        FactoredInteger::from_pairs(pairs.iter().map(|&(_, p, e)| (p, e)))
            .or_else(|e| Self::argument_err(first_pos, e))
    }

    fn prime_power(&mut self) -> Result<(usize, u64, u64), ParseError> {
        let (pos, p) = self.expect_int("a prime")?;
        let e = if matches!(self.peek(), Some((_, Tok::Caret))) {
            self.i += 1;
            self.expect_int("an exponent")?.1
        } else {
            1
        };
        Ok((pos, p, e))
    }

    fn edge_pair(&mut self) -> Result<(u64, u64), ParseError> {
        let (_, a) = self.expect_int("an edge endpoint")?;
        self.expect(Tok::Dash)?;
        let (_, b) = self.expect_int("an edge endpoint")?;
        Ok((a, b))
    }
}

/// Parse the grammar above into a left-associated expression tree.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        i: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    if parser.peek().is_some() {
        return parser.syntax_err("end of input or 'x'");
    }
    Ok(expr)
}
