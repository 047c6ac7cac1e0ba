//! Line-oriented parser for the reaction grammar:
//!
//! ```text
//! reaction := complex ("->" | "<=>") complex
//! complex  := "0" | term ("+" term)*
//! term     := [coefficient] species_label
//! ```
//!
//! `#` starts a comment, `<=>` expands to a forward and a reverse
//! reaction, and species are registered in first-appearance order.
//! Coefficients are unsigned integers; `p/q` fractions are accepted only
//! in generalized-rational mode.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Zero};
use thiserror::Error;

use super::{Complex, Network, NetworkError, Reaction, SpeciesId, Strictness};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("line {line}, column {col}: fractional coefficient in strict-integer mode")]
    FractionalCoefficient { line: usize, col: usize },
    #[error("line {line}, column {col}: negative coefficient")]
    NegativeCoefficient { line: usize, col: usize },
    #[error("line {line}, column {col}: zero coefficient")]
    ZeroCoefficient { line: usize, col: usize },
    #[error("line {line}: trivial reaction (reactant equals product)")]
    TrivialReaction { line: usize },
    #[error("line {line}: duplicate reaction")]
    DuplicateReaction { line: usize },
    #[error("no reactions found")]
    EmptyInput,
    #[error("invalid network: {0}")]
    Invalid(String),
}

/// Parses in strict-integer mode.
pub fn parse_network(text: &str) -> Result<Network, ParseError> {
    parse_network_with(text, Strictness::StrictInteger)
}

pub fn parse_network_with(text: &str, strictness: Strictness) -> Result<Network, ParseError> {
    let mut parser = Parser { species: BTreeMap::new(), order: Vec::new() };
    let mut reactions: Vec<Reaction> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        if line.trim().is_empty() {
            continue;
        }
        let tokens = lex(line, line_no, strictness)?;
        let (reactant, product, reversible) = parser.parse_line(&tokens, line_no)?;
        if reactant == product {
            return Err(ParseError::TrivialReaction { line: line_no });
        }
        let mut push = |r: Complex, p: Complex| -> Result<(), ParseError> {
            if reactions.iter().any(|existing| existing.reactant == r && existing.product == p) {
                return Err(ParseError::DuplicateReaction { line: line_no });
            }
            reactions.push(Reaction::new(r, p));
            Ok(())
        };
        push(reactant.clone(), product.clone())?;
        if reversible {
            push(product, reactant)?;
        }
    }
    if reactions.is_empty() {
        return Err(ParseError::EmptyInput);
    }
    Network::new(parser.order, reactions, strictness).map_err(|e: NetworkError| {
        ParseError::Invalid(e.to_string())
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigRational),
    Ident(String),
    Plus,
    Arrow,
    BiArrow,
}

struct Spanned {
    token: Token,
    col: usize,
}

fn lex(line: &str, line_no: usize, strictness: Strictness) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '+' {
            out.push(Spanned { token: Token::Plus, col });
            i += 1;
        } else if c == '-' {
            if chars.get(i + 1) == Some(&'>') {
                out.push(Spanned { token: Token::Arrow, col });
                i += 2;
            } else if chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
                return Err(ParseError::NegativeCoefficient { line: line_no, col });
            } else {
                return Err(ParseError::Syntax {
                    line: line_no,
                    col,
                    message: "expected `->`".to_string(),
                });
            }
        } else if c == '<' {
            if chars.get(i + 1) == Some(&'=') && chars.get(i + 2) == Some(&'>') {
                out.push(Spanned { token: Token::BiArrow, col });
                i += 3;
            } else {
                return Err(ParseError::Syntax {
                    line: line_no,
                    col,
                    message: "expected `<=>`".to_string(),
                });
            }
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let numer: String = chars[start..i].iter().collect();
            let mut denom = String::from("1");
            if chars.get(i) == Some(&'/') {
                if strictness == Strictness::StrictInteger {
                    return Err(ParseError::FractionalCoefficient { line: line_no, col });
                }
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        col: i + 1,
                        message: "expected digits after `/`".to_string(),
                    });
                }
                denom = chars[dstart..i].iter().collect();
            }
            let numer: BigInt = numer.parse().expect("digits");
            let denom: BigInt = denom.parse().expect("digits");
            if denom.is_zero() {
                return Err(ParseError::Syntax {
                    line: line_no,
                    col,
                    message: "zero denominator".to_string(),
                });
            }
            out.push(Spanned { token: Token::Number(BigRational::new(numer, denom)), col });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Spanned { token: Token::Ident(chars[start..i].iter().collect()), col });
        } else {
            return Err(ParseError::Syntax {
                line: line_no,
                col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    species: BTreeMap<String, SpeciesId>,
    order: Vec<String>,
}

impl Parser {
    fn species_id(&mut self, label: &str) -> SpeciesId {
        if let Some(&id) = self.species.get(label) {
            return id;
        }
        let id = self.order.len();
        self.species.insert(label.to_string(), id);
        self.order.push(label.to_string());
        id
    }

    fn parse_line(
        &mut self,
        tokens: &[Spanned],
        line: usize,
    ) -> Result<(Complex, Complex, bool), ParseError> {
        let mut pos = 0;
        let reactant = self.parse_complex(tokens, &mut pos, line)?;
        let reversible = match tokens.get(pos).map(|t| &t.token) {
            Some(Token::Arrow) => false,
            Some(Token::BiArrow) => true,
            _ => {
                let col = tokens.get(pos).or(tokens.last()).map_or(1, |t| t.col);
                return Err(ParseError::Syntax {
                    line,
                    col,
                    message: "expected `->` or `<=>`".to_string(),
                })
            }
        };
        pos += 1;
        let product = self.parse_complex(tokens, &mut pos, line)?;
        if pos != tokens.len() {
            return Err(ParseError::Syntax {
                line,
                col: tokens[pos].col,
                message: "unexpected trailing input".to_string(),
            });
        }
        Ok((reactant, product, reversible))
    }

    fn parse_complex(
        &mut self,
        tokens: &[Spanned],
        pos: &mut usize,
        line: usize,
    ) -> Result<Complex, ParseError> {
        // lone "0" is the zero complex
        if let Some(Spanned { token: Token::Number(n), .. }) = tokens.get(*pos) {
            let next_is_ident =
                matches!(tokens.get(*pos + 1).map(|t| &t.token), Some(Token::Ident(_)));
            if n.is_zero() && !next_is_ident {
                *pos += 1;
                return Ok(Complex::zero());
            }
        }
        let mut pairs: Vec<(SpeciesId, BigRational)> = Vec::new();
        loop {
            let coeff = match tokens.get(*pos) {
                Some(Spanned { token: Token::Number(n), col }) => {
                    if n.is_zero() {
                        return Err(ParseError::ZeroCoefficient { line, col: *col });
                    }
                    *pos += 1;
                    n.clone()
                }
                _ => BigRational::from_integer(BigInt::from(1)),
            };
            match tokens.get(*pos) {
                Some(Spanned { token: Token::Ident(label), .. }) => {
                    let id = self.species_id(label);
                    pairs.push((id, coeff));
                    *pos += 1;
                }
                other => {
                    return Err(ParseError::Syntax {
                        line,
                        col: other.map_or(1, |t| t.col),
                        message: "expected a species label".to_string(),
                    })
                }
            }
            match tokens.get(*pos).map(|t| &t.token) {
                Some(Token::Plus) => {
                    *pos += 1;
                }
                _ => break,
            }
        }
        Ok(Complex::from_pairs(pairs))
    }
}
