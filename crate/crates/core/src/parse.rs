//! Text format for polynomials and systems.
//!
//! A polynomial is a `+`/`-` separated list of terms; a term is an optional
//! rational coefficient followed by variable powers (`y^2`, `x`), with `*`
//! optional between factors and whitespace ignored everywhere:
//!
//! ```text
//! x + 2*x^2
//! -3/8*x*y^2 + x
//! ```
//!
//! Systems are one polynomial per line; blank lines and `#` comments are
//! skipped. Variables are either declared by the caller or inferred, in
//! which case they must be named `x1, x2, ...` and the algebra gets as many
//! variables as the largest index mentioned.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::coeffs::Rational;
use crate::error::Error;
use crate::order::Monomial;
use crate::poly::Polynomial;

/// Default variable names `x1..xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{}", i)).collect()
}

/// Parse one polynomial over the declared variables.
pub fn parse_polynomial(src: &str, names: &[String]) -> Result<Polynomial, Error> {
    let table = NameTable::declared(names)?;
    let tokens = tokenize(src, 1)?;
    parse_tokens(&tokens, src, 1, &table)
}

/// Parse a system, one polynomial per line. With `names: None` the
/// variables are inferred from `x<k>` identifiers across the whole input.
/// Zero polynomials are kept; dropping them is the caller's policy.
pub fn parse_system(
    src: &str,
    names: Option<&[String]>,
) -> Result<(Vec<String>, Vec<Polynomial>), Error> {
    let lines: Vec<(usize, &str)> = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();

    let table = match names {
        Some(ns) => NameTable::declared(ns)?,
        None => {
            let mut max_index = 0usize;
            for (lineno, line) in &lines {
                for tok in tokenize(line, *lineno)? {
                    if let TokenKind::Ident(name) = &tok.kind {
                        max_index = max_index.max(inferred_index(name, tok.line, tok.col)? + 1);
                    }
                }
            }
            NameTable::declared(&default_names(max_index))?
        }
    };

    let mut polys = Vec::with_capacity(lines.len());
    for (lineno, line) in &lines {
        let tokens = tokenize(line, *lineno)?;
        polys.push(parse_tokens(&tokens, line, *lineno, &table)?);
    }
    Ok((table.names, polys))
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn inferred_index(name: &str, line: usize, col: usize) -> Result<usize, Error> {
    let digits = name.strip_prefix('x').unwrap_or("");
    if !digits.is_empty() && !digits.starts_with('0') && digits.bytes().all(|b| b.is_ascii_digit())
    {
        let k: usize = digits
            .parse()
            .map_err(|_| err_at(line, col, format!("variable index too large in '{}'", name)))?;
        Ok(k - 1)
    } else {
        Err(err_at(
            line,
            col,
            format!("unknown variable '{}' (declare names, or use x1, x2, ...)", name),
        ))
    }
}

struct NameTable {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl NameTable {
    fn declared(names: &[String]) -> Result<Self, Error> {
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty()
                || !n.chars().next().unwrap().is_ascii_alphabetic()
                || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            {
                return Err(Error::Parse(format!("invalid variable name '{}'", n)));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::Parse(format!("duplicate variable name '{}'", n)));
            }
        }
        Ok(NameTable { names: names.to_vec(), index })
    }

    fn lookup(&self, name: &str, line: usize, col: usize) -> Result<usize, Error> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| err_at(line, col, format!("unknown variable '{}'", name)))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum TokenKind {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(String),
    Ident(String),
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    line: usize,
    col: usize,
}

fn err_at(line: usize, col: usize, msg: String) -> Error {
    Error::Parse(format!("line {}, column {}: {}", line, col, msg))
}

fn tokenize(src: &str, lineno: usize) -> Result<Vec<Token>, Error> {
    let mut tokens = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let col = i + 1;
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
            }
            '+' => {
                tokens.push(Token { kind: TokenKind::Plus, line: lineno, col });
                i += 1;
            }
            '-' => {
                tokens.push(Token { kind: TokenKind::Minus, line: lineno, col });
                i += 1;
            }
            '*' => {
                tokens.push(Token { kind: TokenKind::Star, line: lineno, col });
                i += 1;
            }
            '^' => {
                tokens.push(Token { kind: TokenKind::Caret, line: lineno, col });
                i += 1;
            }
            '/' => {
                tokens.push(Token { kind: TokenKind::Slash, line: lineno, col });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Int(src[start..i].to_string()),
                    line: lineno,
                    col,
                });
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(src[start..i].to_string()),
                    line: lineno,
                    col,
                });
            }
            other => {
                return Err(err_at(lineno, col, format!("unexpected character '{}'", other)));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: usize,
    end_col: usize,
    table: &'a NameTable,
}

fn parse_tokens(
    tokens: &[Token],
    src: &str,
    lineno: usize,
    table: &NameTable,
) -> Result<Polynomial, Error> {
    let mut p = Parser { tokens, pos: 0, line: lineno, end_col: src.len() + 1, table };
    let poly = p.polynomial()?;
    if let Some(tok) = p.peek() {
        return Err(err_at(tok.line, tok.col, "trailing input after polynomial".to_string()));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        match self.peek() {
            Some(t) => (t.line, t.col),
            None => (self.line, self.end_col),
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial, Error> {
        let nvars = self.table.names.len();
        let mut acc: Vec<(Monomial, Rational)> = Vec::new();
        let mut negative = false;
        // Leading sign.
        match self.peek().map(|t| t.kind.clone()) {
            Some(TokenKind::Minus) => {
                self.bump();
                negative = true;
            }
            Some(TokenKind::Plus) => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let (c, m) = self.term(nvars)?;
            acc.push((m, if negative { -c } else { c }));
            match self.peek().map(|t| t.kind.clone()) {
                Some(TokenKind::Plus) => {
                    self.bump();
                    negative = false;
                }
                Some(TokenKind::Minus) => {
                    self.bump();
                    negative = true;
                }
                _ => break,
            }
        }
        Ok(Polynomial::from_terms(nvars, acc))
    }

    fn term(&mut self, nvars: usize) -> Result<(Rational, Monomial), Error> {
        let (line, col) = self.here();
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; nvars];
        let mut saw_factor = false;

        if let Some(TokenKind::Int(_)) = self.peek().map(|t| &t.kind) {
            coeff = self.rational()?;
            saw_factor = true;
            // Optional '*' between coefficient and variables.
            if let Some(TokenKind::Star) = self.peek().map(|t| &t.kind) {
                self.bump();
                self.require_variable()?;
            }
        }
        while let Some(TokenKind::Ident(_)) = self.peek().map(|t| &t.kind) {
            self.varpow(&mut exps)?;
            saw_factor = true;
            if let Some(TokenKind::Star) = self.peek().map(|t| &t.kind) {
                self.bump();
                self.require_variable()?;
            }
        }
        if !saw_factor {
            return Err(err_at(line, col, "expected a term".to_string()));
        }
        Ok((coeff, Monomial::new(exps)))
    }

    /// `*` must be followed by a variable; the enclosing loop consumes it.
    fn require_variable(&self) -> Result<(), Error> {
        match self.peek().map(|t| &t.kind) {
            Some(TokenKind::Ident(_)) => Ok(()),
            _ => {
                let (l, c) = self.here();
                Err(err_at(l, c, "expected variable after '*'".to_string()))
            }
        }
    }

    fn varpow(&mut self, exps: &mut [u32]) -> Result<(), Error> {
        let (line, col) = self.here();
        let name = match self.bump().map(|t| t.kind.clone()) {
            Some(TokenKind::Ident(name)) => name,
            _ => return Err(err_at(line, col, "expected a variable".to_string())),
        };
        let idx = self.table.lookup(&name, line, col)?;
        let mut exp: u32 = 1;
        if let Some(TokenKind::Caret) = self.peek().map(|t| &t.kind) {
            self.bump();
            let (l, c) = self.here();
            exp = match self.bump().map(|t| t.kind.clone()) {
                Some(TokenKind::Int(d)) => d
                    .parse()
                    .map_err(|_| err_at(l, c, format!("exponent '{}' out of range", d)))?,
                _ => return Err(err_at(l, c, "expected an exponent".to_string())),
            };
        }
        exps[idx] = exps[idx]
            .checked_add(exp)
            .ok_or_else(|| err_at(line, col, "exponent overflow".to_string()))?;
        Ok(())
    }

    fn rational(&mut self) -> Result<Rational, Error> {
        let (l, c) = self.here();
        let numer = match self.bump().map(|t| t.kind.clone()) {
            Some(TokenKind::Int(d)) => d,
            _ => return Err(err_at(l, c, "expected a number".to_string())),
        };
        let numer: BigInt = numer.parse().unwrap();
        if let Some(TokenKind::Slash) = self.peek().map(|t| &t.kind) {
            self.bump();
            let (l2, c2) = self.here();
            let denom = match self.bump().map(|t| t.kind.clone()) {
                Some(TokenKind::Int(d)) => d,
                _ => return Err(err_at(l2, c2, "expected a denominator".to_string())),
            };
            let denom: BigInt = denom.parse().unwrap();
            if denom == BigInt::from(0) {
                return Err(err_at(l2, c2, "zero denominator".to_string()));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }
}
