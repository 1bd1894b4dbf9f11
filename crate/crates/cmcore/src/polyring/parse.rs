//! Text grammar for rings, polynomials, and fixture documents.
//!
//! Polynomial expressions are ASCII with `+ - * ^`, unsigned integer
//! literals, parentheses, and declared variable names. Rings are declared
//! as `ring F0 vars x,y,u,w;` (`F0` = rationals, `Fp` = the prime field).
//!
//! A *document* is a sequence of semicolon-terminated statements, with `#`
//! line comments:
//!
//! ```text
//! ring F0 vars x,y,z,w;
//! ideal: z^2, z*x, z*y, x^3;          # generators of the main ideal
//! by: x, y, z, w;                     # secondary ideal (quotient/saturation)
//! matrix: [z, 0, 0, -x^2], [0, z, x, y];
//! generators: z*x, z*y, z^2, x^3;     # row vector of a presentation
//! relations: [0, z, -y, -x^2], ...;   # rows; columns are the relations
//! obstruction: ...;                   # ideal in the deformation variables
//! defvars a1, a2;                     # which variables deform
//! truncate 3;                         # truncation degree for lift checks
//! degrees: 0, 0;                      # generator degrees of a presentation
//! ```
//!
//! The `ring` statement must come first. `matrix` and `relations` are
//! synonyms filling the same slot.

use super::coeff::CoefficientField;
use super::matrix::PolyMatrix;
use super::poly::{Polynomial, Ring, RingData};
use crate::{CaError, Result};

#[derive(Debug, Clone, PartialEq)]
enum TokKind {
    Ident(String),
    Int(u64),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokKind,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> CaError {
    CaError::Parse { line, col, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tline, tcol) = (line, col);
        match ch {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        s.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                toks.push(Token { kind: TokKind::Ident(s), line: tline, col: tcol });
            }
            c if c.is_ascii_digit() => {
                let mut v: u64 = 0;
                while let Some(&c) = chars.peek() {
                    if let Some(d) = c.to_digit(10) {
                        v = v
                            .checked_mul(10)
                            .and_then(|x| x.checked_add(d as u64))
                            .ok_or_else(|| err(tline, tcol, "integer literal overflows u64"))?;
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                toks.push(Token { kind: TokKind::Int(v), line: tline, col: tcol });
            }
            _ => {
                let kind = match ch {
                    '+' => TokKind::Plus,
                    '-' => TokKind::Minus,
                    '*' => TokKind::Star,
                    '^' => TokKind::Caret,
                    '(' => TokKind::LParen,
                    ')' => TokKind::RParen,
                    '[' => TokKind::LBracket,
                    ']' => TokKind::RBracket,
                    ',' => TokKind::Comma,
                    ';' => TokKind::Semi,
                    ':' => TokKind::Colon,
                    other => {
                        return Err(err(tline, tcol, format!("unexpected character `{other}`")))
                    }
                };
                chars.next();
                col += 1;
                toks.push(Token { kind, line: tline, col: tcol });
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [Token],
    i: usize,
}

impl<'a> Parser<'a> {
    fn new(toks: &'a [Token]) -> Self {
        Parser { toks, i: 0 }
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.i)
    }

    fn at_end(&self) -> bool {
        self.i >= self.toks.len()
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.i) {
            Some(t) => (t.line, t.col),
            None => self
                .toks
                .last()
                .map(|t| (t.line, t.col + 1))
                .unwrap_or((1, 1)),
        }
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.here();
        Err(err(line, col, msg))
    }

    fn expect(&mut self, kind: &TokKind, what: &str) -> Result<()> {
        match self.peek() {
            Some(t) if t.kind == *kind => {
                self.i += 1;
                Ok(())
            }
            _ => self.fail(format!("expected {what}")),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Token { kind: TokKind::Ident(s), .. }) => {
                let s = s.clone();
                self.i += 1;
                Ok(s)
            }
            _ => self.fail(format!("expected {what}")),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<u64> {
        match self.peek() {
            Some(Token { kind: TokKind::Int(v), .. }) => {
                let v = *v;
                self.i += 1;
                Ok(v)
            }
            _ => self.fail(format!("expected {what}")),
        }
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self, ring: &Ring) -> Result<Polynomial> {
        let mut acc = self.term(ring)?;
        loop {
            match self.peek().map(|t| t.kind.clone()) {
                Some(TokKind::Plus) => {
                    self.i += 1;
                    let t = self.term(ring)?;
                    acc = acc.add(&t);
                }
                Some(TokKind::Minus) => {
                    self.i += 1;
                    let t = self.term(ring)?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := ('-')* factor ('*' factor)*
    fn term(&mut self, ring: &Ring) -> Result<Polynomial> {
        let mut negate = false;
        while matches!(self.peek().map(|t| &t.kind), Some(TokKind::Minus)) {
            self.i += 1;
            negate = !negate;
        }
        let mut acc = self.factor(ring)?;
        while matches!(self.peek().map(|t| &t.kind), Some(TokKind::Star)) {
            self.i += 1;
            let f = self.factor(ring)?;
            acc = acc.mul(&f);
        }
        if negate {
            acc = acc.neg();
        }
        Ok(acc)
    }

    // factor := base ('^' int)?
    fn factor(&mut self, ring: &Ring) -> Result<Polynomial> {
        let base = self.base(ring)?;
        if matches!(self.peek().map(|t| &t.kind), Some(TokKind::Caret)) {
            self.i += 1;
            let e = self.expect_int("an exponent after `^`")?;
            let e32 = u32::try_from(e)
                .map_err(|_| {
                    let (line, col) = self.here();
                    err(line, col, "exponent too large")
                })?;
            return Ok(base.pow(e32));
        }
        Ok(base)
    }

    // base := int | ident | '(' expr ')'
    fn base(&mut self, ring: &Ring) -> Result<Polynomial> {
        let Some(tok) = self.peek().cloned() else {
            return self.fail("expected a polynomial");
        };
        match tok.kind {
            TokKind::Int(v) => {
                self.i += 1;
                Ok(Polynomial::constant(ring, ring.field().from_u64(v)))
            }
            TokKind::Ident(name) => {
                self.i += 1;
                match ring.var_index(&name) {
                    Some(idx) => Ok(Polynomial::var(ring, idx)),
                    None => Err(err(
                        tok.line,
                        tok.col,
                        format!("unknown variable `{name}` (ring is {})", ring.describe()),
                    )),
                }
            }
            TokKind::LParen => {
                self.i += 1;
                let inner = self.expr(ring)?;
                self.expect(&TokKind::RParen, "`)`")?;
                Ok(inner)
            }
            _ => self.fail("expected a variable, integer, or `(`"),
        }
    }

    fn poly_list(&mut self, ring: &Ring) -> Result<Vec<Polynomial>> {
        let mut out = vec![self.expr(ring)?];
        while matches!(self.peek().map(|t| &t.kind), Some(TokKind::Comma)) {
            self.i += 1;
            out.push(self.expr(ring)?);
        }
        Ok(out)
    }

    fn matrix_rows(&mut self, ring: &Ring) -> Result<PolyMatrix> {
        let mut rows: Vec<Vec<Polynomial>> = Vec::new();
        loop {
            self.expect(&TokKind::LBracket, "`[` starting a matrix row")?;
            let row = self.poly_list(ring)?;
            self.expect(&TokKind::RBracket, "`]` closing a matrix row")?;
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return self.fail(format!(
                        "matrix row has {} entries, previous rows have {}",
                        row.len(),
                        first.len()
                    ));
                }
            }
            rows.push(row);
            if matches!(self.peek().map(|t| &t.kind), Some(TokKind::Comma)) {
                self.i += 1;
            } else {
                break;
            }
        }
        PolyMatrix::from_rows(ring, rows)
    }

    fn optional_colon(&mut self) {
        if matches!(self.peek().map(|t| &t.kind), Some(TokKind::Colon)) {
            self.i += 1;
        }
    }

    /// `ring F0 vars x,y,u,w ;` — field override replaces the declared
    /// characteristic (used to rerun one fixture over several fields).
    fn ring_statement(&mut self, field_override: Option<CoefficientField>) -> Result<Ring> {
        let kw = self.expect_ident("the `ring` keyword")?;
        if kw != "ring" {
            return self.fail("a document must start with a `ring` statement");
        }
        let ftok = self.expect_ident("a field tag like `F0` or `F32003`")?;
        let field = match field_override {
            Some(f) => f,
            None => {
                let digits = ftok
                    .strip_prefix('F')
                    .ok_or_else(|| {
                        let (line, col) = self.here();
                        err(line, col, format!("bad field tag `{ftok}`; expected F0 or F<p>"))
                    })?;
                let p: u64 = digits.parse().map_err(|_| {
                    let (line, col) = self.here();
                    err(line, col, format!("bad characteristic in `{ftok}`"))
                })?;
                CoefficientField::new(p)?
            }
        };
        let vars_kw = self.expect_ident("the `vars` keyword")?;
        if vars_kw != "vars" {
            return self.fail("expected `vars` after the field tag");
        }
        let mut names = vec![self.expect_ident("a variable name")?];
        while matches!(self.peek().map(|t| &t.kind), Some(TokKind::Comma)) {
            self.i += 1;
            names.push(self.expect_ident("a variable name")?);
        }
        self.expect(&TokKind::Semi, "`;` after the ring statement")?;
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        Ok(RingData::new(&refs, field))
    }
}

/// A parsed fixture document. Which slots must be present depends on the
/// consuming operation; the parser only enforces the grammar.
#[derive(Debug, Clone)]
pub struct Document {
    pub ring: Ring,
    pub ideal: Option<Vec<Polynomial>>,
    pub by: Option<Vec<Polynomial>>,
    pub matrix: Option<PolyMatrix>,
    pub generators: Option<Vec<Polynomial>>,
    pub obstruction: Option<Vec<Polynomial>>,
    pub defvars: Option<Vec<String>>,
    pub truncate: Option<u32>,
    pub degrees: Option<Vec<u32>>,
}

/// Parses a single polynomial expression in an existing ring.
pub fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial> {
    let toks = lex(src)?;
    let mut p = Parser::new(&toks);
    let poly = p.expr(ring)?;
    if !p.at_end() {
        return p.fail("trailing input after the polynomial");
    }
    Ok(poly)
}

/// Convenience: parses several comma-free expressions at once.
pub fn parse_polynomials(ring: &Ring, srcs: &[&str]) -> Result<Vec<Polynomial>> {
    srcs.iter().map(|s| parse_polynomial(ring, s)).collect()
}

/// Parses a full document; `field_override` substitutes the coefficient
/// field of the `ring` statement when given.
pub fn parse_document(src: &str, field_override: Option<CoefficientField>) -> Result<Document> {
    let toks = lex(src)?;
    let mut p = Parser::new(&toks);
    let ring = p.ring_statement(field_override)?;
    let mut doc = Document {
        ring: ring.clone(),
        ideal: None,
        by: None,
        matrix: None,
        generators: None,
        obstruction: None,
        defvars: None,
        truncate: None,
        degrees: None,
    };
    while !p.at_end() {
        let kw_tok = p.peek().cloned().unwrap();
        let kw = p.expect_ident("a statement keyword")?;
        let dup = |slot: &str| err(kw_tok.line, kw_tok.col, format!("duplicate `{slot}` statement"));
        match kw.as_str() {
            "ideal" => {
                p.optional_colon();
                let polys = p.poly_list(&ring)?;
                if doc.ideal.replace(polys).is_some() {
                    return Err(dup("ideal"));
                }
            }
            "by" => {
                p.optional_colon();
                let polys = p.poly_list(&ring)?;
                if doc.by.replace(polys).is_some() {
                    return Err(dup("by"));
                }
            }
            "matrix" | "relations" => {
                p.optional_colon();
                let m = p.matrix_rows(&ring)?;
                if doc.matrix.replace(m).is_some() {
                    return Err(dup("matrix/relations"));
                }
            }
            "generators" => {
                p.optional_colon();
                let polys = p.poly_list(&ring)?;
                if doc.generators.replace(polys).is_some() {
                    return Err(dup("generators"));
                }
            }
            "obstruction" => {
                p.optional_colon();
                let polys = p.poly_list(&ring)?;
                if doc.obstruction.replace(polys).is_some() {
                    return Err(dup("obstruction"));
                }
            }
            "defvars" => {
                p.optional_colon();
                let mut names = vec![p.expect_ident("a variable name")?];
                while matches!(p.peek().map(|t| &t.kind), Some(TokKind::Comma)) {
                    p.i += 1;
                    names.push(p.expect_ident("a variable name")?);
                }
                for n in &names {
                    if ring.var_index(n).is_none() {
                        return Err(err(
                            kw_tok.line,
                            kw_tok.col,
                            format!("defvars names `{n}`, which is not a ring variable"),
                        ));
                    }
                }
                if doc.defvars.replace(names).is_some() {
                    return Err(dup("defvars"));
                }
            }
            "truncate" => {
                p.optional_colon();
                let v = p.expect_int("a truncation degree")?;
                let v = u32::try_from(v)
                    .map_err(|_| err(kw_tok.line, kw_tok.col, "truncation degree too large"))?;
                if doc.truncate.replace(v).is_some() {
                    return Err(dup("truncate"));
                }
            }
            "degrees" => {
                p.optional_colon();
                let mut ds = vec![p.expect_int("a degree")? as u32];
                while matches!(p.peek().map(|t| &t.kind), Some(TokKind::Comma)) {
                    p.i += 1;
                    ds.push(p.expect_int("a degree")? as u32);
                }
                if doc.degrees.replace(ds).is_some() {
                    return Err(dup("degrees"));
                }
            }
            "ring" => {
                return Err(err(kw_tok.line, kw_tok.col, "duplicate `ring` statement"));
            }
            other => {
                return Err(err(
                    kw_tok.line,
                    kw_tok.col,
                    format!("unknown statement `{other}`"),
                ));
            }
        }
        p.expect(&TokKind::Semi, "`;` ending the statement")?;
    }
    Ok(doc)
}
