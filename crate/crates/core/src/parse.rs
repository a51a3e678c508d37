//! Lexer and recursive-descent parser for system files and expressions.
//!
//! Grammar (';'-terminated statements, '#' comments to end of line):
//!
//! ```text
//! system   := header* decl+
//! header   := "vars" ident+ ";" | "params" ident* ";" | "homogenize" ident ";"
//! decl     := ident "=" expr ";"
//! expr     := term (("+" | "-") term)*
//! term     := factor ("*" factor)*
//! factor   := base ("^" nat)?
//! base     := ident | integer | integer "/" integer | "(" expr ")" | "-" factor
//! ```
//!
//! There is no implicit multiplication: `2*x` is required, `2x` is a syntax
//! error. Rational literals are a single token pair `3/4`; general division
//! is not part of the grammar.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::system::SystemSource;
use crate::vars::VarSet;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Semi,
    Eq,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier '{}'", s),
            Tok::Int(n) => format!("integer {}", n),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Semi => "';'".into(),
            Tok::Eq => "'='".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c == '#' {
            while let Some(&c2) = chars.peek() {
                if c2 == '\n' {
                    break;
                }
                chars.next();
                col += 1;
            }
            continue;
        }
        let start_col = col;
        if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&c2) = chars.peek() {
                if c2.is_ascii_alphanumeric() || c2 == '_' {
                    name.push(c2);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            out.push(Spanned { tok: Tok::Ident(name), line, col: start_col });
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c2) = chars.peek() {
                if c2.is_ascii_digit() {
                    digits.push(c2);
                    chars.next();
                    col += 1;
                } else {
                    break;
                }
            }
            // A digit immediately followed by a letter is a misparse magnet
            // (e.g. "2x"); reject it here with a clear message.
            if let Some(&c2) = chars.peek() {
                if c2.is_ascii_alphabetic() || c2 == '_' {
                    return Err(Error::parse(
                        line,
                        col,
                        "implicit multiplication is not allowed; write '*' explicitly",
                    ));
                }
            }
            let value: BigInt = digits.parse().expect("digit string");
            out.push(Spanned { tok: Tok::Int(value), line, col: start_col });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ';' => Tok::Semi,
            '=' => Tok::Eq,
            other => {
                return Err(Error::parse(line, col, format!("unexpected character '{}'", other)))
            }
        };
        chars.next();
        col += 1;
        out.push(Spanned { tok, line, col: start_col });
    }
    out.push(Spanned { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_here<T>(&self, msg: impl Into<String>) -> Result<T> {
        let t = self.peek();
        Err(Error::parse(t.line, t.col, msg))
    }

    fn expect(&mut self, want: Tok) -> Result<Spanned> {
        if self.peek().tok == want {
            Ok(self.next())
        } else {
            let t = self.peek();
            Err(Error::parse(
                t.line,
                t.col,
                format!("expected {}, found {}", want.describe(), t.tok.describe()),
            ))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, usize, usize)> {
        match self.peek().tok.clone() {
            Tok::Ident(name) => {
                let t = self.next();
                Ok((name, t.line, t.col))
            }
            other => {
                let t = self.peek();
                Err(Error::parse(
                    t.line,
                    t.col,
                    format!("expected {}, found {}", what, other.describe()),
                ))
            }
        }
    }

    // expr := term (("+" | "-") term)*
    fn expr(&mut self, vars: &Arc<VarSet>, scope: &Scope) -> Result<Poly> {
        let mut acc = self.term(vars, scope)?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = &acc + &self.term(vars, scope)?;
                }
                Tok::Minus => {
                    self.next();
                    acc = &acc - &self.term(vars, scope)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor ("*" factor)*
    fn term(&mut self, vars: &Arc<VarSet>, scope: &Scope) -> Result<Poly> {
        let mut acc = self.factor(vars, scope)?;
        while self.peek().tok == Tok::Star {
            self.next();
            acc = &acc * &self.factor(vars, scope)?;
        }
        Ok(acc)
    }

    // factor := base ("^" nat)?
    fn factor(&mut self, vars: &Arc<VarSet>, scope: &Scope) -> Result<Poly> {
        let base = self.base(vars, scope)?;
        if self.peek().tok == Tok::Caret {
            self.next();
            let t = self.peek().clone();
            match t.tok {
                Tok::Int(n) => {
                    self.next();
                    let e = u32::try_from(&n).map_err(|_| {
                        Error::parse(t.line, t.col, format!("exponent {} out of range", n))
                    })?;
                    return Ok(base.pow(e));
                }
                other => {
                    return Err(Error::parse(
                        t.line,
                        t.col,
                        format!("expected nonnegative integer exponent, found {}", other.describe()),
                    ))
                }
            }
        }
        Ok(base)
    }

    // base := ident | integer ("/" integer)? | "(" expr ")" | "-" factor
    fn base(&mut self, vars: &Arc<VarSet>, scope: &Scope) -> Result<Poly> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Ident(name) => {
                self.next();
                match vars.index_of(&name) {
                    Some(idx) => Ok(Poly::var(vars, idx)),
                    None => {
                        if scope.hidden.as_deref() == Some(name.as_str()) {
                            Err(Error::parse(
                                t.line,
                                t.col,
                                format!(
                                    "homogenization variable '{}' cannot appear in expressions",
                                    name
                                ),
                            ))
                        } else {
                            Err(Error::parse(t.line, t.col, format!("undeclared identifier '{}'", name)))
                        }
                    }
                }
            }
            Tok::Int(num) => {
                self.next();
                if self.peek().tok == Tok::Slash {
                    self.next();
                    let d = self.peek().clone();
                    match d.tok {
                        Tok::Int(den) => {
                            self.next();
                            if den.is_zero() {
                                return Err(Error::parse(d.line, d.col, "zero denominator"));
                            }
                            Ok(Poly::constant(vars, BigRational::new(num, den)))
                        }
                        other => Err(Error::parse(
                            d.line,
                            d.col,
                            format!("expected integer denominator, found {}", other.describe()),
                        )),
                    }
                } else {
                    Ok(Poly::constant(vars, BigRational::from(num)))
                }
            }
            Tok::LParen => {
                self.next();
                let inner = self.expr(vars, scope)?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Minus => {
                self.next();
                Ok(-&self.factor(vars, scope)?)
            }
            other => self.err_here(format!("expected expression, found {}", other.describe())),
        }
    }
}

/// Names visible while parsing an expression. `hidden` is the homogenization
/// variable, which is declared but deliberately out of scope.
struct Scope {
    hidden: Option<String>,
}

const HEADER_KEYWORDS: [&str; 3] = ["vars", "params", "homogenize"];

/// Parses a complete system file.
pub fn parse_system(text: &str) -> Result<SystemSource> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };

    let mut x_names: Vec<String> = Vec::new();
    let mut param_names: Vec<String> = Vec::new();
    let mut homogenize_name: Option<String> = None;

    // Header phase.
    loop {
        let is_header = matches!(&p.peek().tok,
            Tok::Ident(name) if HEADER_KEYWORDS.contains(&name.as_str()));
        if !is_header {
            break;
        }
        let (kw, _, _) = p.expect_ident("header keyword")?;
        match kw.as_str() {
            "vars" => {
                let (first, line, col) = p.expect_ident("variable name")?;
                declare(&mut x_names, &param_names, &homogenize_name, first, line, col)?;
                while let Tok::Ident(_) = p.peek().tok {
                    let (name, line, col) = p.expect_ident("variable name")?;
                    declare(&mut x_names, &param_names, &homogenize_name, name, line, col)?;
                }
                p.expect(Tok::Semi)?;
            }
            "params" => {
                while let Tok::Ident(_) = p.peek().tok {
                    let (name, line, col) = p.expect_ident("parameter name")?;
                    declare(&mut param_names, &x_names, &homogenize_name, name, line, col)?;
                }
                p.expect(Tok::Semi)?;
            }
            "homogenize" => {
                let (name, line, col) = p.expect_ident("homogenization variable name")?;
                if homogenize_name.is_some() {
                    return Err(Error::parse(line, col, "duplicate homogenize directive"));
                }
                if x_names.contains(&name) || param_names.contains(&name) {
                    return Err(Error::parse(
                        line,
                        col,
                        format!("duplicate declaration of '{}'", name),
                    ));
                }
                homogenize_name = Some(name);
                p.expect(Tok::Semi)?;
            }
            _ => unreachable!(),
        }
    }

    let all_names: Vec<String> = x_names.iter().chain(param_names.iter()).cloned().collect();
    let vars = VarSet::new(all_names)?;
    let scope = Scope { hidden: homogenize_name.clone() };

    // Declaration phase.
    let mut forms: Vec<(String, Poly)> = Vec::new();
    loop {
        match p.peek().tok.clone() {
            Tok::Eof => break,
            Tok::Ident(name) => {
                if HEADER_KEYWORDS.contains(&name.as_str()) {
                    return p.err_here("headers must precede equations");
                }
                let (fname, line, col) = p.expect_ident("equation name")?;
                if vars.index_of(&fname).is_some()
                    || forms.iter().any(|(n, _)| *n == fname)
                    || homogenize_name.as_deref() == Some(fname.as_str())
                {
                    return Err(Error::parse(
                        line,
                        col,
                        format!("duplicate declaration of '{}'", fname),
                    ));
                }
                p.expect(Tok::Eq)?;
                let poly = p.expr(&vars, &scope)?;
                p.expect(Tok::Semi)?;
                forms.push((fname, poly));
            }
            _ => return p.err_here(format!("expected equation, found {}", p.peek().tok.describe())),
        }
    }
    if forms.is_empty() {
        return p.err_here("expected at least one equation");
    }

    Ok(SystemSource { x_names, param_names, homogenize_name, forms, vars })
}

fn declare(
    target: &mut Vec<String>,
    other: &[String],
    homog: &Option<String>,
    name: String,
    line: usize,
    col: usize,
) -> Result<()> {
    if HEADER_KEYWORDS.contains(&name.as_str()) {
        return Err(Error::parse(line, col, format!("'{}' is a reserved word", name)));
    }
    if target.contains(&name) || other.contains(&name) || homog.as_deref() == Some(name.as_str()) {
        return Err(Error::parse(line, col, format!("duplicate declaration of '{}'", name)));
    }
    target.push(name);
    Ok(())
}

/// Parses a single expression over a known variable set. Used for
/// perturbation literals on the command line and in tests.
pub fn parse_expr(text: &str, vars: &Arc<VarSet>) -> Result<Poly> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let scope = Scope { hidden: None };
    let poly = p.expr(vars, &scope)?;
    match p.peek().tok {
        Tok::Eof => Ok(poly),
        ref other => p.err_here(format!("unexpected trailing {}", other.describe())),
    }
}
