//! Handlebody-tangle expressions: syntax, typing, and evaluation.
//!
//! ```text
//! expr   := term (';' term)*
//! term   := factor ('*' factor)*
//! factor := 'cup' | 'cap' | 'Y' | 'X+' | 'X-' | 'id' INT | '(' expr ')'
//! ```
//! `;` composes top to bottom, `*` places side by side, `#` starts a comment.

mod eval;

pub use eval::*;

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    Cup,
    Cap,
    Y,
    XPlus,
    XMinus,
    Id(usize),
}

impl Gen {
    /// `(domain, codomain)`.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Gen::Cup => (2, 0),
            Gen::Cap => (0, 2),
            Gen::Y => (2, 1),
            Gen::XPlus | Gen::XMinus => (2, 2),
            Gen::Id(n) => (n, n),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::Cup => write!(f, "cup"),
            Gen::Cap => write!(f, "cap"),
            Gen::Y => write!(f, "Y"),
            Gen::XPlus => write!(f, "X+"),
            Gen::XMinus => write!(f, "X-"),
            Gen::Id(n) => write!(f, "id{n}"),
        }
    }
}

/// Source position of a node: byte range plus the line/column of its start.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TangleExpr {
    Gen(Gen, Span),
    Compose(Box<TangleExpr>, Box<TangleExpr>, Span),
    Tensor(Box<TangleExpr>, Box<TangleExpr>, Span),
}

impl TangleExpr {
    pub fn span(&self) -> Span {
        match self {
            TangleExpr::Gen(_, s) | TangleExpr::Compose(_, _, s) | TangleExpr::Tensor(_, _, s) => *s,
        }
    }

    /// `(domain, codomain)`, or the first mismatch.
    pub fn arity(&self) -> std::result::Result<(usize, usize), (Span, String)> {
        match self {
            TangleExpr::Gen(g, _) => Ok(g.arity()),
            TangleExpr::Tensor(a, b, _) => {
                let (x, y) = (a.arity()?, b.arity()?);
                Ok((x.0 + y.0, x.1 + y.1))
            }
            TangleExpr::Compose(a, b, s) => {
                let (x, y) = (a.arity()?, b.arity()?);
                if x.1 != y.0 {
                    // point at the junction: last stage of `a` through `b`
                    let last = match &**a {
                        TangleExpr::Compose(_, r, _) => &**r,
                        other => other,
                    };
                    let at = Span { start: last.span().start, end: s.end, line: last.span().line, column: last.span().column };
                    return Err((at, format!("codomain {} does not match domain {}", x.1, y.0)));
                }
                Ok((x.0, y.1))
            }
        }
    }

    /// Number of `(cup, cap)` generators.
    pub fn cup_cap_count(&self) -> (usize, usize) {
        match self {
            TangleExpr::Gen(Gen::Cup, _) => (1, 0),
            TangleExpr::Gen(Gen::Cap, _) => (0, 1),
            TangleExpr::Gen(..) => (0, 0),
            TangleExpr::Compose(a, b, _) | TangleExpr::Tensor(a, b, _) => {
                let (x, y) = (a.cup_cap_count(), b.cup_cap_count());
                (x.0 + y.0, x.1 + y.1)
            }
        }
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Gen(g, _) => write!(f, "{g}"),
            TangleExpr::Compose(a, b, _) => write!(f, "({a} ; {b})"),
            TangleExpr::Tensor(a, b, _) => write!(f, "({a} * {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Word(String),
    Int(usize),
    XPlus,
    XMinus,
    Semi,
    Star,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::XPlus => write!(f, "`X+`"),
            Tok::XMinus => write!(f, "`X-`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Star => write!(f, "`*`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Span)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    let syntax = |line, column, message: String| Error::Syntax { line, column, message };
    while i < chars.len() {
        let (pos, ch) = chars[i];
        let here = |end: usize| Span { start: pos, end, line, column: col };
        let advance = |k: usize, col: &mut usize| *col += k;
        if ch == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if ch.is_whitespace() {
            advance(1, &mut col);
            i += 1;
            continue;
        }
        if ch == '#' {
            while i < chars.len() && chars[i].1 != '\n' {
                i += 1;
            }
            continue;
        }
        let single = match ch {
            ';' => Some(Tok::Semi),
            '*' => Some(Tok::Star),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, here(pos + 1)));
            advance(1, &mut col);
            i += 1;
            continue;
        }
        if ch == 'X' {
            let t = match chars.get(i + 1).map(|c| c.1) {
                Some('+') => Tok::XPlus,
                Some('-') => Tok::XMinus,
                _ => return Err(syntax(line, col, "expected `X+` or `X-`".into())),
            };
            out.push((t, here(pos + 2)));
            advance(2, &mut col);
            i += 2;
            continue;
        }
        if ch.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_digit() {
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |c| c.0);
            let n = text[pos..end].parse().map_err(|_| syntax(line, col, format!("integer `{}` is too large", &text[pos..end])))?;
            out.push((Tok::Int(n), here(end)));
            advance(j - i, &mut col);
            i = j;
            continue;
        }
        if ch.is_ascii_alphabetic() {
            let mut j = i;
            while j < chars.len() && chars[j].1.is_ascii_alphabetic() {
                j += 1;
            }
            let end = chars.get(j).map_or(text.len(), |c| c.0);
            out.push((Tok::Word(text[pos..end].to_string()), here(end)));
            advance(j - i, &mut col);
            i = j;
            continue;
        }
        return Err(syntax(line, col, format!("unexpected character `{ch}`")));
    }
    out.push((Tok::End, Span { start: text.len(), end: text.len(), line, column: col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

const FACTOR_START: &str = "`cup`, `cap`, `Y`, `X+`, `X-`, `id`, or `(`";

impl Parser {
    fn peek(&self) -> &(Tok, Span) {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        let (t, s) = self.peek();
        Error::Syntax { line: s.line, column: s.column, message: format!("expected {expected}, found {t}") }
    }

    fn join(a: Span, b: Span) -> Span {
        Span { start: a.start, end: b.end, line: a.line, column: a.column }
    }

    fn expr(&mut self) -> Result<TangleExpr> {
        let mut lhs = self.term()?;
        while self.peek().0 == Tok::Semi {
            self.bump();
            let rhs = self.term()?;
            let s = Self::join(lhs.span(), rhs.span());
            lhs = TangleExpr::Compose(Box::new(lhs), Box::new(rhs), s);
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<TangleExpr> {
        let mut lhs = self.factor()?;
        while self.peek().0 == Tok::Star {
            self.bump();
            let rhs = self.factor()?;
            let s = Self::join(lhs.span(), rhs.span());
            lhs = TangleExpr::Tensor(Box::new(lhs), Box::new(rhs), s);
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<TangleExpr> {
        let (t, s) = self.peek().clone();
        match t {
            Tok::XPlus => {
                self.bump();
                Ok(TangleExpr::Gen(Gen::XPlus, s))
            }
            Tok::XMinus => {
                self.bump();
                Ok(TangleExpr::Gen(Gen::XMinus, s))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                if self.peek().0 != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                let (_, close) = self.bump();
                // keep the parenthesized span for error messages
                Ok(match e {
                    TangleExpr::Gen(g, _) => TangleExpr::Gen(g, Self::join(s, close)),
                    TangleExpr::Compose(a, b, _) => TangleExpr::Compose(a, b, Self::join(s, close)),
                    TangleExpr::Tensor(a, b, _) => TangleExpr::Tensor(a, b, Self::join(s, close)),
                })
            }
            Tok::Word(w) => {
                let g = match w.as_str() {
                    "cup" => Gen::Cup,
                    "cap" => Gen::Cap,
                    "Y" => Gen::Y,
                    "id" => {
                        self.bump();
                        return match self.peek().clone() {
                            (Tok::Int(n), e) => {
                                self.bump();
                                Ok(TangleExpr::Gen(Gen::Id(n), Self::join(s, e)))
                            }
                            _ => Err(self.error("a strand count after `id`")),
                        };
                    }
                    _ => return Err(self.error(FACTOR_START)),
                };
                self.bump();
                Ok(TangleExpr::Gen(g, s))
            }
            _ => Err(self.error(FACTOR_START)),
        }
    }
}

/// Parses without type checking.
pub fn parse_untyped(text: &str) -> Result<TangleExpr> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if p.peek().0 != Tok::End {
        return Err(p.error("`;`, `*`, `)` or end of input"));
    }
    Ok(e)
}

/// Parses and type checks.
pub fn parse_tangle(text: &str) -> Result<TangleExpr> {
    let e = parse_untyped(text)?;
    if let Err((s, msg)) = e.arity() {
        let snippet = text.get(s.start..s.end).unwrap_or("").split_whitespace().collect::<Vec<_>>().join(" ");
        return Err(Error::Type { line: s.line, column: s.column, message: format!("{msg} in `{snippet}`") });
    }
    Ok(e)
}

/// Genus-`g` unknotted handlebody, opened at one cup: a `0 → 2` presentation.
pub fn genus_presentation(g: usize) -> String {
    assert!(g >= 1);
    let mut s = String::from("cap");
    for _ in 1..g {
        s.push_str(" ; (id1 * cap * id1) ; (Y * Y)");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arities() {
        assert_eq!(parse_tangle("cap ; cup").unwrap().arity().unwrap(), (0, 0));
        assert_eq!(parse_tangle("cap ; (id1 * cap * id1) ; (Y * Y)").unwrap().arity().unwrap(), (0, 2));
        assert_eq!(parse_tangle("cup ; cap").unwrap().arity().unwrap(), (2, 2));
        assert_eq!(parse_tangle("id 3").unwrap().arity().unwrap(), (3, 3));
    }

    #[test]
    fn precedence_and_comments() {
        let e = parse_tangle("# comment\ncap * cap ; id4 # trailing\n").unwrap();
        assert!(matches!(e, TangleExpr::Compose(ref a, _, _) if matches!(**a, TangleExpr::Tensor(..))));
    }

    #[test]
    fn type_error_reports_position() {
        match parse_tangle("cap ;\n  Y ; cup") {
            Err(Error::Type { line, column, message }) => {
                assert_eq!((line, column), (2, 3), "{message}");
                assert!(message.contains("Y ; cup"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn syntax_errors_report_expected_tokens() {
        match parse_tangle("cap ; (Y * ") {
            Err(Error::Syntax { line, column, message }) => {
                assert_eq!((line, column), (1, 12));
                assert!(message.contains("`cup`"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_tangle("cap ; foo"), Err(Error::Syntax { column: 7, .. })));
        assert!(matches!(parse_tangle("X ; cup"), Err(Error::Syntax { column: 1, .. })));
        assert!(matches!(parse_tangle("(cap"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_tangle("cap cap"), Err(Error::Syntax { column: 5, .. })));
    }

    #[test]
    fn genus_presentations_type_check() {
        for g in 1..=3 {
            assert_eq!(parse_tangle(&genus_presentation(g)).unwrap().arity().unwrap(), (0, 2));
        }
    }
}
