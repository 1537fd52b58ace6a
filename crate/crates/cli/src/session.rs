//! Session files: a ring declaration followed by named polynomials and
//! ideals, in the style of
//!
//! ```text
//! ring R = 0,(x,y,z),ds;
//! poly F = x3y3+z9;
//! ideal I = jacob(F),F;
//! ```

use std::fmt;
use std::sync::Arc;

use hcstd::coeff::{DomainSpec, Scalar};
use hcstd::ring::{parse_polynomial, IdealPresentation, OrderSpec, PolyRing, Polynomial};
use thiserror::Error;

/// A session error with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct SessionError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug)]
pub struct Session {
    pub domain: DomainSpec,
    pub ring: Arc<PolyRing>,
    pub polys: Vec<(String, Polynomial<Scalar>)>,
    pub ideals: Vec<(String, IdealPresentation)>,
}

impl Session {
    pub fn poly(&self, name: &str) -> Option<&Polynomial<Scalar>> {
        self.polys.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    pub fn ideal(&self, name: &str) -> Option<&IdealPresentation> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    /// The named ideal, or the last one declared.
    pub fn target_ideal(&self, name: Option<&str>) -> Result<&IdealPresentation, String> {
        match name {
            Some(n) => self.ideal(n).ok_or_else(|| format!("no ideal named `{n}`")),
            None => self.ideals.last().map(|(_, i)| i).ok_or_else(|| "the session declares no ideal".into()),
        }
    }

    /// The named polynomial, or the last one declared.
    pub fn target_poly(&self, name: Option<&str>) -> Result<&Polynomial<Scalar>, String> {
        match name {
            Some(n) => self.poly(n).ok_or_else(|| format!("no polynomial named `{n}`")),
            None => self.polys.last().map(|(_, p)| p).ok_or_else(|| "the session declares no polynomial".into()),
        }
    }
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.domain.parameters();
        let ch = self.domain.characteristic();
        let head = if params.is_empty() {
            ch.to_string()
        } else {
            format!("({ch},{})", params.join(","))
        };
        writeln!(f, "ring R = {head},({}),{};", self.ring.vars().join(","), self.ring.order())?;
        for (name, p) in &self.polys {
            writeln!(f, "poly {name} = {p};")?;
        }
        for (name, ideal) in &self.ideals {
            let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
            writeln!(f, "ideal {name} = {};", gens.join(","))?;
        }
        Ok(())
    }
}

/// A slice of the source with its byte offset.
#[derive(Clone, Copy, Debug)]
struct Span<'a> {
    text: &'a str,
    at: usize,
}

impl<'a> Span<'a> {
    fn trim(self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        Span {
            text: self.text.trim(),
            at: self.at + lead,
        }
    }

    fn slice(self, from: usize, to: usize) -> Span<'a> {
        Span {
            text: &self.text[from..to],
            at: self.at + from,
        }
    }

    /// Splits on `sep` outside parentheses.
    fn split_top(self, sep: char) -> Vec<Span<'a>> {
        let mut out = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, c) in self.text.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                c if c == sep && depth == 0 => {
                    out.push(self.slice(start, i).trim());
                    start = i + c.len_utf8();
                }
                _ => {}
            }
        }
        out.push(self.slice(start, self.text.len()).trim());
        out
    }

    /// Strips one pair of enclosing parentheses.
    fn unparen(self) -> Option<Span<'a>> {
        let inner = self.text.strip_prefix('(')?.strip_suffix(')')?;
        Some(Span { text: inner, at: self.at + 1 }.trim())
    }
}

struct Source<'a> {
    text: &'a str,
}

impl Source<'_> {
    fn error(&self, at: usize, message: impl Into<String>) -> SessionError {
        let before = &self.text[..at.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        SessionError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Blanks out `//` comments so that offsets stay valid.
fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '\n' {
            in_comment = false;
        } else if c == '/' && chars.peek() == Some(&'/') {
            in_comment = true;
        }
        if in_comment {
            out.extend(std::iter::repeat_n(' ', c.len_utf8()));
        } else {
            out.push(c);
        }
    }
    out
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `kind NAME = rhs` into name and right-hand side.
fn binding<'a>(src: &Source, stmt: Span<'a>, kind: &str) -> Result<(Span<'a>, Span<'a>), SessionError> {
    let rest = stmt.slice(kind.len(), stmt.text.len()).trim();
    let eq = rest
        .text
        .find('=')
        .ok_or_else(|| src.error(rest.at, format!("expected `{kind} NAME = ...`")))?;
    let name = rest.slice(0, eq).trim();
    if !is_ident(name.text) {
        return Err(src.error(name.at, format!("invalid name `{}`", name.text)));
    }
    Ok((name, rest.slice(eq + 1, rest.text.len()).trim()))
}

fn parse_ring(src: &Source, rhs: Span) -> Result<(DomainSpec, Arc<PolyRing>), SessionError> {
    let parts = rhs.split_top(',');
    if parts.len() < 3 {
        return Err(src.error(rhs.at, "expected `ring R = char,(vars),ordering`"));
    }
    let ord_span = parts[parts.len() - 1];
    let vars_span = parts[parts.len() - 2];
    let mut head: Vec<Span> = match parts[0].unparen() {
        Some(inner) if parts.len() == 3 => inner.split_top(','),
        Some(_) => return Err(src.error(parts[0].at, "parameters belong inside the parentheses")),
        None => parts[..parts.len() - 2].to_vec(),
    };
    let ch_span = head.remove(0);
    let ch: u64 = ch_span
        .text
        .parse()
        .map_err(|_| src.error(ch_span.at, format!("invalid characteristic `{}`", ch_span.text)))?;
    let mut params = Vec::new();
    for p in head {
        if !is_ident(p.text) {
            return Err(src.error(p.at, format!("invalid parameter name `{}`", p.text)));
        }
        params.push(p.text.to_string());
    }
    let vars_inner = vars_span
        .unparen()
        .ok_or_else(|| src.error(vars_span.at, "variables must be listed in parentheses"))?;
    let mut vars = Vec::new();
    for v in vars_inner.split_top(',') {
        if !is_ident(v.text) {
            return Err(src.error(v.at, format!("invalid variable name `{}`", v.text)));
        }
        if params.contains(&v.text.to_string()) {
            return Err(src.error(v.at, format!("`{}` is both a parameter and a variable", v.text)));
        }
        vars.push(v.text.to_string());
    }
    let order = OrderSpec::parse(ord_span.text)
        .ok_or_else(|| src.error(ord_span.at, format!("unsupported ordering `{}`", ord_span.text)))?;
    let domain = DomainSpec::new(ch, params).map_err(|e| src.error(ch_span.at, e.to_string()))?;
    let ring = PolyRing::new(vars, order).map_err(|e| src.error(vars_span.at, e.to_string()))?;
    Ok((domain, ring))
}

fn parse_expr(src: &Source, span: Span, session: &Session) -> Result<Polynomial<Scalar>, SessionError> {
    if let Some(p) = session.poly(span.text) {
        return Ok(p.clone());
    }
    parse_polynomial(span.text, &session.ring, &session.domain).map_err(|e| src.error(span.at + e.pos, e.message))
}

fn parse_ideal_items(src: &Source, rhs: Span, session: &Session) -> Result<Vec<Polynomial<Scalar>>, SessionError> {
    let mut gens = Vec::new();
    for item in rhs.split_top(',') {
        if item.text.is_empty() {
            return Err(src.error(item.at, "empty ideal generator"));
        }
        if let Some(arg) = item.text.strip_prefix("jacob") {
            let arg = Span {
                text: arg,
                at: item.at + 5,
            }
            .trim();
            if let Some(inner) = arg.unparen() {
                let f = parse_expr(src, inner, session)?;
                if f.is_zero() {
                    return Err(src.error(inner.at, "jacob of the zero polynomial"));
                }
                gens.extend((0..session.ring.nvars()).map(|i| f.derivative(i)).filter(|d| !d.is_zero()));
                continue;
            }
        }
        let g = parse_expr(src, item, session)?;
        if !g.is_zero() {
            gens.push(g);
        }
    }
    Ok(gens)
}

/// Parses a whole session.
pub fn parse_session(text: &str) -> Result<Session, SessionError> {
    let clean = strip_comments(text);
    let src = Source { text };
    let whole = Span { text: &clean, at: 0 };
    let mut stmts = whole.split_top(';');
    let tail = stmts.pop().expect("split yields one piece");
    if !tail.text.is_empty() {
        return Err(src.error(tail.at, "missing `;`"));
    }
    let mut session: Option<Session> = None;
    for stmt in stmts {
        if stmt.text.is_empty() {
            continue;
        }
        let kind_len = stmt
            .text
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(stmt.text.len());
        let kind = &stmt.text[..kind_len];
        match kind {
            "ring" => {
                if session.is_some() {
                    return Err(src.error(stmt.at, "only one ring per session"));
                }
                let (_, rhs) = binding(&src, stmt, kind)?;
                let (domain, ring) = parse_ring(&src, rhs)?;
                session = Some(Session {
                    domain,
                    ring,
                    polys: Vec::new(),
                    ideals: Vec::new(),
                });
            }
            "poly" | "ideal" => {
                let s = session
                    .as_mut()
                    .ok_or_else(|| src.error(stmt.at, "declare a ring first"))?;
                let (name, rhs) = binding(&src, stmt, kind)?;
                let taken = s.poly(name.text).is_some()
                    || s.ideal(name.text).is_some()
                    || s.ring.var_index(name.text).is_some()
                    || s.domain.parameters().iter().any(|p| p == name.text);
                if taken {
                    return Err(src.error(name.at, format!("name `{}` is already in use", name.text)));
                }
                if kind == "poly" {
                    let p = parse_expr(&src, rhs, s)?;
                    s.polys.push((name.text.to_string(), p));
                } else {
                    let gens = parse_ideal_items(&src, rhs, s)?;
                    let ideal = IdealPresentation::new(s.domain.clone(), s.ring.clone(), gens);
                    s.ideals.push((name.text.to_string(), ideal));
                }
            }
            _ => {
                let word = if kind.is_empty() { stmt.text } else { kind };
                return Err(src.error(stmt.at, format!("unknown statement `{word}`")));
            }
        }
    }
    session.ok_or_else(|| src.error(text.len(), "the session declares no ring"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tjurina_session() {
        let s = parse_session("ring R = 0,(x,y,z),ds; poly F = x3y3+z9; ideal I = jacob(F),F;").unwrap();
        let gens: Vec<String> = s.ideal("I").unwrap().generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(gens, ["3*x^2*y^3", "3*x^3*y^2", "9*z^8", "x^3*y^3+z^9"]);
    }

    #[test]
    fn parameters_in_parentheses() {
        let s = parse_session("ring R = (0,t),(x,y,z),ds;").unwrap();
        assert_eq!(s.domain.characteristic(), 0);
        assert_eq!(s.domain.parameters(), ["t"]);
        let s = parse_session("ring R = 0,t,(x,y),ds;").unwrap();
        assert_eq!(s.domain.parameters(), ["t"]);
    }

    #[test]
    fn orderings() {
        let s = parse_session("ring R = 32003,(x,y),ws(2,3);").unwrap();
        assert_eq!(s.ring.order(), &OrderSpec::NegWeightedRevLex(vec![2, 3]));
        let e = parse_session("ring R = 0,(x),qq;").unwrap_err();
        assert_eq!((e.line, e.column), (1, 16));
        assert!(e.message.contains("unsupported ordering"));
    }

    #[test]
    fn positions_span_lines() {
        let text = "ring R = 0,(x,y),ds;\n// a comment; with a semicolon\npoly F = x + w;\n";
        let e = parse_session(text).unwrap_err();
        assert_eq!((e.line, e.column), (3, 14));
    }

    #[test]
    fn rejected_inputs() {
        assert!(parse_session("poly F = x;").is_err());
        assert!(parse_session("ring R = 4,(x),ds;").is_err());
        assert!(parse_session("ring R = 0,(x),ds; poly F = x; poly F = x2;").is_err());
        assert!(parse_session("ring R = 0,(x),ds; poly x = x;").is_err());
        assert!(parse_session("ring R = 0,(x),ds; ideal I = jacob(G);").is_err());
        assert!(parse_session("ring R = 0,(x),ds; option(redSB);").is_err());
        assert!(parse_session("ring R = 0,(x),ds").is_err());
        assert!(parse_session("").is_err());
    }

    #[test]
    fn display_reparses() {
        let text = "ring R = (0,t),(x,y),ds; poly F = t*x2+y3/2; ideal I = jacob(F),x*y;";
        let s = parse_session(text).unwrap();
        let again = parse_session(&s.to_string()).unwrap();
        assert_eq!(s.to_string(), again.to_string());
        assert_eq!(again.ideal("I").unwrap().generators(), s.ideal("I").unwrap().generators());
    }
}
