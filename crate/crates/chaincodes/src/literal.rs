//! Text forms of rings, elements and polynomials.
//!
//! Rings: `F<q>[u]/u^<s>`, `F<q>`, `GR(<p^s>,<m>)`, `Z<p^s>`.
//! Polynomials: sums of products of integers, `x`, `u`, `w`, `T<k>` (ζ^k),
//! parentheses and `^`; juxtaposition multiplies.

use crate::arith::prime_power;
use crate::chainring::{BaseRing, Family, RingElement, RingSpec};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyOps};
use crate::ring::CommRing;

fn perr<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { pos, msg: msg.into() })
}

fn parse_uint(s: &str, pos: usize) -> Result<u64> {
    s.trim().parse::<u64>().or_else(|_| perr(pos, format!("expected an integer, got {s:?}")))
}

fn split_prime_power(v: u64, pos: usize) -> Result<(u64, u32)> {
    match prime_power(v) {
        Some(pk) => Ok(pk),
        None => perr(pos, format!("{v} is not a prime power")),
    }
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(rest) = t.strip_prefix("GR(") {
        let Some(body) = rest.strip_suffix(')') else { return perr(t.len(), "missing ')'") };
        let Some((a, b)) = body.split_once(',') else { return perr(3, "expected GR(p^s,m)") };
        let (p, s) = split_prime_power(parse_uint(a, 3)?, 3)?;
        let m = parse_uint(b, 4 + a.len())? as u32;
        return Ok(RingSpec::galois(p, s, m));
    }
    if let Some(rest) = t.strip_prefix('Z') {
        let (p, s) = split_prime_power(parse_uint(rest, 1)?, 1)?;
        return Ok(RingSpec::galois(p, s, 1));
    }
    if let Some(rest) = t.strip_prefix('F') {
        let (qs, tail) = match rest.find('[') {
            Some(i) => (&rest[..i], &rest[i..]),
            None => (rest, ""),
        };
        let (p, m) = split_prime_power(parse_uint(qs, 1)?, 1)?;
        let s = if tail.is_empty() {
            1
        } else if let Some(e) = tail.strip_prefix("[u]/u^") {
            parse_uint(e, 1 + qs.len() + 6)? as u32
        } else if tail == "[u]/u" {
            1
        } else {
            return perr(1 + qs.len(), "expected [u]/u^s");
        };
        return Ok(RingSpec::eisenstein(p, m, s));
    }
    perr(0, "unknown ring; expected F<q>[u]/u^<s>, F<q> or GR(<p^s>,<m>)")
}

pub fn parse_ring(text: &str) -> Result<BaseRing> {
    BaseRing::new(parse_ring_spec(text)?)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Teich(u64),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(parse_uint(&s, start)?)));
        } else if c == 'T' {
            let start = i;
            i += 1;
            let ds = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if ds == i {
                return perr(start, "T must be followed by an exponent");
            }
            let s: String = chars[ds..i].iter().collect();
            out.push((start, Tok::Teich(parse_uint(&s, ds)?)));
        } else if c.is_ascii_alphabetic() {
            out.push((i, Tok::Ident(c.to_string())));
            i += 1;
        } else if "+-*^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return perr(i, format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a BaseRing,
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn expr(&mut self) -> Result<Poly<RingElement>> {
        let r = self.ring;
        let mut neg = false;
        if self.peek() == Some(&Tok::Op('-')) {
            self.at += 1;
            neg = true;
        } else if self.peek() == Some(&Tok::Op('+')) {
            self.at += 1;
        }
        let mut acc = self.term()?;
        if neg {
            acc = r.pneg(&acc);
        }
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.at += 1;
            let t = self.term()?;
            acc = if c == '+' { r.padd(&acc, &t) } else { r.psub(&acc, &t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<RingElement>> {
        let r = self.ring;
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.at += 1;
                    let f = self.power()?;
                    acc = r.pmul(&acc, &f);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Teich(_)) | Some(Tok::Op('(')) => {
                    let f = self.power()?;
                    acc = r.pmul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly<RingElement>> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Op('^')) {
            self.at += 1;
            let pos = self.pos();
            let Some(Tok::Num(e)) = self.peek().cloned() else { return perr(pos, "expected an exponent") };
            self.at += 1;
            let r = self.ring;
            let mut acc = r.pone();
            for _ in 0..e {
                acc = r.pmul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<RingElement>> {
        let r = self.ring;
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else { return perr(pos, "unexpected end of input") };
        self.at += 1;
        match tok {
            Tok::Num(k) => Ok(r.pconst(r.from_int((k % r.size()) as i64))),
            Tok::Teich(k) => Ok(r.pconst(r.pow(&r.zeta(), k as u128))),
            Tok::Ident(id) => match id.as_str() {
                "x" => Ok(r.px()),
                "u" if r.family() == Family::EisensteinU => Ok(r.pconst(crate::ring::ChainRing::gamma(r))),
                "w" => Ok(r.pconst(r.w())),
                _ => perr(pos, format!("unknown symbol {id:?} for {}", r.spec())),
            },
            Tok::Op('(') => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return perr(self.pos(), "expected ')'");
                }
                self.at += 1;
                Ok(e)
            }
            Tok::Op(c) => perr(pos, format!("unexpected {c:?}")),
        }
    }
}

pub fn parse_poly(ring: &BaseRing, text: &str) -> Result<Poly<RingElement>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return perr(0, "empty expression");
    }
    let mut p = Parser { ring, toks, at: 0, end: text.chars().count() };
    let out = p.expr()?;
    if p.at != p.toks.len() {
        return perr(p.pos(), "trailing input");
    }
    Ok(out)
}

pub fn parse_element(ring: &BaseRing, text: &str) -> Result<RingElement> {
    let p = parse_poly(ring, text)?;
    match p.degree() {
        None => Ok(ring.zero()),
        Some(0) => Ok(p.coeffs()[0]),
        Some(_) => perr(0, "element literal must not contain x"),
    }
}

/// Comma-separated polynomials, each optionally wrapped in a pair of parentheses.
pub fn parse_tuple(ring: &BaseRing, text: &str) -> Result<Vec<Poly<RingElement>>> {
    let t = text.trim();
    let inner = if t.starts_with('(') && t.ends_with(')') && balanced(&t[1..t.len() - 1]) { &t[1..t.len() - 1] } else { t };
    split_top(inner, ',').into_iter().map(|part| parse_poly(ring, part)).collect()
}

/// Semicolon-separated polynomial list.
pub fn parse_list(ring: &BaseRing, text: &str) -> Result<Vec<Poly<RingElement>>> {
    split_top(text, ';').into_iter().map(|part| parse_poly(ring, part)).collect()
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

pub fn format_poly(ring: &BaseRing, f: &Poly<RingElement>) -> String {
    ring.pformat(f, "x")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_literals() {
        for lit in ["F2[u]/u^2", "F4", "GR(4,1)", "GR(8,3)", "F5[u]/u^2", "F4[u]/u^3"] {
            assert_eq!(parse_ring_spec(lit).unwrap().to_string(), lit);
        }
        assert_eq!(parse_ring_spec("Z4").unwrap().to_string(), "GR(4,1)");
        assert!(matches!(parse_ring_spec("F6"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ring_spec("Q(2)"), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn polynomial_roundtrip() {
        let r = parse_ring("F2[u]/u^3").unwrap();
        let f = parse_poly(&r, "x^4+x^3+(1+u+u^2)x^2+u^2*x+(1+u^2)").unwrap();
        let shown = format_poly(&r, &f);
        assert_eq!(parse_poly(&r, &shown).unwrap(), f);
        let v = parse_poly(&r, "(1+u)^2").unwrap();
        assert_eq!(v, parse_poly(&r, "1+u^2").unwrap());
        assert!(matches!(parse_poly(&r, "x+?"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly(&r, "x+"), Err(Error::Parse { .. })));
    }

    #[test]
    fn galois_symbols() {
        let r = parse_ring("GR(4,2)").unwrap();
        let z = parse_element(&r, "T1").unwrap();
        assert_eq!(z, r.zeta());
        assert_eq!(parse_element(&r, "T3").unwrap(), r.one());
        assert!(parse_poly(&r, "u").is_err());
        let t = parse_tuple(&r, "(x+1, 3*w)").unwrap();
        assert_eq!(t.len(), 2);
    }
}
