//! Text forms of ring elements, polynomials, canonical codes and decomposed
//! codes.
//!
//! ```text
//! element   2*x^1+3        T(4)    T(-)
//! code      full(2,2,1;1,1;[T(1)])    tors(2,1,2;1)
//! composite 6;[0:tors(2,1,1;0),1:full(2,2,1;1,1;[T(1)])]
//! ```

use std::fmt::Write as _;

use crate::cyclic::{CanonicalCode, CodeParams, CyclicRing};
use crate::dft::{DecomposedCode, Dft};
use crate::galois_ring::{GaloisRing, GrElem};
use crate::{Error, Result};

/// Element as a polynomial in `x = ξ`, highest power first.
pub fn format_elem(ring: &GaloisRing, a: &GrElem) -> String {
    let mut out = String::new();
    for (i, &c) in a.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (i, c) {
            (0, _) => write!(out, "{c}").unwrap(),
            (_, 1) => write!(out, "x^{i}").unwrap(),
            _ => write!(out, "{c}*x^{i}").unwrap(),
        }
    }
    let _ = ring;
    if out.is_empty() { "0".into() } else { out }
}

/// `T(e)` for `ξ^e`, `T(-)` for zero, otherwise the polynomial form.
pub fn format_teichmuller(ring: &GaloisRing, t: &GrElem) -> String {
    match ring.teichmuller_index(t) {
        Ok(Some(e)) => format!("T({e})"),
        Ok(None) => "T(-)".into(),
        Err(_) => format_elem(ring, t),
    }
}

pub fn format_code(params: &CodeParams, ring: &GaloisRing, code: &CanonicalCode) -> String {
    let CodeParams { p, s, a } = *params;
    match code {
        CanonicalCode::TorsionOnly { i1 } => format!("tors({p},{s},{a};{i1})"),
        CanonicalCode::Full { i0, i1, h } => {
            let hs: Vec<String> = h.iter().map(|t| format_teichmuller(ring, t)).collect();
            format!("full({p},{s},{a};{i0},{i1};[{}])", hs.join(","))
        }
    }
}

pub fn format_decomposed(dft: &Dft, code: &DecomposedCode) -> Result<String> {
    let mut parts = Vec::with_capacity(code.components.len());
    for (rep, c) in &code.components {
        let cr = dft.component_ring(*rep)?;
        parts.push(format!("{rep}:{}", format_code(&cr.params(), cr.ring(), c)));
    }
    Ok(format!("{};[{}]", code.n, parts.join(",")))
}

fn perr(offset: usize, message: impl Into<String>) -> Error {
    Error::parse(offset, message)
}

/// Values an expression can evaluate to.
trait Algebra {
    type V: Clone;
    fn int(&self, c: i64) -> Self::V;
    fn atom(&self, name: &str) -> Option<Self::V>;
    fn teich(&self, e: Option<u64>) -> Result<Self::V>;
    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V;
    fn neg(&self, a: &Self::V) -> Self::V;
    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V;
}

// Cyclic polynomials of length `len` over a Galois ring in one variable.
struct CyclicAlg<'a> {
    ring: &'a GaloisRing,
    len: usize,
    vars: &'a [&'a str],
}

impl Algebra for CyclicAlg<'_> {
    type V = Vec<GrElem>;

    fn int(&self, c: i64) -> Self::V {
        let mut v = vec![self.ring.zero(); self.len];
        v[0] = self.ring.from_int(c);
        v
    }

    fn atom(&self, name: &str) -> Option<Self::V> {
        let mut v = vec![self.ring.zero(); self.len];
        if name == "x" {
            v[0] = self.ring.xi();
        } else if self.vars.contains(&name) {
            v[1 % self.len] = self.ring.add(&v[1 % self.len], &self.ring.one());
        } else {
            return None;
        }
        Some(v)
    }

    fn teich(&self, e: Option<u64>) -> Result<Self::V> {
        let mut v = vec![self.ring.zero(); self.len];
        if let Some(e) = e {
            v[0] = self.ring.teichmuller_power(e);
        }
        Ok(v)
    }

    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V {
        a.iter().zip(b).map(|(x, y)| self.ring.add(x, y)).collect()
    }

    fn neg(&self, a: &Self::V) -> Self::V {
        a.iter().map(|x| self.ring.neg(x)).collect()
    }

    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V {
        let mut out = vec![self.ring.zero(); self.len];
        for (i, x) in a.iter().enumerate() {
            if self.ring.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                let k = (i + j) % self.len;
                out[k] = self.ring.add(&out[k], &self.ring.mul(x, y));
            }
        }
        out
    }
}

// Integer polynomials in `x`.
struct IntPoly;

impl Algebra for IntPoly {
    type V = Vec<i64>;

    fn int(&self, c: i64) -> Self::V {
        vec![c]
    }

    fn atom(&self, name: &str) -> Option<Self::V> {
        (name == "x").then(|| vec![0, 1])
    }

    fn teich(&self, _: Option<u64>) -> Result<Self::V> {
        Err(Error::InvalidModulus("T(..) is not allowed in a modulus".into()))
    }

    fn add(&self, a: &Self::V, b: &Self::V) -> Self::V {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, x) in b.iter().enumerate() {
            out[i] += x;
        }
        out
    }

    fn neg(&self, a: &Self::V) -> Self::V {
        a.iter().map(|x| -x).collect()
    }

    fn mul(&self, a: &Self::V, b: &Self::V) -> Self::V {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].wrapping_add(x.wrapping_mul(*y));
            }
        }
        out
    }
}

struct Parser<'s, A: Algebra> {
    src: &'s str,
    pos: usize,
    alg: A,
}

impl<'s, A: Algebra> Parser<'s, A> {
    fn new(src: &'s str, alg: A) -> Self {
        Self { src, pos: 0, alg }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(perr(self.pos, format!("expected '{c}'")))
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if digits == 0 {
            return Err(perr(start, "expected a number"));
        }
        self.pos += digits;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| perr(start, "number too large"))
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return Err(perr(self.pos, "unexpected trailing input"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<A::V> {
        let mut acc = if self.eat('-') {
            let t = self.term()?;
            self.alg.neg(&t)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.alg.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.alg.add(&acc, &self.alg.neg(&t));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<A::V> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let f = self.factor()?;
            acc = self.alg.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<A::V> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let mut e = self.uint()?;
        let mut acc = self.alg.int(1);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.alg.mul(&acc, &b);
            }
            b = self.alg.mul(&b, &b);
            e >>= 1;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<A::V> {
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                let n = i64::try_from(n).map_err(|_| perr(start, "number too large"))?;
                Ok(self.alg.int(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                let len = self.src[at..]
                    .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
                    .unwrap_or(self.src.len() - at);
                let name = &self.src[at..at + len];
                self.pos += len;
                if name == "T" {
                    self.expect('(')?;
                    let e = if self.eat('-') { None } else { Some(self.uint()?) };
                    self.expect(')')?;
                    return self.alg.teich(e);
                }
                self.alg
                    .atom(name)
                    .ok_or_else(|| perr(at, format!("unknown symbol '{name}'")))
            }
            _ => Err(perr(start, "expected a term")),
        }
    }
}

/// Parse an element of `ring` from `2*x^1+3` / `T(e)` notation.
pub fn parse_elem(ring: &GaloisRing, text: &str) -> Result<GrElem> {
    let mut p = Parser::new(text, CyclicAlg { ring, len: 1, vars: &[] });
    let v = p.expr()?;
    p.finish()?;
    Ok(v.into_iter().next().expect("length one"))
}

/// Parse a polynomial in one of `vars`, reduced modulo `var^len - 1`.
pub fn parse_cyclic_poly(ring: &GaloisRing, text: &str, len: usize, vars: &[&str]) -> Result<Vec<GrElem>> {
    let mut p = Parser::new(text, CyclicAlg { ring, len, vars });
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// Parse a `;`-separated list of polynomials. Offsets in errors refer to `text`.
pub fn parse_poly_list(ring: &GaloisRing, text: &str, len: usize, vars: &[&str]) -> Result<Vec<Vec<GrElem>>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(';') {
        if !piece.trim().is_empty() {
            out.push(parse_cyclic_poly(ring, piece, len, vars).map_err(|e| shift(e, offset))?);
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + by,
            message,
        },
        other => other,
    }
}

/// Integer coefficients (constant term first) of a polynomial in `x`.
pub fn parse_int_poly(text: &str) -> Result<Vec<i64>> {
    let mut p = Parser::new(text, IntPoly);
    let mut v = p.expr()?;
    p.finish()?;
    while v.len() > 1 && v.last() == Some(&0) {
        v.pop();
    }
    Ok(v)
}

/// `(p, s, a)` and the component codes of a code literal, before the ring exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeLiteral {
    pub params: CodeParams,
    pub form: LiteralForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiteralForm {
    Full { i0: usize, i1: usize, h: Vec<String> },
    TorsionOnly { i1: usize },
}

struct Raw;

impl Algebra for Raw {
    type V = ();
    fn int(&self, _: i64) {}
    fn atom(&self, _: &str) -> Option<()> {
        Some(())
    }
    fn teich(&self, _: Option<u64>) -> Result<()> {
        Ok(())
    }
    fn add(&self, _: &(), _: &()) {}
    fn neg(&self, _: &()) {}
    fn mul(&self, _: &(), _: &()) {}
}

impl<'s> Parser<'s, Raw> {
    fn usize(&mut self) -> Result<usize> {
        let at = self.pos;
        usize::try_from(self.uint()?).map_err(|_| perr(at, "number too large"))
    }

    fn code(&mut self) -> Result<CodeLiteral> {
        self.skip_ws();
        let at = self.pos;
        let full = if self.src[at..].starts_with("full") {
            true
        } else if self.src[at..].starts_with("tors") {
            false
        } else {
            return Err(perr(at, "expected 'full(' or 'tors('"));
        };
        self.pos += 4;
        self.expect('(')?;
        let p = self.uint()?;
        self.expect(',')?;
        let s = self.usize()?;
        self.expect(',')?;
        let a_at = self.pos;
        let a = u32::try_from(self.uint()?).map_err(|_| perr(a_at, "number too large"))?;
        self.expect(';')?;
        let params = CodeParams::new(p, s, a)?;
        let form = if full {
            let i0 = self.usize()?;
            self.expect(',')?;
            let i1 = self.usize()?;
            self.expect(';')?;
            self.expect('[')?;
            let mut h = Vec::new();
            if !self.eat(']') {
                loop {
                    self.skip_ws();
                    let start = self.pos;
                    self.expr()?;
                    h.push(self.src[start..self.pos].trim().to_string());
                    if self.eat(']') {
                        break;
                    }
                    self.expect(',')?;
                }
            }
            LiteralForm::Full { i0, i1, h }
        } else {
            LiteralForm::TorsionOnly { i1: self.usize()? }
        };
        self.expect(')')?;
        Ok(CodeLiteral { params, form })
    }
}

/// Parse a code literal without building any ring.
pub fn parse_code_literal(text: &str) -> Result<CodeLiteral> {
    let mut p = Parser::new(text, Raw);
    let c = p.code()?;
    p.finish()?;
    Ok(c)
}

impl CodeLiteral {
    /// Materialize over `cr`, which must have matching parameters.
    pub fn resolve(&self, cr: &CyclicRing) -> Result<CanonicalCode> {
        if cr.params() != self.params {
            return Err(Error::Incompatible(format!(
                "literal over ({}) used with ring ({})",
                self.params,
                cr.params()
            )));
        }
        let code = match &self.form {
            LiteralForm::TorsionOnly { i1 } => CanonicalCode::TorsionOnly { i1: *i1 },
            LiteralForm::Full { i0, i1, h } => CanonicalCode::Full {
                i0: *i0,
                i1: *i1,
                h: h
                    .iter()
                    .map(|t| parse_elem(cr.ring(), t))
                    .collect::<Result<_>>()?,
            },
        };
        cr.make_canonical(code)
    }
}

/// Parse `n;[h:code,...]` into raw component literals.
pub fn parse_decomposed_literal(text: &str) -> Result<(u64, Vec<(usize, CodeLiteral)>)> {
    let mut p = Parser::new(text, Raw);
    let n = p.uint()?;
    p.expect(';')?;
    p.expect('[')?;
    let mut comps = Vec::new();
    if !p.eat(']') {
        loop {
            let h = p.usize()?;
            p.expect(':')?;
            comps.push((h, p.code()?));
            if p.eat(']') {
                break;
            }
            p.expect(',')?;
        }
    }
    p.finish()?;
    Ok((n, comps))
}

/// Parse a decomposed literal against a transform context.
pub fn parse_decomposed(dft: &Dft, text: &str) -> Result<DecomposedCode> {
    let (n, comps) = parse_decomposed_literal(text)?;
    if n != dft.params().n {
        return Err(Error::Incompatible(format!(
            "literal has length {n}, expected {}",
            dft.params().n
        )));
    }
    let components = comps
        .into_iter()
        .map(|(h, lit)| Ok((h, lit.resolve(dft.component_ring(h)?)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DecomposedCode { n, components })
}
