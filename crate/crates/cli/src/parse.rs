//! Recursive-descent parsers for the expression languages accepted on the
//! command line.
//!
//! ```text
//! liepoly  := term (("+"|"-") term)*
//! term     := ["-"] [rational "*"] factor
//! factor   := "g" int | "st" int | "[" liepoly "," liepoly "]" | "(" liepoly ")"
//!
//! diffpoly := dterm (("+"|"-") dterm)*
//! dterm    := ["-"] dfactor ("*" dfactor)*
//! dfactor  := rational | dvar ["^" int] | "(" diffpoly ")" ["^" int]
//! dvar     := "y" int "'"* | "y" int "^(" int ")"
//! ```
//!
//! The printers in the core crate produce text in these grammars, so
//! printing and parsing again is the identity.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use wronski::algebra::{DerivVar, DiffPoly, UniPoly};
use wronski::freelie::{standard_identity, LiePoly, LieTerm};
use wronski::structconst::{StructConstAlgebra, Vector};
use wronski::taylor::PointEvaluation;
use wronski::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

/// Largest generator index or standard identity degree accepted.
const MAX_INDEX: u64 = 1 << 16;

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    #[allow(dead_code)]
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            text,
        }
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Next character without skipping whitespace.
    fn peek_raw(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_raw_at(&self, offset: usize) -> Option<char> {
        self.chars.get(self.pos + offset).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(c) => self.error(format!("expected {wanted}, found '{c}'")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn finish(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> PResult<u64> {
        self.skip_ws();
        let start = self.pos;
        let s = self.digits().ok_or_else(|| self.unexpected("an integer"))?;
        s.parse()
            .map_err(|_| self.error_at(start, format!("integer {s} is too large")))
    }

    fn small_integer(&mut self, what: &str) -> PResult<u64> {
        let start = self.pos;
        let k = self.integer()?;
        if k > MAX_INDEX {
            return Err(self.error_at(start, format!("{what} {k} is too large")));
        }
        Ok(k)
    }

    /// p or p/q with p, q unsigned.
    fn rational(&mut self) -> PResult<Rational> {
        self.skip_ws();
        let start = self.pos;
        let num = self.digits().ok_or_else(|| self.unexpected("a number"))?;
        let numer: BigInt = num.parse().expect("digits");
        if self.peek_raw() == Some('/') && self.peek_raw_at(1).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
            let den = self.digits().expect("digit follows");
            let denom: BigInt = den.parse().expect("digits");
            if denom.is_zero() {
                return Err(self.error_at(start, "zero denominator"));
            }
            return Ok(Rational::new(numer, denom));
        }
        Ok(Rational::from_integer(numer))
    }

    fn starts_number(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_digit())
    }

    fn identifier(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek_raw().is_some_and(|c| c.is_alphabetic() || c == '_') {
            return None;
        }
        while self
            .peek_raw()
            .is_some_and(|c| c.is_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        Some(self.chars[start..self.pos].iter().collect())
    }

    /// "+" or "-" between terms, as a sign.
    fn additive(&mut self) -> Option<Rational> {
        if self.eat('+') {
            Some(Rational::one())
        } else if self.eat('-') {
            Some(-Rational::one())
        } else {
            None
        }
    }

    fn leading_sign(&mut self) -> Rational {
        if self.eat('-') {
            -Rational::one()
        } else {
            self.eat('+');
            Rational::one()
        }
    }
}

fn index_from_name(cur: &Cursor, start: usize, name: &str, prefix: &str) -> PResult<Option<usize>> {
    let Some(rest) = name.strip_prefix(prefix) else {
        return Ok(None);
    };
    if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit()) {
        return Ok(None);
    }
    let k: u64 = rest
        .parse()
        .map_err(|_| cur.error_at(start, format!("index in {name} is too large")))?;
    if k == 0 {
        return Err(cur.error_at(start, format!("{name}: indices start at 1")));
    }
    if k > MAX_INDEX {
        return Err(cur.error_at(start, format!("index in {name} is too large")));
    }
    Ok(Some(k as usize - 1))
}

pub fn parse_lie_expr(text: &str) -> PResult<LiePoly> {
    let mut cur = Cursor::new(text);
    let f = lie_poly(&mut cur)?;
    cur.finish()?;
    Ok(f)
}

fn lie_poly(cur: &mut Cursor) -> PResult<LiePoly> {
    let mut f = lie_term(cur)?;
    while let Some(sign) = cur.additive() {
        f = f.add(&lie_term(cur)?.scale(&sign));
    }
    Ok(f)
}

fn lie_term(cur: &mut Cursor) -> PResult<LiePoly> {
    let sign = cur.leading_sign();
    let mut coeff = sign;
    if cur.starts_number() {
        coeff *= cur.rational()?;
        if !cur.eat('*') {
            // a bare number is not a Lie element
            return Err(cur.unexpected("'*'"));
        }
    }
    Ok(lie_factor(cur)?.scale(&coeff))
}

fn lie_factor(cur: &mut Cursor) -> PResult<LiePoly> {
    if cur.eat('[') {
        let a = lie_poly(cur)?;
        cur.expect(',')?;
        let b = lie_poly(cur)?;
        cur.expect(']')?;
        return Ok(a.bracket(&b));
    }
    if cur.eat('(') {
        let a = lie_poly(cur)?;
        cur.expect(')')?;
        return Ok(a);
    }
    cur.skip_ws();
    let start = cur.pos;
    let Some(name) = cur.identifier() else {
        return Err(cur.unexpected("a generator, 'st<n>' or '['"));
    };
    if let Some(i) = index_from_name(cur, start, &name, "g")? {
        return Ok(LiePoly::term(Rational::one(), LieTerm::generator(i)));
    }
    if let Some(rest) = name.strip_prefix("st") {
        if let Ok(n) = rest.parse::<usize>() {
            if n < 2 || n as u64 > MAX_INDEX {
                return Err(cur.error_at(start, format!("{name}: the degree must be at least 2")));
            }
            return standard_identity(n).map_err(|e| cur.error_at(start, e.to_string()));
        }
    }
    Err(cur.error_at(start, format!("unknown token '{name}'")))
}

pub fn parse_diffpoly_expr(text: &str, max_order: u32) -> PResult<DiffPoly> {
    let mut cur = Cursor::new(text);
    let p = diff_poly(&mut cur, max_order)?;
    cur.finish()?;
    Ok(p)
}

fn diff_poly(cur: &mut Cursor, max_order: u32) -> PResult<DiffPoly> {
    let mut p = diff_term(cur, max_order)?;
    while let Some(sign) = cur.additive() {
        p = &p + &diff_term(cur, max_order)?.scale(&sign);
    }
    Ok(p)
}

fn diff_term(cur: &mut Cursor, max_order: u32) -> PResult<DiffPoly> {
    let sign = cur.leading_sign();
    let mut p = diff_factor(cur, max_order)?;
    while cur.eat('*') {
        p = &p * &diff_factor(cur, max_order)?;
    }
    Ok(p.scale(&sign))
}

fn power_suffix(cur: &mut Cursor) -> PResult<u32> {
    if cur.peek() == Some('^') && cur.peek_raw_at(1) != Some('(') {
        cur.pos += 1;
        let start = cur.pos;
        let e = cur.small_integer("exponent")?;
        return u32::try_from(e).map_err(|_| cur.error_at(start, "exponent is too large"));
    }
    Ok(1)
}

fn diff_factor(cur: &mut Cursor, max_order: u32) -> PResult<DiffPoly> {
    if cur.starts_number() {
        return Ok(DiffPoly::constant(cur.rational()?));
    }
    if cur.eat('(') {
        let p = diff_poly(cur, max_order)?;
        cur.expect(')')?;
        let e = power_suffix(cur)?;
        return Ok(p.pow(e));
    }
    cur.skip_ws();
    let start = cur.pos;
    let Some(name) = cur.identifier() else {
        return Err(cur.unexpected("a variable y<k>, a number or '('"));
    };
    let Some(var) = index_from_name(cur, start, &name, "y")? else {
        return Err(cur.error_at(start, format!("unknown token '{name}'")));
    };
    let mut order: u64 = 0;
    while cur.peek_raw() == Some('\'') {
        cur.pos += 1;
        order += 1;
    }
    if order == 0 && cur.peek_raw() == Some('^') && cur.peek_raw_at(1) == Some('(') {
        cur.pos += 2;
        order = cur.small_integer("derivative order")?;
        cur.expect(')')?;
    }
    if order > max_order as u64 {
        return Err(cur.error_at(
            start,
            format!("derivative order {order} exceeds the cap {max_order}"),
        ));
    }
    let e = power_suffix(cur)?;
    Ok(DiffPoly::deriv_var(var, order as u32).pow(e))
}

/// A polynomial in one variable; every name in `names` denotes it.
pub fn parse_unipoly(text: &str, names: &[&str]) -> PResult<UniPoly> {
    let mut cur = Cursor::new(text);
    let p = uni_poly(&mut cur, names)?;
    cur.finish()?;
    Ok(p)
}

fn uni_poly(cur: &mut Cursor, names: &[&str]) -> PResult<UniPoly> {
    let mut p = uni_term(cur, names)?;
    while let Some(sign) = cur.additive() {
        p = p.add(&uni_term(cur, names)?.scale(&sign));
    }
    Ok(p)
}

fn uni_term(cur: &mut Cursor, names: &[&str]) -> PResult<UniPoly> {
    let sign = cur.leading_sign();
    let mut p = uni_factor(cur, names)?;
    while cur.eat('*') {
        p = p.mul(&uni_factor(cur, names)?);
    }
    Ok(p.scale(&sign))
}

fn uni_factor(cur: &mut Cursor, names: &[&str]) -> PResult<UniPoly> {
    if cur.starts_number() {
        return Ok(UniPoly::constant(cur.rational()?));
    }
    if cur.eat('(') {
        let p = uni_poly(cur, names)?;
        cur.expect(')')?;
        let e = power_suffix(cur)?;
        return Ok(p.pow(e));
    }
    cur.skip_ws();
    let start = cur.pos;
    match cur.identifier() {
        Some(name) if names.contains(&name.as_str()) => {
            let e = power_suffix(cur)?;
            Ok(UniPoly::monomial(Rational::one(), e as usize))
        }
        Some(name) => Err(cur.error_at(start, format!("unknown token '{name}'"))),
        None => Err(cur.unexpected("a variable, a number or '('")),
    }
}

/// A tuple "(p1, p2, ...)" of polynomials, or a single polynomial.
/// Component k uses the variable names in `names[k]`.
pub fn parse_tuple(text: &str, names: &[&[&str]]) -> PResult<Vec<UniPoly>> {
    let mut cur = Cursor::new(text);
    let mut parts = Vec::new();
    if names.len() == 1 {
        parts.push(uni_poly(&mut cur, names[0])?);
    } else {
        cur.expect('(')?;
        for (k, component) in names.iter().enumerate() {
            if k > 0 {
                cur.expect(',')?;
            }
            parts.push(uni_poly(&mut cur, component)?);
        }
        cur.expect(')')?;
    }
    cur.finish()?;
    Ok(parts)
}

/// A rational combination of basis names, such as "2*e - 1/2*h".
pub fn parse_vector(text: &str, algebra: &StructConstAlgebra) -> PResult<Vector> {
    let mut cur = Cursor::new(text);
    let mut v = Vector::zero(algebra.dim());
    let mut sign = Rational::one();
    loop {
        let mut coeff = sign * cur.leading_sign();
        if cur.starts_number() {
            coeff *= cur.rational()?;
            cur.expect('*')?;
        }
        cur.skip_ws();
        let start = cur.pos;
        let Some(name) = cur.identifier() else {
            return Err(cur.unexpected("a basis name"));
        };
        let i = algebra
            .basis_index(&name)
            .ok_or_else(|| cur.error_at(start, format!("unknown basis vector '{name}'")))?;
        v.0[i] += coeff;
        match cur.additive() {
            Some(s) => sign = s,
            None => break,
        }
    }
    cur.finish()?;
    Ok(v)
}

/// Assignments "y1=1, y1'=2, y2^(4)=-1/2"; unlisted variables are 0.
pub fn parse_point(text: &str) -> PResult<PointEvaluation> {
    let mut cur = Cursor::new(text);
    let mut values = BTreeMap::new();
    if cur.peek().is_none() {
        return Ok(PointEvaluation::default());
    }
    loop {
        cur.skip_ws();
        let start = cur.pos;
        let p = diff_factor(&mut cur, u32::MAX)?;
        let mut terms = p.terms();
        let v = match (terms.next(), terms.next()) {
            (Some((m, c)), None) if c.is_one() && m.degree() == 1 => m.factors()[0].0,
            _ => return Err(cur.error_at(start, "expected a single variable such as y1'")),
        };
        cur.expect('=')?;
        let sign = cur.leading_sign();
        let value = cur.rational()? * sign;
        if values.insert(v, value).is_some() {
            return Err(cur.error_at(start, format!("{v} assigned twice")));
        }
        if !cur.eat(',') {
            break;
        }
    }
    cur.finish()?;
    Ok(PointEvaluation::new(values))
}

/// The derivative variable printed as `text`, e.g. "y2''".
pub fn parse_deriv_var(text: &str) -> PResult<DerivVar> {
    let point = parse_point(&format!("{text}=1"))?;
    Ok(*point.values.keys().next().expect("one assignment"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use wronski::rational::{rat, ratio};

    fn g(i: usize) -> LieTerm {
        LieTerm::generator(i)
    }

    #[test]
    fn lie_examples() {
        let f = parse_lie_expr("[g1,[g2,g3]]").unwrap();
        let t = LieTerm::bracket(g(0), LieTerm::bracket(g(1), g(2)));
        assert_eq!(f, LiePoly::term(rat(1), t));

        let f = parse_lie_expr("2*[g1,g2] - [g2,g1]").unwrap();
        assert_eq!(f.len(), 2);
        let coeffs: Vec<_> = f.terms().map(|(_, c)| c.clone()).collect();
        assert!(coeffs.contains(&rat(2)) && coeffs.contains(&rat(-1)));

        assert_eq!(parse_lie_expr("st5").unwrap(), standard_identity(5).unwrap());
        assert_eq!(
            parse_lie_expr(" -1/2 * g2 ").unwrap(),
            LiePoly::term(ratio(-1, 2), g(1))
        );
    }

    #[test]
    fn lie_errors() {
        let e = parse_lie_expr("[g1,g2").unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        let e = parse_lie_expr("[g1,\n  x2]").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert!(e.message.contains("unknown token 'x2'"));
        assert!(parse_lie_expr("g0").is_err());
        assert!(parse_lie_expr("st1").is_err());
        assert!(parse_lie_expr("3").is_err());
        assert!(parse_lie_expr("g1 g2").is_err());
    }

    #[test]
    fn diffpoly_examples() {
        let w = parse_diffpoly_expr("y1*y2' - y1'*y2", 64).unwrap();
        let expected = &(&DiffPoly::var(0) * &DiffPoly::deriv_var(1, 1))
            - &(&DiffPoly::deriv_var(0, 1) * &DiffPoly::var(1));
        assert_eq!(w, expected);
        assert_eq!(
            parse_diffpoly_expr("y1^(3)", 64).unwrap(),
            parse_diffpoly_expr("y1'''", 64).unwrap()
        );
        assert_eq!(
            parse_diffpoly_expr("3/2*y1^2", 64).unwrap(),
            DiffPoly::var(0).pow(2).scale(&ratio(3, 2))
        );
        assert_eq!(
            parse_diffpoly_expr("(y1 + 1)^2", 64).unwrap(),
            parse_diffpoly_expr("y1^2 + 2*y1 + 1", 64).unwrap()
        );
        assert_eq!(parse_diffpoly_expr("0", 64).unwrap(), DiffPoly::zero());
        assert_eq!(
            parse_diffpoly_expr("y1^(4)^2", 64).unwrap(),
            DiffPoly::deriv_var(0, 4).pow(2)
        );
    }

    #[test]
    fn diffpoly_errors() {
        let e = parse_diffpoly_expr("y1^(5)", 4).unwrap_err();
        assert!(e.message.contains("exceeds the cap 4"));
        assert!(parse_diffpoly_expr("y1 +", 64).is_err());
        assert!(parse_diffpoly_expr("z1", 64).is_err());
        assert!(parse_diffpoly_expr("1/0*y1", 64).is_err());
    }

    #[test]
    fn vectors_points_and_tuples() {
        let l = wronski::structconst::sl2();
        let v = parse_vector("2*e - 1/2*h + f", &l).unwrap();
        assert_eq!(v, Vector(vec![rat(2), ratio(-1, 2), rat(1)]));
        assert_eq!(parse_vector(&l.format_vector(&v), &l).unwrap(), v);
        assert!(parse_vector("x", &l).is_err());

        let phi = parse_point("y1=1, y2'=-3/2").unwrap();
        assert_eq!(phi.value(DerivVar::new(1, 1)), ratio(-3, 2));
        assert!(parse_point("y1=1, y1=2").is_err());
        assert_eq!(parse_deriv_var("y2''").unwrap(), DerivVar::new(1, 2));

        let parts = parse_tuple("(a^2 - 1, 3*b)", &[&["a"], &["b"]]).unwrap();
        assert_eq!(parts[0], UniPoly::new(vec![rat(-1), rat(0), rat(1)]));
        assert_eq!(parts[1], UniPoly::monomial(rat(3), 1));
        assert_eq!(parse_unipoly("t^2 - 3*t + 2", &["t"]).unwrap().to_string(), "t^2 - 3*t + 2");
    }
}
