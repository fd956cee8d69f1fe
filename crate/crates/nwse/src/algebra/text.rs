//! Canonical text form for the coefficient tower, plus the matching parser.
//!
//! The grammar is deliberately flat so dumps stay diff-friendly:
//!
//! * rationals: `p/q`, or `p` when the denominator is 1;
//! * scalars: `p/q`, `r/s*sqrt(d)`, or `p/q + r/s*sqrt(d)`, omitting zero
//!   parts; the sign rides on the numerator (`2 + -1/3*sqrt(6)`);
//! * polynomials: terms by ascending power joined with ` + `, e.g.
//!   `2*v + v^2`; coefficients 1 and -1 elide the `1*`; a two-part scalar
//!   coefficient on a `v` power is parenthesized: `(1 + 2*sqrt(6))*v`;
//! * ring elements: `(num)/(den)`, with `/(1)` omitted;
//! * series: one line per nonzero power, `t^j: (num)/(den)`; the zero
//!   series prints `t^0: (0)`.
//!
//! Printing canonical values and re-parsing is the identity.

use std::fmt;

use num::rational::BigRational;
use num::{One, Zero};

use super::{DerivationMode, ExactScalar, RingElement, SymbolPoly, TimeSeries};
use crate::{Error, Result};

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", scalar_string(self))
    }
}

impl fmt::Display for SymbolPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", poly_string(self))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", ring_string(self))
    }
}

impl fmt::Display for TimeSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", series_string(self))
    }
}

pub(crate) fn scalar_string(c: &ExactScalar) -> String {
    let rat = c.rational_part();
    let surd = c.surd_part();
    if surd.is_zero() {
        return format!("{rat}");
    }
    let surd_str = format!("{}*sqrt({})", surd, c.disc());
    if rat.is_zero() {
        surd_str
    } else {
        format!("{rat} + {surd_str}")
    }
}

fn vpow_string(j: usize) -> String {
    if j == 1 {
        "v".to_string()
    } else {
        format!("v^{j}")
    }
}

fn term_string(c: &ExactScalar, j: usize) -> String {
    if j == 0 {
        return scalar_string(c);
    }
    let two_part = !c.rational_part().is_zero() && !c.surd_part().is_zero();
    if two_part {
        format!("({})*{}", scalar_string(c), vpow_string(j))
    } else if c.is_one() {
        vpow_string(j)
    } else if c.surd_part().is_zero() && (-c.rational_part()).is_one() {
        format!("-{}", vpow_string(j))
    } else {
        format!("{}*{}", scalar_string(c), vpow_string(j))
    }
}

pub(crate) fn poly_string(p: &SymbolPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| term_string(c, j))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub(crate) fn ring_string(e: &RingElement) -> String {
    if e.den().is_one() {
        format!("({})", poly_string(e.num()))
    } else {
        format!("({})/({})", poly_string(e.num()), poly_string(e.den()))
    }
}

pub(crate) fn series_string(u: &TimeSeries) -> String {
    if u.is_zero() {
        return "t^0: (0)".to_string();
    }
    u.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| format!("t^{j}: {}", ring_string(c)))
        .collect::<Vec<_>>()
        .join("\n")
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { s: s.as_bytes(), pos: 0 }
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at byte {}", self.pos)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] == b' ' || self.s[self.pos] == b'\t')
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn peek_at(&self, offset: usize) -> Option<u8> {
        self.s.get(self.pos + offset).copied()
    }

    fn starts_with(&self, lit: &str) -> bool {
        self.s[self.pos..].starts_with(lit.as_bytes())
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            self.fail(&format!("expected '{lit}'"))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.s.len()
    }

    fn parse_uint(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().map_or(false, |b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.fail("expected digits");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|e| Error::Parse(format!("bad integer: {e}")))
    }

    fn parse_rational(&mut self) -> Result<BigRational> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().map_or(false, |b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.peek() == Some(b'/') && self.peek_at(1).map_or(false, |b| b.is_ascii_digit()) {
            self.pos += 1;
            while self.peek().map_or(false, |b| b.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        if text.is_empty() || text == "-" {
            return self.fail("expected a rational number");
        }
        text.parse()
            .map_err(|e| Error::Parse(format!("bad rational '{text}': {e}")))
    }

    /// One `r` or `r*sqrt(d)` atom.
    fn parse_scalar_atom(&mut self) -> Result<ExactScalar> {
        let r = self.parse_rational()?;
        if self.starts_with("*sqrt(") {
            self.pos += "*sqrt(".len();
            let d = self.parse_uint()?;
            self.expect(")")?;
            ExactScalar::surd(r, d)
        } else {
            Ok(ExactScalar::from_rational(r))
        }
    }

    /// A full scalar, possibly `a + b*sqrt(d)`.
    fn parse_scalar(&mut self) -> Result<ExactScalar> {
        let first = self.parse_scalar_atom()?;
        let save = self.pos;
        self.skip_ws();
        if self.eat("+") {
            self.skip_ws();
            if let Ok(second) = self.parse_scalar_atom() {
                return first.checked_add(&second);
            }
        }
        self.pos = save;
        Ok(first)
    }

    /// `v` or `v^j`; returns the power.
    fn parse_vpow(&mut self) -> Result<usize> {
        self.expect("v")?;
        if self.eat("^") {
            Ok(self.parse_uint()? as usize)
        } else {
            Ok(1)
        }
    }

    /// One polynomial term: `(coeff, power)`.
    fn parse_term(&mut self) -> Result<(ExactScalar, usize)> {
        match self.peek() {
            Some(b'v') => Ok((ExactScalar::one(), self.parse_vpow()?)),
            Some(b'-') if self.peek_at(1) == Some(b'v') => {
                self.pos += 1;
                Ok((ExactScalar::from_int(-1), self.parse_vpow()?))
            }
            Some(b'(') => {
                self.pos += 1;
                let c = self.parse_scalar()?;
                self.expect(")")?;
                self.expect("*")?;
                Ok((c, self.parse_vpow()?))
            }
            _ => {
                let c = self.parse_scalar_atom()?;
                if self.eat("*") {
                    Ok((c, self.parse_vpow()?))
                } else {
                    Ok((c, 0))
                }
            }
        }
    }

    fn parse_poly(&mut self) -> Result<SymbolPoly> {
        let mut acc: Vec<ExactScalar> = Vec::new();
        loop {
            self.skip_ws();
            let (c, j) = self.parse_term()?;
            if acc.len() <= j {
                acc.resize(j + 1, ExactScalar::zero());
            }
            acc[j] = acc[j].checked_add(&c)?;
            let save = self.pos;
            self.skip_ws();
            if !self.eat("+") {
                self.pos = save;
                break;
            }
        }
        Ok(SymbolPoly::from_coeffs(acc))
    }

    fn parse_ring(&mut self, mode: &DerivationMode) -> Result<RingElement> {
        self.skip_ws();
        self.expect("(")?;
        let num = self.parse_poly()?;
        self.expect(")")?;
        let den = if self.eat("/(") {
            let den = self.parse_poly()?;
            self.expect(")")?;
            den
        } else {
            SymbolPoly::one()
        };
        RingElement::new(num, den, mode.clone())
    }
}

/// Parses `p/q` (or `p`).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let mut p = Parser::new(s.trim());
    let r = p.parse_rational()?;
    if !p.at_end() {
        return p.fail("trailing input");
    }
    Ok(r)
}

/// Parses a scalar such as `1/3*sqrt(6)` or `2 + -1*sqrt(6)`.
pub fn parse_scalar(s: &str) -> Result<ExactScalar> {
    let mut p = Parser::new(s.trim());
    let c = p.parse_scalar()?;
    if !p.at_end() {
        return p.fail("trailing input");
    }
    Ok(c)
}

/// Parses a polynomial such as `2*v + -3*v^2`.
pub fn parse_poly(s: &str) -> Result<SymbolPoly> {
    let mut p = Parser::new(s.trim());
    let poly = p.parse_poly()?;
    if !p.at_end() {
        return p.fail("trailing input");
    }
    Ok(poly)
}

/// Parses a ring element such as `(v^2 + -1)/(1 + v)`.
pub fn parse_ring(s: &str, mode: &DerivationMode) -> Result<RingElement> {
    let mut p = Parser::new(s.trim());
    let e = p.parse_ring(mode)?;
    if !p.at_end() {
        return p.fail("trailing input");
    }
    Ok(e)
}

/// Parses a series dump (`t^j: (...)` lines) back into a [`TimeSeries`]
/// with the given truncation order.
pub fn parse_series(s: &str, mode: &DerivationMode, trunc: usize) -> Result<TimeSeries> {
    let mut coeffs: Vec<RingElement> = Vec::new();
    for line in s.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut p = Parser::new(line);
        p.expect("t^")?;
        let j = p.parse_uint()? as usize;
        p.expect(":")?;
        let e = p.parse_ring(mode)?;
        if !p.at_end() {
            return p.fail("trailing input");
        }
        if j > trunc {
            return Err(Error::Parse(format!(
                "power t^{j} exceeds truncation order {trunc}"
            )));
        }
        if coeffs.len() <= j {
            coeffs.resize(j + 1, RingElement::zero(mode.clone()));
        }
        coeffs[j] = e;
    }
    TimeSeries::from_coeffs(coeffs, mode.clone(), trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn mode() -> DerivationMode {
        DerivationMode::Constant
    }

    #[test]
    fn rational_forms() {
        assert_eq!(parse_rational("4/3").unwrap().to_string(), "4/3");
        assert_eq!(parse_rational("-7").unwrap().to_string(), "-7");
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn scalar_roundtrip() {
        for text in ["0", "2", "-1/3", "1/3*sqrt(6)", "-1/5 + 1/5*sqrt(6)"] {
            let c = parse_scalar(text).unwrap();
            assert_eq!(scalar_string(&c), text);
        }
    }

    #[test]
    fn poly_roundtrip() {
        for text in [
            "0",
            "2*v + v^2",
            "2*v + -3*v^2",
            "-v + 4/3*v^3",
            "1/3*sqrt(6)*v",
            "(1 + 2*sqrt(6))*v^2",
            "2 + -1*sqrt(6) + v",
        ] {
            let p = parse_poly(text).unwrap();
            assert_eq!(poly_string(&p), text, "roundtrip of {text}");
        }
    }

    #[test]
    fn ring_roundtrip() {
        for text in ["(-1 + v)", "(2*v + v^2)", "(1/3*sqrt(6)*v)/(1 + v)", "(0)"] {
            let e = parse_ring(text, &mode()).unwrap();
            assert_eq!(ring_string(&e), text, "roundtrip of {text}");
        }
    }

    #[test]
    fn non_canonical_input_parses_to_canonical_value() {
        let e = parse_ring("(v^2 + -1)/(v + 1)", &mode()).unwrap();
        assert_eq!(ring_string(&e), "(-1 + v)");
    }

    #[test]
    fn series_roundtrip() {
        let text = "t^0: (v)\nt^1: (2*v + v^2)";
        let u = parse_series(text, &mode(), 3).unwrap();
        assert_eq!(series_string(&u), text);
        assert_eq!(u.trunc(), 3);

        let zero = parse_series("t^0: (0)", &mode(), 2).unwrap();
        assert!(zero.is_zero());
        assert_eq!(series_string(&zero), "t^0: (0)");
    }

    #[test]
    fn series_rejects_power_beyond_truncation() {
        assert!(parse_series("t^4: (v)", &mode(), 3).is_err());
    }

    #[test]
    fn surd_parses_with_context_discriminant() {
        let c = parse_scalar("1/3*sqrt(6)").unwrap();
        assert_eq!(c.disc(), 6);
        assert_eq!(
            c.surd_part(),
            &BigRational::new(BigInt::from(1), BigInt::from(3))
        );
    }
}
