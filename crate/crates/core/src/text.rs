//! Canonical text and LaTeX renderings of [`PiNumber`].
//!
//! Grammar accepted by [`parse_pi`]:
//!
//! ```text
//! number := ['-'] term (('+' | '-') term)*
//! term   := int ['/' int] ['*'] [pi] | int ['/' int] '/' pi | pi
//! pi     := "pi" ['^' exp]
//! exp    := ['-'] int | '(' ['-'] int '/' '2' ')'
//! ```
//!
//! Whitespace between tokens is ignored. [`format_pi`] emits terms by
//! ascending exponent, e.g. `2/pi + 2/3*pi` or `5*pi^2 - 3/8*pi^4`.

use alloc::string::String;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::pi_number::PiNumber;
use crate::rational::BigRational;

fn pi_power(twice_exp: i32) -> String {
    let mut s = String::from("pi");
    if twice_exp % 2 != 0 {
        let _ = write!(s, "^({twice_exp}/2)");
    } else if twice_exp != 2 {
        let _ = write!(s, "^{}", twice_exp / 2);
    }
    s
}

fn write_term(f: &mut impl Write, c: &BigRational, twice_exp: i32) -> fmt::Result {
    let p = c.numer();
    let q = c.denom();
    if twice_exp == 0 {
        return if q.is_one() { write!(f, "{p}") } else { write!(f, "{p}/{q}") };
    }
    if twice_exp < 0 && twice_exp % 2 == 0 && q.is_one() {
        return write!(f, "{p}/{}", pi_power(-twice_exp));
    }
    if p.is_one() && q.is_one() {
        return f.write_str(&pi_power(twice_exp));
    }
    if q.is_one() {
        write!(f, "{p}*{}", pi_power(twice_exp))
    } else {
        write!(f, "{p}/{q}*{}", pi_power(twice_exp))
    }
}

impl fmt::Display for PiNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_term(f, &c.abs(), e)?;
        }
        Ok(())
    }
}

/// Canonical text form; `parse_pi(&format_pi(x)) == Ok(x)`.
pub fn format_pi(x: &PiNumber) -> String {
    alloc::format!("{x}")
}

/// LaTeX rendering in the `\frac{p \pi^{e}}{q}` style.
pub fn format_latex(x: &PiNumber) -> String {
    let mut out = String::new();
    if x.is_zero() {
        out.push('0');
        return out;
    }
    for (i, (e, c)) in x.terms().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let c = c.abs();
        let (p, q) = (c.numer(), c.denom());
        let pi = if e.abs() == 2 {
            String::from("\\pi")
        } else if e % 2 == 0 {
            alloc::format!("\\pi^{{{}}}", e.abs() / 2)
        } else {
            alloc::format!("\\pi^{{{}/2}}", e.abs())
        };
        let (num, den) = match e {
            0 => (alloc::format!("{p}"), alloc::format!("{q}")),
            e if e > 0 && p.is_one() => (pi, alloc::format!("{q}")),
            e if e > 0 => (alloc::format!("{p} {pi}"), alloc::format!("{q}")),
            _ if q.is_one() => (alloc::format!("{p}"), pi),
            _ => (alloc::format!("{p}"), alloc::format!("{q} {pi}")),
        };
        if den == "1" {
            out.push_str(&num);
        } else {
            let _ = write!(out, "\\frac{{{num}}}{{{den}}}");
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &'static str) -> Error {
        Error::Parse { position: self.pos, message }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_pi(&mut self) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(b"pi")
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        BigInt::parse_bytes(digits.as_bytes(), 10).ok_or(Error::Parse { position: start, message: "bad integer" })
    }

    fn small_int(&mut self) -> Result<i32> {
        let negative = self.eat(b'-');
        let start = self.pos;
        let v: i32 =
            self.int()?.try_into().map_err(|_| Error::Parse { position: start, message: "exponent too large" })?;
        Ok(if negative { -v } else { v })
    }

    /// Parses `pi ['^' exp]`, returning twice the exponent.
    fn pi(&mut self) -> Result<i32> {
        if !self.at_pi() {
            return Err(self.err("expected 'pi'"));
        }
        self.pos += 2;
        if !self.eat(b'^') {
            return Ok(2);
        }
        if self.eat(b'(') {
            let t = self.small_int()?;
            if !self.eat(b'/') {
                return Err(self.err("expected '/2' in half exponent"));
            }
            let start = self.pos;
            if self.int()? != BigInt::from(2) {
                return Err(Error::Parse { position: start, message: "half exponent needs denominator 2" });
            }
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            return Ok(t);
        }
        let e = self.small_int()?;
        e.checked_mul(2).ok_or(self.err("exponent too large"))
    }

    fn term(&mut self) -> Result<(BigRational, i32)> {
        if self.at_pi() {
            let e = self.pi()?;
            return Ok((BigRational::one(), e));
        }
        let num = self.int()?;
        let mut den = BigInt::one();
        if self.eat(b'/') {
            if self.at_pi() {
                let e = self.pi()?;
                return Ok((BigRational::from_integer(num), -e));
            }
            let at = self.pos;
            den = self.int()?;
            if den.is_zero() {
                return Err(Error::Parse { position: at, message: "zero denominator" });
            }
        }
        let c = BigRational::new(num, den);
        if self.eat(b'/') {
            let e = self.pi()?;
            return Ok((c, -e));
        }
        if self.eat(b'*') {
            let e = self.pi()?;
            return Ok((c, e));
        }
        if self.at_pi() {
            let e = self.pi()?;
            return Ok((c, e));
        }
        Ok((c, 0))
    }
}

/// Parses the canonical text form (and the looser variants in the grammar).
pub fn parse_pi(src: &str) -> Result<PiNumber> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let mut out = PiNumber::zero();
    let mut negative = p.eat(b'-');
    loop {
        let (c, e) = p.term()?;
        out += PiNumber::monomial(if negative { -c } else { c }, e);
        match p.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return Err(p.err("expected '+' or '-'")),
        }
        p.pos += 1;
    }
    Ok(out)
}

impl core::str::FromStr for PiNumber {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_pi(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn formats_canonically() {
        let x = &PiNumber::monomial(int(5), 4) - &PiNumber::monomial(ratio(3, 8), 8);
        assert_eq!(format_pi(&x), "5*pi^2 - 3/8*pi^4");
        assert_eq!(format_pi(&PiNumber::zero()), "0");
        let y = &PiNumber::monomial(int(5), -4) - &PiNumber::rational(ratio(1, 3));
        assert_eq!(format_pi(&y), "5/pi^2 - 1/3");
        assert_eq!(format_pi(&PiNumber::monomial(ratio(-3, 8), -2)), "-3/8*pi^-1");
        assert_eq!(format_pi(&PiNumber::pi_pow(1)), "pi");
        assert_eq!(format_pi(&PiNumber::sqrt_pi_pow(3)), "pi^(3/2)");
    }

    #[test]
    fn parses_table_entry() {
        let x = parse_pi("2/pi + 2/3*pi").unwrap();
        let expect = PiNumber::from_terms([(-2, int(2)), (2, ratio(2, 3))]);
        assert_eq!(x, expect);
        assert_eq!(parse_pi("0").unwrap(), PiNumber::zero());
        assert!(parse_pi("0").unwrap().terms().next().is_none());
    }

    #[test]
    fn parses_variants() {
        assert_eq!(parse_pi("-pi^2 + 2pi").unwrap(), parse_pi("2*pi - pi^2").unwrap());
        assert_eq!(parse_pi("3/8/pi^2").unwrap(), PiNumber::monomial(ratio(3, 8), -4));
        assert_eq!(parse_pi("1/pi^3").unwrap(), PiNumber::pi_pow(-3));
        assert_eq!(parse_pi(" pi^(-1/2) ").unwrap(), PiNumber::sqrt_pi_pow(-1));
        assert_eq!(parse_pi("4/2").unwrap(), PiNumber::integer(2));
    }

    #[test]
    fn reports_positions() {
        match parse_pi("2 + x") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_pi("1/0"), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(parse_pi(""), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_pi("2 *"), Err(Error::Parse { .. })));
        assert!(matches!(parse_pi("pi^(3/4)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn latex() {
        let x = &PiNumber::monomial(int(5), 4) - &PiNumber::monomial(ratio(3, 8), 8);
        assert_eq!(format_latex(&x), "5 \\pi^{2} - \\frac{3 \\pi^{4}}{8}");
        assert_eq!(format_latex(&PiNumber::monomial(int(2), -2)), "\\frac{2}{\\pi}");
        assert_eq!(format_latex(&PiNumber::monomial(ratio(2, 3), 2)), "\\frac{2 \\pi}{3}");
    }
}
