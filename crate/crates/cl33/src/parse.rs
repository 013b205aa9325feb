//! Text forms for fields: a trig-polynomial parser, blade names, and the
//! line-per-component dump the parser reads back.
//!
//! The grammar matches what [`TrigPoly`] and [`Blade::text`] print, so any
//! dumped field round-trips. Numbers are exact: integers, ratios `3/4`,
//! and decimal literals all land in the rational ring.

use std::fmt::Write as _;

use num::bigint::BigInt;
use num::traits::One;

use crate::algebra::{basis, s_gen, Blade, T1, T3};
use crate::error::{Error, Result};
use crate::maxwell::{family_content, w_base, OddFieldSpec};
use crate::scalar::{rint, Coeff, Rat};
use crate::symbolic::{Field, LinearForm, TrigPoly, COORD_COUNT, COORD_NAMES};

/// Parse a trig-polynomial, e.g. `2*t1*cos(t3 - x3) + -1/2*x2^2`.
///
/// The whole input must be consumed; errors carry the byte offset of the
/// first unusable character.
pub fn parse_trig_poly(text: &str) -> Result<TrigPoly<Rat>> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::parse(p.pos, "unexpected trailing input"));
    }
    Ok(poly)
}

/// Parse a blade name: generator names concatenated in any order (`s1t1`),
/// `1` for the scalar, optional leading `-`. The result is the signed
/// blade in written order, so `s1t1` carries sign −1 relative to `t1s1`.
pub fn parse_blade(text: &str) -> Result<Blade> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut sign = 1i8;
    if bytes.first() == Some(&b'-') {
        sign = -1;
        pos += 1;
    }
    if &bytes[pos..] == b"1" {
        return Ok(Blade::with_sign(0, sign));
    }
    let mut indices = Vec::new();
    let mut seen = [false; 6];
    while pos < bytes.len() {
        let base = match bytes[pos] {
            b't' => 0,
            b's' => 3,
            _ => return Err(Error::parse(pos, "expected a generator name like t1 or s2")),
        };
        match bytes.get(pos + 1) {
            Some(d @ b'1'..=b'3') => {
                let index = base + (d - b'1') as usize;
                if seen[index] {
                    return Err(Error::parse(pos, "repeated generator in blade name"));
                }
                seen[index] = true;
                indices.push(index);
                pos += 2;
            }
            _ => return Err(Error::parse(pos, "expected a generator index 1-3")),
        }
    }
    if indices.is_empty() {
        return Err(Error::parse(pos, "expected a blade name"));
    }
    let blade = Blade::from_generators(&indices);
    Ok(Blade::with_sign(blade.mask(), sign * blade.sign()))
}

/// Parse a field dump: one `blade := trig-poly` component per line.
///
/// Blank lines and `#` comments are skipped. A blade may appear at most
/// once; its written-order sign folds into the coefficient. Error offsets
/// refer to the whole input.
pub fn parse_field_lines(text: &str) -> Result<Field<Rat>> {
    let mut field = Field::zero();
    let mut seen = [false; 64];
    let mut line_start = 0usize;
    for line in text.split('\n') {
        let base = line_start;
        line_start += line.len() + 1;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let Some(sep) = line.find(":=") else {
            return Err(Error::parse(base, "expected `blade := trig-poly`"));
        };
        let blade_off = base + indent(&line[..sep]);
        let blade =
            parse_blade(line[..sep].trim()).map_err(|e| shift(e, blade_off))?;
        if seen[blade.mask() as usize] {
            return Err(Error::parse(
                blade_off,
                format!("duplicate component {}", Blade::new(blade.mask()).text()),
            ));
        }
        seen[blade.mask() as usize] = true;
        let mut poly = parse_trig_poly(&line[sep + 2..])
            .map_err(|e| shift(e, base + sep + 2))?;
        if blade.sign() < 0 {
            poly = poly.scale(&rint(-1));
        }
        field = &field + &basis::<TrigPoly<Rat>>(Blade::new(blade.mask())).scale(&poly);
    }
    Ok(field)
}

/// Parse a field dump into source-field components.
///
/// The field must be purely odd-grade; any even component is a parity
/// error naming the offending blade.
pub fn parse_odd_spec(text: &str) -> Result<OddFieldSpec<Rat>> {
    let field = parse_field_lines(text)?;
    for (mask, _) in field.iter_nonzero() {
        let blade = Blade::new(mask);
        if blade.grade() % 2 == 0 {
            return Err(Error::Parity(format!(
                "component {} has even grade; a source field is odd",
                blade.text()
            )));
        }
    }
    Ok(OddFieldSpec {
        k_s: std::array::from_fn(|n| family_content(&field, s_gen(n))),
        u: family_content(&field, T3),
        v_t: family_content(&field, T1),
        w_st: std::array::from_fn(|n| family_content(&field, w_base(n))),
    })
}

/// Dump a field as `blade := trig-poly` lines, one per nonzero component,
/// ordered by blade mask.
pub fn dump_field<C: Coeff>(field: &Field<C>) -> String {
    let mut out = String::new();
    for (mask, poly) in field.iter_nonzero() {
        writeln!(out, "{} := {}", Blade::new(mask).text(), poly).unwrap();
    }
    out
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse {
            offset: offset + base,
            message,
        },
        other => other,
    }
}

fn indent(text: &str) -> usize {
    text.len() - text.trim_start().len()
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn looking_at(&self, s: &str) -> bool {
        self.bytes[self.pos..].starts_with(s.as_bytes())
    }

    fn poly(&mut self) -> Result<TrigPoly<Rat>> {
        self.skip_ws();
        let leading_minus = self.eat(b'-');
        let mut acc = self.term(leading_minus)?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term(false)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc + self.term(true)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self, negative: bool) -> Result<TrigPoly<Rat>> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                acc = acc * self.factor()?;
            } else {
                break;
            }
        }
        if negative {
            acc = acc.scale(&rint(-1));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<TrigPoly<Rat>> {
        self.skip_ws();
        match self.peek() {
            Some(b'c') | Some(b's') if self.looking_at("cos(") || self.looking_at("sin(") => {
                let sine = self.peek() == Some(b's');
                self.pos += 4;
                let phase = self.linear_form()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(Error::parse(self.pos, "expected `)` to close the phase"));
                }
                Ok(if sine {
                    TrigPoly::sin(phase)
                } else {
                    TrigPoly::cos(phase)
                })
            }
            Some(b't') | Some(b'x') => {
                let k = self.coordinate()?;
                let mut exps = [0u8; COORD_COUNT];
                exps[k] = if self.eat(b'^') { self.exponent()? } else { 1 };
                Ok(TrigPoly::monomial(Rat::one(), exps))
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                Ok(TrigPoly::constant(self.number()?))
            }
            _ => Err(Error::parse(
                self.pos,
                "expected a number, coordinate, cos(..) or sin(..)",
            )),
        }
    }

    fn linear_form(&mut self) -> Result<LinearForm<Rat>> {
        let mut form = LinearForm::zero();
        self.skip_ws();
        let negative = self.eat(b'-');
        self.linear_term(&mut form, negative)?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.linear_term(&mut form, false)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.linear_term(&mut form, true)?;
                }
                _ => break,
            }
        }
        Ok(form)
    }

    fn linear_term(&mut self, form: &mut LinearForm<Rat>, negative: bool) -> Result<()> {
        self.skip_ws();
        let signed = |v: Rat| if negative { -v } else { v };
        match self.peek() {
            Some(b't') | Some(b'x') => {
                let k = self.coordinate()?;
                form.coeffs[k] = form.coeffs[k].clone() + signed(Rat::one());
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let v = self.number()?;
                self.skip_ws();
                if self.eat(b'*') {
                    let k = self.coordinate()?;
                    form.coeffs[k] = form.coeffs[k].clone() + signed(v);
                } else {
                    form.constant = form.constant.clone() + signed(v);
                }
            }
            _ => return Err(Error::parse(self.pos, "expected a linear term")),
        }
        Ok(())
    }

    fn coordinate(&mut self) -> Result<usize> {
        self.skip_ws();
        for (k, name) in COORD_NAMES.iter().enumerate() {
            if self.looking_at(name) {
                self.pos += name.len();
                return Ok(k);
            }
        }
        Err(Error::parse(self.pos, "expected a coordinate t1..t3 or x1..x3"))
    }

    fn exponent(&mut self) -> Result<u8> {
        let start = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| Error::parse(start, "exponent out of range"))
    }

    fn number(&mut self) -> Result<Rat> {
        self.skip_ws();
        let negative = self.eat(b'-');
        let signed = |v: Rat| if negative { -v } else { v };
        let int_part = self.digits()?;
        match self.peek() {
            Some(b'/') => {
                self.pos += 1;
                let den_pos = self.pos;
                let den: BigInt = self.digits()?.parse().unwrap();
                if den == BigInt::from(0) {
                    return Err(Error::parse(den_pos, "zero denominator"));
                }
                Ok(signed(Rat::new(int_part.parse().unwrap(), den)))
            }
            Some(b'.') => {
                self.pos += 1;
                let frac = self.digits()?;
                let scale = BigInt::from(10).pow(frac.len() as u32);
                let num: BigInt = format!("{int_part}{frac}").parse().unwrap();
                Ok(signed(Rat::new(num, scale)))
            }
            _ => Ok(signed(Rat::from(int_part.parse::<BigInt>().unwrap()))),
        }
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected digits"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_owned())
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
}
