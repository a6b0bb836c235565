//! Text form of field elements: a small infix grammar over the named constants,
//! and a formatter whose output the grammar reads back.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' ['-'] digits)?
//! atom  := integer | decimal | name | 'conj' '(' expr ')' | '(' expr ')'
//! name  := i | omega | sqrt2 | sqrt3 | sqrt6 | zeta24
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::solve_in_span;
use super::Cyclo;
use crate::error::{Error, Result};

pub fn parse(src: &str) -> Result<Cyclo> {
    let mut p = Parser { src, bytes: src.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: format!("{msg} in {:?}", self.src) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Cyclo> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Cyclo> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc
                    .checked_div(&d)
                    .map_err(|_| Error::Parse { pos: at, msg: format!("division by zero in {:?}", self.src) })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Cyclo> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Cyclo> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let e: u32 = self.src[start..self.pos].parse().map_err(|_| self.err("expected exponent"))?;
        let v = base.pow(e);
        if neg {
            v.inv().map_err(|_| self.err("zero to a negative power"))
        } else {
            Ok(v)
        }
    }

    fn atom(&mut self) -> Result<Cyclo> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                if name == "conj" {
                    if !self.eat(b'(') {
                        return Err(self.err("expected '(' after conj"));
                    }
                    let v = self.expr()?;
                    if !self.eat(b')') {
                        return Err(self.err("expected ')'"));
                    }
                    return Ok(v.conj());
                }
                Cyclo::constant(name).map_err(|_| Error::Parse {
                    pos: start,
                    msg: format!("unknown constant {name:?} in {:?}", self.src),
                })
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Cyclo> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let int_part: BigInt = self.src[start..self.pos].parse().map_err(|_| self.err("bad integer"))?;
        if self.pos < self.bytes.len() && self.bytes[self.pos] == b'.' {
            self.pos += 1;
            let fs = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = &self.src[fs..self.pos];
            if digits.is_empty() {
                return Err(self.err("expected digits after '.'"));
            }
            let scale = BigInt::from(10).pow(digits.len() as u32);
            let frac: BigInt = digits.parse().expect("digits");
            let q = BigRational::new(int_part * &scale + frac, scale);
            return Ok(Cyclo::from_rational(&q));
        }
        Ok(Cyclo::from_bigint(int_part))
    }
}

fn surd_basis() -> [(Cyclo, &'static str); 8] {
    let i = Cyclo::i();
    [
        (Cyclo::one(), ""),
        (Cyclo::sqrt2(), "sqrt2"),
        (Cyclo::sqrt3(), "sqrt3"),
        (Cyclo::sqrt6(), "sqrt6"),
        (i.clone(), "i"),
        (&i * &Cyclo::sqrt2(), "i*sqrt2"),
        (&i * &Cyclo::sqrt3(), "i*sqrt3"),
        (&i * &Cyclo::sqrt6(), "i*sqrt6"),
    ]
}

fn push_term(out: &mut String, c: &BigRational, unit: &str) {
    if c.is_zero() {
        return;
    }
    let neg = c.is_negative();
    let mag = c.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mag_s = if mag.denom().is_one() { mag.numer().to_string() } else { format!("{}/{}", mag.numer(), mag.denom()) };
    if unit.is_empty() {
        out.push_str(&mag_s);
    } else if mag.is_one() {
        out.push_str(unit);
    } else {
        out.push_str(&mag_s);
        out.push('*');
        out.push_str(unit);
    }
}

fn render(terms: &[(BigRational, &str)]) -> String {
    let mut out = String::new();
    for (c, unit) in terms {
        push_term(&mut out, c, unit);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical text: over (1, omega) when the value lies in Q(ω), over (1, i) in
/// Q(i), otherwise over 1, √2, √3, √6 and their i-multiples.
pub fn format_cyclo(x: &Cyclo) -> String {
    if let Some(q) = x.as_rational() {
        return render(&[(q, "")]);
    }
    if let Some(c) = solve_in_span(&[Cyclo::one(), Cyclo::i()], x) {
        return render(&[(c[0].clone(), ""), (c[1].clone(), "i")]);
    }
    if let Some(c) = solve_in_span(&[Cyclo::one(), Cyclo::omega()], x) {
        return render(&[(c[0].clone(), ""), (c[1].clone(), "omega")]);
    }
    let basis = surd_basis();
    let elems: Vec<Cyclo> = basis.iter().map(|(b, _)| b.clone()).collect();
    let c = solve_in_span(&elems, x).expect("surd basis spans the field");
    let terms: Vec<(BigRational, &str)> = c.into_iter().zip(basis.iter().map(|(_, n)| *n)).collect();
    render(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_constants_and_arithmetic() {
        assert_eq!(parse("sqrt3*sqrt3").unwrap(), Cyclo::from_int(3));
        assert_eq!(parse("i^2").unwrap(), Cyclo::from_int(-1));
        assert_eq!(parse("2+sqrt3").unwrap(), Cyclo::from_int(2) + Cyclo::sqrt3());
        assert_eq!(parse("-2*omega - 1").unwrap(), -(Cyclo::from_int(2) * Cyclo::omega()) - Cyclo::one());
        assert_eq!(parse("1/2 - i*sqrt3/2").unwrap(), Cyclo::omega());
        assert_eq!(parse("conj(omega)").unwrap(), Cyclo::omega().conj());
        assert_eq!(parse("0.25").unwrap(), Cyclo::from_ratio(1, 4));
        assert_eq!(parse("zeta24^24").unwrap(), Cyclo::one());
        assert_eq!(parse("(1+i)^-1").unwrap(), Cyclo::from_ratio(1, 2) - Cyclo::i().scale_ratio(1, 2));
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse("1 + foo") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse("(1+2"), Err(Error::Parse { .. })));
        assert!(matches!(parse("2 3"), Err(Error::Parse { .. })));
    }

    #[test]
    fn formats_by_smallest_subfield() {
        assert_eq!(format_cyclo(&Cyclo::from_ratio(-3, 4)), "-3/4");
        assert_eq!(format_cyclo(&(Cyclo::from_int(2) + Cyclo::i())), "2 + i");
        assert_eq!(format_cyclo(&Cyclo::omega().conj()), "1 - omega");
        assert_eq!(format_cyclo(&(-(Cyclo::from_int(2) * Cyclo::omega()) - Cyclo::one())), "-1 - 2*omega");
        assert_eq!(format_cyclo(&(Cyclo::from_int(2) + Cyclo::sqrt3())), "2 + sqrt3");
        assert_eq!(format_cyclo(&Cyclo::zero()), "0");
    }

    #[test]
    fn format_round_trips() {
        for k in 0..24 {
            let x = Cyclo::zeta_pow(k) * Cyclo::from_ratio(3, 7) + Cyclo::sqrt2();
            assert_eq!(parse(&format_cyclo(&x)).unwrap(), x);
        }
    }
}
