//! Parsers for field descriptors and polynomials.
//!
//! ```text
//! field  = "Q" | "Q" "(" "sqrt" "(" int ")" ")"
//! poly   = [ "+" | "-" ] term { ( "+" | "-" ) term }
//! term   = power { [ "*" | "/" ] power }      (juxtaposition multiplies)
//! power  = atom [ "^" uint ]
//! atom   = uint | "x" | "sqrt" "(" int ")" | "(" poly ")"
//! ```
//!
//! Whitespace is ignored. `sqrt(n)` must lie in the field: `n` is a square
//! or `D` times a square. Division is by nonzero constants only.

use rug::Integer;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::PolyOverK;

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    src: &'a str,
    field: Field,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, field: Field) -> Parser<'a> {
        Parser {
            chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            i: 0,
            src,
            field,
        }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.src.len(), |&(p, _)| p)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => err(self.pos(), format!("expected '{c}', found '{got}'")),
                None => err(self.pos(), format!("expected '{c}', found end of input")),
            }
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        let n = word.chars().count();
        let matches = self.chars.len() >= self.i + n
            && self.chars[self.i..self.i + n]
                .iter()
                .map(|&(_, c)| c)
                .eq(word.chars());
        if matches {
            self.i += n;
        }
        matches
    }

    fn uint(&mut self) -> Result<Integer> {
        let start = self.pos();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.i += 1;
        }
        if digits.is_empty() {
            return err(start, "expected a number");
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn int(&mut self) -> Result<Integer> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let n = self.uint()?;
        Ok(if neg { -n } else { n })
    }

    fn done(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => err(self.pos(), format!("unexpected '{c}'")),
        }
    }

    fn sqrt_literal(&mut self, start: usize) -> Result<FieldElement> {
        self.expect('(')?;
        let n = self.int()?;
        self.expect(')')?;
        let field = self.field;
        if n >= 0 && n.is_perfect_square() {
            return Ok(FieldElement::from_integer(field, &n.sqrt()));
        }
        if let Some(d) = field.radicand() {
            let (q, r) = n.clone().div_rem(Integer::from(d));
            if r == 0 && q >= 0 && q.is_perfect_square() {
                return Ok(&field.sqrt_d() * &FieldElement::from_integer(field, &q.sqrt()));
            }
        }
        err(start, format!("sqrt({n}) does not lie in {field}"))
    }

    fn atom(&mut self) -> Result<PolyOverK> {
        let start = self.pos();
        let field = self.field;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(PolyOverK::constant(FieldElement::from_integer(field, &n)))
            }
            Some('x') => {
                self.i += 1;
                Ok(PolyOverK::from_i64s(field, &[0, 1]))
            }
            Some('s') => {
                if !self.keyword("sqrt") {
                    return err(start, "unknown identifier");
                }
                Ok(PolyOverK::constant(self.sqrt_literal(start)?))
            }
            Some('(') => {
                self.i += 1;
                let p = self.poly()?;
                self.expect(')')?;
                Ok(p)
            }
            Some(c) => err(start, format!("unexpected '{c}'")),
            None => err(start, "unexpected end of input"),
        }
    }

    fn power(&mut self) -> Result<PolyOverK> {
        let base = self.atom()?;
        if self.eat('^') {
            let start = self.pos();
            let e = self.uint()?;
            let e = e
                .to_u32()
                .filter(|&e| e <= 100_000)
                .map_or_else(|| err(start, "exponent too large"), Ok)?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == 'x' || c == 's' || c == '(')
    }

    fn term(&mut self) -> Result<PolyOverK> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.peek() == Some('/') {
                self.i += 1;
                let start = self.pos();
                let den = self.power()?;
                let c = match den.degree() {
                    Some(0) => den.coeffs()[0].clone(),
                    Some(_) => return err(start, "division by a non-constant"),
                    None => return err(start, "division by zero"),
                };
                acc = acc.scale(&c.inv().expect("nonzero constant"));
            } else if self.starts_atom() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly(&mut self) -> Result<PolyOverK> {
        let mut acc = if self.eat('-') {
            -&self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }
}

/// `Q` or `Q(sqrt(D))`.
pub fn parse_field(s: &str) -> Result<Field> {
    let mut p = Parser::new(s, Field::rationals());
    p.expect('Q')?;
    if p.peek().is_none() {
        return Ok(Field::rationals());
    }
    p.expect('(')?;
    let start = p.pos();
    if !p.keyword("sqrt") {
        return err(start, "expected 'sqrt'");
    }
    p.expect('(')?;
    let start = p.pos();
    let d = p.int()?;
    p.expect(')')?;
    p.expect(')')?;
    p.done()?;
    let d = d
        .to_i64()
        .map_or_else(|| err(start, "radicand out of range"), Ok)?;
    Field::quadratic(d).or_else(|e| err(start, e.to_string()))
}

/// A polynomial over `field`; the zero polynomial is rejected.
pub fn parse_poly(s: &str, field: Field) -> Result<PolyOverK> {
    let mut p = Parser::new(s, field);
    let f = p.poly()?;
    p.done()?;
    if f.is_zero() {
        return err(0, "the polynomial is zero");
    }
    Ok(f)
}

/// A constant expression over `field`, e.g. `(1+sqrt(-3))/2`.
pub fn parse_element(s: &str, field: Field) -> Result<FieldElement> {
    let mut p = Parser::new(s, field);
    let f = p.poly()?;
    p.done()?;
    match f.degree() {
        None => Ok(field.zero()),
        Some(0) => Ok(f.coeffs()[0].clone()),
        Some(_) => err(0, "expected a constant"),
    }
}
