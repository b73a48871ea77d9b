//! Exact arithmetic in ℚ and quadratic fields ℚ(√D).

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::factor;
use crate::interval::{ComplexBox, RealInterval};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    Quadratic,
}

/// ℚ or a quadratic field ℚ(√D) with `D` squarefree, `D ∉ {0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    radicand: Option<i64>,
    degree: u32,
    roots_of_unity: u32,
    disc: i64,
    half_integer_basis: bool,
}

impl Field {
    pub fn rationals() -> Field {
        Field {
            radicand: None,
            degree: 1,
            roots_of_unity: 2,
            disc: 1,
            half_integer_basis: false,
        }
    }

    pub fn quadratic(d: i64) -> Result<Field> {
        if d == 0 || d == 1 {
            return Err(Error::DegenerateRadicand(d));
        }
        if d.checked_abs().is_none() || d.unsigned_abs() > 1 << 62 {
            return Err(Error::InvalidArgument(format!("radicand {d} out of range")));
        }
        if !factor::is_squarefree(&Integer::from(d)) {
            return Err(Error::NotSquarefree(d));
        }
        let half = d.rem_euclid(4) == 1;
        let roots_of_unity = match d {
            -1 => 4,
            -3 => 6,
            _ => 2,
        };
        Ok(Field {
            radicand: Some(d),
            degree: 2,
            roots_of_unity,
            disc: if half { d } else { 4 * d },
            half_integer_basis: half,
        })
    }

    pub fn kind(&self) -> FieldKind {
        match self.radicand {
            None => FieldKind::Rationals,
            Some(_) => FieldKind::Quadratic,
        }
    }

    /// `D`, or `None` for ℚ.
    pub fn radicand(&self) -> Option<i64> {
        self.radicand
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Number of roots of unity `w` in the field.
    pub fn roots_of_unity(&self) -> u32 {
        self.roots_of_unity
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    /// `true` iff `(1 + √D)/2` is integral (`D ≡ 1 mod 4`).
    pub fn half_integer_basis(&self) -> bool {
        self.half_integer_basis
    }

    pub fn is_totally_real(&self) -> bool {
        self.radicand.is_none_or(|d| d > 0)
    }

    /// ℚ(√−1) or ℚ(√−3).
    pub fn has_extra_units(&self) -> bool {
        self.roots_of_unity > 2
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::from_i64(*self, 0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::from_i64(*self, 1)
    }

    pub fn int(&self, n: i64) -> FieldElement {
        FieldElement::from_i64(*self, n)
    }

    /// `√D`; panics over ℚ.
    pub fn sqrt_d(&self) -> FieldElement {
        assert!(self.radicand.is_some(), "ℚ has no √D");
        FieldElement::new(*self, Rational::new(), Rational::from(1))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.radicand {
            None => f.write_str("Q"),
            Some(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;
    fn from_str(s: &str) -> Result<Field> {
        crate::parse::parse_field(s)
    }
}

/// An element `a + b√D`; `b = 0` over ℚ.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Field,
    a: Rational,
    b: Rational,
}

impl FieldElement {
    pub fn new(field: Field, a: Rational, b: Rational) -> FieldElement {
        assert!(
            field.radicand.is_some() || b == 0,
            "nonzero √D coordinate over ℚ"
        );
        FieldElement { field, a, b }
    }

    pub fn from_i64(field: Field, n: i64) -> FieldElement {
        FieldElement::new(field, Rational::from(n), Rational::new())
    }

    pub fn from_rational(field: Field, r: Rational) -> FieldElement {
        FieldElement::new(field, r, Rational::new())
    }

    pub fn from_integer(field: Field, n: &Integer) -> FieldElement {
        FieldElement::new(field, Rational::from(n), Rational::new())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Rational part.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of `√D`.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_one(&self) -> bool {
        self.a == 1 && self.b == 0
    }

    pub fn is_rational(&self) -> bool {
        self.b == 0
    }

    fn d(&self) -> Integer {
        Integer::from(self.field.radicand.unwrap_or(0))
    }

    pub fn conj(&self) -> FieldElement {
        FieldElement::new(self.field, self.a.clone(), Rational::from(-&self.b))
    }

    /// `a² − D b²`.
    pub fn norm(&self) -> Rational {
        if self.field.degree == 1 {
            // over ℚ the norm is the element itself
            return self.a.clone();
        }
        let a2 = Rational::from(self.a.square_ref());
        let b2 = Rational::from(self.b.square_ref()) * self.d();
        a2 - b2
    }

    /// `2a` over a quadratic field, `a` over ℚ.
    pub fn trace(&self) -> Rational {
        Rational::from(&self.a * self.field.degree)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.degree == 1 {
            return Ok(FieldElement::from_rational(
                self.field,
                Rational::from(self.a.recip_ref()),
            ));
        }
        let n = self.norm();
        let c = self.conj();
        Ok(FieldElement::new(
            self.field,
            Rational::from(&c.a / &n),
            Rational::from(&c.b / &n),
        ))
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> FieldElement {
        FieldElement::new(
            self.field,
            Rational::from(&self.a * r),
            Rational::from(&self.b * r),
        )
    }

    /// Integrality: trace and norm are rational integers.
    pub fn is_integral(&self) -> bool {
        self.trace().denom() == &1 && self.norm().denom() == &1
    }

    /// Root of unity test: `x^w = 1` exactly.
    pub fn is_root_of_unity(&self) -> bool {
        !self.is_zero() && self.pow(self.field.roots_of_unity).is_one()
    }

    /// Coordinates `(u, v)` on the integral basis `{1, ω}` with
    /// `ω = √D` or `(1 + √D)/2`.
    pub fn integral_basis_coords(&self) -> (Rational, Rational) {
        if self.field.half_integer_basis {
            (
                Rational::from(&self.a - &self.b),
                Rational::from(&self.b * 2u32),
            )
        } else {
            (self.a.clone(), self.b.clone())
        }
    }

    /// Complex embeddings `σ(x)`, one box per embedding; the first sends
    /// `√D` to the positive real root or to `+i√|D|`.
    pub fn embed(&self, prec: u32) -> Vec<ComplexBox> {
        let a = RealInterval::from_rational(prec, &self.a);
        match self.field.radicand {
            None => vec![ComplexBox::real(a)],
            Some(d) => {
                let s = RealInterval::from_i64(prec, d.abs()).sqrt();
                let bs = &RealInterval::from_rational(prec, &self.b) * &s;
                if d > 0 {
                    vec![
                        ComplexBox::real(&a + &bs),
                        ComplexBox::real(&a - &bs),
                    ]
                } else {
                    vec![
                        ComplexBox::new(a.clone(), bs.clone()),
                        ComplexBox::new(a, -&bs),
                    ]
                }
            }
        }
    }

    /// `|σ(x)|` for every embedding.
    pub fn embedding_abs(&self, prec: u32) -> Vec<RealInterval> {
        match self.field.radicand {
            // conjugate pair: both moduli equal √N(x)
            Some(d) if d < 0 => {
                let m = RealInterval::from_rational(prec, &self.norm()).sqrt();
                vec![m.clone(), m]
            }
            _ => self.embed(prec).iter().map(|z| z.re.abs()).collect(),
        }
    }

    fn assert_same_field(&self, other: &FieldElement) {
        assert_eq!(self.field, other.field, "elements of different fields");
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.a == other.a && self.b == other.b
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.hash(state);
        self.a.hash(state);
        self.b.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on `(a, b)`; a bookkeeping order, not a field order.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.field.radicand {
            Some(d) if self.b != 0 => d,
            _ => return write!(f, "{}", self.a),
        };
        if self.a != 0 {
            write!(f, "{}", self.a)?;
            f.write_str(if self.b < 0 { "-" } else { "+" })?;
        } else if self.b < 0 {
            f.write_str("-")?;
        }
        let babs = Rational::from(self.b.abs_ref());
        let (num, den) = babs.into_numer_denom();
        if num != 1 {
            write!(f, "{num}*")?;
        }
        write!(f, "sqrt({d})")?;
        if den != 1 {
            write!(f, "/{den}")?;
        }
        Ok(())
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        FieldElement::new(
            self.field,
            Rational::from(&self.a + &rhs.a),
            Rational::from(&self.b + &rhs.b),
        )
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        FieldElement::new(
            self.field,
            Rational::from(&self.a - &rhs.a),
            Rational::from(&self.b - &rhs.b),
        )
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_field(rhs);
        if self.b == 0 && rhs.b == 0 {
            return FieldElement::from_rational(self.field, Rational::from(&self.a * &rhs.a));
        }
        let bd = Rational::from(&self.b * &rhs.b) * self.d();
        FieldElement::new(
            self.field,
            Rational::from(&self.a * &rhs.a) + bd,
            Rational::from(&self.a * &rhs.b) + Rational::from(&self.b * &rhs.a),
        )
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::new(
            self.field,
            Rational::from(-&self.a),
            Rational::from(-&self.b),
        )
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::DEFAULT_PRECISION;

    fn q(d: i64) -> Field {
        Field::quadratic(d).unwrap()
    }

    fn el(f: Field, a: i64, b: i64) -> FieldElement {
        FieldElement::new(f, Rational::from(a), Rational::from(b))
    }

    #[test]
    fn field_invariants() {
        let gauss = q(-1);
        assert_eq!((gauss.roots_of_unity(), gauss.degree()), (4, 2));
        assert_eq!(gauss.disc(), -4);
        let eis = q(-3);
        assert_eq!((eis.roots_of_unity(), eis.degree()), (6, 2));
        assert!(eis.half_integer_basis());
        assert_eq!(eis.disc(), -3);
        let five = q(5);
        assert_eq!(five.roots_of_unity(), 2);
        assert!(five.half_integer_basis());
        assert_eq!(five.disc(), 5);
        assert_eq!(q(-2).disc(), -8);
        let rat = Field::rationals();
        assert_eq!((rat.degree(), rat.roots_of_unity()), (1, 2));
    }

    #[test]
    fn rejects_bad_radicands() {
        assert_eq!(Field::quadratic(0), Err(Error::DegenerateRadicand(0)));
        assert_eq!(Field::quadratic(1), Err(Error::DegenerateRadicand(1)));
        assert_eq!(Field::quadratic(12), Err(Error::NotSquarefree(12)));
        assert_eq!(Field::quadratic(-4), Err(Error::NotSquarefree(-4)));
    }

    #[test]
    fn arithmetic_examples() {
        let k = q(-1);
        assert_eq!(&el(k, 1, 1) * &el(k, 1, -1), k.int(2));
        let k2 = q(-2);
        let x = k2.one().checked_div(&k2.sqrt_d()).unwrap();
        assert_eq!(x, FieldElement::new(k2, Rational::new(), Rational::from((-1, 2))));
        assert_eq!(el(k2, 3, 2).norm(), 17);
        assert_eq!(el(k2, 3, 2).trace(), 6);
        assert_eq!(k2.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn embeddings() {
        let p = DEFAULT_PRECISION;
        let i = q(-1).sqrt_d().embed(p);
        assert_eq!(i.len(), 2);
        assert!(i[0].contains_f64(0.0, 1.0) && i[1].contains_f64(0.0, -1.0));
        let x = el(q(2), 1, 1).embed(p);
        assert!((x[0].re.mid_f64() - 2.414_213_562_373_095).abs() < 1e-14);
        assert!((x[1].re.mid_f64() + 0.414_213_562_373_095).abs() < 1e-14);
        let three = Field::rationals().int(3).embed(p);
        assert_eq!(three.len(), 1);
        assert!(three[0].contains_f64(3.0, 0.0));
    }

    #[test]
    fn roots_of_unity() {
        assert!(q(-1).sqrt_d().is_root_of_unity());
        let omega = FieldElement::new(q(-3), Rational::from((1, 2)), Rational::from((1, 2)));
        assert!(omega.is_root_of_unity());
        assert!(!Field::rationals().int(2).is_root_of_unity());
        assert!(!Field::rationals().zero().is_root_of_unity());
    }

    #[test]
    fn roots_of_unity_count_in_box() {
        for (field, w) in [(Field::rationals(), 2), (q(-1), 4), (q(-3), 6)] {
            let mut count = 0;
            for a2 in -6..=6 {
                for b2 in -6..=6 {
                    if field.radicand().is_none() && b2 != 0 {
                        continue;
                    }
                    let x = FieldElement::new(
                        field,
                        Rational::from((a2, 2)),
                        Rational::from((b2, 2)),
                    );
                    if x.is_root_of_unity() {
                        count += 1;
                    }
                }
            }
            assert_eq!(count, w, "{field}");
        }
    }

    #[test]
    fn display_and_integrality() {
        let k = q(-2);
        assert_eq!(el(k, 1, 1).to_string(), "1+sqrt(-2)");
        assert_eq!(
            FieldElement::new(k, Rational::new(), Rational::from((-3, 2))).to_string(),
            "-3*sqrt(-2)/2"
        );
        let half = FieldElement::new(q(5), Rational::from((1, 2)), Rational::from((1, 2)));
        assert!(half.is_integral());
        let not = FieldElement::new(q(-1), Rational::from((1, 2)), Rational::from((1, 2)));
        assert!(!not.is_integral());
    }
}
