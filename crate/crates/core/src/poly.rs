//! Dense polynomials over a field `K` and over ℤ, coefficients in ascending order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::interval::ComplexBox;

/// `a_0 + a_1 x + … + a_n x^n` with `a_n ≠ 0`, or the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyOverK {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl PolyOverK {
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> PolyOverK {
        assert!(
            coeffs.iter().all(|c| c.field() == field),
            "coefficient from another field"
        );
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        PolyOverK { field, coeffs }
    }

    pub fn zero(field: Field) -> PolyOverK {
        PolyOverK {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldElement) -> PolyOverK {
        PolyOverK::new(c.field(), vec![c])
    }

    /// `x − α`.
    pub fn linear_factor(alpha: &FieldElement) -> PolyOverK {
        let field = alpha.field();
        PolyOverK::new(field, vec![-alpha, field.one()])
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> PolyOverK {
        PolyOverK::new(field, coeffs.iter().map(|&c| field.int(c)).collect())
    }

    pub fn from_int_poly(field: Field, f: &IntPoly) -> PolyOverK {
        PolyOverK::new(
            field,
            f.coeffs()
                .iter()
                .map(|c| FieldElement::from_integer(field, c))
                .collect(),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn scale(&self, c: &FieldElement) -> PolyOverK {
        PolyOverK::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> PolyOverK {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, mut e: u32) -> PolyOverK {
        let mut base = self.clone();
        let mut acc = PolyOverK::constant(self.field.one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> PolyOverK {
        PolyOverK::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from(i)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, divisor: &PolyOverK) -> (PolyOverK, PolyOverK) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lc = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= dd) else {
            return (PolyOverK::zero(self.field), self.clone());
        };
        let mut quot = vec![self.field.zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd] * &inv_lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (
            PolyOverK::new(self.field, quot),
            PolyOverK::new(self.field, rem),
        )
    }

    /// Exact quotient; `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &PolyOverK) -> Option<PolyOverK> {
        let (q, r) = self.divrem(divisor);
        r.is_zero().then_some(q)
    }

    /// Synthetic division by `x − α`: quotient and remainder `f(α)`.
    pub fn div_linear(&self, alpha: &FieldElement) -> (PolyOverK, FieldElement) {
        if self.coeffs.is_empty() {
            return (self.clone(), self.field.zero());
        }
        let mut acc = self.field.zero();
        let mut quot = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * alpha) + c;
            quot.push(acc.clone());
        }
        let rem = quot.pop().unwrap();
        quot.reverse();
        (PolyOverK::new(self.field, quot), rem)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &PolyOverK) -> PolyOverK {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's squarefree decomposition: monic, pairwise coprime, squarefree
    /// `g_i` with `f = lc · ∏ g_i^{m_i}`. Constant input gives an empty list.
    pub fn squarefree_decomposition(&self) -> Vec<(PolyOverK, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let c = df.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let nb = b.exact_div(&a).expect("gcd divides");
            let nc = d.exact_div(&a).expect("gcd divides");
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            d = &nc - &nb.derivative();
            b = nb;
            i += 1;
        }
        out
    }

    pub fn has_rational_coeffs(&self) -> bool {
        self.coeffs.iter().all(FieldElement::is_rational)
    }

    /// Primitive integer polynomial proportional to `self`, with positive
    /// leading coefficient; `None` unless all coefficients are rational.
    pub fn primitive_int_poly(&self) -> Option<IntPoly> {
        if self.is_zero() || !self.has_rational_coeffs() {
            return None;
        }
        let mut l = Integer::from(1);
        for c in &self.coeffs {
            l.lcm_mut(c.a().denom());
        }
        let ints: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| c.a().numer() * Integer::from(&l / c.a().denom()))
            .collect();
        Some(IntPoly::new(ints).primitive_part())
    }

    /// Coefficients of `f_σ` for embedding `sigma`.
    pub fn embed(&self, prec: u32, sigma: usize) -> Vec<ComplexBox> {
        self.coeffs
            .iter()
            .map(|c| c.embed(prec).swap_remove(sigma))
            .collect()
    }
}

fn write_poly_terms<F>(f: &mut fmt::Formatter<'_>, n: usize, mut term: F) -> fmt::Result
where
    F: FnMut(usize) -> Option<(bool, String)>,
{
    let mut first = true;
    for k in (0..n).rev() {
        let Some((neg, body)) = term(k) else {
            continue;
        };
        if neg {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        match (body.as_str(), k) {
            ("1", 0) => f.write_str("1")?,
            ("1", _) => f.write_str(&mono)?,
            (b, 0) => f.write_str(b)?,
            (b, _) => write!(f, "{b}*{mono}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for PolyOverK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly_terms(f, self.coeffs.len(), |k| {
            let c = &self.coeffs[k];
            if c.is_zero() {
                None
            } else if c.is_rational() || c.a() == &0 {
                let neg = if c.is_rational() { c.a() < &0 } else { c.b() < &0 };
                let body = if neg { (-c).to_string() } else { c.to_string() };
                Some((neg, body))
            } else {
                Some((false, format!("({c})")))
            }
        })
    }
}

impl Add for &PolyOverK {
    type Output = PolyOverK;
    fn add(self, rhs: &PolyOverK) -> PolyOverK {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyOverK::new(
            self.field,
            (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect(),
        )
    }
}

impl Sub for &PolyOverK {
    type Output = PolyOverK;
    fn sub(self, rhs: &PolyOverK) -> PolyOverK {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyOverK::new(
            self.field,
            (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect(),
        )
    }
}

impl Neg for &PolyOverK {
    type Output = PolyOverK;
    fn neg(self) -> PolyOverK {
        PolyOverK::new(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &PolyOverK {
    type Output = PolyOverK;
    fn mul(self, rhs: &PolyOverK) -> PolyOverK {
        assert_eq!(self.field, rhs.field, "polynomials over different fields");
        if self.is_zero() || rhs.is_zero() {
            return PolyOverK::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        PolyOverK::new(self.field, out)
    }
}

/// Integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly(Vec<Integer>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> IntPoly {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Integer> {
        self.0.last()
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> Integer {
        self.0.iter().fold(Integer::new(), |g, c| g.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        let mut g = self.content();
        if g == 0 {
            return self.clone();
        }
        if self.leading().is_some_and(|c| *c < 0) {
            g = -g;
        }
        IntPoly(self.0.iter().map(|c| Integer::from(c / &g)).collect())
    }

    /// `|a_0| + … + |a_n|`.
    pub fn sum_abs(&self) -> Integer {
        self.0.iter().map(|c| Integer::from(c.abs_ref())).sum()
    }

    /// `max_i |a_i|`.
    pub fn max_abs(&self) -> Integer {
        self.0
            .iter()
            .map(|c| Integer::from(c.abs_ref()))
            .max()
            .unwrap_or_default()
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly(Vec::new());
        }
        let mut out = vec![Integer::new(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += Integer::from(a * b);
            }
        }
        IntPoly::new(out)
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::from_i64s(&[1]);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn to_poly_over(&self, field: Field) -> PolyOverK {
        PolyOverK::from_int_poly(field, self)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly_terms(f, self.0.len(), |k| {
            let c = &self.0[k];
            (*c != 0).then(|| (*c < 0, Integer::from(c.abs_ref()).to_string()))
        })
    }
}

/// Integer polynomial from coefficients listed highest degree first.
pub fn int_poly_from_desc(desc: &[i64]) -> IntPoly {
    let mut v: Vec<i64> = desc.to_vec();
    v.reverse();
    IntPoly::from_i64s(&v)
}

pub(crate) fn require_nonzero(f: &PolyOverK) -> Result<usize> {
    f.degree().ok_or(Error::ZeroPolynomial)
}
