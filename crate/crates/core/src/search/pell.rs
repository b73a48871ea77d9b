//! Pell solutions as obstructions: for `K = ℚ(√−d)` and `b² − dc² = 1`,
//! `α = b/(c√−d)` makes `∏_𝔭 max(1, |α|²_𝔭) ∏_σ |1 + α²|_σ` equal to 1.

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::factor;
use crate::field::{Field, FieldElement};
use crate::valuations::nonarch_max_product;

#[derive(Clone, Debug)]
pub struct PellWitness {
    pub d: i64,
    pub b: Integer,
    pub c: Integer,
    pub alpha: FieldElement,
    /// The full local product for exponent 2, exact.
    pub product: Rational,
}

/// Fundamental solution of `b² − dc² = 1` from the continued fraction of √d.
pub fn pell_fundamental(d: i64) -> Result<(Integer, Integer)> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("d must be at least 2, got {d}")));
    }
    let dd = Integer::from(d);
    let a0 = Integer::from(dd.sqrt_ref());
    if Integer::from(a0.square_ref()) == dd {
        return Err(Error::InvalidArgument(format!("{d} is a perfect square")));
    }
    let (mut m, mut q, mut a) = (Integer::new(), Integer::from(1), a0.clone());
    let (mut h_prev, mut h) = (Integer::from(1), a0.clone());
    let (mut k_prev, mut k) = (Integer::new(), Integer::from(1));
    loop {
        let norm = Integer::from(h.square_ref()) - Integer::from(k.square_ref()) * &dd;
        if norm == 1 {
            return Ok((h, k));
        }
        m = Integer::from(&a * &q) - m;
        q = (Integer::from(&dd) - Integer::from(m.square_ref())) / q;
        a = (Integer::from(&a0 + &m)) / &q;
        let h_next = Integer::from(&a * &h) + &h_prev;
        let k_next = Integer::from(&a * &k) + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
}

pub fn pell_counterexample(d: i64) -> Result<PellWitness> {
    if d >= 2 && !factor::is_squarefree(&Integer::from(d)) {
        return Err(Error::NotSquarefree(d));
    }
    let (b, c) = pell_fundamental(d)?;
    let field = Field::quadratic(-d)?;
    let beta = FieldElement::from_integer(field, &b);
    let gamma = FieldElement::new(field, Rational::new(), Rational::from(&c));
    let alpha = beta.checked_div(&gamma)?;
    let nonarch = Rational::from(nonarch_max_product(&alpha).square_ref());
    let product = nonarch * (&alpha.pow(2) + &field.one()).norm().abs();
    Ok(PellWitness {
        d,
        b,
        c,
        alpha,
        product,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_solutions() {
        let cases = [(2, 3, 2), (5, 9, 4), (6, 5, 2), (7, 8, 3), (10, 19, 6), (13, 649, 180)];
        for (d, b, c) in cases {
            assert_eq!(pell_fundamental(d).unwrap(), (Integer::from(b), Integer::from(c)));
        }
        assert!(pell_fundamental(9).is_err());
    }

    #[test]
    fn products_are_one() {
        for d in [2, 5, 6, 7, 10, 11, 13, 14] {
            let w = pell_counterexample(d).unwrap();
            assert_eq!(w.product, 1, "d = {d}");
        }
    }

    #[test]
    fn rejects_non_squarefree() {
        assert_eq!(pell_counterexample(8).unwrap_err(), Error::NotSquarefree(8));
        assert!(pell_counterexample(4).is_err());
    }
}
