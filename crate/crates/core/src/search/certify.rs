//! Lower bounds on `C_K` from powers of a split integer polynomial:
//! `H(f^j) ≤ (|a_n| + … + |a_0|)^j`, so `C_K ≥ nj / log Σ|coeffs of f^j|`.

use rug::Integer;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::interval::RealInterval;
use crate::poly::IntPoly;
use crate::search::recognize::recognize_split_int;

#[derive(Clone, Debug)]
pub struct Certificate {
    pub field: Field,
    pub base: IntPoly,
    pub j: u32,
    pub degree: usize,
    pub sum_abs: Integer,
    /// `nj / log sum_abs`, rounded down: a rigorous lower bound on `C_K`.
    pub cert_value: f64,
    /// `nj / log H(base^j)`; infinite when the height is 1.
    pub height_trend: f64,
}

fn ratio_down(num: u64, den: &Integer, prec: u32) -> f64 {
    let l = RealInterval::from_integer(prec, den).ln();
    RealInterval::from_integer(prec, &Integer::from(num))
        .div(&l)
        .lo_f64()
}

fn ratio_mid(num: u64, den: &Integer, prec: u32) -> f64 {
    if *den == 1 {
        return f64::INFINITY;
    }
    let l = RealInterval::from_integer(prec, den).ln();
    RealInterval::from_integer(prec, &Integer::from(num))
        .div(&l)
        .mid_f64()
}

/// Certificates for `j = 1, …, j_max`, powering by iterated multiplication.
pub fn ck_lower_certify(base: &IntPoly, field: Field, j_max: u32, prec: u32) -> Result<Vec<Certificate>> {
    if base.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !base.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    if recognize_split_int(base, field, prec)?.is_none() {
        return Err(Error::NotSplit(field.to_string()));
    }
    let n = base.degree().unwrap();
    let mut power = IntPoly::from_i64s(&[1]);
    let mut out = Vec::with_capacity(j_max as usize);
    for j in 1..=j_max {
        power = power.mul(base);
        let degree = n * j as usize;
        let sum_abs = power.sum_abs();
        // f^j is primitive, so H(f^j) is its largest coefficient
        let h = power.max_abs();
        out.push(Certificate {
            field,
            base: base.clone(),
            j,
            degree,
            cert_value: ratio_down(degree as u64, &sum_abs, prec),
            height_trend: ratio_mid(degree as u64, &h, prec),
            sum_abs,
        });
    }
    Ok(out)
}

/// `n / log Σ|a_i|`, the bound from the base alone.
pub fn base_bound(base: &IntPoly, prec: u32) -> f64 {
    ratio_down(base.degree().unwrap_or(0) as u64, &base.sum_abs(), prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::DEFAULT_PRECISION;
    use crate::poly::int_poly_from_desc;

    const P: u32 = DEFAULT_PRECISION;

    #[test]
    fn x2_minus_1() {
        let c = ck_lower_certify(&int_poly_from_desc(&[1, 0, -1]), Field::rationals(), 1, P).unwrap();
        assert!((c[0].cert_value - 2.0 / 2f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn octic_certificate() {
        let k = Field::quadratic(-2).unwrap();
        let base = int_poly_from_desc(&[1, 0, 1, 0, -2]);
        let c = ck_lower_certify(&base, k, 2, P).unwrap();
        assert_eq!(c[0].sum_abs, 4);
        assert!((c[0].cert_value - 4.0 / 4f64.ln()).abs() < 1e-12);
        assert_eq!(c[1].sum_abs, 14);
        assert_eq!(c[1].degree, 8);
        assert!((c[1].cert_value - 8.0 / 14f64.ln()).abs() < 1e-12);
        assert!((c[1].height_trend - 8.0 / 4f64.ln()).abs() < 1e-12);
        assert!(c.iter().all(|x| x.cert_value >= base_bound(&base, P)));
    }

    #[test]
    fn rejects_bad_bases() {
        let k = Field::quadratic(-2).unwrap();
        assert_eq!(
            ck_lower_certify(&int_poly_from_desc(&[2, 0, -2]), k, 1, P).unwrap_err(),
            Error::NotPrimitive
        );
        assert!(matches!(
            ck_lower_certify(&int_poly_from_desc(&[1, 0, 1]), k, 1, P),
            Err(Error::NotSplit(_))
        ));
    }
}
