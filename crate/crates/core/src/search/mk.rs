//! The least Mahler measure `M_K = min{M_K(α) > 1}` below a cap.

use crate::analytic::{mahler_is_one, mahler_measure, MahlerValue};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::heights::CharPoly;
use crate::interval::RealInterval;
use crate::poly::IntPoly;

/// Largest cap accepted by [`mk_search`].
pub const MK_MAX_CAP: f64 = 4.0;

#[derive(Clone, Debug)]
pub struct MkResult {
    pub value: MahlerValue,
    pub witnesses: Vec<CharPoly>,
    pub cap: f64,
    pub exhaustive: bool,
    pub candidates: usize,
}

struct Candidate {
    poly: CharPoly,
    measure: MahlerValue,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn is_square(n: i64) -> bool {
    n >= 0 && {
        let r = (n as f64).sqrt().round() as i64;
        (r - 1..=r + 1).any(|s| s >= 0 && s * s == n)
    }
}

/// Enumerates characteristic polynomials with `M ≤ cap` using
/// `|a_i| ≤ (deg choose i)·cap` and returns the least measure above 1.
///
/// Degree one covers rational `α` (raised to the field degree); degree two
/// covers irrational `α`, kept when the discriminant is `D` times a square.
pub fn mk_search(field: Field, cap: f64, prec: u32) -> Result<MkResult> {
    if !(cap > 1.0) {
        return Err(Error::InvalidArgument(format!("cap must exceed 1, got {cap}")));
    }
    if cap > MK_MAX_CAP {
        return Err(Error::InvalidArgument(format!(
            "cap {cap} exceeds the maximum {MK_MAX_CAP}"
        )));
    }
    let d = field.degree();
    let c = cap.floor() as i64;
    let mut found: Vec<Candidate> = Vec::new();
    for a in 1..=c {
        for b in -c..=c {
            if b == 0 || gcd(a, b) != 1 || a.max(b.abs()) == 1 {
                continue;
            }
            let m = a.max(b.abs()).pow(d);
            if m as f64 <= cap {
                found.push(Candidate {
                    poly: CharPoly {
                        coeffs: IntPoly::from_i64s(&[b, a]),
                        inner_degree: 1,
                        power: d,
                    },
                    measure: MahlerValue {
                        enclosure: RealInterval::from_i64(prec, m),
                        degree: d as usize,
                    },
                });
            }
        }
    }
    if let Some(dd) = field.radicand() {
        let c2 = (2.0 * cap).floor() as i64;
        for a in 1..=c {
            for b in -c2..=c2 {
                for e in -c..=c {
                    if e == 0 || gcd(gcd(a, b), e) != 1 {
                        continue;
                    }
                    let disc = b * b - 4 * a * e;
                    if disc % dd != 0 || disc / dd == 0 || !is_square(disc / dd) {
                        continue;
                    }
                    let f = IntPoly::from_i64s(&[e, b, a]);
                    if mahler_is_one(&f) {
                        continue;
                    }
                    let m = mahler_measure(&f, prec)?;
                    if m.enclosure.lo_f64() <= cap {
                        found.push(Candidate {
                            poly: CharPoly {
                                coeffs: f,
                                inner_degree: 2,
                                power: 1,
                            },
                            measure: m,
                        });
                    }
                }
            }
        }
    }
    let candidates = found.len();
    let best = found
        .iter()
        .min_by(|x, y| {
            x.measure
                .enclosure
                .lo()
                .partial_cmp(y.measure.enclosure.lo())
                .expect("finite enclosures")
        })
        .ok_or_else(|| Error::Infeasible(format!("no M_K(α) in (1, {cap}] over {field}")))?;
    let value = best.measure.clone();
    let mut witnesses: Vec<CharPoly> = found
        .iter()
        .filter(|c| c.measure.overlaps(&value))
        .map(|c| c.poly.clone())
        .collect();
    witnesses.sort();
    Ok(MkResult {
        value,
        witnesses,
        cap,
        exhaustive: true,
        candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::DEFAULT_PRECISION;
    use crate::poly::int_poly_from_desc;

    const P: u32 = DEFAULT_PRECISION;

    #[test]
    fn rationals() {
        let r = mk_search(Field::rationals(), 3.0, P).unwrap();
        assert!(r.value.enclosure.contains_f64(2.0));
        let polys: Vec<IntPoly> = r.witnesses.iter().map(|w| w.coeffs.clone()).collect();
        assert!(polys.contains(&int_poly_from_desc(&[1, -2])));
        assert!(polys.contains(&int_poly_from_desc(&[2, -1])));
    }

    #[test]
    fn gaussian() {
        let r = mk_search(Field::quadratic(-1).unwrap(), 3.0, P).unwrap();
        assert!(r.value.enclosure.contains_f64(2.0));
        assert!(r.witnesses.iter().any(|w| w.coeffs == int_poly_from_desc(&[1, -2, 2])));
        assert!(r.witnesses.iter().all(|w| w.inner_degree == 2));
    }

    #[test]
    fn golden_ratio() {
        let r = mk_search(Field::quadratic(5).unwrap(), 2.0, P).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((r.value.enclosure.mid_f64() - phi).abs() < 1e-15);
        assert!(r.witnesses.iter().any(|w| w.coeffs == int_poly_from_desc(&[1, -1, -1])));
    }

    #[test]
    fn eisenstein_and_bad_caps() {
        let r = mk_search(Field::quadratic(-3).unwrap(), 3.5, P).unwrap();
        assert!(r.value.enclosure.contains_f64(3.0));
        assert!(mk_search(Field::rationals(), 1.0, P).is_err());
        assert!(mk_search(Field::rationals(), 5.0, P).is_err());
        assert!(matches!(mk_search(Field::rationals(), 1.5, P), Err(Error::Infeasible(_))));
    }
}
