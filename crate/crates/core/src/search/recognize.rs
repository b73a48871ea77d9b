//! Exact recognition of polynomials whose roots all lie in `K^×`.

use rug::{Float, Integer, Rational};

use crate::analytic::{roots_of_embedding, RootBox, DEFAULT_ROOT_WIDTH};
use crate::error::Result;
use crate::field::{Field, FieldElement};
use crate::heights::SplitPoly;
use crate::poly::{require_nonzero, IntPoly, PolyOverK};

fn mid(iv: &crate::interval::RealInterval, prec: u32) -> Float {
    Float::with_val(prec, iv.lo() + iv.hi()) / 2u32
}

fn round_over(x: &Float, den: &Integer) -> Option<Rational> {
    let scaled = Float::with_val(x.prec(), x * den);
    let n = scaled.to_integer()?;
    Some(Rational::from((n, den.clone())))
}

/// Distinct roots of the squarefree `g` that lie in `K`, or `None` if some
/// root is missing from `K`.
fn roots_in_field(g: &PolyOverK, prec: u32) -> Result<Option<Vec<FieldElement>>> {
    let field = g.field();
    let n = g.degree().unwrap_or(0);
    // L·g has coefficients in ℤ[√D], so every root has coordinates in (1/2L)ℤ
    let l = g.monic().coeffs().iter().fold(Integer::from(1), |l, c| {
        l.lcm(c.a().denom()).lcm(c.b().denom())
    });
    let den = Integer::from(&l * 2u32);
    let sqrt_d = Float::with_val(prec, field.radicand().unwrap_or(1).unsigned_abs()).sqrt();
    let width = (0.05 / den.to_f64() / (1.0 + sqrt_d.to_f64())).min(DEFAULT_ROOT_WIDTH);
    let target = if width > 0.0 { width } else { f64::MIN_POSITIVE };
    let wp = prec.max(den.significant_bits() * 2 + 64);
    let roots0 = roots_of_embedding(g, 0, wp, target)?;
    let mut candidates: Vec<FieldElement> = Vec::new();
    let mut push = |a: Option<Rational>, b: Option<Rational>| {
        if let (Some(a), Some(b)) = (a, b) {
            candidates.push(FieldElement::new(field, a, b));
        }
    };
    let zero = || Some(Rational::new());
    match field.radicand() {
        None => {
            for r in &roots0 {
                push(round_over(&mid(&r.enclosure.re, wp), &den), zero());
            }
        }
        Some(d) if d < 0 => {
            for r in &roots0 {
                let im = Float::with_val(wp, mid(&r.enclosure.im, wp) / &sqrt_d);
                push(round_over(&mid(&r.enclosure.re, wp), &den), round_over(&im, &den));
            }
        }
        Some(_) => {
            let roots1: Vec<RootBox> = roots_of_embedding(g, 1, wp, target)?;
            for r0 in &roots0 {
                for r1 in &roots1 {
                    let z0 = mid(&r0.enclosure.re, wp);
                    let z1 = mid(&r1.enclosure.re, wp);
                    let a = Float::with_val(wp, &z0 + &z1) / 2u32;
                    let b = Float::with_val(wp, &z0 - &z1) / 2u32 / &sqrt_d;
                    push(round_over(&a, &den), round_over(&b, &den));
                }
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    let roots: Vec<FieldElement> = candidates
        .into_iter()
        .filter(|c| g.eval(c).is_zero())
        .collect();
    Ok((roots.len() == n).then_some(roots))
}

/// The exact factorisation `lead · ∏(x − α_i)` over `K`, or `None` when some
/// root lies outside `K` or is zero.
pub fn recognize_split(f: &PolyOverK, prec: u32) -> Result<Option<SplitPoly>> {
    let n = require_nonzero(f)?;
    if n == 0 || f.coeff(0).is_zero() {
        return Ok(None);
    }
    let mut roots = Vec::with_capacity(n);
    for (g, m) in f.squarefree_decomposition() {
        match roots_in_field(&g, prec)? {
            Some(rs) => {
                for r in rs {
                    roots.extend(std::iter::repeat_n(r, m as usize));
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(SplitPoly::new(f.leading().unwrap().clone(), roots)?))
}

/// [`recognize_split`] for an integer polynomial viewed over `field`.
pub fn recognize_split_int(f: &IntPoly, field: Field, prec: u32) -> Result<Option<SplitPoly>> {
    recognize_split(&f.to_poly_over(field), prec)
}
