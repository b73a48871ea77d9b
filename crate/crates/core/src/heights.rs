//! Global heights, characteristic polynomials and `M_K(α)`.

use std::fmt;

use rug::{Integer, Rational};

use crate::analytic::{mahler_measure, MahlerValue};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::interval::RealInterval;
use crate::poly::{require_nonzero, IntPoly};
use crate::valuations::{nonarch_gauss_product, nonarch_max_product};

pub use crate::analytic::arch_gauss_product;
pub use crate::poly::PolyOverK;

/// `lead · ∏ (x − α_i)` with every `α_i ∈ K^×`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPoly {
    lead: FieldElement,
    roots: Vec<FieldElement>,
    field: Field,
}

impl SplitPoly {
    pub fn new(lead: FieldElement, mut roots: Vec<FieldElement>) -> Result<SplitPoly> {
        let field = lead.field();
        if lead.is_zero() {
            return Err(Error::InvalidArgument("leading coefficient is zero".into()));
        }
        if roots.is_empty() {
            return Err(Error::InvalidArgument("a split polynomial needs at least one root".into()));
        }
        if roots.iter().any(|r| r.field() != field) {
            return Err(Error::FieldMismatch);
        }
        if roots.iter().any(FieldElement::is_zero) {
            return Err(Error::ZeroRoot);
        }
        roots.sort();
        Ok(SplitPoly { lead, roots, field })
    }

    /// Monic with the given roots.
    pub fn monic(field: Field, roots: Vec<FieldElement>) -> Result<SplitPoly> {
        SplitPoly::new(field.one(), roots)
    }

    pub fn lead(&self) -> &FieldElement {
        &self.lead
    }

    /// Roots with repetition, sorted.
    pub fn roots(&self) -> &[FieldElement] {
        &self.roots
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Distinct roots with multiplicities.
    pub fn distinct_roots(&self) -> Vec<(FieldElement, u32)> {
        let mut out: Vec<(FieldElement, u32)> = Vec::new();
        for r in &self.roots {
            match out.last_mut() {
                Some((prev, m)) if prev == r => *m += 1,
                _ => out.push((r.clone(), 1)),
            }
        }
        out
    }

    /// The same roots, each repeated `k` times, leading coefficient raised to `k`.
    pub fn pow(&self, k: u32) -> SplitPoly {
        let roots = self
            .roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.clone(), k as usize))
            .collect();
        SplitPoly::new(self.lead.pow(k), roots).expect("valid split polynomial")
    }
}

impl fmt::Display for SplitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.lead.is_one() {
            write!(f, "({})", self.lead)?;
        }
        for (r, m) in self.distinct_roots() {
            write!(f, "(x-({r}))")?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

/// Exact coefficients of `lead · ∏ (x − α_i)`.
pub fn expand(s: &SplitPoly) -> PolyOverK {
    s.roots
        .iter()
        .fold(PolyOverK::constant(s.lead.clone()), |acc, r| {
            &acc * &PolyOverK::linear_factor(r)
        })
}

#[derive(Clone, Debug)]
pub struct HeightReport {
    pub nonarch: Rational,
    pub arch: RealInterval,
    pub height: RealInterval,
    pub log_height: RealInterval,
    pub degree: usize,
}

impl HeightReport {
    /// `H(f)^d = ∏_𝔭 |f|_𝔭 ∏_σ |f|_σ`.
    pub fn height_pow_d(&self) -> RealInterval {
        &self.arch * &RealInterval::from_rational(self.arch.prec(), &self.nonarch)
    }
}

/// `H(f) = (∏_𝔭 |f|_𝔭 ∏_σ |f|_σ)^{1/d}`, Gauss norms taken over every
/// coefficient including `a_0`.
pub fn height(f: &PolyOverK, prec: u32) -> Result<HeightReport> {
    let degree = require_nonzero(f)?;
    let d = f.field().degree();
    let nonarch = nonarch_gauss_product(f)?;
    let arch = arch_gauss_product(f, prec)?;
    let product = &arch * &RealInterval::from_rational(prec, &nonarch);
    let height = product.root(d);
    let log_height = product.ln().div_i64(d as i64);
    Ok(HeightReport {
        nonarch,
        arch,
        height,
        log_height,
        degree,
    })
}

/// The characteristic polynomial of `α` for `K/ℚ`: the primitive minimal
/// polynomial of `α` over ℤ, to be raised to `power = [K : ℚ(α)]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly {
    pub coeffs: IntPoly,
    pub inner_degree: usize,
    pub power: u32,
}

impl CharPoly {
    /// `coeffs^power`.
    pub fn expanded(&self) -> IntPoly {
        self.coeffs.pow(self.power)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 1 {
            write!(f, "{}", self.coeffs)
        } else {
            write!(f, "({})^{}", self.coeffs, self.power)
        }
    }
}

fn primitive_from_rationals(coeffs: &[Rational]) -> IntPoly {
    let l = coeffs
        .iter()
        .fold(Integer::from(1), |l, c| l.lcm(c.denom()));
    let ints: Vec<Integer> = coeffs
        .iter()
        .map(|c| Rational::from(c * &l).into_numer_denom().0)
        .collect();
    IntPoly::new(ints).primitive_part()
}

pub fn char_poly(alpha: &FieldElement) -> CharPoly {
    let d = alpha.field().degree();
    if alpha.is_rational() {
        let a = alpha.a();
        CharPoly {
            coeffs: primitive_from_rationals(&[Rational::from(-a), Rational::from(1)]),
            inner_degree: 1,
            power: d,
        }
    } else {
        let t = alpha.trace();
        CharPoly {
            coeffs: primitive_from_rationals(&[alpha.norm(), -t, Rational::from(1)]),
            inner_degree: 2,
            power: 1,
        }
    }
}

/// `M_K(α)` as the Mahler measure of the characteristic polynomial.
pub fn mk_alpha(alpha: &FieldElement, prec: u32) -> Result<MahlerValue> {
    let cp = char_poly(alpha);
    let m = mahler_measure(&cp.coeffs, prec)?;
    Ok(MahlerValue {
        enclosure: m.enclosure.pow_u(cp.power),
        degree: alpha.field().degree() as usize,
    })
}

/// `M_K(α) = ∏_𝔭 max(1, |α|_𝔭) ∏_σ max(1, |α|_σ)` from local data.
pub fn mk_alpha_local(alpha: &FieldElement, prec: u32) -> MahlerValue {
    let one = RealInterval::from_i64(prec, 1);
    let arch = alpha
        .embedding_abs(prec)
        .iter()
        .fold(one.clone(), |acc, a| &acc * &a.max(&one));
    let nonarch = RealInterval::from_rational(prec, &nonarch_max_product(alpha));
    MahlerValue {
        enclosure: &arch * &nonarch,
        degree: alpha.field().degree() as usize,
    }
}

/// Number of roots, with multiplicity, that are roots of unity.
pub fn count_unity_roots(s: &SplitPoly) -> usize {
    s.distinct_roots()
        .iter()
        .filter(|(r, _)| r.is_root_of_unity())
        .map(|(_, m)| *m as usize)
        .sum()
}
