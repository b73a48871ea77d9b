//! The height inequalities as checkable interval comparisons, the `C_K`
//! interval, lower floors for Mahler measures and the uniform constant for
//! roots of bounded degree.

use std::fmt;

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Rational;
use serde::{Deserialize, Serialize};

use crate::analytic::{check_complexmahler_embedded, mahler_is_one, mahler_measure};
use crate::error::{Error, Result};
use crate::factor::{lcm_u64, totient};
use crate::field::{Field, FieldElement};
use crate::heights::{count_unity_roots, expand, height, mk_alpha_local, SplitPoly};
use crate::interval::{RealInterval, MAX_PRECISION};
use crate::poly::IntPoly;

/// Smyth's constant, the real root of `x³ − x − 1`.
pub const SMYTH: f64 = 1.324_717_957_244_746;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundName {
    AlphaBound1,
    Bound1,
    AlphaBound2,
    Bound2,
    ComplexMahler,
    Combined,
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundName::AlphaBound1 => "alphabound1",
            BoundName::Bound1 => "bound1",
            BoundName::AlphaBound2 => "alphabound2",
            BoundName::Bound2 => "bound2",
            BoundName::ComplexMahler => "complexmahler",
            BoundName::Combined => "combined",
        })
    }
}

/// `lhs ≥ rhs` compared as enclosures.
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub name: BoundName,
    pub lhs: RealInterval,
    pub rhs: RealInterval,
    pub verdict: Verdict,
    /// `lhs.lo − rhs.hi`, rounded down.
    pub margin: f64,
}

impl BoundCheck {
    pub fn compare(name: BoundName, lhs: RealInterval, rhs: RealInterval) -> BoundCheck {
        let verdict = if lhs.certainly_ge(&rhs) {
            Verdict::Holds
        } else if lhs.certainly_lt(&rhs) {
            Verdict::Fails
        } else {
            Verdict::Inconclusive
        };
        let diff = RealInterval::new(lhs.lo().clone(), lhs.lo().clone())
            - RealInterval::new(rhs.hi().clone(), rhs.hi().clone());
        BoundCheck {
            name,
            margin: diff.lo_f64(),
            lhs,
            rhs,
            verdict,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// Re-runs `check` at doubled precision while it is inconclusive.
pub fn escalate<F>(prec: u32, check: F) -> Result<BoundCheck>
where
    F: Fn(u32) -> Result<BoundCheck>,
{
    let mut prec = prec;
    loop {
        let c = check(prec)?;
        if c.verdict != Verdict::Inconclusive || prec >= MAX_PRECISION {
            return Ok(c);
        }
        prec = (prec * 2).min(MAX_PRECISION);
    }
}

fn n_plus_one(prec: u32, s: &SplitPoly) -> RealInterval {
    RealInterval::from_i64(prec, s.degree() as i64 + 1)
}

/// `H(f)^d ≥ (n+1)^{−d/2} ∏_i M_K(α_i)`.
pub fn check_alphabound1(s: &SplitPoly, prec: u32) -> Result<BoundCheck> {
    let f = expand(s);
    escalate(prec, |p| {
        let d = s.field().degree();
        let lhs = height(&f, p)?.height_pow_d();
        let roots = s
            .distinct_roots()
            .iter()
            .fold(RealInterval::from_i64(p, 1), |acc, (r, m)| {
                &acc * &mk_alpha_local(r, p).enclosure.pow_u(*m)
            });
        let scale = n_plus_one(p, s).pow_u(d).sqrt().recip();
        Ok(BoundCheck::compare(BoundName::AlphaBound1, lhs, &scale * &roots))
    })
}

/// `log H(f) ≥ (n−r)/d · log M_K − ½ log(n+1)`, for a lower bound `mk` of `M_K`.
pub fn check_bound1(s: &SplitPoly, mk: f64, prec: u32) -> Result<BoundCheck> {
    if !(mk > 1.0) {
        return Err(Error::InvalidArgument(format!("M_K bound must exceed 1, got {mk}")));
    }
    let f = expand(s);
    let r = count_unity_roots(s);
    escalate(prec, |p| {
        let d = s.field().degree() as i64;
        let lhs = height(&f, p)?.log_height;
        let main = RealInterval::from_f64(p, mk)
            .ln()
            .mul_i64((s.degree() - r) as i64)
            .div_i64(d);
        let rhs = &main - &n_plus_one(p, s).ln().div_i64(2);
        Ok(BoundCheck::compare(BoundName::Bound1, lhs, rhs))
    })
}

/// `∏_𝔭 max(1, |α|_𝔭^w) ∏_σ |1 + α^w|_σ`, exact.
///
/// Over ℚ and quadratic fields the archimedean product is `|N(1 + α^w)|`.
pub fn alphabound2_factor(alpha: &FieldElement) -> Rational {
    let w = alpha.field().roots_of_unity();
    let nonarch = crate::valuations::nonarch_max_product(alpha).pow(w as i32);
    let shifted = &alpha.pow(w) + &alpha.field().one();
    nonarch * shifted.norm().abs()
}

/// `H(f)^{dw} ≥ (n+1)^{−dw} ∏_i ∏_𝔭 max(1, |α_i|_𝔭^w) ∏_σ |1 + α_i^w|_σ`.
pub fn check_alphabound2(s: &SplitPoly, prec: u32) -> Result<BoundCheck> {
    let f = expand(s);
    let field = s.field();
    let dw = field.degree() * field.roots_of_unity();
    let factor = s
        .distinct_roots()
        .iter()
        .fold(Rational::from(1), |acc, (r, m)| {
            acc * alphabound2_factor(r).pow(*m as i32)
        });
    escalate(prec, |p| {
        let lhs = height(&f, p)?
            .height_pow_d()
            .pow_u(field.roots_of_unity());
        let rhs = RealInterval::from_rational(p, &factor).div(&n_plus_one(p, s).pow_u(dw));
        Ok(BoundCheck::compare(BoundName::AlphaBound2, lhs, rhs))
    })
}

/// `log H(f) ≥ (r/w) log 2 − log(n+1)`.
pub fn check_bound2(s: &SplitPoly, prec: u32) -> Result<BoundCheck> {
    let f = expand(s);
    let r = count_unity_roots(s) as i64;
    let w = s.field().roots_of_unity() as i64;
    escalate(prec, |p| {
        let lhs = height(&f, p)?.log_height;
        let rhs = &RealInterval::ln2(p).mul_i64(r).div_i64(w) - &n_plus_one(p, s).ln();
        Ok(BoundCheck::compare(BoundName::Bound2, lhs, rhs))
    })
}

/// `(w/log 2 + d/log mk) log H(f) ≥ n − (w/(2 log 2) + d/log mk) log(n+1)`.
pub fn check_combined(s: &SplitPoly, mk: f64, prec: u32) -> Result<BoundCheck> {
    if !(mk > 1.0) {
        return Err(Error::InvalidArgument(format!("M_K bound must exceed 1, got {mk}")));
    }
    let f = expand(s);
    let field = s.field();
    escalate(prec, |p| {
        let w = field.roots_of_unity() as i64;
        let d = field.degree() as i64;
        let ln2 = RealInterval::ln2(p);
        let mk_term = RealInterval::from_i64(p, d).div(&RealInterval::from_f64(p, mk).ln());
        let lhs_coef = &RealInterval::from_i64(p, w).div(&ln2) + &mk_term;
        let rhs_coef = &RealInterval::from_i64(p, w).div(&ln2.mul_i64(2)) + &mk_term;
        let lhs = &lhs_coef * &height(&f, p)?.log_height;
        let rhs = &RealInterval::from_i64(p, s.degree() as i64) - &(&rhs_coef * &n_plus_one(p, s).ln());
        Ok(BoundCheck::compare(BoundName::Combined, lhs, rhs))
    })
}

/// `|f_σ|_ℂ ≥ M(f_σ)(n+1)^{−1/2}` for every embedding of `expand(s)`.
pub fn check_complexmahler_split(s: &SplitPoly, prec: u32) -> Result<Vec<BoundCheck>> {
    let f = expand(s);
    (0..s.field().degree() as usize)
        .map(|sigma| check_complexmahler_embedded(&f, sigma, prec))
        .collect()
}

/// Bounds on `C_K` from the combined inequality and the power families.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CkInterval {
    pub lower: f64,
    pub upper: f64,
    pub exact: bool,
}

/// `w/log 2 ≤ C_K ≤ w/log 2 + d/log M_K`, collapsing to the lower end for
/// totally real fields, ℚ(√−1) and ℚ(√−3). Without `mk` the upper end of a
/// non-exact field is infinite.
pub fn ck_interval(field: Field, mk: Option<f64>) -> Result<CkInterval> {
    if let Some(m) = mk {
        if !(m > 1.0) {
            return Err(Error::InvalidArgument(format!("M_K bound must exceed 1, got {m}")));
        }
    }
    let lower = field.roots_of_unity() as f64 / std::f64::consts::LN_2;
    let exact = field.is_totally_real() || matches!(field.radicand(), Some(-1) | Some(-3));
    let upper = if exact {
        lower
    } else {
        match mk {
            Some(m) => lower + field.degree() as f64 / m.ln(),
            None => f64::INFINITY,
        }
    };
    Ok(CkInterval { lower, upper, exact })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FloorSource {
    Linear,
    Smyth,
    Voutier,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MahlerFloor {
    pub value: f64,
    pub source: FloorSource,
    /// The value does not exceed 1 and therefore says nothing.
    pub vacuous: bool,
}

/// `1 + ¼ (log log n / log n)³`.
pub fn voutier(degree: u32) -> f64 {
    let l = (degree as f64).ln();
    1.0 + 0.25 * (l.ln() / l).powi(3)
}

/// The best stated lower bound for `M(α) > 1` with `deg α = degree`.
/// Odd degrees, or `reciprocal_allowed = false`, admit Smyth's bound.
pub fn mahler_floor(degree: u32, reciprocal_allowed: bool) -> Result<MahlerFloor> {
    match degree {
        0 => Err(Error::InvalidArgument("degree must be at least 1".into())),
        1 => Ok(MahlerFloor {
            value: 2.0,
            source: FloorSource::Linear,
            vacuous: false,
        }),
        n => {
            let v = voutier(n);
            if (!reciprocal_allowed || n % 2 == 1) && SMYTH > v {
                Ok(MahlerFloor {
                    value: SMYTH,
                    source: FloorSource::Smyth,
                    vacuous: false,
                })
            } else {
                Ok(MahlerFloor {
                    value: v,
                    source: FloorSource::Voutier,
                    vacuous: v <= 1.0,
                })
            }
        }
    }
}

/// Largest number of integer polynomials a single `t2_constant` call will scan.
pub const T2_ENUMERATION_LIMIT: f64 = 5e8;
pub const T2_MAX_DEGREE: u32 = 6;

#[derive(Clone, Debug, Serialize)]
pub struct T2Constant {
    pub k: u32,
    pub w: u64,
    pub m_floor: f64,
    pub c: f64,
    pub cap: f64,
    /// Polynomial attaining the floor, when one below the cap was found.
    pub witness: Option<String>,
    pub polynomials_scanned: u64,
}

/// `lcm{ℓ : φ(ℓ) ≤ k}`; `φ(ℓ) ≥ √(ℓ/2)` bounds the range.
pub fn unity_exponent(k: u32) -> u64 {
    let top = 2 * (k as u64) * (k as u64) + 2;
    (1..=top)
        .filter(|&l| totient(l) <= k as u64)
        .fold(1, lcm_u64)
}

fn binom(n: u32, i: u32) -> f64 {
    (0..i).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

/// `(n choose i)·cap` bounds every coefficient of a polynomial with `M ≤ cap`.
fn coefficient_bounds(n: u32, cap: f64) -> Vec<i64> {
    (0..=n).map(|i| (binom(n, i) * cap).floor() as i64).collect()
}

/// Graeffe step: `g(x²) = (−1)^n f(x) f(−x)`, so `M(g) = M(f)²`.
fn graeffe(f: &[f64]) -> Vec<f64> {
    let n = f.len() - 1;
    let mut g = vec![0.0; n + 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in f.iter().enumerate() {
            if (i + j) % 2 == 0 {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                g[(i + j) / 2] += a * b * sign;
            }
        }
    }
    g
}

/// `true` if some Graeffe iterate certifies `M(f) > cap`.
fn graeffe_exceeds(f: &[i64], cap: f64) -> bool {
    let n = (f.len() - 1) as u32;
    let mut g: Vec<f64> = f.iter().map(|&c| c as f64).collect();
    let mut bound = cap;
    for _ in 0..4 {
        g = graeffe(&g);
        bound *= bound;
        // 1% slack absorbs floating error in the iterates
        if g
            .iter()
            .enumerate()
            .any(|(i, c)| c.abs() > binom(n, i as u32) * bound * 1.01 + 0.5)
        {
            return true;
        }
    }
    false
}

struct Found {
    lo: RealInterval,
    poly: IntPoly,
}

fn scan_degree(n: u32, cap: f64, prec: u32) -> Result<(Option<Found>, u64)> {
    let bounds = coefficient_bounds(n, cap);
    let lead_max = cap.floor() as i64;
    // M(−f) = M(f), so a_n > 0
    let strata: Vec<(i64, i64)> = (1..=lead_max)
        .flat_map(|an| (-lead_max..=lead_max).filter(|&a0| a0 != 0).map(move |a0| (an, a0)))
        .collect();
    let results: Vec<Result<(Option<Found>, u64)>> = strata
        .par_iter()
        .map(|&(an, a0)| {
            let mut best: Option<Found> = None;
            let mut scanned = 0u64;
            let mut coeffs = vec![0i64; n as usize + 1];
            coeffs[0] = a0;
            coeffs[n as usize] = an;
            let inner: Vec<usize> = (1..n as usize).collect();
            for &i in &inner {
                coeffs[i] = -bounds[i];
            }
            loop {
                scanned += 1;
                if !graeffe_exceeds(&coeffs, cap) {
                    let f = IntPoly::from_i64s(&coeffs);
                    if !mahler_is_one(&f) {
                        let m = mahler_measure(&f, prec)?.enclosure;
                        if m.lo_f64() <= cap {
                            let better = best.as_ref().is_none_or(|b| m.lo() < b.lo.lo());
                            if better {
                                best = Some(Found { lo: m, poly: f });
                            }
                        }
                    }
                }
                // odometer over the inner coefficients
                let mut pos = 0;
                loop {
                    if pos == inner.len() {
                        return Ok((best, scanned));
                    }
                    let i = inner[pos];
                    if coeffs[i] < bounds[i] {
                        coeffs[i] += 1;
                        break;
                    }
                    coeffs[i] = -bounds[i];
                    pos += 1;
                }
            }
        })
        .collect();
    let mut best: Option<Found> = None;
    let mut total = 0;
    for r in results {
        let (found, scanned) = r?;
        total += scanned;
        if let Some(f) = found {
            let better = best.as_ref().is_none_or(|b| {
                f.lo.lo() < b.lo.lo() || (f.lo.lo() == b.lo.lo() && f.poly < b.poly)
            });
            if better {
                best = Some(f);
            }
        }
    }
    Ok((best, total))
}

/// The constant `C = w/log 2 + k/log M` for polynomials whose roots are
/// nonzero algebraic numbers of degree at most `k`.
///
/// `M` is the least Mahler measure in `(1, cap]` of an integer polynomial of
/// degree `≤ k` with nonzero constant term, found by exhaustive enumeration
/// under the coefficient bounds `|a_i| ≤ (k choose i)·cap`, or `cap` itself
/// when there is none.
pub fn t2_constant(k: u32, cap: f64, prec: u32) -> Result<T2Constant> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if !(cap > 1.0) {
        return Err(Error::InvalidArgument(format!("cap must exceed 1, got {cap}")));
    }
    if k > T2_MAX_DEGREE {
        return Err(Error::Infeasible(format!(
            "degree {k} exceeds the enumeration limit {T2_MAX_DEGREE}"
        )));
    }
    let estimate: f64 = (1..=k)
        .map(|n| {
            coefficient_bounds(n, cap)
                .iter()
                .map(|&b| (2 * b + 1) as f64)
                .product::<f64>()
        })
        .sum();
    if estimate > T2_ENUMERATION_LIMIT {
        return Err(Error::Infeasible(format!(
            "about {estimate:.3e} polynomials for k = {k}, cap = {cap}"
        )));
    }
    let mut best: Option<Found> = None;
    let mut scanned = 0;
    for n in 1..=k {
        let (found, s) = scan_degree(n, cap, prec)?;
        scanned += s;
        if let Some(f) = found {
            if best.as_ref().is_none_or(|b| f.lo.lo() < b.lo.lo()) {
                best = Some(f);
            }
        }
    }
    let (m_floor, witness) = match best {
        Some(f) => (f.lo.lo_f64().min(cap), Some(f.poly.to_string())),
        None => (cap, None),
    };
    let w = unity_exponent(k);
    let c = w as f64 / std::f64::consts::LN_2 + k as f64 / m_floor.ln();
    Ok(T2Constant {
        k,
        w,
        m_floor,
        c,
        cap,
        witness,
        polynomials_scanned: scanned,
    })
}

/// All five checks on one split polynomial; `mk` feeds `check_bound1`.
pub fn check_all(s: &SplitPoly, mk: f64, prec: u32) -> Result<Vec<BoundCheck>> {
    let mut out = vec![
        check_alphabound1(s, prec)?,
        check_bound1(s, mk, prec)?,
        check_alphabound2(s, prec)?,
        check_bound2(s, prec)?,
    ];
    out.extend(check_complexmahler_split(s, prec)?);
    Ok(out)
}
