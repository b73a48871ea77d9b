//! Prime splitting in quadratic fields, 𝔭-adic valuations and the exact
//! non-archimedean part of Gauss norms.
//!
//! Split primes are handled through the completion map `ω ↦ ρ ∈ ℤ_p`, where
//! `ω` generates the ring of integers and `ρ` is a Hensel-lifted root of its
//! minimal polynomial. This avoids general ideal arithmetic.

use std::fmt;

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::factor;
use crate::field::{Field, FieldElement};
use crate::heights::PolyOverK;
use crate::interval::RealInterval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrimeKind {
    /// A prime of ℚ itself.
    Rational,
    Split,
    Inert,
    Ramified,
}

/// A nonzero prime ideal 𝔭 of the ring of integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeOfK {
    pub p: Integer,
    pub kind: PrimeKind,
    field: Field,
    /// 0 or 1 for split primes, 0 otherwise.
    pub branch: u8,
    /// Root `r` of the minimal polynomial of `ω` modulo `p^level` (split
    /// primes only). For `D ≢ 1 mod 4` this is `r² ≡ D`.
    hensel_root: Option<(Integer, u32)>,
    /// `N(𝔭) = [O_K : 𝔭]`.
    pub residue_norm: Integer,
}

/// `ord_𝔭(x)`; zero has infinite valuation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl PrimeOfK {
    pub fn field(&self) -> Field {
        self.field
    }

    /// Ramification index `e` of 𝔭 over `p`.
    pub fn ramification(&self) -> u32 {
        if self.kind == PrimeKind::Ramified {
            2
        } else {
            1
        }
    }

    pub fn hensel_root(&self) -> Option<(&Integer, u32)> {
        self.hensel_root.as_ref().map(|(r, k)| (r, *k))
    }

    /// The stored root lifted to at least `level`.
    fn root_at(&self, level: u32) -> Integer {
        let (r, k) = self.hensel_root.as_ref().expect("split prime");
        if *k >= level {
            let m = Integer::from((&self.p).pow(level));
            return Integer::from(r % &m);
        }
        hensel_lift(&omega_poly(self.field), r.clone(), *k, level, &self.p)
    }

    /// `ord_𝔭(x)`.
    pub fn valuation(&self, x: &FieldElement) -> Valuation {
        valuation(x, self)
    }

    /// `|x|_𝔭 = N(𝔭)^(−ord_𝔭 x)`; zero maps to zero.
    pub fn abs(&self, x: &FieldElement) -> Rational {
        match valuation(x, self) {
            Valuation::Infinite => Rational::new(),
            Valuation::Finite(v) => norm_power(&self.residue_norm, -v),
        }
    }
}

impl fmt::Display for PrimeOfK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PrimeKind::Rational => write!(f, "({})", self.p),
            PrimeKind::Split => write!(f, "({}, split #{})", self.p, self.branch),
            PrimeKind::Inert => write!(f, "({}, inert)", self.p),
            PrimeKind::Ramified => write!(f, "({}, ramified)", self.p),
        }
    }
}

/// `n^e` as a rational, `e` of either sign.
fn norm_power(n: &Integer, e: i64) -> Rational {
    let mag = Integer::from(n.pow(e.unsigned_abs() as u32));
    if e >= 0 {
        Rational::from(mag)
    } else {
        Rational::from((Integer::from(1), mag))
    }
}

/// Coefficients `(c0, c1)` of the minimal polynomial `t² + c1 t + c0` of `ω`.
fn omega_poly(field: Field) -> (Integer, Integer) {
    let d = field.radicand().expect("quadratic field");
    if field.half_integer_basis() {
        (Integer::from(-(d - 1) / 4), Integer::from(-1))
    } else {
        (Integer::from(-d), Integer::new())
    }
}

fn eval_omega_poly(g: &(Integer, Integer), t: &Integer) -> Integer {
    Integer::from(t * t) + Integer::from(&g.1 * t) + &g.0
}

/// Newton lift of a simple root from `p^from` to `p^to`.
fn hensel_lift(g: &(Integer, Integer), mut r: Integer, from: u32, to: u32, p: &Integer) -> Integer {
    let mut level = from.max(1);
    while level < to {
        level = (2 * level).min(to);
        let m = Integer::from(p.pow(level));
        let deriv = Integer::from(&r * 2u32) + &g.1;
        let inv = deriv
            .invert(&m)
            .expect("derivative is a unit at a split prime");
        let step = eval_omega_poly(g, &r) * inv;
        r -= step;
        r %= &m;
        if r < 0 {
            r += &m;
        }
    }
    r
}

/// Square root of `a` modulo an odd prime `p` (Tonelli–Shanks); `a` must be a residue.
fn sqrt_mod_prime(a: &Integer, p: &Integer) -> Integer {
    let mut a = Integer::from(a % p);
    if a < 0 {
        a += p;
    }
    if a == 0 {
        return a;
    }
    let pm1 = Integer::from(p - 1u32);
    let mut q = pm1.clone();
    let s = q.remove_factor_mut(&Integer::from(2));
    let mut z = Integer::from(2);
    while z.legendre(p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = z.pow_mod(&q, p).unwrap();
    let mut t = Integer::from(a.pow_mod_ref(&q, p).unwrap());
    let mut r = Integer::from(a.pow_mod_ref(&(Integer::from(&q + 1u32) / 2u32), p).unwrap());
    while t != 1 {
        let mut i = 0;
        let mut tt = t.clone();
        while tt != 1 {
            tt = Integer::from(&tt * &tt) % p;
            i += 1;
        }
        let b = c
            .pow_mod(&Integer::from(Integer::u_pow_u(2, m - i - 1)), p)
            .unwrap();
        m = i;
        c = Integer::from(&b * &b) % p;
        t = Integer::from(&t * &c) % p;
        r = Integer::from(&r * &b) % p;
    }
    r
}

/// The primes of `field` above the rational prime `p`.
pub fn split_prime(p: &Integer, field: Field) -> Result<Vec<PrimeOfK>> {
    if !factor::is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let base = PrimeOfK {
        p: p.clone(),
        kind: PrimeKind::Rational,
        field,
        branch: 0,
        hensel_root: None,
        residue_norm: p.clone(),
    };
    let Some(d) = field.radicand() else {
        return Ok(vec![base]);
    };
    let dd = Integer::from(d);
    let kind = if *p == 2 {
        match d.rem_euclid(8) {
            1 => PrimeKind::Split,
            5 => PrimeKind::Inert,
            _ => PrimeKind::Ramified,
        }
    } else {
        match dd.legendre(p) {
            0 => PrimeKind::Ramified,
            1 => PrimeKind::Split,
            _ => PrimeKind::Inert,
        }
    };
    match kind {
        PrimeKind::Ramified => Ok(vec![PrimeOfK { kind, ..base }]),
        PrimeKind::Inert => Ok(vec![PrimeOfK {
            kind,
            residue_norm: Integer::from(p * p),
            ..base
        }]),
        _ => {
            let mut roots = if *p == 2 {
                // t² − t − (D−1)/4 ≡ t² + t mod 2 when D ≡ 1 mod 8
                vec![Integer::new(), Integer::from(1)]
            } else {
                let s = sqrt_mod_prime(&dd, p);
                let neg = Integer::from(p - &s);
                if field.half_integer_basis() {
                    let half = Integer::from(p + 1u32) / 2u32;
                    [Integer::from(1 + &s), Integer::from(1 + &neg)]
                        .into_iter()
                        .map(|t| (t * &half) % p)
                        .collect()
                } else {
                    vec![s, neg]
                }
            };
            roots.sort();
            Ok(roots
                .into_iter()
                .enumerate()
                .map(|(i, r)| PrimeOfK {
                    kind,
                    branch: i as u8,
                    hensel_root: Some((r, 1)),
                    ..base.clone()
                })
                .collect())
        }
    }
}

/// Writes `x = (U + Vω)/L` with `U, V, L` integers, `L > 0` minimal.
pub(crate) fn clear_denominator(x: &FieldElement) -> (Integer, Integer, Integer) {
    let (u, v) = x.integral_basis_coords();
    let l = Integer::from(u.denom().lcm_ref(v.denom()));
    let uu = u.numer() * Integer::from(&l / u.denom());
    let vv = v.numer() * Integer::from(&l / v.denom());
    (uu, vv, l)
}

fn vp_or_inf(n: &Integer, p: &Integer) -> Option<u32> {
    (*n != 0).then(|| factor::padic_valuation(n, p))
}

/// Valuation of the integral element `U + Vω` (not both zero).
fn integral_valuation(u: &Integer, v: &Integer, prime: &PrimeOfK) -> i64 {
    let p = &prime.p;
    match prime.kind {
        PrimeKind::Rational => factor::padic_valuation(u, p) as i64,
        PrimeKind::Inert => match (vp_or_inf(u, p), vp_or_inf(v, p)) {
            (Some(a), Some(b)) => a.min(b) as i64,
            (Some(a), None) | (None, Some(a)) => a as i64,
            (None, None) => unreachable!("zero element"),
        },
        PrimeKind::Ramified => {
            let n = integral_norm(u, v, prime.field);
            factor::padic_valuation(&n, p) as i64
        }
        PrimeKind::Split => {
            let n = integral_norm(u, v, prime.field);
            let level = factor::padic_valuation(&n, p) + 1;
            let r = prime.root_at(level);
            let m = Integer::from(p.pow(level));
            let t = (Integer::from(v * &r) + u) % &m;
            debug_assert!(t != 0);
            factor::padic_valuation(&t, p) as i64
        }
    }
}

/// `N(U + Vω)`.
fn integral_norm(u: &Integer, v: &Integer, field: Field) -> Integer {
    if field.radicand().is_none() {
        return u.clone();
    }
    let (c0, c1) = omega_poly(field);
    // N(U + Vω) = U² − c1·UV + c0·V² for ω² + c1 ω + c0 = 0
    Integer::from(u * u) - c1 * Integer::from(u * v) + c0 * Integer::from(v * v)
}

/// `ord_𝔭(x)`.
pub fn valuation(x: &FieldElement, prime: &PrimeOfK) -> Valuation {
    assert_eq!(x.field(), prime.field, "prime of a different field");
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let (u, v, l) = clear_denominator(x);
    let num = integral_valuation(&u, &v, prime);
    let den = factor::padic_valuation(&l, &prime.p) as i64 * prime.ramification() as i64;
    Valuation::Finite(num - den)
}

/// Rational primes at which `x ≠ 0` can have nonzero valuation.
fn candidate_primes(x: &FieldElement) -> Vec<Integer> {
    let (u, v, l) = clear_denominator(x);
    let n = integral_norm(&u, &v, x.field());
    let mut ps = factor::prime_divisors(&Integer::from(&n * &l));
    ps.dedup();
    ps
}

fn all_primes_above(ps: &[Integer], field: Field) -> Vec<PrimeOfK> {
    ps.iter()
        .flat_map(|p| split_prime(p, field).expect("prime divisor"))
        .collect()
}

/// Every prime with `ord_𝔭(x) ≠ 0`, with the valuation.
pub fn local_factorization(x: &FieldElement) -> Result<Vec<(PrimeOfK, i64)>> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(all_primes_above(&candidate_primes(x), x.field())
        .into_iter()
        .filter_map(|pr| {
            let v = valuation(x, &pr).finite().expect("nonzero");
            (v != 0).then_some((pr, v))
        })
        .collect())
}

/// `∏_𝔭 |x|_𝔭`, exact.
pub fn nonarch_abs_product(x: &FieldElement) -> Result<Rational> {
    Ok(local_factorization(x)?
        .iter()
        .fold(Rational::from(1), |acc, (pr, v)| {
            acc * norm_power(&pr.residue_norm, -v)
        }))
}

/// `∏_𝔭 max(1, |x|_𝔭)`, exact; `1` for `x = 0`.
pub fn nonarch_max_product(x: &FieldElement) -> Rational {
    if x.is_zero() {
        return Rational::from(1);
    }
    let (_, _, l) = clear_denominator(x);
    // negative valuations only occur above primes dividing the denominator
    all_primes_above(&factor::prime_divisors(&l), x.field())
        .iter()
        .fold(Rational::from(1), |acc, pr| {
            match valuation(x, pr).finite().expect("nonzero") {
                v if v < 0 => acc * norm_power(&pr.residue_norm, -v),
                _ => acc,
            }
        })
}

/// `∏_𝔭 |f|_𝔭` with `|f|_𝔭 = max_i |a_i|_𝔭` over every coefficient.
///
/// The coefficients are scaled into `O_K[x]` by the common denominator `L`
/// and stripped of their rational content `c`; only primes dividing the gcd
/// of the remaining coefficient norms can then contribute.
pub fn nonarch_gauss_product(f: &PolyOverK) -> Result<Rational> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field();
    let d = field.degree();
    let nonzero: Vec<&FieldElement> = f.coeffs().iter().filter(|c| !c.is_zero()).collect();
    let mut l = Integer::from(1);
    for c in &nonzero {
        let (_, _, cl) = clear_denominator(c);
        l.lcm_mut(&cl);
    }
    let scaled: Vec<(Integer, Integer)> = nonzero
        .iter()
        .map(|c| {
            let (u, v, cl) = clear_denominator(c);
            let k = Integer::from(&l / &cl);
            (u * &k, v * k)
        })
        .collect();
    let mut content = Integer::new();
    for (u, v) in &scaled {
        content.gcd_mut(u);
        content.gcd_mut(v);
    }
    let prim: Vec<(Integer, Integer)> = scaled
        .into_iter()
        .map(|(u, v)| (u / &content, v / &content))
        .collect();
    // |f|_𝔭 = |L|_𝔭^{-1} |c|_𝔭 |h|_𝔭, and ∏_𝔭 |n|_𝔭 = n^{-d} for rational n
    let mut result = Rational::from((
        Integer::from((&l).pow(d)),
        Integer::from((&content).pow(d)),
    ));
    if field.degree() == 1 {
        return Ok(result);
    }
    let mut g = Integer::new();
    for (u, v) in &prim {
        g.gcd_mut(&integral_norm(u, v, field));
    }
    for pr in all_primes_above(&factor::prime_divisors(&g), field) {
        let m = prim
            .iter()
            .map(|(u, v)| integral_valuation(u, v, &pr))
            .min()
            .expect("nonzero polynomial");
        if m > 0 {
            result *= norm_power(&pr.residue_norm, -m);
        }
    }
    Ok(result)
}

/// Outcome of checking `∏_𝔭 |x|_𝔭 · ∏_σ |x|_σ = 1`.
#[derive(Clone, Debug)]
pub struct ProductFormulaCheck {
    pub nonarch: Rational,
    pub arch: RealInterval,
    pub product: RealInterval,
    pub holds: bool,
}

pub fn product_formula_check(x: &FieldElement, prec: u32) -> Result<ProductFormulaCheck> {
    let nonarch = nonarch_abs_product(x)?;
    let arch = x
        .embedding_abs(prec)
        .iter()
        .fold(RealInterval::from_i64(prec, 1), |acc, m| &acc * m);
    let product = &arch * &RealInterval::from_rational(prec, &nonarch);
    let holds = product.contains_rational(&Rational::from(1));
    Ok(ProductFormulaCheck {
        nonarch,
        arch,
        product,
        holds,
    })
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

    fn int(n: i64) -> Integer {
        Integer::from(n)
    }

    #[test]
    fn splitting_types() {
        let five = split_prime(&int(5), q(-1)).unwrap();
        assert_eq!(five.len(), 2);
        assert!(five.iter().all(|pr| pr.kind == PrimeKind::Split && pr.residue_norm == 5));
        let three = split_prime(&int(3), q(-1)).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!((three[0].kind, three[0].residue_norm.clone()), (PrimeKind::Inert, int(9)));
        let two = split_prime(&int(2), q(-2)).unwrap();
        assert_eq!((two[0].kind, two[0].residue_norm.clone()), (PrimeKind::Ramified, int(2)));
        assert_eq!(split_prime(&int(2), q(-7)).unwrap().len(), 2);
        assert_eq!(split_prime(&int(2), q(5)).unwrap()[0].kind, PrimeKind::Inert);
        assert_eq!(split_prime(&int(7), Field::rationals()).unwrap().len(), 1);
        assert_eq!(
            split_prime(&int(6), q(-1)),
            Err(Error::NotPrime("6".into()))
        );
    }

    #[test]
    fn hensel_roots_square_to_radicand() {
        let pr = &split_prime(&int(13), q(-1)).unwrap()[0];
        let r = pr.root_at(5);
        let m = int(13).pow(5);
        assert_eq!((Integer::from(&r * &r) + 1) % &m, 0);
    }

    #[test]
    fn valuation_examples() {
        let k = q(-1);
        let two = &split_prime(&int(2), k).unwrap()[0];
        assert_eq!(valuation(&k.int(2), two), Valuation::Finite(2));
        let five = split_prime(&int(5), k).unwrap();
        let x = el(k, 2, 1);
        let vs: Vec<i64> = five.iter().map(|pr| valuation(&x, pr).finite().unwrap()).collect();
        assert_eq!(vs.iter().sum::<i64>(), 1);
        assert!(vs.contains(&1) && vs.contains(&0));
        let three = &split_prime(&int(3), k).unwrap()[0];
        let third = FieldElement::from_rational(k, Rational::from((1, 3)));
        assert_eq!(valuation(&third, three), Valuation::Finite(-1));
        assert_eq!(three.abs(&third), 9);
        assert_eq!(valuation(&k.zero(), three), Valuation::Infinite);
    }

    #[test]
    fn conjugate_swaps_split_branches() {
        let k = q(-1);
        let ps = split_prime(&int(5), k).unwrap();
        let x = el(k, 2, 1).pow(3);
        assert_eq!(valuation(&x.conj(), &ps[0]), valuation(&x, &ps[1]));
    }

    #[test]
    fn split_prime_above_two() {
        let k = q(-7);
        let ps = split_prime(&int(2), k).unwrap();
        // (1 + √−7)/2 has norm 2
        let x = FieldElement::new(k, Rational::from((1, 2)), Rational::from((1, 2)));
        let vs: Vec<i64> = ps.iter().map(|pr| valuation(&x, pr).finite().unwrap()).collect();
        assert_eq!(vs.iter().sum::<i64>(), 1);
    }

    #[test]
    fn gauss_products() {
        let rat = Field::rationals();
        let f = PolyOverK::from_i64s(rat, &[6, 2]);
        assert_eq!(nonarch_gauss_product(&f).unwrap(), Rational::from((1, 2)));
        let prim = PolyOverK::from_i64s(q(-2), &[4, 0, -4, 0, -3, 0, 2, 0, 1]);
        assert_eq!(nonarch_gauss_product(&prim).unwrap(), 1);
        let k = q(-1);
        let f = PolyOverK::new(k, vec![k.int(2), el(k, 1, 1)]);
        assert_eq!(nonarch_gauss_product(&f).unwrap(), Rational::from((1, 2)));
    }

    #[test]
    fn gauss_product_sees_cancelling_split_valuations() {
        // a = (2+i)/(2−i) has norm 1 but valuations ±1 above 5
        let k = q(-1);
        let a = el(k, 2, 1).checked_div(&el(k, 2, -1)).unwrap();
        assert_eq!(a.norm(), 1);
        let f = PolyOverK::new(k, vec![k.one(), a]);
        assert_eq!(nonarch_gauss_product(&f).unwrap(), 5);
    }

    #[test]
    fn product_formula_examples() {
        let p = DEFAULT_PRECISION;
        let seven = Field::rationals().int(7);
        let c = product_formula_check(&seven, p).unwrap();
        assert!(c.holds);
        assert_eq!(c.nonarch, Rational::from((1, 7)));
        let c = product_formula_check(&el(q(-1), 1, 1), p).unwrap();
        assert!(c.holds);
        assert_eq!(c.nonarch, Rational::from((1, 2)));
        let x = FieldElement::from_rational(q(5), Rational::from((3, 2)));
        let c = product_formula_check(&x, p).unwrap();
        assert!(c.holds);
        assert!(c.product.width_f64() < 1e-60);
    }

    #[test]
    fn local_factorization_recovers_norm() {
        let k = q(10);
        let x = el(k, 7, -3).checked_div(&el(k, 4, 1)).unwrap();
        let prod = local_factorization(&x)
            .unwrap()
            .iter()
            .fold(Rational::from(1), |acc, (pr, v)| acc * norm_power(&pr.residue_norm, *v));
        assert_eq!(prod, Rational::from(x.norm().abs_ref()));
    }

    #[test]
    fn max_product_of_half() {
        let k = q(-1);
        let half = FieldElement::from_rational(k, Rational::from((1, 2)));
        assert_eq!(nonarch_max_product(&half), 4);
        assert_eq!(nonarch_max_product(&el(k, 1, 1)), 1);
    }
}
