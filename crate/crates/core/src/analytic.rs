//! Certified complex root isolation, Mahler measures and archimedean Gauss
//! norms.
//!
//! Roots are seeded with a double-precision Aberth iteration, polished by
//! Aberth steps at the working precision and then certified with the
//! Weierstrass–Gerschgorin inclusion: for approximations `z_i` of the roots
//! of a squarefree `p` of degree `n`, with
//! `W_i = p(z_i) / (lc ∏_{j≠i} (z_i − z_j))`, every disk
//! `D(z_i − W_i, (n−1)|W_i|)` that is disjoint from the others contains
//! exactly one root.

use num_complex::Complex64;
use rug::float::Round;
use rug::{Float, Integer, Rational};

use crate::bounds::{BoundCheck, BoundName};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::interval::{ComplexBox, RealInterval, MAX_PRECISION};
use crate::poly::{require_nonzero, IntPoly, PolyOverK};

/// Default absolute width asked of root enclosures.
pub const DEFAULT_ROOT_WIDTH: f64 = 1e-30;

/// A certified root enclosure with its multiplicity.
#[derive(Clone, Debug)]
pub struct RootBox {
    pub enclosure: ComplexBox,
    pub multiplicity: u32,
}

/// Enclosure of a Mahler measure.
#[derive(Clone, Debug)]
pub struct MahlerValue {
    pub enclosure: RealInterval,
    pub degree: usize,
}

impl MahlerValue {
    pub fn width_f64(&self) -> f64 {
        self.enclosure.width_f64()
    }

    pub fn overlaps(&self, other: &MahlerValue) -> bool {
        self.enclosure.overlaps(&other.enclosure)
    }
}

#[derive(Clone, Debug)]
struct MpComplex {
    re: Float,
    im: Float,
}

impl MpComplex {
    fn new(prec: u32, re: f64, im: f64) -> MpComplex {
        MpComplex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    fn with_prec(&self, prec: u32) -> MpComplex {
        MpComplex {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }

    fn prec(&self) -> u32 {
        self.re.prec()
    }

    fn add(&self, o: &MpComplex) -> MpComplex {
        let p = self.prec();
        MpComplex {
            re: Float::with_val(p, &self.re + &o.re),
            im: Float::with_val(p, &self.im + &o.im),
        }
    }

    fn sub(&self, o: &MpComplex) -> MpComplex {
        let p = self.prec();
        MpComplex {
            re: Float::with_val(p, &self.re - &o.re),
            im: Float::with_val(p, &self.im - &o.im),
        }
    }

    fn mul(&self, o: &MpComplex) -> MpComplex {
        let p = self.prec();
        let rr = Float::with_val(p, &self.re * &o.re);
        let ii = Float::with_val(p, &self.im * &o.im);
        let ri = Float::with_val(p, &self.re * &o.im);
        let ir = Float::with_val(p, &self.im * &o.re);
        MpComplex {
            re: rr - ii,
            im: ri + ir,
        }
    }

    fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    fn recip(&self) -> MpComplex {
        let n = self.norm_sqr();
        MpComplex {
            re: Float::with_val(self.prec(), &self.re / &n),
            im: -Float::with_val(self.prec(), &self.im / &n),
        }
    }

    fn div(&self, o: &MpComplex) -> MpComplex {
        self.mul(&o.recip())
    }

    fn abs_f64(&self) -> f64 {
        self.norm_sqr().sqrt().to_f64()
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

fn box_mid(b: &ComplexBox, prec: u32) -> MpComplex {
    let mid = |iv: &RealInterval| {
        let s = Float::with_val(prec + 1, iv.lo() + iv.hi());
        Float::with_val(prec, s / 2u32)
    };
    MpComplex {
        re: mid(&b.re),
        im: mid(&b.im),
    }
}

/// Aberth iteration in double precision; `None` if it fails to converge.
fn aberth_f64(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let lc = coeffs[n];
    if !coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite()) || lc.norm() == 0.0 {
        return None;
    }
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lc).collect();
    let radius = (0..n)
        .map(|k| monic[k].norm().powf(1.0 / (n - k) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, t)
        })
        .collect();
    for _ in 0..500 {
        let mut worst = 0.0f64;
        for k in 0..n {
            let (mut p, mut dp) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
            for c in monic.iter().rev() {
                dp = dp * z[k] + p;
                p = p * z[k] + c;
            }
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| 1.0 / (z[k] - z[j]))
                .sum();
            let w = ratio / (1.0 - ratio * s);
            if !(w.re.is_finite() && w.im.is_finite()) {
                return None;
            }
            z[k] -= w;
            worst = worst.max(w.norm() / z[k].norm().max(1.0));
        }
        if worst < 1e-14 {
            return Some(z);
        }
    }
    Some(z)
}

fn aberth_mp(coeffs: &[MpComplex], seeds: &[MpComplex], prec: u32, max_iter: usize) -> Vec<MpComplex> {
    let n = coeffs.len() - 1;
    let mut z: Vec<MpComplex> = seeds.iter().map(|s| s.with_prec(prec)).collect();
    let tol = 2f64.powi(-(prec.min(1000) as i32) + 12);
    for _ in 0..max_iter {
        let mut worst = 0.0f64;
        for k in 0..n {
            let mut p = MpComplex::new(prec, 0.0, 0.0);
            let mut dp = MpComplex::new(prec, 0.0, 0.0);
            for c in coeffs.iter().rev() {
                dp = dp.mul(&z[k]).add(&p);
                p = p.mul(&z[k]).add(c);
            }
            if p.re.is_zero() && p.im.is_zero() {
                continue;
            }
            let ratio = p.div(&dp);
            let mut s = MpComplex::new(prec, 0.0, 0.0);
            for j in 0..n {
                if j != k {
                    s = s.add(&z[k].sub(&z[j]).recip());
                }
            }
            let one = MpComplex::new(prec, 1.0, 0.0);
            let w = ratio.div(&one.sub(&ratio.mul(&s)));
            if !w.is_finite() {
                continue;
            }
            z[k] = z[k].sub(&w);
            worst = worst.max(w.abs_f64() / z[k].abs_f64().max(1.0));
        }
        if worst < tol {
            break;
        }
    }
    z
}

fn eval_box(coeffs: &[ComplexBox], z: &ComplexBox) -> ComplexBox {
    let mut acc = ComplexBox::real(RealInterval::from_i64(z.prec(), 0));
    for c in coeffs.iter().rev() {
        acc = &(&acc * z) + c;
    }
    acc
}

/// Weierstrass–Gerschgorin certification; `None` if the disks overlap or
/// exceed the requested width.
fn certify(coeffs: &[ComplexBox], approx: &[MpComplex], target_width: f64) -> Option<Vec<ComplexBox>> {
    let n = approx.len();
    let lc = &coeffs[n];
    let points: Vec<ComplexBox> = approx
        .iter()
        .map(|z| ComplexBox::from_floats(z.re.clone(), z.im.clone()))
        .collect();
    let mut boxes = Vec::with_capacity(n);
    for i in 0..n {
        let num = eval_box(coeffs, &points[i]);
        let mut den = lc.clone();
        for j in 0..n {
            if j != i {
                den = &den * &(&points[i] - &points[j]);
            }
        }
        if den.contains_zero() {
            return None;
        }
        let w = num.div(&den);
        if !w.re.is_finite() || !w.im.is_finite() {
            return None;
        }
        let center = &points[i] - &w;
        let r = w.abs().hi().clone() * (n as u32 - 1);
        let enclosure = center.inflate(&r);
        let scale = approx[i].abs_f64().max(1.0);
        if enclosure.width_f64() > target_width * scale {
            return None;
        }
        boxes.push(enclosure);
    }
    for i in 0..n {
        for j in i + 1..n {
            if boxes[i].overlaps(&boxes[j]) {
                return None;
            }
        }
    }
    Some(boxes)
}

/// Isolates the (simple) roots of the polynomial whose coefficient boxes at
/// precision `p` are `coeffs_at(p)`, escalating precision as needed.
fn isolate_simple<F>(coeffs_at: F, start_prec: u32, target_width: f64) -> Result<Vec<ComplexBox>>
where
    F: Fn(u32) -> Vec<ComplexBox>,
{
    let mut prec = start_prec.max(64);
    let coeffs = coeffs_at(prec);
    let n = coeffs.len() - 1;
    if n == 0 {
        return Ok(Vec::new());
    }
    if coeffs[n].contains_zero() {
        return Err(Error::CannotCertify {
            what: "leading coefficient excludes zero",
            precision: prec,
        });
    }
    if n == 1 {
        let root = -&coeffs[0].div(&coeffs[1]);
        return Ok(vec![root]);
    }
    let mids: Vec<Complex64> = coeffs.iter().map(|c| box_mid(c, 64).to_c64()).collect();
    let mut approx: Vec<MpComplex> = match aberth_f64(&mids) {
        Some(z) => z.iter().map(|c| MpComplex::new(prec, c.re, c.im)).collect(),
        None => (0..n)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
                MpComplex::new(prec, t.cos(), t.sin())
            })
            .collect(),
    };
    let mut coeffs = coeffs;
    let mut first = true;
    loop {
        let mid: Vec<MpComplex> = coeffs.iter().map(|c| box_mid(c, prec)).collect();
        let iters = if first { 20 + 2 * n } else { 200 + 4 * n };
        approx = aberth_mp(&mid, &approx, prec, iters);
        if let Some(boxes) = certify(&coeffs, &approx, target_width) {
            return Ok(boxes);
        }
        first = false;
        if prec >= MAX_PRECISION {
            return Err(Error::CannotCertify {
                what: "root isolation",
                precision: prec,
            });
        }
        prec *= 2;
        coeffs = coeffs_at(prec);
    }
}

fn sort_roots(roots: &mut [RootBox]) {
    roots.sort_by(|a, b| {
        let (ar, ai) = a.enclosure.mid_f64();
        let (br, bi) = b.enclosure.mid_f64();
        ar.total_cmp(&br).then(ai.total_cmp(&bi))
    });
}

/// Roots of a polynomial given by complex-box coefficients. The roots must be
/// simple; repeated roots make certification fail.
pub fn complex_roots(coeffs: &[ComplexBox], target_width: f64) -> Result<Vec<RootBox>> {
    if coeffs.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let prec = coeffs.iter().map(ComplexBox::prec).max().unwrap();
    let fixed = coeffs.to_vec();
    let boxes = isolate_simple(|_| fixed.clone(), prec, target_width)?;
    let mut roots: Vec<RootBox> = boxes
        .into_iter()
        .map(|enclosure| RootBox {
            enclosure,
            multiplicity: 1,
        })
        .collect();
    sort_roots(&mut roots);
    Ok(roots)
}

/// Roots of `f_σ` with multiplicities, via an exact squarefree decomposition
/// over the field.
pub fn roots_of_embedding(f: &PolyOverK, sigma: usize, prec: u32, target_width: f64) -> Result<Vec<RootBox>> {
    require_nonzero(f)?;
    let mut roots = Vec::new();
    for (g, m) in f.squarefree_decomposition() {
        for enclosure in isolate_simple(|p| g.embed(p, sigma), prec, target_width)? {
            roots.push(RootBox {
                enclosure,
                multiplicity: m,
            });
        }
    }
    sort_roots(&mut roots);
    Ok(roots)
}

/// Roots of an integer polynomial with multiplicities.
pub fn int_poly_roots(f: &IntPoly, prec: u32) -> Result<Vec<RootBox>> {
    roots_of_embedding(&f.to_poly_over(Field::rationals()), 0, prec, DEFAULT_ROOT_WIDTH)
}

fn mahler_from_roots(lead_abs: RealInterval, roots: &[RootBox]) -> RealInterval {
    let one = RealInterval::from_i64(lead_abs.prec(), 1);
    roots.iter().fold(lead_abs, |acc, r| {
        let m = r.enclosure.abs().max(&one).pow_u(r.multiplicity);
        &acc * &m
    })
}

/// `M(f) = |a| ∏ max(1, |α_i|)` for an integer polynomial.
pub fn mahler_measure(f: &IntPoly, prec: u32) -> Result<MahlerValue> {
    mahler_measure_embedded(&f.to_poly_over(Field::rationals()), 0, prec)
}

/// Mahler measure of `f_σ`.
pub fn mahler_measure_embedded(f: &PolyOverK, sigma: usize, prec: u32) -> Result<MahlerValue> {
    let n = require_nonzero(f)?;
    let lead = f.leading().unwrap().embed(prec).swap_remove(sigma).abs();
    let roots = roots_of_embedding(f, sigma, prec, DEFAULT_ROOT_WIDTH)?;
    Ok(MahlerValue {
        enclosure: mahler_from_roots(lead, &roots),
        degree: n,
    })
}

/// Mahler measure of a polynomial with complex-box coefficients and simple roots.
pub fn mahler_measure_boxes(coeffs: &[ComplexBox]) -> Result<MahlerValue> {
    let roots = complex_roots(coeffs, DEFAULT_ROOT_WIDTH)?;
    let lead = coeffs.last().unwrap().abs();
    Ok(MahlerValue {
        enclosure: mahler_from_roots(lead, &roots),
        degree: coeffs.len() - 1,
    })
}

/// `|f|_ℂ = max_i |a_i|` for complex-box coefficients.
pub fn gauss_norm_boxes(coeffs: &[ComplexBox]) -> RealInterval {
    coeffs
        .iter()
        .map(ComplexBox::abs)
        .reduce(|a, b| a.max(&b))
        .expect("nonzero polynomial")
}

/// `∏_σ |f|_σ = ∏_σ max_i |σ(a_i)|`.
pub fn arch_gauss_product(f: &PolyOverK, prec: u32) -> Result<RealInterval> {
    require_nonzero(f)?;
    let field = f.field();
    match field.radicand() {
        // |σ(a)| = |σ̄(a)| and their product is N(a): exact
        Some(d) if d < 0 => {
            let m = f.coeffs().iter().map(|c| c.norm()).max().unwrap();
            Ok(RealInterval::from_rational(prec, &m))
        }
        None => {
            let m = f
                .coeffs()
                .iter()
                .map(|c| Rational::from(c.a().abs_ref()))
                .max()
                .unwrap();
            Ok(RealInterval::from_rational(prec, &m))
        }
        Some(_) => {
            let mut per_sigma: Vec<Option<RealInterval>> = vec![None, None];
            for c in f.coeffs() {
                for (s, a) in c.embedding_abs(prec).into_iter().enumerate() {
                    per_sigma[s] = Some(match per_sigma[s].take() {
                        None => a,
                        Some(m) => m.max(&a),
                    });
                }
            }
            Ok(per_sigma
                .into_iter()
                .flatten()
                .reduce(|a, b| &a * &b)
                .unwrap())
        }
    }
}

fn complexmahler_compare(gauss: RealInterval, mahler: &MahlerValue) -> BoundCheck {
    let prec = gauss.prec();
    let n1 = RealInterval::from_i64(prec, mahler.degree as i64 + 1);
    let rhs = mahler.enclosure.div(&n1.sqrt());
    BoundCheck::compare(BoundName::ComplexMahler, gauss, rhs)
}

/// `|f|_ℂ ≥ M(f)(n+1)^{−1/2}` for complex-box coefficients.
pub fn check_complexmahler(coeffs: &[ComplexBox]) -> Result<BoundCheck> {
    let mahler = mahler_measure_boxes(coeffs)?;
    Ok(complexmahler_compare(gauss_norm_boxes(coeffs), &mahler))
}

/// The same inequality for `f_σ`, escalating precision while inconclusive.
pub fn check_complexmahler_embedded(f: &PolyOverK, sigma: usize, prec: u32) -> Result<BoundCheck> {
    crate::bounds::escalate(prec, |p| {
        let mahler = mahler_measure_embedded(f, sigma, p)?;
        Ok(complexmahler_compare(gauss_norm_boxes(&f.embed(p, sigma)), &mahler))
    })
}

/// Exact test for `M(f) = 1` (Kronecker): `|lc| = 1` and every nonzero root
/// is a root of unity.
pub fn mahler_is_one(f: &IntPoly) -> bool {
    let Some(lc) = f.leading() else {
        return false;
    };
    if Integer::from(lc.abs_ref()) != 1 {
        return false;
    }
    let skip = f.coeffs().iter().take_while(|c| **c == 0).count();
    let g = IntPoly::new(f.coeffs()[skip..].to_vec());
    if Integer::from(g.coeffs()[0].abs_ref()) != 1 {
        return false;
    }
    let deg = g.degree().unwrap();
    if deg == 0 {
        return true;
    }
    let rat = Field::rationals();
    let gk = g.to_poly_over(rat);
    let sq = gk.exact_div(&gk.gcd(&gk.derivative())).unwrap();
    // every root of unity of degree ≤ deg has order dividing this lcm
    let mut order = Integer::from(1);
    for l in 1..=(2 * deg * deg + 2) as u64 {
        if crate::factor::totient(l) <= deg as u64 {
            order.lcm_u_mut(l as u32);
        }
    }
    let x = PolyOverK::from_i64s(rat, &[0, 1]);
    let mut acc = PolyOverK::from_i64s(rat, &[1]);
    for bit in (0..order.significant_bits()).rev() {
        acc = (&acc * &acc).divrem(&sq).1;
        if order.get_bit(bit) {
            acc = (&acc * &x).divrem(&sq).1;
        }
    }
    acc == PolyOverK::from_i64s(rat, &[1])
}

/// Lower bound of an enclosure rounded down to `f64`.
pub fn lower_f64(iv: &RealInterval) -> f64 {
    iv.lo().to_f64_round(Round::Down)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Verdict;
    use crate::interval::DEFAULT_PRECISION;
    use crate::poly::int_poly_from_desc;

    const P: u32 = DEFAULT_PRECISION;

    /// Independent route: `log M(f) = ∫_0^1 log |f(e^{2πit})| dt`, midpoint rule in f64.
    fn mahler_by_quadrature(desc: &[i64], steps: usize) -> f64 {
        let mut acc = 0.0;
        for k in 0..steps {
            let t = (k as f64 + 0.5) / steps as f64;
            let z = Complex64::from_polar(1.0, std::f64::consts::TAU * t);
            let v = desc.iter().fold(Complex64::new(0.0, 0.0), |a, &c| a * z + c as f64);
            acc += v.norm().ln();
        }
        (acc / steps as f64).exp()
    }

    #[test]
    fn roots_of_x2_plus_1() {
        let roots = int_poly_roots(&int_poly_from_desc(&[1, 0, 1]), P).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].enclosure.contains_f64(0.0, -1.0) || roots[1].enclosure.contains_f64(0.0, -1.0));
        assert!(roots.iter().all(|r| r.enclosure.width_f64() < 1e-25));
    }

    #[test]
    fn roots_of_the_octic_have_multiplicity_two() {
        let f = int_poly_from_desc(&[1, 0, 2, 0, -3, 0, -4, 0, 4]);
        let roots = int_poly_roots(&f, P).unwrap();
        assert_eq!(roots.len(), 4);
        assert!(roots.iter().all(|r| r.multiplicity == 2));
        let s2 = 2f64.sqrt();
        for (re, im) in [(1.0, 0.0), (-1.0, 0.0), (0.0, s2), (0.0, -s2)] {
            assert!(roots.iter().any(|r| r.enclosure.contains_f64(re, im)
                || (r.enclosure.mid_f64().0 - re).abs() + (r.enclosure.mid_f64().1 - im).abs() < 1e-20));
        }
    }

    #[test]
    fn smyth_cubic_roots() {
        let roots = int_poly_roots(&int_poly_from_desc(&[1, 0, -1, -1]), P).unwrap();
        let real: Vec<_> = roots.iter().filter(|r| r.enclosure.im.contains_zero()).collect();
        assert_eq!(real.len(), 1);
        assert!((real[0].enclosure.re.mid_f64() - 1.324_717_957_244_746).abs() < 1e-14);
    }

    #[test]
    fn mahler_examples() {
        let lehmer = int_poly_from_desc(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let m = mahler_measure(&lehmer, P).unwrap();
        assert!(m.enclosure.contains_f64(1.176_280_818_259_917_5) || (m.enclosure.mid_f64() - 1.176_280_818_259_917_5).abs() < 1e-15);
        let smyth = mahler_measure(&int_poly_from_desc(&[1, 0, -1, -1]), P).unwrap();
        assert!((smyth.enclosure.mid_f64() - 1.324_717_957_244_746).abs() < 1e-15);
        let cyc = mahler_measure(&int_poly_from_desc(&[1, 0, 0, 0, 0, -1]), P).unwrap();
        assert!(cyc.enclosure.contains_rational(&Rational::from(1)));
        let lin = mahler_measure(&int_poly_from_desc(&[2, -1]), P).unwrap();
        assert!(lin.enclosure.contains_rational(&Rational::from(2)));
        assert!(lin.width_f64() < 1e-60);
    }

    #[test]
    fn mahler_agrees_with_circle_integral() {
        for desc in [&[1i64, 0, -1, -1][..], &[3, -1, 4, 1, -5], &[2, 1, 3, -1, 5, 0, -7]] {
            let m = mahler_measure(&int_poly_from_desc(desc), P).unwrap();
            let q = mahler_by_quadrature(desc, 200_000);
            assert!((m.enclosure.mid_f64() - q).abs() < 1e-6, "{desc:?}: {} vs {q}", m.enclosure);
        }
    }

    #[test]
    fn appending_a_zero_root_keeps_mahler() {
        let f = int_poly_from_desc(&[2, -3, 5]);
        let g = int_poly_from_desc(&[2, -3, 5, 0]);
        let a = mahler_measure(&f, P).unwrap();
        let b = mahler_measure(&g, P).unwrap();
        assert!(a.overlaps(&b));
    }

    #[test]
    fn arch_products() {
        let k = Field::quadratic(-1).unwrap();
        let a = crate::field::FieldElement::new(k, 1.into(), 1.into());
        let f = PolyOverK::linear_factor(&a);
        assert!(arch_gauss_product(&f, P).unwrap().contains_rational(&Rational::from(2)));
        let f = PolyOverK::from_i64s(Field::rationals(), &[-1, 2]);
        assert!(arch_gauss_product(&f, P).unwrap().contains_rational(&Rational::from(2)));
        let k = Field::quadratic(2).unwrap();
        let b = crate::field::FieldElement::new(k, 1.into(), 1.into());
        let f = PolyOverK::linear_factor(&b);
        let v = arch_gauss_product(&f, P).unwrap();
        assert!((v.mid_f64() - (1.0 + 2f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn complexmahler_examples() {
        let rat = Field::rationals();
        for n in 1..8 {
            let mut c = vec![0i64; n + 1];
            c[0] = -1;
            c[n] = 1;
            let f = PolyOverK::from_i64s(rat, &c);
            assert_eq!(check_complexmahler_embedded(&f, 0, P).unwrap().verdict, Verdict::Holds);
        }
        let f = PolyOverK::from_i64s(rat, &[-2, 1]).pow(5);
        let chk = check_complexmahler_embedded(&f, 0, P).unwrap();
        assert_eq!(chk.verdict, Verdict::Holds);
        assert!(chk.lhs.contains_rational(&Rational::from(80)));
        assert!((chk.rhs.mid_f64() - 32.0 / 6f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn box_coefficients() {
        let coeffs: Vec<ComplexBox> = [1i64, 0, 1]
            .iter()
            .map(|&c| ComplexBox::real(RealInterval::from_i64(P, c)))
            .collect();
        let roots = complex_roots(&coeffs, 1e-20).unwrap();
        assert_eq!(roots.len(), 2);
        let chk = check_complexmahler(&coeffs).unwrap();
        assert_eq!(chk.verdict, Verdict::Holds);
    }

    #[test]
    fn repeated_roots_in_boxes_are_reported() {
        let coeffs: Vec<ComplexBox> = [1i64, -2, 1]
            .iter()
            .map(|&c| ComplexBox::real(RealInterval::from_i64(64, c)))
            .collect();
        assert!(matches!(complex_roots(&coeffs, 1e-10), Err(Error::CannotCertify { .. })));
    }

    #[test]
    fn kronecker_test() {
        assert!(mahler_is_one(&int_poly_from_desc(&[1, 0, 0, 0, -1])));
        assert!(mahler_is_one(&int_poly_from_desc(&[1, 1, 1, 0])));
        assert!(mahler_is_one(&int_poly_from_desc(&[1, -1, 1]).pow(3)));
        assert!(!mahler_is_one(&int_poly_from_desc(&[1, 0, -1, -1])));
        assert!(!mahler_is_one(&int_poly_from_desc(&[2, -1])));
        assert!(!mahler_is_one(&int_poly_from_desc(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])));
    }
}
