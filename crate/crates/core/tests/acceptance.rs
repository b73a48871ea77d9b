use std::time::{Duration, Instant};

use rayon::prelude::*;
use rug::{Integer, Rational};

use splitheight::analytic::lower_f64;
use splitheight::bounds::{check_all, Verdict};
use splitheight::sample::{random_element, random_nonzero_element, random_split_poly, rng};
use splitheight::search::certify::Certificate;
use splitheight::{
    ck_interval, ck_lower_certify, expand, height, lattice_case_check, mahler_measure, mk_search,
    nonarch_gauss_product, parse_field, parse_poly, pell_counterexample, product_formula_check, t2_constant,
    int_poly_from_desc, Field, FieldElement, PolyOverK, SplitPoly, DEFAULT_PRECISION,
};

const P: u32 = DEFAULT_PRECISION;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn fields() -> Vec<Field> {
    ["Q", "Q(sqrt(-1))", "Q(sqrt(-3))", "Q(sqrt(5))", "Q(sqrt(-2))"]
        .iter()
        .map(|s| parse_field(s).unwrap())
        .collect()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn binom(n: u32, k: u32) -> Integer {
    Integer::from(Integer::binomial_u(n, k))
}

/// Mahler measure of `a t² + b t + c` from the quadratic formula.
fn quadratic_mahler(a: i64, b: i64, c: i64) -> f64 {
    let (a, b, c) = (a as f64, b as f64, c as f64);
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        let r = (c / a).sqrt();
        a.abs() * r.max(1.0).powi(2)
    } else {
        let s = disc.sqrt();
        let r1 = ((-b + s) / (2.0 * a)).abs();
        let r2 = ((-b - s) / (2.0 * a)).abs();
        a.abs() * r1.max(1.0) * r2.max(1.0)
    }
}

/// Least `M_K(α) > 1` over `α = (u + v√D)/w` in a box, from the characteristic
/// polynomial `w²t² − 2uw t + (u² − Dv²)`.
fn direct_mk(d: Option<i64>, num: i64, den: i64) -> f64 {
    let mut best = f64::INFINITY;
    for w in 1..=den {
        for u in -num..=num {
            for v in -num..=num {
                let m = match d {
                    None if v != 0 => continue,
                    _ if v == 0 => {
                        if u == 0 {
                            continue;
                        }
                        let g = gcd(u, w);
                        let m = (u.abs() / g).max(w / g) as f64;
                        if d.is_some() {
                            m * m
                        } else {
                            m
                        }
                    }
                    Some(d) => {
                        let (a, b, c) = (w * w, -2 * u * w, u * u - d * v * v);
                        let g = gcd(gcd(a, b), c);
                        quadratic_mahler(a / g, b / g, c / g)
                    }
                    None => unreachable!(),
                };
                if m > 1.0 + 1e-9 && m < best {
                    best = m;
                }
            }
        }
    }
    best
}

fn mahler_targets() -> Outcome {
    let t = Instant::now();
    let lehmer = mahler_measure(&int_poly_from_desc(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]), P).unwrap();
    let t1 = t.elapsed();
    let t = Instant::now();
    let smyth = mahler_measure(&int_poly_from_desc(&[1, 0, -1, -1]), P).unwrap();
    let t2 = t.elapsed();
    let near = |m: &splitheight::MahlerValue, x: f64| (m.enclosure.lo_f64() - x).abs() < 1e-3 && (m.enclosure.hi_f64() - x).abs() < 1e-3;
    let ok = near(&lehmer, 1.176) && near(&smyth, 1.325) && t1 < Duration::from_secs(1) && t2 < Duration::from_secs(1);
    outcome(
        ok,
        format!("M = {} and {}", lehmer.enclosure.display(12), smyth.enclosure.display(12)),
    )
}

fn counterexample() -> Outcome {
    let k = parse_field("Q(sqrt(-2))").unwrap();
    let f = parse_poly("x^8+2x^6-3x^4-4x^2+4", k).unwrap();
    let h = height(&f, P).unwrap();
    let exact = h.height.contains_f64(4.0) && h.height.width_f64() < 1e-40;
    let base = int_poly_from_desc(&[1, 0, 1, 0, -2]);
    let certs = ck_lower_certify(&base, k, 2, P).unwrap();
    let c2 = certs.iter().find(|c| c.j == 2).unwrap();
    let target = 8.0 / 14f64.ln();
    let ok = exact && (c2.cert_value - target).abs() < 1e-6 && c2.cert_value > 2.0 / std::f64::consts::LN_2;
    outcome(ok, format!("H = {}, cert(j=2) = {:.9}", h.height.display(12), c2.cert_value))
}

/// Largest coefficient of `((x² + 2)(x² − 1))^j`, expanded in `y = x²`.
fn direct_max_coefficient(j: u32) -> Integer {
    let a: Vec<Integer> = (0..=j)
        .map(|k| binom(j, k) * (Integer::from(1) << (j - k)))
        .collect();
    let b: Vec<Integer> = (0..=j)
        .map(|k| {
            let c = binom(j, k);
            if (j - k).is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .collect();
    let mut prod = vec![Integer::new(); 2 * j as usize + 1];
    for (i, x) in a.iter().enumerate() {
        for (k, y) in b.iter().enumerate() {
            prod[i + k] += Integer::from(x * y);
        }
    }
    prod.into_iter().map(|c| c.abs()).max().unwrap()
}

fn higher_powers() -> Outcome {
    let k = parse_field("Q(sqrt(-2))").unwrap();
    let base = int_poly_from_desc(&[1, 0, 1, 0, -2]);
    let certs: Vec<Certificate> = ck_lower_certify(&base, k, 256, P).unwrap();
    let first = certs.iter().filter(|c| c.j <= 64).find(|c| c.cert_value > 3.2);
    let last = certs.iter().find(|c| c.j == 256).unwrap();
    let oracle = 4.0 * 256.0 / direct_max_coefficient(256).to_f64().ln();
    let agrees = (last.height_trend - oracle).abs() < 1e-9;
    let target = 4.0 / std::f64::consts::LN_2;
    let ok = first.is_some() && agrees && (last.height_trend - target).abs() < 0.1;
    outcome(
        ok,
        format!(
            "first j with cert > 3.2: {}; height_trend(256) = {:.4} (direct expansion {:.4}) vs {:.4}",
            first.map_or("none".to_string(), |c| format!("{} ({:.4})", c.j, c.cert_value)),
            last.height_trend,
            oracle,
            target
        ),
    )
}

fn tightness() -> Outcome {
    let m = 200u32;
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, w) in [("Q", 2u32), ("Q(sqrt(-1))", 4)] {
        let k = parse_field(name).unwrap();
        let roots: Vec<FieldElement> = splitheight::sample::roots_of_unity(k)
            .into_iter()
            .flat_map(|r| std::iter::repeat_n(r, m as usize))
            .collect();
        let s = SplitPoly::monic(k, roots).unwrap();
        let h = height(&expand(&s), P).unwrap();
        let central = binom(m, m / 2).to_f64().ln();
        let log_h = h.log_height.mid_f64();
        let ratio = (w * m) as f64 / log_h;
        let limit = w as f64 / std::f64::consts::LN_2;
        ok &= (log_h - central).abs() < 1e-9 && (ratio / limit - 1.0).abs() < 0.05;
        detail.push(format!("w={w}: {ratio:.4} vs {limit:.4}"));
    }
    outcome(ok, detail.join("; "))
}

fn randomized_bounds() -> Outcome {
    let mut fails = 0usize;
    let mut inconclusive = 0usize;
    let mut checks = 0usize;
    for (fi, k) in fields().into_iter().enumerate() {
        let mk = lower_f64(&mk_search(k, 3.0, P).unwrap().value.enclosure);
        let results: Vec<Vec<Verdict>> = (0..1000u64)
            .into_par_iter()
            .map(|i| {
                let mut r = rng(1_000_003 * fi as u64 + i);
                let s = random_split_poly(&mut r, k, 24, 3);
                check_all(&s, mk, P).unwrap().iter().map(|c| c.verdict).collect()
            })
            .collect();
        for v in results.iter().flatten() {
            checks += 1;
            match v {
                Verdict::Fails => fails += 1,
                Verdict::Inconclusive => inconclusive += 1,
                Verdict::Holds => {}
            }
        }
    }
    outcome(
        fails == 0 && inconclusive == 0,
        format!("{checks} checks, {fails} fail, {inconclusive} inconclusive"),
    )
}

fn lattice() -> Outcome {
    let g = lattice_case_check(parse_field("Q(sqrt(-1))").unwrap(), 10).unwrap();
    let e = lattice_case_check(parse_field("Q(sqrt(-3))").unwrap(), 10).unwrap();
    let ok = g.min_norm == 4 && e.min_norm >= 4 && g.exceptional_pairs.is_empty() && e.exceptional_pairs.is_empty();
    outcome(
        ok,
        format!("min_norm {} (Gaussian), {} (Eisenstein)", g.min_norm, e.min_norm),
    )
}

fn pell() -> Outcome {
    let products: Vec<Rational> = [2, 5, 6, 7, 10]
        .iter()
        .map(|&d| pell_counterexample(d).unwrap().product)
        .collect();
    let ok = products.iter().all(|p| *p == 1);
    outcome(
        ok,
        format!(
            "products {}",
            products.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
        ),
    )
}

fn mk_searches() -> Outcome {
    let q = parse_field("Q").unwrap();
    let gi = parse_field("Q(sqrt(-1))").unwrap();
    let mq = mk_search(q, 3.0, P).unwrap().value.enclosure;
    let mg = mk_search(gi, 3.0, P).unwrap().value.enclosure;
    let oq = direct_mk(None, 6, 6);
    let og = direct_mk(Some(-1), 5, 4);
    let searches = mq.contains_f64(2.0) && mg.contains_f64(2.0) && oq == 2.0 && (og - 2.0).abs() < 1e-12;
    let iq = ck_interval(q, Some(2.0)).unwrap();
    let i2 = ck_interval(parse_field("Q(sqrt(-2))").unwrap(), Some(2.0)).unwrap();
    let l2 = 2.0 / std::f64::consts::LN_2;
    let intervals =
        iq.exact && iq.lower == iq.upper && (iq.lower - l2).abs() < 1e-12 && (i2.upper - 2.0 * l2).abs() < 1e-6;
    outcome(
        searches && intervals,
        format!(
            "M_Q = {}, M_Q(i) = {} (direct {oq}, {og}); C_Q in [{:.6}, {:.6}], C_Q(sqrt(-2)) <= {:.6}",
            mq.display(8),
            mg.display(8),
            iq.lower,
            iq.upper,
            i2.upper
        ),
    )
}

fn exactness() -> Outcome {
    let mut bad = 0usize;
    for (fi, k) in fields().into_iter().enumerate() {
        bad += (0..10_000u64)
            .into_par_iter()
            .filter(|&i| {
                let mut r = rng(77 * fi as u64 + (i << 8));
                let x = random_nonzero_element(&mut r, k, 40, 30);
                let c = product_formula_check(&x, P).unwrap();
                !(c.holds && c.product.width_f64() < 1e-20)
            })
            .count();
        let mut r = rng(4242 + fi as u64);
        let poly = |r: &mut rand_chacha::ChaCha8Rng, deg: usize| {
            let mut c: Vec<FieldElement> = (0..=deg).map(|_| random_element(r, k, 12, 9)).collect();
            c[deg] = random_nonzero_element(r, k, 12, 9);
            PolyOverK::new(k, c)
        };
        for _ in 0..1000 {
            let f = poly(&mut r, 3);
            let g = poly(&mut r, 2);
            let lhs = nonarch_gauss_product(&(&f * &g)).unwrap();
            let rhs = nonarch_gauss_product(&f).unwrap() * nonarch_gauss_product(&g).unwrap();
            bad += (lhs != rhs) as usize;
        }
        for _ in 0..100 {
            let f = poly(&mut r, 4);
            let c = random_nonzero_element(&mut r, k, 50, 50);
            let a = height(&f, P).unwrap().height;
            let b = height(&f.scale(&c), P).unwrap().height;
            bad += !a.overlaps(&b) as usize;
        }
    }
    outcome(bad == 0, format!("{bad} violations"))
}

fn t2() -> Outcome {
    let a = t2_constant(1, 2.0, P).unwrap();
    let b = t2_constant(2, 1.3, P).unwrap();
    // no integer polynomial of degree ≤ 2 has 1 < M ≤ 1.3
    let mut direct_min = f64::INFINITY;
    for a2 in 0..=2i64 {
        for a1 in -3..=3i64 {
            for a0 in -2..=2i64 {
                if a0 == 0 || (a2 == 0 && a1 == 0) {
                    continue;
                }
                let m = if a2 == 0 {
                    (a1.abs().max(a0.abs()) / gcd(a1, a0)) as f64
                } else {
                    quadratic_mahler(a2, a1, a0)
                };
                if m > 1.0 + 1e-9 {
                    direct_min = direct_min.min(m);
                }
            }
        }
    }
    let first = a.w == 2 && a.m_floor == 2.0 && (a.c - 3.0 / std::f64::consts::LN_2).abs() < 1e-9;
    let second = b.w == 12 && b.m_floor == 1.3 && b.witness.is_none() && direct_min > 1.3;
    outcome(
        first && second,
        format!(
            "k=1: w={} M={} C={:.4}; k=2: w={} M_floor={} (direct least M {:.4})",
            a.w, a.m_floor, a.c, b.w, b.m_floor, direct_min
        ),
    )
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("Mahler targets", Duration::from_secs(2), mahler_targets),
        ("counterexample reproduction", Duration::from_secs(1), counterexample),
        ("higher powers improve", Duration::from_secs(60), higher_powers),
        ("tightness families", Duration::from_secs(30), tightness),
        ("randomized bound suite", Duration::from_secs(600), randomized_bounds),
        ("lattice cases", Duration::from_secs(30), lattice),
        ("Pell obstruction", Duration::from_secs(5), pell),
        ("M_K searches", Duration::from_secs(60), mk_searches),
        ("exactness properties", Duration::from_secs(300), exactness),
        ("t2 constants", Duration::from_secs(30), t2),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        let elapsed = t.elapsed();
        let pass = o.pass && elapsed < *limit;
        failed += !pass as usize;
        println!(
            "criterion {:>2} {:<28} {}  {:.2}s  {}",
            i + 1,
            name,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            o.detail
        );
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
