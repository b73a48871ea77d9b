//! Integer helpers: primality, factorization, squarefreeness.

use rug::integer::IsPrime;
use rug::{Assign, Integer};

const SMALL_PRIME_LIMIT: u32 = 10_000;

pub fn is_prime(n: &Integer) -> bool {
    // BPSW inside GMP is exact below 2^64.
    *n > 1 && n.is_probably_prime(30) != IsPrime::No
}

/// Prime factorization of `|n|` as sorted `(p, e)` pairs; empty for `|n| <= 1`.
pub fn factor(n: &Integer) -> Vec<(Integer, u32)> {
    let mut m = Integer::from(n.abs_ref());
    let mut out: Vec<(Integer, u32)> = Vec::new();
    if m <= 1 {
        return out;
    }
    let mut p = 2u32;
    while p <= SMALL_PRIME_LIMIT {
        if m.is_divisible_u(p) {
            let e = m.remove_factor_mut(&Integer::from(p));
            out.push((Integer::from(p), e));
        }
        if Integer::from(p) * p > m {
            break;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        let mut big = Vec::new();
        split_large(m, &mut big);
        big.sort();
        for q in big {
            match out.last_mut() {
                Some((last, e)) if *last == q => *e += 1,
                _ => out.push((q, 1)),
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// The distinct primes dividing `|n|`.
pub fn prime_divisors(n: &Integer) -> Vec<Integer> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

fn split_large(m: Integer, out: &mut Vec<Integer>) {
    if m == 1 {
        return;
    }
    if is_prime(&m) {
        out.push(m);
        return;
    }
    if m.is_perfect_square() {
        let r = m.sqrt();
        split_large(r.clone(), out);
        split_large(r, out);
        return;
    }
    let mut c = 1u32;
    loop {
        if let Some(d) = pollard_brent(&m, c) {
            let q = Integer::from(&m / &d);
            split_large(d, out);
            split_large(q, out);
            return;
        }
        c += 1;
    }
}

/// Brent's cycle-finding variant of Pollard's rho with `x^2 + c`.
fn pollard_brent(n: &Integer, c: u32) -> Option<Integer> {
    let f = |x: &Integer| -> Integer { (Integer::from(x * x) + c) % n };
    let mut y = Integer::from(2);
    let mut r = 1u64;
    let mut q = Integer::from(1);
    let mut g = Integer::from(1);
    let mut x = Integer::new();
    let mut ys = Integer::new();
    let m = 128u64;
    while g == 1 {
        x.assign(&y);
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys.assign(&y);
            for _ in 0..m.min(r - k) {
                y = f(&y);
                q *= Integer::from(&x - &y).abs();
                q %= n;
            }
            g = Integer::from(q.gcd_ref(n));
            k += m;
        }
        r *= 2;
        if r > 1 << 26 {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = Integer::from(Integer::from(&x - &ys).abs().gcd_ref(n));
            if g > 1 {
                break;
            }
        }
    }
    (g != *n).then_some(g)
}

pub fn is_squarefree(n: &Integer) -> bool {
    factor(n).iter().all(|(_, e)| *e == 1)
}

/// `v_p(n)` for `n != 0`.
pub fn padic_valuation(n: &Integer, p: &Integer) -> u32 {
    debug_assert!(*n != 0);
    let mut m = Integer::from(n.abs_ref());
    m.remove_factor_mut(p)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    fn product(fs: &[(Integer, u32)]) -> Integer {
        fs.iter()
            .fold(Integer::from(1), |acc, (p, e)| acc * Integer::from(p.pow(*e)))
    }

    #[test]
    fn factors_small_numbers() {
        let f = factor(&Integer::from(360));
        assert_eq!(
            f,
            vec![
                (Integer::from(2), 3),
                (Integer::from(3), 2),
                (Integer::from(5), 1)
            ]
        );
        assert!(factor(&Integer::from(1)).is_empty());
        assert_eq!(factor(&Integer::from(-7)), vec![(Integer::from(7), 1)]);
    }

    #[test]
    fn factors_semiprime_beyond_trial_division() {
        let p = Integer::from(1_000_000_007u64);
        let q = Integer::from(998_244_353u64);
        let n = Integer::from(&p * &q) * 4;
        let f = factor(&n);
        assert_eq!(f.len(), 3);
        assert_eq!(product(&f), n);
        assert!(f.iter().all(|(p, _)| is_prime(p)));
    }

    #[test]
    fn squarefree_and_totient() {
        assert!(is_squarefree(&Integer::from(30)));
        assert!(!is_squarefree(&Integer::from(12)));
        assert_eq!(totient(12), 4);
        assert_eq!(totient(7), 6);
        assert_eq!(lcm_u64(4, 6), 12);
    }
}
