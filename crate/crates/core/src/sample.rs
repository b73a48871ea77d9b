//! Seeded random field elements and polynomials for test suites and examples.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Integer, Rational};

use crate::field::{Field, FieldElement};
use crate::heights::SplitPoly;
use crate::poly::IntPoly;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    Rational::from((rng.gen_range(-num..=num), rng.gen_range(1..=den)))
}

/// `a + b√D` with numerators in `[−num, num]` and denominators in `[1, den]`.
pub fn random_element<R: Rng>(rng: &mut R, field: Field, num: i64, den: i64) -> FieldElement {
    let a = rational(rng, num, den);
    let b = if field.degree() == 2 {
        rational(rng, num, den)
    } else {
        Rational::new()
    };
    FieldElement::new(field, a, b)
}

pub fn random_nonzero_element<R: Rng>(rng: &mut R, field: Field, num: i64, den: i64) -> FieldElement {
    loop {
        let x = random_element(rng, field, num, den);
        if !x.is_zero() {
            return x;
        }
    }
}

/// All roots of unity of `field`.
pub fn roots_of_unity(field: Field) -> Vec<FieldElement> {
    let half = || Rational::from((1, 2));
    match field.radicand() {
        Some(-1) => vec![field.int(1), field.int(-1), field.sqrt_d(), -&field.sqrt_d()],
        Some(-3) => {
            let mut out = vec![field.int(1), field.int(-1)];
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(FieldElement::new(field, half() * a, half() * b));
            }
            out
        }
        _ => vec![field.int(1), field.int(-1)],
    }
}

/// A split polynomial with up to `max_degree` roots counted with
/// multiplicity; roots are roots of unity about a third of the time and
/// otherwise small elements of `K^×`.
pub fn random_split_poly<R: Rng>(rng: &mut R, field: Field, max_degree: usize, max_mult: u32) -> SplitPoly {
    let unity = roots_of_unity(field);
    let target = rng.gen_range(1..=max_degree);
    let mut roots = Vec::new();
    while roots.len() < target {
        let r = if rng.gen_bool(1.0 / 3.0) {
            unity.choose(rng).unwrap().clone()
        } else {
            random_nonzero_element(rng, field, 3, 3)
        };
        let m = rng.gen_range(1..=max_mult) as usize;
        let m = m.min(target - roots.len());
        roots.extend(std::iter::repeat_n(r, m));
    }
    let lead = random_nonzero_element(rng, field, 3, 2);
    SplitPoly::new(lead, roots).expect("nonzero roots")
}

/// Degree exactly `degree`, coefficients in `[−bound, bound]`.
pub fn random_int_poly<R: Rng>(rng: &mut R, degree: usize, bound: i64) -> IntPoly {
    let mut c: Vec<Integer> = (0..=degree)
        .map(|_| Integer::from(rng.gen_range(-bound..=bound)))
        .collect();
    while c[degree] == 0 {
        c[degree] = Integer::from(rng.gen_range(-bound..=bound));
    }
    IntPoly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unity_lists() {
        for (d, w) in [(-1, 4), (-3, 6), (5, 2)] {
            let k = Field::quadratic(d).unwrap();
            let u = roots_of_unity(k);
            assert_eq!(u.len(), w);
            assert!(u.iter().all(FieldElement::is_root_of_unity));
        }
    }

    #[test]
    fn deterministic() {
        let k = Field::quadratic(-2).unwrap();
        let a = random_split_poly(&mut rng(3), k, 24, 3);
        let b = random_split_poly(&mut rng(3), k, 24, 3);
        assert_eq!(a, b);
        assert!(a.degree() <= 24);
        assert_eq!(random_int_poly(&mut rng(1), 7, 2).degree(), Some(7));
    }
}
