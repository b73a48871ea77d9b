//! Sampling `∏_𝔭 max(1, |α|²_𝔭) ∏_σ |1 + α²|_σ ≥ 2^d` over totally real fields.

use rand::Rng;
use rug::Rational;

use crate::bounds::{alphabound2_factor, Verdict};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::sample;
use crate::valuations::nonarch_max_product;

#[derive(Clone, Debug)]
pub struct RealCaseSample {
    pub alpha: FieldElement,
    pub nonarch: Rational,
    pub arch: Rational,
    pub product: Rational,
    pub verdict: Verdict,
}

/// The quantity for one `α ≠ 0`, exact: the archimedean product over real
/// embeddings is `|N(1 + α²)|`.
pub fn real_case_quantity(alpha: &FieldElement) -> Result<RealCaseSample> {
    let field = alpha.field();
    if !field.is_totally_real() {
        return Err(Error::UnsupportedField(field.to_string()));
    }
    if alpha.is_zero() {
        return Err(Error::InvalidArgument("α must be nonzero".into()));
    }
    let nonarch = Rational::from(nonarch_max_product(alpha).square_ref());
    let arch = (&alpha.pow(2) + &field.one()).norm().abs();
    let product = alphabound2_factor(alpha);
    debug_assert_eq!(product, Rational::from(&nonarch * &arch));
    let floor = Rational::from(1u32 << field.degree());
    let verdict = if product >= floor {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    Ok(RealCaseSample {
        alpha: alpha.clone(),
        nonarch,
        arch,
        product,
        verdict,
    })
}

/// `samples` random nonzero elements with small numerators and denominators.
pub fn real_case_samples(field: Field, samples: usize, seed: u64) -> Result<Vec<RealCaseSample>> {
    if !field.is_totally_real() {
        return Err(Error::UnsupportedField(field.to_string()));
    }
    let mut rng = sample::rng(seed);
    (0..samples)
        .map(|_| {
            let bound = rng.gen_range(1..=20);
            let alpha = sample::random_nonzero_element(&mut rng, field, bound, 12);
            real_case_quantity(&alpha)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let k = Field::quadratic(5).unwrap();
        let one = real_case_quantity(&k.one()).unwrap();
        assert_eq!(one.product, 4);
        let s5 = real_case_quantity(&k.sqrt_d()).unwrap();
        assert_eq!((s5.nonarch.clone(), s5.arch.clone()), (Rational::from(1), Rational::from(36)));
        let inv = real_case_quantity(&k.sqrt_d().inv().unwrap()).unwrap();
        assert_eq!(inv.nonarch, 25);
        assert_eq!(inv.arch, Rational::from((36, 25)));
        assert_eq!(inv.product, 36);
    }

    #[test]
    fn samples_hold() {
        for field in [Field::rationals(), Field::quadratic(2).unwrap(), Field::quadratic(5).unwrap()] {
            let out = real_case_samples(field, 300, 7).unwrap();
            assert!(out.iter().all(|s| s.verdict == Verdict::Holds));
        }
        assert!(real_case_samples(Field::quadratic(-1).unwrap(), 1, 0).is_err());
    }
}
