//! Exhaustive scans of `N(β^w + γ^w)` over coprime pairs of Gaussian or
//! Eisenstein integers.

use rayon::prelude::*;
use rug::Rational;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Largest radius accepted; keeps every `β^w + γ^w` and its norm inside `i128`.
pub const MAX_LATTICE_RADIUS: i64 = 1000;

/// `a + bω` with `ω = i` or `ω = (1 + √−3)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Elt {
    a: i128,
    b: i128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Ring {
    Gaussian,
    Eisenstein,
}

const ZERO: Elt = Elt { a: 0, b: 0 };
const ONE: Elt = Elt { a: 1, b: 0 };

fn div_round(n: i128, d: i128) -> i128 {
    (2 * n + d).div_euclid(2 * d)
}

impl Ring {
    fn mul(self, x: Elt, y: Elt) -> Elt {
        match self {
            Ring::Gaussian => Elt {
                a: x.a * y.a - x.b * y.b,
                b: x.a * y.b + x.b * y.a,
            },
            // ω² = ω − 1
            Ring::Eisenstein => Elt {
                a: x.a * y.a - x.b * y.b,
                b: x.a * y.b + x.b * y.a + x.b * y.b,
            },
        }
    }

    fn norm(self, x: Elt) -> i128 {
        match self {
            Ring::Gaussian => x.a * x.a + x.b * x.b,
            Ring::Eisenstein => x.a * x.a + x.a * x.b + x.b * x.b,
        }
    }

    fn conj(self, x: Elt) -> Elt {
        match self {
            Ring::Gaussian => Elt { a: x.a, b: -x.b },
            Ring::Eisenstein => Elt { a: x.a + x.b, b: -x.b },
        }
    }

    fn sub(x: Elt, y: Elt) -> Elt {
        Elt {
            a: x.a - y.a,
            b: x.b - y.b,
        }
    }

    fn add(x: Elt, y: Elt) -> Elt {
        Elt {
            a: x.a + y.a,
            b: x.b + y.b,
        }
    }

    fn rem(self, x: Elt, y: Elt) -> Elt {
        let n = self.norm(y);
        let t = self.mul(x, self.conj(y));
        let q = Elt {
            a: div_round(t.a, n),
            b: div_round(t.b, n),
        };
        Ring::sub(x, self.mul(y, q))
    }

    /// Euclidean algorithm; both rings are norm-Euclidean.
    fn coprime(self, mut x: Elt, mut y: Elt) -> bool {
        while y != ZERO {
            let r = self.rem(x, y);
            x = y;
            y = r;
        }
        self.norm(x) == 1
    }

    fn pow(self, x: Elt, e: u32) -> Elt {
        (0..e).fold(ONE, |acc, _| self.mul(acc, x))
    }

    fn units(self) -> Vec<Elt> {
        let raw: &[(i128, i128)] = match self {
            Ring::Gaussian => &[(1, 0), (0, 1), (-1, 0), (0, -1)],
            Ring::Eisenstein => &[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)],
        };
        raw.iter().map(|&(a, b)| Elt { a, b }).collect()
    }

    /// A region stable under multiplication by units: a square for the
    /// Gaussian integers, a hexagon for the Eisenstein integers.
    fn region(self, r: i128) -> Vec<Elt> {
        let mut out = Vec::new();
        for a in -r..=r {
            for b in -r..=r {
                if self == Ring::Eisenstein && (a + b).abs() > r {
                    continue;
                }
                out.push(Elt { a, b });
            }
        }
        out
    }

    fn to_field(self, field: Field, x: Elt) -> FieldElement {
        let a = Rational::from(x.a);
        let b = Rational::from(x.b);
        match self {
            Ring::Gaussian => FieldElement::new(field, a, b),
            Ring::Eisenstein => {
                let half = Rational::from((x.b, 2));
                FieldElement::new(field, a + &half, half)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct LatticeReport {
    pub field: Field,
    pub box_radius: i64,
    pub w: u32,
    pub min_norm: i128,
    /// Pairs attaining `min_norm`, one per orbit under `(β, γ) ↦ (uβ, uγ)`.
    pub attaining_pairs: Vec<(FieldElement, FieldElement)>,
    /// Pairs with `β^w + γ^w ∈ {0, 1, −1}`.
    pub exceptional_pairs: Vec<(FieldElement, FieldElement)>,
    pub pairs_scanned: u64,
}

/// Scans every coprime pair of nonzero integers `(β, γ)` in the region of
/// the given radius, up to simultaneous multiplication by units.
pub fn lattice_case_check(field: Field, box_radius: i64) -> Result<LatticeReport> {
    let ring = match field.radicand() {
        Some(-1) => Ring::Gaussian,
        Some(-3) => Ring::Eisenstein,
        _ => return Err(Error::UnsupportedField(field.to_string())),
    };
    if !(1..=MAX_LATTICE_RADIUS).contains(&box_radius) {
        return Err(Error::InvalidArgument(format!(
            "radius must lie in 1..={MAX_LATTICE_RADIUS}, got {box_radius}"
        )));
    }
    let w = field.roots_of_unity();
    let region: Vec<Elt> = ring
        .region(box_radius as i128)
        .into_iter()
        .filter(|&x| x != ZERO)
        .collect();
    let units = ring.units();
    let canonical: Vec<Elt> = region
        .iter()
        .copied()
        .filter(|&x| units.iter().all(|&u| ring.mul(u, x) >= x))
        .collect();
    let powers: Vec<Elt> = region.iter().map(|&g| ring.pow(g, w)).collect();
    let exceptional = [ZERO, ONE, Elt { a: -1, b: 0 }];
    struct Partial {
        min: i128,
        attaining: Vec<(Elt, Elt)>,
        exceptional: Vec<(Elt, Elt)>,
        scanned: u64,
    }
    let partials: Vec<Partial> = canonical
        .par_iter()
        .map(|&beta| {
            let bw = ring.pow(beta, w);
            let mut p = Partial {
                min: i128::MAX,
                attaining: Vec::new(),
                exceptional: Vec::new(),
                scanned: 0,
            };
            for (&gamma, &gw) in region.iter().zip(&powers) {
                if !ring.coprime(beta, gamma) {
                    continue;
                }
                p.scanned += 1;
                let v = Ring::add(bw, gw);
                if exceptional.contains(&v) {
                    p.exceptional.push((beta, gamma));
                }
                let n = ring.norm(v);
                if n < p.min {
                    p.min = n;
                    p.attaining.clear();
                }
                if n == p.min {
                    p.attaining.push((beta, gamma));
                }
            }
            p
        })
        .collect();
    let min_norm = partials.iter().map(|p| p.min).min().unwrap_or(i128::MAX);
    let mut attaining = Vec::new();
    let mut exc = Vec::new();
    let mut scanned = 0;
    for p in partials {
        scanned += p.scanned;
        if p.min == min_norm {
            attaining.extend(p.attaining);
        }
        exc.extend(p.exceptional);
    }
    attaining.sort();
    exc.sort();
    let conv = |v: Vec<(Elt, Elt)>| {
        v.into_iter()
            .map(|(b, g)| (ring.to_field(field, b), ring.to_field(field, g)))
            .collect()
    };
    Ok(LatticeReport {
        field,
        box_radius,
        w,
        min_norm,
        attaining_pairs: conv(attaining),
        exceptional_pairs: conv(exc),
        pairs_scanned: scanned,
    })
}
