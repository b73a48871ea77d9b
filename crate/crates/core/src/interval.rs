//! Outward-rounded interval arithmetic on MPFR floats.
//!
//! Every operation rounds its lower endpoint toward `-inf` and its upper
//! endpoint toward `+inf`, so an interval computed from enclosures of exact
//! inputs is itself an enclosure of the exact result.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::{Round, Special};
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// Working precision (bits) used when the caller does not ask for one.
pub const DEFAULT_PRECISION: u32 = 256;
/// Escalation stops after this precision (bits).
pub const MAX_PRECISION: u32 = 4096;

fn rounded<T>(prec: u32, val: T, round: Round) -> Float
where
    Float: rug::Assign<T> + rug::ops::AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, val, round).0
}

fn fmin(a: Float, b: Float) -> Float {
    if a.is_nan() {
        return b;
    }
    if b < a {
        b
    } else {
        a
    }
}

fn fmax(a: Float, b: Float) -> Float {
    if a.is_nan() {
        return b;
    }
    if b > a {
        b
    } else {
        a
    }
}

/// A closed real interval `[lo, hi]`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealInterval {
    lo: Float,
    hi: Float,
}

impl RealInterval {
    /// Builds `[lo, hi]`; panics if `lo > hi` or either bound is NaN.
    pub fn new(lo: Float, hi: Float) -> Self {
        assert!(!lo.is_nan() && !hi.is_nan(), "NaN interval bound");
        assert!(lo <= hi, "interval bounds out of order: {lo} > {hi}");
        RealInterval { lo, hi }
    }

    pub fn entire(prec: u32) -> Self {
        RealInterval {
            lo: Float::with_val(prec, Special::NegInfinity),
            hi: Float::with_val(prec, Special::Infinity),
        }
    }

    pub fn from_rational(prec: u32, r: &Rational) -> Self {
        RealInterval {
            lo: rounded(prec, r, Round::Down),
            hi: rounded(prec, r, Round::Up),
        }
    }

    pub fn from_integer(prec: u32, n: &Integer) -> Self {
        RealInterval {
            lo: rounded(prec, n, Round::Down),
            hi: rounded(prec, n, Round::Up),
        }
    }

    pub fn from_i64(prec: u32, n: i64) -> Self {
        RealInterval {
            lo: rounded(prec, n, Round::Down),
            hi: rounded(prec, n, Round::Up),
        }
    }

    /// Exact for `prec >= 53`.
    pub fn from_f64(prec: u32, x: f64) -> Self {
        RealInterval {
            lo: rounded(prec, x, Round::Down),
            hi: rounded(prec, x, Round::Up),
        }
    }

    /// Enclosure of `ln 2`.
    pub fn ln2(prec: u32) -> Self {
        Self::from_i64(prec, 2).ln()
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    /// Lower endpoint rounded down to `f64`.
    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64_round(Round::Down)
    }

    /// Upper endpoint rounded up to `f64`.
    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64_round(Round::Up)
    }

    pub fn mid_f64(&self) -> f64 {
        let prec = self.prec() + 1;
        let sum = rounded(prec, &self.lo + &self.hi, Round::Nearest);
        (sum / 2u32).to_f64()
    }

    /// Upper bound on `hi - lo`.
    pub fn width(&self) -> Float {
        rounded(self.prec(), &self.hi - &self.lo, Round::Up)
    }

    pub fn width_f64(&self) -> f64 {
        self.width().to_f64_round(Round::Up)
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        self.lo <= *r && self.hi >= *r
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.lo <= x && self.hi >= x
    }

    pub fn contains_zero(&self) -> bool {
        self.lo <= 0 && self.hi >= 0
    }

    pub fn overlaps(&self, other: &RealInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// `true` when every point of `self` is `>=` every point of `other`.
    pub fn certainly_ge(&self, other: &RealInterval) -> bool {
        self.lo >= other.hi
    }

    /// `true` when every point of `self` is `<` every point of `other`.
    pub fn certainly_lt(&self, other: &RealInterval) -> bool {
        self.hi < other.lo
    }

    pub fn hull(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: fmin(self.lo.clone(), other.lo.clone()),
            hi: fmax(self.hi.clone(), other.hi.clone()),
        }
    }

    /// Intersection, or `None` when the intervals are disjoint.
    pub fn intersect(&self, other: &RealInterval) -> Option<RealInterval> {
        let lo = fmax(self.lo.clone(), other.lo.clone());
        let hi = fmin(self.hi.clone(), other.hi.clone());
        (lo <= hi).then_some(RealInterval { lo, hi })
    }

    /// Widens both ends by `r >= 0`.
    pub fn inflate(&self, r: &Float) -> RealInterval {
        let prec = self.prec();
        RealInterval {
            lo: rounded(prec, &self.lo - r, Round::Down),
            hi: rounded(prec, &self.hi + r, Round::Up),
        }
    }

    pub fn abs(&self) -> RealInterval {
        if self.lo >= 0 {
            self.clone()
        } else if self.hi <= 0 {
            -self
        } else {
            let prec = self.prec();
            let neg_lo = Float::with_val(prec, -&self.lo);
            RealInterval {
                lo: Float::with_val(prec, 0),
                hi: fmax(neg_lo, self.hi.clone()),
            }
        }
    }

    pub fn sqr(&self) -> RealInterval {
        let a = self.abs();
        let prec = a.prec();
        RealInterval {
            lo: rounded(prec, &a.lo * &a.lo, Round::Down),
            hi: rounded(prec, &a.hi * &a.hi, Round::Up),
        }
    }

    pub fn pow_u(&self, k: u32) -> RealInterval {
        let prec = self.prec();
        if k == 0 {
            return Self::from_i64(prec, 1);
        }
        let base = if k.is_multiple_of(2) { self.abs() } else { self.clone() };
        RealInterval {
            lo: rounded(prec, (&base.lo).pow(k), Round::Down),
            hi: rounded(prec, (&base.hi).pow(k), Round::Up),
        }
    }

    /// Square root of the non-negative part; panics if the interval is entirely negative.
    pub fn sqrt(&self) -> RealInterval {
        assert!(self.hi >= 0, "sqrt of a negative interval");
        let prec = self.prec();
        let lo = if self.lo < 0 {
            Float::with_val(prec, 0)
        } else {
            rounded(prec, self.lo.sqrt_ref(), Round::Down)
        };
        RealInterval {
            lo,
            hi: rounded(prec, self.hi.sqrt_ref(), Round::Up),
        }
    }

    /// `k`-th root of a non-negative interval.
    pub fn root(&self, k: u32) -> RealInterval {
        assert!(k >= 1);
        match k {
            1 => self.clone(),
            2 => self.sqrt(),
            _ => {
                assert!(self.hi >= 0, "root of a negative interval");
                let prec = self.prec();
                let mut lo = if self.lo < 0 {
                    Float::with_val(prec, 0)
                } else {
                    self.lo.clone()
                };
                let mut hi = self.hi.clone();
                lo.root_round(k, Round::Down);
                hi.root_round(k, Round::Up);
                RealInterval { lo, hi }
            }
        }
    }

    /// Natural logarithm; a lower endpoint `<= 0` maps to `-inf`.
    pub fn ln(&self) -> RealInterval {
        assert!(self.hi > 0, "ln of a non-positive interval");
        let prec = self.prec();
        let lo = if self.lo <= 0 {
            Float::with_val(prec, Special::NegInfinity)
        } else {
            rounded(prec, self.lo.ln_ref(), Round::Down)
        };
        RealInterval {
            lo,
            hi: rounded(prec, self.hi.ln_ref(), Round::Up),
        }
    }

    pub fn exp(&self) -> RealInterval {
        let prec = self.prec();
        RealInterval {
            lo: rounded(prec, self.lo.exp_ref(), Round::Down),
            hi: rounded(prec, self.hi.exp_ref(), Round::Up),
        }
    }

    /// Division; a divisor containing zero yields the entire line.
    pub fn div(&self, other: &RealInterval) -> RealInterval {
        let prec = self.prec().max(other.prec());
        if other.contains_zero() {
            return Self::entire(prec);
        }
        let cands = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let mut lo = Float::with_val(prec, Special::Infinity);
        let mut hi = Float::with_val(prec, Special::NegInfinity);
        for (a, b) in cands {
            lo = fmin(lo, rounded(prec, a / b, Round::Down));
            hi = fmax(hi, rounded(prec, a / b, Round::Up));
        }
        RealInterval { lo, hi }
    }

    pub fn recip(&self) -> RealInterval {
        Self::from_i64(self.prec(), 1).div(self)
    }

    pub fn max(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: fmax(self.lo.clone(), other.lo.clone()),
            hi: fmax(self.hi.clone(), other.hi.clone()),
        }
    }

    pub fn min(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: fmin(self.lo.clone(), other.lo.clone()),
            hi: fmin(self.hi.clone(), other.hi.clone()),
        }
    }

    pub fn mul_i64(&self, k: i64) -> RealInterval {
        self * &Self::from_i64(self.prec(), k)
    }

    pub fn div_i64(&self, k: i64) -> RealInterval {
        self.div(&Self::from_i64(self.prec(), k))
    }

    /// Decimal endpoints with `digits` significant digits, rounded outward.
    pub fn to_decimal_strings(&self, digits: usize) -> (String, String) {
        (
            self.lo
                .to_string_radix_round(10, Some(digits), Round::Down),
            self.hi.to_string_radix_round(10, Some(digits), Round::Up),
        )
    }

    /// Short form with `digits` significant digits, rounded outward.
    pub fn display(&self, digits: usize) -> String {
        let (lo, hi) = self.to_decimal_strings(digits);
        format!("[{lo}, {hi}]")
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(20))
    }
}

impl Neg for &RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        RealInterval {
            lo: Float::with_val(self.hi.prec(), -&self.hi),
            hi: Float::with_val(self.lo.prec(), -&self.lo),
        }
    }
}

impl Neg for RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        -&self
    }
}

impl Add for &RealInterval {
    type Output = RealInterval;
    fn add(self, rhs: &RealInterval) -> RealInterval {
        let prec = self.prec().max(rhs.prec());
        RealInterval {
            lo: rounded(prec, &self.lo + &rhs.lo, Round::Down),
            hi: rounded(prec, &self.hi + &rhs.hi, Round::Up),
        }
    }
}

impl Sub for &RealInterval {
    type Output = RealInterval;
    fn sub(self, rhs: &RealInterval) -> RealInterval {
        let prec = self.prec().max(rhs.prec());
        RealInterval {
            lo: rounded(prec, &self.lo - &rhs.hi, Round::Down),
            hi: rounded(prec, &self.hi - &rhs.lo, Round::Up),
        }
    }
}

impl Mul for &RealInterval {
    type Output = RealInterval;
    fn mul(self, rhs: &RealInterval) -> RealInterval {
        let prec = self.prec().max(rhs.prec());
        if self.lo >= 0 && rhs.lo >= 0 {
            return RealInterval {
                lo: rounded(prec, &self.lo * &rhs.lo, Round::Down),
                hi: rounded(prec, &self.hi * &rhs.hi, Round::Up),
            };
        }
        let cands = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo = Float::with_val(prec, Special::Infinity);
        let mut hi = Float::with_val(prec, Special::NegInfinity);
        for (a, b) in cands {
            let d = rounded(prec, a * b, Round::Down);
            let u = rounded(prec, a * b, Round::Up);
            // 0 * inf
            if d.is_nan() || u.is_nan() {
                return RealInterval::entire(prec);
            }
            lo = fmin(lo, d);
            hi = fmax(hi, u);
        }
        RealInterval { lo, hi }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RealInterval {
            type Output = RealInterval;
            fn $m(self, rhs: RealInterval) -> RealInterval {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RealInterval> for RealInterval {
            type Output = RealInterval;
            fn $m(self, rhs: &RealInterval) -> RealInterval {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// A rectangle `re × im` in the complex plane.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexBox {
    pub re: RealInterval,
    pub im: RealInterval,
}

impl ComplexBox {
    pub fn new(re: RealInterval, im: RealInterval) -> Self {
        ComplexBox { re, im }
    }

    pub fn real(re: RealInterval) -> Self {
        let prec = re.prec();
        ComplexBox {
            re,
            im: RealInterval::from_i64(prec, 0),
        }
    }

    pub fn from_floats(re: Float, im: Float) -> Self {
        ComplexBox {
            re: RealInterval::new(re.clone(), re),
            im: RealInterval::new(im.clone(), im),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn conj(&self) -> ComplexBox {
        ComplexBox {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// Enclosure of `|z|^2`.
    pub fn norm_sqr(&self) -> RealInterval {
        &self.re.sqr() + &self.im.sqr()
    }

    /// Enclosure of `|z|`.
    pub fn abs(&self) -> RealInterval {
        if self.im.lo() == &0 && self.im.hi() == &0 {
            return self.re.abs();
        }
        self.norm_sqr().sqrt()
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn div(&self, other: &ComplexBox) -> ComplexBox {
        let den = other.norm_sqr();
        let num = self * &other.conj();
        ComplexBox {
            re: num.re.div(&den),
            im: num.im.div(&den),
        }
    }

    pub fn scale(&self, k: &RealInterval) -> ComplexBox {
        ComplexBox {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn inflate(&self, r: &Float) -> ComplexBox {
        ComplexBox {
            re: self.re.inflate(r),
            im: self.im.inflate(r),
        }
    }

    /// Larger of the two side lengths.
    pub fn width_f64(&self) -> f64 {
        self.re.width_f64().max(self.im.width_f64())
    }

    pub fn disjoint(&self, other: &ComplexBox) -> bool {
        !self.re.overlaps(&other.re) || !self.im.overlaps(&other.im)
    }

    pub fn overlaps(&self, other: &ComplexBox) -> bool {
        !self.disjoint(other)
    }

    pub fn mid_f64(&self) -> (f64, f64) {
        (self.re.mid_f64(), self.im.mid_f64())
    }

    /// `true` if the point `(re, im)` lies in the box.
    pub fn contains_f64(&self, re: f64, im: f64) -> bool {
        self.re.contains_f64(re) && self.im.contains_f64(im)
    }
}

impl fmt::Display for ComplexBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re.display(12), self.im.display(12))
    }
}

impl Add for &ComplexBox {
    type Output = ComplexBox;
    fn add(self, rhs: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &ComplexBox {
    type Output = ComplexBox;
    fn sub(self, rhs: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &ComplexBox {
    type Output = ComplexBox;
    fn mul(self, rhs: &ComplexBox) -> ComplexBox {
        ComplexBox {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &ComplexBox {
    type Output = ComplexBox;
    fn neg(self) -> ComplexBox {
        ComplexBox {
            re: -&self.re,
            im: -&self.im,
        }
    }
}
