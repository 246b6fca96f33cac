//! Double-double arithmetic: an unevaluated sum of two `f64`s giving roughly
//! 106 bits of significand.
//!
//! The mixture coefficients of a censored order statistic alternate in sign
//! with magnitudes that can exceed the target sum by seventeen orders of
//! magnitude or more, so every product and running sum on that path is kept
//! in this representation until the final materialisation. Products of the
//! error-free transforms below are exact; additions are accurate to the last
//! component.
//!
//! Reference: Dekker (1971); Hida, Li & Bailey, "Library for Double-Double
//! and Quad-Double Arithmetic" (2007).

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Splitter for Dekker's product, 2^27 + 1.
const SPLIT: f64 = 134_217_729.0;

/// Error-free transform: `a + b = s + e` exactly, no ordering assumption.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free transform for `|a| >= |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free transform: `a * b = p + e` exactly (Dekker's split, no FMA).
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let t = SPLIT * a;
    let ahi = t - (t - a);
    let alo = a - ahi;
    let t = SPLIT * b;
    let bhi = t - (t - b);
    let blo = b - bhi;
    let e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo;
    (p, e)
}

/// A double-double value `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

/// ln 2.
pub const LN_2: Dd = Dd { hi: 0.693_147_180_559_945_3, lo: 2.319_046_813_846_299_6e-17 };

impl Dd {
    #[inline]
    pub const fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact for integers up to 2^53.
    #[inline]
    pub fn from_u32(x: u32) -> Self {
        Dd { hi: x as f64, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 { -self } else { self }
    }

    /// Quotient of two exact `f64` values to full double-double accuracy.
    #[inline]
    pub fn ratio(num: f64, den: f64) -> Self {
        Dd::from_f64(num) / Dd::from_f64(den)
    }

    /// e^self, with underflow to zero below exp(-745).
    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return ZERO;
        }
        // self = j ln2 + r with |r| <= ln2 / 2, then Taylor on r.
        let j = (self.hi / LN_2.hi).round();
        let r = self - LN_2 * Dd::from_f64(j);
        let mut term = ONE;
        let mut sum = ONE;
        for k in 1..40 {
            term = term * r / Dd::from_f64(k as f64);
            sum = sum + term;
            if term.hi.abs() < 1e-35 * sum.hi.abs() {
                break;
            }
        }
        let scale = (j as i32).max(i32::MIN + 1);
        Dd {
            hi: ldexp(sum.hi, scale),
            lo: ldexp(sum.lo, scale),
        }
    }

    /// Natural log for strictly positive values: one Newton correction of the
    /// `f64` estimate against the double-double `exp`.
    pub fn ln(self) -> Self {
        debug_assert!(self.hi > 0.0, "ln of non-positive double-double");
        let y0 = self.hi.ln();
        // delta = x e^{-y0} - 1 is O(eps); ln x = y0 + ln(1 + delta).
        let delta = self * Dd::from_f64(-y0).exp() - ONE;
        let correction = delta - delta * delta * Dd::new(0.5, 0.0);
        Dd::from_f64(y0) + correction
    }
}

#[inline]
fn ldexp(x: f64, e: i32) -> f64 {
    // Exact scaling by 2^e; |e| stays far from the exponent range here.
    x * f64::powi(2.0, e)
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from_f64(q3)
    }
}
