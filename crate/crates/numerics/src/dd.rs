//! Double-double arithmetic.
//!
//! A value is the unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`. The
//! error-free transformations follow Dekker and Knuth; `two_prod` relies on a
//! fused multiply-add.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    };
    pub const FRAC_PI_2: Dd = Dd {
        hi: std::f64::consts::FRAC_PI_2,
        lo: 6.123_233_995_736_766e-17,
    };
    pub const LN_2: Dd = Dd {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };

    #[inline]
    pub const fn new(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn sqr(self) -> Self {
        self * self
    }

    pub fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { Dd::ONE / self } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base.sqr();
            e >>= 1;
        }
        acc
    }

    /// Multiply by a power of two (exact).
    #[inline]
    pub fn ldexp(self, k: i32) -> Self {
        let s = 2f64.powi(k);
        Dd {
            hi: self.hi * s,
            lo: self.lo * s,
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Dd::ZERO } else { Dd::new(f64::NAN) };
        }
        let q = self.hi.sqrt();
        let (p, e) = two_prod(q, q);
        let r = (self - Dd { hi: p, lo: e }).to_f64();
        let (s, t) = quick_two_sum(q, r / (2.0 * q));
        Dd { hi: s, lo: t }
    }

    fn expm1_small(r: Dd) -> Dd {
        // |r| < 1e-3: Taylor series to 14 terms is far beyond 32 digits.
        let mut term = r;
        let mut sum = r;
        for i in 2..16 {
            term = term * r / (i as f64);
            sum += term;
        }
        sum
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return Dd::new(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = (self - Dd::LN_2 * k).ldexp(-10);
        let mut e = Self::expm1_small(r);
        for _ in 0..10 {
            e = e * (e + 2.0);
        }
        (e + 1.0).ldexp(k as i32)
    }

    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::new(if self.hi == 0.0 { f64::NEG_INFINITY } else { f64::NAN });
        }
        let mut y = Dd::new(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - 1.0;
        }
        y
    }

    fn sin_cos_reduced(r: Dd) -> (Dd, Dd) {
        let r2 = r.sqr();
        let mut term = r;
        let mut s = r;
        let mut k = 1.0;
        loop {
            term = -term * r2 / ((k + 1.0) * (k + 2.0));
            s += term;
            k += 2.0;
            if term.hi.abs() < 1e-34 * s.hi.abs().max(1e-300) {
                break;
            }
        }
        let mut term = Dd::ONE;
        let mut c = Dd::ONE;
        let mut k = 0.0;
        loop {
            term = -term * r2 / ((k + 1.0) * (k + 2.0));
            c += term;
            k += 2.0;
            if term.hi.abs() < 1e-34 {
                break;
            }
        }
        (s, c)
    }

    pub fn sin_cos(self) -> (Dd, Dd) {
        let k = (self.hi / std::f64::consts::FRAC_PI_2).round();
        let r = self - Dd::FRAC_PI_2 * k;
        let (s, c) = Self::sin_cos_reduced(r);
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn sin(self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(self) -> Self {
        self.sin_cos().1
    }

    pub fn asin(self) -> Self {
        let x = self.hi;
        if x.abs() > 1.0 {
            return Dd::new(f64::NAN);
        }
        if self.abs() == Dd::ONE {
            return Dd::FRAC_PI_2 * x.signum();
        }
        let mut y = Dd::new(x.asin());
        for _ in 0..2 {
            let (s, c) = y.sin_cos();
            y -= (s - self) / c;
        }
        y
    }

    pub fn sinh(self) -> Self {
        if self.hi.abs() < 1e-3 {
            let r2 = self.sqr();
            let mut term = self;
            let mut s = self;
            for k in (2..24).step_by(2) {
                term = term * r2 / ((k * (k + 1)) as f64);
                s += term;
            }
            return s;
        }
        let e = self.exp();
        (e - Dd::ONE / e).ldexp(-1)
    }

    pub fn cosh(self) -> Self {
        let e = self.exp();
        (e + Dd::ONE / e).ldexp(-1)
    }

    pub fn asinh(self) -> Self {
        if self.hi < 0.0 {
            return -(-self).asinh();
        }
        (self + (self.sqr() + 1.0).sqrt()).ln()
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd::new(x)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: f64) -> Dd {
        let (s, e) = two_sum(self.hi, b);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: f64) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + q3
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, b: f64) -> Dd {
        self / Dd::new(b)
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, b: Dd) -> Dd {
        let q = (self / b).to_f64().trunc();
        self - b * q
    }
}

macro_rules! assign_ops {
    ($($tr:ident $m:ident $op:tt),*) => {$(
        impl $tr for Dd {
            #[inline]
            fn $m(&mut self, b: Dd) { *self = *self $op b; }
        }
        impl $tr<f64> for Dd {
            #[inline]
            fn $m(&mut self, b: f64) { *self = *self $op b; }
        }
    )*};
}
assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /);

impl num_traits::Zero for Dd {
    fn zero() -> Self {
        Dd::ZERO
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl num_traits::One for Dd {
    fn one() -> Self {
        Dd::ONE
    }
}

impl num_traits::Num for Dd {
    type FromStrRadixErr = num_traits::ParseFloatError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        f64::from_str_radix(s, radix).map(Dd::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, tol: f64) -> bool {
        (a - b).abs().to_f64() <= tol * b.abs().to_f64().max(1e-300)
    }

    #[test]
    fn arithmetic_keeps_low_word() {
        let third = Dd::ONE / 3.0;
        let back = third * 3.0;
        assert!((back - 1.0).abs().to_f64() < 1e-31);
        let x = Dd::new(1.0) + 1e-20;
        assert_eq!(x.hi, 1.0);
        assert_eq!(x.lo, 1e-20);
    }

    #[test]
    fn sqrt_squares_back() {
        for &v in &[2.0, 0.5, 1e-8, 12345.678] {
            let s = Dd::new(v).sqrt();
            assert!(close(s * s, Dd::new(v), 1e-31));
        }
    }

    #[test]
    fn exp_ln_roundtrip() {
        for &v in &[1e-12, 0.3, 1.0, 7.5, 200.0] {
            let x = Dd::new(v);
            assert!(close(x.ln().exp(), x, 1e-30));
        }
        // ln 2 to full precision
        assert!(close(Dd::new(2.0).ln(), Dd::LN_2, 1e-31));
    }

    #[test]
    fn trig_identities() {
        for &v in &[0.1, 0.7, 1.5, 3.0, -2.2] {
            let (s, c) = Dd::new(v).sin_cos();
            assert!((s * s + c * c - 1.0).abs().to_f64() < 1e-31);
            assert!((s.to_f64() - v.sin()).abs() < 1e-15);
        }
        let half = Dd::new(0.5).asin();
        assert!(close(half * 6.0, Dd::PI, 1e-31));
    }

    #[test]
    fn hyperbolic() {
        let x = Dd::new(0.75);
        let s = x.sinh();
        assert!(close(s.asinh(), x, 1e-30));
        let c = x.cosh();
        assert!((c * c - s * s - 1.0).abs().to_f64() < 1e-30);
        let tiny = Dd::new(1e-5);
        assert!(close(tiny.sinh(), Dd::new(1e-5) + Dd::new(1e-15) / 6.0, 1e-20));
    }
}
