//! Scalar abstraction so the covariance pipeline can run in `f64` or in
//! double-double arithmetic.
//!
//! Highly squeezed inputs (cosh 2r ~ 1e17 at r = 20) cancel every digit of an
//! `f64` when the partially transposed spectrum is formed, so the bounds and
//! acceptance code evaluate those states in [`Dd`].

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use twofloat::TwoFloat;

pub trait Real:
    Copy
    + Debug
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn of(x: f64) -> Self;
    fn as_f64(self) -> f64;
    fn sqrt(self) -> Self;

    /// `(e^x, e^-x)` with a product that is one to working precision.
    fn exp_pm(x: f64) -> (Self, Self);

    /// `(cos x, sin x)` normalised so that `c² + s² = 1` to working precision.
    fn cos_sin(x: f64) -> (Self, Self);

    fn zero() -> Self {
        Self::of(0.0)
    }

    fn one() -> Self {
        Self::of(1.0)
    }

    fn half() -> Self {
        Self::of(0.5)
    }

    fn two() -> Self {
        Self::of(2.0)
    }

    fn abs(self) -> Self {
        if self < Self::zero() { -self } else { self }
    }
}

impl Real for f64 {
    fn of(x: f64) -> Self {
        x
    }

    fn as_f64(self) -> f64 {
        self
    }

    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }

    fn exp_pm(x: f64) -> (Self, Self) {
        (x.exp(), (-x).exp())
    }

    fn cos_sin(x: f64) -> (Self, Self) {
        let (s, c) = x.sin_cos();
        (c, s)
    }
}

/// Double-double scalar (about 32 significant digits).
///
/// Addition and multiplication come from `twofloat`; division and square
/// root are done here because `twofloat` 0.8 drops the low word of the
/// reciprocal residual.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Dd(pub TwoFloat);

impl Dd {
    pub fn hi(self) -> f64 {
        self.0.hi()
    }

    pub fn lo(self) -> f64 {
        self.0.lo()
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd(TwoFloat::from(x))
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        Dd(self.0 + rhs.0)
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        Dd(self.0 - rhs.0)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        Dd(self.0 * rhs.0)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd(-self.0)
    }
}

// Long division with three f64 quotient digits.
impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let b = rhs.0.hi();
        let q1 = self.0.hi() / b;
        let r = self.0 - rhs.0 * q1;
        let q2 = r.hi() / b;
        let r = r - rhs.0 * q2;
        let q3 = r.hi() / b;
        Dd(TwoFloat::new_add(q1, q2) + q3)
    }
}

impl Real for Dd {
    fn of(x: f64) -> Self {
        Dd::from(x)
    }

    fn as_f64(self) -> f64 {
        self.0.hi() + self.0.lo()
    }

    fn sqrt(self) -> Self {
        let h = self.0.hi();
        if h <= 0.0 {
            return Dd::from(if h == 0.0 { 0.0 } else { f64::NAN });
        }
        let s = Dd::from(h.sqrt());
        s + (self - s * s) / (Dd::from(2.0) * s)
    }

    fn exp_pm(x: f64) -> (Self, Self) {
        let e = Dd::from(x.exp());
        (e, Dd::from(1.0) / e)
    }

    fn cos_sin(x: f64) -> (Self, Self) {
        let (s, c) = x.sin_cos();
        let (c, s) = (Dd::from(c), Dd::from(s));
        let n = (c * c + s * s).sqrt();
        (c / n, s / n)
    }
}
