//! Scalars: exact arithmetic in Q(ζ₂₄) and a tolerance-based floating backend.
//!
//! Geometry code is generic over [`Scalar`], so the same formulas run on either
//! backend. Mixing backends requires an explicit conversion.

mod approx;
mod cyclo;
pub mod expr;
mod ring;
mod sign;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

pub use approx::{Approx, DEFAULT_TOL};
pub use cyclo::{Cyclo, DEGREE, GALOIS};
pub use ring::{in_ring, solve_in_span, Ring};
pub use sign::{cmp_real, precision_cap, sign_real, sign_real_with_cap, Sign};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

/// Field operations shared by both backends.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn i() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_ratio(n: i64, d: i64) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self>;
    /// Sign of a real value. Exact on [`Cyclo`]; within tolerance on [`Approx`].
    fn sign(&self) -> Result<Sign>;
    fn to_complex(&self) -> Complex64;
    /// Non-negative square root of a real value, when the backend can represent it.
    fn sqrt_real(&self) -> Option<Self>;

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * &rhs.inv()?)
    }

    fn is_real(&self) -> bool {
        (self.clone() - &self.conj()).is_zero()
    }

    fn re(&self) -> Self {
        (self.clone() + &self.conj()) * &Self::from_ratio(1, 2)
    }

    fn im(&self) -> Self {
        (self.clone() - &self.conj()) * &Self::i() * &Self::from_ratio(-1, 2)
    }

    fn abs2(&self) -> Self {
        self.clone() * &self.conj()
    }

    fn eq_val(&self, other: &Self) -> bool {
        (self.clone() - other).is_zero()
    }

    fn is_positive(&self) -> Result<bool> {
        Ok(self.sign()? == Sign::Positive)
    }

    fn pow_i(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }
}

impl Scalar for Cyclo {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Cyclo::zero()
    }
    fn one() -> Self {
        Cyclo::one()
    }
    fn i() -> Self {
        Cyclo::i()
    }
    fn from_int(n: i64) -> Self {
        Cyclo::from_int(n)
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        Cyclo::from_ratio(n, d)
    }
    fn conj(&self) -> Self {
        Cyclo::conj(self)
    }
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
    fn inv(&self) -> Result<Self> {
        Cyclo::inv(self)
    }
    fn sign(&self) -> Result<Sign> {
        sign_real(self)
    }
    fn to_complex(&self) -> Complex64 {
        Cyclo::to_complex(self)
    }
    fn re(&self) -> Self {
        Cyclo::re(self)
    }
    fn im(&self) -> Self {
        Cyclo::im(self)
    }
    fn is_real(&self) -> bool {
        Cyclo::is_real(self)
    }
    fn pow_i(&self, e: u32) -> Self {
        self.pow(e)
    }

    /// Exact roots exist here only for squares of rationals.
    fn sqrt_real(&self) -> Option<Self> {
        use num_rational::BigRational;
        use num_traits::Signed;
        let q = self.as_rational()?;
        if q.is_negative() {
            return None;
        }
        let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
        let r = BigRational::new(n, d);
        (&r * &r == q).then(|| Cyclo::from_rational(&r))
    }
}

impl Scalar for Approx {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Approx::new(0.0, 0.0)
    }
    fn one() -> Self {
        Approx::new(1.0, 0.0)
    }
    fn i() -> Self {
        Approx::new(0.0, 1.0)
    }
    fn from_int(n: i64) -> Self {
        Approx::new(n as f64, 0.0)
    }
    fn from_ratio(n: i64, d: i64) -> Self {
        Approx::new(n as f64 / d as f64, 0.0)
    }
    fn conj(&self) -> Self {
        Approx { z: self.z.conj(), tol: self.tol }
    }
    fn is_zero(&self) -> bool {
        self.z.norm() <= self.tol
    }
    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Approx { z: self.z.inv(), tol: self.tol })
    }
    fn sign(&self) -> Result<Sign> {
        if self.z.im.abs() > self.tol {
            return Err(Error::NotReal(self.to_string()));
        }
        Ok(if self.z.re > self.tol {
            Sign::Positive
        } else if self.z.re < -self.tol {
            Sign::Negative
        } else {
            Sign::Zero
        })
    }
    fn to_complex(&self) -> Complex64 {
        self.z
    }
    fn sqrt_real(&self) -> Option<Self> {
        (self.z.im.abs() <= self.tol && self.z.re >= -self.tol)
            .then(|| Approx { z: Complex64::new(self.z.re.max(0.0).sqrt(), 0.0), tol: self.tol })
    }
}

/// Converts an exact value to the floating backend.
pub fn approx_of(x: &Cyclo) -> Approx {
    Approx::from_complex(x.to_complex())
}

pub fn parse_scalar(src: &str) -> Result<Cyclo> {
    expr::parse(src)
}
