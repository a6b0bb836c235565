use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Default absolute tolerance of the floating backend.
pub const DEFAULT_TOL: f64 = 1e-9;

/// A double-precision complex value with the tolerance used to compare it.
///
/// Only meshes and sampling use this; nothing certified goes through it.
#[derive(Clone, Copy, PartialEq)]
pub struct Approx {
    pub z: Complex64,
    pub tol: f64,
}

impl Approx {
    pub fn new(re: f64, im: f64) -> Self {
        Approx { z: Complex64::new(re, im), tol: DEFAULT_TOL }
    }

    pub fn from_complex(z: Complex64) -> Self {
        Approx { z, tol: DEFAULT_TOL }
    }

    pub fn with_tol(self, tol: f64) -> Self {
        Approx { tol, ..self }
    }

    pub fn cis(theta: f64) -> Self {
        Self::from_complex(Complex64::from_polar(1.0, theta))
    }

    fn join(self, other: Approx, z: Complex64) -> Approx {
        Approx { z, tol: self.tol.max(other.tol) }
    }
}

impl fmt::Debug for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Approx({} ± {:e})", self, self.tol)
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Complex64 { re, im } = self.z;
        if im.abs() <= self.tol {
            write!(f, "{re:.12}")
        } else if re.abs() <= self.tol {
            write!(f, "{im:.12}*i")
        } else if im < 0.0 {
            write!(f, "{re:.12} - {:.12}*i", -im)
        } else {
            write!(f, "{re:.12} + {im:.12}*i")
        }
    }
}

macro_rules! approx_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Approx {
            type Output = Approx;
            fn $method(self, rhs: Approx) -> Approx {
                self.join(rhs, self.z $op rhs.z)
            }
        }
        impl<'a> $tr<&'a Approx> for Approx {
            type Output = Approx;
            fn $method(self, rhs: &'a Approx) -> Approx {
                self.join(*rhs, self.z $op rhs.z)
            }
        }
        impl<'a, 'b> $tr<&'b Approx> for &'a Approx {
            type Output = Approx;
            fn $method(self, rhs: &'b Approx) -> Approx {
                self.join(*rhs, self.z $op rhs.z)
            }
        }
        impl<'a> $tr<Approx> for &'a Approx {
            type Output = Approx;
            fn $method(self, rhs: Approx) -> Approx {
                self.join(rhs, self.z $op rhs.z)
            }
        }
    };
}

approx_binop!(Add, add, +);
approx_binop!(Sub, sub, -);
approx_binop!(Mul, mul, *);

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx { z: -self.z, tol: self.tol }
    }
}

impl Neg for &Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        -*self
    }
}
