use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Degree of Q(ζ₂₄) over Q.
pub const DEGREE: usize = 8;

/// Exponents k with gcd(k, 24) = 1; ζ ↦ ζ^k runs over the Galois group.
pub const GALOIS: [usize; 8] = [1, 5, 7, 11, 13, 17, 19, 23];

// ζ^k for k in 0..24 as integer coordinates, reduced by ζ⁸ = ζ⁴ − 1.
static POWERS: LazyLock<[[i64; DEGREE]; 24]> = LazyLock::new(|| {
    let mut table = [[0i64; DEGREE]; 24];
    let mut cur = [0i64; DEGREE];
    cur[0] = 1;
    for row in table.iter_mut() {
        *row = cur;
        let top = cur[DEGREE - 1];
        let mut next = [0i64; DEGREE];
        next[1..DEGREE].copy_from_slice(&cur[..DEGREE - 1]);
        next[4] += top;
        next[0] -= top;
        cur = next;
    }
    table
});

/// An element of Q(ζ₂₄), ζ = e^{iπ/12}, written over the power basis 1, ζ, …, ζ⁷.
///
/// Coefficients share one positive denominator and the representation is kept
/// reduced, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    num: [BigInt; DEGREE],
    den: BigInt,
}

impl Cyclo {
    fn from_parts(num: [BigInt; DEGREE], den: BigInt) -> Self {
        let mut c = Cyclo { num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for n in self.num.iter_mut() {
                *n = -std::mem::take(n);
            }
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(n);
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            self.den /= &g;
            for n in self.num.iter_mut() {
                *n /= &g;
            }
        }
    }

    pub fn zero() -> Self {
        Cyclo { num: Default::default(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = n;
        Cyclo { num, den: BigInt::one() }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = q.numer().clone();
        Self::from_parts(num, q.denom().clone())
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = BigInt::from(n);
        Self::from_parts(num, BigInt::from(d))
    }

    /// Builds an element from its power-basis coordinates.
    pub fn from_coeffs(coeffs: &[BigRational; DEGREE]) -> Self {
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = std::array::from_fn(|k| coeffs[k].numer() * (&den / coeffs[k].denom()));
        Self::from_parts(num, den)
    }

    pub fn coeffs(&self) -> [BigRational; DEGREE] {
        std::array::from_fn(|k| BigRational::new(self.num[k].clone(), self.den.clone()))
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let row = &POWERS[k.rem_euclid(24) as usize];
        let num = std::array::from_fn(|j| BigInt::from(row[j]));
        Cyclo { num, den: BigInt::one() }
    }

    pub fn i() -> Self {
        Self::zeta_pow(6)
    }

    /// ω = e^{−iπ/3}.
    pub fn omega() -> Self {
        Self::zeta_pow(20)
    }

    pub fn sqrt2() -> Self {
        Self::zeta_pow(3) + Self::zeta_pow(21)
    }

    pub fn sqrt3() -> Self {
        Self::zeta_pow(2) + Self::zeta_pow(22)
    }

    pub fn sqrt6() -> Self {
        Self::sqrt2() * Self::sqrt3()
    }

    /// Named constants accepted by the expression grammar.
    pub fn constant(name: &str) -> Result<Self> {
        Ok(match name {
            "i" => Self::i(),
            "omega" => Self::omega(),
            "sqrt2" => Self::sqrt2(),
            "sqrt3" => Self::sqrt3(),
            "sqrt6" => Self::sqrt6(),
            "zeta24" => Self::zeta_pow(1),
            _ => return Err(Error::UnknownConstant(name.to_string())),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    /// Applies the automorphism ζ ↦ ζ^k (k coprime to 24).
    pub fn galois(&self, k: usize) -> Self {
        debug_assert!(GALOIS.contains(&(k % 24)));
        let mut num: [BigInt; DEGREE] = Default::default();
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &POWERS[(j * k) % 24];
            for (slot, &r) in num.iter_mut().zip(row) {
                if r != 0 {
                    *slot += c * r;
                }
            }
        }
        Cyclo { num, den: self.den.clone() }
    }

    pub fn conj(&self) -> Self {
        self.galois(23)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn re(&self) -> Self {
        (self + &self.conj()).scale_ratio(1, 2)
    }

    pub fn im(&self) -> Self {
        // (a − ā)/(2i) = −i(a − ā)/2
        ((self - &self.conj()) * Self::i()).scale_ratio(-1, 2)
    }

    /// |a|² = a·ā.
    pub fn abs2(&self) -> Self {
        self * &self.conj()
    }

    pub fn scale_ratio(&self, n: i64, d: i64) -> Self {
        let num = std::array::from_fn(|k| &self.num[k] * n);
        Self::from_parts(num, &self.den * d)
    }

    /// Field norm down to Q: the product of all eight conjugates.
    pub fn norm(&self) -> BigRational {
        let mut p = self.clone();
        for &k in &GALOIS[1..] {
            p = p * self.galois(k);
        }
        p.as_rational().expect("norm lies in Q")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut others = Self::one();
        for &k in &GALOIS[1..] {
            others = others * self.galois(k);
        }
        let n = (self * &others).as_rational().expect("norm lies in Q");
        Ok(others * Self::from_rational(&n.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Floating evaluation at ζ = e^{iπ/12}.
    pub fn to_complex(&self) -> num_complex::Complex64 {
        use num_traits::ToPrimitive;
        let d = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut z = num_complex::Complex64::new(0.0, 0.0);
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ang = std::f64::consts::PI * k as f64 / 12.0;
            let c = c.to_f64().unwrap_or(f64::NAN) / d;
            z += num_complex::Complex64::from_polar(c, ang);
        }
        z
    }

    pub(crate) fn raw(&self) -> (&[BigInt; DEGREE], &BigInt) {
        (&self.num, &self.den)
    }

    /// Power-basis coordinates serialized as "num/den" strings.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect()
    }
}

fn add_impl(a: &Cyclo, b: &Cyclo, sign: i64) -> Cyclo {
    if a.den == b.den {
        let num = std::array::from_fn(|k| if sign > 0 { &a.num[k] + &b.num[k] } else { &a.num[k] - &b.num[k] });
        return Cyclo::from_parts(num, a.den.clone());
    }
    let l = a.den.lcm(&b.den);
    let fa = &l / &a.den;
    let fb = &l / &b.den;
    let num = std::array::from_fn(|k| {
        let x = &a.num[k] * &fa;
        let y = &b.num[k] * &fb;
        if sign > 0 {
            x + y
        } else {
            x - y
        }
    });
    Cyclo::from_parts(num, l)
}

fn mul_impl(a: &Cyclo, b: &Cyclo) -> Cyclo {
    if a.is_zero() || b.is_zero() {
        return Cyclo::zero();
    }
    let mut wide: [BigInt; 2 * DEGREE - 1] = Default::default();
    for (i, x) in a.num.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.num.iter().enumerate() {
            if !y.is_zero() {
                wide[i + j] += x * y;
            }
        }
    }
    // x^k = x^{k-4} − x^{k-8} for k ≥ 8
    for k in (DEGREE..2 * DEGREE - 1).rev() {
        let c = std::mem::take(&mut wide[k]);
        if c.is_zero() {
            continue;
        }
        wide[k - 4] += &c;
        wide[k - 8] -= c;
    }
    let num = std::array::from_fn(|k| std::mem::take(&mut wide[k]));
    Cyclo::from_parts(num, &a.den * &b.den)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b Cyclo> for &'a Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &'b Cyclo) -> Cyclo {
                $body(self, rhs)
            }
        }
        impl<'b> $tr<&'b Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &'b Cyclo) -> Cyclo {
                $body(&self, rhs)
            }
        }
        impl $tr<Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                $body(self, &rhs)
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, 1));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, -1));
forward_binop!(Mul, mul, mul_impl);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { num: self.num.map(|n| -n), den: self.den }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -self.clone()
    }
}

impl Default for Cyclo {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclo {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo({self})")
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::expr::format_cyclo(self))
    }
}
