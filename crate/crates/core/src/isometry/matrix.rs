use std::fmt;

use crate::error::{Error, Result};
use crate::heisenberg::Vector3;
use crate::scalars::Scalar;

/// A 3×3 matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat3<S>(pub [[S; 3]; 3]);

impl<S: Scalar> Mat3<S> {
    pub fn from_fn(f: impl Fn(usize, usize) -> S) -> Self {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn diag(d: [S; 3]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { S::zero() })
    }

    /// The matrix of the Hermitian form: rows (0,0,1), (0,1,0), (1,0,0).
    pub fn form() -> Self {
        Self::from_fn(|i, j| if i + j == 2 { S::one() } else { S::zero() })
    }

    pub fn from_columns(cols: [&Vector3<S>; 3]) -> Self {
        Self::from_fn(|i, j| cols[j].0[i].clone())
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.0[i][j]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::from_fn(|i, j| {
            self.0[i][0].clone() * &rhs.0[0][j]
                + self.0[i][1].clone() * &rhs.0[1][j]
                + self.0[i][2].clone() * &rhs.0[2][j]
        })
    }

    pub fn mul_vec(&self, v: &Vector3<S>) -> Vector3<S> {
        Vector3(std::array::from_fn(|i| {
            self.0[i][0].clone() * &v.0[0] + self.0[i][1].clone() * &v.0[1] + self.0[i][2].clone() * &v.0[2]
        }))
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::from_fn(|i, j| self.0[i][j].clone() * k)
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].conj())
    }

    /// Conjugate transpose M*.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn trace(&self) -> S {
        self.0[0][0].clone() + &self.0[1][1] + &self.0[2][2]
    }

    fn minor(&self, r: usize, c: usize) -> S {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let m = |a: usize, b: usize| &self.0[rows[a]][cols[b]];
        m(0, 0).clone() * m(1, 1) - &(m(0, 1).clone() * m(1, 0))
    }

    pub fn det(&self) -> S {
        self.0[0][0].clone() * &self.minor(0, 0) - &(self.0[0][1].clone() * &self.minor(0, 1))
            + &(self.0[0][2].clone() * &self.minor(0, 2))
    }

    /// Sum of the principal 2×2 minors: the middle coefficient of the
    /// characteristic polynomial.
    pub fn principal_minor_sum(&self) -> S {
        self.minor(0, 0) + &self.minor(1, 1) + &self.minor(2, 2)
    }

    pub fn adjugate(&self) -> Self {
        Self::from_fn(|i, j| {
            let m = self.minor(j, i);
            if (i + j) % 2 == 0 {
                m
            } else {
                -m
            }
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::Singular);
        }
        Ok(self.adjugate().scale(&d.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// The common diagonal value if the matrix is scalar.
    pub fn scalar_value(&self) -> Option<S> {
        let off = (0..3).all(|i| (0..3).all(|j| i == j || self.0[i][j].is_zero()));
        let d = &self.0[0][0];
        (off && self.0[1][1].eq_val(d) && self.0[2][2].eq_val(d)).then(|| d.clone())
    }

    /// λ with self = λ·other, if one exists and is nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<S> {
        let (pi, pj) = (0..9).map(|k| (k / 3, k % 3)).find(|&(i, j)| !other.0[i][j].is_zero())?;
        let lambda = self.0[pi][pj].checked_div(&other.0[pi][pj]).ok()?;
        if lambda.is_zero() {
            return None;
        }
        let ok = (0..3).all(|i| (0..3).all(|j| self.0[i][j].eq_val(&(other.0[i][j].clone() * &lambda))));
        ok.then_some(lambda)
    }

    /// First entry where self and other fail to be proportional, with both values.
    pub fn first_disagreement(&self, other: &Self) -> Option<(usize, usize)> {
        let pivot =
            (0..9).map(|k| (k / 3, k % 3)).find(|&(i, j)| !other.0[i][j].is_zero() || !self.0[i][j].is_zero())?;
        let (pi, pj) = pivot;
        (0..9).map(|k| (k / 3, k % 3)).find(|&(i, j)| {
            let lhs = self.0[i][j].clone() * &other.0[pi][pj];
            let rhs = other.0[i][j].clone() * &self.0[pi][pj];
            !lhs.eq_val(&rhs)
        })
    }

    pub fn map<T, F: Fn(&S) -> T>(&self, f: F) -> Mat3<T> {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| f(&self.0[i][j]))))
    }
}

impl<S: fmt::Display> fmt::Display for Mat3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}
