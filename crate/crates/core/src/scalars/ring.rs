use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Cyclo;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Ring {
    #[serde(rename = "Z")]
    Integers,
    #[serde(rename = "Z[i]")]
    Gaussian,
    #[serde(rename = "Z[omega]")]
    Eisenstein,
}

impl Ring {
    pub fn parse(s: &str) -> Option<Ring> {
        match s {
            "Z" => Some(Ring::Integers),
            "Z[i]" => Some(Ring::Gaussian),
            "Z[omega]" | "Z[w]" => Some(Ring::Eisenstein),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Ring::Integers => "Z",
            Ring::Gaussian => "Z[i]",
            Ring::Eisenstein => "Z[omega]",
        }
    }

    /// Integral basis of the ring.
    pub fn basis(self) -> Vec<Cyclo> {
        match self {
            Ring::Integers => vec![Cyclo::one()],
            Ring::Gaussian => vec![Cyclo::one(), Cyclo::i()],
            Ring::Eisenstein => vec![Cyclo::one(), Cyclo::omega()],
        }
    }
}

/// Coordinates of `target` in the Q-span of `basis`, if it lies there.
///
/// Plain Gauss-Jordan over Q on the 8 × n system of power-basis coordinates.
pub fn solve_in_span(basis: &[Cyclo], target: &Cyclo) -> Option<Vec<BigRational>> {
    let n = basis.len();
    let cols: Vec<[BigRational; 8]> = basis.iter().map(Cyclo::coeffs).collect();
    let rhs = target.coeffs();
    let mut rows: Vec<Vec<BigRational>> = (0..8)
        .map(|r| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::with_capacity(n);
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut out = vec![BigRational::zero(); n];
    for (row, col) in pivots {
        out[col] = rows[row][n].clone();
    }
    Some(out)
}

/// Membership of `a` in Z, Z[i] or Z[ω].
pub fn in_ring(a: &Cyclo, ring: Ring) -> bool {
    match solve_in_span(&ring.basis(), a) {
        Some(coords) => coords.iter().all(|c| c.denom().is_one()),
        None => false,
    }
}
