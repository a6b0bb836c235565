//! Published matrices, kept verbatim. Derived values are compared against
//! these, never substituted for them.

use crate::isometry::Mat3;
use crate::scalars::{parse_scalar, Cyclo};

pub type Rows = [[&'static str; 3]; 3];

pub const FIG8_G1: Rows = [["1", "omega", "-omega"], ["0", "1", "-conj(omega)"], ["0", "0", "1"]];
pub const FIG8_G2: Rows = [["1", "1", "-omega"], ["-1", "0", "-conj(omega)"], ["-conj(omega)", "omega", "1"]];
pub const FIG8_G3: Rows =
    [["1", "1", "-omega"], ["-omega", "conj(omega)", "-1 - conj(omega)"], ["-conj(omega)", "0", "1 + omega"]];
pub const FIG8_H1: Rows = [["1", "0", "0"], ["-2*conj(omega)", "1", "0"], ["-2*omega - 1", "2*omega", "1"]];
pub const FIG8_H2: Rows = [["1", "0", "0"], ["conj(omega)", "1", "0"], ["-omega", "-omega", "1"]];

pub const PICARD_P: Rows = [["1", "1", "-omega"], ["0", "-omega", "omega"], ["0", "0", "1"]];
pub const PICARD_Q: Rows = [["1", "1", "-omega"], ["0", "-1", "1"], ["0", "0", "1"]];
pub const PICARD_I: Rows = [["0", "0", "1"], ["0", "-1", "0"], ["1", "0", "0"]];

pub const WH_G1: Rows = [["1", "0", "-i"], ["-1-i", "1", "-1+i"], ["-1-i", "1-i", "i"]];
pub const WH_G2: Rows = [["1", "1-i", "-1+i"], ["-1-i", "-1", "1-i"], ["-1+i", "1+i", "-1-2*i"]];
pub const WH_G3: Rows = [["i", "1+i", "-i"], ["1-i", "-1-2*i", "2*i"], ["-1-i", "-3+i", "3+2*i"]];
pub const WH_G4: Rows = [["-i", "0", "0"], ["-1+i", "-1", "0"], ["-1+i", "-1+i", "-i"]];
pub const WH_H1: Rows = [["-1-6*i", "-6-4*i", "2+4*i"], ["-4+6*i", "1+8*i", "2-4*i"], ["2+4*i", "4+2*i", "-1-2*i"]];
pub const WH_H1_PRIME: Rows = [["5", "2-6*i", "-4"], ["-8-4*i", "-7+8*i", "6+2*i"], ["-8+8*i", "8+12*i", "5-8*i"]];

/// The four figure-eight edge products and their simplified forms, in TeX.
pub const FIG8_EDGE_PRODUCTS: [&str; 4] = [
    "z_1w_1\\tilde z'_2w_3 z_2 \\tilde w_1",
    "z'_1 w'_1 z'_2\\tilde w'_3\\tilde z_2 \\tilde w'_1",
    "z_3\\tilde w_3 \\tilde z_3\\tilde w'_2\\tilde z_1\\tilde w_2",
    "\\tilde z'_3 w'_3 z'_3 w'_2 \\tilde z'_1 w_2",
];
pub const FIG8_EDGE_SIMPLIFIED: [&str; 4] = [
    "(z_2-1)\\tilde z'_2(w_1-1)\\tilde w_1",
    "(z'_2-1)\\tilde z_2(\\tilde w'_1-1) w'_1",
    "(\\tilde z_1-1)z_3(\\tilde w_3-1)\\tilde w'_2",
    "(\\tilde z'_1-1) z'_3(w'_3-1) w_2",
];

pub fn matrix(rows: &Rows) -> Mat3<Cyclo> {
    Mat3::from_fn(|i, j| parse_scalar(rows[i][j]).expect("golden entries parse"))
}

/// Equality of TeX strings up to whitespace.
pub fn same_tex(a: &str, b: &str) -> bool {
    a.chars().filter(|c| !c.is_whitespace()).eq(b.chars().filter(|c| !c.is_whitespace()))
}
