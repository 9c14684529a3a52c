//! Transcribed reference tables for the 5-ary worked examples: the 6 x 6
//! circulant matrix, the 24-word code it generates, the 12-word sign-form
//! code over the order-2 subgroup, the 25 x 6 orthogonal array, and the
//! four order-5 squares cut from it.
//!
//! Encoding: -1 stands for the zero symbol, e >= 0 for omega^e. Tables
//! that the source displays transposed are kept in display orientation
//! and accessor functions perform the transposition, so each constant can
//! be eyeballed against the original layout.

use bgw_core::bgw::{self, Entry, GMatrix};
use bgw_core::cwcode::{Code, Codeword};
use bgw_core::arrays::{LatinSquare, SymbolArray};

pub fn ent(x: i32) -> Entry {
    if x < 0 {
        Entry::Zero
    } else {
        Entry::Pow(x as u32)
    }
}

pub fn row(xs: &[i32]) -> Vec<Entry> {
    xs.iter().copied().map(ent).collect()
}

/// First row of the reference 6 x 6 omega-circulant over the order-4
/// group: (w^3, 1, w^3, 0, 1, 1).
pub const MATRIX_FIRST_ROW: [i32; 6] = [3, 0, 3, -1, 0, 0];

/// The full reference matrix: omega-circulant closure of the first row
/// with wrap multiplier omega.
pub fn reference_matrix() -> GMatrix {
    bgw::omega_circulant(&row(&MATRIX_FIRST_ROW), 4, 1).unwrap()
}

/// The 24-word equidistant code, in display orientation: row i is
/// coordinate i, column j is word j. Word 0 is the matrix's first row and
/// each following word is the omega-shift of its predecessor.
pub const CODE_24_DISPLAY: [[i32; 24]; 6] = [
    [3, 1, 1, -1, 0, 1, 0, 2, 2, -1, 1, 2, 1, 3, 3, -1, 2, 3, 2, 0, 0, -1, 3, 0],
    [0, 3, 1, 1, -1, 0, 1, 0, 2, 2, -1, 1, 2, 1, 3, 3, -1, 2, 3, 2, 0, 0, -1, 3],
    [3, 0, 3, 1, 1, -1, 0, 1, 0, 2, 2, -1, 1, 2, 1, 3, 3, -1, 2, 3, 2, 0, 0, -1],
    [-1, 3, 0, 3, 1, 1, -1, 0, 1, 0, 2, 2, -1, 1, 2, 1, 3, 3, -1, 2, 3, 2, 0, 0],
    [0, -1, 3, 0, 3, 1, 1, -1, 0, 1, 0, 2, 2, -1, 1, 2, 1, 3, 3, -1, 2, 3, 2, 0],
    [0, 0, -1, 3, 0, 3, 1, 1, -1, 0, 1, 0, 2, 2, -1, 1, 2, 1, 3, 3, -1, 2, 3, 2],
];

/// The 24 words in table order (display columns), over group order 4.
pub fn code_24_words() -> Vec<Codeword> {
    (0..24)
        .map(|j| {
            let symbols = (0..6).map(|i| ent(CODE_24_DISPLAY[i][j])).collect();
            Codeword::new(4, symbols).unwrap()
        })
        .collect()
}

/// The 12-word sign-form code over the order-2 subgroup, row-major as
/// displayed: + is omega'^0, - is omega'^1 (omega' = -1).
pub const CODE_12_ROWS: [[i32; 6]; 12] = [
    [1, 0, 1, -1, 0, 0],
    [1, 1, 0, 1, -1, 0],
    [1, 1, 1, 0, 1, -1],
    [-1, 1, 1, 1, 0, 1],
    [0, -1, 1, 1, 1, 0],
    [1, 0, -1, 1, 1, 1],
    [0, 1, 0, -1, 1, 1],
    [0, 0, 1, 0, -1, 1],
    [0, 0, 0, 1, 0, -1],
    [-1, 0, 0, 0, 1, 0],
    [1, -1, 0, 0, 0, 1],
    [0, 1, -1, 0, 0, 0],
];

pub fn code_12_words() -> Vec<Codeword> {
    CODE_12_ROWS
        .iter()
        .map(|r| Codeword::new(2, row(r)).unwrap())
        .collect()
}

/// The 25 x 6 orthogonal array in display orientation: row i is array
/// column i, column j is array row j. Array rows are sorted by their
/// first coordinate (0, w, w^2, w^3, 1), five per block.
pub const OA_25_DISPLAY: [[i32; 25]; 6] = [
    [-1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 0, 0, 0, 0, 0],
    [-1, 1, 2, 3, 0, 3, 1, 0, -1, 2, 0, 2, 1, -1, 3, 0, 1, 3, 2, -1, -1, 1, 2, 0, 3],
    [-1, 1, 2, 3, 0, 0, 3, -1, 2, 1, 1, 0, -1, 3, 2, 3, 2, 1, -1, 0, 1, 0, 3, 2, -1],
    [-1, 3, 0, 1, 2, 3, 0, 1, 2, -1, 0, 1, 2, 3, -1, -1, 1, 2, 3, 0, 1, -1, 2, 3, 0],
    [-1, 0, 1, 2, 3, -1, 3, 1, 0, 2, -1, 0, 2, 1, 3, 0, -1, 1, 3, 2, 3, 1, -1, 2, 0],
    [-1, 3, 0, 1, 2, 0, -1, 3, 1, 2, 1, -1, 0, 2, 3, 0, 2, -1, 1, 3, 0, 1, 3, -1, 2],
];

/// The orthogonal array as 25 rows of 6 symbols over alphabet 5.
pub fn oa_25() -> SymbolArray {
    let grid = (0..25)
        .map(|j| (0..6).map(|i| ent(OA_25_DISPLAY[i][j])).collect())
        .collect();
    SymbolArray::new(5, grid).unwrap()
}

/// The four order-5 squares as printed, in block order (w, w^2, w^3, 1).
/// Each printed square is the display subarray under its block label, so
/// its rows run over array columns 1..5; the extraction orientation (rows
/// = array rows) is the transpose of these.
pub const SQUARES_DISPLAY: [[[i32; 5]; 5]; 4] = [
    [
        [3, 1, 0, -1, 2],
        [0, 3, -1, 2, 1],
        [3, 0, 1, 2, -1],
        [-1, 3, 1, 0, 2],
        [0, -1, 3, 1, 2],
    ],
    [
        [0, 2, 1, -1, 3],
        [1, 0, -1, 3, 2],
        [0, 1, 2, 3, -1],
        [-1, 0, 2, 1, 3],
        [1, -1, 0, 2, 3],
    ],
    [
        [0, 1, 3, 2, -1],
        [3, 2, 1, -1, 0],
        [-1, 1, 2, 3, 0],
        [0, -1, 1, 3, 2],
        [0, 2, -1, 1, 3],
    ],
    [
        [-1, 1, 2, 0, 3],
        [1, 0, 3, 2, -1],
        [1, -1, 2, 3, 0],
        [3, 1, -1, 2, 0],
        [0, 1, 3, -1, 2],
    ],
];

/// Printed square k, transposed into the extraction orientation (rows =
/// array rows restricted to columns 1..5).
pub fn printed_square_transposed(k: usize) -> LatinSquare {
    let grid = (0..5)
        .map(|r| (0..5).map(|c| ent(SQUARES_DISPLAY[k][c][r])).collect())
        .collect();
    LatinSquare::new(grid).unwrap()
}

/// Builds a code from explicit words, preserving order.
pub fn code_from(n: usize, g: u32, words: Vec<Codeword>) -> Code {
    Code::from_words(n, g, words).unwrap()
}
