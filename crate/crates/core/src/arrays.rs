//! Strength-t array verification and Latin-square extraction.
//!
//! Appending the all-zero word to the full constant-weight code gives, for
//! g = q - 1 and m = 1, an orthogonal array OA(q^2, q+1, 2, 1); for other
//! divisors g it still gives a covering array with t = 2, lambda = 1.
//! Grouping the OA's rows by their first symbol and cutting away that
//! column yields q - 1 squares of order q that are mutually suitable: any
//! two of them, superimposed, coincide in exactly one cell per row. Their
//! columns are permutations of the alphabet (forced by the OA property);
//! their rows are code words minus a coordinate and generally are not, so
//! the strict two-sided Latin check is reported separately from
//! suitability.

use crate::bgw::Entry;
use crate::cwcode::{Code, Codeword};
use rayon::prelude::*;

/// Upper limit on a^t when tabulating tuple counts.
const TUPLE_SPACE_CAP: u64 = 1_000_000;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum ArrayError {
    #[error("alphabet must have at least two symbols")]
    AlphabetTooSmall,
    #[error("symbol exponent {e} out of range for alphabet size {a}")]
    SymbolOutOfRange { e: u32, a: u32 },
    #[error("row {row} has length {len}, expected {expected}")]
    RaggedRow {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("cannot build an array from an empty code")]
    EmptyCode,
    #[error("the all-zero word is already present")]
    ZeroWordPresent,
    #[error("strength must be at least 1")]
    ZeroStrength,
    #[error("strength {t} exceeds the column count {k}")]
    StrengthTooLarge { t: u32, k: usize },
    #[error("alphabet^strength exceeds the tabulation cap")]
    TupleSpaceTooLarge,
    #[error("columns {cols:?}: tuple {tuple:?} occurs {count} times, expected exactly {lambda}")]
    NotOrthogonal {
        cols: Vec<usize>,
        tuple: Vec<Entry>,
        count: u64,
        lambda: u64,
    },
    #[error("columns {cols:?}: tuple {tuple:?} occurs {count} times, expected at least {lambda}")]
    NotCovering {
        cols: Vec<usize>,
        tuple: Vec<Entry>,
        count: u64,
        lambda: u64,
    },
    #[error("array shape {rows} x {cols} is not n^2 x (n+1) for alphabet size {a}")]
    NotMslsShape { rows: usize, cols: usize, a: u32 },
    #[error("rows with leading symbol omega^{symbol} are not Latin: {which} {index} repeats a symbol")]
    BlockNotLatin {
        symbol: u32,
        which: &'static str,
        index: usize,
    },
    #[error("latin square must be non-empty")]
    EmptySquare,
    #[error("latin squares have different orders: {a} vs {b}")]
    OrderMismatch { a: usize, b: usize },
    #[error("need at least two squares, have {0}")]
    TooFewSquares(usize),
}

/// An N x k grid over the alphabet {Zero} ∪ {omega^0, .., omega^(a-2)} of
/// size a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolArray {
    a: u32,
    ncols: usize,
    grid: Vec<Vec<Entry>>,
}

impl SymbolArray {
    pub fn new(a: u32, grid: Vec<Vec<Entry>>) -> Result<Self, ArrayError> {
        if a < 2 {
            return Err(ArrayError::AlphabetTooSmall);
        }
        let ncols = grid.first().map_or(0, Vec::len);
        for (r, row) in grid.iter().enumerate() {
            if row.len() != ncols {
                return Err(ArrayError::RaggedRow {
                    row: r,
                    len: row.len(),
                    expected: ncols,
                });
            }
            for &s in row {
                if let Entry::Pow(e) = s {
                    if e >= a - 1 {
                        return Err(ArrayError::SymbolOutOfRange { e, a });
                    }
                }
            }
        }
        Ok(SymbolArray { a, ncols, grid })
    }

    /// Alphabet size.
    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn nrows(&self) -> usize {
        self.grid.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.grid
    }

    pub fn entry(&self, r: usize, c: usize) -> Entry {
        self.grid[r][c]
    }
}

/// The code's words, in order, with the all-zero row appended at the end.
pub fn append_zero_word(code: &Code) -> Result<SymbolArray, ArrayError> {
    if code.is_empty() {
        return Err(ArrayError::EmptyCode);
    }
    let zero = Codeword::zero(code.g(), code.n()).expect("group order is positive");
    if code.contains(&zero) {
        return Err(ArrayError::ZeroWordPresent);
    }
    let mut grid: Vec<Vec<Entry>> = code
        .words()
        .iter()
        .map(|w| w.symbols().to_vec())
        .collect();
    grid.push(zero.symbols().to_vec());
    SymbolArray::new(code.a(), grid)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrayKind {
    Oa,
    Ca,
}

impl std::fmt::Display for ArrayKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ArrayKind::Oa => write!(f, "OA"),
            ArrayKind::Ca => write!(f, "CA"),
        }
    }
}

/// Certificate of a verified orthogonal or covering array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ArrayCert {
    pub kind: ArrayKind,
    pub n_rows: u64,
    pub k: u64,
    pub t: u32,
    pub lambda: u64,
}

impl std::fmt::Display for ArrayCert {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}({}, {}, {}, {})",
            self.kind, self.n_rows, self.k, self.t, self.lambda
        )
    }
}

fn symbol_digit(s: Entry) -> u64 {
    match s {
        Entry::Zero => 0,
        Entry::Pow(e) => e as u64 + 1,
    }
}

fn digit_symbol(d: u64) -> Entry {
    if d == 0 {
        Entry::Zero
    } else {
        Entry::Pow(d as u32 - 1)
    }
}

/// All t-subsets of 0..k in lexicographic order.
fn combinations(k: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    fn rec(start: usize, k: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        let remaining = t - cur.len();
        for i in start..=k - remaining {
            cur.push(i);
            rec(i + 1, k, t, cur, out);
            cur.pop();
        }
    }
    if t <= k {
        rec(0, k, t, &mut cur, &mut out);
    }
    out
}

/// Shared scan: for every t-subset of columns, tabulate all a^t tuple
/// counts; report the lexicographically first (column set, tuple) whose
/// count violates the predicate.
fn scan_tuples(
    array: &SymbolArray,
    t: u32,
    lambda: u64,
    exact: bool,
) -> Result<(), ArrayError> {
    let k = array.ncols();
    if t == 0 {
        return Err(ArrayError::ZeroStrength);
    }
    if t as usize > k {
        return Err(ArrayError::StrengthTooLarge { t, k });
    }
    let a = array.a as u64;
    let space = a.checked_pow(t).filter(|&s| s <= TUPLE_SPACE_CAP);
    let space = space.ok_or(ArrayError::TupleSpaceTooLarge)? as usize;
    let t = t as usize;
    let combos = combinations(k, t);

    let first_bad = combos
        .par_iter()
        .enumerate()
        .filter_map(|(ci, cols)| {
            let mut counts = vec![0u64; space];
            for row in &array.grid {
                let mut idx = 0u64;
                for &c in cols {
                    idx = idx * a + symbol_digit(row[c]);
                }
                counts[idx as usize] += 1;
            }
            let bad = counts
                .iter()
                .position(|&c| if exact { c != lambda } else { c < lambda })?;
            // Decode the tuple index back into symbols, most significant
            // digit first.
            let mut tuple = vec![Entry::Zero; t];
            let mut rest = bad as u64;
            for slot in tuple.iter_mut().rev() {
                *slot = digit_symbol(rest % a);
                rest /= a;
            }
            let count = counts[bad];
            Some((
                ci,
                if exact {
                    ArrayError::NotOrthogonal {
                        cols: cols.clone(),
                        tuple,
                        count,
                        lambda,
                    }
                } else {
                    ArrayError::NotCovering {
                        cols: cols.clone(),
                        tuple,
                        count,
                        lambda,
                    }
                },
            ))
        })
        .min_by_key(|&(ci, _)| ci);
    match first_bad {
        Some((_, failure)) => Err(failure),
        None => Ok(()),
    }
}

/// Checks that every tuple over every t columns occurs exactly lambda
/// times. The scan parallelizes over column subsets; the witness is the
/// lexicographically first violation regardless of thread count.
pub fn verify_oa(array: &SymbolArray, t: u32, lambda: u64) -> Result<ArrayCert, ArrayError> {
    scan_tuples(array, t, lambda, true)?;
    Ok(ArrayCert {
        kind: ArrayKind::Oa,
        n_rows: array.nrows() as u64,
        k: array.ncols() as u64,
        t,
        lambda,
    })
}

/// Checks that every tuple over every t columns occurs at least lambda
/// times.
pub fn verify_ca(array: &SymbolArray, t: u32, lambda: u64) -> Result<ArrayCert, ArrayError> {
    scan_tuples(array, t, lambda, false)?;
    Ok(ArrayCert {
        kind: ArrayKind::Ca,
        n_rows: array.nrows() as u64,
        k: array.ncols() as u64,
        t,
        lambda,
    })
}

/// An n x n grid over the same n-symbol alphabet as codes
/// ({Zero} ∪ {omega^0, .., omega^(n-2)}). Construction checks shape and
/// symbol range only; the permutation property is [`verify_latin`]'s job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    n: usize,
    grid: Vec<Vec<Entry>>,
}

impl LatinSquare {
    pub fn new(grid: Vec<Vec<Entry>>) -> Result<Self, ArrayError> {
        let n = grid.len();
        if n == 0 {
            return Err(ArrayError::EmptySquare);
        }
        for (r, row) in grid.iter().enumerate() {
            if row.len() != n {
                return Err(ArrayError::RaggedRow {
                    row: r,
                    len: row.len(),
                    expected: n,
                });
            }
            for &s in row {
                if let Entry::Pow(e) = s {
                    if e as usize >= n - 1 {
                        return Err(ArrayError::SymbolOutOfRange { e, a: n as u32 });
                    }
                }
            }
        }
        Ok(LatinSquare { n, grid })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.grid
    }

    pub fn entry(&self, r: usize, c: usize) -> Entry {
        self.grid[r][c]
    }

    /// First row or column that is not a permutation of the alphabet,
    /// rows before columns.
    pub fn violation(&self) -> Option<(&'static str, usize)> {
        let n = self.n;
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.fill(false);
            for c in 0..n {
                let d = symbol_digit(self.grid[r][c]) as usize;
                if seen[d] {
                    return Some(("row", r));
                }
                seen[d] = true;
            }
        }
        for c in 0..n {
            seen.fill(false);
            for r in 0..n {
                let d = symbol_digit(self.grid[r][c]) as usize;
                if seen[d] {
                    return Some(("column", c));
                }
                seen[d] = true;
            }
        }
        None
    }
}

/// True iff every row and every column is a permutation of the alphabet.
pub fn verify_latin(square: &LatinSquare) -> bool {
    square.violation().is_none()
}

/// Groups the rows of an OA(n^2, n+1, 2, 1) by their symbol in column 0
/// and strips that column: the blocks for the n-1 nonzero symbols, in
/// ascending symbol order and original row order, are order-n squares.
///
/// Strength 2 with lambda = 1 forces every *column* of every block to be a
/// permutation of the alphabet, and that much is enforced here. The block
/// *rows* are array rows with one coordinate removed and routinely repeat
/// symbols (a word with more nonzero coordinates than nonzero symbols
/// must), so the returned squares fail the strict two-sided check of
/// [`verify_latin`] in general. Mutual suitability is the property that
/// survives, and [`verify_msls`] reports both facets separately.
pub fn extract_msls(array: &SymbolArray) -> Result<Vec<LatinSquare>, ArrayError> {
    let n = array.a as usize;
    if array.ncols() != n + 1 || array.nrows() != n * n {
        return Err(ArrayError::NotMslsShape {
            rows: array.nrows(),
            cols: array.ncols(),
            a: array.a,
        });
    }
    verify_oa(array, 2, 1)?;
    let mut squares = Vec::with_capacity(n - 1);
    for s in 0..array.a - 1 {
        let grid: Vec<Vec<Entry>> = array
            .grid
            .iter()
            .filter(|row| row[0] == Entry::Pow(s))
            .map(|row| row[1..].to_vec())
            .collect();
        debug_assert_eq!(grid.len(), n, "strength 2 gives n rows per symbol");
        let square = LatinSquare::new(grid).expect("block shape follows from the OA shape");
        if let Some(index) = column_violation(&square) {
            return Err(ArrayError::BlockNotLatin {
                symbol: s,
                which: "column",
                index,
            });
        }
        squares.push(square);
    }
    Ok(squares)
}

/// First column of the square that is not a permutation, if any.
fn column_violation(square: &LatinSquare) -> Option<usize> {
    let n = square.n;
    let mut seen = vec![false; n];
    for c in 0..n {
        seen.fill(false);
        for r in 0..n {
            let d = symbol_digit(square.grid[r][c]) as usize;
            if seen[d] {
                return Some(c);
            }
            seen[d] = true;
        }
    }
    None
}

/// True iff, for every row index i, the superimposed rows L[i] and M[i]
/// coincide in exactly one position.
pub fn suitable(l: &LatinSquare, m: &LatinSquare) -> Result<bool, ArrayError> {
    if l.n != m.n {
        return Err(ArrayError::OrderMismatch { a: l.n, b: m.n });
    }
    Ok((0..l.n).all(|i| {
        let coincidences = (0..l.n).filter(|&j| l.grid[i][j] == m.grid[i][j]).count();
        coincidences == 1
    }))
}

/// Verdict on a collection of Latin squares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MslsReport {
    pub order: usize,
    pub count: usize,
    /// Every unordered pair of squares is suitable.
    pub all_suitable: bool,
    /// Suitable and of the maximum possible size, order - 1.
    pub complete: bool,
    /// First failing pair in lexicographic order, if any.
    pub first_unsuitable: Option<(usize, usize)>,
    /// Every square passes the strict row-and-column check. Squares cut
    /// from trace-built arrays keep only the column half, so this is
    /// usually false there.
    pub all_latin: bool,
    /// First square with a non-permutation line: (square, "row"/"column",
    /// line index).
    pub first_latin_violation: Option<(usize, &'static str, usize)>,
}

/// Checks suitability over all unordered pairs, plus the strict Latin
/// property of each square.
pub fn verify_msls(squares: &[LatinSquare]) -> Result<MslsReport, ArrayError> {
    if squares.len() < 2 {
        return Err(ArrayError::TooFewSquares(squares.len()));
    }
    let order = squares[0].n;
    for s in &squares[1..] {
        if s.n != order {
            return Err(ArrayError::OrderMismatch { a: order, b: s.n });
        }
    }
    let mut first_unsuitable = None;
    'outer: for i in 0..squares.len() {
        for j in i + 1..squares.len() {
            if !suitable(&squares[i], &squares[j])? {
                first_unsuitable = Some((i, j));
                break 'outer;
            }
        }
    }
    let first_latin_violation = squares
        .iter()
        .enumerate()
        .find_map(|(i, s)| s.violation().map(|(which, index)| (i, which, index)));
    let all_suitable = first_unsuitable.is_none();
    Ok(MslsReport {
        order,
        count: squares.len(),
        all_suitable,
        complete: all_suitable && squares.len() == order - 1,
        first_unsuitable,
        all_latin: first_latin_violation.is_none(),
        first_latin_violation,
    })
}
