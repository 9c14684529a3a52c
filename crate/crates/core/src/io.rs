//! JSON export/import of every object kind, plus plain-text and
//! sign-notation grid rendering.
//!
//! JSON schemas (field order is fixed, so serialization is
//! byte-deterministic):
//!
//! ```text
//! {"kind":"gmatrix","u":4,"shift":1,"rows":[[3,0,3,null,0,0], ..]}
//! {"kind":"code","a":3,"g":2,"n":6,"words":[[1,0,1,null,0,0], ..]}
//! {"kind":"array","a":3,"rows":[[..], ..]}
//! {"kind":"latin","n":5,"rows":[[..], ..]}
//! ```
//!
//! `null` encodes the zero symbol and an integer e encodes omega^e.
//! Import re-validates every structural invariant (exponent ranges,
//! rectangular shape, declared circulant structure, word uniqueness), so a
//! hand-edited file cannot smuggle in an ill-formed object.

use crate::arrays::{ArrayError, LatinSquare, SymbolArray};
use crate::bgw::{BgwError, Entry, GMatrix};
use crate::cwcode::{Code, CodeError, Codeword};
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Matrix(#[from] BgwError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Array(#[from] ArrayError),
    #[error("alphabet size {a} does not match group order {g}")]
    AlphabetMismatch { a: u32, g: u32 },
    #[error("duplicate word at index {0}")]
    DuplicateWord(usize),
    #[error("sign notation requires group order 2, not {0}")]
    SignNotation(u32),
    #[error(transparent)]
    File(#[from] std::io::Error),
}

/// The serialized form of every exportable object, tagged by "kind".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ExportObject {
    Gmatrix {
        u: u32,
        shift: Option<u32>,
        rows: Vec<Vec<Option<u32>>>,
    },
    Code {
        a: u32,
        g: u32,
        n: usize,
        words: Vec<Vec<Option<u32>>>,
    },
    Array {
        a: u32,
        rows: Vec<Vec<Option<u32>>>,
    },
    Latin {
        n: usize,
        rows: Vec<Vec<Option<u32>>>,
    },
}

fn encode_row(row: &[Entry]) -> Vec<Option<u32>> {
    row.iter()
        .map(|e| match e {
            Entry::Zero => None,
            Entry::Pow(e) => Some(*e),
        })
        .collect()
}

fn decode_row(row: &[Option<u32>]) -> Vec<Entry> {
    row.iter()
        .map(|e| match e {
            None => Entry::Zero,
            Some(e) => Entry::Pow(*e),
        })
        .collect()
}

impl ExportObject {
    pub fn from_gmatrix(w: &GMatrix) -> Self {
        ExportObject::Gmatrix {
            u: w.u(),
            shift: w.shift(),
            rows: w.rows().iter().map(|r| encode_row(r)).collect(),
        }
    }

    pub fn from_code(c: &Code) -> Self {
        ExportObject::Code {
            a: c.a(),
            g: c.g(),
            n: c.n(),
            words: c
                .words()
                .iter()
                .map(|w| encode_row(w.symbols()))
                .collect(),
        }
    }

    pub fn from_array(a: &SymbolArray) -> Self {
        ExportObject::Array {
            a: a.a(),
            rows: a.rows().iter().map(|r| encode_row(r)).collect(),
        }
    }

    pub fn from_latin(l: &LatinSquare) -> Self {
        ExportObject::Latin {
            n: l.order(),
            rows: l.rows().iter().map(|r| encode_row(r)).collect(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ExportObject::Gmatrix { .. } => "gmatrix",
            ExportObject::Code { .. } => "code",
            ExportObject::Array { .. } => "array",
            ExportObject::Latin { .. } => "latin",
        }
    }

    pub fn into_gmatrix(&self) -> Result<GMatrix, IoError> {
        match self {
            ExportObject::Gmatrix { u, shift, rows } => {
                let grid: Vec<Vec<Entry>> = rows.iter().map(|r| decode_row(r)).collect();
                let m = GMatrix::new(*u, grid)?;
                match shift {
                    Some(c) => Ok(m.declare_circulant(*c)?),
                    None => Ok(m),
                }
            }
            other => Err(wrong_kind("gmatrix", other)),
        }
    }

    pub fn into_code(&self) -> Result<Code, IoError> {
        match self {
            ExportObject::Code { a, g, n, words } => {
                if *a != g + 1 {
                    return Err(IoError::AlphabetMismatch { a: *a, g: *g });
                }
                let mut code = Code::new(*n, *g);
                for (i, w) in words.iter().enumerate() {
                    let word = Codeword::new(*g, decode_row(w)).map_err(IoError::Code)?;
                    if !code.insert(word).map_err(IoError::Code)? {
                        return Err(IoError::DuplicateWord(i));
                    }
                }
                Ok(code)
            }
            other => Err(wrong_kind("code", other)),
        }
    }

    pub fn into_array(&self) -> Result<SymbolArray, IoError> {
        match self {
            ExportObject::Array { a, rows } => {
                let grid: Vec<Vec<Entry>> = rows.iter().map(|r| decode_row(r)).collect();
                Ok(SymbolArray::new(*a, grid)?)
            }
            other => Err(wrong_kind("array", other)),
        }
    }

    pub fn into_latin(&self) -> Result<LatinSquare, IoError> {
        match self {
            ExportObject::Latin { n, rows } => {
                let grid: Vec<Vec<Entry>> = rows.iter().map(|r| decode_row(r)).collect();
                let l = LatinSquare::new(grid)?;
                if l.order() != *n {
                    return Err(IoError::Array(ArrayError::RaggedRow {
                        row: 0,
                        len: l.order(),
                        expected: *n,
                    }));
                }
                Ok(l)
            }
            other => Err(wrong_kind("latin", other)),
        }
    }
}

fn wrong_kind(expected: &str, got: &ExportObject) -> IoError {
    IoError::Json(serde::de::Error::custom(format!(
        "expected kind \"{expected}\", found \"{}\"",
        got.kind()
    )))
}

/// Compact single-line JSON with a trailing newline; byte-deterministic.
pub fn to_json(obj: &ExportObject) -> String {
    let mut s = serde_json::to_string(obj).expect("export objects always serialize");
    s.push('\n');
    s
}

pub fn from_json(s: &str) -> Result<ExportObject, IoError> {
    Ok(serde_json::from_str(s)?)
}

pub fn write_file(path: &Path, obj: &ExportObject) -> Result<(), IoError> {
    Ok(std::fs::write(path, to_json(obj))?)
}

pub fn read_file(path: &Path) -> Result<ExportObject, IoError> {
    from_json(&std::fs::read_to_string(path)?)
}

/// A JSON array of Latin squares, the export form of an MSLS collection.
pub fn msls_to_json(squares: &[LatinSquare]) -> String {
    let objs: Vec<ExportObject> = squares.iter().map(ExportObject::from_latin).collect();
    let mut s = serde_json::to_string(&objs).expect("export objects always serialize");
    s.push('\n');
    s
}

pub fn msls_from_json(s: &str) -> Result<Vec<LatinSquare>, IoError> {
    let objs: Vec<ExportObject> = serde_json::from_str(s)?;
    objs.iter().map(|o| o.into_latin()).collect()
}

/// Space-separated text grid, one row per line, LF endings: "0" for the
/// zero symbol, the bare exponent otherwise. (Note the collision: omega^0
/// also prints as "0". The text form is for reading, not re-parsing; JSON
/// is the round-trip format.)
pub fn grid_text<'a, I>(rows: I) -> String
where
    I: IntoIterator<Item = &'a [Entry]>,
{
    let mut out = String::new();
    for row in rows {
        let mut first = true;
        for e in row {
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&e.to_string());
        }
        out.push('\n');
    }
    out
}

/// Sign-notation grid for group order 2: "0" zero, "+" omega^0,
/// "-" omega^1.
pub fn grid_signs<'a, I>(rows: I, g: u32) -> Result<String, IoError>
where
    I: IntoIterator<Item = &'a [Entry]>,
{
    if g != 2 {
        return Err(IoError::SignNotation(g));
    }
    let mut out = String::new();
    for row in rows {
        let mut first = true;
        for e in row {
            if !first {
                out.push(' ');
            }
            first = false;
            out.push(match e {
                Entry::Zero => '0',
                Entry::Pow(0) => '+',
                Entry::Pow(1) => '-',
                Entry::Pow(e) => unreachable!("exponent {e} under group order 2"),
            });
        }
        out.push('\n');
    }
    Ok(out)
}

/// Row views of a code's words, for the grid renderers.
pub fn code_rows(c: &Code) -> impl Iterator<Item = &[Entry]> {
    c.words().iter().map(|w| w.symbols())
}

/// Row views of a matrix.
pub fn matrix_rows(w: &GMatrix) -> impl Iterator<Item = &[Entry]> {
    w.rows().iter().map(|r| r.as_slice())
}

/// Row views of an array.
pub fn array_rows(a: &SymbolArray) -> impl Iterator<Item = &[Entry]> {
    a.rows().iter().map(|r| r.as_slice())
}

/// Row views of a Latin square.
pub fn latin_rows(l: &LatinSquare) -> impl Iterator<Item = &[Entry]> {
    l.rows().iter().map(|r| r.as_slice())
}
