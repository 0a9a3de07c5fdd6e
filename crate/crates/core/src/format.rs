//! Text formats: `.nw` quadruple catalogs and quaternary matrix dumps.
//!
//! A `.nw` file is a sequence of records separated by blank lines:
//!
//! ```text
//! # mode: full
//! n=3
//! A: +++
//! B: +--
//! C: +--
//! D: +--
//! ```
//!
//! `# key: value` lines directly above `n=` are record metadata. A leading
//! block of `# key: value` lines followed by a blank line is the catalog
//! header. Other `#` lines are comments and are dropped. Sign strings may
//! contain spaces between characters. Files written by [`serialize_catalog`]
//! parse back byte for byte.

use std::fmt::Write as _;

use num_complex::Complex;
use thiserror::Error;

use crate::gaussian::{Gaussian, GaussianMatrix};
use crate::quad::{Quadruple, SLOT_LABELS};
use crate::row::CirculantRow;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: row {row} is not symmetric")]
    SymmetryViolation { line: usize, row: char },
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub type Metadata = Vec<(String, String)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadrupleRecord {
    pub quad: Quadruple,
    pub metadata: Metadata,
}

impl QuadrupleRecord {
    pub fn new(quad: Quadruple) -> Self {
        Self {
            quad,
            metadata: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.push((key.to_string(), value.to_string()));
        self
    }

    pub fn order(&self) -> usize {
        self.quad.order()
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.metadata.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Catalog {
    pub header: Metadata,
    pub records: Vec<QuadrupleRecord>,
}

fn key_value(comment: &str) -> Option<(String, String)> {
    let body = comment.strip_prefix('#')?.strip_prefix(' ')?;
    let (k, v) = body.split_once(": ")?;
    (!k.is_empty() && !k.contains(char::is_whitespace)).then(|| (k.to_string(), v.to_string()))
}

pub fn parse_catalog(text: &str) -> Result<Catalog, FormatError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut catalog = Catalog::default();
    let mut i = 0;
    let mut first_block = true;
    while i < lines.len() {
        if lines[i].trim().is_empty() {
            i += 1;
            continue;
        }
        let start = i;
        let mut pending = Metadata::new();
        while i < lines.len() && lines[i].starts_with('#') {
            pending.extend(key_value(lines[i]));
            i += 1;
        }
        if i >= lines.len() || lines[i].trim().is_empty() {
            // comment-only block
            if first_block && start == 0 {
                catalog.header = pending;
            }
            first_block = false;
            continue;
        }
        first_block = false;
        let (record, next) = parse_record(&lines, i)?;
        catalog.records.push(QuadrupleRecord {
            quad: record,
            metadata: pending,
        });
        i = next;
    }
    Ok(catalog)
}

pub fn parse_quadruple_file(text: &str) -> Result<Vec<QuadrupleRecord>, FormatError> {
    Ok(parse_catalog(text)?.records)
}

fn parse_record(lines: &[&str], start: usize) -> Result<(Quadruple, usize), FormatError> {
    let header = lines[start].trim_end();
    let lineno = start + 1;
    let order: usize = header
        .strip_prefix("n=")
        .ok_or_else(|| parse_err(lineno, 1, format!("expected `n=<order>`, found `{header}`")))?
        .parse()
        .map_err(|_| parse_err(lineno, 3, "order is not a positive integer"))?;
    if order.is_multiple_of(2) {
        return Err(parse_err(lineno, 3, format!("order {order} is not odd")));
    }
    let mut rows = Vec::with_capacity(4);
    let mut i = start + 1;
    for &label in &SLOT_LABELS {
        while i < lines.len() && lines[i].starts_with('#') {
            i += 1;
        }
        let lineno = i + 1;
        let Some(line) = lines.get(i) else {
            return Err(parse_err(lineno, 1, format!("missing row {label}")));
        };
        let prefix = format!("{label}:");
        let body = line
            .strip_prefix(&prefix)
            .ok_or_else(|| parse_err(lineno, 1, format!("expected row {label}")))?;
        let mut entries = Vec::with_capacity(order);
        for (col, ch) in body.char_indices() {
            let column = prefix.len() + col + 1;
            match ch {
                '+' => entries.push(1),
                '-' => entries.push(-1),
                ' ' | '\t' => {}
                _ => return Err(parse_err(lineno, column, format!("unexpected character `{ch}`"))),
            }
        }
        if entries.len() != order {
            return Err(parse_err(
                lineno,
                1,
                format!("row {label} has {} entries, expected {order}", entries.len()),
            ));
        }
        let row = CirculantRow::new(entries).map_err(|e| parse_err(lineno, 1, e.to_string()))?;
        if label != 'A' && !row.is_symmetric() {
            return Err(FormatError::SymmetryViolation {
                line: lineno,
                row: label,
            });
        }
        rows.push(row);
        i += 1;
    }
    let [a, b, c, d]: [CirculantRow; 4] = rows.try_into().expect("four rows");
    let quad = Quadruple::new(a, b, c, d).expect("orders and symmetry already checked");
    Ok((quad, i))
}

fn write_metadata(out: &mut String, md: &Metadata) {
    for (k, v) in md {
        let _ = writeln!(out, "# {k}: {v}");
    }
}

pub fn serialize_quadruple(record: &QuadrupleRecord) -> String {
    let mut out = String::new();
    write_metadata(&mut out, &record.metadata);
    let _ = writeln!(out, "n={}", record.order());
    for (label, row) in SLOT_LABELS.iter().zip(record.quad.rows()) {
        let _ = writeln!(out, "{label}: {row}");
    }
    out
}

pub fn serialize_catalog(catalog: &Catalog) -> String {
    let mut out = String::new();
    if !catalog.header.is_empty() {
        write_metadata(&mut out, &catalog.header);
        out.push('\n');
    }
    let records: Vec<String> = catalog.records.iter().map(serialize_quadruple).collect();
    out.push_str(&records.join("\n"));
    out
}

fn gaussian_token(z: Gaussian) -> &'static str {
    match (z.re, z.im) {
        (1, 0) => "1",
        (-1, 0) => "-1",
        (0, 1) => "i",
        (0, -1) => "-i",
        _ => panic!("entry {z} is not a fourth root of unity"),
    }
}

/// One line per row, entries `1`, `-1`, `i`, `-i` separated by commas.
pub fn write_quaternary(h: &GaussianMatrix, metadata: &Metadata) -> String {
    let mut out = String::new();
    write_metadata(&mut out, metadata);
    for row in h.entries().rows() {
        let tokens: Vec<&str> = row.iter().map(|&z| gaussian_token(z)).collect();
        out.push_str(&tokens.join(","));
        out.push('\n');
    }
    out
}

/// Parses blank-line separated quaternary matrices.
pub fn parse_quaternary(text: &str) -> Result<Vec<GaussianMatrix>, FormatError> {
    let mut out = Vec::new();
    let mut block: Vec<Vec<Gaussian>> = Vec::new();
    let mut flush = |block: &mut Vec<Vec<Gaussian>>, line: usize| -> Result<(), FormatError> {
        if block.is_empty() {
            return Ok(());
        }
        let dim = block.len();
        if block.iter().any(|r| r.len() != dim) {
            return Err(parse_err(line, 1, "matrix is not square"));
        }
        let flat: Vec<Gaussian> = block.drain(..).flatten().collect();
        let arr = ndarray::Array2::from_shape_vec((dim, dim), flat).expect("square shape");
        out.push(GaussianMatrix::new(arr));
        Ok(())
    };
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            flush(&mut block, i + 1)?;
            continue;
        }
        let mut row = Vec::new();
        for (j, tok) in line.split(',').enumerate() {
            let z = match tok.trim() {
                "1" => Complex::new(1, 0),
                "-1" => Complex::new(-1, 0),
                "i" => Complex::new(0, 1),
                "-i" => Complex::new(0, -1),
                other => return Err(parse_err(i + 1, j + 1, format!("bad entry `{other}`"))),
            };
            row.push(z);
        }
        block.push(row);
    }
    flush(&mut block, text.lines().count())?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIVIAL: &str = "n=1\nA: +\nB: +\nC: +\nD: +\n";

    #[test]
    fn trivial_record() {
        let recs = parse_quadruple_file(TRIVIAL).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].quad, Quadruple::from_signs("+", "+", "+", "+").unwrap());
        assert_eq!(serialize_quadruple(&recs[0]), TRIVIAL);
    }

    #[test]
    fn spaces_and_comments() {
        let text = "# a note without key value\nn=3\nA: + + +\nB: +--\n# between rows\nC: + - -\nD: +--\n";
        let recs = parse_quadruple_file(text).unwrap();
        assert_eq!(recs[0].quad.a().to_string(), "+++");
        assert!(recs[0].metadata.is_empty());
    }

    #[test]
    fn metadata_and_header_round_trip() {
        let text = "# order: 3\n# classes: 2\n\n# decomposition: (3, -1, -1, -1)\nn=3\nA: +++\nB: +--\nC: +--\nD: +--\n\nn=3\nA: ++-\nB: +++\nC: +--\nD: +--\n";
        let cat = parse_catalog(text).unwrap();
        assert_eq!(cat.header.len(), 2);
        assert_eq!(cat.records.len(), 2);
        assert_eq!(cat.records[0].get("decomposition"), Some("(3, -1, -1, -1)"));
        assert_eq!(serialize_catalog(&cat), text);
    }

    #[test]
    fn symmetry_violation() {
        let text = "n=3\nA: +++\nB: ++-\nC: +--\nD: +--\n";
        assert_eq!(
            parse_quadruple_file(text),
            Err(FormatError::SymmetryViolation { line: 3, row: 'B' })
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_quadruple_file("n=3\nA: +x+\nB: +--\nC: +--\nD: +--\n").unwrap_err();
        assert_eq!(
            err,
            FormatError::Parse {
                line: 2,
                column: 5,
                message: "unexpected character `x`".into()
            }
        );
        assert!(matches!(
            parse_quadruple_file("n=3\nA: ++\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_quadruple_file("n=4\n"),
            Err(FormatError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_quadruple_file("n=3\nA: +++\nB: +--\n"),
            Err(FormatError::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_quadruple_file("m=3\n"),
            Err(FormatError::Parse { line: 1, column: 1, .. })
        ));
    }

    #[test]
    fn quaternary_text_round_trip() {
        let q = Quadruple::from_signs("+++", "+--", "+--", "+--").unwrap();
        let h = crate::gaussian::build_quaternary(&q).unwrap();
        let text = write_quaternary(&h, &vec![("order".into(), "6".into())]);
        assert!(text.starts_with("# order: 6\n"));
        let parsed = parse_quaternary(&format!("{text}\n{text}")).unwrap();
        assert_eq!(parsed, vec![h.clone(), h]);
        assert!(parse_quaternary("1,2\n").is_err());
        assert!(parse_quaternary("1,1\n1\n").is_err());
    }
}
