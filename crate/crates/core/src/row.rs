//! Circulant (-1,1)-rows and their symmetry classes.
//!
//! A circulant matrix is stored as its first row. Entries are `i8` values in
//! `{-1, 1}`; the order is the row length and is always odd.

use std::fmt;

use crate::error::{NwError, Result};

/// Safety bound on the order so that PAF values and dense products stay far
/// inside 64-bit range.
pub const MAX_ORDER: usize = 1 << 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryKind {
    /// `x[k] == x[n-k]` for every `k`.
    Symmetric,
    /// `x[k] == x[n-k]` for every `k > 1`; `x[1]` and `x[n-1]` are free.
    AlmostSymmetric,
    General,
}

/// First row of a circulant (-1,1)-matrix of odd order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CirculantRow {
    entries: Vec<i8>,
}

impl CirculantRow {
    pub fn new(entries: Vec<i8>) -> Result<Self> {
        let n = entries.len();
        if n.is_multiple_of(2) {
            return Err(NwError::EvenOrder(n));
        }
        if n > MAX_ORDER {
            return Err(NwError::OrderTooLarge(n));
        }
        if let Some((i, &v)) = entries.iter().enumerate().find(|(_, &v)| v != 1 && v != -1) {
            return Err(NwError::InvalidEntry(v as i64, i));
        }
        Ok(Self { entries })
    }

    /// Parses a string of `+` and `-` characters. Whitespace is ignored.
    pub fn from_signs(signs: &str) -> Result<Self> {
        let mut entries = Vec::with_capacity(signs.len());
        for (i, ch) in signs.chars().filter(|c| !c.is_whitespace()).enumerate() {
            match ch {
                '+' => entries.push(1),
                '-' => entries.push(-1),
                _ => return Err(NwError::InvalidEntry(ch as i64, i)),
            }
        }
        Self::new(entries)
    }

    /// The all-ones row of order `n`.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<i8>) -> Self {
        debug_assert!(entries.len() % 2 == 1);
        Self { entries }
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> i8 {
        self.entries[k % self.entries.len()]
    }

    pub fn row_sum(&self) -> i64 {
        self.entries.iter().map(|&v| v as i64).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.order();
        (1..n).all(|k| self.entries[k] == self.entries[n - k])
    }

    pub fn is_almost_symmetric(&self) -> bool {
        let n = self.order();
        (2..n.saturating_sub(1)).all(|k| self.entries[k] == self.entries[n - k])
    }

    /// The narrowest symmetry class the row belongs to.
    pub fn symmetry(&self) -> SymmetryKind {
        if self.is_symmetric() {
            SymmetryKind::Symmetric
        } else if self.is_almost_symmetric() {
            SymmetryKind::AlmostSymmetric
        } else {
            SymmetryKind::General
        }
    }

    pub fn satisfies(&self, kind: SymmetryKind) -> bool {
        match kind {
            SymmetryKind::Symmetric => self.is_symmetric(),
            SymmetryKind::AlmostSymmetric => self.is_almost_symmetric(),
            SymmetryKind::General => true,
        }
    }

    pub fn negated(&self) -> Self {
        Self::from_vec_unchecked(self.entries.iter().map(|&v| -v).collect())
    }

    /// Row of `X·S^j`: entry `k` becomes `x[(k + j) mod n]`.
    pub fn shifted(&self, j: usize) -> Self {
        let n = self.order();
        Self::from_vec_unchecked((0..n).map(|k| self.entries[(k + j) % n]).collect())
    }

    /// Negates the row if needed so that the first entry is `+1`.
    pub fn normalized(&self) -> Self {
        if self.entries[0] < 0 {
            self.negated()
        } else {
            self.clone()
        }
    }

    /// Lexicographically largest row among all cyclic shifts and negated
    /// cyclic shifts (`+` ranks above `-`).
    pub fn signed_shift_max(&self) -> Self {
        let n = self.order();
        let neg = self.negated();
        (0..n)
            .flat_map(|j| [self.shifted(j), neg.shifted(j)])
            .max()
            .expect("order is at least one")
    }

    /// The unique symmetric signed shift with first entry `+1`, if any.
    pub fn symmetric_form(&self) -> Option<Self> {
        let n = self.order();
        (0..n).map(|j| self.shifted(j).normalized()).find(|r| r.is_symmetric())
    }

    /// Number of the mutually independent entries of a symmetric row, `(n-1)/2`.
    pub fn half_len(&self) -> usize {
        (self.order() - 1) / 2
    }
}

impl fmt::Display for CirculantRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.entries {
            f.write_str(if v > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}
