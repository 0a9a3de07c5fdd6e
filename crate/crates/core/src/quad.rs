//! Quadruples of near Williamson candidates and the exact additivity check.

use std::fmt;

use crate::algebra::paf;
use crate::error::{NwError, Result};
use crate::row::CirculantRow;

pub const SLOT_LABELS: [char; 4] = ['A', 'B', 'C', 'D'];

/// An ordered `(A, B, C, D)` of circulant rows of one order with `B`, `C`, `D`
/// symmetric. Additivity is not an invariant of the type; see
/// [`verify_additivity`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quadruple {
    rows: [CirculantRow; 4],
}

impl Quadruple {
    pub fn new(a: CirculantRow, b: CirculantRow, c: CirculantRow, d: CirculantRow) -> Result<Self> {
        let rows = [a, b, c, d];
        check_orders(&rows)?;
        for (label, row) in SLOT_LABELS.iter().zip(&rows).skip(1) {
            if !row.is_symmetric() {
                return Err(NwError::NotSymmetric(*label));
            }
        }
        Ok(Self { rows })
    }

    pub fn from_signs(a: &str, b: &str, c: &str, d: &str) -> Result<Self> {
        Self::new(
            CirculantRow::from_signs(a)?,
            CirculantRow::from_signs(b)?,
            CirculantRow::from_signs(c)?,
            CirculantRow::from_signs(d)?,
        )
    }

    pub(crate) fn from_rows_unchecked(rows: [CirculantRow; 4]) -> Self {
        Self { rows }
    }

    pub fn order(&self) -> usize {
        self.rows[0].order()
    }

    pub fn a(&self) -> &CirculantRow {
        &self.rows[0]
    }

    pub fn b(&self) -> &CirculantRow {
        &self.rows[1]
    }

    pub fn c(&self) -> &CirculantRow {
        &self.rows[2]
    }

    pub fn d(&self) -> &CirculantRow {
        &self.rows[3]
    }

    pub fn rows(&self) -> &[CirculantRow; 4] {
        &self.rows
    }

    pub fn row_sums(&self) -> [i64; 4] {
        self.rows.clone().map(|r| r.row_sum())
    }
}

impl fmt::Display for Quadruple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.rows[0], self.rows[1], self.rows[2], self.rows[3]
        )
    }
}

pub(crate) fn check_orders(rows: &[CirculantRow]) -> Result<()> {
    if let Some(first) = rows.first() {
        for r in rows {
            if r.order() != first.order() {
                return Err(NwError::MixedOrders(first.order(), r.order()));
            }
        }
    }
    Ok(())
}

/// `AAᵀ + BBᵀ + CCᵀ + DDᵀ = 4nI`, checked as `Σ p_k = 0` for `k = 1 … n-1`.
pub fn verify_additivity(quad: &Quadruple) -> bool {
    additive_rows(quad.rows())
}

/// Same check on four arbitrary rows; used where the symmetry of `B, C, D`
/// has not been established.
pub fn additive_rows(rows: &[CirculantRow]) -> bool {
    if check_orders(rows).is_err() || rows.is_empty() {
        return false;
    }
    let n = rows[0].order();
    let pafs: Vec<_> = rows.iter().map(paf).collect();
    (1..n).all(|k| pafs.iter().map(|p| p.get(k)).sum::<i64>() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additivity_small_cases() {
        let q = Quadruple::from_signs("+", "+", "+", "+").unwrap();
        assert!(verify_additivity(&q));
        let q = Quadruple::from_signs("+++", "+--", "+--", "+--").unwrap();
        assert!(verify_additivity(&q));
        let q = Quadruple::from_signs("+++", "+++", "+--", "+--").unwrap();
        assert!(!verify_additivity(&q));
    }

    #[test]
    fn construction_checks() {
        assert_eq!(
            Quadruple::from_signs("+++", "+--", "++-", "+--"),
            Err(NwError::NotSymmetric('C'))
        );
        assert_eq!(
            Quadruple::from_signs("+++", "+--", "+", "+--"),
            Err(NwError::MixedOrders(3, 1))
        );
        assert!(!additive_rows(&[
            CirculantRow::from_signs("+").unwrap(),
            CirculantRow::from_signs("+++").unwrap()
        ]));
    }
}
