//! Dense integer matrices for the verification and export paths.
//!
//! This is where circulant rows get materialised: the back-circulant
//! reversal `R`, amicability checks, and the Williamson block array `W`.
//! Nothing here runs inside the search loop.

use ndarray::{s, Array2};

use crate::error::{NwError, Result};
use crate::quad::{verify_additivity, Quadruple};
use crate::row::CirculantRow;

pub type IntMatrix = Array2<i64>;

/// Circulant matrix with `m[i][j] = x[(j - i) mod n]`.
pub fn circulant_matrix(row: &CirculantRow) -> IntMatrix {
    let n = row.order();
    Array2::from_shape_fn((n, n), |(i, j)| row.get(j + n - i) as i64)
}

/// Back circulant matrix with `m[i][j] = x[(i + j) mod n]`.
pub fn back_circulant_matrix(row: &CirculantRow) -> IntMatrix {
    let n = row.order();
    Array2::from_shape_fn((n, n), |(i, j)| row.get(i + j) as i64)
}

/// The back circulant `R` with first row `(0, …, 0, 1)`.
pub fn reversal_matrix(n: usize) -> IntMatrix {
    Array2::from_shape_fn((n, n), |(i, j)| i64::from((i + j) % n == n - 1))
}

/// `A·R` for the circulant with first row `row`.
pub fn apply_reversal(row: &CirculantRow) -> IntMatrix {
    circulant_matrix(row).dot(&reversal_matrix(row.order()))
}

pub fn is_scalar_identity(m: &IntMatrix, scale: i64) -> bool {
    m.indexed_iter().all(|((i, j), &v)| v == if i == j { scale } else { 0 })
}

/// `HHᵀ = dim·I`.
pub fn is_hadamard(h: &IntMatrix) -> bool {
    h.is_square() && h.iter().all(|&v| v == 1 || v == -1) && is_scalar_identity(&h.dot(&h.t()), h.nrows() as i64)
}

/// `XYᵀ = YXᵀ` for every pair of the given square matrices.
pub fn verify_amicability(matrices: &[IntMatrix]) -> Result<bool> {
    if let Some(first) = matrices.first() {
        for m in matrices {
            if m.dim() != first.dim() {
                return Err(NwError::MixedOrders(first.nrows(), m.nrows()));
            }
        }
    }
    for (i, x) in matrices.iter().enumerate() {
        for y in &matrices[i + 1..] {
            if x.dot(&y.t()) != y.dot(&x.t()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The Williamson type set `{A·R, B, C, D}` of a near Williamson quadruple.
pub fn williamson_type_set(quad: &Quadruple) -> [IntMatrix; 4] {
    [
        apply_reversal(quad.a()),
        circulant_matrix(quad.b()),
        circulant_matrix(quad.c()),
        circulant_matrix(quad.d()),
    ]
}

/// The `4n × 4n` array
///
/// ```text
///  A  B  C  D
/// -B  A  D -C
/// -C -D  A  B
/// -D  C -B  A
/// ```
///
/// built from `{A·R, B, C, D}`.
pub fn build_williamson_block(quad: &Quadruple) -> Result<IntMatrix> {
    if !verify_additivity(quad) {
        return Err(NwError::NotAdditive);
    }
    let n = quad.order();
    let [a, b, c, d] = williamson_type_set(quad);
    // (block, sign) per block position
    let layout: [[(&IntMatrix, i64); 4]; 4] = [
        [(&a, 1), (&b, 1), (&c, 1), (&d, 1)],
        [(&b, -1), (&a, 1), (&d, 1), (&c, -1)],
        [(&c, -1), (&d, -1), (&a, 1), (&b, 1)],
        [(&d, -1), (&c, 1), (&b, -1), (&a, 1)],
    ];
    let mut w = Array2::zeros((4 * n, 4 * n));
    for (bi, row) in layout.iter().enumerate() {
        for (bj, &(m, sign)) in row.iter().enumerate() {
            w.slice_mut(s![bi * n..(bi + 1) * n, bj * n..(bj + 1) * n])
                .assign(&(m * sign));
        }
    }
    Ok(w)
}
