//! Quaternary Hadamard matrices over the Gaussian integers.

use ndarray::{s, Array2};
use num_complex::Complex;

use crate::error::{NwError, Result};
use crate::matrix::williamson_type_set;
use crate::quad::{verify_additivity, Quadruple};

pub type Gaussian = Complex<i64>;

const I: Gaussian = Complex::new(0, 1);
const ONE: Gaussian = Complex::new(1, 0);

/// Square matrix with Gaussian integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianMatrix {
    entries: Array2<Gaussian>,
}

impl GaussianMatrix {
    pub fn new(entries: Array2<Gaussian>) -> Self {
        assert!(entries.is_square(), "Gaussian matrices are square");
        Self { entries }
    }

    pub fn dimension(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &Array2<Gaussian> {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Array2<Gaussian> {
        self.entries.t().mapv(|z| z.conj())
    }
}

fn is_unit(z: Gaussian) -> bool {
    z.norm_sqr() == 1
}

/// `HH* = dim·I` in exact arithmetic.
pub fn verify_quaternary(h: &GaussianMatrix) -> Result<bool> {
    if let Some(((i, j), _)) = h.entries.indexed_iter().find(|(_, &z)| !is_unit(z)) {
        return Err(NwError::NonUnitEntry(i, j));
    }
    let dim = h.dimension() as i64;
    let gram = h.entries.dot(&h.adjoint());
    Ok(gram.indexed_iter().all(|((i, j), &z)| {
        z == if i == j {
            Complex::new(dim, 0)
        } else {
            Complex::new(0, 0)
        }
    }))
}

/// `(1+i)/2 · [[A+iB, C+iD], [iC+D, -iA-B]]` with `{A·R, B, C, D}` in place of
/// `(A, B, C, D)`.
///
/// The doubled matrix `(1+i)·[…]` is formed first; every entry of it lies in
/// `{±2, ±2i}` so the halving is exact.
pub fn build_quaternary(quad: &Quadruple) -> Result<GaussianMatrix> {
    if !verify_additivity(quad) {
        return Err(NwError::NotAdditive);
    }
    let n = quad.order();
    let [a, b, c, d] = williamson_type_set(quad).map(|m| m.mapv(|v| Complex::new(v, 0)));
    let blocks = [
        [&a + &b.mapv(|z| z * I), &c + &d.mapv(|z| z * I)],
        [c.mapv(|z| z * I) + &d, -a.mapv(|z| z * I) - &b],
    ];
    let scale = ONE + I;
    let mut doubled = Array2::zeros((2 * n, 2 * n));
    for (bi, row) in blocks.iter().enumerate() {
        for (bj, m) in row.iter().enumerate() {
            doubled
                .slice_mut(s![bi * n..(bi + 1) * n, bj * n..(bj + 1) * n])
                .assign(&m.mapv(|z| z * scale));
        }
    }
    debug_assert!(verify_doubled(&doubled, 2 * n as i64));
    let entries = doubled.mapv(|z: Gaussian| {
        debug_assert!(z.re % 2 == 0 && z.im % 2 == 0);
        Complex::new(z.re / 2, z.im / 2)
    });
    Ok(GaussianMatrix { entries })
}

// (2H)(2H)* = 4·dim·I
fn verify_doubled(doubled: &Array2<Gaussian>, dim: i64) -> bool {
    let gram = doubled.dot(&doubled.t().mapv(|z| z.conj()));
    gram.indexed_iter().all(|((i, j), &z)| {
        z == if i == j {
            Complex::new(4 * dim, 0)
        } else {
            Complex::new(0, 0)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::arr2;

    #[test]
    fn order_two_from_trivial_quadruple() {
        let q = Quadruple::from_signs("+", "+", "+", "+").unwrap();
        let h = build_quaternary(&q).unwrap();
        assert_eq!(h.entries(), &arr2(&[[I, I], [I, -I]]));
        assert_eq!(verify_quaternary(&h), Ok(true));
    }

    #[test]
    fn entry_map() {
        // (1+i)(x+iy)/2 for the mixed-sign pairs
        let f = |x: i64, y: i64| (ONE + I) * Complex::new(x, y);
        assert_eq!(f(1, -1), Complex::new(2, 0));
        assert_eq!(f(-1, 1), Complex::new(-2, 0));
    }

    #[test]
    fn verify_quaternary_small() {
        let one = GaussianMatrix::new(arr2(&[[ONE]]));
        assert_eq!(verify_quaternary(&one), Ok(true));
        let flat = GaussianMatrix::new(arr2(&[[ONE, ONE], [ONE, ONE]]));
        assert_eq!(verify_quaternary(&flat), Ok(false));
        let bad = GaussianMatrix::new(arr2(&[[ONE, ONE + I], [ONE, ONE]]));
        assert_eq!(verify_quaternary(&bad), Err(NwError::NonUnitEntry(0, 1)));
    }

    #[test]
    fn order_six() {
        let q = Quadruple::from_signs("+++", "+--", "+--", "+--").unwrap();
        let h = build_quaternary(&q).unwrap();
        assert_eq!(h.dimension(), 6);
        assert_eq!(verify_quaternary(&h), Ok(true));
    }
}
