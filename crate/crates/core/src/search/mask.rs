//! Rows of order `n <= 63` packed into a `u64`.
//!
//! Entry `i` lives in bit `n-1-i` and `+1` is a set bit, so integer order on
//! masks is lexicographic order on rows with `+` ranked above `-`.

use crate::row::CirculantRow;

#[inline]
pub(crate) fn full(n: usize) -> u64 {
    debug_assert!((1..=63).contains(&n));
    (1u64 << n) - 1
}

#[inline]
pub(crate) fn first_bit(n: usize) -> u64 {
    1u64 << (n - 1)
}

#[inline]
pub(crate) fn bit(x: u64, n: usize, i: usize) -> bool {
    x >> (n - 1 - i) & 1 == 1
}

/// Mask of `X·S^j`: entry `i` becomes entry `(i + j) mod n`.
#[inline]
pub(crate) fn rotate(x: u64, j: usize, n: usize) -> u64 {
    let j = j % n;
    if j == 0 {
        x
    } else {
        ((x << j) | (x >> (n - j))) & full(n)
    }
}

#[inline]
pub(crate) fn negate(x: u64, n: usize) -> u64 {
    !x & full(n)
}

/// `true` iff `x` is at least every cyclic shift and negated cyclic shift of itself.
pub(crate) fn is_signed_shift_max(x: u64, n: usize) -> bool {
    let neg = negate(x, n);
    (0..n).all(|j| rotate(x, j, n) <= x && rotate(neg, j, n) <= x)
}

/// Entry-reversed mask: entry `k` becomes entry `n-k`.
pub(crate) fn reverse(x: u64, n: usize) -> u64 {
    let mut out = x & first_bit(n);
    for k in 1..n {
        if bit(x, n, n - k) {
            out |= 1 << (n - 1 - k);
        }
    }
    out
}

/// `p_k = n - 2·(number of disagreements between row 0 and row k)`.
pub(crate) fn paf(x: u64, n: usize) -> Vec<i64> {
    (0..n)
        .map(|k| n as i64 - 2 * (x ^ rotate(x, k, n)).count_ones() as i64)
        .collect()
}

pub(crate) fn to_row(x: u64, n: usize) -> CirculantRow {
    CirculantRow::from_vec_unchecked((0..n).map(|i| if bit(x, n, i) { 1 } else { -1 }).collect())
}

pub(crate) fn from_row(row: &CirculantRow) -> u64 {
    let n = row.order();
    row.entries()
        .iter()
        .enumerate()
        .filter(|(_, &v)| v > 0)
        .fold(0, |acc, (i, _)| acc | 1 << (n - 1 - i))
}

/// Iterates all `w`-bit integers with exactly `k` set bits, in increasing order.
pub(crate) struct FixedWeight {
    next: Option<u64>,
    limit: u64,
}

impl FixedWeight {
    pub(crate) fn new(w: usize, k: usize) -> Self {
        let next = if k <= w { Some((1u64 << k) - 1) } else { None };
        Self { next, limit: 1u64 << w }
    }
}

impl Iterator for FixedWeight {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let x = self.next?;
        self.next = if x == 0 {
            None
        } else {
            // Gosper's hack
            let c = x & x.wrapping_neg();
            let r = x + c;
            let y = (((r ^ x) >> 2) / c) | r;
            (y < self.limit).then_some(y)
        };
        Some(x)
    }
}
