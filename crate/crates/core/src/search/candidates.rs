//! Candidate rows for `A` and `B` and the spectral bounds that prune them.

use crate::algebra::{CosTable, SpectrumVector};
use crate::equivalence::units;
use crate::error::{NwError, Result};
use crate::row::CirculantRow;

use super::mask;
use super::SearchMode;

/// A set of candidate rows for one of the symmetric slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub rows: Vec<CirculantRow>,
    /// Whether the `λ_i <= 4n` filter has been applied.
    pub filtered: bool,
}

/// All symmetric rows `(1, c_1 … c_m, c_m … c_1)` with the given row sum,
/// in decreasing lexicographic order.
pub fn enumerate_symmetric_rows(n: usize, row_sum: i64) -> Result<CandidateSet> {
    let masks = symmetric_masks(n, row_sum)?;
    Ok(CandidateSet {
        rows: masks.into_iter().map(|x| mask::to_row(x, n)).collect(),
        filtered: false,
    })
}

pub(crate) fn symmetric_masks(n: usize, row_sum: i64) -> Result<Vec<u64>> {
    if n.is_multiple_of(2) {
        return Err(NwError::EvenOrder(n));
    }
    if n > super::MAX_SEARCH_ORDER {
        return Err(NwError::SearchOrderTooLarge(n));
    }
    let ni = n as i64;
    let infeasible = NwError::InfeasibleSum { order: n, sum: row_sum };
    // 1 + 2·(m - 2t) = row_sum with t entries of the half row equal to -1
    if row_sum.abs() > ni || (ni - row_sum).rem_euclid(4) != 0 {
        return Err(infeasible);
    }
    let m = (n - 1) / 2;
    let minus = ((ni - row_sum) / 4) as usize;
    let mut out: Vec<u64> = mask::FixedWeight::new(m, m - minus)
        .map(|half| {
            let mut x = mask::first_bit(n);
            for k in 1..=m {
                if half >> (m - k) & 1 == 1 {
                    x |= 1 << (n - 1 - k);
                    x |= 1 << (k - 1);
                }
            }
            x
        })
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Row of `X^σ` for `σ: x ↦ u·x`: entry `k` becomes entry `u·k mod n`.
pub fn automorphism_image(row: &CirculantRow, u: usize) -> Result<CirculantRow> {
    let n = row.order();
    if gcd(u, n) != 1 {
        return Err(NwError::NotAUnit(u, n));
    }
    Ok(permute_by_unit(row, u))
}

pub(crate) fn permute_by_unit(row: &CirculantRow, u: usize) -> CirculantRow {
    let n = row.order();
    CirculantRow::from_vec_unchecked((0..n).map(|k| row.get(u * k % n)).collect())
}

pub(crate) fn permute_mask_by_unit(x: u64, u: usize, n: usize) -> u64 {
    (0..n)
        .filter(|&k| mask::bit(x, n, u * k % n))
        .fold(0, |acc, k| acc | 1 << (n - 1 - k))
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Units of `Z_n`, with the identity standing in for the trivial group at `n = 1`.
pub(crate) fn automorphisms(n: usize) -> Vec<usize> {
    let us = units(n);
    if us.is_empty() {
        vec![1]
    } else {
        us
    }
}

/// Spectral bound `λ_i <= 4n + ε` for rows of one order.
#[derive(Debug, Clone)]
pub struct SpectralFilter {
    table: CosTable,
    bound: f64,
    epsilon: f64,
}

impl SpectralFilter {
    pub fn new(n: usize, epsilon: f64) -> Self {
        Self {
            table: CosTable::new(n),
            bound: 4.0 * n as f64,
            epsilon,
        }
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn spectrum(&self, paf: &[i64]) -> SpectrumVector {
        self.table.spectrum(paf)
    }

    pub fn admits(&self, spectrum: &SpectrumVector) -> bool {
        spectrum.bounded_by(self.bound, self.epsilon)
    }

    pub fn admits_pair(&self, a: &SpectrumVector, b: &SpectrumVector) -> bool {
        pair_prune(a, b, self.order(), self.epsilon)
    }

    fn admits_mask(&self, x: u64) -> bool {
        let n = self.order();
        self.admits(&self.spectrum(&mask::paf(x, n)))
    }
}

/// Keeps the lexicographically largest row of every `Aut(Z_n)` orbit, then
/// drops rows whose spectrum exceeds `4n + ε`.
pub fn orbit_representatives(set: &CandidateSet, epsilon: f64) -> CandidateSet {
    let Some(first) = set.rows.first() else {
        return CandidateSet {
            rows: Vec::new(),
            filtered: true,
        };
    };
    let n = first.order();
    let filter = SpectralFilter::new(n, epsilon);
    let masks: Vec<u64> = set.rows.iter().map(mask::from_row).collect();
    let rows = orbit_representative_masks(&masks, n)
        .into_iter()
        .filter(|&x| filter.admits_mask(x))
        .map(|x| mask::to_row(x, n))
        .collect();
    CandidateSet { rows, filtered: true }
}

pub(crate) fn orbit_representative_masks(masks: &[u64], n: usize) -> Vec<u64> {
    let us = automorphisms(n);
    masks
        .iter()
        .copied()
        .filter(|&x| us.iter().all(|&u| permute_mask_by_unit(x, u, n) <= x))
        .collect()
}

/// `B` candidates used by the driver: orbit representatives in
/// [`SearchMode::Full`]; every symmetric row in
/// [`SearchMode::AlmostSymmetricA`], since `σ` does not preserve almost
/// symmetry of `A`. Spectrally filtered in both modes.
pub(crate) fn b_candidate_masks(n: usize, row_sum: i64, mode: SearchMode, filter: &SpectralFilter) -> Vec<u64> {
    let Ok(all) = symmetric_masks(n, row_sum) else {
        return Vec::new();
    };
    let reps = match mode {
        SearchMode::Full => orbit_representative_masks(&all, n),
        SearchMode::AlmostSymmetricA => all,
    };
    reps.into_iter().filter(|&x| filter.admits_mask(x)).collect()
}

/// Rows with first entry `+1` and row sum `a`, in increasing mask order.
fn rows_with_sum(n: usize, a: i64) -> impl Iterator<Item = u64> {
    let ni = n as i64;
    let plus = (ni + a) / 2;
    let feasible = a.abs() <= ni && (ni + a) % 2 == 0 && plus >= 1;
    let weight = if feasible { (plus - 1) as usize } else { n };
    let top = mask::first_bit(n);
    mask::FixedWeight::new(n - 1, weight).map(move |low| top | low)
}

/// Almost symmetric rows with first entry `+1`: entries `2 … n-2` mirror and
/// entries `1`, `n-1` are free.
fn almost_symmetric_rows_with_sum(n: usize, a: i64) -> Vec<u64> {
    if n < 3 {
        return rows_with_sum(n, a).collect();
    }
    let m = (n - 1) / 2;
    let mut out = Vec::new();
    for half in 0u64..1 << (m - 1) {
        let mut x = mask::first_bit(n);
        for k in 2..=m {
            if half >> (k - 2) & 1 == 1 {
                x |= 1 << (n - 1 - k);
                x |= 1 << (k - 1);
            }
        }
        for ends in 0u64..4 {
            let y = x | (ends & 1) << (n - 2) | (ends >> 1);
            if 2 * y.count_ones() as i64 - n as i64 == a {
                out.push(y);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Candidate masks for `A` with row sum `a`, canonical and spectrally admissible.
///
/// In [`SearchMode::Full`] a row is kept iff it is the lexicographic maximum
/// over its cyclic shifts and negated cyclic shifts. In
/// [`SearchMode::AlmostSymmetricA`] only almost symmetric rows are generated
/// and the reduction is by reversal (`σ = -1`), which preserves almost
/// symmetry and fixes every symmetric row.
pub(crate) fn a_candidate_masks(n: usize, a: i64, mode: SearchMode, filter: &SpectralFilter) -> Vec<u64> {
    if (a * a) as f64 > 4.0 * n as f64 {
        return Vec::new();
    }
    match mode {
        SearchMode::Full => rows_with_sum(n, a)
            .filter(|&x| mask::is_signed_shift_max(x, n))
            .filter(|&x| filter.admits_mask(x))
            .collect(),
        SearchMode::AlmostSymmetricA => almost_symmetric_rows_with_sum(n, a)
            .into_iter()
            .filter(|&x| mask::reverse(x, n) <= x)
            .filter(|&x| filter.admits_mask(x))
            .collect(),
    }
}

/// Streams the `A` candidates for row sum `a` as rows.
pub fn enumerate_a_candidates(
    n: usize,
    a: i64,
    mode: SearchMode,
    epsilon: f64,
) -> Result<impl Iterator<Item = CirculantRow>> {
    if n.is_multiple_of(2) {
        return Err(NwError::EvenOrder(n));
    }
    if n > super::MAX_SEARCH_ORDER {
        return Err(NwError::SearchOrderTooLarge(n));
    }
    let filter = SpectralFilter::new(n, epsilon);
    let masks = a_candidate_masks(n, a, mode, &filter);
    Ok(masks.into_iter().map(move |x| mask::to_row(x, n)))
}

/// `true` iff `λ_i(A) + λ_i(B) <= 4n + ε` for every `i`, i.e. the pair survives.
pub fn pair_prune(spec_a: &SpectrumVector, spec_b: &SpectrumVector, n: usize, epsilon: f64) -> bool {
    let bound = 4.0 * n as f64 + epsilon;
    spec_a.values().iter().zip(spec_b.values()).all(|(x, y)| x + y <= bound)
}
