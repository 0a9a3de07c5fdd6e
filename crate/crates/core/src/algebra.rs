//! Periodic autocorrelation and the spectra of `XXᵀ` for circulant rows.
//!
//! For a circulant `X` the Gram matrix `XXᵀ` is circulant with first row
//! `(p_0, …, p_{n-1})`, where `p_k` is the inner product of rows `0` and `k`.
//! Its eigenvalues are `λ_i = Σ_k p_k cos(2πik/n)`. PAF values are exact
//! integers; spectra are floating point and only ever used as pruning bounds.

use std::f64::consts::PI;

use crate::row::CirculantRow;

/// Periodic autocorrelation values `p_0 … p_{n-1}` of a circulant row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PafVector {
    values: Vec<i64>,
}

impl PafVector {
    pub fn from_values(values: Vec<i64>) -> Self {
        Self { values }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, k: usize) -> i64 {
        self.values[k % self.values.len()]
    }
}

/// Eigenvalues `λ_0 … λ_{n-1}` of `XXᵀ` in the Fourier eigenbasis.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumVector {
    values: Vec<f64>,
}

impl SpectrumVector {
    pub fn from_values(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// `true` iff every eigenvalue is at most `bound + epsilon`.
    pub fn bounded_by(&self, bound: f64, epsilon: f64) -> bool {
        self.values.iter().all(|&l| l <= bound + epsilon)
    }
}

pub fn paf(row: &CirculantRow) -> PafVector {
    let n = row.order();
    let x = row.entries();
    let values = (0..n)
        .map(|k| (0..n).map(|j| (x[j] * x[(j + k) % n]) as i64).sum())
        .collect();
    PafVector { values }
}

pub fn spectrum(paf: &PafVector) -> SpectrumVector {
    CosTable::new(paf.order()).spectrum(paf.values())
}

/// Precomputed `cos(2πik/n)` for a fixed order, shared across many spectra.
#[derive(Debug, Clone)]
pub struct CosTable {
    n: usize,
    table: Vec<f64>,
}

impl CosTable {
    pub fn new(n: usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for k in 0..n {
                // reduce i*k first so the argument stays in [0, 2π)
                let t = ((i * k) % n) as f64;
                table.push((2.0 * PI * t / n as f64).cos());
            }
        }
        Self { n, table }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn spectrum(&self, paf: &[i64]) -> SpectrumVector {
        let mut out = vec![0.0; self.n];
        self.spectrum_into(paf, &mut out);
        SpectrumVector { values: out }
    }

    /// Writes `λ_i` for `i = 0..n` into `out`. Only `λ_0 … λ_{(n-1)/2}` are
    /// distinct since `λ_i = λ_{n-i}`, but the full vector is produced.
    pub fn spectrum_into(&self, paf: &[i64], out: &mut [f64]) {
        let n = self.n;
        assert_eq!(paf.len(), n);
        for i in 0..=n / 2 {
            let row = &self.table[i * n..(i + 1) * n];
            let v: f64 = paf.iter().zip(row).map(|(&p, &c)| p as f64 * c).sum();
            out[i] = v;
            if i != 0 {
                out[n - i] = v;
            }
        }
    }
}
