//! Exhaustive search for near Williamson quadruples of odd order.
//!
//! The driver walks the four-square decompositions of `4n`, pairs every
//! canonical `A` candidate with every admissible `B`, solves for `(C, D)`
//! through the mod-4 system and keeps the completions that verify exactly.
//! Equivalence reduction is left to [`crate::equivalence`].

pub mod candidates;
pub mod cdsystem;
pub mod decompose;
pub(crate) mod mask;
pub mod mod4;

use std::collections::BTreeMap;
use std::ops::AddAssign;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::algebra::SpectrumVector;
use crate::error::{NwError, Result};
use crate::quad::{additive_rows, Quadruple};
use crate::row::CirculantRow;

pub use candidates::{
    automorphism_image, enumerate_a_candidates, enumerate_symmetric_rows, orbit_representatives, pair_prune,
    CandidateSet, SpectralFilter,
};
pub use cdsystem::{derive_cd_system, linearize_mod4, sign_split, CDSystem, EquationTerms, Infeasible, PafStructure};
pub use decompose::{four_square_decompositions, SquareDecomposition};
pub use mod4::{solve_mod4, Form, Mod4System};

/// Rows are packed into `u64` masks inside the search loop.
pub const MAX_SEARCH_ORDER: usize = 63;

pub const DEFAULT_EPSILON: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Every circulant `A`.
    Full,
    /// Only almost symmetric `A`.
    AlmostSymmetricA,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub order: usize,
    pub mode: SearchMode,
    pub epsilon: f64,
    pub jobs: usize,
    /// Stop once this many solutions have been stored.
    pub limit: Option<usize>,
}

impl SearchConfig {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            mode: SearchMode::Full,
            epsilon: DEFAULT_EPSILON,
            jobs: 1,
            limit: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.order.is_multiple_of(2) {
            return Err(NwError::EvenOrder(self.order));
        }
        if self.order > MAX_SEARCH_ORDER {
            return Err(NwError::SearchOrderTooLarge(self.order));
        }
        assert!(self.epsilon > 0.0, "epsilon must be positive");
        Ok(())
    }
}

/// Prune and yield counters for one run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub decompositions: u64,
    pub a_candidates: u64,
    pub b_candidates: u64,
    pub pairs: u64,
    pub pairs_spectral: u64,
    pub odd_rhs: u64,
    pub no_signs: u64,
    pub row_sums: u64,
    pub divisibility: u64,
    pub solver_candidates: u64,
    pub solutions: u64,
}

impl SearchStats {
    fn record(&mut self, reason: Infeasible) {
        match reason {
            Infeasible::OddRhs => self.odd_rhs += 1,
            Infeasible::NoSigns => self.no_signs += 1,
            Infeasible::RowSums => self.row_sums += 1,
            Infeasible::Divisibility => self.divisibility += 1,
        }
    }

    /// Stable `key: value` lines.
    pub fn summary_lines(&self) -> Vec<(&'static str, u64)> {
        vec![
            ("decompositions", self.decompositions),
            ("a_candidates", self.a_candidates),
            ("b_candidates", self.b_candidates),
            ("pairs", self.pairs),
            ("pruned_spectral", self.pairs_spectral),
            ("pruned_odd_rhs", self.odd_rhs),
            ("pruned_no_signs", self.no_signs),
            ("pruned_row_sums", self.row_sums),
            ("pruned_divisibility", self.divisibility),
            ("solver_candidates", self.solver_candidates),
            ("solutions", self.solutions),
        ]
    }
}

impl AddAssign<&SearchStats> for SearchStats {
    fn add_assign(&mut self, o: &SearchStats) {
        self.decompositions += o.decompositions;
        self.a_candidates += o.a_candidates;
        self.b_candidates += o.b_candidates;
        self.pairs += o.pairs;
        self.pairs_spectral += o.pairs_spectral;
        self.odd_rhs += o.odd_rhs;
        self.no_signs += o.no_signs;
        self.row_sums += o.row_sums;
        self.divisibility += o.divisibility;
        self.solver_candidates += o.solver_candidates;
        self.solutions += o.solutions;
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Validated quadruples, sorted. This is the raw set before equivalence reduction.
    pub solutions: Vec<Quadruple>,
    pub stats: SearchStats,
}

/// A precomputed symmetric candidate: mask, PAF and spectrum.
struct Prepared {
    mask: u64,
    paf: Vec<i64>,
    spectrum: SpectrumVector,
}

impl Prepared {
    fn new(mask: u64, filter: &SpectralFilter) -> Self {
        let paf = mask::paf(mask, filter.order());
        let spectrum = filter.spectrum(&paf);
        Self { mask, paf, spectrum }
    }
}

struct Context<'a> {
    n: usize,
    filter: &'a SpectralFilter,
    structure: &'a PafStructure,
    stop: &'a AtomicBool,
    found: &'a AtomicUsize,
    limit: Option<usize>,
}

fn half_to_mask(half: &[i8], n: usize) -> u64 {
    let mut x = mask::first_bit(n);
    for (i, &v) in half.iter().enumerate() {
        if v > 0 {
            let k = i + 1;
            x |= 1 << (n - 1 - k);
            x |= 1 << (k - 1);
        }
    }
    x
}

/// All validated `(C, D)` completions of one `(A, B)` pair.
fn complete_pair(
    ctx: &Context,
    dec: &SquareDecomposition,
    a: &Prepared,
    b: &Prepared,
    stats: &mut SearchStats,
    out: &mut Vec<Quadruple>,
) {
    let n = ctx.n;
    stats.pairs += 1;
    if !ctx.filter.admits_pair(&a.spectrum, &b.spectrum) {
        stats.pairs_spectral += 1;
        return;
    }
    let system = derive_cd_system(ctx.structure, &a.paf, &b.paf, dec.c, dec.d).expect("orders agree");
    let signs = match sign_split(&system) {
        Ok(s) => s,
        Err(reason) => {
            stats.record(reason);
            return;
        }
    };
    for s in signs {
        let lin = match linearize_mod4(&system, &s) {
            Ok(lin) => lin,
            Err(reason) => {
                stats.record(reason);
                continue;
            }
        };
        for c_half in solve_mod4(&lin) {
            stats.solver_candidates += 1;
            let d_half: Vec<i8> = c_half.iter().zip(&s).map(|(c, s)| c * s).collect();
            let c_mask = half_to_mask(&c_half, n);
            let d_mask = half_to_mask(&d_half, n);
            let sum = |x: u64| 2 * x.count_ones() as i64 - n as i64;
            if sum(c_mask) != dec.c || sum(d_mask) != dec.d {
                continue;
            }
            let rows = [a.mask, b.mask, c_mask, d_mask].map(|x| mask::to_row(x, n));
            if !additive_rows(&rows) {
                continue;
            }
            stats.solutions += 1;
            out.push(Quadruple::from_rows_unchecked(rows));
            let total = ctx.found.fetch_add(1, Ordering::SeqCst) + 1;
            if ctx.limit.is_some_and(|l| total >= l) {
                ctx.stop.store(true, Ordering::SeqCst);
            }
        }
    }
}

/// Runs the full pipeline and returns the raw validated solution set.
///
/// Output is sorted and independent of `config.jobs`. With a `limit`, the
/// run stops early and the first `limit` solutions of the sorted collection
/// are kept; which ones are found first may then depend on scheduling.
pub fn search(config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let n = config.order;
    let filter = SpectralFilter::new(n, config.epsilon);
    let structure = PafStructure::new(n)?;
    let decompositions = four_square_decompositions(n)?;

    let mut stats = SearchStats {
        decompositions: decompositions.len() as u64,
        ..Default::default()
    };

    let mut b_cache: BTreeMap<i64, Vec<Prepared>> = BTreeMap::new();
    let mut a_cache: BTreeMap<i64, Vec<Prepared>> = BTreeMap::new();
    for dec in &decompositions {
        b_cache.entry(dec.b).or_insert_with(|| {
            candidates::b_candidate_masks(n, dec.b, config.mode, &filter)
                .into_iter()
                .map(|x| Prepared::new(x, &filter))
                .collect()
        });
        a_cache.entry(dec.a).or_insert_with(|| {
            candidates::a_candidate_masks(n, dec.a, config.mode, &filter)
                .into_iter()
                .map(|x| Prepared::new(x, &filter))
                .collect()
        });
    }

    // one unit of work per (decomposition, A candidate)
    let units: Vec<(&SquareDecomposition, &Prepared)> = decompositions
        .iter()
        .flat_map(|dec| a_cache[&dec.a].iter().map(move |a| (dec, a)))
        .collect();
    for dec in &decompositions {
        stats.a_candidates += a_cache[&dec.a].len() as u64;
        stats.b_candidates += b_cache[&dec.b].len() as u64;
    }

    let stop = AtomicBool::new(false);
    let found = AtomicUsize::new(0);
    let ctx = Context {
        n,
        filter: &filter,
        structure: &structure,
        stop: &stop,
        found: &found,
        limit: config.limit,
    };

    let run = || {
        units
            .par_iter()
            .map(|&(dec, a)| {
                let mut local = SearchStats::default();
                let mut out = Vec::new();
                for b in &b_cache[&dec.b] {
                    if ctx.stop.load(Ordering::Relaxed) {
                        break;
                    }
                    complete_pair(&ctx, dec, a, b, &mut local, &mut out);
                }
                (out, local)
            })
            .collect::<Vec<_>>()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .expect("thread pool");
    let results = pool.install(run);

    let mut solutions = Vec::new();
    for (out, local) in results {
        solutions.extend(out);
        stats += &local;
    }
    solutions.sort();
    solutions.dedup();
    if let Some(limit) = config.limit {
        solutions.truncate(limit);
    }
    Ok(SearchOutcome { solutions, stats })
}

/// Convenience wrapper returning only the solutions.
pub fn search_solutions(config: &SearchConfig) -> Result<Vec<Quadruple>> {
    Ok(search(config)?.solutions)
}

/// `C` and `D` rows of the symmetric row with the given half row.
pub fn symmetric_from_half(half: &[i8]) -> CirculantRow {
    let n = 2 * half.len() + 1;
    mask::to_row(half_to_mask(half, n), n)
}
