//! Search and verification engine for near Williamson matrices.
//!
//! A near Williamson quadruple of odd order `n` is four circulant
//! (-1,1)-matrices `A, B, C, D`, with `B, C, D` symmetric, such that
//! `AAᵀ + BBᵀ + CCᵀ + DDᵀ = 4nI`. Replacing `A` by `A·R` (with `R` the
//! back-circulant reversal) gives Williamson type matrices, which plug into
//! the Williamson array to give a Hadamard matrix of order `4n`, and into the
//! quaternary construction to give a quaternary Hadamard matrix of order `2n`.

pub mod algebra;
pub mod equivalence;
pub mod error;
pub mod format;
pub mod gaussian;
pub mod matrix;
pub mod quad;
pub mod row;
pub mod search;

pub use algebra::{paf, spectrum, CosTable, PafVector, SpectrumVector};
pub use equivalence::{
    apply_transform, canonical_form, classify, units, CanonicalKey, EquivalenceGroup, EquivalenceTransform,
};
pub use error::{NwError, Result};
pub use gaussian::{build_quaternary, verify_quaternary, Gaussian, GaussianMatrix};
pub use matrix::{
    apply_reversal, build_williamson_block, circulant_matrix, is_hadamard, verify_amicability, williamson_type_set,
    IntMatrix,
};
pub use quad::{verify_additivity, Quadruple};
pub use row::{CirculantRow, SymmetryKind};
pub use search::{search, SearchConfig, SearchMode, SearchOutcome, SearchStats};
