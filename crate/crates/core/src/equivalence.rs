//! Equivalence of near Williamson quadruples and canonical representatives.
//!
//! Two quadruples are equivalent when one is obtained from the other by a
//! common automorphism `σ: x ↦ u·x` of `Z_n`, a circulant signed permutation
//! (`±` a cyclic shift) on each member, and a reordering of the members. The
//! normalised family keeps `B, C, D` symmetric with first entry `+1`, so a
//! member placed in one of those slots is replaced by its unique symmetric
//! signed shift, and a member without one can only occupy the `A` slot.
//!
//! [`EquivalenceGroup::SlotFixed`] is the narrower relation in which `A`
//! never leaves its slot and only `B, C, D` are reordered.

use rayon::prelude::*;

use crate::error::{NwError, Result};
use crate::quad::{Quadruple, SLOT_LABELS};
use crate::row::CirculantRow;
use crate::search::candidates::{automorphisms, gcd, permute_by_unit};

/// Units of `Z_n` in increasing order. Empty for `n = 1`, whose group is
/// the identity alone.
pub fn units(n: usize) -> Vec<usize> {
    (1..n).filter(|&u| gcd(u, n) == 1).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EquivalenceGroup {
    /// Members may be reordered freely.
    #[default]
    Unordered,
    /// `A` stays in the first slot.
    SlotFixed,
}

/// One element of the transform group acting on a quadruple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceTransform {
    /// The automorphism `x ↦ unit·x`.
    pub unit: usize,
    /// Cyclic shift applied to the member placed in the `A` slot.
    pub a_shift: usize,
    /// `slots[i]` is the source member placed in target slot `i`.
    pub slots: [usize; 4],
}

impl EquivalenceTransform {
    pub fn identity() -> Self {
        Self {
            unit: 1,
            a_shift: 0,
            slots: [0, 1, 2, 3],
        }
    }
}

/// Applies `t`. Signs are absorbed by normalising each first entry to `+1`;
/// members moved into `B, C, D` are replaced by their symmetric signed shift.
pub fn apply_transform(quad: &Quadruple, t: &EquivalenceTransform) -> Result<Quadruple> {
    let n = quad.order();
    if gcd(t.unit, n) != 1 {
        return Err(NwError::NotAUnit(t.unit, n));
    }
    let mut seen = [false; 4];
    for &s in &t.slots {
        assert!(s < 4 && !seen[s], "slots must be a permutation of 0..4");
        seen[s] = true;
    }
    let images: Vec<CirculantRow> = quad.rows().iter().map(|r| permute_by_unit(r, t.unit)).collect();
    let a = images[t.slots[0]].shifted(t.a_shift).normalized();
    let mut rest = Vec::with_capacity(3);
    for (slot, &src) in t.slots.iter().enumerate().skip(1) {
        rest.push(
            images[src]
                .symmetric_form()
                .ok_or(NwError::NoSymmetricForm(SLOT_LABELS[slot]))?,
        );
    }
    let [b, c, d]: [CirculantRow; 3] = rest.try_into().expect("three symmetric slots");
    Quadruple::new(a, b, c, d)
}

/// Concatenated `±1` rows of the canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<i8>);

impl CanonicalKey {
    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    /// Splits the key back into a quadruple.
    pub fn to_quadruple(&self) -> Quadruple {
        let n = self.0.len() / 4;
        let rows: [CirculantRow; 4] =
            std::array::from_fn(|i| CirculantRow::from_vec_unchecked(self.0[i * n..(i + 1) * n].to_vec()));
        Quadruple::from_rows_unchecked(rows)
    }
}

// lexicographically largest signed cyclic shift, compared in place
fn signed_shift_max(x: &[i8]) -> Vec<i8> {
    let n = x.len();
    let at = |j: usize, sign: i8, k: usize| sign * x[(j + k) % n];
    let mut best = (0, if x[0] > 0 { 1 } else { -1 });
    for j in 0..n {
        for sign in [1i8, -1] {
            for k in 0..n {
                let (a, b) = (at(j, sign, k), at(best.0, best.1, k));
                if a != b {
                    if a > b {
                        best = (j, sign);
                    }
                    break;
                }
            }
        }
    }
    (0..n).map(|k| at(best.0, best.1, k)).collect()
}

fn key_for(quad: &Quadruple, group: EquivalenceGroup) -> CanonicalKey {
    let n = quad.order();
    let rows = quad.rows();
    let sym_forms: Vec<Option<CirculantRow>> = rows.iter().map(CirculantRow::symmetric_form).collect();
    let a_choices: &[usize] = match group {
        EquivalenceGroup::Unordered => &[0, 1, 2, 3],
        EquivalenceGroup::SlotFixed => &[0],
    };
    let mut best: Option<Vec<i8>> = None;
    for u in automorphisms(n) {
        for &i in a_choices {
            let others: Option<Vec<&CirculantRow>> =
                (0..4).filter(|&j| j != i).map(|j| sym_forms[j].as_ref()).collect();
            let Some(others) = others else { continue };
            let mut key = signed_shift_max(permute_by_unit(&rows[i], u).entries());
            let mut rest: Vec<CirculantRow> = others.into_iter().map(|r| permute_by_unit(r, u)).collect();
            rest.sort_by(|a, b| b.cmp(a));
            for r in &rest {
                key.extend_from_slice(r.entries());
            }
            if best.as_ref().is_none_or(|b| key > *b) {
                best = Some(key);
            }
        }
    }
    CanonicalKey(best.expect("A always admits the identity placement"))
}

/// Lexicographically largest key over the whole transform group.
pub fn canonical_form(quad: &Quadruple, group: EquivalenceGroup) -> CanonicalKey {
    key_for(quad, group)
}

/// One representative per equivalence class, sorted by canonical key.
/// Each representative is the canonical quadruple itself.
pub fn classify(solutions: &[Quadruple], group: EquivalenceGroup) -> Vec<Quadruple> {
    let mut keys: Vec<CanonicalKey> = solutions.par_iter().map(|q| canonical_form(q, group)).collect();
    keys.sort();
    keys.dedup();
    keys.iter().map(CanonicalKey::to_quadruple).collect()
}
