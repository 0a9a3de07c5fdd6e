//! The constraint system on `C` and `D` once `A` and `B` are fixed.
//!
//! A symmetric row `(1, c_1, …, c_m, c_m, …, c_1)` has
//! `p_k = 1 + 2·S_k` where `S_k` sums one product `x_j·x_{j+k}` from each
//! pair `{j, -j-k}` (the unpaired index `j = -k/2` gives the leading `1`).
//! Products with `x_0` are linear in the half row, the others are quadratic.
//! The equations are `p_k(C) + p_k(D) = -p_k(A) - p_k(B)` for `k = 1 … m`.
//!
//! Linearising modulo 4 with `xy ≡ x + y - 1` for `x, y ∈ {±1}` first pins
//! down the sign vector `s` with `d_i = s_i·c_i`, and then, after
//! substituting `s`, a linear system for `c` alone.

use crate::error::{NwError, Result};

use super::mod4::{solve_mod4, Mod4System};

/// Monomials of `S_k` in the half-row variables (`c_1` is index 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationTerms {
    pub constant: i64,
    pub linear: Vec<usize>,
    pub products: Vec<(usize, usize)>,
}

impl EquationTerms {
    /// `S_k` evaluated on a half row.
    pub fn eval(&self, half: &[i8]) -> i64 {
        self.constant
            + self.linear.iter().map(|&v| half[v] as i64).sum::<i64>()
            + self
                .products
                .iter()
                .map(|&(a, b)| (half[a] * half[b]) as i64)
                .sum::<i64>()
    }
}

/// Symbolic form of `p_1 … p_m` for symmetric rows of order `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PafStructure {
    n: usize,
    equations: Vec<EquationTerms>,
}

impl PafStructure {
    pub fn new(n: usize) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(NwError::EvenOrder(n));
        }
        let m = (n - 1) / 2;
        let var = |idx: usize| -> Option<usize> { (idx != 0).then(|| idx.min(n - idx) - 1) };
        let equations = (1..=m)
            .map(|k| {
                let mut terms = EquationTerms {
                    constant: 0,
                    linear: Vec::new(),
                    products: Vec::new(),
                };
                let mut seen = vec![false; n];
                for j in 0..n {
                    let partner = (2 * n - j - k) % n;
                    if partner == j || seen[j] {
                        continue;
                    }
                    seen[j] = true;
                    seen[partner] = true;
                    match (var(j), var((j + k) % n)) {
                        (None, Some(v)) | (Some(v), None) => terms.linear.push(v),
                        (Some(a), Some(b)) if a == b => terms.constant += 1,
                        (Some(a), Some(b)) => terms.products.push((a.min(b), a.max(b))),
                        (None, None) => unreachable!("k is nonzero"),
                    }
                }
                terms
            })
            .collect();
        Ok(Self { n, equations })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn half_len(&self) -> usize {
        (self.n - 1) / 2
    }

    pub fn equations(&self) -> &[EquationTerms] {
        &self.equations
    }

    /// `p_k` of the symmetric row with the given half row, `k = 1 … m`.
    pub fn paf_of_half(&self, half: &[i8]) -> Vec<i64> {
        self.equations.iter().map(|t| 1 + 2 * t.eval(half)).collect()
    }
}

/// Why an `(A, B)` pair admits no `(C, D)` completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Infeasible {
    /// Some `p_k(A) + p_k(B)` is odd.
    OddRhs,
    /// The joint linearisation has no sign solution.
    NoSigns,
    /// No sign vector is compatible with the target row sums of `C` and `D`.
    RowSums,
    /// After substituting `s`, some right side is not divisible by 4.
    Divisibility,
}

/// `p_k(C) + p_k(D) = rhs[k-1]` for `k = 1 … m`, with target row sums.
#[derive(Debug, Clone)]
pub struct CDSystem<'a> {
    structure: &'a PafStructure,
    rhs: Vec<i64>,
    target_sums: (i64, i64),
}

impl<'a> CDSystem<'a> {
    pub fn structure(&self) -> &PafStructure {
        self.structure
    }

    pub fn half_len(&self) -> usize {
        self.structure.half_len()
    }

    pub fn rhs(&self) -> &[i64] {
        &self.rhs
    }

    pub fn target_sums(&self) -> (i64, i64) {
        self.target_sums
    }

    // T_k with S_k(C) + S_k(D) = T_k
    fn half_targets(&self) -> Option<Vec<i64>> {
        self.rhs.iter().map(|&p| (p % 2 == 0).then_some(p / 2 - 1)).collect()
    }
}

/// Builds the system from the PAF values of `A` and `B` (full length `n`).
pub fn derive_cd_system<'a>(
    structure: &'a PafStructure,
    paf_a: &[i64],
    paf_b: &[i64],
    c: i64,
    d: i64,
) -> Result<CDSystem<'a>> {
    let n = structure.order();
    if paf_a.len() != n || paf_b.len() != n {
        return Err(NwError::MixedOrders(paf_a.len(), paf_b.len()));
    }
    let rhs = (1..=structure.half_len()).map(|k| -paf_a[k] - paf_b[k]).collect();
    Ok(CDSystem {
        structure,
        rhs,
        target_sums: (c, d),
    })
}

/// Sign vectors `s` with `d_i = s_i·c_i` allowed by the joint linearisation.
///
/// In the joint system each `c_i + d_i` is `0` or `±2`, and modulo 4 it equals
/// `1 + s_i`. Substituting that turns every equation into a linear relation on
/// `s` over `Z/4`. The result is then restricted to sign vectors for which the
/// row sums `c` and `d` are reachable.
pub fn sign_split(system: &CDSystem) -> std::result::Result<Vec<Vec<i8>>, Infeasible> {
    let m = system.half_len();
    let targets = system.half_targets().ok_or(Infeasible::OddRhs)?;
    let mut lin = Mod4System::new(m);
    for (terms, &t) in system.structure.equations().iter().zip(&targets) {
        // Σ e_v + Σ (e_a + e_b - 2) + 2·constant ≡ T_k with e_v = c_v + d_v
        let mut coeffs = vec![0i64; m];
        for &v in &terms.linear {
            coeffs[v] += 1;
        }
        for &(a, b) in &terms.products {
            coeffs[a] += 1;
            coeffs[b] += 1;
        }
        let rhs = t - 2 * terms.constant + 2 * terms.products.len() as i64 - coeffs.iter().sum::<i64>();
        lin.push_row(&coeffs, rhs);
    }
    let signs = solve_mod4(&lin);
    if signs.is_empty() {
        return Err(Infeasible::NoSigns);
    }
    let (c, d) = system.target_sums;
    // Σ_{s_i=+1} c_i = (c+d-2)/4 and Σ_{s_i=-1} c_i = (c-d)/4
    let (plus_sum, minus_sum) = ((c + d - 2) / 4, (c - d) / 4);
    let reachable = |count: usize, sum: i64| {
        let count = count as i64;
        sum.abs() <= count && (count - sum) % 2 == 0
    };
    let compatible: Vec<_> = signs
        .into_iter()
        .filter(|s| {
            let plus = s.iter().filter(|&&v| v > 0).count();
            (c + d - 2) % 4 == 0 && (c - d) % 4 == 0 && reachable(plus, plus_sum) && reachable(m - plus, minus_sum)
        })
        .collect();
    if compatible.is_empty() {
        Err(Infeasible::RowSums)
    } else {
        Ok(compatible)
    }
}

/// The linear system for `c` once `d = s∘c` is substituted.
///
/// Each equation becomes `Σ (1+s_v)c_v + Σ (1+s_a s_b)c_a c_b = T_k - 2·constant`
/// with every coefficient in `{0, 2}`; halving gives 0/1 coefficients and the
/// product identity makes it linear modulo 4.
pub fn linearize_mod4(system: &CDSystem, signs: &[i8]) -> std::result::Result<Mod4System, Infeasible> {
    let m = system.half_len();
    assert_eq!(signs.len(), m);
    let targets = system.half_targets().ok_or(Infeasible::OddRhs)?;
    let mut lin = Mod4System::new(m);
    for (terms, &t) in system.structure.equations().iter().zip(&targets) {
        let u = t - 2 * terms.constant;
        if u % 2 != 0 {
            return Err(Infeasible::Divisibility);
        }
        let mut coeffs = vec![0i64; m];
        let mut rhs = u / 2;
        for &v in &terms.linear {
            if signs[v] > 0 {
                coeffs[v] += 1;
            }
        }
        for &(a, b) in &terms.products {
            if signs[a] == signs[b] {
                coeffs[a] += 1;
                coeffs[b] += 1;
                rhs += 1;
            }
        }
        lin.push_row(&coeffs, rhs);
    }
    Ok(lin)
}
