//! Four-square decompositions `a² + b² + c² + d² = 4n` of the row sums.

use std::fmt;

use crate::error::{NwError, Result};

/// Row sums `(a, b, c, d)` of a candidate quadruple.
///
/// `a` is odd, `b ≡ c ≡ d ≡ n (mod 4)` and `|b| >= |c| >= |d|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareDecomposition {
    pub n: usize,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl SquareDecomposition {
    pub fn is_valid(&self) -> bool {
        let n = self.n as i64;
        let sym = |x: i64| (x - n).rem_euclid(4) == 0;
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d == 4 * n
            && self.a.rem_euclid(2) == 1
            && sym(self.b)
            && sym(self.c)
            && sym(self.d)
            && self.b.abs() >= self.c.abs()
            && self.c.abs() >= self.d.abs()
    }
}

impl fmt::Display for SquareDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

fn isqrt(v: i64) -> i64 {
    let mut r = (v as f64).sqrt() as i64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// All valid decompositions for odd `n`, sorted ascending by `(a, b, c, d)`.
pub fn four_square_decompositions(n: usize) -> Result<Vec<SquareDecomposition>> {
    if n.is_multiple_of(2) {
        return Err(NwError::EvenOrder(n));
    }
    let ni = n as i64;
    let target = 4 * ni;
    let bound = isqrt(target);
    // symmetric row sums are pinned to one residue class, so each |x| has
    // exactly one admissible sign
    let sym_value = |abs: i64| -> Option<i64> { [abs, -abs].into_iter().find(|&x| (x - ni).rem_euclid(4) == 0) };
    let mut out = Vec::new();
    for bb in (1..=bound).step_by(2) {
        for cc in (1..=bb).step_by(2) {
            for dd in (1..=cc).step_by(2) {
                let rest = target - bb * bb - cc * cc - dd * dd;
                if rest <= 0 {
                    continue;
                }
                let aa = isqrt(rest);
                if aa * aa != rest || aa % 2 == 0 {
                    continue;
                }
                let (Some(b), Some(c), Some(d)) = (sym_value(bb), sym_value(cc), sym_value(dd)) else {
                    continue;
                };
                for a in [-aa, aa] {
                    out.push(SquareDecomposition { n, a, b, c, d });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}
