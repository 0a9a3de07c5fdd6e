//! Linear systems over `Z/4` whose unknowns take values in `{1, 3}`, the
//! images of `±1`.
//!
//! `Z/4` is not a field, so elimination only pivots on units (`1` and `3`).
//! Once no unit is left in the unreduced part, the remaining rows have only
//! even coefficients and act as consistency checks. Free columns are
//! enumerated over `{1, 3}` and pivot variables are recovered by back
//! substitution.

/// Whether [`Mod4System::echelonize`] has been run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    Raw,
    Echelon,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mod4System {
    ncols: usize,
    rows: Vec<Vec<u8>>,
    rhs: Vec<u8>,
    form: Form,
    /// In echelon form: pivot column of each of the first `pivots.len()` rows.
    pivots: Vec<usize>,
}

fn reduce(v: i64) -> u8 {
    v.rem_euclid(4) as u8
}

impl Mod4System {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            rhs: Vec::new(),
            form: Form::Raw,
            pivots: Vec::new(),
        }
    }

    /// Appends `Σ coeffs[j]·x_j ≡ rhs (mod 4)`.
    pub fn push_row(&mut self, coeffs: &[i64], rhs: i64) {
        assert_eq!(coeffs.len(), self.ncols);
        self.rows.push(coeffs.iter().map(|&c| reduce(c)).collect());
        self.rhs.push(reduce(rhs));
        self.form = Form::Raw;
        self.pivots.clear();
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[u8] {
        &self.rhs
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Rows below the pivot rows; all their coefficients are even.
    pub fn residual_rows(&self) -> impl Iterator<Item = (&[u8], u8)> {
        let p = self.pivots.len();
        self.rows[p..]
            .iter()
            .map(Vec::as_slice)
            .zip(self.rhs[p..].iter().copied())
    }

    /// Reduced row echelon form on unit pivots. Pivot columns are strictly
    /// increasing, each pivot entry is `1` and every other row is zero in a
    /// pivot column.
    pub fn echelonize(&mut self) {
        if self.form == Form::Echelon {
            return;
        }
        self.pivots.clear();
        let mut next = 0;
        for col in 0..self.ncols {
            let Some(found) = (next..self.rows.len()).find(|&r| self.rows[r][col] % 2 == 1) else {
                continue;
            };
            self.rows.swap(next, found);
            self.rhs.swap(next, found);
            // 1 and 3 are their own inverses
            let inv = self.rows[next][col];
            self.scale_row(next, inv);
            for r in 0..self.rows.len() {
                let f = self.rows[r][col];
                if r != next && f != 0 {
                    self.sub_row(r, next, f);
                }
            }
            self.pivots.push(col);
            next += 1;
        }
        self.form = Form::Echelon;
    }

    fn scale_row(&mut self, r: usize, f: u8) {
        for v in &mut self.rows[r] {
            *v = (*v * f) % 4;
        }
        self.rhs[r] = (self.rhs[r] * f) % 4;
    }

    // row[r] -= f * row[src]
    fn sub_row(&mut self, r: usize, src: usize, f: u8) {
        for j in 0..self.ncols {
            let s = self.rows[src][j];
            self.rows[r][j] = (self.rows[r][j] + 4 * 4 - f * s) % 4;
        }
        self.rhs[r] = (self.rhs[r] + 16 - f * self.rhs[src]) % 4;
    }

    pub fn is_satisfied_by(&self, values: &[u8]) -> bool {
        self.rows.iter().zip(&self.rhs).all(|(row, &r)| {
            let lhs: u32 = row.iter().zip(values).map(|(&a, &v)| a as u32 * v as u32).sum();
            lhs % 4 == r as u32
        })
    }
}

/// All `±1` vectors satisfying the system, sorted with `+1` above `-1`
/// (descending lexicographic order).
pub fn solve_mod4(system: &Mod4System) -> Vec<Vec<i8>> {
    let mut sys = system.clone();
    sys.echelonize();
    let n = sys.ncols;
    let pivots = sys.pivots.clone();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
    assert!(free.len() < 40, "too many free variables ({}) to enumerate", free.len());

    let mut out = Vec::new();
    let mut values = vec![1u8; n];
    // bit set in `choice` selects -1 (value 3) for that free column
    for choice in 0u64..1 << free.len() {
        for (b, &j) in free.iter().enumerate() {
            values[j] = if choice >> b & 1 == 1 { 3 } else { 1 };
        }
        let mut ok = true;
        for (r, &p) in pivots.iter().enumerate() {
            let row = &sys.rows[r];
            let acc: u32 = free.iter().map(|&j| row[j] as u32 * values[j] as u32).sum();
            let v = ((sys.rhs[r] as u32 + 4 * 4 * 40 - acc) % 4) as u8;
            if v.is_multiple_of(2) {
                ok = false;
                break;
            }
            values[p] = v;
        }
        if ok
            && sys.residual_rows().all(|(row, r)| {
                let lhs: u32 = row.iter().zip(&values).map(|(&a, &v)| a as u32 * v as u32).sum();
                lhs % 4 == r as u32
            })
        {
            out.push(values.iter().map(|&v| if v == 1 { 1 } else { -1 }).collect());
        }
    }
    out.sort_unstable_by(|a: &Vec<i8>, b| b.cmp(a));
    out
}
