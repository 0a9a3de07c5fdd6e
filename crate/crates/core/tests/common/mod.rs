//! Brute-force reference implementations used as test oracles.
//!
//! Nothing here touches the search pipeline: rows are plain `Vec<i8>`,
//! there is no spectral pruning and no mod-4 solving.

#![allow(dead_code)]

pub type Row = Vec<i8>;

pub fn paf(x: &[i8]) -> Vec<i64> {
    let n = x.len();
    (0..n)
        .map(|k| (0..n).map(|j| (x[j] * x[(j + k) % n]) as i64).sum())
        .collect()
}

pub fn all_rows_first_plus(n: usize) -> Vec<Row> {
    (0u64..1 << (n - 1))
        .map(|bits| {
            let mut r = vec![1i8];
            r.extend((1..n).map(|i| if bits >> (i - 1) & 1 == 1 { -1 } else { 1 }));
            r
        })
        .collect()
}

pub fn symmetric_rows(n: usize) -> Vec<Row> {
    all_rows_first_plus(n)
        .into_iter()
        .filter(|r| (1..n).all(|k| r[k] == r[n - k]))
        .collect()
}

pub fn row_sum(x: &[i8]) -> i64 {
    x.iter().map(|&v| v as i64).sum()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn units_or_identity(n: usize) -> Vec<usize> {
    let us: Vec<usize> = (1..n).filter(|&u| gcd(u, n) == 1).collect();
    if us.is_empty() {
        vec![1]
    } else {
        us
    }
}

pub fn signed_shifts(x: &[i8]) -> Vec<Row> {
    let n = x.len();
    let mut out = Vec::new();
    for j in 0..n {
        for s in [1i8, -1] {
            out.push((0..n).map(|k| s * x[(k + j) % n]).collect());
        }
    }
    out
}

pub fn is_shift_canonical(x: &[i8]) -> bool {
    signed_shifts(x).iter().all(|y| y.as_slice() <= x)
}

pub fn is_orbit_max(x: &[i8]) -> bool {
    let n = x.len();
    units_or_identity(n)
        .into_iter()
        .all(|u| (0..n).map(|k| x[u * k % n]).collect::<Row>().as_slice() <= x)
}

/// Every `(a, b, c, d)` over the full square range, filtered by the constraints.
pub fn decompositions(n: usize) -> Vec<(i64, i64, i64, i64)> {
    let n = n as i64;
    let r = (4 * n) as f64;
    let r = r.sqrt() as i64 + 1;
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            for c in -r..=r {
                for d in -r..=r {
                    if a * a + b * b + c * c + d * d != 4 * n {
                        continue;
                    }
                    let sym = |x: i64| (x - n).rem_euclid(4) == 0;
                    if a.rem_euclid(2) == 1 && sym(b) && sym(c) && sym(d) && b.abs() >= c.abs() && c.abs() >= d.abs() {
                        out.push((a, b, c, d));
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The raw solution set with the pipeline's normalisation: `A` maximal over
/// signed shifts, `B` maximal in its automorphism orbit, `C` and `D` any
/// symmetric rows, all first entries `+1`, row sums from a decomposition.
pub fn raw_solutions(n: usize) -> Vec<[Row; 4]> {
    let all = all_rows_first_plus(n);
    let sym = symmetric_rows(n);
    let mut out = Vec::new();
    for (a, b, c, d) in decompositions(n) {
        let a_rows: Vec<&Row> = all
            .iter()
            .filter(|r| row_sum(r) == a && is_shift_canonical(r))
            .collect();
        let b_rows: Vec<&Row> = sym.iter().filter(|r| row_sum(r) == b && is_orbit_max(r)).collect();
        let c_rows: Vec<&Row> = sym.iter().filter(|r| row_sum(r) == c).collect();
        let d_rows: Vec<&Row> = sym.iter().filter(|r| row_sum(r) == d).collect();
        for ra in &a_rows {
            let pa = paf(ra);
            for rb in &b_rows {
                let pb = paf(rb);
                for rc in &c_rows {
                    let pc = paf(rc);
                    for rd in &d_rows {
                        let pd = paf(rd);
                        if (1..n).all(|k| pa[k] + pb[k] + pc[k] + pd[k] == 0) {
                            out.push([(*ra).clone(), (*rb).clone(), (*rc).clone(), (*rd).clone()]);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// All symmetric `(C, D)` with the given row sums completing `(A, B)`.
pub fn completions(a: &[i8], b: &[i8], c_sum: i64, d_sum: i64) -> Vec<(Row, Row)> {
    let n = a.len();
    let (pa, pb) = (paf(a), paf(b));
    let sym = symmetric_rows(n);
    let mut out = Vec::new();
    for c in sym.iter().filter(|r| row_sum(r) == c_sum) {
        let pc = paf(c);
        for d in sym.iter().filter(|r| row_sum(r) == d_sum) {
            let pd = paf(d);
            if (1..n).all(|k| pa[k] + pb[k] + pc[k] + pd[k] == 0) {
                out.push((c.clone(), d.clone()));
            }
        }
    }
    out.sort();
    out
}

/// Naive DFT: `|Σ_k x_k ω^{ik}|²` for each `i`.
pub fn dft_power(x: &[i8]) -> Vec<f64> {
    let n = x.len();
    (0..n)
        .map(|i| {
            let (mut re, mut im) = (0.0f64, 0.0f64);
            for (k, &v) in x.iter().enumerate() {
                let t = 2.0 * std::f64::consts::PI * (i * k) as f64 / n as f64;
                re += v as f64 * t.cos();
                im += v as f64 * t.sin();
            }
            re * re + im * im
        })
        .collect()
}
