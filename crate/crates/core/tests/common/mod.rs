#![allow(dead_code)]

use twistcube::TwistData;

/// Half-widths of a box containing every integer point of the cube:
/// `B_n = |l_n|`, `B_j = |l_j| + sum_{k>j} |c_jk| B_k`.
pub fn box_bounds(d: &TwistData) -> Vec<i64> {
    let n = d.n();
    let mut b = vec![0i64; n];
    for j in (1..=n).rev() {
        let mut v = d.ell(j).abs();
        for k in j + 1..=n {
            v += d.c(j, k).abs() * b[k - 1];
        }
        b[j - 1] = v;
    }
    b
}

/// Membership written out directly from the defining inequalities.
pub fn in_cube(d: &TwistData, x: &[i64]) -> bool {
    let n = d.n();
    (1..=n).all(|j| {
        let mut a = d.ell(j);
        for k in j + 1..=n {
            a -= d.c(j, k) * x[k - 1];
        }
        let xj = x[j - 1];
        (a < xj && xj < 0) || (0 <= xj && xj <= a)
    })
}

/// `(-1)^n * prod sgn(x_k)` with `sgn(x) = 1` for `x < 0`, `-1` otherwise.
pub fn rho(x: &[i64]) -> i8 {
    let mut v: i8 = if x.len() % 2 == 0 { 1 } else { -1 };
    for &c in x {
        v *= if c < 0 { 1 } else { -1 };
    }
    v
}

/// Every integer point of the bounding box that lies in the cube, with its
/// density, in lexicographic order.
pub fn brute_force_census(d: &TwistData) -> Vec<(Vec<i64>, i8)> {
    let b = box_bounds(d);
    let n = d.n();
    let mut out = Vec::new();
    let mut x: Vec<i64> = b.iter().map(|v| -v).collect();
    loop {
        if in_cube(d, &x) {
            out.push((x.clone(), rho(&x)));
        }
        let mut p = n;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            if x[p] < b[p] {
                x[p] += 1;
                for q in p + 1..n {
                    x[q] = -b[q];
                }
                break;
            }
        }
    }
}

/// Weyl dimension formula for `A_2`, `lambda = a varpi_1 + b varpi_2`.
pub fn weyl_dim_a2(a: i64, b: i64) -> i64 {
    (a + 1) * (b + 1) * (a + b + 2) / 2
}

/// Cartan tables from the fixture file, keyed by type name.
pub fn fixture_tables() -> Vec<(String, Vec<Vec<i64>>)> {
    let text = include_str!("../fixtures/cartan_tables.txt");
    let mut out = Vec::new();
    for block in text.split("\n\n") {
        let mut lines = block.lines().filter(|l| !l.trim().is_empty());
        let Some(name) = lines.next() else { continue };
        let rows = lines
            .map(|l| l.split_whitespace().map(|v| v.parse().unwrap()).collect())
            .collect();
        out.push((name.trim().to_string(), rows));
    }
    out
}
