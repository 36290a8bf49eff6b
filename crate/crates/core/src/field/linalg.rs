//! Row reduction over F_p.

use alloc::vec;
use alloc::vec::Vec;

use super::prime::{inv_mod, mul_mod, sub_mod};

/// Reduced row echelon form in place. Zero rows are dropped; the returned
/// pivot columns are strictly ascending and `rows[i]` has its pivot at
/// `pivots[i]` with value 1.
pub fn rref(p: u32, rows: &mut Vec<Vec<u32>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = inv_mod(rows[r][col], p);
        for c in rows[r].iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[col] % p;
            if factor == 0 {
                continue;
            }
            for (c, &pv) in row.iter_mut().zip(pivot_row.iter()) {
                *c = sub_mod(*c, mul_mod(factor, pv, p), p);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(p: u32, rows: &[Vec<u32>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(p, &mut m, ncols).len()
}

/// Basis of `{v : M v = 0}` where `M` has the given rows and `ncols` columns.
/// One vector per free column, ascending; each has a 1 at its free column.
pub fn null_space(p: u32, rows: &[Vec<u32>], ncols: usize) -> Vec<Vec<u32>> {
    let mut m = rows.to_vec();
    let pivots = rref(p, &mut m, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (row, &pc) in m.iter().zip(pivots.iter()) {
            v[pc] = sub_mod(0, row[free], p);
        }
        out.push(v);
    }
    out
}

pub fn mat_vec(p: u32, rows: &[Vec<u32>], v: &[u32]) -> Vec<u32> {
    rows.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| (acc + mul_mod(a, b, p) as u64) % p as u64) as u32
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn null_space_satisfies_system() {
        let m = vec![vec![1, 2, 0, 1], vec![2, 4, 1, 0]];
        let ns = null_space(5, &m, 4);
        assert_eq!(ns.len(), 4 - rank(5, &m, 4));
        for v in &ns {
            assert!(mat_vec(5, &m, v).iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = vec![vec![2, 1, 1], vec![1, 0, 2]];
        let mut b = vec![vec![0, 1, 0], vec![1, 1, 2]];
        rref(3, &mut a, 3);
        rref(3, &mut b, 3);
        assert_eq!(a, b);
    }
}
