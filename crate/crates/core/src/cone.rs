//! Rational cone membership over exact arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// True iff `v` is a non-negative rational combination of `ws`.
///
/// By Carathéodory it suffices to try every linearly independent subset of
/// `ws`, so this solves one small exact system per subset.
pub(crate) fn in_cone(v: &[i64], ws: &[Vec<i64>]) -> bool {
    if v.iter().all(|&x| x == 0) {
        return true;
    }
    let d = v.len();
    let max_k = d.min(ws.len());
    let mut subset = Vec::with_capacity(max_k);
    (1..=max_k).any(|k| search(v, ws, k, 0, &mut subset))
}

fn search(v: &[i64], ws: &[Vec<i64>], k: usize, start: usize, subset: &mut Vec<usize>) -> bool {
    if subset.len() == k {
        return nonnegative_solution(v, ws, subset);
    }
    for i in start..ws.len() {
        subset.push(i);
        if search(v, ws, k, i + 1, subset) {
            subset.pop();
            return true;
        }
        subset.pop();
    }
    false
}

/// Solves `sum_j lambda_j ws[subset[j]] = v`; true iff the columns are
/// independent, the system is consistent and every `lambda_j >= 0`.
fn nonnegative_solution(v: &[i64], ws: &[Vec<i64>], subset: &[usize]) -> bool {
    let d = v.len();
    let k = subset.len();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    // augmented d x (k+1) matrix
    let mut m: Vec<Vec<BigRational>> = (0..d)
        .map(|r| {
            let mut row: Vec<BigRational> = subset.iter().map(|&j| q(ws[j][r])).collect();
            row.push(q(v[r]));
            row
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..k {
        let Some(p) = (pivot_row..d).find(|&r| !m[r][col].is_zero()) else {
            return false; // dependent columns
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for c in col..=k {
            m[pivot_row][c] = &m[pivot_row][c] * &inv;
        }
        for r in 0..d {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=k {
                    let t = &f * &m[pivot_row][c];
                    m[r][c] -= t;
                }
            }
        }
        pivot_row += 1;
    }
    if m[k..].iter().any(|row| !row[k].is_zero()) {
        return false;
    }
    m[..k].iter().all(|row| !row[k].is_negative())
}
