//! Small dense linear algebra over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::Q;

pub type Mat = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Mat {
    let mut m = vec![vec![Q::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::one();
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut c = vec![vec![Q::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            let x = a[i][l];
            if x.is_zero() {
                continue;
            }
            for j in 0..m {
                c[i][j] += x * b[l][j];
            }
        }
    }
    c
}

pub fn mat_vec(a: &Mat, v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |s, (x, y)| s + *x * *y))
        .collect()
}

pub fn transpose(a: &Mat) -> Mat {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|row| row[j]).collect())
        .collect()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut m: Mat = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let t = m[col][c];
                    m[r][c] -= f * t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `x · rows = target` for `x`, where the rows are linearly
/// independent. Returns `None` when the target is outside their span.
pub fn solve_combination(rows: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let k = rows.len();
    let dim = target.len();
    // augmented system: columns are the rows, unknowns x_0..x_{k-1}
    let mut m: Mat = (0..dim)
        .map(|c| {
            let mut r: Vec<Q> = rows.iter().map(|row| row[c]).collect();
            r.push(target[c]);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..dim).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][col];
        for x in m[r].iter_mut() {
            *x /= pv;
        }
        for i in 0..dim {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col];
                for c in 0..=k {
                    let t = m[r][c];
                    m[i][c] -= f * t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][k];
    }
    Some(x)
}

/// Characteristic polynomial `det(tI - a)` of a small integer matrix, by the
/// Faddeev-LeVerrier recursion. Coefficients from `t^0` up to `t^n`.
pub fn char_poly_int(a: &[Vec<i64>]) -> Vec<i64> {
    let n = a.len();
    let am: Mat = a
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
        .collect();
    let mut coeffs = vec![Q::zero(); n + 1];
    coeffs[n] = Q::one();
    let mut mk = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(&am, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[n - k + 1];
        }
        mk = next;
        let amk = mat_mul(&am, &mk);
        let tr = (0..n).fold(Q::zero(), |s, i| s + amk[i][i]);
        coeffs[n - k] = -tr / Q::from_integer(k as i64);
    }
    coeffs.iter().map(|c| c.to_integer()).collect()
}
