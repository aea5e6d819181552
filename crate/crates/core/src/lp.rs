//! Exact linear feasibility over the rationals.
//!
//! Phase-I simplex on a dense tableau with Bland's rule; no floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Decides whether A t = b, t ≥ 0 has a solution. `a` is row-major, m × n.
pub fn feasible(a: &[Vec<BigInt>], b: &[BigInt]) -> bool {
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    // columns: n structural, m artificial, then the right-hand side
    let width = n + m + 1;
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r = Vec::with_capacity(width);
        for v in row {
            let v = BigRational::from_integer(v.clone());
            r.push(if flip { -v } else { v });
        }
        for k in 0..m {
            r.push(if k == i {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        let rhs = BigRational::from_integer(b[i].clone());
        r.push(if flip { -rhs } else { rhs });
        tab.push(r);
    }
    // objective: minimize Σ artificials, expressed in the nonbasic columns
    let mut obj = vec![BigRational::zero(); width];
    for row in &tab {
        for (j, v) in row.iter().enumerate() {
            if j < n || j == width - 1 {
                obj[j] -= v;
            }
        }
    }
    tab.push(obj);
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        let obj = &tab[m];
        // Bland: lowest-index column with negative reduced cost
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            let coef = &tab[i][enter];
            if coef.is_positive() {
                let ratio = &tab[i][width - 1] / coef;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pivot_row, _)) = leave else {
            // unbounded below cannot happen for a sum of nonnegative artificials
            break;
        };
        pivot(&mut tab, pivot_row, enter);
        basis[pivot_row] = enter;
    }
    tab[m][width - 1].is_zero()
}

fn pivot(tab: &mut [Vec<BigRational>], r: usize, c: usize) {
    let p = tab[r][c].clone();
    for v in tab[r].iter_mut() {
        *v /= &p;
    }
    let pivot_row = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, pv) in row.iter_mut().zip(pivot_row.iter()) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}
