//! Exact nullspace computation over the Gaussian rationals.

use crate::scalar::GaussianRational;

/// Basis of the right nullspace of the `rows x ncols` matrix, via
/// reduced row echelon form. Basis vectors correspond to the free
/// columns in ascending order, which makes the output deterministic.
pub fn kernel_basis(mut rows: Vec<Vec<GaussianRational>>, ncols: usize) -> Vec<Vec<GaussianRational>> {
    for row in &rows {
        assert_eq!(row.len(), ncols);
    }
    let nrows = rows.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(r) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, r);
        let inv = rows[pivot_row][col].inv();
        for c in col..ncols {
            rows[pivot_row][c] = &rows[pivot_row][c] * &inv;
        }
        for r2 in 0..nrows {
            if r2 == pivot_row || rows[r2][col].is_zero() {
                continue;
            }
            let factor = rows[r2][col].clone();
            for c in col..ncols {
                let delta = &factor * &rows[pivot_row][c];
                rows[r2][c] = &rows[r2][c] - &delta;
            }
        }
        pivots.push((pivot_row, col));
        pivot_row += 1;
        if pivot_row == nrows {
            break;
        }
    }

    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![GaussianRational::zero(); ncols];
        v[free] = GaussianRational::one();
        for &(r, c) in &pivots {
            v[c] = -&rows[r][free];
        }
        basis.push(v);
    }
    basis
}
