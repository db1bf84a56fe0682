//! Dense least squares and the Subspace Pursuit greedy solver.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Minimum-norm solution of `min ||A x - b||_2` via SVD; singular values
/// below `1e-12 * sigma_max` are treated as zero.
pub fn least_squares(a: &DMatrix<f64>, b: &DVector<f64>) -> Result<DVector<f64>> {
    if a.ncols() == 0 {
        return Err(Error::InvalidArgument("matrix has no columns".into()));
    }
    if a.iter().any(|v| !v.is_finite()) || b.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("least squares input".into()));
    }
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0f64, f64::max);
    let eps = (smax * 1e-12).max(f64::MIN_POSITIVE);
    svd.solve(b, eps)
        .map_err(|e| Error::InvalidArgument(format!("SVD solve failed: {e}")))
}

/// Result of one Subspace Pursuit run.
#[derive(Debug, Clone)]
pub struct SpResult {
    /// Selected support, ascending column indices, size <= k.
    pub support: Vec<usize>,
    /// Length-K coefficients, zeros off the support, in the original
    /// (un-normalized) column scaling.
    pub coefficients: DVector<f64>,
    pub iterations: usize,
    /// Residual norms per iteration, including the final rejected step.
    pub residual_norms: Vec<f64>,
    /// True when the iteration cap was hit.
    pub capped: bool,
}

/// Indices of the k largest-magnitude entries; ties break toward the lower index.
fn top_k_by_magnitude(values: &DVector<f64>, k: usize) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| {
        values[b]
            .abs()
            .partial_cmp(&values[a].abs())
            .unwrap()
            .then(a.cmp(&b))
    });
    let mut sel: Vec<usize> = idx.into_iter().take(k).collect();
    sel.sort_unstable();
    sel
}

pub(crate) fn columns(m: &DMatrix<f64>, cols: &[usize]) -> DMatrix<f64> {
    let mut out = DMatrix::zeros(m.nrows(), cols.len());
    for (j, &c) in cols.iter().enumerate() {
        out.column_mut(j).copy_from(&m.column(c));
    }
    out
}

/// Subspace Pursuit for a fixed sparsity level k.
///
/// Columns are normalized to unit L2 for selection and projection; the final
/// coefficients are re-fit on the un-normalized columns of the returned
/// support. The loop stops as soon as the residual norm fails to strictly
/// decrease, rolling back to the previous support; an iteration cap of
/// `10 * k` guards non-termination.
pub fn subspace_pursuit(k: usize, f: &DMatrix<f64>, b: &DVector<f64>) -> Result<SpResult> {
    let kk = f.ncols();
    if k == 0 || k > kk {
        return Err(Error::InvalidArgument(format!(
            "sparsity {k} out of range 1..={kk}"
        )));
    }
    // Column-normalized G; exactly-zero columns are left as zeros so their
    // correlation is zero and they are only picked if k forces it.
    let mut g = f.clone();
    for mut col in g.column_iter_mut() {
        let norm = col.norm();
        if norm > 0.0 {
            col /= norm;
        }
    }

    let project = |support: &[usize]| -> Result<(DVector<f64>, DVector<f64>)> {
        let gs = columns(&g, support);
        let c = least_squares(&gs, b)?;
        let res = b - gs * &c;
        Ok((c, res))
    };

    let corr = g.transpose() * b;
    let mut support = top_k_by_magnitude(&corr, k);
    let (_, mut res) = project(&support)?;
    let mut residual_norms = vec![res.norm()];
    let mut iterations = 0usize;
    let mut capped = false;

    loop {
        let corr_res = g.transpose() * &res;
        let extension = top_k_by_magnitude(&corr_res, k);
        let mut candidate = support.clone();
        for e in extension {
            if !candidate.contains(&e) {
                candidate.push(e);
            }
        }
        candidate.sort_unstable();
        let gc = columns(&g, &candidate);
        let cp = least_squares(&gc, b)?;
        let keep = top_k_by_magnitude(&cp, k);
        let new_support: Vec<usize> = keep.into_iter().map(|i| candidate[i]).collect();
        let (_, new_res) = project(&new_support)?;
        let new_norm = new_res.norm();
        residual_norms.push(new_norm);
        let prev = residual_norms[residual_norms.len() - 2];
        if new_norm >= prev {
            // Not a strict decrease: roll back and stop.
            break;
        }
        support = new_support;
        res = new_res;
        iterations += 1;
        if iterations >= 10 * k {
            capped = true;
            break;
        }
    }

    // Re-fit on the original column scaling.
    let fs = columns(f, &support);
    let c_sub = least_squares(&fs, b)?;
    let mut coefficients = DVector::zeros(kk);
    for (j, &col) in support.iter().enumerate() {
        coefficients[col] = c_sub[j];
    }
    Ok(SpResult { support, coefficients, iterations, residual_norms, capped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::standard_normal;

    #[test]
    fn least_squares_identity() {
        let a = DMatrix::<f64>::identity(4, 4);
        let b = DVector::from_vec(vec![1.0, -2.0, 3.0, 0.5]);
        let x = least_squares(&a, &b).unwrap();
        assert!((x - b).norm() < 1e-12);
    }

    #[test]
    fn least_squares_overdetermined_mean() {
        let a = DMatrix::from_column_slice(2, 1, &[1.0, 1.0]);
        let b = DVector::from_vec(vec![1.0, 3.0]);
        let x = least_squares(&a, &b).unwrap();
        assert!((x[0] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn least_squares_matches_normal_equations_oracle() {
        let rows = 20;
        let cols = 5;
        let a = DMatrix::from_fn(rows, cols, |r, c| standard_normal(11, (r * cols + c) as u64));
        let b = DVector::from_fn(rows, |r, _| standard_normal(12, r as u64));
        let x = least_squares(&a, &b).unwrap();
        let ata = a.transpose() * &a;
        let atb = a.transpose() * &b;
        let oracle = ata.lu().solve(&atb).unwrap();
        assert!((x - oracle).norm() < 1e-8);
    }

    #[test]
    fn least_squares_rank_deficient_min_norm() {
        // Duplicate column: solution must split weight (minimum norm).
        let a = DMatrix::from_column_slice(3, 2, &[1.0, 2.0, 3.0, 1.0, 2.0, 3.0]);
        let b = DVector::from_vec(vec![2.0, 4.0, 6.0]);
        let x = least_squares(&a, &b).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-10 && (x[1] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn sp_orthonormal_single_column() {
        let mut f = DMatrix::<f64>::zeros(6, 4);
        for j in 0..4 {
            f[(j, j)] = 1.0;
        }
        let b = 2.0 * f.column(2).clone_owned();
        let r = subspace_pursuit(1, &f, &b).unwrap();
        assert_eq!(r.support, vec![2]);
        assert!((r.coefficients[2] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn sp_zero_b_takes_first_k_columns() {
        let f = DMatrix::from_fn(8, 5, |r, c| standard_normal(3, (r * 5 + c) as u64));
        let b = DVector::zeros(8);
        let r = subspace_pursuit(2, &f, &b).unwrap();
        assert_eq!(r.support, vec![0, 1]);
        assert!(r.coefficients.norm() < 1e-12);
    }

    #[test]
    fn sp_exactly_k_sparse_and_k_too_large() {
        let f = DMatrix::from_fn(30, 6, |r, c| standard_normal(5, (r * 6 + c) as u64));
        let b = DVector::from_fn(30, |r, _| standard_normal(6, r as u64));
        let r = subspace_pursuit(3, &f, &b).unwrap();
        assert_eq!(r.support.len(), 3);
        assert_eq!(r.coefficients.iter().filter(|&&v| v != 0.0).count(), 3);
        assert!(subspace_pursuit(7, &f, &b).is_err());
        assert!(subspace_pursuit(0, &f, &b).is_err());
    }

    #[test]
    fn sp_residual_not_worse_than_initialization() {
        for seed in 0..20u64 {
            let f = DMatrix::from_fn(40, 8, |r, c| standard_normal(seed, (r * 8 + c) as u64));
            let b = DVector::from_fn(40, |r, _| standard_normal(seed + 100, r as u64));
            let r = subspace_pursuit(3, &f, &b).unwrap();
            let last_kept = if r.residual_norms.len() >= 2 {
                r.residual_norms[r.residual_norms.len() - 2]
            } else {
                r.residual_norms[0]
            };
            assert!(last_kept <= r.residual_norms[0] + 1e-12);
        }
    }

    #[test]
    fn sp_planted_support_recovery_matches_exhaustive() {
        // Noiseless planted 3-sparse model: SP must agree with brute force.
        let mut hits = 0;
        let trials = 50;
        for seed in 0..trials {
            let f = DMatrix::from_fn(50, 10, |r, c| standard_normal(seed, (r * 10 + c) as u64));
            let truth = [1usize, 4, 7];
            let mut b = DVector::zeros(50);
            for (i, &j) in truth.iter().enumerate() {
                let coef = [1.5, -2.0, 0.7][i];
                b += coef * f.column(j);
            }
            let r = subspace_pursuit(3, &f, &b).unwrap();
            // Exhaustive search over all C(10,3) supports.
            let mut best = (f64::INFINITY, vec![]);
            for a in 0..10 {
                for bb in a + 1..10 {
                    for c in bb + 1..10 {
                        let cols = columns(&f, &[a, bb, c]);
                        let x = least_squares(&cols, &b).unwrap();
                        let resid = (&b - cols * x).norm();
                        if resid < best.0 {
                            best = (resid, vec![a, bb, c]);
                        }
                    }
                }
            }
            if r.support == best.1 {
                hits += 1;
            }
        }
        assert!(hits >= trials - 1, "{hits}/{trials}");
    }

    #[test]
    fn sp_is_deterministic() {
        let f = DMatrix::from_fn(25, 7, |r, c| standard_normal(77, (r * 7 + c) as u64));
        let b = DVector::from_fn(25, |r, _| standard_normal(78, r as u64));
        let a = subspace_pursuit(3, &f, &b).unwrap();
        let c = subspace_pursuit(3, &f, &b).unwrap();
        assert_eq!(a.support, c.support);
        assert_eq!(a.coefficients, c.coefficients);
        assert_eq!(a.residual_norms, c.residual_norms);
    }
}
