//! Raw finite-difference operators: forward time difference and the 5-point
//! ENO first derivative, applied along any axis of a snapshot.
//!
//! The ENO derivative interpolates with a degree-4 polynomial over 5 nodes.
//! The stencil starts from the centered triple around the evaluation node and
//! grows outward twice, each time extending toward the side whose Newton
//! divided difference is smaller in magnitude (ties extend left); near the
//! domain edge only in-range extensions are candidates, so boundary nodes
//! fall back to one-sided stencils. Starting from the centered triple rather
//! than the single node keeps the evaluation node away from the stencil edge
//! in smooth regions; growing from the bare node would decide the first
//! extension on first-order differences (local slope, not smoothness), which
//! systematically shifts stencils downwind near extrema and destabilizes
//! forward Euler evolution.

use crate::error::{Error, Result};
use crate::grid::{Field, SpaceTimeGrid};

/// Divided difference of `values[l..=r]` on a uniform grid with spacing `dx`.
fn divided_difference(values: &[f64], l: usize, r: usize, dx: f64) -> f64 {
    let mut work: Vec<f64> = values[l..=r].to_vec();
    let mut order = 0usize;
    while work.len() > 1 {
        order += 1;
        for j in 0..work.len() - 1 {
            work[j] = (work[j + 1] - work[j]) / (order as f64 * dx);
        }
        work.pop();
    }
    work[0]
}

/// Derivative of the Lagrange interpolant through `stencil` nodes, evaluated
/// at node `at` (an index into `stencil`). Node positions are `idx * dx`.
fn lagrange_derivative_at(values: &[f64], stencil: &[usize], at: usize, dx: f64) -> f64 {
    let xs: Vec<f64> = stencil.iter().map(|&i| i as f64 * dx).collect();
    let xi = xs[at];
    let mut total = 0.0;
    for j in 0..xs.len() {
        let w = if j == at {
            let mut s = 0.0;
            for (k, &xk) in xs.iter().enumerate() {
                if k != j {
                    s += 1.0 / (xi - xk);
                }
            }
            s
        } else {
            let mut num = 1.0;
            for (k, &xk) in xs.iter().enumerate() {
                if k != at && k != j {
                    num *= xi - xk;
                }
            }
            let mut den = 1.0;
            for (k, &xk) in xs.iter().enumerate() {
                if k != j {
                    den *= xs[j] - xk;
                }
            }
            num / den
        };
        total += w * values[stencil[j]];
    }
    total
}

/// 5-point ENO first derivative of a 1D sample sequence.
pub fn eno5_first_derivative(values: &[f64], dx: f64) -> Result<Vec<f64>> {
    let m = values.len();
    if m < 5 {
        return Err(Error::InvalidArgument(format!(
            "ENO needs at least 5 samples, got {m}"
        )));
    }
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let (mut l, mut r) = if i == 0 {
            (0, 2)
        } else if i == m - 1 {
            (m - 3, m - 1)
        } else {
            (i - 1, i + 1)
        };
        for _ in 0..2 {
            let can_left = l > 0;
            let can_right = r < m - 1;
            let extend_left = if can_left && can_right {
                let dd_left = divided_difference(values, l - 1, r, dx).abs();
                let dd_right = divided_difference(values, l, r + 1, dx).abs();
                dd_left <= dd_right
            } else {
                can_left
            };
            if extend_left {
                l -= 1;
            } else {
                r += 1;
            }
        }
        let stencil: Vec<usize> = (l..=r).collect();
        out.push(lagrange_derivative_at(values, &stencil, i - l, dx));
    }
    Ok(out)
}

/// Apply `op` to every 1D line of a snapshot along `axis`, returning the
/// transformed snapshot. Axis 0 is the slow index.
pub fn map_snapshot_lines(
    snap: &[f64],
    d: usize,
    m: usize,
    axis: usize,
    op: &mut dyn FnMut(&[f64]) -> Result<Vec<f64>>,
) -> Result<Vec<f64>> {
    match (d, axis) {
        (1, 0) => op(snap),
        (2, 1) => {
            let mut out = Vec::with_capacity(snap.len());
            for i1 in 0..m {
                out.extend(op(&snap[i1 * m..(i1 + 1) * m])?);
            }
            Ok(out)
        }
        (2, 0) => {
            let mut out = vec![0.0; snap.len()];
            let mut line = vec![0.0; m];
            for i2 in 0..m {
                for i1 in 0..m {
                    line[i1] = snap[i1 * m + i2];
                }
                let res = op(&line)?;
                for i1 in 0..m {
                    out[i1 * m + i2] = res[i1];
                }
            }
            Ok(out)
        }
        _ => Err(Error::InvalidArgument(format!(
            "axis {axis} invalid for dimension {d}"
        ))),
    }
}

/// ENO first derivative of one snapshot along `axis`.
pub fn snapshot_spatial_derivative(
    snap: &[f64],
    d: usize,
    m: usize,
    dx: f64,
    axis: usize,
) -> Result<Vec<f64>> {
    map_snapshot_lines(snap, d, m, axis, &mut |line| eno5_first_derivative(line, dx))
}

/// Forward time difference `(U^{n+1} - U^n) / dt`, defined at times `0..N-1`.
pub fn forward_time_diff(field: &Field) -> Result<Field> {
    let g = field.grid;
    if g.n < 2 {
        return Err(Error::InvalidArgument("need N >= 2 time steps".into()));
    }
    let out_grid = SpaceTimeGrid {
        n: g.n - 1,
        t_extent: g.dt * (g.n - 1) as f64,
        ..g
    };
    let p = g.points_per_snapshot();
    let mut values = Vec::with_capacity(g.n * p);
    for n in 0..g.n {
        let a = field.snapshot(n);
        let b = field.snapshot(n + 1);
        values.extend(a.iter().zip(b).map(|(&x, &y)| (y - x) / g.dt));
    }
    Field::new(out_grid, values)
}

/// ENO derivative along `axis`, snapshot by snapshot.
pub fn spatial_derivative(field: &Field, axis: usize) -> Result<Field> {
    let g = field.grid;
    if axis >= g.d {
        return Err(Error::InvalidArgument(format!(
            "axis {axis} out of range for d={}",
            g.d
        )));
    }
    let p = g.points_per_snapshot();
    let mut values = Vec::with_capacity((g.n + 1) * p);
    for n in 0..=g.n {
        values.extend(snapshot_spatial_derivative(field.snapshot(n), g.d, g.m, g.dx, axis)?);
    }
    Field::new(g, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::SpaceTimeGrid;

    #[test]
    fn forward_diff_constant_is_zero() {
        let g = SpaceTimeGrid::new(1, 5, 3, 1.0, 0.3).unwrap();
        let f = Field::from_fn(g, |_, i| i as f64).unwrap();
        let d = forward_time_diff(&f).unwrap();
        assert!(d.values().iter().all(|&v| v == 0.0));
        assert_eq!(d.grid.n, 2);
    }

    #[test]
    fn forward_diff_linear_in_time_is_one() {
        let g = SpaceTimeGrid::new(1, 5, 4, 1.0, 0.4).unwrap();
        let f = Field::from_fn(g, |n, _| n as f64 * g.dt).unwrap();
        let d = forward_time_diff(&f).unwrap();
        for &v in d.values() {
            assert!((v - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn forward_diff_quadratic_has_dt_bias() {
        // u(t) = t^2: forward difference at t is 2t + dt exactly.
        let g = SpaceTimeGrid::new(1, 5, 10, 1.0, 1.0).unwrap();
        let f = Field::from_fn(g, |n, _| (n as f64 * g.dt).powi(2)).unwrap();
        let d = forward_time_diff(&f).unwrap();
        for n in 0..g.n {
            let t = n as f64 * g.dt;
            for &v in d.snapshot(n) {
                assert!((v - (2.0 * t + g.dt)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn eno_exact_on_linears() {
        let m = 17;
        let dx = 0.1;
        let vals: Vec<f64> = (0..m).map(|i| 3.0 * i as f64 * dx - 2.0).collect();
        let d = eno5_first_derivative(&vals, dx).unwrap();
        for &v in &d {
            assert!((v - 3.0).abs() < 1e-11, "{v}");
        }
    }

    #[test]
    fn eno_exact_on_quartics_interior() {
        let m = 33;
        let dx = 0.05;
        let vals: Vec<f64> = (0..m).map(|i| (i as f64 * dx).powi(4)).collect();
        let d = eno5_first_derivative(&vals, dx).unwrap();
        for i in 0..m {
            let x = i as f64 * dx;
            let exact = 4.0 * x.powi(3);
            assert!(
                (d[i] - exact).abs() < 1e-8 * exact.abs().max(1.0),
                "node {i}: {} vs {exact}",
                d[i]
            );
        }
    }

    #[test]
    fn eno_fourth_order_on_sine() {
        let err = |m: usize| {
            let dx = 2.0 * std::f64::consts::PI / (m - 1) as f64;
            let vals: Vec<f64> = (0..m).map(|i| (i as f64 * dx).sin()).collect();
            let d = eno5_first_derivative(&vals, dx).unwrap();
            (5..m - 5)
                .map(|i| (d[i] - (i as f64 * dx).cos()).abs())
                .fold(0.0f64, f64::max)
        };
        let (e1, e2) = (err(65), err(129));
        let order = (e1 / e2).log2();
        assert!(order > 3.5, "observed order {order}");
    }

    #[test]
    fn eno_sign_antisymmetry() {
        let vals: Vec<f64> = (0..21).map(|i| ((i as f64) * 0.37).sin() + 0.1 * (i as f64)).collect();
        let neg: Vec<f64> = vals.iter().map(|v| -v).collect();
        let d1 = eno5_first_derivative(&vals, 0.1).unwrap();
        let d2 = eno5_first_derivative(&neg, 0.1).unwrap();
        for (a, b) in d1.iter().zip(&d2) {
            assert_eq!(*a, -*b);
        }
    }

    #[test]
    fn eno_scaling_and_shift_invariance() {
        // Stencil selection is data adaptive, so the operator is not linear
        // in general; positive scaling and constant shifts preserve every
        // divided-difference comparison, so those cases are exact.
        let u: Vec<f64> = (0..15).map(|i| ((i as f64) * 0.3).sin()).collect();
        let scaled: Vec<f64> = u.iter().map(|&x| 2.5 * x).collect();
        let shifted: Vec<f64> = u.iter().map(|&x| x + 7.0).collect();
        let du = eno5_first_derivative(&u, 0.2).unwrap();
        let ds = eno5_first_derivative(&scaled, 0.2).unwrap();
        let dh = eno5_first_derivative(&shifted, 0.2).unwrap();
        for i in 0..15 {
            assert!((ds[i] - 2.5 * du[i]).abs() < 1e-12, "scale node {i}");
            assert!((dh[i] - du[i]).abs() < 1e-11, "shift node {i}");
        }
    }

    #[test]
    fn spatial_derivative_2d_axes() {
        let g = SpaceTimeGrid::new(2, 9, 2, 1.0, 0.2).unwrap();
        // u = x + 2y.
        let f = Field::from_fn(g, |_, flat| {
            let (x, y) = g.coords(flat);
            x + 2.0 * y
        })
        .unwrap();
        let dx = spatial_derivative(&f, 0).unwrap();
        let dy = spatial_derivative(&f, 1).unwrap();
        for &v in dx.values() {
            assert!((v - 1.0).abs() < 1e-10);
        }
        for &v in dy.values() {
            assert!((v - 2.0).abs() < 1e-10);
        }
        // Independent of y along axis 1 => zero.
        let fx = Field::from_fn(g, |_, flat| g.coords(flat).0.powi(2)).unwrap();
        let dyy = spatial_derivative(&fx, 1).unwrap();
        for &v in dyy.values() {
            assert!(v.abs() < 1e-10);
        }
    }

    #[test]
    fn spatial_derivative_matches_line_loop_oracle() {
        let g = SpaceTimeGrid::new(2, 8, 1, 1.0, 0.1).unwrap();
        let f = Field::from_fn(g, |n, flat| {
            crate::rng::standard_normal(9, (n * 64 + flat) as u64)
        })
        .unwrap();
        let got = spatial_derivative(&f, 0).unwrap();
        // Brute-force loop over lines.
        for n in 0..=g.n {
            let snap = f.snapshot(n);
            for i2 in 0..g.m {
                let line: Vec<f64> = (0..g.m).map(|i1| snap[i1 * g.m + i2]).collect();
                let d = eno5_first_derivative(&line, g.dx).unwrap();
                for i1 in 0..g.m {
                    assert_eq!(got.snapshot(n)[i1 * g.m + i2], d[i1]);
                }
            }
        }
    }

    #[test]
    fn eno_rejects_short_input() {
        assert!(eno5_first_derivative(&[1.0, 2.0, 3.0, 4.0], 0.1).is_err());
    }
}
