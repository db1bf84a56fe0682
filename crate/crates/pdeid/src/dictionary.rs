//! Feature dictionary (10 monomials in 1D, 28 in 2D), regression system
//! assembly from SDD derivatives, and PDE rendering.
//!
//! The feature order is frozen: 1D is
//! `[1, u, u^2, u_x, u_x^2, u*u_x, u_xx, u_xx^2, u*u_xx, u_x*u_xx]`;
//! 2D is the constant, the six base fields `u, u_x, u_y, u_xx, u_xy, u_yy`,
//! then all pairwise products `base_i * base_j` with `i <= j` in
//! lexicographic `(i, j)` order. All reported supports index this order.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::differentiation::{eno5_first_derivative, map_snapshot_lines};
use crate::error::{Error, Result};
use crate::grid::Field;
use crate::smoothing::SddDerivatives;

/// Spatial derivative multi-index `(k1, k2)`; `k2` is always 0 in 1D.
pub type DerivOrder = (u8, u8);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feature {
    pub name: String,
    /// Exponent per base field, total degree <= 2.
    pub exponents: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DictionarySpec {
    pub d: usize,
    base: Vec<(DerivOrder, &'static str)>,
    features: Vec<Feature>,
}

impl DictionarySpec {
    pub fn new(d: usize) -> Result<Self> {
        let base: Vec<(DerivOrder, &'static str)> = match d {
            1 => vec![((0, 0), "u"), ((1, 0), "u_x"), ((2, 0), "u_xx")],
            2 => vec![
                ((0, 0), "u"),
                ((1, 0), "u_x"),
                ((0, 1), "u_y"),
                ((2, 0), "u_xx"),
                ((1, 1), "u_xy"),
                ((0, 2), "u_yy"),
            ],
            _ => return Err(Error::InvalidArgument(format!("dimension {d} unsupported"))),
        };
        let nb = base.len();
        let mut features = Vec::new();
        features.push(Feature { name: "1".into(), exponents: vec![0; nb] });
        if d == 1 {
            // Frozen 1D order.
            let specs: [&[(usize, u8)]; 9] = [
                &[(0, 1)],
                &[(0, 2)],
                &[(1, 1)],
                &[(1, 2)],
                &[(0, 1), (1, 1)],
                &[(2, 1)],
                &[(2, 2)],
                &[(0, 1), (2, 1)],
                &[(1, 1), (2, 1)],
            ];
            for spec in specs {
                let mut e = vec![0u8; nb];
                for &(b, p) in spec {
                    e[b] = p;
                }
                features.push(Feature { name: Self::feature_name(&base, &e), exponents: e });
            }
        } else {
            for b in 0..nb {
                let mut e = vec![0u8; nb];
                e[b] = 1;
                features.push(Feature { name: Self::feature_name(&base, &e), exponents: e });
            }
            for i in 0..nb {
                for j in i..nb {
                    let mut e = vec![0u8; nb];
                    e[i] += 1;
                    e[j] += 1;
                    features.push(Feature { name: Self::feature_name(&base, &e), exponents: e });
                }
            }
        }
        Ok(Self { d, base, features })
    }

    fn feature_name(base: &[(DerivOrder, &'static str)], exps: &[u8]) -> String {
        let mut parts = Vec::new();
        for (b, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(base[b].1.to_string()),
                _ => parts.push(format!("{}^{e}", base[b].1)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Number of features K.
    pub fn len(&self) -> usize {
        self.features.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn features(&self) -> &[Feature] {
        &self.features
    }

    pub fn feature(&self, j: usize) -> &Feature {
        &self.features[j]
    }

    pub fn names(&self) -> Vec<String> {
        self.features.iter().map(|f| f.name.clone()).collect()
    }

    pub fn feature_index(&self, name: &str) -> Option<usize> {
        self.features.iter().position(|f| f.name == name)
    }

    pub fn base_orders(&self) -> Vec<DerivOrder> {
        self.base.iter().map(|&(o, _)| o).collect()
    }

    /// Spatial derivative orders the SDD pipeline must provide (excluding u itself).
    pub fn needed_derivatives(&self) -> Vec<DerivOrder> {
        self.base.iter().map(|&(o, _)| o).filter(|&o| o != (0, 0)).collect()
    }
}

/// Length-K coefficient vector over a dictionary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coefficients {
    pub d: usize,
    pub values: Vec<f64>,
}

impl Coefficients {
    pub fn zeros(dict: &DictionarySpec) -> Self {
        Self { d: dict.d, values: vec![0.0; dict.len()] }
    }

    pub fn from_sparse(dict: &DictionarySpec, entries: &[(usize, f64)]) -> Result<Self> {
        let mut values = vec![0.0; dict.len()];
        for &(j, v) in entries {
            if j >= dict.len() {
                return Err(Error::IndexOutOfRange(format!("feature index {j}")));
            }
            if !v.is_finite() {
                return Err(Error::NonFinite(format!("coefficient {j}")));
            }
            values[j] = v;
        }
        Ok(Self { d: dict.d, values })
    }

    pub fn support(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0.0)
            .map(|(j, _)| j)
            .collect()
    }

    pub fn norm_l1(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }
}

/// Feature matrix F and response vector b = D_t U, rows time-major.
#[derive(Debug, Clone)]
pub struct RegressionSystem {
    pub f: DMatrix<f64>,
    pub b: DVector<f64>,
    pub dict: DictionarySpec,
    pub d: usize,
    pub m: usize,
    /// Number of time slices contributing rows (the spec's N).
    pub n_times: usize,
    pub dx: f64,
    pub dt: f64,
}

impl RegressionSystem {
    /// Decode a row index into `(n, flat spatial index)`.
    pub fn row_map(&self, row: usize) -> (usize, usize) {
        let p = self.m.pow(self.d as u32);
        (row / p, row % p)
    }
}

/// Assemble the regression system from arbitrary base fields. `base_fields`
/// follows the dictionary's base order; `dt` supplies the response. Only the
/// first `n_times` snapshots of every field contribute rows.
pub fn build_system_from_parts(
    dict: &DictionarySpec,
    base_fields: &[&Field],
    dt: &Field,
    n_times: usize,
) -> Result<RegressionSystem> {
    if base_fields.len() != dict.base.len() {
        return Err(Error::InvalidArgument("base field count mismatch".into()));
    }
    let g = base_fields[0].grid;
    let p = g.points_per_snapshot();
    let rows = n_times * p;
    let k = dict.len();
    if dt.grid.n + 1 < n_times {
        return Err(Error::ShapeMismatch("response has too few snapshots".into()));
    }
    let mut f = DMatrix::<f64>::zeros(rows, k);
    for (j, feat) in dict.features.iter().enumerate() {
        for n in 0..n_times {
            let snaps: Vec<&[f64]> = base_fields.iter().map(|fld| fld.snapshot(n)).collect();
            for i in 0..p {
                let mut v = 1.0;
                for (b, &e) in feat.exponents.iter().enumerate() {
                    for _ in 0..e {
                        v *= snaps[b][i];
                    }
                }
                f[(n * p + i, j)] = v;
            }
        }
    }
    let mut b = DVector::<f64>::zeros(rows);
    for n in 0..n_times {
        let snap = dt.snapshot(n);
        for i in 0..p {
            b[n * p + i] = snap[i];
        }
    }
    if f.iter().any(|v| !v.is_finite()) || b.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("regression system".into()));
    }
    Ok(RegressionSystem {
        f,
        b,
        dict: dict.clone(),
        d: g.d,
        m: g.m,
        n_times,
        dx: g.dx,
        dt: g.dt,
    })
}

/// Assemble F and b from SDD derivatives: rows cover times `0..N-1`, column
/// j is the elementwise monomial evaluation, the response is the smoothed
/// forward time difference.
pub fn build_system(derivs: &SddDerivatives, dict: &DictionarySpec) -> Result<RegressionSystem> {
    let base_fields: Vec<&Field> = dict
        .base
        .iter()
        .map(|&(o, _)| derivs.spatial(o))
        .collect::<Result<_>>()?;
    let n_times = derivs.dt.grid.n + 1;
    build_system_from_parts(dict, &base_fields, &derivs.dt, n_times)
}

/// Row-submatrix `[F]^rows`, `[b]^rows`, order preserving.
pub fn restrict_rows(sys: &RegressionSystem, rows: &[usize]) -> Result<RegressionSystem> {
    let nrows = sys.f.nrows();
    if rows.iter().any(|&r| r >= nrows) {
        return Err(Error::IndexOutOfRange("row restriction".into()));
    }
    let mut f = DMatrix::<f64>::zeros(rows.len(), sys.f.ncols());
    let mut b = DVector::<f64>::zeros(rows.len());
    for (out_r, &r) in rows.iter().enumerate() {
        f.row_mut(out_r).copy_from(&sys.f.row(r));
        b[out_r] = sys.b[r];
    }
    Ok(RegressionSystem { f, b, ..sys.clone() })
}

/// Render a coefficient vector as `u_t = ...` with fixed decimal precision,
/// listing nonzeros in dictionary order.
pub fn render_pde(dict: &DictionarySpec, c: &Coefficients, precision: usize) -> String {
    let mut out = String::from("u_t = ");
    let mut first = true;
    for (j, &v) in c.values.iter().enumerate() {
        if v == 0.0 {
            continue;
        }
        let name = &dict.features[j].name;
        let term = if name == "1" {
            format!("{:.precision$}", v.abs())
        } else {
            format!("{:.precision$}*{name}", v.abs())
        };
        if first {
            if v < 0.0 {
                out.push('-');
            }
            out.push_str(&term);
            first = false;
        } else {
            out.push_str(if v < 0.0 { " - " } else { " + " });
            out.push_str(&term);
        }
    }
    if first {
        out.push('0');
    }
    out
}

/// Evaluate the right-hand side `f(u, u_x, ...)` of a candidate PDE on one
/// snapshot, with spatial derivatives from raw ENO stencils (no smoothing).
pub fn evaluate_rhs(
    dict: &DictionarySpec,
    c: &Coefficients,
    snap: &[f64],
    m: usize,
    dx: f64,
) -> Result<Vec<f64>> {
    let d = dict.d;
    let nb = dict.base.len();
    let mut need_base = vec![false; nb];
    for (j, &v) in c.values.iter().enumerate() {
        if v != 0.0 {
            for (b, &e) in dict.features[j].exponents.iter().enumerate() {
                if e > 0 {
                    need_base[b] = true;
                }
            }
        }
    }
    let deriv = |vals: &[f64], axis: usize| -> Result<Vec<f64>> {
        map_snapshot_lines(vals, d, m, axis, &mut |line| eno5_first_derivative(line, dx))
    };
    // Base fields by repeated first derivatives, lower axis first.
    let mut bases: Vec<Option<Vec<f64>>> = vec![None; nb];
    bases[0] = Some(snap.to_vec());
    if d == 1 {
        let need_ux = need_base[1] || need_base[2];
        if need_ux {
            bases[1] = Some(deriv(snap, 0)?);
        }
        if need_base[2] {
            bases[2] = Some(deriv(bases[1].as_ref().unwrap(), 0)?);
        }
    } else {
        let need_ux = need_base[1] || need_base[3] || need_base[4];
        let need_uy = need_base[2] || need_base[5];
        if need_ux {
            bases[1] = Some(deriv(snap, 0)?);
        }
        if need_uy {
            bases[2] = Some(deriv(snap, 1)?);
        }
        if need_base[3] {
            bases[3] = Some(deriv(bases[1].as_ref().unwrap(), 0)?);
        }
        if need_base[4] {
            bases[4] = Some(deriv(bases[1].as_ref().unwrap(), 1)?);
        }
        if need_base[5] {
            bases[5] = Some(deriv(bases[2].as_ref().unwrap(), 1)?);
        }
    }
    let mut out = vec![0.0; snap.len()];
    for (j, &cv) in c.values.iter().enumerate() {
        if cv == 0.0 {
            continue;
        }
        let exps = &dict.features[j].exponents;
        for (i, o) in out.iter_mut().enumerate() {
            let mut v = cv;
            for (b, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    v *= bases[b].as_ref().unwrap()[i];
                }
            }
            *o += v;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::SpaceTimeGrid;
    use crate::smoothing::{sdd, SmootherSpec};

    #[test]
    fn one_d_order_is_frozen() {
        let dict = DictionarySpec::new(1).unwrap();
        assert_eq!(
            dict.names(),
            vec!["1", "u", "u^2", "u_x", "u_x^2", "u*u_x", "u_xx", "u_xx^2", "u*u_xx", "u_x*u_xx"]
        );
        assert_eq!(dict.len(), 10);
    }

    #[test]
    fn two_d_count_and_prefix() {
        let dict = DictionarySpec::new(2).unwrap();
        assert_eq!(dict.len(), 28);
        let names = dict.names();
        assert_eq!(&names[..7], &["1", "u", "u_x", "u_y", "u_xx", "u_xy", "u_yy"]);
        assert_eq!(names[7], "u^2");
        assert_eq!(names[8], "u*u_x");
        assert_eq!(*names.last().unwrap(), "u_yy^2");
        // 1 + 6 + 21.
        assert_eq!(names.len(), 1 + 6 + 21);
    }

    #[test]
    fn build_system_constant_column_and_products() {
        let g = SpaceTimeGrid::new(1, 8, 3, 1.0, 0.3).unwrap();
        let f = Field::from_fn(g, |n, i| ((n * 13 + i) as f64 * 0.37).sin()).unwrap();
        let dict = DictionarySpec::new(1).unwrap();
        let derivs = sdd(&f, &SmootherSpec::none(), &dict.needed_derivatives()).unwrap();
        let sys = build_system(&derivs, &dict).unwrap();
        assert_eq!(sys.f.nrows(), 3 * 8);
        assert_eq!(sys.f.ncols(), 10);
        for r in 0..sys.f.nrows() {
            assert_eq!(sys.f[(r, 0)], 1.0);
            // u*u_x column equals elementwise product of u and u_x columns.
            let (u, ux, uux) = (sys.f[(r, 1)], sys.f[(r, 3)], sys.f[(r, 5)]);
            assert!((uux - u * ux).abs() < 1e-14);
            // squares
            assert!((sys.f[(r, 2)] - u * u).abs() < 1e-14);
        }
    }

    #[test]
    fn build_system_agrees_with_naive_loop() {
        let g = SpaceTimeGrid::new(1, 8, 2, 1.0, 0.2).unwrap();
        let f = Field::from_fn(g, |n, i| crate::rng::standard_normal(5, (n * 8 + i) as u64)).unwrap();
        let dict = DictionarySpec::new(1).unwrap();
        let derivs = sdd(&f, &SmootherSpec::none(), &dict.needed_derivatives()).unwrap();
        let sys = build_system(&derivs, &dict).unwrap();
        let u = &derivs.denoised;
        let ux = derivs.spatial((1, 0)).unwrap();
        let uxx = derivs.spatial((2, 0)).unwrap();
        for n in 0..2 {
            for i in 0..8 {
                let r = n * 8 + i;
                let vals = [u.snapshot(n)[i], ux.snapshot(n)[i], uxx.snapshot(n)[i]];
                let expect = [
                    1.0,
                    vals[0],
                    vals[0] * vals[0],
                    vals[1],
                    vals[1] * vals[1],
                    vals[0] * vals[1],
                    vals[2],
                    vals[2] * vals[2],
                    vals[0] * vals[2],
                    vals[1] * vals[2],
                ];
                for (j, &e) in expect.iter().enumerate() {
                    assert!((sys.f[(r, j)] - e).abs() < 1e-12, "row {r} col {j}");
                }
                assert!((sys.b[r] - derivs.dt.snapshot(n)[i]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn restrict_rows_counts() {
        let g = SpaceTimeGrid::new(1, 8, 2, 1.0, 0.2).unwrap();
        let f = Field::from_fn(g, |n, i| (n + i) as f64 * 0.1).unwrap();
        let dict = DictionarySpec::new(1).unwrap();
        let derivs = sdd(&f, &SmootherSpec::none(), &dict.needed_derivatives()).unwrap();
        let sys = build_system(&derivs, &dict).unwrap();
        let all: Vec<usize> = (0..sys.f.nrows()).collect();
        let full = restrict_rows(&sys, &all).unwrap();
        assert_eq!(full.f, sys.f);
        let t1: Vec<usize> = (0..5).collect();
        let t2: Vec<usize> = (5..sys.f.nrows()).collect();
        assert_eq!(t1.len() + t2.len(), sys.f.nrows());
        // alpha split arithmetic from the contract: 12800/200 = 64.
        assert_eq!((12800f64 * (1.0 / 200.0)).floor() as usize, 64);
        assert!(restrict_rows(&sys, &[10_000]).is_err());
    }

    #[test]
    fn render_examples() {
        let dict = DictionarySpec::new(1).unwrap();
        let c = Coefficients::from_sparse(&dict, &[(3, -1.0)]).unwrap();
        assert_eq!(render_pde(&dict, &c, 4), "u_t = -1.0000*u_x");
        let c = Coefficients::from_sparse(&dict, &[(3, -0.9994)]).unwrap();
        assert_eq!(render_pde(&dict, &c, 4), "u_t = -0.9994*u_x");
        let zero = Coefficients::zeros(&dict);
        assert_eq!(render_pde(&dict, &zero, 4), "u_t = 0");
        let c = Coefficients::from_sparse(&dict, &[(5, -0.9901), (6, 0.1013)]).unwrap();
        assert_eq!(render_pde(&dict, &c, 4), "u_t = -0.9901*u*u_x + 0.1013*u_xx");
    }

    #[test]
    fn evaluate_rhs_linear_field() {
        let dict = DictionarySpec::new(1).unwrap();
        let m = 9;
        let dx = 0.125;
        let snap: Vec<f64> = (0..m).map(|i| 2.0 * i as f64 * dx + 1.0).collect();
        // u_t = -u_x on u = 2x+1 gives -2 everywhere.
        let c = Coefficients::from_sparse(&dict, &[(3, -1.0)]).unwrap();
        let rhs = evaluate_rhs(&dict, &c, &snap, m, dx).unwrap();
        for &v in &rhs {
            assert!((v + 2.0).abs() < 1e-10);
        }
    }
}
