//! Smoothers and the successively-denoised differentiation pipeline.
//!
//! The workhorse is moving least squares: at every node a degree-<=2
//! polynomial is fit under Gaussian weights `exp(-|x_j - x_k|^2 / h^2)` and
//! evaluated at the node. Weights below 1e-12 are truncated, which bounds the
//! effective window at about `5.26 h` per side. Boundary nodes simply use the
//! one-sided neighborhood that exists; there are no ghost values.

use std::collections::BTreeMap;

use nalgebra::{Matrix3, Vector3};

use crate::differentiation::{forward_time_diff, map_snapshot_lines, spatial_derivative};
use crate::error::{Error, Result};
use crate::grid::Field;

const WEIGHT_CUTOFF: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmootherKind {
    Mls,
    MovingAverage,
    Diffusion,
    None,
}

impl std::str::FromStr for SmootherKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mls" => Ok(Self::Mls),
            "moving-average" | "ma" => Ok(Self::MovingAverage),
            "diffusion" => Ok(Self::Diffusion),
            "none" => Ok(Self::None),
            other => Err(Error::InvalidArgument(format!("unknown smoother '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SmootherSpec {
    pub kind: SmootherKind,
    /// MLS bandwidth in the physical units of the axis being smoothed.
    pub h: f64,
    /// Optional separate bandwidth for the time axis. When unset, the
    /// differentiation pipeline uses `h` capped at a tenth of the time
    /// extent of the record.
    pub h_t: Option<f64>,
    /// Moving-average window, odd.
    pub window: usize,
    /// Diffusion iterations with step `dx^2 / 4`.
    pub steps: usize,
}

impl SmootherSpec {
    pub fn mls(h: f64) -> Self {
        Self { kind: SmootherKind::Mls, h, h_t: None, window: 3, steps: 5 }
    }

    pub fn none() -> Self {
        Self { kind: SmootherKind::None, h: 0.04, h_t: None, window: 3, steps: 5 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.h <= 0.0 || !self.h.is_finite() {
            return Err(Error::InvalidArgument("MLS bandwidth must be positive".into()));
        }
        if let Some(ht) = self.h_t {
            if ht <= 0.0 || !ht.is_finite() {
                return Err(Error::InvalidArgument("time bandwidth must be positive".into()));
            }
        }
        if self.window == 0 || self.window % 2 == 0 {
            return Err(Error::InvalidArgument("moving-average window must be odd".into()));
        }
        Ok(())
    }
}

impl Default for SmootherSpec {
    fn default() -> Self {
        Self::mls(0.04)
    }
}

/// MLS smoothing of one sample line. Returns the smoothed values and the
/// number of nodes that fell back to a weighted mean because the local
/// quadratic fit was degenerate.
pub fn mls_smooth_line(values: &[f64], spacing: f64, h: f64) -> Result<(Vec<f64>, usize)> {
    let m = values.len();
    if m < 3 {
        return Err(Error::InvalidArgument("MLS needs at least 3 samples".into()));
    }
    if !(spacing > 0.0 && h > 0.0) {
        return Err(Error::InvalidArgument("spacing and h must be positive".into()));
    }
    let radius = ((-WEIGHT_CUTOFF.ln()).sqrt() * h / spacing).ceil() as usize;
    let mut out = Vec::with_capacity(m);
    let mut fallbacks = 0usize;
    for j in 0..m {
        let lo = j.saturating_sub(radius);
        let hi = (j + radius).min(m - 1);
        let mut a = Matrix3::<f64>::zeros();
        let mut rhs = Vector3::<f64>::zeros();
        let mut wsum = 0.0;
        let mut wval = 0.0;
        let mut effective = 0usize;
        for k in lo..=hi {
            let s = (k as f64 - j as f64) * spacing / h;
            let w = (-s * s).exp();
            if w < WEIGHT_CUTOFF {
                continue;
            }
            effective += 1;
            let phi = Vector3::new(1.0, s, s * s);
            a += w * phi * phi.transpose();
            rhs += w * values[k] * phi;
            wsum += w;
            wval += w * values[k];
        }
        let smoothed = if effective < 3 {
            fallbacks += 1;
            wval / wsum
        } else {
            match a.lu().solve(&rhs) {
                Some(c) if c[0].is_finite() => c[0],
                _ => {
                    fallbacks += 1;
                    wval / wsum
                }
            }
        };
        out.push(smoothed);
    }
    Ok((out, fallbacks))
}

/// MLS smoothing of a 1D sample sequence (spec surface; drops the fallback count).
pub fn mls_smooth(values: &[f64], spacing: f64, h: f64) -> Result<Vec<f64>> {
    Ok(mls_smooth_line(values, spacing, h)?.0)
}

fn moving_average_line(values: &[f64], window: usize) -> Vec<f64> {
    let half = window / 2;
    let m = values.len();
    (0..m)
        .map(|j| {
            let lo = j.saturating_sub(half);
            let hi = (j + half).min(m - 1);
            values[lo..=hi].iter().sum::<f64>() / (hi - lo + 1) as f64
        })
        .collect()
}

fn diffusion_line(values: &[f64], steps: usize) -> Vec<f64> {
    // Explicit heat steps of size dx^2/4; endpoints use reflection.
    let m = values.len();
    let mut cur = values.to_vec();
    let mut next = vec![0.0; m];
    for _ in 0..steps {
        for j in 0..m {
            let left = cur[if j == 0 { 1 } else { j - 1 }];
            let right = cur[if j == m - 1 { m - 2 } else { j + 1 }];
            next[j] = cur[j] + 0.25 * (left - 2.0 * cur[j] + right);
        }
        std::mem::swap(&mut cur, &mut next);
    }
    cur
}

fn smooth_line(values: &[f64], spacing: f64, spec: &SmootherSpec, h: f64) -> Result<(Vec<f64>, usize)> {
    match spec.kind {
        SmootherKind::None => Ok((values.to_vec(), 0)),
        SmootherKind::Mls => {
            if values.len() < 3 {
                // Too short for a quadratic fit; leave the line unchanged.
                Ok((values.to_vec(), 0))
            } else {
                mls_smooth_line(values, spacing, h)
            }
        }
        SmootherKind::MovingAverage => Ok((moving_average_line(values, spec.window), 0)),
        SmootherKind::Diffusion => Ok((diffusion_line(values, spec.steps), 0)),
    }
}

fn smooth_space_counted(field: &Field, spec: &SmootherSpec) -> Result<(Field, usize)> {
    if spec.kind == SmootherKind::None {
        return Ok((field.clone(), 0));
    }
    spec.validate()?;
    let g = field.grid;
    let mut fallbacks = 0usize;
    let p = g.points_per_snapshot();
    let mut values = Vec::with_capacity((g.n + 1) * p);
    for n in 0..=g.n {
        let mut snap = field.snapshot(n).to_vec();
        for axis in 0..g.d {
            snap = map_snapshot_lines(&snap, g.d, g.m, axis, &mut |line| {
                let (out, fb) = smooth_line(line, g.dx, spec, spec.h)?;
                fallbacks += fb;
                Ok(out)
            })?;
        }
        values.extend(snap);
    }
    Ok((Field::new(g, values)?, fallbacks))
}

/// Apply the 1D smoother along each spatial axis in sequence (x then y),
/// snapshot by snapshot.
pub fn smooth_space(field: &Field, spec: &SmootherSpec) -> Result<Field> {
    Ok(smooth_space_counted(field, spec)?.0)
}

/// Apply the 1D smoother along the time axis at each fixed spatial node.
pub fn smooth_time(field: &Field, spec: &SmootherSpec) -> Result<Field> {
    if spec.kind == SmootherKind::None {
        return Ok(field.clone());
    }
    spec.validate()?;
    let g = field.grid;
    let p = g.points_per_snapshot();
    let nt = g.n + 1;
    let h = spec.h_t.unwrap_or(spec.h);
    let mut out = Field::zeros(g);
    let mut series = vec![0.0; nt];
    for i in 0..p {
        for t in 0..nt {
            series[t] = field.snapshot(t)[i];
        }
        let (smoothed, _) = smooth_line(&series, g.dt, spec, h)?;
        for t in 0..nt {
            out.snapshot_mut(t)[i] = smoothed[t];
        }
    }
    // Re-validate finiteness through the public constructor.
    Field::new(g, out.values().to_vec())
}

/// Derivative fields produced by successively denoised differentiation.
#[derive(Debug, Clone)]
pub struct SddDerivatives {
    /// `S_x[U]`.
    pub denoised: Field,
    /// `S_t D_t S_x[U]`, defined at times `0..N-1`.
    pub dt: Field,
    /// Spatial derivatives keyed by multi-index `(k1, k2)`; `k2` is 0 in 1D.
    pub spatial: BTreeMap<(u8, u8), Field>,
    /// Nodes where the MLS quadratic fit degenerated to a weighted mean.
    pub mls_fallbacks: usize,
}

impl SddDerivatives {
    pub fn spatial(&self, order: (u8, u8)) -> Result<&Field> {
        if order == (0, 0) {
            return Ok(&self.denoised);
        }
        self.spatial
            .get(&order)
            .ok_or_else(|| Error::InvalidArgument(format!("derivative {order:?} not computed")))
    }
}

/// Run successively denoised differentiation: every differentiation step
/// consumes a freshly smoothed input, and derivative outputs are left
/// unsmoothed.
///
/// First derivatives are `D_xi S[U]`; second derivatives re-smooth the first
/// derivative before differentiating again, `D_xj S[D_xi S[U]]`, with the
/// lower axis index applied first for mixed partials. The time derivative is
/// `S_t[D_t S[U]]`.
///
/// Smoothing strictly before (never after) each differentiation keeps the
/// number of smoothing passes on the first-derivative features equal to the
/// number on the time-derivative response. MLS at bandwidth `h` attenuates a
/// Fourier mode `exp(i k x)` by roughly `exp(-(kh)^2/4) (1 + (kh)^2/4)`
/// (about 1% at `kh ~ 0.8`), so an extra pass on one side of the regression
/// biases every recovered coefficient by that factor.
pub fn sdd(data: &Field, spec: &SmootherSpec, needed: &[(u8, u8)]) -> Result<SddDerivatives> {
    let d = data.grid.d;
    for &(k1, k2) in needed {
        if k1 + k2 > 2 || (d == 1 && k2 > 0) {
            return Err(Error::InvalidArgument(format!(
                "unsupported derivative order ({k1},{k2}) for d={d}"
            )));
        }
    }
    let mut fallbacks = 0usize;
    let mut smooth = |f: &Field| -> Result<Field> {
        let (out, fb) = smooth_space_counted(f, spec)?;
        fallbacks += fb;
        Ok(out)
    };

    let denoised = smooth(data)?;
    let needs = |k: (u8, u8)| needed.contains(&k);

    let dx = if needs((1, 0)) || needs((2, 0)) || needs((1, 1)) {
        Some(spatial_derivative(&denoised, 0)?)
    } else {
        None
    };
    let dy = if needs((0, 1)) || needs((0, 2)) {
        Some(spatial_derivative(&denoised, 1)?)
    } else {
        None
    };
    let dx_smoothed = if needs((2, 0)) || needs((1, 1)) {
        Some(smooth(dx.as_ref().unwrap())?)
    } else {
        None
    };

    let mut spatial = BTreeMap::new();
    if needs((2, 0)) {
        spatial.insert((2, 0), spatial_derivative(dx_smoothed.as_ref().unwrap(), 0)?);
    }
    if needs((1, 1)) {
        spatial.insert((1, 1), spatial_derivative(dx_smoothed.as_ref().unwrap(), 1)?);
    }
    if needs((0, 2)) {
        spatial.insert((0, 2), spatial_derivative(&smooth(dy.as_ref().unwrap())?, 1)?);
    }
    if let (true, Some(f)) = (needs((1, 0)), dx) {
        spatial.insert((1, 0), f);
    }
    if let (true, Some(f)) = (needs((0, 1)), dy) {
        spatial.insert((0, 1), f);
    }

    let dt_raw = forward_time_diff(&denoised)?;
    let dt = {
        let mut t_spec = *spec;
        // Unless overridden, cap the time bandwidth at a tenth of the record
        // length: a bandwidth comparable to the whole time axis turns the
        // local fit into a single global quadratic, which biases the time
        // derivative wherever the dynamics have higher-order structure.
        let t_extent = data.grid.dt * data.grid.n as f64;
        t_spec.h_t = spec.h_t.or(Some(spec.h.min(t_extent / 10.0)));
        smooth_time(&dt_raw, &t_spec)?
    };

    Ok(SddDerivatives { denoised, dt, spatial, mls_fallbacks: fallbacks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::differentiation::eno5_first_derivative;
    use crate::grid::SpaceTimeGrid;
    use crate::rng::standard_normal;

    #[test]
    fn mls_reproduces_quadratics() {
        let m = 101;
        let dx = 0.01;
        for h in [0.01, 0.04, 0.1] {
            let q: Vec<f64> = (0..m)
                .map(|i| {
                    let x = i as f64 * dx;
                    1.0 + 2.0 * x - 3.0 * x * x
                })
                .collect();
            let s = mls_smooth(&q, dx, h).unwrap();
            for (i, (&a, &b)) in q.iter().zip(&s).enumerate() {
                assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0), "h={h} node {i}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn mls_matches_dense_weighted_ls_oracle() {
        // One interior node, 5-point effective window: compare against an
        // explicit dense solve of the 3x3 normal equations.
        let vals = [1.0, 2.5, 1.7, -0.3, 0.9, 2.2, 1.1];
        let dx = 1.0;
        let h = 1.0; // cutoff radius ~5.26 nodes
        let j = 3usize;
        let (got, _) = mls_smooth_line(&vals, dx, h).unwrap();
        // Oracle: brute-force normal equations around node j over all nodes.
        let mut a = [[0.0f64; 3]; 3];
        let mut r = [0.0f64; 3];
        for (k, &u) in vals.iter().enumerate() {
            let s = (k as f64 - j as f64) * dx / h;
            let w = (-s * s).exp();
            if w < 1e-12 {
                continue;
            }
            let phi = [1.0, s, s * s];
            for p in 0..3 {
                for q in 0..3 {
                    a[p][q] += w * phi[p] * phi[q];
                }
                r[p] += w * u * phi[p];
            }
        }
        let am = Matrix3::from_fn(|p, q| a[p][q]);
        let c = am.lu().solve(&Vector3::new(r[0], r[1], r[2])).unwrap();
        assert!((got[j] - c[0]).abs() < 1e-12);
    }

    #[test]
    fn mls_denoises_sine() {
        let m = 257;
        let dx = 2.0 * std::f64::consts::PI / (m - 1) as f64;
        let clean: Vec<f64> = (0..m).map(|i| (i as f64 * dx).sin()).collect();
        let noisy: Vec<f64> = clean
            .iter()
            .enumerate()
            .map(|(i, &v)| v + 0.007 * standard_normal(3, i as u64))
            .collect();
        let smoothed = mls_smooth(&noisy, dx, 0.04 * 2.0 * std::f64::consts::PI).unwrap();
        let l2 = |a: &[f64]| -> f64 {
            a.iter().zip(&clean).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
        };
        assert!(l2(&smoothed) < l2(&noisy));
    }

    #[test]
    fn identity_smoothers() {
        let vals: Vec<f64> = (0..20).map(|i| ((i as f64) * 0.7).sin()).collect();
        assert_eq!(moving_average_line(&vals, 1), vals);
        assert_eq!(diffusion_line(&vals, 0), vals);
    }

    #[test]
    fn smoothers_are_linear() {
        let u: Vec<f64> = (0..40).map(|i| ((i as f64) * 0.3).sin()).collect();
        let v: Vec<f64> = (0..40).map(|i| ((i as f64) * 0.11).cos()).collect();
        let a = -1.7;
        let combo: Vec<f64> = u.iter().zip(&v).map(|(&x, &y)| a * x + y).collect();
        for spec in [
            SmootherSpec::mls(0.5),
            SmootherSpec { kind: SmootherKind::MovingAverage, ..SmootherSpec::default() },
            SmootherSpec { kind: SmootherKind::Diffusion, ..SmootherSpec::default() },
        ] {
            let sc = smooth_line(&combo, 0.1, &spec, spec.h).unwrap().0;
            let su = smooth_line(&u, 0.1, &spec, spec.h).unwrap().0;
            let sv = smooth_line(&v, 0.1, &spec, spec.h).unwrap().0;
            for j in 0..40 {
                assert!((sc[j] - (a * su[j] + sv[j])).abs() < 1e-10, "{:?} node {j}", spec.kind);
            }
        }
    }

    #[test]
    fn smooth_space_none_is_identity() {
        let g = SpaceTimeGrid::new(1, 9, 2, 1.0, 0.2).unwrap();
        let f = Field::from_fn(g, |n, i| (n + i) as f64).unwrap();
        assert_eq!(smooth_space(&f, &SmootherSpec::none()).unwrap().values(), f.values());
        assert_eq!(smooth_time(&f, &SmootherSpec::none()).unwrap().values(), f.values());
    }

    #[test]
    fn smooth_space_2d_constant_in_y_matches_1d() {
        let g2 = SpaceTimeGrid::new(2, 17, 1, 1.0, 0.1).unwrap();
        let profile: Vec<f64> = (0..17).map(|i| ((i as f64) * 0.4).sin()).collect();
        let f2 = Field::from_fn(g2, |_, flat| profile[flat / 17]).unwrap();
        let spec = SmootherSpec::mls(0.1);
        let s2 = smooth_space(&f2, &spec).unwrap();
        let s1 = mls_smooth(&profile, g2.dx, 0.1).unwrap();
        for i1 in 0..17 {
            for i2 in 0..17 {
                assert!((s2.snapshot(0)[i1 * 17 + i2] - s1[i1]).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn smooth_space_2d_separable_product() {
        let m = 17;
        let g2 = SpaceTimeGrid::new(2, m, 1, 1.0, 0.1).unwrap();
        let gx: Vec<f64> = (0..m).map(|i| ((i as f64) * 0.4).sin() + 2.0).collect();
        let wy: Vec<f64> = (0..m).map(|i| ((i as f64) * 0.2).cos() + 1.5).collect();
        let f2 = Field::from_fn(g2, |_, flat| gx[flat / m] * wy[flat % m]).unwrap();
        let spec = SmootherSpec::mls(0.1);
        let s2 = smooth_space(&f2, &spec).unwrap();
        let sx = mls_smooth(&gx, g2.dx, 0.1).unwrap();
        let sy = mls_smooth(&wy, g2.dx, 0.1).unwrap();
        for i1 in 0..m {
            for i2 in 0..m {
                let expect = sx[i1] * sy[i2];
                assert!((s2.snapshot(0)[i1 * m + i2] - expect).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn sdd_none_is_plain_differentiation() {
        let g = SpaceTimeGrid::new(1, 33, 3, 1.0, 0.3).unwrap();
        let f = Field::from_fn(g, |n, i| ((i as f64 * g.dx) * 3.0).sin() + n as f64 * 0.1).unwrap();
        let derivs = sdd(&f, &SmootherSpec::none(), &[(1, 0), (2, 0)]).unwrap();
        let dx1 = spatial_derivative(&f, 0).unwrap();
        assert_eq!(derivs.spatial((1, 0)).unwrap().values(), dx1.values());
        let dx2 = spatial_derivative(&dx1, 0).unwrap();
        assert_eq!(derivs.spatial((2, 0)).unwrap().values(), dx2.values());
        let dt = forward_time_diff(&f).unwrap();
        assert_eq!(derivs.dt.values(), dt.values());
    }

    #[test]
    fn sdd_second_derivative_of_clean_quadratic() {
        let g = SpaceTimeGrid::new(1, 65, 2, 1.0, 0.2).unwrap();
        let f = Field::from_fn(g, |_, i| {
            let x = i as f64 * g.dx;
            0.5 + x - 3.0 * x * x
        })
        .unwrap();
        let derivs = sdd(&f, &SmootherSpec::mls(0.05), &[(1, 0), (2, 0)]).unwrap();
        let uxx = derivs.spatial((2, 0)).unwrap();
        for i in 5..60 {
            assert!(
                (uxx.snapshot(0)[i] + 6.0).abs() < 1e-6,
                "node {i}: {}",
                uxx.snapshot(0)[i]
            );
        }
    }

    #[test]
    fn sdd_damps_noise_in_second_derivative() {
        // Core noise-damping property on sin(x) with sigma = 0.007.
        let m = 257;
        let x_len = 2.0 * std::f64::consts::PI;
        let g = SpaceTimeGrid::new(1, m, 2, x_len, 0.2).unwrap();
        let mut ratios = Vec::new();
        for seed in 0..10u64 {
            let noisy: Vec<f64> = (0..m)
                .map(|i| (i as f64 * g.dx).sin() + 0.007 * standard_normal(seed, i as u64))
                .collect();
            let exact: Vec<f64> = (0..m).map(|i| -(i as f64 * g.dx).sin()).collect();
            let rel_l2 = |got: &[f64]| {
                let num: f64 = got.iter().zip(&exact).map(|(a, b)| (a - b).powi(2)).sum();
                let den: f64 = exact.iter().map(|v| v * v).sum();
                (num / den).sqrt()
            };
            let raw = {
                let d1 = eno5_first_derivative(&noisy, g.dx).unwrap();
                eno5_first_derivative(&d1, g.dx).unwrap()
            };
            let sdd2 = {
                let s = mls_smooth(&noisy, g.dx, 0.25).unwrap();
                let d1 = eno5_first_derivative(&s, g.dx).unwrap();
                eno5_first_derivative(&mls_smooth(&d1, g.dx, 0.25).unwrap(), g.dx).unwrap()
            };
            ratios.push(rel_l2(&sdd2) / rel_l2(&raw));
        }
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        assert!(mean <= 0.2, "mean damping ratio {mean}");
    }

    #[test]
    fn mixed_partials_agree_on_smooth_data() {
        let m = 33;
        let g = SpaceTimeGrid::new(2, m, 2, 1.0, 0.2).unwrap();
        let f = Field::from_fn(g, |_, flat| {
            let (x, y) = g.coords(flat);
            (2.0 * x).sin() * (3.0 * y).cos()
        })
        .unwrap();
        let derivs = sdd(&f, &SmootherSpec::none(), &[(1, 0), (0, 1), (1, 1)]).unwrap();
        let uxy = derivs.spatial((1, 1)).unwrap();
        // Other order: D_x applied to u_y.
        let uy = derivs.spatial((0, 1)).unwrap();
        let uyx = spatial_derivative(uy, 0).unwrap();
        let mut max_diff = 0.0f64;
        for i1 in 4..m - 4 {
            for i2 in 4..m - 4 {
                let idx = i1 * m + i2;
                max_diff = max_diff.max((uxy.snapshot(0)[idx] - uyx.snapshot(0)[idx]).abs());
            }
        }
        assert!(max_diff < 1e-6, "max mixed-partial asymmetry {max_diff}");
    }
}
