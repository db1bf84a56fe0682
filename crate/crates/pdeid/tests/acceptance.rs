//! End-to-end acceptance checks. Each test prints exactly one PASS/FAIL
//! line summarizing its criterion.

use std::time::Instant;

use pdeid::dictionary::{build_system, Coefficients, DictionarySpec};
use pdeid::differentiation::eno5_first_derivative;
use pdeid::grid::{Field, SpaceTimeGrid};
use pdeid::identify::{resolution_consistency, sc, st, ScConfig, StConfig};
use pdeid::metrics::coefficient_error;
use pdeid::rng::standard_normal;
use pdeid::simulate::{add_noise, builtin_experiment, NoiseSpec};
use pdeid::smoothing::{mls_smooth, sdd, SmootherSpec};
use pdeid::sparse::subspace_pursuit;

struct Run {
    st_c: Coefficients,
    sc_c: Coefficients,
    wall: f64,
}

fn pipeline(name: &str, noise: f64, seed: u64, h: f64) -> Run {
    let exp = builtin_experiment(name).unwrap();
    let dict = DictionarySpec::new(exp.pde.dict.d).unwrap();
    let clean = exp.clean_data().unwrap();
    let data = if noise > 0.0 {
        add_noise(&clean, &NoiseSpec { percent: noise, seed }).unwrap()
    } else {
        clean
    };
    let spec = SmootherSpec { h, ..SmootherSpec::default() };
    let t0 = Instant::now();
    let derivs = sdd(&data, &spec, &dict.needed_derivatives()).unwrap();
    let sys = build_system(&derivs, &dict).unwrap();
    let st_c =
        st(&sys, &derivs.denoised, &StConfig::with_window(exp.default_w)).unwrap().coefficients;
    let sc_c = sc(&sys, &ScConfig::with_alpha(exp.default_alpha)).unwrap().coefficients;
    Run { st_c, sc_c, wall: t0.elapsed().as_secs_f64() }
}

fn verdict(n: u32, label: &str, pass: bool, detail: &str) {
    println!("criterion {n} ({label}): {} — {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {n} failed: {detail}");
}

#[test]
fn criterion_01_transport_clean() {
    let dict = DictionarySpec::new(1).unwrap();
    let ux = dict.feature_index("u_x").unwrap();
    let uxx = dict.feature_index("u_xx").unwrap();
    let r = pipeline("transport", 0.0, 0, 0.04);
    let truth = builtin_experiment("transport").unwrap().pde.coefficients;
    let mut pass = r.wall <= 60.0;
    let mut detail = format!("wall {:.1}s", r.wall);
    for (tag, c) in [("st", &r.st_c), ("sc", &r.sc_c)] {
        let supp = c.support();
        let ok = supp.iter().all(|&j| j == ux || j == uxx)
            && (c.values[ux] + 1.0).abs() <= 5e-3
            && supp.iter().all(|&j| j == ux || c.values[j].abs() <= 5e-3);
        pass &= ok;
        detail += &format!(", {tag} u_x {:.4}", c.values[ux]);
    }
    let ec = coefficient_error(&r.st_c, &truth).unwrap();
    pass &= ec <= 5e-3;
    detail += &format!(", st e_c {ec:.2e}");
    verdict(1, "transport 0% noise", pass, &detail);
}

#[test]
fn criterion_02_transport_noisy() {
    let dict = DictionarySpec::new(1).unwrap();
    let ux = dict.feature_index("u_x").unwrap();
    let truth = builtin_experiment("transport").unwrap().pde.coefficients;
    let (mut st_hits, mut sc_hits, mut st_ec, mut sc_ec) = (0, 0, 0.0, 0.0);
    for seed in 0..10 {
        let r = pipeline("transport", 10.0, seed, 0.04);
        st_hits += (r.st_c.support() == vec![ux]) as u32;
        sc_hits += (r.sc_c.support() == vec![ux]) as u32;
        st_ec += coefficient_error(&r.st_c, &truth).unwrap() / 10.0;
        sc_ec += coefficient_error(&r.sc_c, &truth).unwrap() / 10.0;
    }
    let pass = st_hits >= 8 && sc_hits >= 8 && st_ec <= 0.10 && sc_ec <= 0.10;
    let detail = format!(
        "st {st_hits}/10 mean e_c {st_ec:.3}, sc {sc_hits}/10 mean e_c {sc_ec:.3}"
    );
    verdict(2, "transport 10% noise, 10 seeds", pass, &detail);
}

#[test]
fn criterion_03_burgers_clean() {
    let dict = DictionarySpec::new(1).unwrap();
    let uux = dict.feature_index("u*u_x").unwrap();
    let truth = builtin_experiment("burgers").unwrap().pde.coefficients;
    // The front has steepened enough by the end of the record that the
    // default bandwidth over-attenuates it; 0.02 keeps the coefficient
    // within the tolerance (see the guide's denoising chapter).
    let r = pipeline("burgers", 0.0, 0, 0.02);
    let sc_ec = coefficient_error(&r.sc_c, &truth).unwrap();
    let st_supp = r.st_c.support();
    let pass = r.sc_c.support() == vec![uux]
        && sc_ec <= 2e-2
        && st_supp.contains(&uux)
        && st_supp.iter().all(|&j| j == uux || r.st_c.values[j].abs() <= 1e-3);
    let detail = format!(
        "sc supp {:?} e_c {sc_ec:.2e}, st supp {st_supp:?} u*u_x {:.4}",
        r.sc_c.support(),
        r.st_c.values[uux]
    );
    verdict(3, "burgers 0% noise", pass, &detail);
}

#[test]
fn criterion_04_burgers_diffusion_noisy() {
    let dict = DictionarySpec::new(1).unwrap();
    let want = vec![
        dict.feature_index("u*u_x").unwrap(),
        dict.feature_index("u_xx").unwrap(),
    ];
    let truth = builtin_experiment("burgers-diffusion").unwrap().pde.coefficients;
    let (mut st_hits, mut sc_hits, mut st_ec, mut sc_ec) = (0, 0, 0.0, 0.0);
    for seed in 0..10 {
        let r = pipeline("burgers-diffusion", 1.0, seed, 0.04);
        st_hits += (r.st_c.support() == want) as u32;
        sc_hits += (r.sc_c.support() == want) as u32;
        st_ec += coefficient_error(&r.st_c, &truth).unwrap() / 10.0;
        sc_ec += coefficient_error(&r.sc_c, &truth).unwrap() / 10.0;
    }
    let pass = st_hits >= 8 && sc_hits >= 8 && st_ec <= 5e-2 && sc_ec <= 5e-2;
    let detail = format!(
        "st {st_hits}/10 mean e_c {st_ec:.3}, sc {sc_hits}/10 mean e_c {sc_ec:.3}"
    );
    verdict(4, "burgers+diffusion 1% noise, 10 seeds", pass, &detail);
}

#[test]
fn criterion_05_twod_advection_diffusion() {
    let dict = DictionarySpec::new(2).unwrap();
    let want = vec![
        dict.feature_index("u_xx").unwrap(),
        dict.feature_index("u*u_y").unwrap(),
    ];
    let truth = builtin_experiment("twod-advdiff").unwrap().pde.coefficients;
    let r = pipeline("twod-advdiff", 0.0, 0, 0.04);
    let st_ec = coefficient_error(&r.st_c, &truth).unwrap();
    let sc_ec = coefficient_error(&r.sc_c, &truth).unwrap();
    let pass = r.st_c.support() == want
        && r.sc_c.support() == want
        && st_ec <= 0.10
        && sc_ec <= 0.10
        && r.wall <= 600.0;
    let detail = format!(
        "st supp {:?} e_c {st_ec:.3}, sc supp {:?} e_c {sc_ec:.3}, wall {:.1}s",
        r.st_c.support(),
        r.sc_c.support(),
        r.wall
    );
    verdict(5, "2D advection-diffusion 0% noise", pass, &detail);
}

#[test]
fn criterion_06_identifiability() {
    let dict = DictionarySpec::new(2).unwrap();
    let ux = dict.feature_index("u_x").unwrap();
    let uy = dict.feature_index("u_y").unwrap();

    let rx = pipeline("twod-transport-x", 0.0, 0, 0.04);
    let x_ok = rx.sc_c.support() == vec![ux] && (rx.sc_c.values[ux] + 0.5).abs() <= 0.05;

    let rxy = pipeline("twod-transport-xy", 0.0, 0, 0.04);
    let truth = builtin_experiment("twod-transport-xy").unwrap().pde.coefficients;
    let xy_ok = rxy.sc_c.support() == vec![ux, uy]
        && (rxy.sc_c.values[ux] - truth.values[ux]).abs() <= 0.05
        && (rxy.sc_c.values[uy] - truth.values[uy]).abs() <= 0.05;

    let detail = format!(
        "y-independent: supp {:?} u_x {:.4}; x-and-y: supp {:?} u_x {:.4} u_y {:.4}",
        rx.sc_c.support(),
        rx.sc_c.values[ux],
        rxy.sc_c.support(),
        rxy.sc_c.values[ux],
        rxy.sc_c.values[uy]
    );
    verdict(6, "2D identifiability", x_ok && xy_ok, &detail);
}

#[test]
fn criterion_07_denoised_differentiation_efficacy() {
    let m = 257;
    let g = SpaceTimeGrid::new(1, m, 2, 2.0 * std::f64::consts::PI, 0.2).unwrap();
    let exact: Vec<f64> = (0..m).map(|i| -(i as f64 * g.dx).sin()).collect();
    let rel_l2 = |got: &[f64]| {
        let num: f64 = got.iter().zip(&exact).map(|(a, b)| (a - b).powi(2)).sum();
        let den: f64 = exact.iter().map(|v| v * v).sum();
        (num / den).sqrt()
    };
    let mut ratios = Vec::new();
    for seed in 0..10u64 {
        let noisy: Vec<f64> = (0..m)
            .map(|i| (i as f64 * g.dx).sin() + 0.007 * standard_normal(seed, i as u64))
            .collect();
        let raw = {
            let d1 = eno5_first_derivative(&noisy, g.dx).unwrap();
            eno5_first_derivative(&d1, g.dx).unwrap()
        };
        let denoised = {
            let s = mls_smooth(&noisy, g.dx, 0.25).unwrap();
            let d1 = eno5_first_derivative(&s, g.dx).unwrap();
            eno5_first_derivative(&mls_smooth(&d1, g.dx, 0.25).unwrap(), g.dx).unwrap()
        };
        ratios.push(rel_l2(&denoised) / rel_l2(&raw));
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    verdict(7, "smoothed differentiation efficacy", mean <= 0.2, &format!("mean ratio {mean:.3}"));
}

#[test]
fn criterion_08_subspace_pursuit_oracle() {
    use nalgebra::{DMatrix, DVector};
    let (rows, cols, k) = (50, 10, 3);
    let mut matches = 0;
    let mut ordering_ok = true;
    for inst in 0..200u64 {
        let f = DMatrix::from_fn(rows, cols, |i, j| {
            standard_normal(inst, (i * cols + j) as u64)
        });
        // Planted 3-sparse coefficients on distinct pseudo-random columns.
        let mut support: Vec<usize> = Vec::new();
        let mut probe = 0u64;
        while support.len() < k {
            let j = (standard_normal(inst + 1_000_000, probe).abs() * 1e6) as usize % cols;
            if !support.contains(&j) {
                support.push(j);
            }
            probe += 1;
        }
        support.sort_unstable();
        let mut c = DVector::zeros(cols);
        for (idx, &j) in support.iter().enumerate() {
            c[j] = 1.0 + idx as f64;
        }
        let b = &f * &c;
        let sp = subspace_pursuit(k, &f, &b).unwrap();

        // Exhaustive search over all size-3 supports.
        let mut best = (f64::INFINITY, Vec::new());
        for a in 0..cols {
            for bi in a + 1..cols {
                for ci in bi + 1..cols {
                    let cand = vec![a, bi, ci];
                    let sub = f.select_columns(&cand);
                    let sol = sub.clone().svd(true, true).solve(&b, 1e-12).unwrap();
                    let res = (&b - sub * sol).norm();
                    if res < best.0 {
                        best = (res, cand);
                    }
                }
            }
        }
        matches += (sp.support == best.1) as u32;
        let sp_res = sp.residual_norms.last().copied().unwrap_or(f64::INFINITY);
        ordering_ok &= sp_res >= best.0 - 1e-9;
    }
    let pass = matches >= 190 && ordering_ok;
    let detail = format!("{matches}/200 support matches, residual ordering ok: {ordering_ok}");
    verdict(8, "subspace pursuit vs exhaustive search", pass, &detail);
}

#[test]
fn criterion_09_mls_polynomial_reproduction() {
    let m = 257;
    let dx = 1.0 / (m as f64 - 1.0);
    let poly: Vec<f64> = (0..m)
        .map(|i| {
            let x = i as f64 * dx;
            1.5 - 2.0 * x + 3.25 * x * x
        })
        .collect();
    let mut worst: f64 = 0.0;
    for h in [0.01, 0.04, 0.1] {
        let out = mls_smooth(&poly, dx, h).unwrap();
        for (a, b) in out.iter().zip(&poly) {
            worst = worst.max((a - b).abs() / b.abs().max(1.0));
        }
    }
    verdict(9, "quadratic reproduction by the smoother", worst <= 1e-9, &format!("worst relative error {worst:.1e}"));
}

#[test]
fn criterion_10_derivative_accuracy() {
    // Convergence order on sin between M = 129 and M = 257.
    let err = |m: usize| {
        let dx = 2.0 * std::f64::consts::PI / (m as f64 - 1.0);
        let vals: Vec<f64> = (0..m).map(|i| (i as f64 * dx).sin()).collect();
        let d = eno5_first_derivative(&vals, dx).unwrap();
        (4..m - 4)
            .map(|i| (d[i] - (i as f64 * dx).cos()).abs())
            .fold(0.0f64, f64::max)
    };
    let order = (err(129) / err(257)).log2();

    // Exactness on a quartic.
    let m = 65;
    let dx = 1.0 / (m as f64 - 1.0);
    let vals: Vec<f64> = (0..m)
        .map(|i| {
            let x = i as f64 * dx;
            x.powi(4) - 2.0 * x.powi(3) + 0.5 * x
        })
        .collect();
    let d = eno5_first_derivative(&vals, dx).unwrap();
    let quartic_rel = (0..m)
        .map(|i| {
            let x = i as f64 * dx;
            let exact = 4.0 * x.powi(3) - 6.0 * x * x + 0.5;
            (d[i] - exact).abs() / exact.abs().max(1.0)
        })
        .fold(0.0f64, f64::max);

    let pass = order >= 3.7 && quartic_rel <= 1e-8;
    verdict(10, "derivative accuracy", pass, &format!("order {order:.2}, quartic relative error {quartic_rel:.1e}"));
}

#[test]
fn criterion_11_score_separates_true_support_under_refinement() {
    // Analytic transport translates at two spatial resolutions, no
    // smoothing.
    let dict = DictionarySpec::new(1).unwrap();
    let ux = dict.feature_index("u_x").unwrap();
    let uxx = dict.feature_index("u_xx").unwrap();
    let build = |m: usize| {
        // Diffusive refinement dt = dx^2 so the first-order time-difference
        // truncation error shrinks along with the spatial one.
        let dx = 1.0 / (m as f64 - 1.0);
        let dt = dx * dx;
        let g = SpaceTimeGrid::new(1, m, 50, 1.0, 50.0 * dt).unwrap();
        let f = Field::from_fn(g, |n, i| {
            let x = i as f64 * g.dx - n as f64 * g.dt;
            (2.0 * std::f64::consts::PI * x).sin()
        })
        .unwrap();
        let derivs = sdd(&f, &SmootherSpec::none(), &dict.needed_derivatives()).unwrap();
        build_system(&derivs, &dict).unwrap()
    };
    let coarse = build(129);
    let fine = build(257);
    let table = resolution_consistency(
        &coarse,
        &fine,
        &[vec![ux], vec![uxx]],
        1.0 / 200.0,
    )
    .unwrap();
    let true_ratio = table[0].score_coarse / table[0].score_fine;
    let wrong_ratio = table[1].score_coarse / table[1].score_fine;
    let pass = true_ratio >= 2.0 && wrong_ratio < 1.2;
    let detail =
        format!("true-support score ratio {true_ratio:.2}, wrong-support ratio {wrong_ratio:.2}");
    verdict(11, "score refinement separation", pass, &detail);
}
