use proptest::prelude::*;
use ptnu_core::nu::{derive_constants, quantization_residual, tau_prime, Branch};
use ptnu_core::oracle::{converged_eigenvalues, discretize, ode_residual};
use ptnu_core::trig_pt::{alpha_zero_limit, count_sign_changes};
use ptnu_core::PtPotential;

const ALPHAS: [f64; 6] = [1.2, 0.8, 0.4, 0.2, 0.02, 0.002];

fn table2(alpha: f64) -> PtPotential {
    PtPotential::new(10.0, 5.0, 3.0, alpha).unwrap()
}

#[test]
fn nu_root_agrees_on_table_cells() {
    for alpha in ALPHAS {
        let p = table2(alpha);
        for n in 0..=6 {
            let closed = p.energy_closed_form(n);
            let nu = p.energy_via_nu(n).unwrap();
            assert!((nu - closed).abs() <= 1e-9 * closed, "alpha={alpha} n={n}: {nu} vs {closed}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn nu_root_agrees_on_random_parameters(
        m in 1.0..20.0f64,
        v1 in 1e-3..10.0f64,
        v2 in 1e-3..10.0f64,
        alpha in 0.01..2.0f64,
        n in 0usize..=6,
    ) {
        let p = PtPotential::new(m, v1, v2, alpha).unwrap();
        let closed = p.energy_closed_form(n);
        let nu = p.energy_via_nu(n).unwrap();
        prop_assert!((nu - closed).abs() <= 1e-9 * closed);
        prop_assert!(closed > p.well_floor());
    }

    #[test]
    fn eps_bookkeeping(m in 1.0..20.0f64, v1 in 0.1..10.0f64, v2 in 0.1..10.0f64, alpha in 0.1..2.0f64, n in 0usize..4) {
        let p = PtPotential::new(m, v1, v2, alpha).unwrap();
        let state = p.normalize(n).unwrap();
        prop_assert_eq!(state.eps, 2.0 * m * state.energy);
    }
}

#[test]
fn residual_is_affine_in_eps() {
    let p = table2(0.8);
    let family = p.to_nu_family();
    let r = |eps: f64| quantization_residual(&family.coefficients(eps).unwrap(), 2, Branch::Principal).unwrap();
    let (a, b, c) = (r(100.0), r(350.0), r(600.0));
    assert!((b - 0.5 * (a + c)).abs() < 1e-10 * a.abs().max(c.abs()));
}

#[test]
fn tau_prime_negative_for_table_parameters() {
    for alpha in ALPHAS {
        let p = table2(alpha);
        for n in 0..=6 {
            let d = p.nu_derived(2.0 * p.m() * p.energy_closed_form(n)).unwrap();
            assert!(tau_prime(&d) < 0.0);
        }
    }
}

#[test]
fn secondary_branch_constants_exist_for_pt() {
    let p = table2(1.2);
    let c = p.to_nu_family().coefficients(360.0).unwrap();
    let d = derive_constants(&c, Branch::Secondary).unwrap();
    assert!((d.a12 - (0.25 - d.a8.sqrt())).abs() < 1e-14);
}

#[test]
fn limit_approach() {
    let limit = alpha_zero_limit(5.0, 3.0);
    let deviations: Vec<f64> = [0.2, 0.02, 0.002]
        .iter()
        .map(|&a| (table2(a).energy_closed_form(0) - limit).abs())
        .collect();
    assert!(deviations.windows(2).all(|w| w[1] < w[0]));
    assert!(deviations[2] <= 5e-3);
}

#[test]
fn wavefunction_nodes_and_orthogonality() {
    let p = table2(1.2);
    let states: Vec<_> = (0..=6).map(|n| p.normalize(n).unwrap()).collect();
    for s in &states {
        assert_eq!(s.wavefunction.node_count(10_000), s.n);
    }
    let width = p.well_width();
    for m in 0..=5 {
        for n in 0..m {
            let (overlap, _) = ptnu_core::special::integrate_graded(
                |r| states[m].wavefunction.value_unchecked(r) * states[n].wavefunction.value_unchecked(r),
                0.0,
                width,
                64,
                ptnu_core::special::Grading::Both,
            )
            .unwrap();
            assert!(overlap.abs() < 1e-6, "<{m}|{n}> = {overlap}");
        }
    }
}

#[test]
fn wavefunction_solves_radial_equation() {
    let p = table2(1.2);
    let width = p.well_width();
    let samples: Vec<f64> = (1..=50).map(|i| width * (0.01 + 0.98 * i as f64 / 51.0)).collect();
    let w = p.radial_wavefunction(2).unwrap();
    let residual = ode_residual(|r| w.value_unchecked(r), &p, p.energy_closed_form(2), &samples).unwrap();
    assert!(residual <= 1e-6, "{residual}");
}

#[test]
fn oracle_certifies_closed_form() {
    for alpha in [1.2, 0.8, 0.4] {
        let p = table2(alpha);
        let levels = converged_eigenvalues(&p, 2000, 7).unwrap();
        for (n, level) in levels.iter().enumerate() {
            let e = level.extrapolated / (2.0 * p.m());
            let closed = p.energy_closed_form(n);
            assert!((e - closed).abs() <= 1e-4 * closed, "alpha={alpha} n={n}: {e} vs {closed}");
            assert!((1.7..=2.3).contains(&level.order_estimate), "order {}", level.order_estimate);
        }
    }
}

#[test]
fn oracle_error_is_second_order() {
    let p = table2(1.2);
    let exact = 2.0 * p.m() * p.energy_closed_form(0);
    let grids = [1000, 2000, 4000];
    let errors: Vec<(f64, f64)> = grids
        .iter()
        .map(|&n| {
            let op = discretize(&p, n).unwrap();
            (op.h, (op.lowest_eigenvalues(1).unwrap()[0] - exact).abs())
        })
        .collect();
    for w in errors.windows(2) {
        let order = (w[0].1 / w[1].1).ln() / (w[0].0 / w[1].0).ln();
        assert!((1.7..=2.3).contains(&order), "{order}");
    }
}

#[test]
fn discrete_modes_oscillate() {
    let op = discretize(&table2(0.8), 1000).unwrap();
    for k in 0..7 {
        assert_eq!(count_sign_changes(op.eigenvector(k).unwrap()), k);
    }
}
