//! Acceptance suite. One test per criterion; each prints a `[PASS]` line
//! (visible with `cargo test --test acceptance -- --nocapture`) after
//! checking every case at the stated tolerance.

use std::time::Instant;

use jlrp::bounds::{
    dg_bound, exact_bound, exact_tail_sum, g_function, matousek_bound, poisson_tail_bound_left,
    poisson_tail_bound_right, theorem1_bound, theorem3_bound, BoundQuery, Method,
};
use jlrp::numerics::{
    chernoff_factor, chernoff_factor_second_deriv, log_gamma, log_poisson_cdf,
    log_reg_gamma_upper, solve_fixed_point_s_star, std_normal_cdf, std_normal_pdf,
    std_normal_sf, RootSolveConfig, SQRT_2_OVER_PI,
};
use jlrp::projection::NormPairing;
use jlrp::verify::{estimate_tail_probability, run_pair_trials, TailSide, VerifySpec};

/// Published Table 1: (n, epsilon, beta) -> (exact, theorem1, dg).
const TABLE1: [(u64, f64, f64, u64, u64, u64); 16] = [
    (50, 0.1, 1.0, 3776, 3976, 5030),
    (50, 0.3, 1.0, 456, 494, 653),
    (50, 0.1, 2.0, 5336, 5572, 6707),
    (50, 0.3, 2.0, 654, 692, 870),
    (100, 0.1, 1.0, 4601, 4822, 5921),
    (100, 0.3, 1.0, 561, 598, 768),
    (100, 0.1, 2.0, 6461, 6716, 7895),
    (100, 0.3, 2.0, 797, 834, 1024),
    (500, 0.1, 1.0, 6552, 6808, 7991),
    (500, 0.3, 1.0, 808, 846, 1036),
    (500, 0.1, 2.0, 9110, 9390, 10654),
    (500, 0.3, 2.0, 1130, 1168, 1382),
    (1000, 0.1, 1.0, 7403, 7670, 8882),
    (1000, 0.3, 1.0, 916, 954, 1152),
    (1000, 0.1, 2.0, 10262, 10548, 11842),
    (1000, 0.3, 2.0, 1274, 1312, 1536),
];

/// Published Table 2: (n, epsilon, beta) -> (matousek, theorem3). The
/// second "eps = .1, beta = 2" row of each printed block is recorded
/// under its value-consistent reading eps = 0.3, beta = 2.
const TABLE2: [(u64, f64, f64, u64, u64); 16] = [
    (50, 0.1, 1.0, 2348, 1398),
    (50, 0.3, 1.0, 261, 168),
    (50, 0.1, 2.0, 3130, 1863),
    (50, 0.3, 2.0, 348, 223),
    (100, 0.1, 1.0, 2764, 1645),
    (100, 0.3, 1.0, 308, 197),
    (100, 0.1, 2.0, 3685, 2193),
    (100, 0.3, 2.0, 410, 263),
    (500, 0.1, 1.0, 3729, 2220),
    (500, 0.3, 1.0, 415, 266),
    (500, 0.1, 2.0, 4972, 2960),
    (500, 0.3, 2.0, 553, 354),
    (1000, 0.1, 1.0, 4145, 2468),
    (1000, 0.3, 1.0, 461, 296),
    (1000, 0.1, 2.0, 5527, 3290),
    (1000, 0.3, 2.0, 615, 394),
];

fn query(n: u64, epsilon: f64, beta: f64) -> BoundQuery {
    BoundQuery::new(n, epsilon, beta).unwrap()
}

#[test]
fn criterion_1_table1_reproduction() {
    let start = Instant::now();
    let mut checked = 0;
    for (n, epsilon, beta, want_exact, want_t1, want_dg) in TABLE1 {
        let q = query(n, epsilon, beta);
        assert_eq!(
            exact_bound(&q).unwrap().k,
            want_exact,
            "exact at n={n}, eps={epsilon}, beta={beta}"
        );
        assert_eq!(
            theorem1_bound(&q).unwrap().k,
            want_t1,
            "theorem1 at n={n}, eps={epsilon}, beta={beta}"
        );
        assert_eq!(
            dg_bound(&q).k,
            want_dg,
            "dg at n={n}, eps={epsilon}, beta={beta}"
        );
        checked += 3;
    }
    assert_eq!(checked, 48);
    println!(
        "[PASS] criterion 1: Table 1 reproduced exactly ({checked} integers) in {:.2?}",
        start.elapsed()
    );
}

#[test]
fn criterion_2_table2_reproduction() {
    let start = Instant::now();
    let mut checked = 0;
    for (n, epsilon, beta, want_matousek, want_t3) in TABLE2 {
        let q = query(n, epsilon, beta);
        assert_eq!(
            matousek_bound(&q).k,
            want_matousek,
            "matousek at n={n}, eps={epsilon}, beta={beta}"
        );
        assert_eq!(
            theorem3_bound(&q).unwrap().k,
            want_t3,
            "theorem3 at n={n}, eps={epsilon}, beta={beta}"
        );
        checked += 2;
    }
    assert_eq!(checked, 32);
    println!(
        "[PASS] criterion 2: Table 2 reproduced exactly ({checked} integers, typo row read \
         as eps=0.3, beta=2) in {:.2?}",
        start.elapsed()
    );
}

#[test]
fn criterion_3_reduction_claims() {
    let start = Instant::now();
    let mut violations = Vec::new();
    for (n, epsilon, beta, _, _, _) in TABLE1 {
        let q = query(n, epsilon, beta);
        let t1 = theorem1_bound(&q).unwrap().k as f64;
        let dg = dg_bound(&q).k as f64;
        let reduction = 1.0 - t1 / dg;
        if reduction < 0.13 {
            violations.push(format!(
                "theorem1-vs-dg at (n={n}, eps={epsilon}, beta={beta}): {reduction:.4} < 0.13"
            ));
        }
    }
    for (n, epsilon, beta, _, _) in TABLE2 {
        let q = query(n, epsilon, beta);
        let t3 = theorem3_bound(&q).unwrap().k as f64;
        let matousek = matousek_bound(&q).k as f64;
        let reduction = 1.0 - t3 / matousek;
        if reduction < 0.35 {
            violations.push(format!(
                "theorem3-vs-matousek at (n={n}, eps={epsilon}, beta={beta}): {reduction:.4} < 0.35"
            ));
        }
    }
    if violations.is_empty() {
        println!(
            "[PASS] criterion 3: reductions >= 13% (Table 1 grid) and >= 35% (Table 2 grid) \
             in every cell, in {:.2?}",
            start.elapsed()
        );
    } else {
        // The Table-1 floor is contradicted by the very integers criterion 1
        // requires: the published values at (500, 0.1, 2) and (1000, 0.1, 2)
        // give 11.9% and 10.9% for the theorem1 column. The 13% floor does
        // hold for the exact-solution column in every cell (worst 13.3%).
        println!(
            "[FAIL] criterion 3: {} cell(s) violate the stated reduction floors: {}",
            violations.len(),
            violations.join("; ")
        );
        panic!("criterion 3 reduction floors violated: {violations:?}");
    }
}

#[test]
fn criterion_4_identity_and_inequality_suites() {
    let start = Instant::now();

    // Gamma-Poisson identity, d in [1, 2000], five lambda choices each.
    let mut identity_checks = 0u64;
    for d in 1u64..=2000 {
        let df = d as f64;
        for lambda in [0.5, 1.0, df / 2.0, df, 2.0 * df] {
            let gamma_side = log_reg_gamma_upper(df, lambda).unwrap().prob();
            let poisson_side = log_poisson_cdf(d - 1, lambda).unwrap().prob();
            assert!(
                (gamma_side - poisson_side).abs() <= 1e-9,
                "identity violated at d={d}, lambda={lambda}"
            );
            identity_checks += 1;
        }
    }

    // g decreasing over even k in [2, 20000] for five epsilons.
    let mut monotonicity_checks = 0u64;
    for eps in [0.05, 0.1, 0.3, 0.5, 0.9] {
        let mut prev = f64::INFINITY;
        let mut k = 2u64;
        while k <= 20_000 {
            let g = g_function(k, eps).unwrap().value();
            assert!(g <= prev, "g increased at k={k}, eps={eps}");
            prev = g;
            k += 2;
            monotonicity_checks += 1;
        }
    }

    // Tail majorants dominate brute-force sums on >= 100 (d, lambda) pairs.
    let mut domination_checks = 0u64;
    for d in (1u64..=200).step_by(7) {
        let df = d as f64;
        for factor in [1.2, 2.0, 4.0] {
            let lambda1 = df * factor + 0.5;
            let bound = poisson_tail_bound_right(d, lambda1).unwrap().value();
            let truth = brute_force_truncated_sum_log(d, lambda1);
            assert!(bound >= truth - 1e-12, "right bound fails at d={d}");
            domination_checks += 1;
        }
        if d >= 2 {
            for factor in [0.3, 0.7, 0.9] {
                let lambda2 = df * factor;
                let bound = poisson_tail_bound_left(d, lambda2).unwrap().value();
                let truth = brute_force_tail_sum_log(d, lambda2);
                assert!(bound >= truth - 1e-12, "left bound fails at d={d}");
                domination_checks += 1;
            }
        }
    }
    assert!(domination_checks >= 100);

    // Subgaussian MGF domination on the 2001-point grid for q = 1, 2, 3.
    let mut mgf_checks = 0u64;
    for q in [1.0f64, 2.0, 3.0] {
        for i in 0..=2000 {
            let x = -10.0 + i as f64 * 0.01;
            let lhs = 1.0 + ((x * q.sqrt()).cosh() - 1.0) / q;
            let rhs = (0.5 * x * x).exp();
            assert!(lhs <= rhs * (1.0 + 1e-12), "MGF bound fails at q={q}, x={x}");
            mgf_checks += 1;
        }
    }

    // Exponential-odds inequality on the 500-point grid.
    for i in 1..=500 {
        let z = i as f64 * 0.01;
        assert!(
            (2.0 * SQRT_2_OVER_PI * z).exp() < std_normal_cdf(z) / std_normal_sf(z),
            "odds inequality fails at z={z}"
        );
    }

    println!(
        "[PASS] criterion 4: {identity_checks} identity, {monotonicity_checks} monotonicity, \
         {domination_checks} domination, {mgf_checks} MGF, 500 odds checks, zero violations, \
         in {:.2?}",
        start.elapsed()
    );
}

fn brute_force_truncated_sum_log(d: u64, lambda: f64) -> f64 {
    let ln_lambda = lambda.ln();
    let terms: Vec<f64> = (0..d)
        .map(|y| y as f64 * ln_lambda - log_gamma(y as f64 + 1.0).unwrap())
        .collect();
    log_sum_exp(&terms)
}

fn brute_force_tail_sum_log(d: u64, lambda: f64) -> f64 {
    let ln_lambda = lambda.ln();
    let mut terms = Vec::new();
    for y in d..d + 5000 {
        let t = y as f64 * ln_lambda - log_gamma(y as f64 + 1.0).unwrap();
        terms.push(t);
        if t < terms[0] - 45.0 {
            break;
        }
    }
    log_sum_exp(&terms)
}

fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    max + terms.iter().map(|t| (t - max).exp()).sum::<f64>().ln()
}

#[test]
fn criterion_5_fixed_point_solver() {
    let start = Instant::now();
    let cfg = RootSolveConfig::default();
    for eps in [0.05, 0.1, 0.3, 0.5, 0.9] {
        let s = solve_fixed_point_s_star(eps, &cfg).unwrap();
        let c = SQRT_2_OVER_PI * (1.0 + eps);
        let residual = (s - (c - std_normal_pdf(s) / std_normal_cdf(s))).abs();
        assert!(residual <= 1e-12, "eps={eps}: residual {residual:e}");

        let a = chernoff_factor(s, eps);
        assert!(a < 1.0, "eps={eps}: A(s*) = {a} not below 1");
        assert!(
            chernoff_factor_second_deriv(s, eps) > 0.0,
            "eps={eps}: A'' not positive"
        );

        // Independent dense-grid minimizer, step 1e-6 over (0, 2).
        let mut best_s = f64::NAN;
        let mut best_a = f64::INFINITY;
        let mut i = 1u64;
        while i < 2_000_000 {
            let x = i as f64 * 1e-6;
            let ax = chernoff_factor(x, eps);
            if ax < best_a {
                best_a = ax;
                best_s = x;
            }
            i += 1;
        }
        assert!(
            (s - best_s).abs() <= 1e-4,
            "eps={eps}: solver {s} vs grid minimizer {best_s}"
        );
    }
    println!(
        "[PASS] criterion 5: fixed-point solver residual <= 1e-12, A(s*) < 1, A'' > 0, \
         grid agreement <= 1e-4 for 5 epsilons, in {:.2?}",
        start.elapsed()
    );
}

#[test]
fn criterion_6_monte_carlo_guarantees() {
    let start = Instant::now();
    let q = query(50, 0.3, 1.0);

    // Per-pair failure rate for each method's k at >= 1e5 pair trials:
    // 50 points give 1225 pairs, so 82 replicates give 100450 trials.
    let cap = 2.0 / 50f64.powi(3);
    for method in Method::ALL {
        let pairing = match method {
            Method::Matousek | Method::Theorem3 => NormPairing::L2L1,
            _ => NormPairing::L2L2,
        };
        let spec = VerifySpec::new(q, method, pairing, 82, 20_260_801);
        let report = run_pair_trials(&spec).unwrap();
        assert!(report.pair_trials >= 100_000);
        let failure_rate = 1.0 - report.per_pair_success_rate;
        let se = (cap * (1.0 - cap) / report.pair_trials as f64).sqrt();
        assert!(
            failure_rate <= cap + 3.0 * se,
            "{method}: failure rate {failure_rate:.2e} above cap {cap:.2e} + 3se"
        );
    }

    // Analytic chi-square tails against simulation at 1e6 draws.
    for k in [10u64, 50, 200] {
        for eps in [0.1, 0.3] {
            let analytic = exact_tail_sum(k, eps).unwrap().prob();
            let est =
                estimate_tail_probability(k, eps, TailSide::Both, 1_000_000, 1889).unwrap();
            let se = (analytic * (1.0 - analytic) / 1e6).sqrt();
            assert!(
                (est - analytic).abs() <= 4.0 * se,
                "k={k}, eps={eps}: est {est:.3e} vs analytic {analytic:.3e} (se {se:.1e})"
            );
        }
    }

    println!(
        "[PASS] criterion 6: per-pair failure rates within cap for all 5 methods at 1e5+ \
         trials; chi-square simulation matches analytic tails within 4 SE for k in \
         {{10,50,200}}, in {:.2?}",
        start.elapsed()
    );
}
