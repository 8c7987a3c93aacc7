//! Minimum target dimensions for distance-preserving random projections.
//!
//! Five methods, all parameterized by a [`BoundQuery`] of (n, epsilon,
//! beta) where the per-pair guarantee is 1 - 2/n^{2+beta} and the
//! all-pairs union bound is 1 - 1/n^beta:
//!
//! * [`dg_bound`] - the classic moment-generating-function bound
//!   (24 + 12 beta) ln n / (3 eps^2 - 2 eps^3).
//! * [`theorem1_bound`] - smallest even k such that
//!   ((1+eps)/eps) g(k,eps) <= n^{-(2+beta)}, with g the Poisson-tail
//!   majorant of [`g_function`]; g decreases in k, so the search is a
//!   bracketed binary search.
//! * [`exact_bound`] - smallest integer k whose two-sided chi-square tail
//!   sum [`exact_tail_sum`] is at most 2 n^{-(2+beta)}.
//! * [`matousek_bound`] - the subgaussian L2-L1 bound
//!   C (4 + 2 beta) ln n / eps^2 with C = 1.
//! * [`theorem3_bound`] - the optimized-Chernoff L2-L1 bound
//!   (2 + beta) ln n / (-ln A(s*)).
//!
//! Everything is compared in log space; k values in the tens of
//! thousands put raw factorials far beyond f64 range.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::numerics::{
    chernoff_factor, log_gamma, log_reg_gamma_lower, log_reg_gamma_upper,
    solve_fixed_point_s_star, LogProb, RootSolveConfig,
};
use crate::{Error, Result};

/// Grid used by the published comparison tables.
pub const PRESET_N: [u64; 4] = [50, 100, 500, 1000];
pub const PRESET_EPSILON: [f64; 2] = [0.1, 0.3];
pub const PRESET_BETA: [f64; 2] = [1.0, 2.0];

/// The five bound methods.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Dg,
    Theorem1,
    Exact,
    Matousek,
    Theorem3,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Dg,
        Method::Theorem1,
        Method::Exact,
        Method::Matousek,
        Method::Theorem3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Dg => "dg",
            Method::Theorem1 => "theorem1",
            Method::Exact => "exact",
            Method::Matousek => "matousek",
            Method::Theorem3 => "theorem3",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dg" => Ok(Method::Dg),
            "theorem1" => Ok(Method::Theorem1),
            "exact" => Ok(Method::Exact),
            "matousek" => Ok(Method::Matousek),
            "theorem3" => Ok(Method::Theorem3),
            other => Err(Error::Domain(format!(
                "unknown method '{other}' (expected dg, theorem1, exact, matousek, theorem3)"
            ))),
        }
    }
}

/// Parameters shared by every bound method.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundQuery {
    /// Number of points to embed.
    pub n: u64,
    /// Distortion factor.
    pub epsilon: f64,
    /// Union-bound tuning exponent.
    pub beta: f64,
}

impl BoundQuery {
    /// Validating constructor: n >= 2, epsilon in (0,1), beta >= 0.
    pub fn new(n: u64, epsilon: f64, beta: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("n must be at least 2, got {n}")));
        }
        if epsilon.is_nan() || epsilon <= 0.0 || epsilon >= 1.0 {
            return Err(Error::Domain(format!(
                "epsilon must be in (0,1), got {epsilon}"
            )));
        }
        if !beta.is_finite() || beta < 0.0 {
            return Err(Error::Domain(format!(
                "beta must be finite and >= 0, got {beta}"
            )));
        }
        Ok(BoundQuery { n, epsilon, beta })
    }

    fn log_n(&self) -> f64 {
        (self.n as f64).ln()
    }

    /// ln of the per-tail budget n^{-(2+beta)}.
    fn log_per_tail_threshold(&self) -> f64 {
        -(2.0 + self.beta) * self.log_n()
    }
}

/// A computed bound: the integer dimension plus the method's named
/// intermediate quantities (tails, unrounded values, solver outputs).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundResult {
    pub method: Method,
    pub k: u64,
    pub intermediates: BTreeMap<String, f64>,
}

impl BoundResult {
    fn new(method: Method, k: u64) -> Self {
        BoundResult {
            method,
            k,
            intermediates: BTreeMap::new(),
        }
    }

    fn record(&mut self, key: &str, value: f64) {
        self.intermediates.insert(key.to_string(), value);
    }
}

/// Dispatch by method tag.
pub fn bound_for_method(method: Method, q: &BoundQuery) -> Result<BoundResult> {
    match method {
        Method::Dg => Ok(dg_bound(q)),
        Method::Theorem1 => theorem1_bound(q),
        Method::Exact => exact_bound(q),
        Method::Matousek => Ok(matousek_bound(q)),
        Method::Theorem3 => theorem3_bound(q),
    }
}

/// k = ceil((24 + 12 beta) ln n / (3 eps^2 - 2 eps^3)).
pub fn dg_bound(q: &BoundQuery) -> BoundResult {
    let eps = q.epsilon;
    let denominator = eps * eps * (3.0 - 2.0 * eps);
    let unrounded = (24.0 + 12.0 * q.beta) * q.log_n() / denominator;
    let mut r = BoundResult::new(Method::Dg, unrounded.ceil() as u64);
    r.record("unrounded", unrounded);
    r.record("denominator", denominator);
    r
}

/// ln g(k, eps) = -lambda1 + (d-1) ln(lambda1) - ln((d-1)!) with
/// lambda1 = k(1+eps)/2 and d = k/2; the majorant of the chi-square
/// right tail whose monotone decrease in even k drives the Theorem-1
/// search.
pub fn g_function(k: u64, epsilon: f64) -> Result<LogProb> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "g_function requires even k >= 2, got {k}"
        )));
    }
    if epsilon.is_nan() || epsilon <= 0.0 || epsilon >= 1.0 {
        return Err(Error::Domain(format!(
            "epsilon must be in (0,1), got {epsilon}"
        )));
    }
    let d = (k / 2) as f64;
    let lambda1 = 0.5 * k as f64 * (1.0 + epsilon);
    let value = -lambda1 + (d - 1.0) * lambda1.ln() - log_gamma(d)?;
    Ok(LogProb::new(value))
}

/// Upper limit for the even-k bracketing search; far beyond any sane query.
const MAX_SEARCH_K: u64 = 1 << 42;

/// Smallest even k with ((1+eps)/eps) g(k,eps) <= n^{-(2+beta)}.
pub fn theorem1_bound(q: &BoundQuery) -> Result<BoundResult> {
    let eps = q.epsilon;
    let log_prefactor = ((1.0 + eps) / eps).ln();
    let log_threshold = q.log_per_tail_threshold();
    let holds = |k: u64| -> Result<bool> {
        Ok(log_prefactor + g_function(k, eps)?.value() <= log_threshold)
    };

    // Exponential bracketing, then binary search on half-dimension m (k = 2m);
    // valid because g decreases in k.
    let mut hi = 2u64;
    while !holds(hi)? {
        hi *= 2;
        if hi > MAX_SEARCH_K {
            return Err(Error::Convergence(format!(
                "theorem1 search exceeded k = {MAX_SEARCH_K} for {q:?}"
            )));
        }
    }
    let k = if hi == 2 {
        2
    } else {
        let mut lo_m = hi / 4; // fails
        let mut hi_m = hi / 2; // holds
        while hi_m - lo_m > 1 {
            let mid = lo_m + (hi_m - lo_m) / 2;
            if holds(2 * mid)? {
                hi_m = mid;
            } else {
                lo_m = mid;
            }
        }
        2 * hi_m
    };

    let mut r = BoundResult::new(Method::Theorem1, k);
    let log_g_at_k = g_function(k, eps)?.value();
    r.record("g_at_k", log_g_at_k.exp());
    r.record("log_g_at_k", log_g_at_k);
    r.record("log_lhs_at_k", log_prefactor + log_g_at_k);
    r.record("log_threshold", log_threshold);
    if k > 2 {
        let log_g_prev = g_function(k - 2, eps)?.value();
        r.record("g_at_k_minus_2", log_g_prev.exp());
        r.record("log_g_at_k_minus_2", log_g_prev);
        debug_assert!(log_prefactor + log_g_prev > log_threshold);
    }
    debug_assert!(log_prefactor + log_g_at_k <= log_threshold);
    Ok(r)
}

/// ln of the two-sided chi-square tail sum
/// P[X >= k(1+eps)] + P[X <= k(1-eps)] for X ~ chi^2_k,
/// via the regularized incomplete gamma with a = k/2 and the tail
/// cutoffs halved (chi^2_k = Gamma(k/2, 2)).
pub fn exact_tail_sum(k: u64, epsilon: f64) -> Result<LogProb> {
    if k < 1 {
        return Err(Error::Domain("exact_tail_sum requires k >= 1".into()));
    }
    if epsilon.is_nan() || epsilon <= 0.0 || epsilon >= 1.0 {
        return Err(Error::Domain(format!(
            "epsilon must be in (0,1), got {epsilon}"
        )));
    }
    let a = k as f64 / 2.0;
    let right = log_reg_gamma_upper(a, 0.5 * k as f64 * (1.0 + epsilon))?;
    let left = log_reg_gamma_lower(a, 0.5 * k as f64 * (1.0 - epsilon))?;
    Ok(right.log_add(left))
}

/// Smallest integer k (even or odd) with
/// exact_tail_sum(k, eps) <= 2 n^{-(2+beta)}.
pub fn exact_bound(q: &BoundQuery) -> Result<BoundResult> {
    let eps = q.epsilon;
    let log_threshold = std::f64::consts::LN_2 + q.log_per_tail_threshold();
    let holds = |k: u64| -> Result<bool> { Ok(exact_tail_sum(k, eps)?.value() <= log_threshold) };

    // The Theorem-1 dimension bounds the exact tails from above, so it is a
    // feasible right end for the search.
    let mut hi = theorem1_bound(q)?.k;
    while !holds(hi)? {
        hi *= 2;
        if hi > MAX_SEARCH_K {
            return Err(Error::Convergence(format!(
                "exact search exceeded k = {MAX_SEARCH_K} for {q:?}"
            )));
        }
    }
    let mut lo = 0u64; // treated as failing
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // Monotone decrease of the tail sum in k is observed, not proven; confirm
    // minimality with a linear scan around the binary-search answer.
    let mut k = hi;
    for candidate in k.saturating_sub(4).max(1)..=k + 4 {
        if holds(candidate)? && (candidate == 1 || !holds(candidate - 1)?) {
            k = candidate;
            break;
        }
    }

    let mut r = BoundResult::new(Method::Exact, k);
    let a = k as f64 / 2.0;
    let right = log_reg_gamma_upper(a, 0.5 * k as f64 * (1.0 + eps))?;
    let left = log_reg_gamma_lower(a, 0.5 * k as f64 * (1.0 - eps))?;
    let sum = right.log_add(left);
    r.record("right_tail_at_k", right.prob());
    r.record("left_tail_at_k", left.prob());
    r.record("log_right_tail_at_k", right.value());
    r.record("log_left_tail_at_k", left.value());
    r.record("log_tail_sum_at_k", sum.value());
    r.record("log_threshold", log_threshold);
    if k > 1 {
        r.record(
            "log_tail_sum_at_k_minus_1",
            exact_tail_sum(k - 1, eps)?.value(),
        );
    }
    debug_assert!(sum.value() <= log_threshold);
    Ok(r)
}

/// k = ceil(C (4 + 2 beta) ln n / eps^2) with the conventional C = 1.
pub fn matousek_bound(q: &BoundQuery) -> BoundResult {
    matousek_bound_with_constant(q, 1.0)
}

/// [`matousek_bound`] with an explicit leading constant.
pub fn matousek_bound_with_constant(q: &BoundQuery, c: f64) -> BoundResult {
    let unrounded = c * (4.0 + 2.0 * q.beta) * q.log_n() / (q.epsilon * q.epsilon);
    let mut r = BoundResult::new(Method::Matousek, unrounded.ceil() as u64);
    r.record("unrounded", unrounded);
    r.record("constant_c", c);
    if q.epsilon >= 0.5 {
        // The subgaussian derivation is stated for eps < 1/2; computation
        // proceeds but the result is flagged.
        r.record("epsilon_above_half", 1.0);
    }
    r
}

/// k = ceil((2 + beta) ln n / (-ln A(s*))) where s* minimizes the
/// per-dimension Chernoff factor A.
pub fn theorem3_bound(q: &BoundQuery) -> Result<BoundResult> {
    let s_star = solve_fixed_point_s_star(q.epsilon, &RootSolveConfig::default())?;
    let a_star = chernoff_factor(s_star, q.epsilon);
    if !(a_star > 0.0 && a_star < 1.0) {
        return Err(Error::Convergence(format!(
            "Chernoff factor {a_star} outside (0,1) at s*={s_star}; solver defect"
        )));
    }
    let unrounded = (2.0 + q.beta) * q.log_n() / (-a_star.ln());
    let mut r = BoundResult::new(Method::Theorem3, unrounded.ceil() as u64);
    r.record("s_star", s_star);
    r.record("a_at_s_star", a_star);
    r.record("unrounded", unrounded);
    Ok(r)
}

/// ln of the right-tail majorant
/// (lambda1/(lambda1 - d)) lambda1^{d-1} / (d-1)!  for the truncated
/// Poisson-weight sum sum_{y<d} lambda1^y / y!; requires 1 <= d < lambda1.
pub fn poisson_tail_bound_right(d: u64, lambda1: f64) -> Result<LogProb> {
    if d < 1 {
        return Err(Error::Domain("d must be a positive integer".into()));
    }
    if lambda1.is_nan() || lambda1 <= d as f64 {
        return Err(Error::Domain(format!(
            "right tail bound requires lambda1 > d, got d={d}, lambda1={lambda1}"
        )));
    }
    let df = d as f64;
    let value =
        lambda1.ln() - (lambda1 - df).ln() + (df - 1.0) * lambda1.ln() - log_gamma(df)?;
    Ok(LogProb::new(value))
}

/// ln of the left-tail majorant
/// (lambda2/(d - lambda2)) lambda2^{d-1} / (d-1)!  for the Poisson-weight
/// tail sum sum_{y>=d} lambda2^y / y!; requires 0 < lambda2 < d.
pub fn poisson_tail_bound_left(d: u64, lambda2: f64) -> Result<LogProb> {
    if d < 1 {
        return Err(Error::Domain("d must be a positive integer".into()));
    }
    if lambda2.is_nan() || lambda2 <= 0.0 || lambda2 >= d as f64 {
        return Err(Error::Domain(format!(
            "left tail bound requires 0 < lambda2 < d, got d={d}, lambda2={lambda2}"
        )));
    }
    let df = d as f64;
    let value =
        lambda2.ln() - (df - lambda2).ln() + (df - 1.0) * lambda2.ln() - log_gamma(df)?;
    Ok(LogProb::new(value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u64, epsilon: f64, beta: f64) -> BoundQuery {
        BoundQuery::new(n, epsilon, beta).unwrap()
    }

    #[test]
    fn query_validation() {
        assert!(BoundQuery::new(1, 0.1, 1.0).is_err());
        assert!(BoundQuery::new(50, 0.0, 1.0).is_err());
        assert!(BoundQuery::new(50, 1.0, 1.0).is_err());
        assert!(BoundQuery::new(50, 1.5, 1.0).is_err());
        assert!(BoundQuery::new(50, 0.1, -0.5).is_err());
        assert!(BoundQuery::new(2, 0.5, 0.0).is_ok());
    }

    #[test]
    fn dg_published_values() {
        assert_eq!(dg_bound(&q(50, 0.1, 1.0)).k, 5030);
        assert_eq!(dg_bound(&q(100, 0.3, 1.0)).k, 768);
        assert_eq!(dg_bound(&q(1000, 0.1, 2.0)).k, 11842);
    }

    #[test]
    fn dg_records_unrounded() {
        let r = dg_bound(&q(50, 0.1, 1.0));
        let u = r.intermediates["unrounded"];
        assert!(u <= r.k as f64 && r.k as f64 - u < 1.0);
    }

    #[test]
    fn g_function_small_k_closed_form() {
        // d = 1 makes the power/factorial factor 1, so ln g = -(1+eps)
        let g = g_function(2, 0.1).unwrap().value();
        assert!((g - (-1.1)).abs() < 1e-15);
        assert!((g.exp() - 0.33287108369807955).abs() < 1e-15);
    }

    #[test]
    fn g_function_hand_evaluable_case() {
        // k=10, eps=0.2: lambda1 = 6, d = 5 -> ln g = -6 + 4 ln 6 - ln 24
        let want = -6.0 + 4.0 * 6.0_f64.ln() - 24.0_f64.ln();
        let got = g_function(10, 0.2).unwrap().value();
        assert!((got - want).abs() < 1e-13);
    }

    #[test]
    fn g_function_decreases() {
        let a = g_function(100, 0.25).unwrap().value();
        let b = g_function(102, 0.25).unwrap().value();
        assert!(b <= a);
    }

    #[test]
    fn g_function_domain() {
        assert!(g_function(0, 0.1).is_err());
        assert!(g_function(7, 0.1).is_err());
        assert!(g_function(10, 0.0).is_err());
    }

    #[test]
    fn theorem1_published_values() {
        assert_eq!(theorem1_bound(&q(50, 0.1, 1.0)).unwrap().k, 3976);
        assert_eq!(theorem1_bound(&q(100, 0.3, 2.0)).unwrap().k, 834);
        assert_eq!(theorem1_bound(&q(1000, 0.1, 1.0)).unwrap().k, 7670);
    }

    #[test]
    fn theorem1_result_is_even_and_minimal() {
        let r = theorem1_bound(&q(100, 0.3, 2.0)).unwrap();
        assert_eq!(r.k % 2, 0);
        let lhs = |k: u64| ((1.3f64) / 0.3).ln() + g_function(k, 0.3).unwrap().value();
        let thr = -(4.0) * (100f64).ln();
        assert!(lhs(r.k) <= thr);
        assert!(lhs(r.k - 2) > thr);
        assert!(r.intermediates.contains_key("g_at_k"));
        assert!(r.intermediates.contains_key("g_at_k_minus_2"));
    }

    #[test]
    fn exact_tail_sum_chi2_with_two_dof() {
        // chi^2_2 survival is exponential: tails are e^{-(1+eps)} and 1 - e^{-(1-eps)}
        let eps = 0.5;
        let want = ((-1.5f64).exp() + 1.0 - (-0.5f64).exp()).ln();
        let got = exact_tail_sum(2, eps).unwrap().value();
        assert!((got - want).abs() < 1e-12, "{got} vs {want}");
    }

    #[test]
    fn exact_tail_budget_at_published_dimension() {
        // At the published exact-solution dimension for (n=50, eps=0.1,
        // beta=1) the two-sided tail sum fits the 2/n^3 budget and the
        // dimension below it does not.
        let budget = (2.0 / 50f64.powi(3)).ln();
        assert!(exact_tail_sum(3776, 0.1).unwrap().value() <= budget);
        assert!(exact_tail_sum(3775, 0.1).unwrap().value() > budget);
        // The right tail is the larger of the two here.
        let right = log_reg_gamma_upper(1888.0, 1888.0 * 1.1).unwrap();
        let left = log_reg_gamma_lower(1888.0, 1888.0 * 0.9).unwrap();
        assert!(right.value() > left.value());
    }

    #[test]
    fn exact_published_values() {
        assert_eq!(exact_bound(&q(50, 0.1, 1.0)).unwrap().k, 3776);
        assert_eq!(exact_bound(&q(500, 0.3, 2.0)).unwrap().k, 1130);
        assert_eq!(exact_bound(&q(1000, 0.3, 1.0)).unwrap().k, 916);
    }

    #[test]
    fn exact_minimality_recorded() {
        let r = exact_bound(&q(50, 0.3, 1.0)).unwrap();
        let thr = r.intermediates["log_threshold"];
        assert!(r.intermediates["log_tail_sum_at_k"] <= thr);
        assert!(r.intermediates["log_tail_sum_at_k_minus_1"] > thr);
    }

    #[test]
    fn matousek_published_values() {
        assert_eq!(matousek_bound(&q(50, 0.1, 1.0)).k, 2348);
        assert_eq!(matousek_bound(&q(1000, 0.3, 2.0)).k, 615);
        assert_eq!(matousek_bound(&q(500, 0.1, 2.0)).k, 4972);
    }

    #[test]
    fn matousek_constant_scales() {
        let base = matousek_bound(&q(50, 0.1, 1.0));
        let doubled = matousek_bound_with_constant(&q(50, 0.1, 1.0), 2.0);
        assert!(
            (doubled.intermediates["unrounded"] - 2.0 * base.intermediates["unrounded"]).abs()
                < 1e-9
        );
        assert!(matousek_bound(&q(50, 0.7, 1.0))
            .intermediates
            .contains_key("epsilon_above_half"));
    }

    #[test]
    fn theorem3_published_values() {
        assert_eq!(theorem3_bound(&q(50, 0.1, 1.0)).unwrap().k, 1398);
        assert_eq!(theorem3_bound(&q(100, 0.3, 1.0)).unwrap().k, 197);
        assert_eq!(theorem3_bound(&q(1000, 0.1, 2.0)).unwrap().k, 3290);
    }

    #[test]
    fn theorem3_records_solver_outputs() {
        let r = theorem3_bound(&q(100, 0.3, 1.0)).unwrap();
        let s = r.intermediates["s_star"];
        let a = r.intermediates["a_at_s_star"];
        assert!(s > 0.0 && a > 0.0 && a < 1.0);
        assert!((chernoff_factor(s, 0.3) - a).abs() < 1e-15);
    }

    #[test]
    fn right_tail_bound_single_term_case() {
        // d=1, lambda1=2: true sum is 1, bound is lambda1/(lambda1-1) = 2
        let b = poisson_tail_bound_right(1, 2.0).unwrap().value().exp();
        assert!((b - 2.0).abs() < 1e-14);
        assert!(b >= 1.0);
    }

    #[test]
    fn right_tail_bound_dominates_direct_sum() {
        // d=5, lambda1=10: sum_{y<5} 10^y/y! by direct accumulation
        let mut sum = 0.0;
        let mut term = 1.0f64;
        for y in 0..5 {
            if y > 0 {
                term *= 10.0 / y as f64;
            }
            sum += term;
        }
        let b = poisson_tail_bound_right(5, 10.0).unwrap().value().exp();
        assert!(b >= sum, "{b} < {sum}");
    }

    #[test]
    fn left_tail_bound_d_one_case() {
        // d=1, lambda2=0.5: bound = 1, true tail = e^{0.5} - 1
        let b = poisson_tail_bound_left(1, 0.5).unwrap().value().exp();
        assert!((b - 1.0).abs() < 1e-14);
        assert!(b >= 0.5f64.exp() - 1.0);
    }

    #[test]
    fn left_tail_bound_dominates_truncated_series() {
        // d=10, lambda2=5: tail sum_{y>=10} 5^y/y!, 200 terms
        let mut term = 1.0f64;
        for y in 1..10 {
            term *= 5.0 / y as f64;
        }
        let mut sum = 0.0;
        let mut t = term * 5.0 / 10.0;
        for y in 11..=210 {
            sum += t;
            t *= 5.0 / y as f64;
        }
        sum += t;
        let b = poisson_tail_bound_left(10, 5.0).unwrap().value().exp();
        assert!(b >= sum, "{b} < {sum}");
    }

    #[test]
    fn poisson_bound_domains() {
        assert!(poisson_tail_bound_right(5, 5.0).is_err());
        assert!(poisson_tail_bound_right(5, 4.0).is_err());
        assert!(poisson_tail_bound_right(0, 4.0).is_err());
        assert!(poisson_tail_bound_left(5, 5.0).is_err());
        assert!(poisson_tail_bound_left(5, 0.0).is_err());
    }

    #[test]
    fn method_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("fancy".parse::<Method>().is_err());
    }

    #[test]
    fn ordering_on_a_sample_cell() {
        let query = q(500, 0.1, 2.0);
        let exact = exact_bound(&query).unwrap().k;
        let t1 = theorem1_bound(&query).unwrap().k;
        let dg = dg_bound(&query).k;
        assert!(exact <= t1 && t1 <= dg);
        let t3 = theorem3_bound(&query).unwrap().k;
        let mat = matousek_bound(&query).k;
        assert!(t3 <= mat);
    }
}
