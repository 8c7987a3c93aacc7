//! The optimized-Chernoff objective for the L2-L1 projection bound and its
//! fixed-point minimizer.
//!
//! For a unit-norm input, each coordinate of the projected vector is
//! standard normal and the moment generating function of its absolute
//! value is 2 e^{s^2/2} Phi(s). The per-dimension factor of the resulting
//! tail bound,
//!
//! ```text
//! A(s) = 2 exp(-s sqrt(2/pi)(1+eps) + s^2/2) Phi(s),
//! ```
//!
//! is strictly convex with a unique interior minimum at the fixed point
//! s* of s = sqrt(2/pi)(1+eps) - phi(s)/Phi(s).

use super::normal::{std_normal_cdf, std_normal_pdf};
use super::{RootSolveConfig, SQRT_2_OVER_PI};
use crate::{Error, Result};

/// The per-dimension tail factor A(s) (see module docs).
pub fn chernoff_factor(s: f64, epsilon: f64) -> f64 {
    let c = SQRT_2_OVER_PI * (1.0 + epsilon);
    2.0 * (-s * c + 0.5 * s * s).exp() * std_normal_cdf(s)
}

/// Closed-form second derivative of [`chernoff_factor`]:
/// 2 e^{-sc + s^2/2} [((s-c)^2 + 1) Phi(s) + (s - 2c) phi(s)], c = sqrt(2/pi)(1+eps).
///
/// Strictly positive for s > 0, which certifies the fixed point as the
/// unique minimizer.
pub fn chernoff_factor_second_deriv(s: f64, epsilon: f64) -> f64 {
    let c = SQRT_2_OVER_PI * (1.0 + epsilon);
    let sc = s - c;
    2.0 * (-s * c + 0.5 * s * s).exp()
        * ((sc * sc + 1.0) * std_normal_cdf(s) + (s - 2.0 * c) * std_normal_pdf(s))
}

/// Residual of the fixed-point equation: F(s) = s - c + phi(s)/Phi(s).
fn residual(s: f64, c: f64) -> f64 {
    s - c + std_normal_pdf(s) / std_normal_cdf(s)
}

/// Solve s = sqrt(2/pi)(1+epsilon) - phi(s)/Phi(s) for the unique s* > 0.
///
/// Safeguarded Newton on the residual with bisection fallback; F changes
/// sign on (0, c) because F(0+) = -eps sqrt(2/pi) < 0 and F(c) > 0. The
/// returned point is double-checked to minimize the Chernoff factor.
pub fn solve_fixed_point_s_star(epsilon: f64, cfg: &RootSolveConfig) -> Result<f64> {
    if epsilon.is_nan() || epsilon <= 0.0 || epsilon >= 1.0 {
        return Err(Error::Domain(format!(
            "epsilon must be in (0,1), got {epsilon}"
        )));
    }
    cfg.validate()?;
    let c = SQRT_2_OVER_PI * (1.0 + epsilon);
    let mut lo = cfg.bracket.0.max(f64::MIN_POSITIVE);
    let mut hi = cfg.bracket.1.min(c);
    if lo >= hi {
        return Err(Error::Domain(format!(
            "bracket ({lo}, {hi}) empty after clamping to (0, {c})"
        )));
    }
    if residual(lo, c) > 0.0 || residual(hi, c) < 0.0 {
        return Err(Error::Convergence(format!(
            "no sign change on bracket ({lo}, {hi}) for epsilon={epsilon}"
        )));
    }

    let mut s = 0.5 * (lo + hi);
    for _ in 0..cfg.max_iter {
        let f = residual(s, c);
        if f.abs() <= cfg.abs_tol {
            return certify_minimizer(s, epsilon);
        }
        if f < 0.0 {
            lo = s;
        } else {
            hi = s;
        }
        // F'(s) = 1 - r(s)(s + r(s)) with r = phi/Phi
        let r = std_normal_pdf(s) / std_normal_cdf(s);
        let fp = 1.0 - r * (s + r);
        let newton = s - f / fp;
        s = if fp > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
    }
    Err(Error::Convergence(format!(
        "fixed point solve exhausted {} iterations for epsilon={epsilon}",
        cfg.max_iter
    )))
}

/// The solution must sit at the bottom of A; anything else signals a
/// numerical defect in the residual or the solve.
fn certify_minimizer(s: f64, epsilon: f64) -> Result<f64> {
    const DELTA: f64 = 1e-4;
    let at = chernoff_factor(s, epsilon);
    if chernoff_factor(s - DELTA, epsilon) < at || chernoff_factor(s + DELTA, epsilon) < at {
        return Err(Error::Convergence(format!(
            "fixed point s={s} is not a local minimizer for epsilon={epsilon}"
        )));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_at_solution_is_tiny() {
        let cfg = RootSolveConfig::default();
        for eps in [0.05, 0.1, 0.3, 0.5, 0.9] {
            let s = solve_fixed_point_s_star(eps, &cfg).unwrap();
            let c = SQRT_2_OVER_PI * (1.0 + eps);
            assert!(
                residual(s, c).abs() <= 1e-12,
                "eps={eps}: residual {:e}",
                residual(s, c)
            );
            assert!(s > 0.0 && s < c);
        }
    }

    #[test]
    fn factor_is_below_one_at_solution() {
        let cfg = RootSolveConfig::default();
        for eps in [0.05, 0.1, 0.3, 0.5, 0.9] {
            let s = solve_fixed_point_s_star(eps, &cfg).unwrap();
            let a = chernoff_factor(s, eps);
            assert!(a > 0.0 && a < 1.0, "eps={eps}: A={a}");
        }
    }

    #[test]
    fn second_derivative_positive_at_solution() {
        let cfg = RootSolveConfig::default();
        for eps in [0.05, 0.1, 0.3, 0.5, 0.9] {
            let s = solve_fixed_point_s_star(eps, &cfg).unwrap();
            assert!(chernoff_factor_second_deriv(s, eps) > 0.0, "eps={eps}");
        }
    }

    #[test]
    fn rejects_out_of_domain_epsilon() {
        let cfg = RootSolveConfig::default();
        assert!(solve_fixed_point_s_star(0.0, &cfg).is_err());
        assert!(solve_fixed_point_s_star(1.0, &cfg).is_err());
        assert!(solve_fixed_point_s_star(-0.2, &cfg).is_err());
    }

    #[test]
    fn grid_scan_agrees_with_solver() {
        // Independent oracle: coarse-to-fine scan of A over (0, 2).
        let cfg = RootSolveConfig::default();
        for eps in [0.1, 0.5] {
            let s = solve_fixed_point_s_star(eps, &cfg).unwrap();
            let mut best_s = f64::NAN;
            let mut best_a = f64::INFINITY;
            let mut x = 1e-4;
            while x < 2.0 {
                let a = chernoff_factor(x, eps);
                if a < best_a {
                    best_a = a;
                    best_s = x;
                }
                x += 1e-4;
            }
            assert!(
                (s - best_s).abs() <= 1e-4 + 1e-12,
                "eps={eps}: solver {s} vs grid {best_s}"
            );
            assert!(chernoff_factor(s, eps) <= best_a + 1e-15);
        }
    }
}
