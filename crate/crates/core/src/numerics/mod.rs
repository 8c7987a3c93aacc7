//! Numerically stable special functions and scalar solvers.
//!
//! All tail probabilities are carried as [`LogProb`] values so the bound
//! searches can compare quantities like n^{-(2+beta)} and (d-1)! factors
//! without ever leaving log space.

mod dd;
mod fixed_point;
mod gamma;
mod normal;

pub use fixed_point::{
    chernoff_factor, chernoff_factor_second_deriv, solve_fixed_point_s_star,
};
pub use gamma::{log_gamma, log_poisson_cdf, log_reg_gamma_lower, log_reg_gamma_upper};
pub use normal::{erf, erfc, std_normal_cdf, std_normal_pdf, std_normal_sf};

/// sqrt(2/pi), the mean of |Z| for Z ~ N(0,1).
pub const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;

/// The natural logarithm of a probability or other positive quantity.
///
/// Values representing probabilities are <= 0; bound expressions that can
/// exceed 1 (the Poisson tail majorants) are allowed positive logs.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct LogProb(f64);

impl LogProb {
    pub fn new(value: f64) -> Self {
        debug_assert!(!value.is_nan());
        LogProb(value)
    }

    /// The log value itself.
    pub fn value(self) -> f64 {
        self.0
    }

    /// Back to linear space (may underflow to 0 for very negative logs).
    pub fn prob(self) -> f64 {
        self.0.exp()
    }

    /// ln(e^a + e^b) without leaving log space.
    pub fn log_add(self, other: LogProb) -> LogProb {
        let (hi, lo) = if self.0 >= other.0 {
            (self.0, other.0)
        } else {
            (other.0, self.0)
        };
        if hi == f64::NEG_INFINITY {
            return LogProb(f64::NEG_INFINITY);
        }
        LogProb(hi + (lo - hi).exp().ln_1p())
    }
}

/// Controls for the safeguarded scalar solve.
#[derive(Clone, Copy, Debug)]
pub struct RootSolveConfig {
    /// Residual tolerance on |s - rhs(s)|.
    pub abs_tol: f64,
    pub max_iter: u32,
    /// Search bracket; the right end is clamped to the fixed-point map's
    /// own upper limit sqrt(2/pi)(1+epsilon) before use.
    pub bracket: (f64, f64),
}

impl Default for RootSolveConfig {
    fn default() -> Self {
        RootSolveConfig {
            abs_tol: 1e-12,
            max_iter: 200,
            bracket: (1e-8, 1.6),
        }
    }
}

impl RootSolveConfig {
    fn validate(&self) -> crate::Result<()> {
        if self.abs_tol.is_nan() || self.abs_tol <= 0.0 {
            return Err(crate::Error::Domain(format!(
                "abs_tol must be positive, got {}",
                self.abs_tol
            )));
        }
        if self.bracket.0.is_nan() || self.bracket.1.is_nan() || self.bracket.0 >= self.bracket.1
        {
            return Err(crate::Error::Domain(format!(
                "bracket low must be below high, got ({}, {})",
                self.bracket.0, self.bracket.1
            )));
        }
        Ok(())
    }
}
