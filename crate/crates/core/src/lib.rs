//! Target-dimension bounds for Johnson-Lindenstrauss random projections,
//! the projections themselves, and Monte Carlo verification of the
//! distortion guarantees.
//!
//! The crate is organized as four layers:
//!
//! * [`numerics`] - numerically stable special functions (log-gamma,
//!   normal CDF, regularized incomplete gamma, Poisson CDF) and the
//!   safeguarded fixed-point solver. Everything that can overflow is
//!   computed in log space.
//! * [`bounds`] - the five minimum-dimension bounds: the classic
//!   moment-generating-function bound, the Poisson-tail search bound,
//!   the exact chi-square tail solution, the subgaussian L2-L1 bound,
//!   and the optimized-Chernoff L2-L1 bound. All take an
//!   [`bounds::BoundQuery`] of (n, epsilon, beta).
//! * [`projection`] - seeded sampling of Gaussian and sparse sign
//!   (Achlioptas-type) projection matrices and the scaled linear maps.
//! * [`verify`] - Monte Carlo estimation of per-pair and all-pairs
//!   distortion success rates against the guarantees the bounds promise.

pub mod bounds;
mod error;
pub mod io;
pub mod numerics;
pub mod projection;
pub mod verify;

pub use error::{Error, Result};
