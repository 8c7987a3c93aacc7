//! Monte Carlo verification of the distortion guarantees.
//!
//! The bounds promise that a single projected pair keeps its distance
//! within the target band with probability at least 1 - 2/n^{2+beta},
//! and all n(n-1)/2 pairs jointly with probability at least 1 - 1/n^beta.
//! [`run_pair_trials`] estimates both success rates empirically over
//! freshly drawn projection matrices; [`estimate_tail_probability`]
//! checks the chi-square tail quantities the exact bound integrates
//! against direct simulation.
//!
//! Replicates are independent; they fan out across threads and merge by
//! integer count summation, so results do not depend on thread count or
//! completion order. Per-replicate seeds come from the same stream
//! splitting function as matrix columns.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_for_method, BoundQuery, Method};
use crate::numerics::SQRT_2_OVER_PI;
use crate::projection::{
    derive_stream, pairwise_distances, project, Matrix, MatrixDistribution, Norm, NormPairing,
    ProjectionSpec,
};
use crate::{Error, Result};

/// Stream index reserved for drawing the point set; replicate indices are
/// far below this.
const POINT_SET_STREAM: u64 = u64::MAX;

/// Where the verified point set comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum PointSource {
    /// i.i.d. standard normal coordinates.
    GaussianCloud,
    /// i.i.d. uniform coordinates on [0,1].
    Hypercube,
    /// CSV file, one point per row, no header.
    FileInput(PathBuf),
}

/// Full recipe for one verification run.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifySpec {
    pub query: BoundQuery,
    pub method: Method,
    pub pairing: NormPairing,
    /// Ambient dimension of the generated point set.
    pub p: usize,
    /// Number of points; defaults to query.n, which is what the all-pairs
    /// guarantee speaks about.
    pub n_points: usize,
    pub replicates: u32,
    pub point_source: PointSource,
    pub seed: u64,
}

impl VerifySpec {
    /// Spec with the default desk-scale point cloud: Gaussian, p = 200,
    /// n_points = query.n.
    pub fn new(
        query: BoundQuery,
        method: Method,
        pairing: NormPairing,
        replicates: u32,
        seed: u64,
    ) -> Self {
        VerifySpec {
            query,
            method,
            pairing,
            p: 200,
            n_points: query.n as usize,
            replicates,
            point_source: PointSource::GaussianCloud,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.replicates < 1 {
            return Err(Error::Domain(format!(
                "replicates must be at least 1, got {}",
                self.replicates
            )));
        }
        if self.p < 1 {
            return Err(Error::Domain(format!(
                "ambient dimension must be at least 1, got {}",
                self.p
            )));
        }
        if self.n_points < 2 {
            return Err(Error::Domain(format!(
                "need at least 2 points, got {}",
                self.n_points
            )));
        }
        Ok(())
    }
}

/// Empirical success rates next to the guarantees they must meet.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistortionReport {
    pub schema_version: u32,
    pub method: Method,
    pub pairing: NormPairing,
    pub n: u64,
    pub epsilon: f64,
    pub beta: f64,
    pub k_used: u64,
    pub replicates: u32,
    /// Pairs per replicate times replicates.
    pub pair_trials: u64,
    pub per_pair_success_rate: f64,
    pub all_pairs_success_rate: f64,
    /// 1 - 2/n^{2+beta}.
    pub guaranteed_per_pair: f64,
    /// 1 - 1/n^beta.
    pub guaranteed_all_pairs: f64,
    pub std_error_per_pair: f64,
}

impl DistortionReport {
    /// One-sided check used for the CLI's exit status: the empirical rates
    /// must not fall more than three standard errors below the guarantees.
    pub fn satisfies_guarantees(&self) -> bool {
        let se_all = if self.replicates > 0 {
            (self.all_pairs_success_rate * (1.0 - self.all_pairs_success_rate)
                / self.replicates as f64)
                .sqrt()
        } else {
            0.0
        };
        self.per_pair_success_rate >= self.guaranteed_per_pair - 3.0 * self.std_error_per_pair
            && self.all_pairs_success_rate >= self.guaranteed_all_pairs - 3.0 * se_all
    }
}

fn generate_points(spec: &VerifySpec) -> Result<Matrix> {
    match &spec.point_source {
        PointSource::GaussianCloud => {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_stream(spec.seed, POINT_SET_STREAM));
            let data = (0..spec.n_points * spec.p)
                .map(|_| rng.sample(StandardNormal))
                .collect();
            Matrix::from_data(spec.n_points, spec.p, data)
        }
        PointSource::Hypercube => {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_stream(spec.seed, POINT_SET_STREAM));
            let data = (0..spec.n_points * spec.p).map(|_| rng.random()).collect();
            Matrix::from_data(spec.n_points, spec.p, data)
        }
        PointSource::FileInput(path) => crate::io::read_matrix_csv_path(path, false),
    }
}

/// The two-sided distortion criterion for one pair, inclusive on both ends
/// so that coincident points (0 on both sides) count as successes.
#[inline]
fn pair_succeeds(pairing: NormPairing, epsilon: f64, orig_l2: f64, projected: f64) -> bool {
    match pairing {
        NormPairing::L2L2 => {
            let d2 = orig_l2 * orig_l2;
            let p2 = projected * projected;
            (1.0 - epsilon) * d2 <= p2 && p2 <= (1.0 + epsilon) * d2
        }
        NormPairing::L2L1 => {
            let target = SQRT_2_OVER_PI * orig_l2;
            (1.0 - epsilon) * target <= projected && projected <= (1.0 + epsilon) * target
        }
    }
}

/// Estimate per-pair and all-pairs distortion success rates for the
/// dimension chosen by the spec's bound method.
///
/// The point set is drawn once and held fixed; each replicate draws a
/// fresh Gaussian projection matrix (the randomness the guarantees
/// quantify over), projects, and tests every pair against the
/// pairing-appropriate criterion.
pub fn run_pair_trials(spec: &VerifySpec) -> Result<DistortionReport> {
    spec.validate()?;
    let k = bound_for_method(spec.method, &spec.query)?.k;
    let points = generate_points(spec)?;
    if points.rows() < 2 {
        return Err(Error::Domain(format!(
            "point set has {} rows; need at least 2",
            points.rows()
        )));
    }
    let p = points.cols();
    let orig = pairwise_distances(&points, Norm::L2);
    let pairs_per_replicate = orig.len() as u64;
    let epsilon = spec.query.epsilon;
    let projected_norm = match spec.pairing {
        NormPairing::L2L2 => Norm::L2,
        NormPairing::L2L1 => Norm::L1,
    };

    let (pair_successes, full_successes) = (0..spec.replicates)
        .into_par_iter()
        .map(|replicate| {
            let pspec = ProjectionSpec {
                distribution: MatrixDistribution::Gaussian,
                norm_pairing: spec.pairing,
                k: k as usize,
                p,
                seed: derive_stream(spec.seed, u64::from(replicate)),
            };
            let projected = project(&points, &pspec).expect("dimensions fixed above");
            let proj_d = pairwise_distances(&projected, projected_norm);
            let mut ok = 0u64;
            for (&d0, &d1) in orig.iter().zip(&proj_d) {
                if pair_succeeds(spec.pairing, epsilon, d0, d1) {
                    ok += 1;
                }
            }
            (ok, u64::from(ok == pairs_per_replicate))
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));

    let pair_trials = pairs_per_replicate * u64::from(spec.replicates);
    let per_pair = pair_successes as f64 / pair_trials as f64;
    let all_pairs = full_successes as f64 / f64::from(spec.replicates);
    let n = spec.query.n as f64;
    let guaranteed_per_pair = 1.0 - 2.0 * n.powf(-(2.0 + spec.query.beta));
    let guaranteed_all_pairs = 1.0 - n.powf(-spec.query.beta);

    Ok(DistortionReport {
        schema_version: 1,
        method: spec.method,
        pairing: spec.pairing,
        n: spec.query.n,
        epsilon,
        beta: spec.query.beta,
        k_used: k,
        replicates: spec.replicates,
        pair_trials,
        per_pair_success_rate: per_pair,
        all_pairs_success_rate: all_pairs,
        guaranteed_per_pair,
        guaranteed_all_pairs,
        std_error_per_pair: (per_pair * (1.0 - per_pair) / pair_trials as f64).sqrt(),
    })
}

/// Which chi-square tail event to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailSide {
    Right,
    Left,
    Both,
}

const MIN_TAIL_DRAWS: u64 = 10_000;
const TAIL_BLOCK: u64 = 1 << 14;

/// Empirical frequency of the chi-square tail event by direct simulation:
/// each draw is a sum of k squared standard normals, counted against
/// {>= k(1+eps)}, {<= k(1-eps)}, or their union.
pub fn estimate_tail_probability(
    k: u64,
    epsilon: f64,
    side: TailSide,
    draws: u64,
    seed: u64,
) -> Result<f64> {
    if k < 1 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    if epsilon.is_nan() || epsilon <= 0.0 || epsilon >= 1.0 {
        return Err(Error::Domain(format!(
            "epsilon must be in (0,1), got {epsilon}"
        )));
    }
    if draws < MIN_TAIL_DRAWS {
        return Err(Error::Domain(format!(
            "need at least {MIN_TAIL_DRAWS} draws for a meaningful estimate, got {draws}"
        )));
    }
    let upper = k as f64 * (1.0 + epsilon);
    let lower = k as f64 * (1.0 - epsilon);
    let blocks = draws.div_ceil(TAIL_BLOCK);
    let hits: u64 = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_stream(seed, block));
            let in_block = TAIL_BLOCK.min(draws - block * TAIL_BLOCK);
            let mut hits = 0u64;
            for _ in 0..in_block {
                let mut sum = 0.0f64;
                for _ in 0..k {
                    let z: f64 = rng.sample(StandardNormal);
                    sum += z * z;
                }
                let hit = match side {
                    TailSide::Right => sum >= upper,
                    TailSide::Left => sum <= lower,
                    TailSide::Both => sum >= upper || sum <= lower,
                };
                hits += u64::from(hit);
            }
            hits
        })
        .sum();
    Ok(hits as f64 / draws as f64)
}
