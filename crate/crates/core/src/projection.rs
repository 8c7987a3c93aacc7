//! Random projection matrices and the scaled linear maps.
//!
//! Two entry distributions: i.i.d. standard Gaussian, and the sparse
//! three-point family sqrt(q) * {+1, 0, -1} with probabilities
//! {1/(2q), 1 - 1/q, 1/(2q)} (q = 1 is the plain sign matrix, q = 3 the
//! classic 1/6-2/3-1/6 design; both have unit-variance entries).
//!
//! Sampling is deterministic: a single 64-bit seed expands to one
//! ChaCha8 stream per matrix column through [`derive_stream`], so columns
//! can be generated independently (or in parallel) without changing the
//! result. The RNG algorithm is fixed (ChaCha8 keyed by a SplitMix64-style
//! mix; Gaussian variates via the rand_distr ziggurat sampler) and is part
//! of the crate's reproducibility contract: changing it is a breaking
//! change.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Dense row-major matrix of f64.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Build from row-major data; length must be rows * cols.
    pub fn from_data(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "data length {} does not match {rows}x{cols}",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.cols + j] = value;
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// Multiply every entry by a scalar.
    pub fn scaled(mut self, factor: f64) -> Self {
        for v in &mut self.data {
            *v *= factor;
        }
        self
    }

    /// Row-major product self (r x m) * other (m x c).
    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let lhs_row = self.row(i);
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (l, &x) in lhs_row.iter().enumerate() {
                if x == 0.0 {
                    continue;
                }
                let rhs_row = other.row(l);
                for (o, &g) in out_row.iter_mut().zip(rhs_row) {
                    *o += x * g;
                }
            }
        }
        Ok(out)
    }
}

/// Entry distribution of the projection matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MatrixDistribution {
    Gaussian,
    /// sqrt(q) * {+1, 0, -1} with probabilities {1/(2q), 1-1/q, 1/(2q)}.
    Achlioptas { q: f64 },
}

/// Which norms the distortion criterion pairs, which fixes the map's
/// scaling: 1/sqrt(k) preserves squared Euclidean distances, 1/k maps
/// Euclidean distances to sqrt(2/pi)-scaled Manhattan distances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormPairing {
    L2L2,
    L2L1,
}

impl NormPairing {
    pub fn scaling(self, k: usize) -> f64 {
        match self {
            NormPairing::L2L2 => 1.0 / (k as f64).sqrt(),
            NormPairing::L2L1 => 1.0 / k as f64,
        }
    }
}

/// Full recipe for one projection: distribution, norm pairing, shape, seed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectionSpec {
    pub distribution: MatrixDistribution,
    pub norm_pairing: NormPairing,
    /// Target dimension.
    pub k: usize,
    /// Ambient dimension.
    pub p: usize,
    pub seed: u64,
}

impl ProjectionSpec {
    pub fn new(
        distribution: MatrixDistribution,
        norm_pairing: NormPairing,
        k: usize,
        p: usize,
        seed: u64,
    ) -> Result<Self> {
        if let MatrixDistribution::Achlioptas { q } = distribution {
            if !q.is_finite() || q < 1.0 {
                return Err(Error::Domain(format!(
                    "Achlioptas q must be >= 1 so the three probabilities are valid, got {q}"
                )));
            }
        }
        if k < 1 || p < 1 {
            return Err(Error::Domain(format!(
                "dimensions must be positive, got k={k}, p={p}"
            )));
        }
        Ok(ProjectionSpec {
            distribution,
            norm_pairing,
            k,
            p,
            seed,
        })
    }
}

/// Derive an independent stream seed from (seed, index): the SplitMix64
/// finalizer applied to seed advanced by index times the 64-bit golden
/// ratio. This is the documented splitting function used for matrix
/// columns (index = column) and Monte Carlo replicates (index = replicate).
pub fn derive_stream(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn column_rng(seed: u64, column: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_stream(seed, column))
}

#[inline]
fn sample_achlioptas_entry(rng: &mut ChaCha8Rng, q: f64, sqrt_q: f64) -> f64 {
    let u: f64 = rng.random();
    let half_cell = 1.0 / (2.0 * q);
    if u < half_cell {
        sqrt_q
    } else if u < 2.0 * half_cell {
        -sqrt_q
    } else {
        0.0
    }
}

/// Sample the p x k projection matrix for `spec`. Identical specs
/// (including seed) produce bitwise-identical matrices.
pub fn sample_matrix(spec: &ProjectionSpec) -> Matrix {
    let mut m = Matrix::zeros(spec.p, spec.k);
    match spec.distribution {
        MatrixDistribution::Gaussian => {
            for j in 0..spec.k {
                let mut rng = column_rng(spec.seed, j as u64);
                for i in 0..spec.p {
                    m.data[i * spec.k + j] = rng.sample(StandardNormal);
                }
            }
        }
        MatrixDistribution::Achlioptas { q } => {
            let sqrt_q = q.sqrt();
            for j in 0..spec.k {
                let mut rng = column_rng(spec.seed, j as u64);
                for i in 0..spec.p {
                    m.data[i * spec.k + j] = sample_achlioptas_entry(&mut rng, q, sqrt_q);
                }
            }
        }
    }
    m
}

/// Sparse (row index, value) columns for strongly sparse designs
/// (q >= 10 leaves ~90% zeros). Draws the same per-entry variates as
/// [`sample_matrix`], so the nonzero pattern and values match the dense
/// path exactly.
#[derive(Clone, Debug)]
pub struct SparseColumns {
    pub rows: usize,
    pub columns: Vec<Vec<(u32, f64)>>,
}

impl SparseColumns {
    pub fn to_dense(&self) -> Matrix {
        let cols = self.columns.len();
        let mut m = Matrix::zeros(self.rows, cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.data[i as usize * cols + j] = v;
            }
        }
        m
    }
}

/// Sample only the nonzero entries of an Achlioptas matrix.
///
/// Intended for q >= 10 where density 1/q makes the dense walk wasteful;
/// any q >= 1 is accepted.
pub fn sample_matrix_sparse(spec: &ProjectionSpec) -> Result<SparseColumns> {
    let q = match spec.distribution {
        MatrixDistribution::Achlioptas { q } => q,
        MatrixDistribution::Gaussian => {
            return Err(Error::Domain(
                "sparse sampling applies to the Achlioptas distribution only".into(),
            ))
        }
    };
    let sqrt_q = q.sqrt();
    let expected = (spec.p as f64 / q).ceil() as usize + 4;
    let mut columns = Vec::with_capacity(spec.k);
    for j in 0..spec.k {
        let mut rng = column_rng(spec.seed, j as u64);
        let mut col = Vec::with_capacity(expected);
        for i in 0..spec.p {
            let v = sample_achlioptas_entry(&mut rng, q, sqrt_q);
            if v != 0.0 {
                col.push((i as u32, v));
            }
        }
        columns.push(col);
    }
    Ok(SparseColumns {
        rows: spec.p,
        columns,
    })
}

/// Project the n x p point matrix: (1/sqrt(k)) X Gamma for L2-L2,
/// (1/k) X Gamma for L2-L1.
pub fn project(points: &Matrix, spec: &ProjectionSpec) -> Result<Matrix> {
    if points.cols() != spec.p {
        return Err(Error::Shape(format!(
            "points have {} columns but the spec's ambient dimension is {}",
            points.cols(),
            spec.p
        )));
    }
    let gamma = sample_matrix(spec);
    Ok(points.matmul(&gamma)?.scaled(spec.norm_pairing.scaling(spec.k)))
}

/// Distance norm for [`pairwise_distances`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Norm {
    L1,
    L2,
}

/// All pairwise row distances in canonical order (0,1), (0,2), ...,
/// (0,n-1), (1,2), ...; length n(n-1)/2.
pub fn pairwise_distances(points: &Matrix, norm: Norm) -> Vec<f64> {
    let n = points.rows();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (points.row(i), points.row(j));
            let d = match norm {
                Norm::L2 => a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| (x - y) * (x - y))
                    .sum::<f64>()
                    .sqrt(),
                Norm::L1 => a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<f64>(),
            };
            out.push(d);
        }
    }
    out
}
