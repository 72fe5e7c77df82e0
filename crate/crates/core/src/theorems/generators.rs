//! Seeded instance generators. Every generator is a pure function of its
//! seed and parameters (ChaCha8 stream), so batches can be split across
//! threads by partitioning the seed space.

use std::f64::consts::{FRAC_PI_2, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::RightSimplexSpec;
use crate::error::{Error, Result};
use crate::fields::{AffineDensity, AffineField};
use crate::geometry::{factorial, RigidMotion, Simplex, Triangle};
use crate::vector::{orthonormalize, Vector};

/// Smallest interior angle accepted from [`random_triangle`], in radians.
pub const MIN_ANGLE: f64 = 0.05;
pub const MAX_REJECTIONS: usize = 10_000;

/// Smallest `(N! V / scale^N)^(1/N)` accepted from [`random_simplex`], as a
/// fraction of the value for a regular simplex.
const MIN_SIMPLEX_QUALITY: f64 = 0.35;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleKind {
    General,
    Right,
    Obtuse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LegMode {
    Orthonormal,
    Scaled,
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn uniform_vector(rng: &mut ChaCha8Rng, dim: usize, lo: f64, hi: f64) -> Vector {
    Vector::from_raw((0..dim).map(|_| rng.random_range(lo..=hi)).collect())
}

fn min_angle(t: &Triangle) -> f64 {
    let m = t.metrics();
    m.alpha.min(m.beta).min(m.gamma)
}

fn in_box(t: &Triangle) -> bool {
    t.simplex()
        .vertices()
        .iter()
        .all(|v| v.coords().iter().all(|c| c.abs() <= 1.0))
}

fn right_candidate(rng: &mut ChaCha8Rng) -> Option<Triangle> {
    let c = uniform_vector(rng, 2, -1.0, 1.0);
    let theta = rng.random_range(0.0..2.0 * PI);
    let u = Vector::from_raw(vec![theta.cos(), theta.sin()]);
    let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
    let perp = Vector::from_raw(vec![-sign * u[1], sign * u[0]]);
    let (len_a, len_b) = (rng.random_range(0.2..=1.5), rng.random_range(0.2..=1.5));
    let mut b = c.clone();
    b.axpy(len_a, &u);
    let mut a = c.clone();
    a.axpy(len_b, &perp);
    Triangle::new(a, b, c).ok()
}

/// Deterministic triangle with vertices in `[-1, 1]^2` and every angle at
/// least [`MIN_ANGLE`]. `Right` places the right angle at `C` on a random
/// orthonormal frame; `Obtuse` has one angle above `pi/2`.
pub fn random_triangle(seed: u64, kind: TriangleKind) -> Result<Triangle> {
    let mut rng = rng(seed);
    for _ in 0..MAX_REJECTIONS {
        let candidate = match kind {
            TriangleKind::Right => right_candidate(&mut rng),
            TriangleKind::General | TriangleKind::Obtuse => {
                let [a, b, c] = std::array::from_fn(|_| uniform_vector(&mut rng, 2, -1.0, 1.0));
                Triangle::new(a, b, c).ok()
            }
        };
        let Some(t) = candidate else { continue };
        if !in_box(&t) || min_angle(&t) < MIN_ANGLE {
            continue;
        }
        if kind == TriangleKind::Obtuse {
            let m = t.metrics();
            if m.alpha.max(m.beta).max(m.gamma) <= FRAC_PI_2 {
                continue;
            }
        }
        return Ok(t);
    }
    Err(Error::GeneratorExhausted(MAX_REJECTIONS))
}

/// Rows of a random proper rotation of R^dim.
fn random_rotation(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Vector> {
    loop {
        let columns: Vec<Vector> = (0..dim)
            .map(|_| Vector::from_raw((0..dim).map(|_| rng.sample(StandardNormal)).collect()))
            .collect();
        // Poorly conditioned draws are resampled.
        let Some(mut q) = orthonormalize(&columns, 1e-3) else {
            continue;
        };
        let det = nalgebra::DMatrix::from_fn(dim, dim, |r, c| q[r][c]).determinant();
        if det < 0.0 {
            q[0] = -&q[0];
        }
        return q;
    }
}

/// Random rotation followed by a translation in `[-1, 1]^dim`.
pub fn random_rigid_motion(seed: u64, dim: usize) -> RigidMotion {
    let mut rng = rng(seed);
    let rows = random_rotation(&mut rng, dim);
    let translation = uniform_vector(&mut rng, dim, -1.0, 1.0);
    RigidMotion::new(rows, translation).expect("rotation rows match the translation dimension")
}

/// Right simplex on a random orthonormal frame (optionally with leg
/// lengths drawn from `[0.5, 2]`), apex in `[-1, 1]^dim`.
pub fn random_right_simplex(seed: u64, dim: usize, legs: LegMode) -> Result<RightSimplexSpec> {
    if !(2..=16).contains(&dim) {
        return Err(Error::DimensionOutOfRange(dim, 2, 16));
    }
    let mut rng = rng(seed);
    let frame = random_rotation(&mut rng, dim);
    let lengths: Vec<f64> = match legs {
        LegMode::Orthonormal => vec![1.0; dim],
        LegMode::Scaled => (0..dim).map(|_| rng.random_range(0.5..=2.0)).collect(),
    };
    let apex = uniform_vector(&mut rng, dim, -1.0, 1.0);
    let legs = frame.iter().zip(lengths).map(|(q, l)| q * l).collect();
    RightSimplexSpec::new(apex, legs)
}

/// Simplex with vertices in `[-1, 1]^dim`, rejecting slivers.
pub fn random_simplex(seed: u64, dim: usize) -> Result<Simplex> {
    if !(2..=16).contains(&dim) {
        return Err(Error::DimensionOutOfRange(dim, 2, 16));
    }
    let mut rng = rng(seed);
    random_simplex_from(&mut rng, dim)
}

fn random_simplex_from(rng: &mut ChaCha8Rng, dim: usize) -> Result<Simplex> {
    let n = dim as f64;
    let regular = ((n + 1.0).sqrt() / 2f64.powf(n / 2.0)).powf(1.0 / n);
    for _ in 0..MAX_REJECTIONS {
        let vertices = (0..=dim)
            .map(|_| uniform_vector(rng, dim, -1.0, 1.0))
            .collect();
        let Ok(s) = Simplex::new(vertices) else {
            continue;
        };
        let quality = (factorial(dim) * s.volume()).powf(1.0 / n) / s.scale();
        if quality >= MIN_SIMPLEX_QUALITY * regular {
            return Ok(s);
        }
    }
    Err(Error::GeneratorExhausted(MAX_REJECTIONS))
}

/// Affine field with every entry of `A` and `b` uniform in `[-1, 1]`.
pub fn random_affine_field(seed: u64, dim: usize) -> AffineField {
    affine_field_from(&mut rng(seed), dim)
}

fn affine_field_from(rng: &mut ChaCha8Rng, dim: usize) -> AffineField {
    let matrix = (0..dim)
        .map(|_| (0..dim).map(|_| rng.random_range(-1.0..=1.0)).collect())
        .collect();
    let offset = uniform_vector(rng, dim, -1.0, 1.0);
    AffineField::new(matrix, offset).expect("square finite matrix")
}

/// Affine density with gradient and constant uniform in `[-1, 1]`.
pub fn random_affine_density(seed: u64, dim: usize) -> AffineDensity {
    affine_density_from(&mut rng(seed), dim)
}

fn affine_density_from(rng: &mut ChaCha8Rng, dim: usize) -> AffineDensity {
    let gradient = uniform_vector(rng, dim, -1.0, 1.0);
    AffineDensity::new(gradient, rng.random_range(-1.0..=1.0)).expect("finite density")
}

#[derive(Debug, Clone, PartialEq)]
pub struct HadamardInstance {
    pub simplex: Simplex,
    pub density: AffineDensity,
    pub field: AffineField,
}

/// Random simplex, density and field from a single seeded stream.
pub fn random_hadamard_instance(seed: u64, dim: usize) -> Result<HadamardInstance> {
    if !(2..=16).contains(&dim) {
        return Err(Error::DimensionOutOfRange(dim, 2, 16));
    }
    let mut rng = rng(seed);
    let simplex = random_simplex_from(&mut rng, dim)?;
    let density = affine_density_from(&mut rng, dim);
    let field = affine_field_from(&mut rng, dim);
    Ok(HadamardInstance {
        simplex,
        density,
        field,
    })
}
