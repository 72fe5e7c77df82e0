//! Shape derivative of `t -> integral of f over Omega_t` at `t = 0`, where
//! `Omega_t = { x + t xi(x) : x in Omega }` and `Omega` is a simplex.
//!
//! Three independent evaluations are provided:
//!
//! * [`boundary_integral`]: sum over facets of the integral of `f xi . n`,
//! * [`volume_integral`]: integral of `div(f xi)` over the simplex,
//! * [`fd_derivative`]: central differences of [`perturbed_integral`] with
//!   one Richardson step.
//!
//! For affine `f` and `xi` all integrands are polynomials of degree at most
//! two in barycentric coordinates, so both quadratures are exact and the
//! first two agree up to rounding.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{div_density_field, AffineDensity, AffineField};
use crate::geometry::{factorial, Simplex, DEGENERACY_EPS};

/// Boundary/volume agreement required of a [`DerivativeReport`], relative
/// to `1 + |boundary_total|`.
pub const BOUNDARY_VOLUME_TOL: f64 = 1e-12;
/// Boundary/finite-difference agreement, relative to `1 + |boundary_total|`.
pub const BOUNDARY_FD_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FacetContribution {
    pub facet: usize,
    pub contribution: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivativeReport {
    pub per_facet: Vec<FacetContribution>,
    pub boundary_total: f64,
    pub volume_total: f64,
    pub fd_estimate: f64,
    pub fd_step: f64,
    pub residual_bv: f64,
    pub residual_bf: f64,
}

impl DerivativeReport {
    pub fn boundary_volume_ok(&self) -> bool {
        self.residual_bv <= BOUNDARY_VOLUME_TOL * (1.0 + self.boundary_total.abs())
    }

    pub fn boundary_fd_ok(&self) -> bool {
        self.residual_bf <= BOUNDARY_FD_TOL * (1.0 + self.boundary_total.abs())
    }

    pub fn passed(&self) -> bool {
        self.boundary_volume_ok() && self.boundary_fd_ok()
    }

    /// Largest of the two residuals.
    pub fn max_residual(&self) -> f64 {
        self.residual_bv.max(self.residual_bf)
    }
}

fn check_dims(s: &Simplex, f: &AffineDensity, xi: &AffineField) -> Result<()> {
    let dim = s.dim();
    for found in [f.dim(), xi.dim()] {
        if found != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found,
            });
        }
    }
    Ok(())
}

/// Integral of `f xi . n` over each facet, and their sum in ascending facet
/// order.
///
/// With `f_j` and `s_j = xi(p_j) . n` the vertex values on a facet with
/// `d + 1` vertices, the moments of barycentric coordinates give
/// `m / ((d+1)(d+2)) * (sum_j f_j * sum_j s_j + sum_j f_j s_j)`.
pub fn boundary_integral(
    s: &Simplex,
    f: &AffineDensity,
    xi: &AffineField,
) -> Result<(f64, Vec<FacetContribution>)> {
    check_dims(s, f, xi)?;
    let k = s.dim() as f64; // facet vertex count, d + 1
    let mut total = 0.0;
    let mut per_facet = Vec::with_capacity(s.facet_count());
    for facet in s.facets() {
        let mut sum_f = 0.0;
        let mut sum_s = 0.0;
        let mut sum_fs = 0.0;
        for p in &facet.vertices {
            let fj = f.apply(p);
            let sj = xi.apply(p).dot(&facet.normal);
            sum_f += fj;
            sum_s += sj;
            sum_fs += fj * sj;
        }
        let contribution = facet.measure * (sum_f * sum_s + sum_fs) / (k * (k + 1.0));
        total += contribution;
        per_facet.push(FacetContribution {
            facet: facet.opposite_vertex_index,
            contribution,
        });
    }
    Ok((total, per_facet))
}

/// Integral of `div(f xi)` over the simplex by the centroid rule, exact for
/// the affine divergence.
pub fn volume_integral(s: &Simplex, f: &AffineDensity, xi: &AffineField) -> Result<f64> {
    check_dims(s, f, xi)?;
    let div = div_density_field(f, xi)?;
    Ok(s.volume() * div.apply(&s.centroid()))
}

/// Integral of `f` over the image of `s` under `x -> x + t xi(x)`.
///
/// The image edges are formed as `(v_i - v_0) + t (xi(v_i) - xi(v_0))`, so a
/// constant field leaves them, and therefore the volume, bit-identical.
pub fn perturbed_integral(s: &Simplex, f: &AffineDensity, xi: &AffineField, t: f64) -> Result<f64> {
    check_dims(s, f, xi)?;
    let n = s.dim();
    let v0 = s.vertex(0);
    let xi0 = xi.apply(v0);
    let mut edges = DMatrix::zeros(n, n);
    let mut moved = Vec::with_capacity(n + 1);
    let mut p0 = v0.clone();
    p0.axpy(t, &xi0);
    moved.push(p0);
    for (col, v) in s.vertices()[1..].iter().enumerate() {
        let xv = xi.apply(v);
        let mut p = v.clone();
        p.axpy(t, &xv);
        moved.push(p);
        for r in 0..n {
            edges[(r, col)] = (v[r] - v0[r]) + t * (xv[r] - xi0[r]);
        }
    }
    let det = edges.determinant();
    let mut scale: f64 = 0.0;
    for (i, p) in moved.iter().enumerate() {
        for q in &moved[i + 1..] {
            scale = scale.max(p.distance(q));
        }
    }
    if !(scale > 0.0 && det.abs() / scale.powi(n as i32) > DEGENERACY_EPS) {
        return Err(Error::PerturbedDegenerate { t });
    }
    let centroid = s.centroid();
    let mut moved_centroid = centroid.clone();
    moved_centroid.axpy(t, &xi.apply(&centroid));
    Ok(det.abs() / factorial(n) * f.apply(&moved_centroid))
}

/// `cbrt(eps) * scale(S) / max(1, max_v |xi(v)|)`.
pub fn default_fd_step(s: &Simplex, xi: &AffineField) -> f64 {
    let field_scale = s
        .vertices()
        .iter()
        .map(|v| xi.apply(v).norm())
        .fold(0.0, f64::max);
    f64::EPSILON.cbrt() * s.scale() / field_scale.max(1.0)
}

fn central_difference(s: &Simplex, f: &AffineDensity, xi: &AffineField, h: f64) -> Result<f64> {
    let plus = perturbed_integral(s, f, xi, h)?;
    let minus = perturbed_integral(s, f, xi, -h)?;
    Ok((plus - minus) / (2.0 * h))
}

/// Central difference at steps `h` and `h / 2`, combined by one Richardson
/// step. `step = None` uses [`default_fd_step`].
pub fn fd_derivative(
    s: &Simplex,
    f: &AffineDensity,
    xi: &AffineField,
    step: Option<f64>,
) -> Result<f64> {
    let h = step.unwrap_or_else(|| default_fd_step(s, xi));
    let coarse = central_difference(s, f, xi, h)?;
    let fine = central_difference(s, f, xi, 0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

pub fn hadamard_derivative(
    s: &Simplex,
    f: &AffineDensity,
    xi: &AffineField,
) -> Result<DerivativeReport> {
    let (boundary_total, per_facet) = boundary_integral(s, f, xi)?;
    let volume_total = volume_integral(s, f, xi)?;
    let fd_step = default_fd_step(s, xi);
    let fd_estimate = fd_derivative(s, f, xi, Some(fd_step))?;
    Ok(DerivativeReport {
        per_facet,
        boundary_total,
        volume_total,
        fd_estimate,
        fd_step,
        residual_bv: (boundary_total - volume_total).abs(),
        residual_bf: (boundary_total - fd_estimate).abs(),
    })
}

/// Integral of `f` over `s`, for reference: `volume * f(centroid)`.
pub fn integral(s: &Simplex, f: &AffineDensity) -> Result<f64> {
    f.gradient().check_dim(s.dim())?;
    Ok(s.volume() * f.apply(&s.centroid()))
}
