//! Executable versions of the translation arguments for the Pythagorean
//! theorem, the laws of sines and cosines, and de Gua's theorem.
//!
//! Each verifier builds a constant translation field, decomposes the
//! (vanishing) shape derivative of the area into per-facet boundary terms
//! with [`boundary_integral`], compares every term against its closed form,
//! and reports the theorem residual.

mod generators;

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use generators::{
    random_affine_density, random_affine_field, random_hadamard_instance, random_right_simplex,
    random_rigid_motion, random_simplex, random_triangle, HadamardInstance, LegMode, TriangleKind,
    MAX_REJECTIONS, MIN_ANGLE,
};

use crate::error::{Error, Result};
use crate::fields::{
    cosines_field, nd_pythagoras_field, pythagoras_field, sines_field, AffineDensity,
};
use crate::geometry::{RigidMotion, Side, Simplex, Triangle, TriangleMetrics};
use crate::hadamard::{boundary_integral, FacetContribution};
use crate::vector::Vector;

/// `verify_pythagoras` refuses triangles whose angle at `C` is further than
/// this from a right angle.
pub const RIGHT_ANGLE_TOL: f64 = 1e-9;
/// Pairwise `|x_i . x_j| / (|x_i| |x_j|)` allowed between legs.
pub const LEG_ORTHOGONALITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    Pythagoras,
    Sines,
    Cosines,
    NdPythagoras,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Pythagoras => "pythagoras",
            TheoremId::Sines => "sines",
            TheoremId::Cosines => "cosines",
            TheoremId::NdPythagoras => "nd-pythagoras",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pythagoras" => Ok(TheoremId::Pythagoras),
            "sines" => Ok(TheoremId::Sines),
            "cosines" => Ok(TheoremId::Cosines),
            "nd-pythagoras" | "nd_pythagoras" => Ok(TheoremId::NdPythagoras),
            other => Err(format!("unknown theorem `{other}`")),
        }
    }
}

/// Pass threshold `abs + rel * scale^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs: 1e-12,
            rel: 1e-12,
        }
    }
}

impl Tolerance {
    pub fn bound(&self, scale: f64) -> f64 {
        self.abs + self.rel * scale * scale
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceSummary {
    pub vertices: Vec<Vector>,
    pub metrics: BTreeMap<String, f64>,
}

/// One boundary term of a proof: the computed facet integral next to the
/// closed form the argument predicts for it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FacetTerm {
    pub label: String,
    pub facet: usize,
    pub contribution: f64,
    pub expected: f64,
}

impl FacetTerm {
    pub fn deviation(&self) -> f64 {
        (self.contribution - self.expected).abs()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub instance: InstanceSummary,
    pub per_facet: Vec<FacetTerm>,
    pub residual: f64,
    /// Longest side, or the hypotenuse-facet measure for `nd-pythagoras`.
    pub scale: f64,
    pub tolerance: Tolerance,
    pub bound: f64,
    pub passed: bool,
    pub auxiliary: BTreeMap<String, f64>,
}

impl TheoremReport {
    fn new(
        theorem: TheoremId,
        instance: InstanceSummary,
        per_facet: Vec<FacetTerm>,
        residual: f64,
        scale: f64,
        tolerance: Tolerance,
        auxiliary: BTreeMap<String, f64>,
    ) -> Self {
        let bound = tolerance.bound(scale);
        Self {
            theorem,
            instance,
            per_facet,
            residual,
            scale,
            tolerance,
            bound,
            passed: residual.abs() <= bound,
            auxiliary,
        }
    }

    pub fn max_facet_deviation(&self) -> f64 {
        self.per_facet
            .iter()
            .map(FacetTerm::deviation)
            .fold(0.0, f64::max)
    }
}

fn triangle_summary(t: &Triangle, m: &TriangleMetrics) -> InstanceSummary {
    let metrics = [
        ("a", m.a),
        ("b", m.b),
        ("c", m.c),
        ("alpha", m.alpha),
        ("beta", m.beta),
        ("gamma", m.gamma),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    InstanceSummary {
        vertices: t.simplex().vertices().to_vec(),
        metrics,
    }
}

/// Boundary decomposition of the area derivative for a constant field.
fn area_derivative(s: &Simplex, xi: &crate::fields::AffineField) -> (f64, Vec<FacetContribution>) {
    boundary_integral(s, &AffineDensity::one(s.dim()), xi)
        .expect("field and density are built with the simplex dimension")
}

fn triangle_terms(
    prefix: &str,
    per_facet: &[FacetContribution],
    expected: impl Fn(Side) -> f64,
) -> Vec<FacetTerm> {
    Side::ALL
        .iter()
        .zip(per_facet)
        .map(|(&side, c)| FacetTerm {
            label: format!("{prefix}{}", side.name()),
            facet: c.facet,
            contribution: c.contribution,
            expected: expected(side),
        })
        .collect()
}

/// Translation by `c n_c` of a triangle right-angled at `C`: the boundary
/// terms are `c^2` on side `c` and `-a^2`, `-b^2` on the legs, so the
/// vanishing derivative is `c^2 - a^2 - b^2`.
pub fn verify_pythagoras(t: &Triangle, tol: Tolerance) -> Result<TheoremReport> {
    let m = t.metrics();
    let deviation = (m.gamma - FRAC_PI_2).abs();
    if deviation > RIGHT_ANGLE_TOL {
        return Err(Error::NotRightTriangle { deviation });
    }
    let xi = pythagoras_field(t);
    let (total, per_facet) = area_derivative(t.simplex(), &xi);
    let per_facet = triangle_terms("", &per_facet, |side| match side {
        Side::A => -m.a * m.a,
        Side::B => -m.b * m.b,
        Side::C => m.c * m.c,
    });

    let mut aux = BTreeMap::new();
    aux.insert("c_nc_dot_na_plus_a".into(), m.c * m.n_c.dot(&m.n_a) + m.a);
    aux.insert("c_nc_dot_nb_plus_b".into(), m.c * m.n_c.dot(&m.n_b) + m.b);
    aux.insert("closed_form".into(), m.c * m.c - m.a * m.a - m.b * m.b);
    let report = TheoremReport::new(
        TheoremId::Pythagoras,
        triangle_summary(t, &m),
        per_facet,
        total,
        m.longest_side(),
        tol,
        aux,
    );
    Ok(with_facet_deviation(report))
}

fn with_facet_deviation(mut report: TheoremReport) -> TheoremReport {
    let d = report.max_facet_deviation();
    report.auxiliary.insert("max_facet_deviation".into(), d);
    report
}

/// Unit translations parallel to each side. For side `a` the terms are
/// `0` on `a`, `c sin(beta)` on `c` and `-b sin(gamma)` on `b`; sides `b`
/// and `c` follow cyclically. The residual is the largest pairwise gap
/// between `a / sin(alpha)`, `b / sin(beta)` and `c / sin(gamma)`.
pub fn verify_law_of_sines(t: &Triangle, tol: Tolerance) -> Result<TheoremReport> {
    let m = t.metrics();
    let (sa, sb, sc) = (m.alpha.sin(), m.beta.sin(), m.gamma.sin());
    let mut per_facet = Vec::with_capacity(9);
    let mut aux = BTreeMap::new();
    for side in Side::ALL {
        let xi = sines_field(t, side);
        let (total, contributions) = area_derivative(t.simplex(), &xi);
        let expected = |facet: Side| match (side, facet) {
            (Side::A, Side::C) => m.c * sb,
            (Side::A, Side::B) => -m.b * sc,
            (Side::B, Side::A) => m.a * sc,
            (Side::B, Side::C) => -m.c * sa,
            (Side::C, Side::B) => m.b * sa,
            (Side::C, Side::A) => -m.a * sb,
            _ => 0.0,
        };
        per_facet.extend(triangle_terms(
            &format!("e_{}/", side.name()),
            &contributions,
            expected,
        ));
        aux.insert(format!("hadamard_total_{}", side.name()), total);
    }
    let ratios = [m.a / sa, m.b / sb, m.c / sc];
    let residual = ratios
        .iter()
        .flat_map(|x| ratios.iter().map(move |y| (x - y).abs()))
        .fold(0.0, f64::max);
    for (side, r) in Side::ALL.iter().zip(ratios) {
        aux.insert(format!("ratio_{}", side.name()), r);
    }
    let report = TheoremReport::new(
        TheoremId::Sines,
        triangle_summary(t, &m),
        per_facet,
        residual,
        m.longest_side(),
        tol,
        aux,
    );
    Ok(with_facet_deviation(report))
}

/// Translation by `c n_c - a n_a - b n_b`. Expanding the boundary terms
/// with `n_a . n_b = -cos(gamma)` (and its analogues) gives
/// `c^2 - a^2 - b^2 + 2ab cos(gamma)`.
pub fn verify_law_of_cosines(t: &Triangle, tol: Tolerance) -> Result<TheoremReport> {
    let m = t.metrics();
    let (ca, cb, cg) = (m.alpha.cos(), m.beta.cos(), m.gamma.cos());
    let xi = cosines_field(t);
    let (total, contributions) = area_derivative(t.simplex(), &xi);
    let per_facet = triangle_terms("", &contributions, |side| match side {
        Side::A => m.a * (-m.c * cb - m.a + m.b * cg),
        Side::B => m.b * (-m.c * ca + m.a * cg - m.b),
        Side::C => m.c * (m.c + m.a * cb + m.b * ca),
    });
    let mut aux = BTreeMap::new();
    aux.insert(
        "closed_form".into(),
        m.c * m.c - m.a * m.a - m.b * m.b + 2.0 * m.a * m.b * cg,
    );
    aux.insert("normal_identity".into(), (m.n_a.dot(&m.n_b) + cg).abs());
    let report = TheoremReport::new(
        TheoremId::Cosines,
        triangle_summary(t, &m),
        per_facet,
        total,
        m.longest_side(),
        tol,
        aux,
    );
    Ok(with_facet_deviation(report))
}

/// A simplex `{p, p + x_1, ..., p + x_N}` with mutually orthogonal legs.
///
/// Vertex 0 is the right-angle apex, so facet 0 is the hypotenuse facet
/// and facet `i` is the leg facet that omits `x_i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RightSimplexSpec {
    apex: Vector,
    legs: Vec<Vector>,
}

impl RightSimplexSpec {
    pub fn new(apex: Vector, legs: Vec<Vector>) -> Result<Self> {
        let dim = apex.dim();
        if dim < 2 {
            return Err(Error::DimensionOutOfRange(dim, 2, usize::MAX));
        }
        if legs.len() != dim {
            return Err(Error::VertexCount {
                dim,
                expected: dim + 1,
                found: legs.len() + 1,
            });
        }
        for x in &legs {
            x.check_dim(dim)?;
        }
        for i in 0..dim {
            for j in i + 1..dim {
                let scale = legs[i].norm() * legs[j].norm();
                let cosine = if scale > 0.0 {
                    legs[i].dot(&legs[j]).abs() / scale
                } else {
                    0.0
                };
                if cosine > LEG_ORTHOGONALITY_TOL {
                    return Err(Error::NotOrthogonal { i, j, cosine });
                }
            }
        }
        let spec = Self { apex, legs };
        // Zero-length legs surface here as a degenerate simplex.
        spec.simplex()?;
        Ok(spec)
    }

    /// Reads a right simplex whose right angle sits at `right_vertex`.
    pub fn from_simplex(s: &Simplex, right_vertex: usize) -> Result<Self> {
        if right_vertex >= s.facet_count() {
            return Err(Error::FacetIndex {
                index: right_vertex,
                count: s.facet_count(),
            });
        }
        let apex = s.vertex(right_vertex).clone();
        let legs = s
            .vertices()
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != right_vertex)
            .map(|(_, v)| v - &apex)
            .collect();
        Self::new(apex, legs)
    }

    pub fn dim(&self) -> usize {
        self.apex.dim()
    }

    pub fn apex(&self) -> &Vector {
        &self.apex
    }

    pub fn legs(&self) -> &[Vector] {
        &self.legs
    }

    pub fn simplex(&self) -> Result<Simplex> {
        let mut vertices = vec![self.apex.clone()];
        vertices.extend(self.legs.iter().map(|x| &self.apex + x));
        Simplex::new(vertices)
    }

    pub fn transformed(&self, motion: &RigidMotion) -> Result<Self> {
        Self::new(
            motion.apply(&self.apex),
            self.legs.iter().map(|x| motion.rotate(x)).collect(),
        )
    }
}

/// `|A_i + C n_C . n_i|` for every leg facet `i = 1..=N`, in order.
pub fn face_normal_identity(r: &RightSimplexSpec) -> Result<Vec<f64>> {
    let facets = r.simplex()?.facets();
    let hyp = &facets[0];
    Ok(facets[1..]
        .iter()
        .map(|leg| (leg.measure + hyp.measure * hyp.normal.dot(&leg.normal)).abs())
        .collect())
}

/// Translation by `C n_C`: the hypotenuse facet contributes `C^2`, each leg
/// facet `-A_i^2`, so the vanishing derivative is `C^2 - sum A_i^2`.
pub fn verify_nd_pythagoras(r: &RightSimplexSpec, tol: Tolerance) -> Result<TheoremReport> {
    let s = r.simplex()?;
    let facets = s.facets();
    let xi = nd_pythagoras_field(&s, 0)?;
    let (total, contributions) = area_derivative(&s, &xi);
    let c = facets[0].measure;
    let per_facet = contributions
        .iter()
        .zip(&facets)
        .map(|(contrib, facet)| {
            let (label, expected) = if contrib.facet == 0 {
                ("hypotenuse".to_string(), c * c)
            } else {
                (
                    format!("leg_{}", contrib.facet),
                    -facet.measure * facet.measure,
                )
            };
            FacetTerm {
                label,
                facet: contrib.facet,
                contribution: contrib.contribution,
                expected,
            }
        })
        .collect();
    let sum_sq: f64 = facets[1..].iter().map(|f| f.measure * f.measure).sum();
    let face_normal = face_normal_identity(r)?;

    let mut aux = BTreeMap::new();
    aux.insert("hypotenuse_measure".into(), c);
    aux.insert("sum_leg_measures_sq".into(), sum_sq);
    aux.insert("closed_form".into(), c * c - sum_sq);
    aux.insert(
        "max_face_normal_residual".into(),
        face_normal.iter().copied().fold(0.0, f64::max),
    );
    let mut metrics = BTreeMap::new();
    metrics.insert("dim".into(), r.dim() as f64);
    metrics.insert("C".into(), c);
    for (i, f) in facets[1..].iter().enumerate() {
        metrics.insert(format!("A_{}", i + 1), f.measure);
    }
    let report = TheoremReport::new(
        TheoremId::NdPythagoras,
        InstanceSummary {
            vertices: s.vertices().to_vec(),
            metrics,
        },
        per_facet,
        total,
        c,
        tol,
        aux,
    );
    Ok(with_facet_deviation(report))
}
