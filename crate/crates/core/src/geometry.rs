//! Simplex geometry in R^N: volumes, facets, outward normals and the
//! derived quantities of a labeled triangle.
//!
//! Facets are indexed by the vertex they omit, so facet `i` of a simplex is
//! the face opposite vertex `i`. For a triangle with vertices `(A, B, C)`
//! this makes facet 0 the side `a = BC`, facet 1 the side `b = AC` and
//! facet 2 the side `c = AB`.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::{orthonormalize, project_out, Vector};

/// Relative threshold below which a simplex counts as degenerate:
/// `|det(edges)| <= DEGENERACY_EPS * scale^N`.
pub const DEGENERACY_EPS: f64 = 1e-12;

pub(crate) fn factorial(n: usize) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

fn max_pairwise_distance(points: &[Vector]) -> f64 {
    let mut scale: f64 = 0.0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            scale = scale.max(p.distance(q));
        }
    }
    scale
}

fn edge_columns(origin: &Vector, others: &[Vector]) -> DMatrix<f64> {
    let rows = origin.dim();
    DMatrix::from_fn(rows, others.len(), |r, c| others[c][r] - origin[r])
}

/// `sqrt(det(E^T E))` for the edge matrix `E` from `origin` to `others`, as
/// `prod |R_ii|` from a Householder QR of `E`.
fn gram_root(origin: &Vector, others: &[Vector]) -> f64 {
    edge_columns(origin, others)
        .qr()
        .r()
        .diagonal()
        .iter()
        .map(|r| r.abs())
        .product()
}

/// An N-simplex in R^N, N >= 2, checked for non-degeneracy on construction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Simplex {
    vertices: Vec<Vector>,
}

impl Simplex {
    pub fn new(vertices: Vec<Vector>) -> Result<Self> {
        let dim = vertices.first().map(Vector::dim).unwrap_or(0);
        if dim < 2 {
            return Err(Error::DimensionOutOfRange(dim, 2, usize::MAX));
        }
        if vertices.len() != dim + 1 {
            return Err(Error::VertexCount {
                dim,
                expected: dim + 1,
                found: vertices.len(),
            });
        }
        for v in &vertices {
            v.check_dim(dim)?;
        }
        let simplex = Self { vertices };
        let scale = simplex.scale();
        let normalized = if scale > 0.0 {
            simplex.signed_det().abs() / scale.powi(dim as i32)
        } else {
            0.0
        };
        if normalized.is_nan() || normalized <= DEGENERACY_EPS {
            return Err(Error::Degenerate {
                what: "simplex",
                measure: normalized,
                threshold: DEGENERACY_EPS,
            });
        }
        Ok(simplex)
    }

    pub fn from_coords(coords: &[&[f64]]) -> Result<Self> {
        let vertices = coords
            .iter()
            .map(|c| Vector::new(c.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices)
    }

    /// The standard simplex `{0, e_1, ..., e_N}`.
    pub fn unit(dim: usize) -> Self {
        let mut vertices = vec![Vector::zeros(dim)];
        vertices.extend((0..dim).map(|i| Vector::basis(dim, i)));
        Self { vertices }
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].dim()
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vector {
        &self.vertices[i]
    }

    pub fn facet_count(&self) -> usize {
        self.vertices.len()
    }

    /// Longest edge length.
    pub fn scale(&self) -> f64 {
        max_pairwise_distance(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        self.facets().iter().map(|f| f.measure).sum()
    }

    pub fn centroid(&self) -> Vector {
        let mut c = Vector::zeros(self.dim());
        let w = 1.0 / self.vertices.len() as f64;
        for v in &self.vertices {
            c.axpy(w, v);
        }
        c
    }

    /// `det(v_1 - v_0, ..., v_N - v_0)`.
    pub fn signed_det(&self) -> f64 {
        edge_columns(&self.vertices[0], &self.vertices[1..]).determinant()
    }

    pub fn volume(&self) -> f64 {
        self.signed_det().abs() / factorial(self.dim())
    }

    fn check_facet(&self, index: usize) -> Result<()> {
        if index < self.facet_count() {
            Ok(())
        } else {
            Err(Error::FacetIndex {
                index,
                count: self.facet_count(),
            })
        }
    }

    fn facet_vertices(&self, index: usize) -> Vec<Vector> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Unit normal of facet `index` pointing away from the opposite vertex,
    /// together with the distance from that vertex to the facet's hull.
    fn normal_and_height(&self, index: usize, facet: &[Vector]) -> Result<(Vector, f64)> {
        let origin = &facet[0];
        let edges: Vec<Vector> = facet[1..].iter().map(|p| p - origin).collect();
        let basis = orthonormalize(&edges, DEGENERACY_EPS).ok_or(Error::Degenerate {
            what: "facet",
            measure: 0.0,
            threshold: DEGENERACY_EPS,
        })?;
        let mut w = origin - &self.vertices[index];
        project_out(&mut w, &basis);
        let height = w.norm();
        let normal = w.normalized().ok_or(Error::Degenerate {
            what: "simplex",
            measure: 0.0,
            threshold: DEGENERACY_EPS,
        })?;
        Ok((normal, height))
    }

    pub fn outward_normal(&self, index: usize) -> Result<Vector> {
        self.check_facet(index)?;
        let facet = self.facet_vertices(index);
        Ok(self.normal_and_height(index, &facet)?.0)
    }

    pub fn facet(&self, index: usize) -> Result<Facet> {
        self.check_facet(index)?;
        let vertices = self.facet_vertices(index);
        let measure = facet_measure_of(&vertices)?;
        let (normal, height) = self.normal_and_height(index, &vertices)?;
        Ok(Facet {
            opposite_vertex_index: index,
            vertices,
            normal,
            measure,
            height,
        })
    }

    /// All N+1 facets in ascending index order.
    pub fn facets(&self) -> Vec<Facet> {
        (0..self.facet_count())
            .map(|i| {
                self.facet(i)
                    .expect("facets of a non-degenerate simplex are non-degenerate")
            })
            .collect()
    }

    /// Volume as `(h / N) * measure(base)` with `base` the facet opposite
    /// vertex `base_index` and `h` the distance from that vertex to it.
    pub fn base_height_volume(&self, base_index: usize) -> Result<f64> {
        let facet = self.facet(base_index)?;
        Ok(facet.height / self.dim() as f64 * facet.measure)
    }

    /// Applies `map` to every vertex and re-validates the result.
    pub fn map_vertices(&self, map: impl Fn(&Vector) -> Vector) -> Result<Simplex> {
        Simplex::new(self.vertices.iter().map(map).collect())
    }
}

/// One (N-1)-face of a simplex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Facet {
    pub opposite_vertex_index: usize,
    pub vertices: Vec<Vector>,
    /// Outward unit normal.
    pub normal: Vector,
    /// (N-1)-dimensional measure.
    pub measure: f64,
    /// Distance from the opposite vertex to the facet's affine hull.
    pub height: f64,
}

impl Facet {
    pub fn centroid(&self) -> Vector {
        let mut c = Vector::zeros(self.vertices[0].dim());
        let w = 1.0 / self.vertices.len() as f64;
        for v in &self.vertices {
            c.axpy(w, v);
        }
        c
    }
}

/// k-dimensional measure of the simplex spanned by `k + 1` points in R^N,
/// `sqrt(det(E^T E)) / k!` with `E` the edge vectors from the first point.
pub fn facet_measure_of(points: &[Vector]) -> Result<f64> {
    if points.len() < 2 {
        return Err(Error::VertexCount {
            dim: points.first().map(Vector::dim).unwrap_or(0),
            expected: 2,
            found: points.len(),
        });
    }
    let dim = points[0].dim();
    for p in points {
        p.check_dim(dim)?;
    }
    let k = points.len() - 1;
    if k > dim {
        return Err(Error::VertexCount {
            dim,
            expected: dim + 1,
            found: points.len(),
        });
    }
    let root = gram_root(&points[0], &points[1..]);
    let scale = max_pairwise_distance(points);
    let normalized = if scale > 0.0 {
        root / scale.powi(k as i32)
    } else {
        0.0
    };
    if normalized.is_nan() || normalized <= DEGENERACY_EPS {
        return Err(Error::Degenerate {
            what: "facet",
            measure: normalized,
            threshold: DEGENERACY_EPS,
        });
    }
    Ok(root / factorial(k))
}

pub fn simplex_volume(s: &Simplex) -> f64 {
    s.volume()
}

pub fn facets(s: &Simplex) -> Vec<Facet> {
    s.facets()
}

pub fn facet_measure(f: &Facet) -> Result<f64> {
    facet_measure_of(&f.vertices)
}

pub fn outward_normal(s: &Simplex, index: usize) -> Result<Vector> {
    s.outward_normal(index)
}

pub fn base_height_volume(s: &Simplex, base_index: usize) -> Result<f64> {
    s.base_height_volume(base_index)
}

/// Sides of a triangle, named after the vertex they face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    A,
    B,
    C,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::A, Side::B, Side::C];

    /// Index of the facet holding this side (= index of the opposite vertex).
    pub fn facet_index(self) -> usize {
        match self {
            Side::A => 0,
            Side::B => 1,
            Side::C => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::A => "a",
            Side::B => "b",
            Side::C => "c",
        }
    }
}

/// A planar triangle with labeled vertices `A`, `B`, `C`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Triangle {
    simplex: Simplex,
}

/// Side lengths, interior angles (radians) and outward side normals.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TriangleMetrics {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub n_a: Vector,
    pub n_b: Vector,
    pub n_c: Vector,
}

impl TriangleMetrics {
    pub fn side(&self, side: Side) -> f64 {
        match side {
            Side::A => self.a,
            Side::B => self.b,
            Side::C => self.c,
        }
    }

    pub fn angle(&self, side: Side) -> f64 {
        match side {
            Side::A => self.alpha,
            Side::B => self.beta,
            Side::C => self.gamma,
        }
    }

    pub fn normal(&self, side: Side) -> &Vector {
        match side {
            Side::A => &self.n_a,
            Side::B => &self.n_b,
            Side::C => &self.n_c,
        }
    }

    pub fn longest_side(&self) -> f64 {
        self.a.max(self.b).max(self.c)
    }
}

/// Interior angle at `p` between the directions to `q` and `r`.
fn angle_at(p: &Vector, q: &Vector, r: &Vector) -> f64 {
    let u = q - p;
    let v = r - p;
    let cross = u[0] * v[1] - u[1] * v[0];
    cross.abs().atan2(u.dot(&v))
}

impl Triangle {
    pub fn new(a: Vector, b: Vector, c: Vector) -> Result<Self> {
        for v in [&a, &b, &c] {
            v.check_dim(2)?;
        }
        Ok(Self {
            simplex: Simplex::new(vec![a, b, c])?,
        })
    }

    pub fn from_coords(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> Result<Self> {
        Self::new(
            Vector::new(a.to_vec())?,
            Vector::new(b.to_vec())?,
            Vector::new(c.to_vec())?,
        )
    }

    /// Labels the vertices of a 2-simplex; `labels` gives the vertex index
    /// of `A`, `B` and `C`.
    pub fn from_simplex(simplex: &Simplex, labels: [usize; 3]) -> Result<Self> {
        if simplex.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: simplex.dim(),
            });
        }
        let [ia, ib, ic] = labels;
        Self::new(
            simplex.vertex(ia).clone(),
            simplex.vertex(ib).clone(),
            simplex.vertex(ic).clone(),
        )
    }

    pub fn simplex(&self) -> &Simplex {
        &self.simplex
    }

    pub fn a(&self) -> &Vector {
        self.simplex.vertex(0)
    }

    pub fn b(&self) -> &Vector {
        self.simplex.vertex(1)
    }

    pub fn c(&self) -> &Vector {
        self.simplex.vertex(2)
    }

    pub fn metrics(&self) -> TriangleMetrics {
        let (pa, pb, pc) = (self.a(), self.b(), self.c());
        let normal = |side: Side| {
            self.simplex
                .outward_normal(side.facet_index())
                .expect("side index in range")
        };
        TriangleMetrics {
            a: pb.distance(pc),
            b: pa.distance(pc),
            c: pa.distance(pb),
            alpha: angle_at(pa, pb, pc),
            beta: angle_at(pb, pa, pc),
            gamma: angle_at(pc, pa, pb),
            n_a: normal(Side::A),
            n_b: normal(Side::B),
            n_c: normal(Side::C),
        }
    }

    pub fn map_vertices(&self, map: impl Fn(&Vector) -> Vector) -> Result<Triangle> {
        Triangle::new(map(self.a()), map(self.b()), map(self.c()))
    }
}

pub fn triangle_metrics(t: &Triangle) -> TriangleMetrics {
    t.metrics()
}

/// `x -> R x + t` with `R` orthogonal.
#[derive(Debug, Clone, PartialEq)]
pub struct RigidMotion {
    rows: Vec<Vector>,
    translation: Vector,
}

impl RigidMotion {
    /// `rows` must form an orthogonal matrix; this is not re-checked.
    pub fn new(rows: Vec<Vector>, translation: Vector) -> Result<Self> {
        let dim = translation.dim();
        if rows.len() != dim {
            return Err(Error::NotSquare { dim });
        }
        for r in &rows {
            r.check_dim(dim)?;
        }
        Ok(Self { rows, translation })
    }

    pub fn rotation_2d(theta: f64, translation: [f64; 2]) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            rows: vec![Vector::from_raw(vec![c, -s]), Vector::from_raw(vec![s, c])],
            translation: Vector::from_raw(translation.to_vec()),
        }
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        Vector::from_raw(
            self.rows
                .iter()
                .zip(self.translation.coords())
                .map(|(r, t)| r.dot(x) + t)
                .collect(),
        )
    }

    pub fn translation(&self) -> &Vector {
        &self.translation
    }

    /// Rotation part only.
    pub fn rotate(&self, x: &Vector) -> Vector {
        Vector::from_raw(self.rows.iter().map(|r| r.dot(x)).collect())
    }

    /// `R^T x`.
    pub fn rotate_back(&self, x: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (r, xi) in self.rows.iter().zip(x.coords()) {
            out.axpy(*xi, r);
        }
        out
    }

    /// `R^T (y - t)`.
    pub fn apply_inverse(&self, y: &Vector) -> Vector {
        self.rotate_back(&(y - &self.translation))
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_3, PI, SQRT_2};

    use approx::assert_relative_eq;

    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn volumes_of_reference_simplices() {
        assert_eq!(Simplex::unit(2).volume(), 0.5);
        assert_relative_eq!(Simplex::unit(3).volume(), 1.0 / 6.0, max_relative = 1e-15);
        let s = Simplex::from_coords(&[&[0.0, 0.0], &[4.0, 0.0], &[0.0, 3.0]]).unwrap();
        assert_eq!(simplex_volume(&s), 6.0);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let collinear = Simplex::from_coords(&[&[0.0, 0.0], &[1.0, 1.0], &[2.0, 2.0]]);
        assert!(matches!(collinear, Err(Error::Degenerate { .. })));
        let coincident = Simplex::from_coords(&[&[1.0, 1.0], &[1.0, 1.0], &[1.0, 1.0]]);
        assert!(matches!(coincident, Err(Error::Degenerate { .. })));
        let count = Simplex::from_coords(&[&[0.0, 0.0], &[1.0, 0.0]]);
        assert!(matches!(count, Err(Error::VertexCount { .. })));
        let mixed = Simplex::from_coords(&[&[0.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 1.0]]);
        assert!(matches!(mixed, Err(Error::DimensionMismatch { .. })));
        let line = Simplex::from_coords(&[&[0.0], &[1.0]]);
        assert!(matches!(line, Err(Error::DimensionOutOfRange(1, 2, _))));
        // Relative threshold: a tiny but well-shaped simplex is fine.
        assert!(Simplex::from_coords(&[&[0.0, 0.0], &[1e-9, 0.0], &[0.0, 1e-9]]).is_ok());
        // A sliver with flattening 1e-13 is not.
        assert!(Simplex::from_coords(&[&[0.0, 0.0], &[1.0, 0.0], &[0.5, 1e-13]]).is_err());
    }

    #[test]
    fn facets_of_unit_triangle() {
        let fs = facets(&Simplex::unit(2));
        assert_eq!(fs.len(), 3);
        assert_relative_eq!(fs[0].measure, SQRT_2, max_relative = 1e-15);
        assert_eq!(fs[1].measure, 1.0);
        assert_eq!(fs[2].measure, 1.0);
        for f in &fs {
            assert_eq!(facet_measure(f).unwrap(), f.measure);
        }
    }

    #[test]
    fn facets_of_unit_tetrahedron() {
        let fs = Simplex::unit(3).facets();
        assert_eq!(fs.len(), 4);
        assert_relative_eq!(fs[0].measure, 3f64.sqrt() / 2.0, max_relative = 1e-15);
        for f in &fs[1..] {
            assert_relative_eq!(f.measure, 0.5, max_relative = 1e-15);
        }
    }

    #[test]
    fn facet_count_is_dim_plus_one() {
        for n in 2..=7 {
            assert_eq!(Simplex::unit(n).facets().len(), n + 1);
        }
    }

    #[test]
    fn lower_dimensional_measures() {
        assert_eq!(
            facet_measure_of(&[v(&[0.0, 0.0]), v(&[3.0, 4.0])]).unwrap(),
            5.0
        );
        let tri = [
            v(&[1.0, 0.0, 0.0]),
            v(&[0.0, 1.0, 0.0]),
            v(&[0.0, 0.0, 1.0]),
        ];
        assert_relative_eq!(
            facet_measure_of(&tri).unwrap(),
            0.866_025_403_784_438_6,
            max_relative = 1e-15
        );
        // Regular tetrahedron with edge sqrt(2) spanned by e1..e4 in R^4;
        // the Cayley-Menger oracle gives 1/3.
        let tet: Vec<Vector> = (0..4).map(|i| Vector::basis(4, i)).collect();
        assert_relative_eq!(
            facet_measure_of(&tet).unwrap(),
            1.0 / 3.0,
            max_relative = 1e-14
        );
        let flat = [
            v(&[0.0, 0.0, 0.0]),
            v(&[1.0, 1.0, 1.0]),
            v(&[2.0, 2.0, 2.0]),
        ];
        assert!(matches!(
            facet_measure_of(&flat),
            Err(Error::Degenerate { .. })
        ));
    }

    #[test]
    fn normals_of_reference_simplices() {
        let s = Simplex::unit(2);
        let hyp = outward_normal(&s, 0).unwrap();
        assert_relative_eq!(hyp[0], FRAC_1_SQRT_2, max_relative = 1e-15);
        assert_relative_eq!(hyp[1], FRAC_1_SQRT_2, max_relative = 1e-15);
        let bottom = outward_normal(&s, 2).unwrap();
        assert_eq!(bottom.coords(), &[0.0, -1.0]);

        let n = outward_normal(&Simplex::unit(3), 0).unwrap();
        for k in 0..3 {
            assert_relative_eq!(n[k], 1.0 / 3f64.sqrt(), max_relative = 1e-15);
        }
        assert!(matches!(s.outward_normal(3), Err(Error::FacetIndex { .. })));
    }

    #[test]
    fn base_height_matches_determinant_volume() {
        let s2 = Simplex::unit(2);
        assert_relative_eq!(
            base_height_volume(&s2, 0).unwrap(),
            0.5,
            max_relative = 1e-15
        );
        let s3 = Simplex::unit(3);
        assert_relative_eq!(
            base_height_volume(&s3, 0).unwrap(),
            1.0 / 6.0,
            max_relative = 1e-15
        );
        let s = Simplex::from_coords(&[
            &[0.3, -0.2, 0.1],
            &[1.1, 0.4, -0.3],
            &[-0.2, 0.9, 0.5],
            &[0.4, 0.2, 1.3],
        ])
        .unwrap();
        for i in 0..4 {
            assert_relative_eq!(
                s.base_height_volume(i).unwrap(),
                s.volume(),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn metrics_of_345_triangle() {
        let t = Triangle::from_coords([0.0, 3.0], [4.0, 0.0], [0.0, 0.0]).unwrap();
        let m = triangle_metrics(&t);
        assert_eq!((m.a, m.b, m.c), (4.0, 3.0, 5.0));
        assert_relative_eq!(m.gamma, FRAC_PI_2, max_relative = 1e-15);
        assert_relative_eq!(m.alpha + m.beta + m.gamma, PI, max_relative = 1e-15);
        assert_eq!(m.n_a.coords(), &[0.0, -1.0]);
        assert_eq!(m.n_b.coords(), &[-1.0, 0.0]);
        assert_relative_eq!(m.n_c[0], 0.6, max_relative = 1e-15);
        assert_relative_eq!(m.n_c[1], 0.8, max_relative = 1e-15);
    }

    #[test]
    fn metrics_of_equilateral_triangle() {
        let t = Triangle::from_coords([0.0, 0.0], [1.0, 0.0], [0.5, 3f64.sqrt() / 2.0]).unwrap();
        let m = t.metrics();
        for angle in [m.alpha, m.beta, m.gamma] {
            assert_relative_eq!(angle, FRAC_PI_3, max_relative = 1e-14);
        }
        for side in Side::ALL {
            assert_relative_eq!(m.side(side), 1.0, max_relative = 1e-15);
        }
    }

    #[test]
    fn angles_near_zero_and_pi_stay_accurate() {
        // Thin isoceles triangle with apex angle 2*atan(1e-7).
        let t = Triangle::from_coords([0.0, 0.0], [1.0, 1e-7], [1.0, -1e-7]).unwrap();
        let m = t.metrics();
        assert_relative_eq!(m.alpha, 2.0 * 1e-7f64.atan(), max_relative = 1e-12);
        assert!((m.alpha + m.beta + m.gamma - PI).abs() <= 1e-12);
    }

    #[test]
    fn relabeling_permutes_sides() {
        let s = Simplex::from_coords(&[&[0.0, 0.0], &[4.0, 0.0], &[0.0, 3.0]]).unwrap();
        let t = Triangle::from_simplex(&s, [2, 1, 0]).unwrap();
        let m = t.metrics();
        assert_eq!((m.a, m.b, m.c), (4.0, 3.0, 5.0));
        assert_relative_eq!(m.gamma, FRAC_PI_2, max_relative = 1e-15);
        assert!(Triangle::from_simplex(&Simplex::unit(3), [0, 1, 2]).is_err());
    }

    #[test]
    fn rigid_motion_preserves_distances() {
        let m = RigidMotion::rotation_2d(0.7, [3.0, -1.0]);
        let p = v(&[1.0, 2.0]);
        let q = v(&[-0.5, 0.25]);
        assert_relative_eq!(
            m.apply(&p).distance(&m.apply(&q)),
            p.distance(&q),
            max_relative = 1e-15
        );
    }
}
