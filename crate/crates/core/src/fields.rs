//! Affine perturbation fields `xi(x) = A x + b`, affine densities
//! `f(x) = g . x + c0`, and the translation fields behind the classical
//! triangle theorems.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{RigidMotion, Side, Simplex, Triangle};
use crate::vector::Vector;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AffineField {
    /// Row-major N x N matrix `A`.
    matrix: Vec<Vec<f64>>,
    offset: Vector,
}

impl AffineField {
    pub fn new(matrix: Vec<Vec<f64>>, offset: Vector) -> Result<Self> {
        let dim = offset.dim();
        if matrix.len() != dim || matrix.iter().any(|row| row.len() != dim) {
            return Err(Error::NotSquare { dim });
        }
        if matrix.iter().flatten().any(|a| !a.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { matrix, offset })
    }

    pub fn constant(offset: Vector) -> Self {
        let dim = offset.dim();
        Self {
            matrix: vec![vec![0.0; dim]; dim],
            offset,
        }
    }

    pub fn linear(matrix: Vec<Vec<f64>>) -> Result<Self> {
        let dim = matrix.len();
        Self::new(matrix, Vector::zeros(dim.max(1)))
    }

    /// `xi(x) = x`.
    pub fn identity(dim: usize) -> Self {
        let matrix = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        Self {
            matrix,
            offset: Vector::zeros(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.offset.dim()
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    pub fn offset(&self) -> &Vector {
        &self.offset
    }

    pub fn is_constant(&self) -> bool {
        self.matrix.iter().flatten().all(|&a| a == 0.0)
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.matrix[i][i]).sum()
    }

    pub fn eval(&self, x: &Vector) -> Result<Vector> {
        x.check_dim(self.dim())?;
        Ok(self.apply(x))
    }

    pub(crate) fn apply(&self, x: &Vector) -> Vector {
        Vector::from_raw(
            self.matrix
                .iter()
                .zip(self.offset.coords())
                .map(|(row, b)| row.iter().zip(x.coords()).map(|(a, x)| a * x).sum::<f64>() + b)
                .collect(),
        )
    }

    /// `A^T y`.
    fn transpose_apply(&self, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (row, yi) in self.matrix.iter().zip(y.coords()) {
            out.axpy(*yi, &Vector::from_raw(row.clone()));
        }
        out
    }

    /// Pointwise sum of two fields.
    pub fn plus(&self, other: &AffineField) -> Result<AffineField> {
        other.offset.check_dim(self.dim())?;
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
            .collect();
        Ok(AffineField {
            matrix,
            offset: &self.offset + &other.offset,
        })
    }

    /// The field carried along by `m`: `y -> R xi(m^-1(y))`.
    pub fn pushed_forward(&self, m: &RigidMotion) -> Result<AffineField> {
        m.translation().check_dim(self.dim())?;
        let columns: Vec<Vector> = (0..self.dim())
            .map(|j| m.rotate(&self.linear_apply(&m.rotate_back(&Vector::basis(self.dim(), j)))))
            .collect();
        let matrix = (0..self.dim())
            .map(|i| columns.iter().map(|c| c[i]).collect())
            .collect();
        let offset = m.rotate(&self.apply(&m.apply_inverse(&Vector::zeros(self.dim()))));
        Ok(AffineField { matrix, offset })
    }

    fn linear_apply(&self, x: &Vector) -> Vector {
        Vector::from_raw(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(x.coords()).map(|(a, x)| a * x).sum())
                .collect(),
        )
    }

    /// Largest absolute entry of `A` and `b` together.
    pub fn max_abs(&self) -> f64 {
        self.matrix
            .iter()
            .flatten()
            .fold(self.offset.max_abs(), |m, a| m.max(a.abs()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AffineDensity {
    gradient: Vector,
    constant: f64,
}

impl AffineDensity {
    pub fn new(gradient: Vector, constant: f64) -> Result<Self> {
        if !constant.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self { gradient, constant })
    }

    /// `f = 1`.
    pub fn one(dim: usize) -> Self {
        Self {
            gradient: Vector::zeros(dim),
            constant: 1.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.gradient.dim()
    }

    pub fn gradient(&self) -> &Vector {
        &self.gradient
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn eval(&self, x: &Vector) -> Result<f64> {
        x.check_dim(self.dim())?;
        Ok(self.apply(x))
    }

    pub(crate) fn apply(&self, x: &Vector) -> f64 {
        self.gradient.dot(x) + self.constant
    }

    /// The density carried along by `m`: `y -> f(m^-1(y))`.
    pub fn pushed_forward(&self, m: &RigidMotion) -> Result<AffineDensity> {
        m.translation().check_dim(self.dim())?;
        Ok(AffineDensity {
            gradient: m.rotate(&self.gradient),
            constant: self.apply(&m.apply_inverse(&Vector::zeros(self.dim()))),
        })
    }

    pub fn plus(&self, other: &AffineDensity) -> Result<AffineDensity> {
        other.gradient.check_dim(self.dim())?;
        Ok(AffineDensity {
            gradient: &self.gradient + &other.gradient,
            constant: self.constant + other.constant,
        })
    }
}

pub fn eval_field(xi: &AffineField, x: &Vector) -> Result<Vector> {
    xi.eval(x)
}

/// `div(f xi)`, which for affine `f` and `xi` is the affine function
/// `x -> g . (A x + b) + (g . x + c0) tr(A)`.
pub fn div_density_field(f: &AffineDensity, xi: &AffineField) -> Result<AffineDensity> {
    f.gradient.check_dim(xi.dim())?;
    let tr = xi.trace();
    let mut gradient = xi.transpose_apply(&f.gradient);
    gradient.axpy(tr, &f.gradient);
    Ok(AffineDensity {
        gradient,
        constant: f.gradient.dot(&xi.offset) + f.constant * tr,
    })
}

/// Translation along `c n_c`, the hypotenuse direction scaled by its length.
pub fn pythagoras_field(t: &Triangle) -> AffineField {
    let m = t.metrics();
    AffineField::constant(&m.n_c * m.c)
}

/// Unit translation parallel to `side`: along `C -> B` for `a`, `A -> C`
/// for `b` and `B -> A` for `c`.
pub fn sines_field(t: &Triangle, side: Side) -> AffineField {
    let (from, to) = match side {
        Side::A => (t.c(), t.b()),
        Side::B => (t.a(), t.c()),
        Side::C => (t.b(), t.a()),
    };
    let dir = (to - from)
        .normalized()
        .expect("sides of a non-degenerate triangle have positive length");
    AffineField::constant(dir)
}

/// Translation along `c n_c - a n_a - b n_b`.
pub fn cosines_field(t: &Triangle) -> AffineField {
    let m = t.metrics();
    let mut b = &m.n_c * m.c;
    b.axpy(-m.a, &m.n_a);
    b.axpy(-m.b, &m.n_b);
    AffineField::constant(b)
}

/// Translation along `C n_C` for the facet `hyp_index` of measure `C`.
pub fn nd_pythagoras_field(s: &Simplex, hyp_index: usize) -> Result<AffineField> {
    let facet = s.facet(hyp_index)?;
    Ok(AffineField::constant(&facet.normal * facet.measure))
}

#[cfg(test)]
mod tests {
    use approx::assert_relative_eq;

    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec()).unwrap()
    }

    fn t345() -> Triangle {
        Triangle::from_coords([0.0, 3.0], [4.0, 0.0], [0.0, 0.0]).unwrap()
    }

    fn equilateral() -> Triangle {
        Triangle::from_coords([0.0, 0.0], [1.0, 0.0], [0.5, 3f64.sqrt() / 2.0]).unwrap()
    }

    #[test]
    fn evaluates_affine_fields() {
        let constant = AffineField::constant(v(&[2.0, 0.0]));
        assert_eq!(
            eval_field(&constant, &v(&[5.0, 5.0])).unwrap().coords(),
            &[2.0, 0.0]
        );
        let id = AffineField::identity(2);
        assert_eq!(
            eval_field(&id, &v(&[1.0, 2.0])).unwrap().coords(),
            &[1.0, 2.0]
        );
        let shear = AffineField::linear(vec![vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert_eq!(
            eval_field(&shear, &v(&[3.0, 4.0])).unwrap().coords(),
            &[4.0, 0.0]
        );
        assert!(matches!(
            eval_field(&shear, &v(&[1.0, 2.0, 3.0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rejects_malformed_fields() {
        assert!(matches!(
            AffineField::new(vec![vec![1.0, 0.0]], v(&[0.0, 0.0])),
            Err(Error::NotSquare { dim: 2 })
        ));
        assert!(matches!(
            AffineField::new(vec![vec![f64::NAN, 0.0], vec![0.0, 0.0]], v(&[0.0, 0.0])),
            Err(Error::NonFinite)
        ));
        assert!(AffineDensity::new(v(&[0.0]), f64::INFINITY).is_err());
    }

    #[test]
    fn constant_predicate() {
        assert!(AffineField::constant(v(&[1.0, 1.0])).is_constant());
        assert!(!AffineField::identity(3).is_constant());
    }

    #[test]
    fn divergence_of_reference_cases() {
        let d = div_density_field(
            &AffineDensity::one(2),
            &AffineField::constant(v(&[3.0, -1.0])),
        )
        .unwrap();
        assert_eq!(
            (d.gradient().coords(), d.constant()),
            (&[0.0, 0.0][..], 0.0)
        );

        let d = div_density_field(&AffineDensity::one(2), &AffineField::identity(2)).unwrap();
        assert_eq!(
            (d.gradient().coords(), d.constant()),
            (&[0.0, 0.0][..], 2.0)
        );

        let f = AffineDensity::new(v(&[1.0, 0.0]), 0.0).unwrap();
        let d = div_density_field(&f, &AffineField::constant(v(&[1.0, 0.0]))).unwrap();
        assert_eq!(
            (d.gradient().coords(), d.constant()),
            (&[0.0, 0.0][..], 1.0)
        );

        let f3 = AffineDensity::one(3);
        assert!(div_density_field(&f3, &AffineField::identity(2)).is_err());
    }

    #[test]
    fn divergence_matches_finite_differences() {
        // div(f xi) = sum_i d/dx_i (f xi_i), checked by central differences
        // of the product at a few points; exact up to rounding because
        // f xi_i is quadratic.
        let f = AffineDensity::new(v(&[0.3, -0.7, 0.2]), 0.9).unwrap();
        let xi = AffineField::new(
            vec![
                vec![0.5, -0.2, 0.1],
                vec![0.4, 0.3, -0.6],
                vec![-0.1, 0.8, 0.2],
            ],
            v(&[0.1, -0.3, 0.7]),
        )
        .unwrap();
        let div = div_density_field(&f, &xi).unwrap();
        let h = 1e-3;
        for p in [[0.1, 0.2, 0.3], [-0.5, 0.4, 1.0], [2.0, -1.0, 0.0]] {
            let x = v(&p);
            let mut fd = 0.0;
            for i in 0..3 {
                let plus = &x + &(&Vector::basis(3, i) * h);
                let minus = &x - &(&Vector::basis(3, i) * h);
                let product = |y: &Vector| f.eval(y).unwrap() * xi.eval(y).unwrap()[i];
                fd += (product(&plus) - product(&minus)) / (2.0 * h);
            }
            assert_relative_eq!(div.eval(&x).unwrap(), fd, max_relative = 1e-10);
        }
    }

    #[test]
    fn push_forward_transports_values() {
        let m = RigidMotion::rotation_2d(0.7, [1.5, -2.0]);
        let xi = AffineField::new(vec![vec![0.3, -1.2], vec![0.8, 0.1]], v(&[0.4, -0.6])).unwrap();
        let f = AffineDensity::new(v(&[-0.9, 0.2]), 0.35).unwrap();
        let (xi2, f2) = (
            xi.pushed_forward(&m).unwrap(),
            f.pushed_forward(&m).unwrap(),
        );
        for x in [v(&[0.0, 0.0]), v(&[1.0, -3.0]), v(&[-0.25, 2.5])] {
            let y = m.apply(&x);
            let want = m.rotate(&xi.eval(&x).unwrap());
            let got = xi2.eval(&y).unwrap();
            assert!((&got - &want).max_abs() <= 1e-14);
            assert_relative_eq!(f2.eval(&y).unwrap(), f.eval(&x).unwrap(), epsilon = 1e-14);
        }
        assert_relative_eq!(xi2.trace(), xi.trace(), epsilon = 1e-15);
    }

    #[test]
    fn pythagoras_field_is_scaled_hypotenuse_normal() {
        let xi = pythagoras_field(&t345());
        assert!(xi.is_constant());
        assert_relative_eq!(xi.offset().norm(), 5.0, max_relative = 1e-15);

        let iso = Triangle::from_coords([0.0, 1.0], [1.0, 0.0], [0.0, 0.0]).unwrap();
        let b = pythagoras_field(&iso).offset().clone();
        assert_relative_eq!(b[0], 1.0, max_relative = 1e-15);
        assert_relative_eq!(b[1], 1.0, max_relative = 1e-15);
    }

    #[test]
    fn sines_field_runs_along_the_side() {
        let xi = sines_field(&t345(), Side::A);
        assert!(xi.is_constant());
        assert_eq!(xi.offset().coords(), &[1.0, 0.0]);

        for t in [t345(), equilateral()] {
            let m = t.metrics();
            for side in Side::ALL {
                let e = sines_field(&t, side).offset().clone();
                assert_relative_eq!(e.norm(), 1.0, max_relative = 1e-15);
                assert!(e.dot(m.normal(side)).abs() <= 1e-14);
            }
        }

        let m = equilateral().metrics();
        let e = sines_field(&equilateral(), Side::A).offset().clone();
        assert_relative_eq!(e.dot(&m.n_b), -(3f64.sqrt()) / 2.0, max_relative = 1e-14);
        assert_relative_eq!(e.dot(&m.n_b), -m.gamma.sin(), max_relative = 1e-14);
        assert_relative_eq!(e.dot(&m.n_c), m.beta.sin(), max_relative = 1e-14);
    }

    #[test]
    fn cosines_field_norms() {
        let eq = cosines_field(&equilateral());
        assert!(eq.is_constant());
        assert_relative_eq!(eq.offset().norm(), 2.0, max_relative = 1e-14);

        // 3-4-5 by hand: n_a = (0,-1), n_b = (-1,0), n_c = (3,4)/5, so the
        // field is (3,4) + (0,4) + (3,0) = (6,8).
        let b = cosines_field(&t345()).offset().clone();
        assert_relative_eq!(b[0], 6.0, max_relative = 1e-15);
        assert_relative_eq!(b[1], 8.0, max_relative = 1e-15);
        assert_relative_eq!(b.norm(), 10.0, max_relative = 1e-15);
    }

    #[test]
    fn nd_pythagoras_field_has_hypotenuse_length() {
        let xi = nd_pythagoras_field(&Simplex::unit(3), 0).unwrap();
        assert!(xi.is_constant());
        for k in 0..3 {
            assert_relative_eq!(xi.offset()[k], 0.5, max_relative = 1e-15);
        }
        let xi = nd_pythagoras_field(&Simplex::unit(2), 0).unwrap();
        assert_relative_eq!(xi.offset()[0], 1.0, max_relative = 1e-15);
        assert_relative_eq!(xi.offset()[1], 1.0, max_relative = 1e-15);
        assert!(nd_pythagoras_field(&Simplex::unit(2), 5).is_err());
    }
}
