//! Shape calculus on simplices.
//!
//! The derivative of `t -> integral of f over {x + t xi(x) : x in S}` at
//! `t = 0` is computed three ways for a simplex `S`, an affine density `f`
//! and an affine field `xi`: as a boundary integral of `f xi . n`, as the
//! volume integral of `div(f xi)`, and by finite differences of exact
//! perturbed integrals ([`hadamard`]). Constant translation fields built
//! from a triangle's sides and normals turn the vanishing area derivative
//! into the Pythagorean theorem, the laws of sines and cosines and, for
//! right N-simplices, de Gua's theorem ([`theorems`]).

pub mod batch;
pub mod error;
pub mod fields;
pub mod geometry;
pub mod hadamard;
pub mod theorems;
mod vector;

pub use error::{Error, Result};
pub use fields::{AffineDensity, AffineField};
pub use geometry::{Facet, RigidMotion, Side, Simplex, Triangle, TriangleMetrics};
pub use hadamard::{DerivativeReport, FacetContribution};
pub use theorems::{RightSimplexSpec, TheoremId, TheoremReport, Tolerance};
pub use vector::Vector;
