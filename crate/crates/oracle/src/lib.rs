//! Reference computations that share no code path with `shapecalc`.
//!
//! Points are plain coordinate slices so nothing here depends on the
//! library's types.

use nalgebra::DMatrix;

fn sq_dist(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum()
}

fn factorial(n: usize) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// k-dimensional measure of the simplex on `k + 1` points from the
/// Cayley-Menger determinant:
/// `V^2 = (-1)^(k+1) / (2^k (k!)^2) * det(CM)`.
pub fn cayley_menger_measure(points: &[&[f64]]) -> f64 {
    let k = points.len() - 1;
    let n = k + 2;
    let mut cm = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        cm[(0, i)] = 1.0;
        cm[(i, 0)] = 1.0;
    }
    for i in 0..=k {
        for j in 0..=k {
            cm[(i + 1, j + 1)] = sq_dist(points[i], points[j]);
        }
    }
    let sign = if (k + 1).is_multiple_of(2) { 1.0 } else { -1.0 };
    let v2 = sign * cm.determinant() / (2f64.powi(k as i32) * factorial(k).powi(2));
    v2.max(0.0).sqrt()
}

/// Area of a triangle in R^3 as half the cross-product magnitude.
pub fn cross_product_area(p: [f64; 3], q: [f64; 3], r: [f64; 3]) -> f64 {
    let u = [q[0] - p[0], q[1] - p[1], q[2] - p[2]];
    let v = [r[0] - p[0], r[1] - p[1], r[2] - p[2]];
    let c = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ];
    0.5 * (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt()
}

/// Shoelace area of a planar triangle.
pub fn shoelace_area(p: [f64; 2], q: [f64; 2], r: [f64; 2]) -> f64 {
    0.5 * ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1])).abs()
}

/// Unit normal of the hyperplane through `facet` (N points in R^N) from the
/// null space of its edge matrix, oriented away from `opposite`.
pub fn svd_outward_normal(facet: &[&[f64]], opposite: &[f64]) -> Vec<f64> {
    let n = facet[0].len();
    // Rows are the edge vectors; pad with a zero row so the SVD is square
    // and the last right-singular vector spans the null space.
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (r, p) in facet[1..].iter().enumerate() {
        for c in 0..n {
            m[(r, c)] = p[c] - facet[0][c];
        }
    }
    let svd = m.svd(false, true);
    let vt = svd.v_t.expect("requested V^T");
    let (min_idx, _) = svd
        .singular_values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty");
    let mut normal: Vec<f64> = (0..n).map(|c| vt[(min_idx, c)]).collect();
    let away: f64 = (0..n)
        .map(|c| normal[c] * (facet[0][c] - opposite[c]))
        .sum();
    if away < 0.0 {
        normal.iter_mut().for_each(|x| *x = -*x);
    }
    normal
}

/// Area derivative of a triangle under translation by `b`, by brute force:
/// shoelace area of the translated triangle sampled at `t = +-h`. For a
/// translation it is identically zero, whatever the triangle.
pub fn translated_area_difference(tri: [[f64; 2]; 3], b: [f64; 2], h: f64) -> f64 {
    let shift = |t: f64| tri.map(|p| [p[0] + t * b[0], p[1] + t * b[1]]);
    let [p, q, r] = shift(h);
    let [p2, q2, r2] = shift(-h);
    (shoelace_area(p, q, r) - shoelace_area(p2, q2, r2)) / (2.0 * h)
}

/// Line integral over the segment `p -> q` by two-point Gauss-Legendre,
/// exact for integrands of degree at most three along the segment.
pub fn segment_integral(p: [f64; 2], q: [f64; 2], integrand: impl Fn([f64; 2]) -> f64) -> f64 {
    // Two-point Gauss-Legendre on [0, 1].
    let nodes = [0.5 - 0.5 / 3f64.sqrt(), 0.5 + 0.5 / 3f64.sqrt()];
    let len = sq_dist(&p, &q).sqrt();
    nodes
        .iter()
        .map(|&s| integrand([p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])]))
        .sum::<f64>()
        * 0.5
        * len
}
