//! Barycentric machinery for triangles circumscribed about a fundamental
//! lattice cell, with closed-form lattice width and area.
//!
//! Throughout, the base is a lattice triangle p0, p1, p2 whose edge vectors
//! form a basis of Z^2, and the circumscribed triangle Q = conv{q0, q1, q2}
//! satisfies p_i = (1 - x_i) q_{i+1} + x_i q_{i+2} with 0 < x_i < 1.

use num_bigint::BigInt;

use crate::classify::{freecond_values, FreeCondResult};
use crate::exactnum::Scalar;
use crate::geom::{Point, Polygon};
use crate::latwidth::candidate_directions;
use crate::{Error, Result};

/// Circumscription parameters over a fundamental base cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleParams {
    x: [Scalar; 3],
    base: [Point; 3],
}

impl TriangleParams {
    pub fn new(x: [Scalar; 3], base: [(i64, i64); 3]) -> Result<Self> {
        for xi in &x {
            if xi.sign() <= 0 || *xi >= Scalar::one() {
                return Err(Error::ParamOutOfRange("x_i must lie strictly in (0, 1)"));
            }
        }
        let det = (base[1].0 - base[0].0) * (base[2].1 - base[0].1)
            - (base[1].1 - base[0].1) * (base[2].0 - base[0].0);
        if det.abs() != 1 {
            return Err(Error::ParamOutOfRange(
                "base must be a fundamental lattice triangle",
            ));
        }
        let base = base.map(|(a, b)| Point::from_ints(a, b));
        Ok(TriangleParams { x, base })
    }

    /// Parameters over the standard cell (0,0), (1,0), (0,1).
    pub fn standard(x: [Scalar; 3]) -> Result<Self> {
        TriangleParams::new(x, [(0, 0), (1, 0), (0, 1)])
    }

    pub fn coefficients(&self) -> &[Scalar; 3] {
        &self.x
    }

    pub fn base(&self) -> &[Point; 3] {
        &self.base
    }
}

/// x0 x1 x2 + (1 - x0)(1 - x1)(1 - x2); positive on (0,1)^3.
pub(crate) fn f_value(x: &[Scalar; 3]) -> Scalar {
    let one = Scalar::one();
    let prod = &(&x[0] * &x[1]) * &x[2];
    let coprod = &(&(&one - &x[0]) * &(&one - &x[1])) * &(&one - &x[2]);
    &prod + &coprod
}

/// A 3x3 matrix of barycentric rows (each row sums to one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaryMatrix {
    rows: [[Scalar; 3]; 3],
}

impl BaryMatrix {
    pub fn new(rows: [[Scalar; 3]; 3]) -> Result<Self> {
        let one = Scalar::one();
        for row in &rows {
            if &(&row[0] + &row[1]) + &row[2] != one {
                return Err(Error::Invalid("barycentric rows must sum to one"));
            }
        }
        let m = BaryMatrix { rows };
        if m.det().is_zero() {
            return Err(Error::Invalid("barycentric matrix is singular"));
        }
        Ok(m)
    }

    pub fn rows(&self) -> &[[Scalar; 3]; 3] {
        &self.rows
    }

    fn det(&self) -> Scalar {
        let r = &self.rows;
        let m2 = |a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar| &(a * d) - &(b * c);
        let t0 = &r[0][0] * &m2(&r[1][1], &r[1][2], &r[2][1], &r[2][2]);
        let t1 = &r[0][1] * &m2(&r[1][0], &r[1][2], &r[2][0], &r[2][2]);
        let t2 = &r[0][2] * &m2(&r[1][0], &r[1][1], &r[2][0], &r[2][1]);
        &(&t0 - &t1) + &t2
    }

    fn mul_vec(&self, v: &[Scalar; 3]) -> [Scalar; 3] {
        let row = |i: usize| {
            &(&(&self.rows[i][0] * &v[0]) + &(&self.rows[i][1] * &v[1]))
                + &(&self.rows[i][2] * &v[2])
        };
        [row(0), row(1), row(2)]
    }

    /// Barycentric coordinates of each point of `qs` with respect to the
    /// frame `ps`, as a matrix.
    pub fn from_frames(qs: &[Point; 3], ps: &[Point; 3]) -> Result<Self> {
        let mut rows = Vec::with_capacity(3);
        for q in qs {
            let (a, b, c) = bary_coords(q, &ps[0], &ps[1], &ps[2])?;
            rows.push([a, b, c]);
        }
        BaryMatrix::new([rows[0].clone(), rows[1].clone(), rows[2].clone()])
    }
}

/// Barycentric coordinates of p with respect to the affinely independent
/// frame (q0, q1, q2): the unique (x0, x1, x2) with sum 1 and
/// p = x0 q0 + x1 q1 + x2 q2.
pub fn bary_coords(p: &Point, q0: &Point, q1: &Point, q2: &Point) -> Result<(Scalar, Scalar, Scalar)> {
    let cross = |a: &Point, b: &Point, c: &Point| {
        let abx = &b.x - &a.x;
        let aby = &b.y - &a.y;
        let acx = &c.x - &a.x;
        let acy = &c.y - &a.y;
        &(&abx * &acy) - &(&aby * &acx)
    };
    let den = cross(q0, q1, q2);
    if den.is_zero() {
        return Err(Error::DegenerateFrame);
    }
    let x0 = &cross(p, q1, q2) / &den;
    let x1 = &cross(q0, p, q2) / &den;
    let x2 = &cross(q0, q1, p) / &den;
    debug_assert!(&(&x0 + &x1) + &x2 == Scalar::one());
    Ok((x0, x1, x2))
}

/// The labeled vertices q0, q1, q2 of the circumscribed triangle, solving
/// p_i = (1 - x_i) q_{i+1} + x_i q_{i+2} exactly.
pub fn circumscribed_vertices(params: &TriangleParams) -> Result<[Point; 3]> {
    let b = circumscription_matrix(params)?;
    let px: [Scalar; 3] = [
        params.base[0].x.clone(),
        params.base[1].x.clone(),
        params.base[2].x.clone(),
    ];
    let py: [Scalar; 3] = [
        params.base[0].y.clone(),
        params.base[1].y.clone(),
        params.base[2].y.clone(),
    ];
    let qx = b.mul_vec(&px);
    let qy = b.mul_vec(&py);
    Ok([
        Point::new(qx[0].clone(), qy[0].clone()),
        Point::new(qx[1].clone(), qy[1].clone()),
        Point::new(qx[2].clone(), qy[2].clone()),
    ])
}

/// The inverse barycentric matrix B with (q_i | 1) = B (p_i | 1).
pub fn circumscription_matrix(params: &TriangleParams) -> Result<BaryMatrix> {
    let x = &params.x;
    let one = Scalar::one();
    let f = f_value(x);
    if f.is_zero() {
        return Err(Error::SingularParams);
    }
    let c = |i: usize| &one - &x[i];
    let rows = [
        [
            &(-&(&c(1) * &x[2])) / &f,
            &(&x[0] * &x[2]) / &f,
            &(&c(0) * &c(1)) / &f,
        ],
        [
            &(&c(1) * &c(2)) / &f,
            &(-&(&c(2) * &x[0])) / &f,
            &(&x[0] * &x[1]) / &f,
        ],
        [
            &(&x[1] * &x[2]) / &f,
            &(&c(0) * &c(2)) / &f,
            &(-&(&c(0) * &x[1])) / &f,
        ],
    ];
    BaryMatrix::new(rows)
}

/// The circumscribed triangle as a canonical polygon.
pub fn circumscribed_triangle(params: &TriangleParams) -> Result<Polygon> {
    let q = circumscribed_vertices(params)?;
    Polygon::new(q.to_vec())
}

/// Lattice width of the triangle described by a barycentric matrix over a
/// fundamental base: min over nonconstant integer z of the cyclic
/// difference norm of B z, with the z candidates certified by mapping the
/// direction region of the reconstructed triangle.
pub fn tri_width_matrix(b: &BaryMatrix, base: [(i64, i64); 3]) -> Result<Scalar> {
    let det = (base[1].0 - base[0].0) * (base[2].1 - base[0].1)
        - (base[1].1 - base[0].1) * (base[2].0 - base[0].0);
    if det.abs() != 1 {
        return Err(Error::ParamOutOfRange(
            "base must be a fundamental lattice triangle",
        ));
    }
    let base_pts = base.map(|(p, q)| Point::from_ints(p, q));
    let px: [Scalar; 3] = [
        base_pts[0].x.clone(),
        base_pts[1].x.clone(),
        base_pts[2].x.clone(),
    ];
    let py: [Scalar; 3] = [
        base_pts[0].y.clone(),
        base_pts[1].y.clone(),
        base_pts[2].y.clone(),
    ];
    let qx = b.mul_vec(&px);
    let qy = b.mul_vec(&py);
    let q = Polygon::new(vec![
        Point::new(qx[0].clone(), qy[0].clone()),
        Point::new(qx[1].clone(), qy[1].clone()),
        Point::new(qx[2].clone(), qy[2].clone()),
    ])?;
    let mut best: Option<Scalar> = None;
    for u in candidate_directions(&q) {
        let z = base_pts
            .iter()
            .map(|p| p.dot_int(u.components()))
            .collect::<Vec<_>>();
        let t = b.mul_vec(&[z[0].clone(), z[1].clone(), z[2].clone()]);
        let diffs = [&t[1] - &t[0], &t[2] - &t[1], &t[0] - &t[2]];
        let norm = diffs.iter().map(Scalar::abs).max().unwrap();
        if best.as_ref().is_none_or(|w| norm < *w) {
            best = Some(norm);
        }
    }
    Ok(best.expect("candidate set is nonempty"))
}

/// Lattice width of the circumscribed triangle: closed forms under the
/// pairwise-sum conditions, otherwise the min-max quotient over the
/// certified candidate set.
pub fn tri_width_circumscribed(params: &TriangleParams) -> Result<Scalar> {
    let x = &params.x;
    let f = f_value(x);
    let one = Scalar::one();
    match freecond_values(x) {
        FreeCondResult::CondA => Ok(&x.iter().min().cloned().unwrap() / &f),
        FreeCondResult::CondB => {
            let m = x.iter().map(|xi| &one - xi).min().unwrap();
            Ok(&m / &f)
        }
        FreeCondResult::Neither => {
            let q = circumscribed_triangle(params)?;
            let mut best: Option<Scalar> = None;
            for u in candidate_directions(&q) {
                let z: Vec<BigInt> = params
                    .base
                    .iter()
                    .map(|p| {
                        p.dot_int(u.components())
                            .as_integer()
                            .expect("integer base")
                    })
                    .collect();
                let y = [
                    Scalar::from_bigint(&z[2] - &z[1]),
                    Scalar::from_bigint(&z[0] - &z[2]),
                    Scalar::from_bigint(&z[1] - &z[0]),
                ];
                let mut m = Scalar::zero();
                for i in 0..3 {
                    let term = &(&x[i] * &y[i]) + &(&(&one - &x[(i + 1) % 3]) * &y[(i + 1) % 3]);
                    m = m.max(term.abs());
                }
                if best.as_ref().is_none_or(|w| m < *w) {
                    best = Some(m);
                }
            }
            Ok(&best.expect("candidate set is nonempty") / &f)
        }
    }
}

/// Area of the circumscribed triangle: 1 / (2 f(x)).
pub fn tri_area_circumscribed(params: &TriangleParams) -> Scalar {
    &Scalar::one() / &(&Scalar::from_int(2) * &f_value(&params.x))
}

/// The extremal lattice-free triangle of maximal width over the given base
/// cell: all circumscription parameters equal to 1/sqrt(3).
pub fn hurkens_triangle(base: [(i64, i64); 3]) -> Result<Polygon> {
    let inv_sqrt3 = Scalar::quad(
        num_rational::BigRational::new(0.into(), 1.into()),
        num_rational::BigRational::new(1.into(), 3.into()),
        3,
    )?;
    let params = TriangleParams::new(
        [inv_sqrt3.clone(), inv_sqrt3.clone(), inv_sqrt3],
        base,
    )?;
    circumscribed_triangle(&params)
}
