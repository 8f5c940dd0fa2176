//! Convex polygon kernel over exact scalars.
//!
//! Polygons are bounded, strictly convex, counterclockwise, and stored in
//! canonical form (lexicographically smallest vertex first) so structural
//! equality is geometric equality. All predicates are exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::exactnum::Scalar;
use crate::{Error, Result};

/// A point with exact coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Scalar::from_int(x), Scalar::from_int(y))
    }

    pub fn from_bigints(x: &BigInt, y: &BigInt) -> Self {
        Point::new(Scalar::from_bigint(x.clone()), Scalar::from_bigint(y.clone()))
    }

    /// u1*x + u2*y for an integer direction.
    pub fn dot_int(&self, u: (i64, i64)) -> Scalar {
        &(&Scalar::from_int(u.0) * &self.x) + &(&Scalar::from_int(u.1) * &self.y)
    }

    pub fn as_integer_pair(&self) -> Option<(BigInt, BigInt)> {
        Some((self.x.as_integer()?, self.y.as_integer()?))
    }

    fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A primitive integer direction, stored lexicographically positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction {
    u1: i64,
    u2: i64,
}

impl Direction {
    /// Normalizes (u1, u2) to the primitive lexicographically positive
    /// representative of {u, -u}. Panics on the zero vector.
    pub fn new(u1: i64, u2: i64) -> Self {
        assert!(u1 != 0 || u2 != 0, "zero direction");
        let g = u1.abs().gcd(&u2.abs());
        let (mut u1, mut u2) = (u1 / g, u2 / g);
        if u1 < 0 || (u1 == 0 && u2 < 0) {
            u1 = -u1;
            u2 = -u2;
        }
        Direction { u1, u2 }
    }

    pub fn components(&self) -> (i64, i64) {
        (self.u1, self.u2)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u1, self.u2)
    }
}

/// The strip b <= a1 x1 + a2 x2 <= b + 1 with coprime (a1, a2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub a1: i64,
    pub a2: i64,
    pub b: i64,
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} <= {}*x1 + {}*x2 <= {}",
            self.b,
            self.a1,
            self.a2,
            self.b + 1
        )
    }
}

/// Exact sign of the cross product (b - a) x (c - a).
pub fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    let abx = &b.x - &a.x;
    let aby = &b.y - &a.y;
    let acx = &c.x - &a.x;
    let acy = &c.y - &a.y;
    (&(&abx * &acy) - &(&aby * &acx)).sign()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Containment {
    Outside,
    Boundary,
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticePointMode {
    All,
    Interior,
    Boundary,
}

/// A bounded, strictly convex polygon in canonical CCW form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    /// Validates and canonicalizes a vertex cycle. The cycle may be given
    /// clockwise; it is reversed. Duplicate or collinear consecutive
    /// vertices are rejected.
    pub fn new(vertices: Vec<Point>) -> Result<Polygon> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon("fewer than three vertices"));
        }
        common_radicand_of(&vertices)?;
        let n = vertices.len();
        let mut signs = Vec::with_capacity(n);
        for i in 0..n {
            signs.push(orient(
                &vertices[i],
                &vertices[(i + 1) % n],
                &vertices[(i + 2) % n],
            ));
        }
        let mut vertices = vertices;
        if signs.iter().all(|&s| s < 0) {
            vertices.reverse();
        } else if !signs.iter().all(|&s| s > 0) {
            return Err(Error::InvalidPolygon("not strictly convex"));
        }
        let first = vertices
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| (&p.x, &p.y).cmp(&(&q.x, &q.y)))
            .map(|(i, _)| i)
            .unwrap();
        vertices.rotate_left(first);
        Ok(Polygon { vertices })
    }

    /// Strictly convex hull of a point set (collinear points dropped).
    pub fn hull(points: &[Point]) -> Result<Polygon> {
        common_radicand_of(points)?;
        let mut pts: Vec<Point> = points.to_vec();
        pts.sort_by(|p, q| (&p.x, &p.y).cmp(&(&q.x, &q.y)));
        pts.dedup();
        if pts.len() < 3 {
            return Err(Error::Degenerate);
        }
        let chain = |iter: &mut dyn Iterator<Item = &Point>| {
            let mut out: Vec<Point> = Vec::new();
            for p in iter {
                while out.len() >= 2
                    && orient(&out[out.len() - 2], &out[out.len() - 1], p) <= 0
                {
                    out.pop();
                }
                out.push(p.clone());
            }
            out
        };
        let lower = chain(&mut pts.iter());
        let mut upper = chain(&mut pts.iter().rev());
        let mut hull = lower;
        hull.pop();
        upper.pop();
        hull.extend(upper);
        if hull.len() < 3 {
            return Err(Error::Degenerate);
        }
        Polygon::new(hull)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// The radicand shared by all irrational coordinates (0 if none).
    pub fn radicand(&self) -> u64 {
        common_radicand_of(&self.vertices).expect("validated at construction")
    }

    /// Exact area by the shoelace formula.
    pub fn area(&self) -> Scalar {
        let mut twice = Scalar::zero();
        for (p, q) in self.edges() {
            twice = &twice + &(&(&p.x * &q.y) - &(&q.x * &p.y));
        }
        debug_assert!(twice.sign() > 0);
        &twice / &Scalar::from_int(2)
    }

    /// h(K, u) = max u.x over K, for an integer direction.
    pub fn support_int(&self, u: (i64, i64)) -> Scalar {
        self.vertices
            .iter()
            .map(|v| v.dot_int(u))
            .max()
            .expect("nonempty")
    }

    /// Width function w(K, u) = max u.x - min u.x, exact.
    pub fn width_function(&self, u: &Direction) -> Scalar {
        self.width_raw(u.components())
    }

    pub(crate) fn width_raw(&self, u: (i64, i64)) -> Scalar {
        let dots: Vec<Scalar> = self.vertices.iter().map(|v| v.dot_int(u)).collect();
        let max = dots.iter().max().unwrap();
        let min = dots.iter().min().unwrap();
        max - min
    }

    pub(crate) fn min_max_dot(&self, u: (i64, i64)) -> (Scalar, Scalar) {
        let dots: Vec<Scalar> = self.vertices.iter().map(|v| v.dot_int(u)).collect();
        let max = dots.iter().max().unwrap().clone();
        let min = dots.iter().min().unwrap().clone();
        (min, max)
    }

    /// DK = {x - y : x, y in K}; origin-symmetric with h(DK, u) = w(K, u).
    pub fn difference_body(&self) -> Polygon {
        let mut diffs = Vec::new();
        for p in &self.vertices {
            for q in &self.vertices {
                diffs.push(p.sub(q));
            }
        }
        Polygon::hull(&diffs).expect("difference body of a polygon is two-dimensional")
    }

    /// K* = {u : h(K, u) <= 1}; requires the origin strictly inside K.
    pub fn polar(&self) -> Result<Polygon> {
        let o = Point::from_ints(0, 0);
        for (p, q) in self.edges() {
            if orient(p, q, &o) <= 0 {
                return Err(Error::OriginNotInterior);
            }
        }
        let mut dual = Vec::new();
        for (p, q) in self.edges() {
            // u with u.p = u.q = 1
            let det = &(&p.x * &q.y) - &(&p.y * &q.x);
            let u1 = &(&q.y - &p.y) / &det;
            let u2 = &(&p.x - &q.x) / &det;
            dual.push(Point::new(u1, u2));
        }
        Polygon::new(dual)
    }

    /// Exact point classification against the closed polygon.
    pub fn contains(&self, p: &Point) -> Containment {
        let mut on_boundary = false;
        for (a, b) in self.edges() {
            match orient(a, b, p) {
                s if s < 0 => return Containment::Outside,
                0 => on_boundary = true,
                _ => {}
            }
        }
        if on_boundary {
            Containment::Boundary
        } else {
            Containment::Interior
        }
    }

    /// Enumerates integer points of the polygon by exact row scanning.
    pub fn lattice_points(&self, mode: LatticePointMode) -> Vec<Point> {
        let ys: Vec<&Scalar> = self.vertices.iter().map(|v| &v.y).collect();
        let ymin = (*ys.iter().min().unwrap()).clone();
        let ymax = (*ys.iter().max().unwrap()).clone();
        let mut out = Vec::new();
        let mut iy = ymin.ceil_int();
        let iy_end = ymax.floor_int();
        while iy <= iy_end {
            let yv = Scalar::from_bigint(iy.clone());
            let mut xs: Vec<Scalar> = Vec::new();
            for (p, q) in self.edges() {
                let sp = (&p.y - &yv).sign();
                let sq = (&q.y - &yv).sign();
                if sp == 0 {
                    xs.push(p.x.clone());
                }
                if sp != 0 && sq != 0 && sp != sq {
                    // proper crossing
                    let t = &(&yv - &p.y) / &(&q.y - &p.y);
                    xs.push(&p.x + &(&t * &(&q.x - &p.x)));
                }
            }
            if !xs.is_empty() {
                let xlo = xs.iter().min().unwrap().clone();
                let xhi = xs.iter().max().unwrap().clone();
                let mut ix = xlo.ceil_int();
                let ix_end = xhi.floor_int();
                while ix <= ix_end {
                    let p = Point::from_bigints(&ix, &iy);
                    let keep = match (self.contains(&p), mode) {
                        (Containment::Outside, _) => false,
                        (_, LatticePointMode::All) => true,
                        (Containment::Interior, LatticePointMode::Interior) => true,
                        (Containment::Boundary, LatticePointMode::Boundary) => true,
                        _ => false,
                    };
                    if keep {
                        out.push(p);
                    }
                    ix += 1;
                }
            }
            iy += 1;
        }
        out
    }

    /// Image under x -> M x + t with |det M| = 1.
    pub fn unimodular_apply(&self, m: [[i64; 2]; 2], t: (i64, i64)) -> Result<Polygon> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        let mapped = self
            .vertices
            .iter()
            .map(|v| {
                Point::new(
                    &v.dot_int((m[0][0], m[0][1])) + &Scalar::from_int(t.0),
                    &v.dot_int((m[1][0], m[1][1])) + &Scalar::from_int(t.1),
                )
            })
            .collect();
        Polygon::new(mapped)
    }

    pub fn translate(&self, dx: &Scalar, dy: &Scalar) -> Polygon {
        let moved = self
            .vertices
            .iter()
            .map(|v| Point::new(&v.x + dx, &v.y + dy))
            .collect();
        Polygon::new(moved).expect("translate preserves validity")
    }

    /// Scales about the origin by a positive factor.
    pub fn scale(&self, f: &Scalar) -> Polygon {
        assert!(f.sign() > 0, "scale factor must be positive");
        let scaled = self
            .vertices
            .iter()
            .map(|v| Point::new(f * &v.x, f * &v.y))
            .collect();
        Polygon::new(scaled).expect("scaling preserves validity")
    }

    /// Average of the vertices (center of a symmetric polygon).
    pub fn vertex_centroid(&self) -> Point {
        let n = Scalar::from_int(self.vertices.len() as i64);
        let mut sx = Scalar::zero();
        let mut sy = Scalar::zero();
        for v in &self.vertices {
            sx = &sx + &v.x;
            sy = &sy + &v.y;
        }
        Point::new(&sx / &n, &sy / &n)
    }

    /// The symmetry center, if the vertex set is centrally symmetric.
    pub fn symmetry_center(&self) -> Option<Point> {
        let c = self.vertex_centroid();
        let mut reflected: Vec<Point> = self
            .vertices
            .iter()
            .map(|v| Point::new(&(&c.x + &c.x) - &v.x, &(&c.y + &c.y) - &v.y))
            .collect();
        reflected.sort();
        let mut original = self.vertices.clone();
        original.sort();
        (original == reflected).then_some(c)
    }

    pub fn bounding_box(&self) -> (Scalar, Scalar, Scalar, Scalar) {
        let xs: Vec<&Scalar> = self.vertices.iter().map(|v| &v.x).collect();
        let ys: Vec<&Scalar> = self.vertices.iter().map(|v| &v.y).collect();
        (
            (*xs.iter().min().unwrap()).clone(),
            (*ys.iter().min().unwrap()).clone(),
            (*xs.iter().max().unwrap()).clone(),
            (*ys.iter().max().unwrap()).clone(),
        )
    }

    /// max over vertices of the infinity norm, as an exact scalar.
    pub fn inf_norm_radius(&self) -> Scalar {
        self.vertices
            .iter()
            .flat_map(|v| [v.x.abs(), v.y.abs()])
            .max()
            .expect("nonempty")
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

fn common_radicand_of(points: &[Point]) -> Result<u64> {
    let mut d = 0u64;
    for p in points {
        for coord in [&p.x, &p.y] {
            let dc = coord.radicand();
            if dc != 0 {
                if d == 0 {
                    d = dc;
                } else if d != dc {
                    return Err(Error::MixedRadicand(d, dc));
                }
            }
        }
    }
    Ok(d)
}

/// Integer points on the closed segment [a, b], optionally excluding the
/// endpoints. Exact for rational and quadratic-irrational endpoints.
pub fn segment_lattice_points(a: &Point, b: &Point, include_endpoints: bool) -> Vec<Point> {
    let mut out = Vec::new();
    let mut push = |p: Point| {
        if include_endpoints || (p != *a && p != *b) {
            out.push(p);
        }
    };
    if a.y == b.y {
        if let Some(iy) = a.y.as_integer() {
            let (xlo, xhi) = if a.x <= b.x {
                (&a.x, &b.x)
            } else {
                (&b.x, &a.x)
            };
            let mut ix = xlo.ceil_int();
            let end = xhi.floor_int();
            while ix <= end {
                push(Point::from_bigints(&ix, &iy));
                ix += 1;
            }
        }
        return out;
    }
    let (lo, hi) = if a.y <= b.y { (a, b) } else { (b, a) };
    let mut iy = lo.y.ceil_int();
    let end = hi.y.floor_int();
    while iy <= end {
        let yv = Scalar::from_bigint(iy.clone());
        let t = &(&yv - &a.y) / &(&b.y - &a.y);
        let x = &a.x + &(&t * &(&b.x - &a.x));
        if let Some(ix) = x.as_integer() {
            push(Point::from_bigints(&ix, &iy));
        }
        iy += 1;
    }
    out
}

/// The standard unit square [0,1]^2.
pub fn unit_square() -> Polygon {
    Polygon::new(vec![
        Point::from_ints(0, 0),
        Point::from_ints(1, 0),
        Point::from_ints(1, 1),
        Point::from_ints(0, 1),
    ])
    .unwrap()
}

/// K_alpha = conv{+-(1, alpha), +-(0, 1)} for 0 <= alpha < 1.
pub fn alpha_diamond(alpha: &Scalar) -> Result<Polygon> {
    if alpha.sign() < 0 || *alpha >= Scalar::one() {
        return Err(Error::AlphaOutOfRange);
    }
    Polygon::new(vec![
        Point::new(Scalar::one(), alpha.clone()),
        Point::new(Scalar::zero(), Scalar::one()),
        Point::new(-Scalar::one(), -alpha.clone()),
        Point::new(Scalar::zero(), -Scalar::one()),
    ])
}
