//! Shared helpers for the integration suites: random polygon generators and
//! the edge-push maximality oracle.

use latgeom::classify::is_lattice_free;
use latgeom::exactnum::{Rational, Scalar};
use latgeom::geom::{Point, Polygon};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::Rng;

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Hull of a handful of random rational points; None when degenerate.
pub fn random_rational_polygon(rng: &mut StdRng, num: i64, den: i64) -> Option<Polygon> {
    let pts: Vec<Point> = (0..rng.gen_range(3..8))
        .map(|_| {
            Point::new(
                Scalar::ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den)),
                Scalar::ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den)),
            )
        })
        .collect();
    Polygon::hull(&pts).ok()
}

/// A random origin-symmetric polygon: hull of {+-p_i}.
pub fn random_symmetric_polygon(rng: &mut StdRng, num: i64, den: i64) -> Option<Polygon> {
    let mut pts = Vec::new();
    for _ in 0..rng.gen_range(2..5) {
        let p = Point::new(
            Scalar::ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den)),
            Scalar::ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den)),
        );
        pts.push(Point::new(-p.x.clone(), -p.y.clone()));
        pts.push(p);
    }
    Polygon::hull(&pts).ok()
}

/// A random lattice-free polygon with vertex denominators dividing 8 and
/// coordinates within [-4, 4], as required by the push oracle.
pub fn random_small_lattice_free(rng: &mut StdRng) -> Option<Polygon> {
    let k = if rng.gen_bool(0.4) {
        // a maximal representative, possibly sheared and shifted a little
        let rep: Polygon = match rng.gen_range(0..4) {
            0 => Polygon::new(vec![
                Point::from_ints(0, 0),
                Point::from_ints(2, 0),
                Point::from_ints(0, 2),
            ])
            .unwrap(),
            1 => Polygon::new(vec![
                Point::from_ints(0, 0),
                Point::from_ints(3, 0),
                Point::new(Scalar::zero(), Scalar::ratio(3, 2)),
            ])
            .unwrap(),
            2 => {
                let x = Scalar::ratio(3, 5);
                let params =
                    latgeom::triangles::TriangleParams::standard([x.clone(), x.clone(), x])
                        .unwrap();
                latgeom::triangles::circumscribed_triangle(&params).unwrap()
            }
            _ => latgeom::geom::alpha_diamond(&Scalar::zero())
                .unwrap()
                .translate(&Scalar::ratio(1, 2), &Scalar::ratio(1, 2)),
        };
        let t = (rng.gen_range(-1..=1), rng.gen_range(-1..=1));
        rep.unimodular_apply([[1, 0], [0, 1]], t).unwrap()
    } else {
        let den_choices = [1i64, 2, 4, 8];
        let pts: Vec<Point> = (0..rng.gen_range(3..7))
            .map(|_| {
                let dx = den_choices[rng.gen_range(0..4)];
                let dy = den_choices[rng.gen_range(0..4)];
                Point::new(
                    Scalar::ratio(rng.gen_range(-4 * dx..=4 * dx), dx),
                    Scalar::ratio(rng.gen_range(-4 * dy..=4 * dy), dy),
                )
            })
            .collect();
        Polygon::hull(&pts).ok()?
    };
    is_lattice_free(&k).then_some(k)
}

/// Outward edge lines of a rational polygon: primitive integer normals n
/// with n . x <= c on K.
fn edge_lines(k: &Polygon) -> Vec<(i64, i64, Rational)> {
    let mut lines = Vec::new();
    for (p, q) in k.edges() {
        let dx = (&q.x - &p.x).as_rational().expect("rational input").clone();
        let dy = (&q.y - &p.y).as_rational().expect("rational input").clone();
        // outward normal of a CCW edge
        let (nx, ny) = (dy, -dx);
        let den = nx.denom().lcm(ny.denom());
        let ix = (&nx * Rational::from_integer(den.clone())).to_integer();
        let iy = (&ny * Rational::from_integer(den.clone())).to_integer();
        let g = ix.gcd(&iy);
        let (ix, iy) = ((&ix / &g).to_i64().unwrap(), (&iy / &g).to_i64().unwrap());
        let c = ratio(ix, 1) * p.x.as_rational().unwrap()
            + ratio(iy, 1) * p.y.as_rational().unwrap();
        lines.push((ix, iy, c));
    }
    lines
}

fn intersect(a: &(i64, i64, Rational), b: &(i64, i64, Rational)) -> Point {
    let det = ratio(a.0 * b.1 - a.1 * b.0, 1);
    assert!(!det.is_zero(), "adjacent edges are never parallel");
    let x = (&a.2 * ratio(b.1, 1) - &b.2 * ratio(a.1, 1)) / &det;
    let y = (&b.2 * ratio(a.0, 1) - &a.2 * ratio(b.0, 1)) / &det;
    Point::new(Scalar::Rational(x), Scalar::Rational(y))
}

/// Pushes edge j outward by 1/64 in functional terms and rebuilds the
/// polygon from consecutive line intersections.
pub fn push_edge(k: &Polygon, j: usize) -> Polygon {
    let mut lines = edge_lines(k);
    for (_, _, c) in &lines {
        assert!(
            c.denom() < &BigInt::from(64),
            "push oracle requires vertex denominators below 64"
        );
    }
    lines[j].2 += ratio(1, 64);
    let n = lines.len();
    let vertices: Vec<Point> = (0..n)
        .map(|i| intersect(&lines[i], &lines[(i + 1) % n]))
        .collect();
    Polygon::new(vertices).expect("small pushes keep the polygon valid")
}

/// The brute maximality oracle: K (lattice-free) is maximal iff pushing any
/// single edge outward by 1/64 introduces an interior integer point.
pub fn push_oracle_maximal(k: &Polygon) -> bool {
    assert!(is_lattice_free(k));
    let n = k.vertices().len();
    (0..n).all(|j| !is_lattice_free(&push_edge(k, j)))
}
