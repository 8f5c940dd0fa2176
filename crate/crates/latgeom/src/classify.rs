//! Lattice-freeness, maximality, and the taxonomy of maximal lattice-free
//! bounded polygons: three triangle types and the quadrilateral, with splits
//! handled symbolically.
//!
//! Maximality of a bounded lattice-free polygon is decided by the edge
//! criterion: the relative interior of every edge must contain an integer
//! point. Any strictly larger lattice-free convex set would have to move an
//! edge past that point, putting it in the interior.

use std::fmt;

use num_traits::ToPrimitive;

use crate::exactnum::Scalar;
use crate::geom::{segment_lattice_points, LatticePointMode, Point, Polygon, Split};
use crate::latwidth::lattice_width;
use crate::triangles::TriangleParams;
use crate::{Error, Result};

/// Classification of a bounded polygon against the maximal lattice-free
/// taxonomy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaximalClass {
    NotLatticeFree,
    LatticeFreeNotMaximal,
    Type1Triangle,
    Type2Triangle,
    Type3Triangle,
    MaximalQuadrilateral,
}

impl fmt::Display for MaximalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Outcome of the pairwise-sum test on circumscription parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreeCondResult {
    /// x_i + x_j > 1 for all pairs.
    CondA,
    /// x_i + x_j < 1 for all pairs.
    CondB,
    Neither,
}

/// True iff the interior of K contains no integer point.
pub fn is_lattice_free(k: &Polygon) -> bool {
    k.lattice_points(LatticePointMode::Interior).is_empty()
}

fn is_integer_point(p: &Point) -> bool {
    p.as_integer_pair().is_some()
}

/// Integer points in the relative interior of each edge.
fn edge_relint_counts(k: &Polygon) -> Vec<usize> {
    k.edges()
        .map(|(p, q)| segment_lattice_points(p, q, false).len())
        .collect()
}

/// Full classification of a bounded polygon.
pub fn classify_maximal(k: &Polygon) -> Result<MaximalClass> {
    if !is_lattice_free(k) {
        return Ok(MaximalClass::NotLatticeFree);
    }
    let relint = edge_relint_counts(k);
    if relint.iter().any(|&c| c == 0) {
        return Ok(MaximalClass::LatticeFreeNotMaximal);
    }
    let n = k.vertices().len();
    if n >= 5 {
        return Err(Error::NotTriangleOrQuad(n));
    }
    if n == 4 {
        // A maximal lattice-free quadrilateral has exactly one integer
        // point per edge interior.
        assert!(
            relint.iter().all(|&c| c == 1),
            "lattice-free maximal quadrilateral with a doubly-marked edge"
        );
        return Ok(MaximalClass::MaximalQuadrilateral);
    }

    let verts = k.vertices();
    let all_integer = verts.iter().all(is_integer_point);
    let one_per_edge = relint.iter().all(|&c| c == 1);
    if all_integer && one_per_edge {
        return Ok(MaximalClass::Type1Triangle);
    }
    let boundary_total = k.lattice_points(LatticePointMode::Boundary).len();
    if boundary_total == 3 && one_per_edge {
        return Ok(MaximalClass::Type3Triangle);
    }
    // Type 2: some fractional vertex whose two incident edges carry exactly
    // one interior integer point each, while the opposite edge carries at
    // least two integer points in total.
    for i in 0..3 {
        if is_integer_point(&verts[i]) {
            continue;
        }
        let incident = [(i + 2) % 3, i]; // edges (v_{i-1}, v_i) and (v_i, v_{i+1})
        let opposite = (i + 1) % 3;
        let (p, q) = (&verts[(opposite) % 3], &verts[(opposite + 1) % 3]);
        let closed = segment_lattice_points(p, q, true).len();
        if incident.iter().all(|&e| relint[e] == 1) && closed >= 2 {
            return Ok(MaximalClass::Type2Triangle);
        }
    }
    unreachable!("maximal lattice-free triangle outside the three types")
}

/// Searches the width minimizers for a split containing K.
pub fn is_split_containing(k: &Polygon) -> Option<Split> {
    let lw = lattice_width(k);
    for u in &lw.minimizers {
        let (a1, a2) = u.components();
        let (min, max) = k.min_max_dot((a1, a2));
        let b = min.floor_int();
        if Scalar::from_bigint(&b + 1) >= max {
            return Some(Split {
                a1,
                a2,
                b: b.to_i64().expect("split offset overflows i64"),
            });
        }
    }
    None
}

/// The pairwise-sum test on the parameters, all comparisons exact.
pub fn freecond_check(params: &TriangleParams) -> FreeCondResult {
    freecond_values(params.coefficients())
}

pub(crate) fn freecond_values(x: &[Scalar; 3]) -> FreeCondResult {
    let one = Scalar::one();
    let pairs = [(0, 1), (0, 2), (1, 2)];
    if pairs.iter().all(|&(i, j)| &x[i] + &x[j] > one) {
        FreeCondResult::CondA
    } else if pairs.iter().all(|&(i, j)| &x[i] + &x[j] < one) {
        FreeCondResult::CondB
    } else {
        FreeCondResult::Neither
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;
    use crate::geom::alpha_diamond;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        Polygon::new(pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()).unwrap()
    }

    fn rp(pts: &[((i64, i64), (i64, i64))]) -> Polygon {
        Polygon::new(
            pts.iter()
                .map(|&(x, y)| Point::new(Scalar::ratio(x.0, x.1), Scalar::ratio(y.0, y.1)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn lattice_freeness() {
        assert!(is_lattice_free(&poly(&[(0, 0), (2, 0), (0, 2)])));
        assert!(!is_lattice_free(&poly(&[(0, 0), (2, 0), (2, 2), (0, 2)])));
        assert!(!is_lattice_free(&poly(&[
            (1, 0),
            (0, 1),
            (-1, 0),
            (0, -1)
        ])));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_maximal(&poly(&[(0, 0), (2, 0), (0, 2)])).unwrap(),
            MaximalClass::Type1Triangle
        );
        let quad = alpha_diamond(&Scalar::zero())
            .unwrap()
            .translate(&Scalar::ratio(1, 2), &Scalar::ratio(1, 2));
        assert_eq!(
            classify_maximal(&quad).unwrap(),
            MaximalClass::MaximalQuadrilateral
        );
        // fractional apex, two edges with one interior point, long base
        let t2 = rp(&[((0, 1), (0, 1)), ((3, 1), (0, 1)), ((0, 1), (3, 2))]);
        assert_eq!(
            classify_maximal(&t2).unwrap(),
            MaximalClass::Type2Triangle
        );
        assert_eq!(
            classify_maximal(&poly(&[(0, 0), (1, 0), (0, 1)])).unwrap(),
            MaximalClass::LatticeFreeNotMaximal
        );
        assert_eq!(
            classify_maximal(&poly(&[(0, 0), (2, 0), (2, 2), (0, 2)])).unwrap(),
            MaximalClass::NotLatticeFree
        );
    }

    #[test]
    fn hurkens_shape_is_type3() {
        let rq = |p: i64, q: i64| Rational::new(BigInt::from(p), BigInt::from(q));
        let v = |a: (i64, i64), b: (i64, i64)| Scalar::quad(rq(a.0, a.1), rq(b.0, b.1), 3).unwrap();
        let hurkens = Polygon::new(vec![
            Point::new(v((2, 3), (1, 3)), v((2, 3), (0, 1))),
            Point::new(v((-1, 3), (-1, 3)), v((2, 3), (1, 3))),
            Point::new(v((2, 3), (0, 1)), v((-1, 3), (-1, 3))),
        ])
        .unwrap();
        assert_eq!(
            classify_maximal(&hurkens).unwrap(),
            MaximalClass::Type3Triangle
        );
    }

    #[test]
    fn splits() {
        let strip = rp(&[
            ((0, 1), (1, 2)),
            ((5, 1), (1, 2)),
            ((5, 1), (3, 4)),
            ((0, 1), (3, 4)),
        ]);
        assert_eq!(
            is_split_containing(&strip),
            Some(Split { a1: 0, a2: 1, b: 0 })
        );
        assert_eq!(
            is_split_containing(&crate::geom::unit_square()),
            Some(Split { a1: 0, a2: 1, b: 0 })
        );
        assert_eq!(is_split_containing(&poly(&[(0, 0), (2, 0), (0, 2)])), None);
    }

    #[test]
    fn freecond_cases() {
        let third_sqrt3 = Scalar::quad(Rational::zero(), rqn(1, 3), 3).unwrap();
        let x = [
            third_sqrt3.clone(),
            third_sqrt3.clone(),
            third_sqrt3.clone(),
        ];
        assert_eq!(freecond_values(&x), FreeCondResult::CondA);
        let y = x.map(|v| &Scalar::one() - &v);
        assert_eq!(freecond_values(&y), FreeCondResult::CondB);
        let half = [
            Scalar::ratio(1, 2),
            Scalar::ratio(1, 2),
            Scalar::ratio(1, 2),
        ];
        assert_eq!(freecond_values(&half), FreeCondResult::Neither);
    }

    fn rqn(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }
}
