//! Covering minima: mu_1 exactly via the lattice width, mu_2 as a certified
//! rational interval by adaptive branch-and-bound over the fundamental
//! square, plus the exact diamond-family formula, tiling tests, and the
//! normal form of parallelograms that tile by integer translates.

use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::exactnum::{Rational, Scalar};
use crate::geom::{Point, Polygon};
use crate::latwidth::lattice_width;
use crate::{Error, Result};

/// mu_1(K) = 1 / lattice width, exact.
pub fn mu1(k: &Polygon) -> Scalar {
    &Scalar::one() / &lattice_width(k).width
}

fn require_origin_symmetric(k: &Polygon) -> Result<()> {
    match k.symmetry_center() {
        Some(c) if c == Point::from_ints(0, 0) => Ok(()),
        _ => Err(Error::NotSymmetric),
    }
}

/// Minkowski functional of an origin-symmetric polygon:
/// |x|_K = min{ t >= 0 : x in tK } = h(K*, x).
pub fn minkowski_norm(k: &Polygon, x: &Point) -> Result<Scalar> {
    require_origin_symmetric(k)?;
    let kstar = k.polar()?;
    Ok(gauge(kstar.vertices(), &x.x, &x.y))
}

fn gauge(kstar_vertices: &[Point], wx: &Scalar, wy: &Scalar) -> Scalar {
    kstar_vertices
        .iter()
        .map(|v| &(&v.x * wx) + &(&v.y * wy))
        .max()
        .expect("polar body has vertices")
}

/// mu_2 of K_alpha = conv{+-(1, alpha), +-(0, 1)}: (1/2) max{1+alpha, 2-alpha}.
pub fn mu2_diamond(alpha: &Scalar) -> Result<Scalar> {
    if alpha.sign() < 0 || *alpha >= Scalar::one() {
        return Err(Error::AlphaOutOfRange);
    }
    let one = Scalar::one();
    let two = Scalar::from_int(2);
    let hi = (&one + alpha).max(&two - alpha);
    Ok(&hi / &two)
}

/// The deepest point of the integer covering by K_alpha: a point attaining
/// max_x min_z |x - z|_{K_alpha}. Equalizing the two competing covering
/// branches in the diamond analysis puts it at (1/2, 1/2) for
/// alpha <= 1/2; the unimodular map (x, y) -> (x, x - y), which exchanges
/// K_alpha and K_{1-alpha}, carries it to (1/2, 0) for alpha > 1/2.
pub fn diamond_deep_point(alpha: &Scalar) -> Result<Point> {
    if alpha.sign() < 0 || *alpha >= Scalar::one() {
        return Err(Error::AlphaOutOfRange);
    }
    let half = Scalar::ratio(1, 2);
    if *alpha <= half {
        Ok(Point::new(half.clone(), half))
    } else {
        Ok(Point::new(half, Scalar::zero()))
    }
}

/// A certified enclosure of mu_2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mu2Interval {
    pub lo: Rational,
    pub hi: Rational,
}

/// A dyadic rational n / 2^e.
fn dyadic(r: &Rational) -> Option<(i128, u32)> {
    let den = r.denom().to_u128()?;
    if !den.is_power_of_two() {
        return None;
    }
    Some((r.numer().to_i128()?, den.trailing_zeros()))
}

/// Depth evaluation over scaled 128-bit integers, available whenever the
/// body is rational and the magnitudes stay comfortably inside i128.
struct IntDepth {
    /// Polar vertices scaled by `den`.
    verts: Vec<(i128, i128)>,
    den: i128,
    /// Per-axis operator bounds: |y|_K >= |y_1| / rx and >= |y_2| / ry.
    rx: Rational,
    ry: Rational,
    cache: std::cell::RefCell<std::collections::HashMap<(i128, u32, i128, u32), Rational>>,
    evals: std::cell::Cell<usize>,
}

impl IntDepth {
    fn new(k: &Polygon) -> Option<IntDepth> {
        let kstar = k.polar().ok()?;
        let mut den = BigInt::from(1);
        let mut rats = Vec::new();
        for v in kstar.vertices() {
            let x = v.x.as_rational()?.clone();
            let y = v.y.as_rational()?.clone();
            den = num_integer::lcm(den.clone(), x.denom().clone());
            den = num_integer::lcm(den, y.denom().clone());
            rats.push((x, y));
        }
        let den_i = den.to_i128().filter(|d| *d < 1i128 << 30)?;
        let mut verts = Vec::new();
        for (x, y) in rats {
            let sx = (x * Rational::from_integer(den.clone())).to_integer();
            let sy = (y * Rational::from_integer(den.clone())).to_integer();
            let sx = sx.to_i128().filter(|v| v.abs() < 1i128 << 40)?;
            let sy = sy.to_i128().filter(|v| v.abs() < 1i128 << 40)?;
            verts.push((sx, sy));
        }
        let rx = k
            .vertices()
            .iter()
            .map(|v| v.x.abs())
            .max()?
            .as_rational()?
            .clone();
        let ry = k
            .vertices()
            .iter()
            .map(|v| v.y.abs())
            .max()?
            .as_rational()?
            .clone();
        Some(IntDepth {
            verts,
            den: den_i,
            rx,
            ry,
            cache: Default::default(),
            evals: Default::default(),
        })
    }

    /// max over polar vertices of the scaled dot product.
    fn gauge_scaled(&self, nx: i128, ny: i128) -> i128 {
        self.evals.set(self.evals.get() + 1);
        self.verts
            .iter()
            .map(|&(vx, vy)| vx * nx + vy * ny)
            .max()
            .expect("polar body has vertices")
    }

    /// min over z in Z^2 of |x - z|_K for a dyadic point, exact.
    fn depth(&self, x: &Rational, y: &Rational) -> Rational {
        let (nx, ex) = dyadic(x).expect("cell corners are dyadic");
        let (ny, ey) = dyadic(y).expect("cell corners are dyadic");
        let key = (nx, ex, ny, ey);
        if let Some(hit) = self.cache.borrow().get(&key) {
            return hit.clone();
        }
        // common exponent
        let e = ex.max(ey);
        let (a, b) = (nx << (e - ex), ny << (e - ey));
        let unit = 1i128 << e;
        let mut best: Option<i128> = None;
        let (f1, f2) = (a.div_euclid(unit), b.div_euclid(unit));
        for z1 in f1..=f1 + 1 {
            for z2 in f2..=f2 + 1 {
                let g = self.gauge_scaled(a - z1 * unit, b - z2 * unit);
                if best.is_none_or(|m| g < m) {
                    best = Some(g);
                }
            }
        }
        let mut best = best.unwrap();
        // anything better lies within the per-axis radius box
        let scale = Rational::new(BigInt::from(best), BigInt::from(self.den) * BigInt::from(unit));
        let row = |r: &Rational, center: &Rational| -> (i128, i128) {
            let lo = (center - r * &scale).ceil().to_integer().to_i128().unwrap();
            let hi = (center + r * &scale).floor().to_integer().to_i128().unwrap();
            (lo, hi)
        };
        let (lo1, hi1) = row(&self.rx, x);
        let (lo2, hi2) = row(&self.ry, y);
        for z1 in lo1..=hi1 {
            for z2 in lo2..=hi2 {
                let g = self.gauge_scaled(a - z1 * unit, b - z2 * unit);
                if g < best {
                    best = g;
                }
            }
        }
        let value = Rational::new(
            BigInt::from(best),
            BigInt::from(self.den) * BigInt::from(unit),
        );
        self.cache.borrow_mut().insert(key, value.clone());
        value
    }

    fn cell_bounds(&self, cx: &Rational, cy: &Rational, h: &Rational) -> (Rational, Rational) {
        let corners: Vec<(Rational, Rational)> = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
            .iter()
            .map(|&(sx, sy)| {
                (
                    cx + h * Rational::from_integer(BigInt::from(sx)),
                    cy + h * Rational::from_integer(BigInt::from(sy)),
                )
            })
            .collect();
        let depths: Vec<Rational> = corners.iter().map(|(x, y)| self.depth(x, y)).collect();
        let lo_cell = depths.iter().max().unwrap().clone();

        // candidate z set: per-axis radius boxes around each corner
        let mut zs = std::collections::BTreeSet::new();
        for ((x, y), g) in corners.iter().zip(&depths) {
            let row = |r: &Rational, center: &Rational| -> (i128, i128) {
                let lo = (center - r * g).floor().to_integer().to_i128().unwrap();
                let hi = (center + r * g).ceil().to_integer().to_i128().unwrap();
                (lo, hi)
            };
            let (lo1, hi1) = row(&self.rx, x);
            let (lo2, hi2) = row(&self.ry, y);
            for z1 in lo1..=hi1 {
                for z2 in lo2..=hi2 {
                    zs.insert((z1, z2));
                }
            }
        }

        // common scaled coordinates for the four corners
        let scaled: Vec<(i128, u32)> = corners
            .iter()
            .flat_map(|(x, y)| [dyadic(x).unwrap(), dyadic(y).unwrap()])
            .collect();
        let e = scaled.iter().map(|&(_, e)| e).max().unwrap();
        let unit = 1i128 << e;
        let nums: Vec<i128> = scaled.iter().map(|&(n, en)| n << (e - en)).collect();

        let mut ub: Option<i128> = None;
        for (z1, z2) in zs {
            let mut corner_max: Option<i128> = None;
            for c in 0..4 {
                let g = self.gauge_scaled(nums[2 * c] - z1 * unit, nums[2 * c + 1] - z2 * unit);
                if corner_max.is_none_or(|m| g > m) {
                    corner_max = Some(g);
                }
            }
            let m = corner_max.unwrap();
            if ub.is_none_or(|u| m < u) {
                ub = Some(m);
            }
        }
        let ub = Rational::new(
            BigInt::from(ub.expect("nonempty candidate set")),
            BigInt::from(self.den) * BigInt::from(unit),
        );
        (lo_cell, ub)
    }
}

/// Depth evaluation over exact scalars; the general fallback for bodies
/// with quadratic-irrational coordinates.
struct ExactDepth {
    kstar_vertices: Vec<Point>,
    rx: Scalar,
    ry: Scalar,
    evals: std::cell::Cell<usize>,
}

impl ExactDepth {
    fn new(k: &Polygon) -> Result<Self> {
        Ok(ExactDepth {
            kstar_vertices: k.polar()?.vertices().to_vec(),
            rx: k.vertices().iter().map(|v| v.x.abs()).max().unwrap(),
            ry: k.vertices().iter().map(|v| v.y.abs()).max().unwrap(),
            evals: Default::default(),
        })
    }

    fn gauge_at(&self, wx: &Scalar, wy: &Scalar) -> Scalar {
        self.evals.set(self.evals.get() + 1);
        gauge(&self.kstar_vertices, wx, wy)
    }

    fn depth(&self, x1: &Rational, x2: &Rational) -> Scalar {
        let sx1 = Scalar::Rational(x1.clone());
        let sx2 = Scalar::Rational(x2.clone());
        let f1 = x1.floor();
        let f2 = x2.floor();
        let mut best: Option<Scalar> = None;
        for dz1 in 0..=1 {
            for dz2 in 0..=1 {
                let z1 = Scalar::Rational(&f1 + Rational::from_integer(BigInt::from(dz1)));
                let z2 = Scalar::Rational(&f2 + Rational::from_integer(BigInt::from(dz2)));
                let n = self.gauge_at(&(&sx1 - &z1), &(&sx2 - &z2));
                if best.as_ref().is_none_or(|b| n < *b) {
                    best = Some(n);
                }
            }
        }
        let mut best = best.unwrap();
        let rho_x = &self.rx * &best;
        let rho_y = &self.ry * &best;
        let lo1 = (&sx1 - &rho_x).ceil_int();
        let hi1 = (&sx1 + &rho_x).floor_int();
        let lo2 = (&sx2 - &rho_y).ceil_int();
        let hi2 = (&sx2 + &rho_y).floor_int();
        let mut z1 = lo1;
        while z1 <= hi1 {
            let mut z2 = lo2.clone();
            while z2 <= hi2 {
                let n = self.gauge_at(
                    &(&sx1 - &Scalar::from_bigint(z1.clone())),
                    &(&sx2 - &Scalar::from_bigint(z2.clone())),
                );
                if n < best {
                    best = n;
                }
                z2 += 1;
            }
            z1 += 1;
        }
        best
    }

    fn cell_bounds(&self, cx: &Rational, cy: &Rational, h: &Rational) -> (Scalar, Scalar) {
        let corners: Vec<(Rational, Rational)> = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
            .iter()
            .map(|&(sx, sy)| {
                (
                    cx + h * Rational::from_integer(BigInt::from(sx)),
                    cy + h * Rational::from_integer(BigInt::from(sy)),
                )
            })
            .collect();
        let depths: Vec<Scalar> = corners.iter().map(|(x, y)| self.depth(x, y)).collect();
        let lo_cell = depths.iter().max().unwrap().clone();

        let corner_scalars: Vec<(Scalar, Scalar)> = corners
            .iter()
            .map(|(x, y)| (Scalar::Rational(x.clone()), Scalar::Rational(y.clone())))
            .collect();
        let mut zs = std::collections::BTreeSet::new();
        for ((x, y), g) in corner_scalars.iter().zip(&depths) {
            let rho_x = &self.rx * g;
            let rho_y = &self.ry * g;
            let lo1 = (x - &rho_x).floor_int();
            let hi1 = (x + &rho_x).ceil_int();
            let lo2 = (y - &rho_y).floor_int();
            let hi2 = (y + &rho_y).ceil_int();
            let mut z1 = lo1;
            while z1 <= hi1 {
                let mut z2 = lo2.clone();
                while z2 <= hi2 {
                    zs.insert((z1.clone(), z2.clone()));
                    z2 += 1;
                }
                z1 += 1;
            }
        }
        let mut ub: Option<Scalar> = None;
        for (z1, z2) in zs {
            let (sz1, sz2) = (Scalar::from_bigint(z1), Scalar::from_bigint(z2));
            let mut corner_max: Option<Scalar> = None;
            for (x, y) in &corner_scalars {
                let n = self.gauge_at(&(x - &sz1), &(y - &sz2));
                if corner_max.as_ref().is_none_or(|m| n > *m) {
                    corner_max = Some(n);
                }
            }
            let m = corner_max.unwrap();
            if ub.as_ref().is_none_or(|u| m < *u) {
                ub = Some(m);
            }
        }
        (lo_cell, ub.expect("candidate set nonempty"))
    }
}

enum DepthEngine {
    Int(IntDepth),
    Exact(ExactDepth),
}

impl DepthEngine {
    fn new(k: &Polygon) -> Result<DepthEngine> {
        match IntDepth::new(k) {
            Some(engine) => Ok(DepthEngine::Int(engine)),
            None => Ok(DepthEngine::Exact(ExactDepth::new(k)?)),
        }
    }

    fn cell_bounds(&self, cx: &Rational, cy: &Rational, h: &Rational) -> (Scalar, Scalar) {
        match self {
            DepthEngine::Int(e) => {
                let (lo, ub) = e.cell_bounds(cx, cy, h);
                (Scalar::Rational(lo), Scalar::Rational(ub))
            }
            DepthEngine::Exact(e) => e.cell_bounds(cx, cy, h),
        }
    }

    fn evals(&self) -> usize {
        match self {
            DepthEngine::Int(e) => e.evals.get(),
            DepthEngine::Exact(e) => e.evals.get(),
        }
    }
}

#[derive(PartialEq, Eq)]
struct HeapCell {
    ub: Scalar,
    cx: Rational,
    cy: Rational,
    half: Rational,
}

impl Ord for HeapCell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ub
            .cmp(&other.ub)
            .then_with(|| self.cx.cmp(&other.cx))
            .then_with(|| self.cy.cmp(&other.cy))
            .then_with(|| self.half.cmp(&other.half))
    }
}

impl PartialOrd for HeapCell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

const MU2_EVAL_BUDGET: usize = 400_000;

/// A certified interval of width at most eps around
/// mu_2(K) = max_{x in [0,1)^2} min_{z in Z^2} |x - z|_K.
///
/// Adaptive refinement of the fundamental square. Each cell carries the
/// exact depths of its corners (lower bounds for the max) and the certified
/// corner-max upper bound from [`DepthContext::cell_bounds`]; cells are
/// split best-first until the gap closes below eps.
pub fn mu2_approx(k: &Polygon, eps: &Rational) -> Result<Mu2Interval> {
    require_origin_symmetric(k)?;
    if !eps.is_positive() {
        return Err(Error::Invalid("eps must be positive"));
    }
    let engine = DepthEngine::new(k)?;

    // Internal slack 4/5 eps plus two rational roundings of eps/10 each.
    let eps_internal = Scalar::Rational(eps * Rational::new(4.into(), 5.into()));
    let rounding = eps * Rational::new(1.into(), 10.into());

    let half = Rational::new(1.into(), 2.into());
    let mut heap = BinaryHeap::new();
    let mut lo = Scalar::zero();
    let mut push_cell = |heap: &mut BinaryHeap<HeapCell>,
                         lo: &mut Scalar,
                         cx: Rational,
                         cy: Rational,
                         h: Rational|
     -> Result<()> {
        if engine.evals() > MU2_EVAL_BUDGET {
            return Err(Error::EpsTooSmall);
        }
        let (cell_lo, ub) = engine.cell_bounds(&cx, &cy, &h);
        if cell_lo > *lo {
            *lo = cell_lo;
        }
        heap.push(HeapCell {
            ub,
            cx,
            cy,
            half: h,
        });
        Ok(())
    };
    push_cell(&mut heap, &mut lo, half.clone(), half.clone(), half)?;

    let hi = loop {
        let top = heap.pop().expect("heap never empties before convergence");
        if &top.ub - &lo <= eps_internal {
            break top.ub.max(lo.clone());
        }
        let h = &top.half * Rational::new(1.into(), 2.into());
        for sx in [-1, 1] {
            for sy in [-1, 1] {
                let cx = &top.cx + &h * Rational::from_integer(BigInt::from(sx));
                let cy = &top.cy + &h * Rational::from_integer(BigInt::from(sy));
                push_cell(&mut heap, &mut lo, cx, cy, h.clone())?;
            }
        }
    };

    let lo_rat = lo.rational_bounds(&rounding).0;
    let hi_rat = hi.rational_bounds(&rounding).1;
    debug_assert!(&hi_rat - &lo_rat <= *eps);
    Ok(Mu2Interval {
        lo: lo_rat,
        hi: hi_rat,
    })
}

/// True iff the translates P + z, z in Z^2, tile the plane: unit area and
/// no overlapping interiors among nearby translates (farther translates
/// cannot intersect at all).
pub fn tiles_by_integer_translates(p: &Polygon) -> bool {
    if p.area() != Scalar::one() {
        return false;
    }
    let reach = (&p.inf_norm_radius() * &Scalar::from_int(2)).floor_int();
    let reach = reach.to_i64().expect("tiling reach overflows i64");
    for z1 in 0..=reach {
        for z2 in -reach..=reach {
            if z1 == 0 && z2 <= 0 {
                continue;
            }
            if !translate_interiors_disjoint(p, (z1, z2)) {
                return false;
            }
        }
    }
    true
}

/// Separating-axis test between P and P + z; the axes are P's edge normals.
fn translate_interiors_disjoint(p: &Polygon, z: (i64, i64)) -> bool {
    for (a, b) in p.edges() {
        let n = Point::new(&b.y - &a.y, &(-&b.x) + &a.x);
        let shift = &(&n.x * &Scalar::from_int(z.0)) + &(&n.y * &Scalar::from_int(z.1));
        let mut lo: Option<Scalar> = None;
        let mut hi: Option<Scalar> = None;
        for v in p.vertices() {
            let d = &(&n.x * &v.x) + &(&n.y * &v.y);
            if lo.as_ref().is_none_or(|l| d < *l) {
                lo = Some(d.clone());
            }
            if hi.as_ref().is_none_or(|h| d > *h) {
                hi = Some(d);
            }
        }
        let width = &hi.unwrap() - &lo.unwrap();
        if shift.abs() >= width {
            return true;
        }
    }
    false
}

/// The canonical tiling parallelogram (1/2) conv{+-(-a-1, 1), +-(-a+1, 1)}.
pub fn canonical_tiling_parallelogram(alpha: &Scalar) -> Result<Polygon> {
    if alpha.sign() < 0 || *alpha >= Scalar::one() {
        return Err(Error::AlphaOutOfRange);
    }
    let half = Scalar::ratio(1, 2);
    let x1 = &(&(-alpha.clone()) - &Scalar::one()) * &half;
    let x2 = &(&(-alpha.clone()) + &Scalar::one()) * &half;
    Polygon::new(vec![
        Point::new(x1.clone(), half.clone()),
        Point::new(x2.clone(), half.clone()),
        Point::new(-x1, -half.clone()),
        Point::new(-x2, -half),
    ])
}

/// Finds a unimodular image of an origin-symmetric tiling parallelogram in
/// the canonical one-parameter family; returns the matrix and alpha.
///
/// The family carries the equivalence alpha <-> 1 - alpha (the map
/// [[-1,-1],[0,1]] exchanges the two canonical forms), so the result is
/// normalized to 0 <= alpha <= 1/2.
pub fn parallelogram_normal_form(p: &Polygon) -> Result<([[i64; 2]; 2], Scalar)> {
    if p.vertices().len() != 4
        || p.symmetry_center() != Some(Point::from_ints(0, 0))
        || !tiles_by_integer_translates(p)
    {
        return Err(Error::NotTilingParallelogram);
    }
    let bound = {
        let b = (&p.inf_norm_radius() * &Scalar::from_int(2)).ceil_int();
        b.to_i64().expect("search bound overflows i64") + 1
    };
    // An already-canonical input maps by the identity.
    if let Some(alpha) = match_canonical(p) {
        return normalize_alpha([[1, 0], [0, 1]], alpha);
    }
    for radius in 1..=bound {
        for a in -radius..=radius {
            for b in -radius..=radius {
                for c in -radius..=radius {
                    for d in -radius..=radius {
                        if [a, b, c, d].iter().map(|e| e.abs()).max().unwrap() != radius {
                            continue;
                        }
                        if (a * d - b * c).abs() != 1 {
                            continue;
                        }
                        let m = [[a, b], [c, d]];
                        let image = p.unimodular_apply(m, (0, 0)).expect("det checked");
                        if let Some(alpha) = match_canonical(&image) {
                            return normalize_alpha(m, alpha);
                        }
                    }
                }
            }
        }
    }
    Err(Error::SearchExhausted)
}

fn normalize_alpha(m: [[i64; 2]; 2], alpha: Scalar) -> Result<([[i64; 2]; 2], Scalar)> {
    if alpha <= Scalar::ratio(1, 2) {
        return Ok((m, alpha));
    }
    let s = [[-1i64, -1], [0, 1]];
    let composed = [
        [
            s[0][0] * m[0][0] + s[0][1] * m[1][0],
            s[0][0] * m[0][1] + s[0][1] * m[1][1],
        ],
        [
            s[1][0] * m[0][0] + s[1][1] * m[1][0],
            s[1][0] * m[0][1] + s[1][1] * m[1][1],
        ],
    ];
    Ok((composed, &Scalar::one() - &alpha))
}

/// Tests whether a polygon is exactly the canonical parallelogram for some
/// 0 <= alpha < 1 and returns that alpha.
fn match_canonical(p: &Polygon) -> Option<Scalar> {
    let half = Scalar::ratio(1, 2);
    let mut top: Vec<&Point> = p
        .vertices()
        .iter()
        .filter(|v| v.y == half)
        .collect();
    if top.len() != 2 {
        return None;
    }
    top.sort_by(|u, v| u.x.cmp(&v.x));
    if &top[1].x - &top[0].x != Scalar::one() {
        return None;
    }
    // x_left = (-alpha - 1)/2
    let alpha = -(&(&top[0].x * &Scalar::from_int(2)) + &Scalar::one());
    if alpha.sign() < 0 || alpha >= Scalar::one() {
        return None;
    }
    let expected = canonical_tiling_parallelogram(&alpha).ok()?;
    (*p == expected).then_some(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{alpha_diamond, unit_square};
    use num_traits::One;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rational(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn mu1_examples() {
        assert_eq!(mu1(&unit_square()), Scalar::one());
        let tri = Polygon::new(vec![
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(0, 2),
        ])
        .unwrap();
        assert_eq!(mu1(&tri), Scalar::ratio(1, 2));
        let hurkens = crate::triangles::hurkens_triangle([(0, 0), (1, 0), (0, 1)]).unwrap();
        // 1/(1 + 2/sqrt 3) = 2 sqrt 3 - 3
        assert_eq!(
            mu1(&hurkens),
            Scalar::quad(rational(-3, 1), rational(2, 1), 3).unwrap()
        );
    }

    #[test]
    fn minkowski_norm_examples() {
        let diamond = alpha_diamond(&Scalar::zero()).unwrap();
        let boundary = Point::new(Scalar::ratio(1, 2), Scalar::ratio(1, 2));
        assert_eq!(minkowski_norm(&diamond, &boundary).unwrap(), Scalar::one());

        // |x|_{K_alpha} = |x2 - alpha x1| + |x1|
        let alpha = Scalar::ratio(1, 3);
        let ka = alpha_diamond(&alpha).unwrap();
        let mut rng = StdRng::seed_from_u64(2);
        for _ in 0..25 {
            let x = Point::new(
                Scalar::ratio(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)),
                Scalar::ratio(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=5)),
            );
            let expected = &(&x.y - &(&alpha * &x.x)).abs() + &x.x.abs();
            assert_eq!(minkowski_norm(&ka, &x).unwrap(), expected);
            let doubled = Point::new(&x.x * &Scalar::from_int(2), &x.y * &Scalar::from_int(2));
            assert_eq!(
                minkowski_norm(&ka, &doubled).unwrap(),
                &minkowski_norm(&ka, &x).unwrap() * &Scalar::from_int(2)
            );
        }

        assert_eq!(
            minkowski_norm(&unit_square(), &boundary),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn mu2_diamond_formula() {
        assert_eq!(mu2_diamond(&Scalar::zero()).unwrap(), Scalar::one());
        assert_eq!(
            mu2_diamond(&Scalar::ratio(1, 2)).unwrap(),
            Scalar::ratio(3, 4)
        );
        assert_eq!(
            mu2_diamond(&Scalar::ratio(1, 4)).unwrap(),
            Scalar::ratio(7, 8)
        );
        assert_eq!(mu2_diamond(&Scalar::one()), Err(Error::AlphaOutOfRange));
        assert_eq!(
            mu2_diamond(&Scalar::ratio(-1, 10)),
            Err(Error::AlphaOutOfRange)
        );
    }

    /// The deep point attains mu_2 exactly: its distance to every lattice
    /// point is at least mu_2(K_alpha), with equality for some z.
    #[test]
    fn diamond_deep_point_attains_mu2() {
        for (p, q) in [(0, 1), (1, 8), (1, 4), (1, 2), (3, 4), (9, 10), (2, 3)] {
            let alpha = Scalar::ratio(p, q);
            let ka = alpha_diamond(&alpha).unwrap();
            let x = diamond_deep_point(&alpha).unwrap();
            let mu2 = mu2_diamond(&alpha).unwrap();
            let mut min_norm: Option<Scalar> = None;
            for z1 in -3..=3 {
                for z2 in -3..=3 {
                    let d = Point::new(
                        &x.x - &Scalar::from_int(z1),
                        &x.y - &Scalar::from_int(z2),
                    );
                    let n = minkowski_norm(&ka, &d).unwrap();
                    if min_norm.as_ref().is_none_or(|m| n < *m) {
                        min_norm = Some(n);
                    }
                }
            }
            // |y|_K >= |y|_inf since the vertices of K_alpha have inf-norm 1,
            // so lattice points beyond the scanned box are farther than 2.
            assert_eq!(min_norm.unwrap(), mu2, "alpha = {p}/{q}");
        }
    }

    #[test]
    fn lattice_free_translate_at_the_deep_point() {
        for (p, q) in [(0, 1), (1, 8), (1, 4), (1, 2), (3, 4), (9, 10)] {
            let alpha = Scalar::ratio(p, q);
            let mu2 = mu2_diamond(&alpha).unwrap();
            let x = diamond_deep_point(&alpha).unwrap();
            for t in [mu2.clone(), &mu2 * &Scalar::ratio(9, 10)] {
                let k = alpha_diamond(&alpha)
                    .unwrap()
                    .scale(&t)
                    .translate(&x.x, &x.y);
                assert!(crate::classify::is_lattice_free(&k), "alpha = {p}/{q}");
            }
        }
    }

    #[test]
    fn mu2_interval_on_diamonds() {
        let eps = rational(1, 1000);
        for (p, q) in [(0i64, 1i64), (1, 2)] {
            let alpha = Scalar::ratio(p, q);
            let ka = alpha_diamond(&alpha).unwrap();
            let iv = mu2_approx(&ka, &eps).unwrap();
            assert!(&iv.hi - &iv.lo <= eps);
            let mu2 = mu2_diamond(&alpha).unwrap().as_rational().unwrap().clone();
            assert!(iv.lo <= mu2 && mu2 <= iv.hi, "alpha = {p}/{q}");
        }
        // the centered unit square tiles, so mu_2 = 1
        let square = Polygon::new(vec![
            Point::new(Scalar::ratio(-1, 2), Scalar::ratio(-1, 2)),
            Point::new(Scalar::ratio(1, 2), Scalar::ratio(-1, 2)),
            Point::new(Scalar::ratio(1, 2), Scalar::ratio(1, 2)),
            Point::new(Scalar::ratio(-1, 2), Scalar::ratio(1, 2)),
        ])
        .unwrap();
        let iv = mu2_approx(&square, &eps).unwrap();
        assert!(iv.lo <= Rational::one() && Rational::one() <= iv.hi);
    }

    #[test]
    fn tiling_tests() {
        assert!(tiles_by_integer_translates(&unit_square()));
        let p = canonical_tiling_parallelogram(&Scalar::ratio(1, 3)).unwrap();
        assert!(tiles_by_integer_translates(&p));
        let diamond = alpha_diamond(&Scalar::zero()).unwrap();
        assert!(!tiles_by_integer_translates(&diamond));
        // unit area but overlapping translates
        let sheared = Polygon::new(vec![
            Point::new(Scalar::ratio(-1, 4), Scalar::from_int(-1)),
            Point::new(Scalar::ratio(1, 4), Scalar::from_int(1)),
            Point::new(Scalar::ratio(3, 4), Scalar::from_int(1)),
            Point::new(Scalar::ratio(1, 4), Scalar::from_int(-1)),
        ])
        .unwrap();
        assert_eq!(sheared.area(), Scalar::one());
        assert!(!tiles_by_integer_translates(&sheared));
    }

    #[test]
    fn normal_form_round_trips() {
        // already canonical: alpha = 0 is the centered unit square
        let p0 = canonical_tiling_parallelogram(&Scalar::zero()).unwrap();
        let (m, alpha) = parallelogram_normal_form(&p0).unwrap();
        assert_eq!(m, [[1, 0], [0, 1]]);
        assert_eq!(alpha, Scalar::zero());

        let mut rng = StdRng::seed_from_u64(14);
        for _ in 0..6 {
            let target = Scalar::ratio(1, 4);
            let p = canonical_tiling_parallelogram(&target).unwrap();
            let m0 = crate::testutil::random_unimodular(&mut rng);
            let image = p.unimodular_apply(m0, (0, 0)).unwrap();
            let (m, alpha) = parallelogram_normal_form(&image).unwrap();
            assert_eq!(alpha, target);
            assert_eq!(
                image.unimodular_apply(m, (0, 0)).unwrap(),
                canonical_tiling_parallelogram(&alpha).unwrap()
            );
        }

        assert_eq!(
            parallelogram_normal_form(&alpha_diamond(&Scalar::zero()).unwrap()),
            Err(Error::NotTilingParallelogram)
        );
    }
}
