//! Area-versus-width inequalities for lattice-free polygons: evaluators,
//! extremal constructors for every equality case, structural certification
//! of tight instances, and a seeded generator for fuzzing.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify_maximal, is_lattice_free, MaximalClass};
use crate::covering::{diamond_deep_point, parallelogram_normal_form};
use crate::exactnum::{Rational, Scalar};
use crate::geom::{alpha_diamond, segment_lattice_points, Point, Polygon};
use crate::latwidth::lattice_width;
use crate::triangles::{circumscribed_triangle, TriangleParams};
use crate::{Error, Result};

/// 1 + 2/sqrt(3), the maximal lattice width of a lattice-free set.
pub fn width_limit() -> Scalar {
    Scalar::quad(
        Rational::from_integer(1.into()),
        Rational::new(2.into(), 3.into()),
        3,
    )
    .expect("constant")
}

/// An upper area bound, possibly infinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AreaBound {
    Infinite,
    Finite(Scalar),
}

impl AreaBound {
    pub fn as_finite(&self) -> Option<&Scalar> {
        match self {
            AreaBound::Finite(v) => Some(v),
            AreaBound::Infinite => None,
        }
    }
}

fn sqrt_of(radicand: &Scalar) -> Result<Scalar> {
    if radicand.sign() < 0 {
        return Err(Error::Invalid("negative radicand"));
    }
    if radicand.is_zero() {
        return Ok(Scalar::zero());
    }
    match radicand.as_rational() {
        Some(r) => Scalar::sqrt_rational(r),
        None => Err(Error::Invalid(
            "square root of a quadratic irrational is not representable",
        )),
    }
}

/// Sharp upper bound for the area of a lattice-free set of lattice width w.
pub fn area_upper_general(w: &Scalar) -> Result<AreaBound> {
    if w.sign() <= 0 || *w > width_limit() {
        return Err(Error::WidthOutOfRange);
    }
    let one = Scalar::one();
    if *w <= one {
        return Ok(AreaBound::Infinite);
    }
    if *w <= Scalar::from_int(2) {
        let num = w * w;
        let den = &Scalar::from_int(2) * &(w - &one);
        return Ok(AreaBound::Finite(&num / &den));
    }
    // 3 w^2 / (3 w + 1 - sqrt(1 + 6 w - 3 w^2))
    let radicand = &(&one + &(&Scalar::from_int(6) * w)) - &(&Scalar::from_int(3) * &(w * w));
    let root = sqrt_of(&radicand)?;
    let num = &Scalar::from_int(3) * &(w * w);
    let den = &(&(&Scalar::from_int(3) * w) + &one) - &root;
    Ok(AreaBound::Finite(&num / &den))
}

/// Lower bound (3/8) w^2, valid for every lattice-free set.
pub fn area_lower_general(w: &Scalar) -> Scalar {
    assert!(w.sign() > 0, "width must be positive");
    &Scalar::ratio(3, 8) * &(w * w)
}

/// Upper and lower area bounds in the centrally symmetric case; the width
/// must satisfy 0 < w <= 2.
pub fn area_bounds_symmetric(w: &Scalar) -> Result<(AreaBound, Scalar)> {
    if w.sign() <= 0 || *w > Scalar::from_int(2) {
        return Err(Error::WidthOutOfRange);
    }
    let one = Scalar::one();
    let upper = if *w <= one {
        AreaBound::Infinite
    } else {
        let num = w * w;
        let den = &Scalar::from_int(2) * &(w - &one);
        AreaBound::Finite(&num / &den)
    };
    let lower = &(w * w) / &Scalar::from_int(2);
    Ok((upper, lower))
}

/// The sharp area bounds expressed through the covering minima.
pub fn corollary_bounds_mu(
    mu1: &Scalar,
    mu2: &Scalar,
    symmetric: bool,
) -> Result<(AreaBound, Scalar)> {
    if mu1.sign() <= 0 || mu2 < mu1 {
        return Err(Error::RatioOutOfRange);
    }
    let ratio_cap = if symmetric {
        &Scalar::from_int(2) * mu1
    } else {
        &width_limit() * mu1
    };
    if *mu2 > ratio_cap {
        return Err(Error::RatioOutOfRange);
    }
    let two_mu1 = &Scalar::from_int(2) * mu1;
    let upper = if mu1 == mu2 {
        AreaBound::Infinite
    } else if *mu2 <= two_mu1 {
        let den = &(&Scalar::from_int(2) * mu1) * &(mu2 - mu1);
        AreaBound::Finite(&Scalar::one() / &den)
    } else {
        // 3 / (mu1 (3 mu2 + mu1 - sqrt(mu1^2 + 6 mu1 mu2 - 3 mu2^2)))
        let radicand = &(&(mu1 * mu1) + &(&Scalar::from_int(6) * &(mu1 * mu2)))
            - &(&Scalar::from_int(3) * &(mu2 * mu2));
        let root = sqrt_of(&radicand)?;
        let den = mu1 * &(&(&(&Scalar::from_int(3) * mu2) + mu1) - &root);
        AreaBound::Finite(&Scalar::from_int(3) / &den)
    };
    let lower = if symmetric {
        &Scalar::one() / &(&Scalar::from_int(2) * &(mu1 * mu1))
    } else {
        &Scalar::from_int(3) / &(&Scalar::from_int(8) * &(mu1 * mu1))
    };
    Ok((upper, lower))
}

/// The extremal bodies of the area-width inequalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalKind {
    /// conv(I1 u I2) with a horizontal segment of length w and a vertical
    /// one of length w/(w-1) crossing at the point (s, s); 1 < w <= 2.
    GeneralMaxQuad { w: Scalar, s: Scalar },
    /// The circumscribed triangle attaining the upper bound for
    /// 2 < w <= 1 + 2/sqrt(3).
    GeneralMaxTriangle { w: Scalar },
    /// The lattice-free translate of (w/2) conv{(1,0),(0,1),(-1,-1)};
    /// 0 < w <= 2.
    GeneralMin { w: Scalar },
    /// conv{+-(w/2, 0), +-(0, w/(2(w-1)))} + (1/2, 1/2); 1 < w <= 2.
    SymMaxCross { w: Scalar },
    /// A lattice-free translate of (w/2) K_alpha with
    /// max{1+alpha, 2-alpha} >= w.
    SymMin { w: Scalar, alpha: Scalar },
    /// The width-maximal triangle over a fundamental base cell.
    Hurkens { base: [(i64, i64); 3] },
}

/// lambda(w) = (3w + 1 - sqrt(1 + 6w - 3w^2)) / (6w) for 2 < w <= w0.
fn equality_lambda(w: &Scalar) -> Result<Scalar> {
    let one = Scalar::one();
    let radicand = &(&one + &(&Scalar::from_int(6) * w)) - &(&Scalar::from_int(3) * &(w * w));
    let root = sqrt_of(&radicand)?;
    let num = &(&(&Scalar::from_int(3) * w) + &one) - &root;
    Ok(&num / &(&Scalar::from_int(6) * w))
}

/// The reference minimal triangle conv{(1,0),(0,1),(-1,-1)}.
fn min_triangle_shape() -> Polygon {
    Polygon::new(vec![
        Point::from_ints(1, 0),
        Point::from_ints(0, 1),
        Point::from_ints(-1, -1),
    ])
    .expect("fixed triangle")
}

/// Builds the requested extremal polygon; every output is verified
/// lattice-free before it is returned.
pub fn construct_extremal(kind: &ExtremalKind) -> Result<Polygon> {
    let one = Scalar::one();
    let two = Scalar::from_int(2);
    let body = match kind {
        ExtremalKind::GeneralMaxQuad { w, s } => {
            if *w <= one || *w > two {
                return Err(Error::ParamOutOfRange("w must satisfy 1 < w <= 2"));
            }
            if s.sign() < 0 || *s > one {
                return Err(Error::ParamOutOfRange("s must satisfy 0 <= s <= 1"));
            }
            let wm1 = w - &one;
            let a = Point::new(-&(&wm1 * s), s.clone());
            let b = Point::new(&one + &(&wm1 * &(&one - s)), s.clone());
            let c = Point::new(s.clone(), &one + &(&(&one - s) / &wm1));
            let d = Point::new(s.clone(), -&(s / &wm1));
            Polygon::hull(&[a, b, c, d])?
        }
        ExtremalKind::GeneralMaxTriangle { w } => {
            if *w <= two || *w > width_limit() {
                return Err(Error::ParamOutOfRange("w must satisfy 2 < w <= 1+2/sqrt(3)"));
            }
            let lambda = equality_lambda(w)?;
            let params = TriangleParams::standard([lambda.clone(), lambda.clone(), lambda])?;
            circumscribed_triangle(&params)?
        }
        ExtremalKind::GeneralMin { w } => {
            if w.sign() <= 0 || *w > two {
                return Err(Error::ParamOutOfRange("w must satisfy 0 < w <= 2"));
            }
            min_triangle_shape()
                .scale(&(w / &two))
                .translate(&Scalar::ratio(1, 3), &Scalar::ratio(-1, 3))
        }
        ExtremalKind::SymMaxCross { w } => {
            if *w <= one || *w > two {
                return Err(Error::ParamOutOfRange("w must satisfy 1 < w <= 2"));
            }
            let hx = w / &two;
            let hy = w / &(&two * &(w - &one));
            let half = Scalar::ratio(1, 2);
            Polygon::new(vec![
                Point::new(hx.clone(), Scalar::zero()),
                Point::new(Scalar::zero(), hy.clone()),
                Point::new(-hx, Scalar::zero()),
                Point::new(Scalar::zero(), -hy),
            ])?
            .translate(&half, &half)
        }
        ExtremalKind::SymMin { w, alpha } => {
            if w.sign() <= 0 || *w > two {
                return Err(Error::ParamOutOfRange("w must satisfy 0 < w <= 2"));
            }
            let cap = (&one + alpha).max(&two - alpha);
            if cap < *w {
                return Err(Error::ParamOutOfRange(
                    "alpha is incompatible with w: max{1+alpha, 2-alpha} < w",
                ));
            }
            let deep = diamond_deep_point(alpha)?;
            alpha_diamond(alpha)?
                .scale(&(w / &two))
                .translate(&deep.x, &deep.y)
        }
        ExtremalKind::Hurkens { base } => crate::triangles::hurkens_triangle(*base)?,
    };
    assert!(
        is_lattice_free(&body),
        "extremal construction produced a non-lattice-free body"
    );
    Ok(body)
}

/// The individual inequalities a report can list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InequalityKind {
    /// A <= infinity on 0 < w <= 1 (split regime).
    AreaUpperSplitRange,
    /// A <= w^2 / (2(w-1)) on 1 < w <= 2.
    AreaUpperQuadRange,
    /// A <= 3w^2 / (3w + 1 - sqrt(1 + 6w - 3w^2)) on 2 < w <= 1 + 2/sqrt(3).
    AreaUpperTriangleRange,
    /// A >= (3/8) w^2.
    AreaLowerGeneral,
    /// w <= 2 for centrally symmetric lattice-free sets.
    SymWidthUpper,
    /// A <= infinity on 0 < w <= 1, symmetric case.
    SymAreaUpperSplitRange,
    /// A <= w^2 / (2(w-1)) on 1 < w <= 2, symmetric case.
    SymAreaUpperQuadRange,
    /// A >= w^2 / 2, symmetric case.
    SymAreaLower,
}

/// Structural witnesses for tight inequalities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificationTag {
    /// K = conv(I1 u I2) with the two segment translates crossing.
    GeneralPartII {
        i1: (Point, Point),
        i2: (Point, Point),
    },
    /// Triangle with lambda q_{i+1} + (1 - lambda) q_{i+2} integral.
    GeneralPartIII { lambda: Scalar },
    /// Unimodular image of a translate of (w/2) conv{(1,0),(0,1),(-1,-1)}.
    GeneralPartIV { map: [[i64; 2]; 2] },
    /// The unit cross conv{+-(1,0), +-(0,1)} + (1/2, 1/2) up to unimodular
    /// transformations.
    SymPartI,
    /// The cross conv{+-(w/2,0), +-(0,w/(2(w-1)))} + (1/2, 1/2) up to
    /// unimodular transformations.
    SymPartIII,
    /// A translate of (w/2) K_alpha up to unimodular transformations.
    SymPartIV { alpha: Scalar },
}

/// One evaluated inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityCheck {
    pub kind: InequalityKind,
    /// Whether the width regime of this inequality applies to the body.
    pub applicable: bool,
    /// The bound value; None encodes an infinite upper bound.
    pub bound: Option<Scalar>,
    pub satisfied: bool,
    /// bound - value for upper bounds, value - bound for lower bounds.
    pub slack: Option<Scalar>,
    /// Structural witness when the slack is exactly zero.
    pub certification: Option<CertificationTag>,
}

/// Everything verify_bounds knows about one polygon.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub width: Scalar,
    pub area: Scalar,
    pub class: MaximalClass,
    pub symmetric: bool,
    pub inequalities: Vec<InequalityCheck>,
    pub equality_case: Option<(InequalityKind, CertificationTag)>,
}

impl BoundsReport {
    pub fn all_satisfied(&self) -> bool {
        self.inequalities.iter().all(|c| c.satisfied)
    }
}

/// Evaluates every applicable inequality exactly and certifies tight ones.
pub fn verify_bounds(k: &Polygon) -> Result<BoundsReport> {
    let width = lattice_width(k).width;
    let area = k.area();
    let class = classify_maximal(k)?;
    let symmetric = k.symmetry_center().is_some();
    let mut report = BoundsReport {
        width: width.clone(),
        area: area.clone(),
        class,
        symmetric,
        inequalities: Vec::new(),
        equality_case: None,
    };
    if class == MaximalClass::NotLatticeFree {
        return Ok(report);
    }

    let one = Scalar::one();
    let two = Scalar::from_int(2);
    let push = |check: InequalityCheck, report: &mut BoundsReport| {
        if report.equality_case.is_none() {
            if let Some(tag) = &check.certification {
                report.equality_case = Some((check.kind, tag.clone()));
            }
        }
        report.inequalities.push(check);
    };

    let upper_entry = |kind: InequalityKind,
                           applicable: bool,
                           bound: Option<Scalar>,
                           report: &mut BoundsReport|
     -> Result<()> {
        let (satisfied, slack, certification) = if !applicable {
            (true, None, None)
        } else {
            match &bound {
                None => (true, None, None),
                Some(b) => {
                    let slack = b - &area;
                    let tight = slack.is_zero();
                    let cert = if tight {
                        Some(equality_case_certify(k, kind)?)
                    } else {
                        None
                    };
                    (slack.sign() >= 0, Some(slack), cert)
                }
            }
        };
        push(
            InequalityCheck {
                kind,
                applicable,
                bound,
                satisfied,
                slack,
                certification,
            },
            report,
        );
        Ok(())
    };

    // General upper chain, Eqs. (2)-(4) by width regime.
    let quad_bound = |w: &Scalar| -> Scalar {
        let num = w * w;
        &num / &(&two * &(w - &one))
    };
    upper_entry(
        InequalityKind::AreaUpperSplitRange,
        width <= one,
        None,
        &mut report,
    )?;
    upper_entry(
        InequalityKind::AreaUpperQuadRange,
        width > one && width <= two,
        (width > one && width <= two).then(|| quad_bound(&width)),
        &mut report,
    )?;
    let tri_range = width > two && width <= width_limit();
    let tri_bound = if tri_range {
        match area_upper_general(&width)? {
            AreaBound::Finite(b) => Some(b),
            AreaBound::Infinite => unreachable!("finite on 2 < w <= w0"),
        }
    } else {
        None
    };
    upper_entry(
        InequalityKind::AreaUpperTriangleRange,
        tri_range,
        tri_bound,
        &mut report,
    )?;

    // General lower bound, Eq. (5).
    {
        let bound = area_lower_general(&width);
        let slack = &area - &bound;
        let tight = slack.is_zero();
        let certification = if tight {
            Some(equality_case_certify(k, InequalityKind::AreaLowerGeneral)?)
        } else {
            None
        };
        push(
            InequalityCheck {
                kind: InequalityKind::AreaLowerGeneral,
                applicable: true,
                bound: Some(bound),
                satisfied: slack.sign() >= 0,
                slack: Some(slack),
                certification,
            },
            &mut report,
        );
    }

    if symmetric {
        // Width cap, Eq. (6).
        {
            let slack = &two - &width;
            let tight = slack.is_zero();
            let certification = if tight {
                Some(equality_case_certify(k, InequalityKind::SymWidthUpper)?)
            } else {
                None
            };
            push(
                InequalityCheck {
                    kind: InequalityKind::SymWidthUpper,
                    applicable: true,
                    bound: Some(two.clone()),
                    satisfied: slack.sign() >= 0,
                    slack: Some(slack),
                    certification,
                },
                &mut report,
            );
        }
        upper_entry(
            InequalityKind::SymAreaUpperSplitRange,
            width <= one,
            None,
            &mut report,
        )?;
        upper_entry(
            InequalityKind::SymAreaUpperQuadRange,
            width > one && width <= two,
            (width > one && width <= two).then(|| quad_bound(&width)),
            &mut report,
        )?;
        // Lower bound, Eq. (9).
        {
            let bound = &(&width * &width) / &two;
            let slack = &area - &bound;
            let tight = slack.is_zero();
            let certification = if tight {
                Some(equality_case_certify(k, InequalityKind::SymAreaLower)?)
            } else {
                None
            };
            push(
                InequalityCheck {
                    kind: InequalityKind::SymAreaLower,
                    applicable: true,
                    bound: Some(bound),
                    satisfied: slack.sign() >= 0,
                    slack: Some(slack),
                    certification,
                },
                &mut report,
            );
        }
    }
    Ok(report)
}

/// The primitive integer direction of a scalar vector, if it has one.
fn primitive_integer_direction(dx: &Scalar, dy: &Scalar) -> Option<((i64, i64), Scalar)> {
    // Write (dx, dy) = c * (m1, m2) with integer coprime (m1, m2), c > 0.
    let (rx, ry) = match (dx.as_rational(), dy.as_rational()) {
        (Some(rx), Some(ry)) => (rx.clone(), ry.clone()),
        _ => {
            // Irrational components can still be commensurable, e.g. both
            // multiples of the same quadratic irrational; handle via ratio.
            if dx.is_zero() {
                let c = dy.abs();
                let s = if dy.sign() >= 0 { 1 } else { -1 };
                return Some(((0, s), c));
            }
            let ratio = &(dy / dx);
            let r = (*ratio).as_rational()?.clone();
            // dy/dx = m2/m1
            let m1 = r.denom().to_i64()?;
            let m2 = r.numer().to_i64()?;
            let g = m1.abs().gcd(&m2.abs());
            let (mut m1, mut m2) = (m1 / g, m2 / g);
            let mut c = dx / &Scalar::from_int(m1);
            if c.sign() < 0 {
                m1 = -m1;
                m2 = -m2;
                c = -c;
            }
            return Some(((m1, m2), c));
        }
    };
    if rx.is_zero() && ry.is_zero() {
        return None;
    }
    // common denominator, then gcd of numerators
    let den = rx.denom().lcm(ry.denom());
    let nx = (&rx * Rational::from_integer(den.clone())).to_integer();
    let ny = (&ry * Rational::from_integer(den.clone())).to_integer();
    let g = nx.gcd(&ny);
    let m1 = (&nx / &g).to_i64()?;
    let m2 = (&ny / &g).to_i64()?;
    let c = Rational::new(g, den);
    Some(((m1, m2), Scalar::Rational(c)))
}

/// Attempts the structural equality-case match for the named inequality.
/// Callers invoke this only when the slack is exactly zero.
pub fn equality_case_certify(k: &Polygon, which: InequalityKind) -> Result<CertificationTag> {
    match which {
        InequalityKind::AreaUpperQuadRange => certify_segment_hull(k),
        InequalityKind::AreaUpperTriangleRange => certify_lambda_triangle(k),
        InequalityKind::AreaLowerGeneral => certify_min_triangle(k),
        InequalityKind::SymWidthUpper => certify_sym_cross(k).map(|_| CertificationTag::SymPartI),
        InequalityKind::SymAreaUpperQuadRange => {
            certify_sym_cross(k).map(|_| CertificationTag::SymPartIII)
        }
        InequalityKind::SymAreaLower => certify_sym_min(k),
        InequalityKind::AreaUpperSplitRange | InequalityKind::SymAreaUpperSplitRange => {
            Err(Error::CertificationFailed)
        }
    }
}

/// Theorem: equality at the quad-range upper bound means K = conv(I1 u I2),
/// a horizontal translate of length w crossing a vertical translate of
/// length w/(w-1), up to unimodular maps. Intrinsically: two segments with
/// primitive integer directions forming a unimodular pair, of lengths w and
/// w/(w-1) measured in those directions.
fn certify_segment_hull(k: &Polygon) -> Result<CertificationTag> {
    let w = lattice_width(k).width;
    let len1 = w.clone();
    let len2 = &w / &(&w - &Scalar::one());
    let verts = k.vertices();
    let mut candidates: Vec<((Point, Point), (Point, Point))> = Vec::new();
    match verts.len() {
        4 => {
            let d1 = (verts[0].clone(), verts[2].clone());
            let d2 = (verts[1].clone(), verts[3].clone());
            candidates.push((d1.clone(), d2.clone()));
            candidates.push((d2, d1));
        }
        3 => {
            // Two edges sharing a vertex.
            for i in 0..3 {
                let a = &verts[i];
                let b = &verts[(i + 1) % 3];
                let c = &verts[(i + 2) % 3];
                candidates.push(((a.clone(), b.clone()), (a.clone(), c.clone())));
                candidates.push(((a.clone(), c.clone()), (a.clone(), b.clone())));
            }
            // A full edge plus a segment from the opposite vertex to a
            // point inside it: the free endpoint x solves x = a + len * v
            // with v integral, so v lies on the segment (bc - a) / len.
            for i in 0..3 {
                let a = &verts[i];
                let b = &verts[(i + 1) % 3];
                let c = &verts[(i + 2) % 3];
                for (own_len, edge_role_second) in [(&len1, true), (&len2, false)] {
                    let lo = Point::new(&(&b.x - &a.x) / own_len, &(&b.y - &a.y) / own_len);
                    let hi = Point::new(&(&c.x - &a.x) / own_len, &(&c.y - &a.y) / own_len);
                    for v in segment_lattice_points(&lo, &hi, true) {
                        let foot = Point::new(&a.x + &(own_len * &v.x), &a.y + &(own_len * &v.y));
                        let seg = (a.clone(), foot);
                        let edge = (b.clone(), c.clone());
                        if edge_role_second {
                            candidates.push((seg, edge));
                        } else {
                            candidates.push((edge, seg));
                        }
                    }
                }
            }
        }
        _ => return Err(Error::CertificationFailed),
    }
    for (s1, s2) in candidates {
        let d1 = primitive_integer_direction(&(&s1.1.x - &s1.0.x), &(&s1.1.y - &s1.0.y));
        let d2 = primitive_integer_direction(&(&s2.1.x - &s2.0.x), &(&s2.1.y - &s2.0.y));
        let (Some((v1, c1)), Some((v2, c2))) = (d1, d2) else {
            continue;
        };
        if c1 != len1 || c2 != len2 {
            continue;
        }
        if (v1.0 * v2.1 - v1.1 * v2.0).abs() != 1 {
            continue;
        }
        return Ok(CertificationTag::GeneralPartII { i1: s1, i2: s2 });
    }
    Err(Error::CertificationFailed)
}

/// Theorem: equality at the triangle-range bound means the points
/// lambda q_{i+1} + (1 - lambda) q_{i+2} are integral for some labeling of
/// the vertices (both orientations accepted).
fn certify_lambda_triangle(k: &Polygon) -> Result<CertificationTag> {
    let verts = k.vertices();
    if verts.len() != 3 {
        return Err(Error::CertificationFailed);
    }
    let w = lattice_width(k).width;
    let lambda = equality_lambda(&w)?;
    let one_minus = &Scalar::one() - &lambda;
    let labelings: [[usize; 3]; 2] = [[0, 1, 2], [0, 2, 1]];
    for order in labelings {
        let q = |i: usize| &verts[order[i % 3]];
        let all_integral = (0..3).all(|i| {
            let p = Point::new(
                &(&lambda * &q(i + 1).x) + &(&one_minus * &q(i + 2).x),
                &(&lambda * &q(i + 1).y) + &(&one_minus * &q(i + 2).y),
            );
            p.as_integer_pair().is_some()
        });
        if all_integral {
            return Ok(CertificationTag::GeneralPartIII { lambda });
        }
    }
    Err(Error::CertificationFailed)
}

/// Theorem: equality at the lower bound means K is a unimodular image of a
/// translate of (w/2) conv{(1,0),(0,1),(-1,-1)}. The matrix is read off by
/// matching edge vectors, so no search is needed.
fn certify_min_triangle(k: &Polygon) -> Result<CertificationTag> {
    let verts = k.vertices();
    if verts.len() != 3 {
        return Err(Error::CertificationFailed);
    }
    let w = lattice_width(k).width;
    let scale = &w / &Scalar::from_int(2);
    let reference = min_triangle_shape();
    let ref_edges: Vec<(Scalar, Scalar)> = reference
        .edges()
        .map(|(p, q)| (&(&q.x - &p.x) * &scale, &(&q.y - &p.y) * &scale))
        .collect();
    let k_edges: Vec<(Scalar, Scalar)> = k
        .edges()
        .map(|(p, q)| (&q.x - &p.x, &q.y - &p.y))
        .collect();
    // Solve L g_i = e_{i+r} from two edges, validate on the third, then
    // require the inverse of L to be an integer unimodular matrix.
    for r in 0..3 {
        let g = [&ref_edges[0], &ref_edges[1], &ref_edges[2]];
        let e = [&k_edges[r], &k_edges[(r + 1) % 3], &k_edges[(r + 2) % 3]];
        let det_g = &(&g[0].0 * &g[1].1) - &(&g[0].1 * &g[1].0);
        if det_g.is_zero() {
            continue;
        }
        // L = [e0 e1] * [g0 g1]^{-1} (columns)
        let l00 = &(&(&e[0].0 * &g[1].1) - &(&e[1].0 * &g[0].1)) / &det_g;
        let l01 = &(&(&e[1].0 * &g[0].0) - &(&e[0].0 * &g[1].0)) / &det_g;
        let l10 = &(&(&e[0].1 * &g[1].1) - &(&e[1].1 * &g[0].1)) / &det_g;
        let l11 = &(&(&e[1].1 * &g[0].0) - &(&e[0].1 * &g[1].0)) / &det_g;
        let maps_third = {
            let x = &(&l00 * &g[2].0) + &(&l01 * &g[2].1);
            let y = &(&l10 * &g[2].0) + &(&l11 * &g[2].1);
            x == e[2].0 && y == e[2].1
        };
        if !maps_third {
            continue;
        }
        let det_l = &(&l00 * &l11) - &(&l01 * &l10);
        if det_l.is_zero() {
            continue;
        }
        // U = L^{-1} must be integer with |det| = 1.
        let u00 = &l11 / &det_l;
        let u01 = &(-&l01) / &det_l;
        let u10 = &(-&l10) / &det_l;
        let u11 = &l00 / &det_l;
        let ints: Option<Vec<i64>> = [u00, u01, u10, u11]
            .iter()
            .map(|s| s.as_integer().and_then(|b| b.to_i64()))
            .collect();
        if let Some(u) = ints {
            let det = u[0] * u[3] - u[1] * u[2];
            if det.abs() == 1 {
                return Ok(CertificationTag::GeneralPartIV {
                    map: [[u[0], u[1]], [u[2], u[3]]],
                });
            }
        }
    }
    Err(Error::CertificationFailed)
}

/// Shared structure behind Theorem parts I and III in the symmetric case:
/// K is a cross conv{+-a, +-b} + center with a, b scalar multiples (w/2 and
/// w/(2(w-1))) of a unimodular pair of integer directions, centered at a
/// half-integer point.
fn certify_sym_cross(k: &Polygon) -> Result<()> {
    let verts = k.vertices();
    if verts.len() != 4 {
        return Err(Error::CertificationFailed);
    }
    let c = k.symmetry_center().ok_or(Error::CertificationFailed)?;
    let w = lattice_width(k).width;
    let two = Scalar::from_int(2);
    let len_a = &w / &two;
    let len_b = &w / &(&two * &(&w - &Scalar::one()));
    let v1 = Point::new(&verts[0].x - &c.x, &verts[0].y - &c.y);
    let v2 = Point::new(&verts[1].x - &c.x, &verts[1].y - &c.y);
    for (a, b) in [(&v1, &v2), (&v2, &v1)] {
        let da = primitive_integer_direction(&a.x, &a.y);
        let db = primitive_integer_direction(&b.x, &b.y);
        let (Some((ma, ca)), Some((mb, cb))) = (da, db) else {
            continue;
        };
        if ca != len_a || cb != len_b {
            continue;
        }
        let det = ma.0 * mb.1 - ma.1 * mb.0;
        if det.abs() != 1 {
            continue;
        }
        // U = [ma mb]^{-1} (integer since |det| = 1). The center must map
        // to (1/2, 1/2) modulo Z^2.
        let u = [
            [mb.1 * det, -mb.0 * det],
            [-ma.1 * det, ma.0 * det],
        ];
        let cx = &(&Scalar::from_int(u[0][0]) * &c.x) + &(&Scalar::from_int(u[0][1]) * &c.y);
        let cy = &(&Scalar::from_int(u[1][0]) * &c.x) + &(&Scalar::from_int(u[1][1]) * &c.y);
        let half = Scalar::ratio(1, 2);
        let integral = |s: &Scalar| s.as_integer().is_some();
        if integral(&(&cx - &half)) && integral(&(&cy - &half)) {
            return Ok(());
        }
    }
    Err(Error::CertificationFailed)
}

/// Theorem: equality at the symmetric lower bound forces (DK)* to be a
/// parallelogram whose (w/2)-scaling tiles by integer translates; the alpha
/// of its normal form parameterizes K as a translate of (w/2) K_alpha.
fn certify_sym_min(k: &Polygon) -> Result<CertificationTag> {
    let w = lattice_width(k).width;
    let dk_star = k.difference_body().polar()?;
    let scaled = dk_star.scale(&(&w / &Scalar::from_int(2)));
    if scaled.vertices().len() != 4 {
        return Err(Error::CertificationFailed);
    }
    let (_, alpha) =
        parallelogram_normal_form(&scaled).map_err(|_| Error::CertificationFailed)?;
    // Lattice-freeness of K forces the compatibility condition.
    let cap = (&Scalar::one() + &alpha).max(&Scalar::from_int(2) - &alpha);
    if cap < w {
        return Err(Error::CertificationFailed);
    }
    Ok(CertificationTag::SymPartIV { alpha })
}

/// Profiles for the seeded lattice-free generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    General,
    Symmetric,
    Triangle3,
}

/// A deterministic-from-seed lattice-free polygon: a random unimodular
/// image of a maximal representative, shrunk toward its center.
pub fn random_lattice_free(seed: u64, profile: Profile) -> Polygon {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = random_small_unimodular(&mut rng);
    let t = (rng.gen_range(-3..=3), rng.gen_range(-3..=3));
    match profile {
        Profile::General => {
            let rep = match rng.gen_range(0..4) {
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
                    let x = Scalar::ratio(rng.gen_range(9..16), 16);
                    let params =
                        TriangleParams::standard([x.clone(), x.clone(), x]).unwrap();
                    circumscribed_triangle(&params).unwrap()
                }
                _ => {
                    let w = Scalar::ratio(rng.gen_range(17..=32), 16);
                    let s = Scalar::ratio(rng.gen_range(0..=8), 8);
                    construct_extremal(&ExtremalKind::GeneralMaxQuad { w, s }).unwrap()
                }
            };
            let moved = rep.unimodular_apply(m, t).unwrap();
            let shrunk = shrink_vertices(&mut rng, &moved, false);
            assert!(is_lattice_free(&shrunk));
            shrunk
        }
        Profile::Symmetric => {
            let rep = if rng.gen_bool(0.5) {
                let w = Scalar::ratio(rng.gen_range(9..=16), 8);
                construct_extremal(&ExtremalKind::SymMaxCross { w }).unwrap()
            } else {
                let alpha = Scalar::ratio(rng.gen_range(0..8), 8);
                let cap = (&Scalar::one() + &alpha).max(&Scalar::from_int(2) - &alpha);
                let w_num = rng.gen_range(8..=16);
                let mut w = Scalar::ratio(w_num, 8);
                if w > cap {
                    w = cap;
                }
                construct_extremal(&ExtremalKind::SymMin { w, alpha }).unwrap()
            };
            let moved = rep.unimodular_apply(m, t).unwrap();
            let shrunk = shrink_vertices(&mut rng, &moved, true);
            assert!(is_lattice_free(&shrunk));
            assert!(shrunk.symmetry_center().is_some());
            assert!(lattice_width(&shrunk).width <= Scalar::from_int(2));
            shrunk
        }
        Profile::Triangle3 => {
            let x: [Scalar; 3] =
                std::array::from_fn(|_| Scalar::ratio(rng.gen_range(9..16), 16));
            let base = [(0, 0), (1, 0), (0, 1)].map(|(px, py): (i64, i64)| {
                (
                    m[0][0] * px + m[0][1] * py + t.0,
                    m[1][0] * px + m[1][1] * py + t.1,
                )
            });
            let params = TriangleParams::new(x, base).unwrap();
            let q = circumscribed_triangle(&params).unwrap();
            let shrunk = shrink_vertices(&mut rng, &q, false);
            assert!(is_lattice_free(&shrunk));
            shrunk
        }
    }
}

fn random_small_unimodular(rng: &mut ChaCha8Rng) -> [[i64; 2]; 2] {
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..2 {
        let s = rng.gen_range(-2i64..=2);
        if rng.gen_bool(0.5) {
            m = [[m[0][0] + s * m[1][0], m[0][1] + s * m[1][1]], m[1]];
        } else {
            m = [m[0], [m[1][0] + s * m[0][0], m[1][1] + s * m[0][1]]];
        }
    }
    if rng.gen_bool(0.5) {
        m.swap(0, 1);
    }
    m
}

/// Moves each vertex toward the vertex centroid by a random factor in
/// [1/2, 1]; a single shared factor preserves central symmetry.
fn shrink_vertices(rng: &mut ChaCha8Rng, k: &Polygon, uniform: bool) -> Polygon {
    let c = k.vertex_centroid();
    let shared = Scalar::ratio(rng.gen_range(8..=16), 16);
    let moved: Vec<Point> = k
        .vertices()
        .iter()
        .map(|v| {
            let f = if uniform {
                shared.clone()
            } else {
                Scalar::ratio(rng.gen_range(8..=16), 16)
            };
            Point::new(
                &c.x + &(&f * &(&v.x - &c.x)),
                &c.y + &(&f * &(&v.y - &c.y)),
            )
        })
        .collect();
    Polygon::hull(&moved).expect("shrunk polygon stays two-dimensional")
}
