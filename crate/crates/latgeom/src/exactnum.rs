//! Exact scalar arithmetic over Q and the quadratic extensions Q(sqrt d).
//!
//! A [`Scalar`] is either an arbitrary-precision rational or a quadratic
//! irrational a + b*sqrt(d) with rational a, b and squarefree d >= 2.
//! Values are kept in canonical form at all times (reduced fractions,
//! square factors extracted from the radicand, b = 0 collapsing to the
//! rational variant), so structural equality is numeric equality and
//! comparisons never touch floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Radicands with a prime factor above this bound cannot be certified
/// squarefree by trial division and are rejected.
const TRIAL_DIVISION_BOUND: u64 = 1_000_000;

/// a + b*sqrt(d) with b != 0 and d squarefree, d >= 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadNumber {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadNumber {
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_coeff(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }
}

/// An exact number: a rational or a quadratic irrational.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Quad(QuadNumber),
}

/// Splits n into s^2 * d with d squarefree; returns (s, d).
fn squarefree_decompose_u64(mut n: u64) -> Result<(u64, u64)> {
    debug_assert!(n > 0);
    let mut s = 1u64;
    let mut d = 1u64;
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_BOUND && p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            s *= p.pow(e / 2);
            if e % 2 == 1 {
                d *= p;
            }
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    // Whatever remains has no prime factor <= 10^6, so if it is below
    // 10^18 it is 1, a prime, a semiprime or a prime square.
    if n > 1 {
        if n > TRIAL_DIVISION_BOUND * TRIAL_DIVISION_BOUND * TRIAL_DIVISION_BOUND {
            return Err(Error::RadicandTooLarge);
        }
        let r = n.sqrt();
        if r * r == n {
            s *= r;
        } else {
            d = d.checked_mul(n).ok_or(Error::RadicandTooLarge)?;
        }
    }
    Ok((s, d))
}

fn squarefree_decompose(n: &BigUint) -> Result<(u64, u64)> {
    let n64 = n.to_u64().ok_or(Error::RadicandTooLarge)?;
    squarefree_decompose_u64(n64)
}

/// Sign of a + b*sqrt(d) for squarefree d >= 2, without floating point.
fn sign_with_radical(a: &Rational, b: &Rational, d: u64) -> i32 {
    let sa = rational_sign(a);
    let sb = rational_sign(b);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    // Opposite nonzero signs: compare a^2 against b^2 d. Equality cannot
    // occur since sqrt(d) is irrational.
    let lhs = a * a;
    let rhs = b * b * Rational::from_integer(BigInt::from(d));
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => unreachable!("sqrt({d}) would be rational"),
    }
}

fn rational_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::Rational(Rational::from_integer(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar::Rational(r)
    }

    /// p/q as a scalar; panics if q = 0.
    pub fn ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar::Rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// a + b*sqrt(d) in canonical form.
    pub fn quad(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if b.is_zero() || d == 0 {
            return Ok(Scalar::Rational(a));
        }
        let (s, d) = squarefree_decompose_u64(d.max(1))?;
        let b = b * Rational::from_integer(BigInt::from(s));
        if d == 1 {
            return Ok(Scalar::Rational(a + b));
        }
        Ok(Scalar::Quad(QuadNumber { a, b, d }))
    }

    /// Exact square root of a nonnegative rational, as a scalar in some Q(sqrt d).
    pub fn sqrt_rational(r: &Rational) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::Invalid("square root of a negative rational"));
        }
        if r.is_zero() {
            return Ok(Scalar::zero());
        }
        // sqrt(p/q) = sqrt(p q) / q
        let p = r.numer().magnitude().clone();
        let q = r.denom().magnitude().clone();
        let (s, d) = squarefree_decompose(&(p * &q))?;
        let coeff = Rational::new(BigInt::from(s), BigInt::from(q));
        Scalar::quad(Rational::zero(), coeff, d)
    }

    /// The radicand of the quadratic part; 0 for rationals.
    pub fn radicand(&self) -> u64 {
        match self {
            Scalar::Rational(_) => 0,
            Scalar::Quad(q) => q.d,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(r) if r.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Quad(_) => None,
        }
    }

    /// The integer value, if the scalar is an integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rational(r) if r.is_integer() => Some(r.to_integer()),
            _ => None,
        }
    }

    /// Exact sign: -1, 0 or +1.
    pub fn sign(&self) -> i32 {
        match self {
            Scalar::Rational(r) => rational_sign(r),
            Scalar::Quad(q) => sign_with_radical(&q.a, &q.b, q.d),
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn binop(op: ArithOp, lhs: &Scalar, rhs: &Scalar) -> Result<Scalar> {
        use Scalar::{Quad, Rational as Rat};
        match op {
            ArithOp::Add => match (lhs, rhs) {
                (Rat(x), Rat(y)) => Ok(Rat(x + y)),
                (Rat(x), Quad(q)) => Scalar::quad(x + &q.a, q.b.clone(), q.d),
                (Quad(q), Rat(x)) => Scalar::quad(&q.a + x, q.b.clone(), q.d),
                (Quad(p), Quad(q)) => {
                    if p.d != q.d {
                        return Err(Error::MixedRadicand(p.d, q.d));
                    }
                    Scalar::quad(&p.a + &q.a, &p.b + &q.b, p.d)
                }
            },
            ArithOp::Sub => Scalar::binop(ArithOp::Add, lhs, &(-rhs.clone())),
            ArithOp::Mul => match (lhs, rhs) {
                (Rat(x), Rat(y)) => Ok(Rat(x * y)),
                (Rat(x), Quad(q)) | (Quad(q), Rat(x)) => {
                    Scalar::quad(x * &q.a, x * &q.b, q.d)
                }
                (Quad(p), Quad(q)) => {
                    if p.d != q.d {
                        return Err(Error::MixedRadicand(p.d, q.d));
                    }
                    let d = Rational::from_integer(BigInt::from(p.d));
                    let a = &p.a * &q.a + &p.b * &q.b * d;
                    let b = &p.a * &q.b + &p.b * &q.a;
                    Scalar::quad(a, b, p.d)
                }
            },
            ArithOp::Div => {
                if rhs.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let inv = match rhs {
                    Rat(y) => Rat(y.recip()),
                    Quad(q) => {
                        // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
                        let d = Rational::from_integer(BigInt::from(q.d));
                        let norm = &q.a * &q.a - &q.b * &q.b * d;
                        debug_assert!(!norm.is_zero());
                        Scalar::quad(&q.a / &norm, -(&q.b / &norm), q.d)?
                    }
                };
                Scalar::binop(ArithOp::Mul, lhs, &inv)
            }
        }
    }

    /// Fallible arithmetic; the operator impls unwrap this.
    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        Scalar::binop(ArithOp::Add, self, rhs)
    }
    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        Scalar::binop(ArithOp::Sub, self, rhs)
    }
    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        Scalar::binop(ArithOp::Mul, self, rhs)
    }
    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Scalar::binop(ArithOp::Div, self, rhs)
    }

    /// The radicand the pair of scalars lives in, or an error when both
    /// carry distinct irrational parts.
    pub fn common_radicand(lhs: &Scalar, rhs: &Scalar) -> Result<u64> {
        match (lhs.radicand(), rhs.radicand()) {
            (0, d) | (d, 0) => Ok(d),
            (d1, d2) if d1 == d2 => Ok(d1),
            (d1, d2) => Err(Error::MixedRadicand(d1, d2)),
        }
    }

    /// Nearest float64; for reports and figures only, never for decisions.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Quad(q) => {
                let a = q.a.to_f64().unwrap_or(f64::NAN);
                let b = q.b.to_f64().unwrap_or(f64::NAN);
                a + b * (q.d as f64).sqrt()
            }
        }
    }

    /// Exact floor as a big integer.
    pub fn floor_int(&self) -> BigInt {
        match self {
            Scalar::Rational(r) => r.floor().to_integer(),
            Scalar::Quad(_) => {
                let mut n = BigInt::from(self.to_f64().floor() as i64);
                let mut guard = 0u32;
                loop {
                    let lo = Scalar::from_bigint(n.clone());
                    let hi = Scalar::from_bigint(&n + 1);
                    if *self >= lo && *self < hi {
                        return n;
                    }
                    if *self < lo {
                        n -= 1;
                    } else {
                        n += 1;
                    }
                    guard += 1;
                    assert!(guard < 10_000, "floor hint diverged");
                }
            }
        }
    }

    /// Exact ceiling as a big integer.
    pub fn ceil_int(&self) -> BigInt {
        -((-self.clone()).floor_int())
    }

    /// A rational enclosure [lo, hi] of the value with hi - lo <= prec.
    pub fn rational_bounds(&self, prec: &Rational) -> (Rational, Rational) {
        assert!(prec.is_positive());
        match self {
            Scalar::Rational(r) => (r.clone(), r.clone()),
            Scalar::Quad(q) => {
                // Choose k with |b| / 2^k <= prec, then sqrt(d) is within
                // [t, t+1] / 2^k for t = isqrt(d * 4^k).
                let mut k = 8u32;
                let babs = q.b.abs();
                loop {
                    let scale = Rational::new(BigInt::one(), BigInt::from(2u8).pow(k));
                    if &babs * &scale <= *prec {
                        break;
                    }
                    k += 8;
                }
                let t = (BigUint::from(q.d) << (2 * k)).sqrt();
                let pow = BigInt::from(2u8).pow(k);
                let root_lo = Rational::new(BigInt::from(t.clone()), pow.clone());
                let root_hi = Rational::new(BigInt::from(t) + 1, pow);
                let (x, y) = (&q.a + &q.b * &root_lo, &q.a + &q.b * &root_hi);
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            }
        }
    }
}

#[derive(Clone, Copy)]
enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A rational upper bound on sqrt(r) for r >= 0, within 2^-16 of the root.
pub(crate) fn sqrt_upper(r: &Rational) -> Rational {
    debug_assert!(!r.is_negative());
    // sqrt(n/m) = sqrt(n m 4^k) / (m 2^k) <= (isqrt(n m 4^k) + 1) / (m 2^k)
    const K: u32 = 16;
    let nm = (r.numer().magnitude() * r.denom().magnitude()) << (2 * K);
    let mut root = nm.sqrt();
    if &root * &root != nm {
        root += 1u8;
    }
    Rational::new(
        BigInt::from(root),
        r.denom() << K,
    )
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Scalar) -> Ordering {
        use Scalar::{Quad, Rational as Rat};
        let sig = match (self, other) {
            (Rat(x), Rat(y)) => return x.cmp(y),
            (Rat(x), Quad(q)) => -sign_with_radical(&(&q.a - x), &q.b, q.d),
            (Quad(q), Rat(x)) => sign_with_radical(&(&q.a - x), &q.b, q.d),
            (Quad(p), Quad(q)) if p.d == q.d => {
                sign_with_radical(&(&p.a - &q.a), &(&p.b - &q.b), p.d)
            }
            (Quad(p), Quad(q)) => {
                // sign of X - Y with X = (pa - qa) + pb sqrt(dp), Y = qb sqrt(dq).
                let a = &p.a - &q.a;
                let s1 = sign_with_radical(&a, &p.b, p.d);
                let s2 = rational_sign(&q.b);
                if s1 != s2 {
                    if s1 == 0 {
                        -s2
                    } else {
                        s1
                    }
                } else {
                    // Same nonzero sign s: sign(X - Y) = s * sign(X^2 - Y^2).
                    let dp = Rational::from_integer(BigInt::from(p.d));
                    let dq = Rational::from_integer(BigInt::from(q.d));
                    let x2a = &a * &a + &p.b * &p.b * dp;
                    let x2b = Rational::from_integer(BigInt::from(2)) * &a * &p.b;
                    let y2 = &q.b * &q.b * dq;
                    s1 * sign_with_radical(&(x2a - y2), &x2b, p.d)
                }
            }
        };
        match sig {
            s if s > 0 => Ordering::Greater,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

macro_rules! scalar_binop_impl {
    ($trait:ident, $method:ident, $checked:ident, $what:literal) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$checked(&self, &rhs).expect($what)
            }
        }
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar::$checked(self, rhs).expect($what)
            }
        }
    };
}

scalar_binop_impl!(Add, add, try_add, "scalar addition failed");
scalar_binop_impl!(Sub, sub, try_sub, "scalar subtraction failed");
scalar_binop_impl!(Mul, mul, try_mul, "scalar multiplication failed");
scalar_binop_impl!(Div, div, try_div, "scalar division failed");

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quad(q) => Scalar::Quad(QuadNumber {
                a: -q.a,
                b: -q.b,
                d: q.d,
            }),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => fmt_rational(r, f),
            Scalar::Quad(q) => {
                if !q.a.is_zero() {
                    fmt_rational(&q.a, f)?;
                    write!(f, " {} ", if q.b.is_positive() { "+" } else { "-" })?;
                } else if q.b.is_negative() {
                    write!(f, "-")?;
                }
                let babs = q.b.abs();
                if babs.is_one() {
                } else if babs.is_integer() {
                    write!(f, "{}", babs.numer())?;
                } else {
                    write!(f, "({}/{})", babs.numer(), babs.denom())?;
                }
                write!(f, "\u{221a}{}", q.d)
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses "p" or "p/q" as an exact rational.
    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Invalid("malformed rational literal"))
        };
        match s.split_once('/') {
            None => Ok(Scalar::from_bigint(parse_int(s)?)),
            Some((p, q)) => {
                let num = parse_int(p)?;
                let den = parse_int(q)?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rational(Rational::new(num, den)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: (i64, i64), b: (i64, i64), d: u64) -> Scalar {
        Scalar::quad(
            Rational::new(BigInt::from(a.0), BigInt::from(a.1)),
            Rational::new(BigInt::from(b.0), BigInt::from(b.1)),
            d,
        )
        .unwrap()
    }

    /// 1 + 2/sqrt(3) = 1 + (2/3) sqrt(3).
    fn hurkens_width() -> Scalar {
        q((1, 1), (2, 3), 3)
    }

    #[test]
    fn product_of_conjugates() {
        let x = q((1, 1), (1, 1), 3);
        let y = q((1, 1), (-1, 1), 3);
        assert_eq!(&x * &y, Scalar::from_int(-2));
    }

    #[test]
    fn sqrt3_over_3_squares_to_third() {
        let x = &q((0, 1), (1, 1), 3) / &Scalar::from_int(3);
        assert_eq!(x, q((0, 1), (1, 3), 3));
        assert_eq!(&x * &x, Scalar::ratio(1, 3));
    }

    #[test]
    fn lambda_at_hurkens_width_is_inv_sqrt3() {
        // (2 + sqrt 3)(3 - 2 sqrt 3) / (9 - 12) = sqrt(3)/3 = 1/sqrt(3)
        let num = &q((2, 1), (1, 1), 3) * &q((3, 1), (-2, 1), 3);
        let lam = &num / &Scalar::from_int(9 - 12);
        assert_eq!(lam, q((0, 1), (1, 3), 3));
        assert!((lam.to_f64() - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        // and it is indeed lambda(w0): (3 w0 + 1) / (6 w0) with w0 = 1 + 2/sqrt 3
        let w0 = hurkens_width();
        let lam2 = &(&(&Scalar::from_int(3) * &w0) + &Scalar::one())
            / &(&Scalar::from_int(6) * &w0);
        assert_eq!(lam, lam2);
    }

    #[test]
    fn exact_signs() {
        assert_eq!(q((2, 1), (-1, 1), 3).sign(), 1);
        assert_eq!(q((1, 1), (-1, 1), 3).sign(), -1);
        let diff = &hurkens_width() - &Scalar::ratio(21_547, 10_000);
        assert_eq!(diff.sign(), 1);
        assert_eq!(Scalar::zero().sign(), 0);
    }

    #[test]
    fn float_rendering() {
        assert_eq!(Scalar::ratio(3, 2).to_f64(), 1.5);
        assert!((hurkens_width().to_f64() - 2.154_700_538_379_251_5).abs() < 1e-12);
        assert_eq!(Scalar::zero().to_f64(), 0.0);
    }

    #[test]
    fn canonicalization() {
        // square factor extracted from the radicand
        assert_eq!(q((1, 1), (1, 1), 12), q((1, 1), (2, 1), 3));
        // d = 1 collapses to a rational
        assert_eq!(
            Scalar::quad(Rational::one(), Rational::one(), 1).unwrap(),
            Scalar::from_int(2)
        );
        // b = 0 collapses regardless of d
        assert_eq!(
            Scalar::quad(Rational::one(), Rational::zero(), 5).unwrap(),
            Scalar::one()
        );
        assert_eq!(q((0, 1), (2, 1), 18), q((0, 1), (6, 1), 2));
    }

    #[test]
    fn sqrt_rational_values() {
        assert_eq!(
            Scalar::sqrt_rational(&Rational::new(BigInt::from(1), BigInt::from(3))).unwrap(),
            q((0, 1), (1, 3), 3)
        );
        assert_eq!(
            Scalar::sqrt_rational(&Rational::new(BigInt::from(4), BigInt::from(9))).unwrap(),
            Scalar::ratio(2, 3)
        );
        assert_eq!(
            Scalar::sqrt_rational(&Rational::zero()).unwrap(),
            Scalar::zero()
        );
    }

    #[test]
    fn arithmetic_errors() {
        let a = q((0, 1), (1, 1), 2);
        let b = q((0, 1), (1, 1), 3);
        assert_eq!(a.try_add(&b), Err(Error::MixedRadicand(2, 3)));
        assert_eq!(a.try_div(&Scalar::zero()), Err(Error::DivisionByZero));
        // rationals coerce into any radicand
        assert_eq!(Scalar::one().try_mul(&b).unwrap(), b);
    }

    #[test]
    fn total_order_across_radicands() {
        let sqrt2 = q((0, 1), (1, 1), 2);
        let sqrt3 = q((0, 1), (1, 1), 3);
        let two = Scalar::from_int(2);
        let one_plus_sqrt2 = q((1, 1), (1, 1), 2);
        assert!(sqrt2 < sqrt3);
        assert!(sqrt3 < two);
        assert!(two < one_plus_sqrt2);
        assert!(one_plus_sqrt2 < hurkens_width() + Scalar::one());
        // mixed-radicand comparison with equal rational gaps
        assert!(q((5, 1), (1, 1), 2) < q((5, 1), (1, 1), 3));
    }

    #[test]
    fn floors_and_ceilings() {
        assert_eq!(q((0, 1), (1, 1), 3).floor_int(), BigInt::from(1));
        assert_eq!(q((0, 1), (-1, 1), 3).floor_int(), BigInt::from(-2));
        assert_eq!(Scalar::ratio(5, 2).floor_int(), BigInt::from(2));
        assert_eq!(Scalar::ratio(-5, 2).floor_int(), BigInt::from(-3));
        assert_eq!(Scalar::ratio(-5, 2).ceil_int(), BigInt::from(-2));
        assert_eq!(hurkens_width().ceil_int(), BigInt::from(3));
    }

    #[test]
    fn bounded_enclosure() {
        let prec = Rational::new(BigInt::from(1), BigInt::from(1_000_000));
        let (lo, hi) = hurkens_width().rational_bounds(&prec);
        assert!(&hi - &lo <= prec);
        let v = Scalar::Rational(lo.clone());
        let w = Scalar::Rational(hi.clone());
        assert!(v <= hurkens_width() && hurkens_width() <= w);
    }

    #[test]
    fn display_formats() {
        assert_eq!(Scalar::ratio(3, 2).to_string(), "3/2");
        assert_eq!(Scalar::from_int(-7).to_string(), "-7");
        assert_eq!(hurkens_width().to_string(), "1 + (2/3)\u{221a}3");
        assert_eq!(q((0, 1), (-1, 1), 2).to_string(), "-\u{221a}2");
        assert_eq!(q((1, 2), (3, 1), 5).to_string(), "1/2 + 3\u{221a}5");
    }

    #[test]
    fn parse_rationals() {
        assert_eq!("3/4".parse::<Scalar>().unwrap(), Scalar::ratio(3, 4));
        assert_eq!("-12".parse::<Scalar>().unwrap(), Scalar::from_int(-12));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=20)
            .prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (arb_rational(), arb_rational(), prop::sample::select(vec![0u64, 2, 3, 5, 7]))
            .prop_map(|(a, b, d)| Scalar::quad(a, b, d).unwrap())
    }

    /// Three scalars sharing one quadratic extension.
    fn arb_scalar_triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
        (
            prop::sample::select(vec![0u64, 2, 3, 5, 7]),
            [arb_rational(), arb_rational()],
            [arb_rational(), arb_rational()],
            [arb_rational(), arb_rational()],
        )
            .prop_map(|(d, p, q, r)| {
                let mk = |[a, b]: [Rational; 2]| Scalar::quad(a, b, d).unwrap();
                (mk(p), mk(q), mk(r))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms((x, y, z) in arb_scalar_triple()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x + &Scalar::zero(), x.clone());
            prop_assert_eq!(&x * &Scalar::one(), x.clone());
            if !x.is_zero() {
                prop_assert_eq!(&(&Scalar::one() / &x) * &x, Scalar::one());
            }
        }

        #[test]
        fn squares_are_nonnegative(x in arb_scalar()) {
            prop_assert!((&x * &x).sign() >= 0);
            prop_assert_eq!(x.sign() == 0, x.is_zero());
        }

        #[test]
        fn float_sign_agrees((x, y, _) in arb_scalar_triple()) {
            let diff = &x - &y;
            let f = diff.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(f.signum() as i32, diff.sign());
            }
        }

        #[test]
        fn order_is_consistent(x in arb_scalar(), y in arb_scalar()) {
            let ord = x.cmp(&y);
            prop_assert_eq!(ord == Ordering::Equal, x == y);
            prop_assert_eq!(y.cmp(&x), ord.reverse());
        }
    }
}
