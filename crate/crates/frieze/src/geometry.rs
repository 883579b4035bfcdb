//! Exact rational points, polygons, and the two fundamental measurements:
//! squared distance x_ij and four-times-signed-area S_ijk.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Scalar field of the whole crate: arbitrary-precision rationals, always in
/// lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Parse a rational from a decimal-integer fraction literal: `"p/q"` or `"p"`
/// (meaning p/1). The denominator must be a positive integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = |reason: &str| Error::InvalidRational {
        literal: s.to_string(),
        reason: reason.to_string(),
    };
    let mut parts = s.splitn(2, '/');
    let num_str = parts.next().unwrap_or("").trim();
    let num: BigInt = num_str.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = match parts.next() {
        None => BigInt::one(),
        Some(d) => {
            let d = d.trim();
            if d.starts_with('+') || d.starts_with('-') {
                return Err(err("denominator must be an unsigned integer"));
            }
            d.parse().map_err(|_| err("bad denominator"))?
        }
    };
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical fraction string: `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A point of the plane with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    /// Point with integer coordinates; convenient in tests and examples.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: Rational::from_integer(x.into()),
            y: Rational::from_integer(y.into()),
        }
    }
}

/// A labeled n-gon: an ordered tuple of vertices (A_1, ..., A_n), n >= 3.
///
/// Vertex indices are 1-based and cyclic. Repeated or collinear vertices are
/// legitimate input: every identity checked by this crate is polynomial in the
/// coordinates and holds for degenerate polygons too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::PolygonTooSmall(vertices.len()));
        }
        Ok(Polygon { vertices })
    }

    /// Polygon from integer coordinate pairs.
    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self> {
        Polygon::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// 1-based vertex access.
    pub fn vertex(&self, i: usize) -> Result<&Point> {
        self.check_index(i)?;
        Ok(&self.vertices[i - 1])
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < 1 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i, n: self.n() });
        }
        Ok(())
    }

    /// Squared distance x_ij = (x_j - x_i)^2 + (y_j - y_i)^2.
    pub fn squared_distance(&self, i: usize, j: usize) -> Result<Rational> {
        self.check_index(i)?;
        self.check_index(j)?;
        let (a, b) = (&self.vertices[i - 1], &self.vertices[j - 1]);
        let dx = &b.x - &a.x;
        let dy = &b.y - &a.y;
        Ok(&dx * &dx + &dy * &dy)
    }

    /// Four times the signed area of triangle A_i A_j A_k:
    /// S_ijk = 2[(x_j - x_i)(y_k - y_i) - (y_j - y_i)(x_k - x_i)].
    /// Positive when i, j, k run anticlockwise.
    pub fn signed_area4(&self, i: usize, j: usize, k: usize) -> Result<Rational> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_index(k)?;
        let (a, b, c) = (
            &self.vertices[i - 1],
            &self.vertices[j - 1],
            &self.vertices[k - 1],
        );
        let v = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
        Ok(Rational::from_integer(2.into()) * v)
    }
}

/// Deterministic random polygon: n vertices whose coordinates are rationals
/// with |numerator| <= bound and 1 <= denominator <= bound.
///
/// The generator is ChaCha8 seeded with `seed`; the stream is fixed per
/// release, so identical (n, seed, bound) always yield identical polygons.
pub fn random_polygon(n: usize, seed: u64, bound: u64) -> Result<Polygon> {
    if n < 3 {
        return Err(Error::PolygonTooSmall(n));
    }
    if bound < 1 {
        return Err(Error::InvalidInput("bound must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = bound as i64;
    let coord = |rng: &mut ChaCha8Rng| {
        let num: i64 = rng.random_range(-b..=b);
        let den: i64 = rng.random_range(1..=b);
        Rational::new(num.into(), den.into())
    };
    let vertices = (0..n)
        .map(|_| {
            let x = coord(&mut rng);
            let y = coord(&mut rng);
            Point::new(x, y)
        })
        .collect();
    Polygon::new(vertices)
}

/// Shorthand for an integer as a `Rational`.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// The running example: unit square (0,0), (1,0), (1,1), (0,1).
#[cfg(test)]
pub(crate) fn unit_square() -> Polygon {
    Polygon::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
}
