//! Coordinate matrices, ordered minors, sign-normalized Plücker coordinates,
//! and the quadratic Plücker relations of Gr(k, n).
//!
//! Plücker coordinates are computed directly as maximal minors; the relations
//! are exact polynomial identities, so they evaluate to zero on every k×n
//! rational matrix, not only on rank-k ones.

use num_traits::Zero;

use crate::geometry::{Polygon, Rational};
use crate::{Error, Result};

/// A k×n matrix of exact rationals whose maximal minors realize Plücker
/// coordinates. For a polygon the Heronian case is k = 3 with columns
/// (1, x_m, y_m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateMatrix {
    rows: Vec<Vec<Rational>>,
}

impl CoordinateMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let k = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::RaggedMatrix);
        }
        if k < 1 || k > n {
            return Err(Error::BadGrassmannian { k, n });
        }
        Ok(CoordinateMatrix { rows })
    }

    /// The 3×n coordinate matrix of a polygon: column m is (1, x_m, y_m).
    /// Its minor m_ijk equals twice the signed area of triangle A_i A_j A_k,
    /// so 2 m_ijk = S_ijk.
    pub fn from_polygon(p: &Polygon) -> Self {
        let one = Rational::from_integer(1.into());
        let rows = vec![
            vec![one; p.n()],
            p.vertices().iter().map(|v| v.x.clone()).collect(),
            p.vertices().iter().map(|v| v.y.clone()).collect(),
        ];
        CoordinateMatrix { rows }
    }

    /// The 2×n matrix with column m = (x_m, y_m); the k = 2 analogue used by
    /// the determinant sweeps.
    pub fn xy_from_polygon(p: &Polygon) -> Self {
        let rows = vec![
            p.vertices().iter().map(|v| v.x.clone()).collect(),
            p.vertices().iter().map(|v| v.y.clone()).collect(),
        ];
        CoordinateMatrix { rows }
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.rows[row - 1][col - 1]
    }

    /// Determinant of the k×k submatrix on the listed columns, taken in the
    /// given order (1-based). Alternating in the column order; zero when a
    /// column repeats.
    pub fn minor(&self, cols: &[usize]) -> Result<Rational> {
        let k = self.k();
        if cols.len() != k {
            return Err(Error::BadTupleLength { got: cols.len(), expected: k });
        }
        for &c in cols {
            if c < 1 || c > self.n() {
                return Err(Error::IndexOutOfRange { index: c, n: self.n() });
            }
        }
        let sub: Vec<Vec<Rational>> = (0..k)
            .map(|r| cols.iter().map(|&c| self.rows[r][c - 1].clone()).collect())
            .collect();
        Ok(determinant(&sub))
    }
}

/// Cofactor-expansion determinant; matrices here are at most 5×5.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    match n {
        0 => Rational::from_integer(1.into()),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut acc = Rational::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Rational>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(i, _)| *i != c)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][c] * determinant(&sub);
                if c % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Sort an index tuple, reporting the sign of the sorting permutation.
/// Returns sign 0 when an index repeats (the coordinate vanishes).
pub fn plucker_normalize(tuple: &[usize]) -> (Vec<usize>, i8) {
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return (sorted, 0);
    }
    let mut sign = 1i8;
    for i in 0..tuple.len() {
        for j in (i + 1)..tuple.len() {
            if tuple[i] > tuple[j] {
                sign = -sign;
            }
        }
    }
    (sorted, sign)
}

/// One quadratic Plücker relation of Gr(k, n):
/// sum_{r=0}^{k} (-1)^r p_{i_1..i_{k-1}, j_r} p_{j_0..ĵ_r..j_k} = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerRelation {
    pub k: usize,
    /// Strictly increasing (k-1)-tuple.
    pub i_tuple: Vec<usize>,
    /// Strictly increasing (k+1)-tuple.
    pub j_tuple: Vec<usize>,
}

/// A signed monomial of a Plücker relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTerm {
    pub sign: i8,
    /// Columns of the first factor, in relation order (i-tuple then j_r).
    pub left: Vec<usize>,
    /// Columns of the second factor, in increasing order.
    pub right: Vec<usize>,
}

impl RelationTerm {
    /// Identically zero: one factor has a repeated column.
    pub fn is_zero(&self) -> bool {
        has_repeat(&self.left) || has_repeat(&self.right)
    }
}

fn has_repeat(t: &[usize]) -> bool {
    let mut s = t.to_vec();
    s.sort_unstable();
    s.windows(2).any(|w| w[0] == w[1])
}

impl PluckerRelation {
    /// The k+1 signed monomials, term r carrying sign (-1)^r.
    pub fn terms(&self) -> Vec<RelationTerm> {
        (0..self.j_tuple.len())
            .map(|r| {
                let mut left = self.i_tuple.clone();
                left.push(self.j_tuple[r]);
                let right: Vec<usize> = self
                    .j_tuple
                    .iter()
                    .enumerate()
                    .filter(|(idx, _)| *idx != r)
                    .map(|(_, &v)| v)
                    .collect();
                RelationTerm {
                    sign: if r % 2 == 0 { 1 } else { -1 },
                    left,
                    right,
                }
            })
            .collect()
    }
}

/// All Plücker relations of Gr(k, n): one per pair of a strictly increasing
/// (k-1)-tuple and a strictly increasing (k+1)-tuple, in lexicographic order.
pub fn generate_plucker_relations(k: usize, n: usize) -> Result<Vec<PluckerRelation>> {
    if k < 2 || k > n {
        return Err(Error::BadGrassmannian { k, n });
    }
    let i_tuples = increasing_tuples(k - 1, n);
    let j_tuples = increasing_tuples(k + 1, n);
    let mut out = Vec::with_capacity(i_tuples.len() * j_tuples.len());
    for i_tuple in &i_tuples {
        for j_tuple in &j_tuples {
            out.push(PluckerRelation {
                k,
                i_tuple: i_tuple.clone(),
                j_tuple: j_tuple.clone(),
            });
        }
    }
    Ok(out)
}

/// Strictly increasing length-`len` tuples over {1..n}, lexicographic.
pub fn increasing_tuples(len: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=len).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination
        let mut idx = len;
        loop {
            if idx == 0 {
                return out;
            }
            idx -= 1;
            if cur[idx] < n - (len - 1 - idx) {
                cur[idx] += 1;
                for t in idx + 1..len {
                    cur[t] = cur[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Exact value of a relation on a matrix; zero for every k×n matrix.
pub fn evaluate_relation(m: &CoordinateMatrix, relation: &PluckerRelation) -> Result<Rational> {
    if m.k() != relation.k {
        return Err(Error::DimensionMismatch { rows: m.k(), expected: relation.k });
    }
    let mut acc = Rational::zero();
    for term in relation.terms() {
        if term.is_zero() {
            continue;
        }
        let prod = m.minor(&term.left)? * m.minor(&term.right)?;
        if term.sign > 0 {
            acc += prod;
        } else {
            acc -= prod;
        }
    }
    Ok(acc)
}
