//! Heronian diamonds and the polygonal Heronian frieze.
//!
//! A Heronian diamond is a 10-tuple (a, b, c, d, e, f, p, q, r, s) satisfying
//! seven polynomial equations; the measurement data of the two triangulations
//! of a plane quadrilateral always satisfies them. A Heronian frieze of order
//! n arranges squared distances z_ij and area entries S_ijk so that every
//! diamond of the pattern is Heronian, with zero boundary entries.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::geometry::{Polygon, Rational};
use crate::{rep, Error, Result};

/// H(x,y,z) = -x^2 - y^2 - z^2 + 2xy + 2xz + 2yz, totally symmetric.
///
/// For the squared side lengths of a triangle, H is 16 times the squared area
/// (Heron's formula), which is how these friezes got their name.
pub fn heron_h(x: &Rational, y: &Rational, z: &Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    -(x * x) - y * y - z * z + &two * (x * y) + &two * (x * z) + two * (y * z)
}

/// An ordered 10-tuple; `residuals` decides whether it is a Heronian diamond.
///
/// Geometrically (for a quadrilateral A_i A_j A_k A_l): a..f are the squared
/// sides and diagonals, p, q, r, s the four triangle areas (times four).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeronianDiamond {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub f: Rational,
    pub p: Rational,
    pub q: Rational,
    pub r: Rational,
    pub s: Rational,
}

impl HeronianDiamond {
    pub fn from_tuple(t: [Rational; 10]) -> Self {
        let [a, b, c, d, e, f, p, q, r, s] = t;
        HeronianDiamond { a, b, c, d, e, f, p, q, r, s }
    }

    pub fn as_tuple(&self) -> [&Rational; 10] {
        [
            &self.a, &self.b, &self.c, &self.d, &self.e, &self.f, &self.p, &self.q, &self.r,
            &self.s,
        ]
    }

    /// Exact residual (left minus right) of each of the seven diamond
    /// equations, in order. The diamond is Heronian iff all seven are zero.
    pub fn residuals(&self) -> [Rational; 7] {
        let d = self;
        let four = Rational::from_integer(4.into());
        let pq = &d.p + &d.q;
        let alt = &d.a - &d.b + &d.c - &d.d;
        [
            &d.p * &d.p - heron_h(&d.b, &d.c, &d.e),
            &d.q * &d.q - heron_h(&d.a, &d.d, &d.e),
            &d.r * &d.r - heron_h(&d.a, &d.f, &d.b),
            &d.s * &d.s - heron_h(&d.c, &d.f, &d.d),
            &d.r + &d.s - &pq,
            four * (&d.e * &d.f) - &pq * &pq - &alt * &alt,
            &d.e * (&d.r - &d.s) - &d.p * (&d.a - &d.d) - &d.q * (&d.b - &d.c),
        ]
    }

    pub fn is_heronian(&self) -> bool {
        self.residuals().iter().all(Rational::is_zero)
    }
}

/// Label of a frieze diamond: the vertex quadruple (i, j, k, l). In a frieze
/// every diamond has the form (b, b+1, c, c+1) mod n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiamondLabel {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl DiamondLabel {
    /// The diamond (b, b+1, c, c+1) mod n.
    pub fn of_pair(b: usize, c: usize, n: usize) -> Self {
        DiamondLabel {
            i: b,
            j: rep(b as i64 + 1, n),
            k: c,
            l: rep(c as i64 + 1, n),
        }
    }

    /// Accept an explicit quadruple only if it has the frieze form.
    pub fn new(i: usize, j: usize, k: usize, l: usize, n: usize) -> Result<Self> {
        let in_range = |x: usize| (1..=n).contains(&x);
        if !(in_range(i) && in_range(j) && in_range(k) && in_range(l))
            || j != rep(i as i64 + 1, n)
            || l != rep(k as i64 + 1, n)
        {
            return Err(Error::BadDiamondLabel(i, j, k, l));
        }
        Ok(DiamondLabel { i, j, k, l })
    }
}

impl fmt::Display for DiamondLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.i, self.j, self.k, self.l)
    }
}

/// Key forms a frieze stores: (a, a+1, b) and (a, b, b+1), addition mod n.
pub fn is_stored_form(t: (usize, usize, usize), n: usize) -> bool {
    let (a, b, c) = t;
    let in_range = |x: usize| (1..=n).contains(&x);
    in_range(a) && in_range(b) && in_range(c) && (b == rep(a as i64 + 1, n) || c == rep(b as i64 + 1, n))
}

/// A Heronian frieze of order n: all squared distances z_ij plus the area
/// entries S on triples of the two stored forms. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeronianFrieze {
    n: usize,
    z: BTreeMap<(usize, usize), Rational>,
    s: BTreeMap<(usize, usize, usize), Rational>,
}

/// One failed check from `HeronianFrieze::verify`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Diamond equation `equation` (1-based, 1..=7) has a nonzero residual.
    DiamondEquation {
        label: DiamondLabel,
        equation: usize,
        residual: Rational,
    },
    /// A boundary entry that must vanish does not.
    BoundaryZ { i: usize, value: Rational },
    BoundaryS {
        key: (usize, usize, usize),
        value: Rational,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DiamondEquation { label, equation, residual } => write!(
                f,
                "diamond {label}: equation ({equation}) residual {}",
                crate::geometry::format_rational(residual)
            ),
            Violation::BoundaryZ { i, value } => write!(
                f,
                "boundary: z_{{{i},{i}}} = {} (expected 0)",
                crate::geometry::format_rational(value)
            ),
            Violation::BoundaryS { key, value } => write!(
                f,
                "boundary: S_{{{},{},{}}} = {} (expected 0)",
                key.0,
                key.1,
                key.2,
                crate::geometry::format_rational(value)
            ),
        }
    }
}

/// Result of sweeping every diamond and boundary condition of a frieze.
#[derive(Clone, Debug, Default)]
pub struct FriezeReport {
    pub diamonds_checked: usize,
    pub violations: Vec<Violation>,
}

impl FriezeReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl HeronianFrieze {
    /// The polygonal Heronian frieze of `p`: z_ij := x_ij and the S entries
    /// are the signed-area measurements. Boundary conditions hold by
    /// construction.
    pub fn from_polygon(p: &Polygon) -> Self {
        let n = p.n();
        let mut z = BTreeMap::new();
        for i in 1..=n {
            for j in i..=n {
                z.insert((i, j), p.squared_distance(i, j).unwrap());
            }
        }
        let mut s = BTreeMap::new();
        for a in 1..=n {
            let a1 = rep(a as i64 + 1, n);
            for b in 1..=n {
                let b1 = rep(b as i64 + 1, n);
                s.insert((a, a1, b), p.signed_area4(a, a1, b).unwrap());
                s.insert((a, b, b1), p.signed_area4(a, b, b1).unwrap());
            }
        }
        HeronianFrieze { n, z, s }
    }

    /// Rebuild a frieze from explicit entries (e.g. a parsed export). Every z
    /// pair and every stored-form S triple must be present; S keys outside
    /// the two allowed forms are rejected.
    pub fn from_entries(
        n: usize,
        z_entries: impl IntoIterator<Item = ((usize, usize), Rational)>,
        s_entries: impl IntoIterator<Item = ((usize, usize, usize), Rational)>,
    ) -> Result<Self> {
        if n < 3 {
            return Err(Error::PolygonTooSmall(n));
        }
        let mut z = BTreeMap::new();
        for ((i, j), v) in z_entries {
            if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
                return Err(Error::IndexOutOfRange { index: i.max(j), n });
            }
            let key = (i.min(j), i.max(j));
            match z.get(&key) {
                Some(old) if *old != v => {
                    return Err(Error::InvalidInput(format!(
                        "conflicting values for z_{{{},{}}}",
                        key.0, key.1
                    )));
                }
                _ => {
                    z.insert(key, v);
                }
            }
        }
        let mut s = BTreeMap::new();
        for (key, v) in s_entries {
            if !is_stored_form(key, n) {
                return Err(Error::BadEntryForm(key));
            }
            s.insert(key, v);
        }
        let frieze = HeronianFrieze { n, z, s };
        frieze.check_complete()?;
        Ok(frieze)
    }

    fn check_complete(&self) -> Result<()> {
        let n = self.n;
        for i in 1..=n {
            for j in i..=n {
                if !self.z.contains_key(&(i, j)) {
                    return Err(Error::MissingEntry(format!("z_{{{i},{j}}}")));
                }
            }
        }
        for a in 1..=n {
            let a1 = rep(a as i64 + 1, n);
            for b in 1..=n {
                let b1 = rep(b as i64 + 1, n);
                for key in [(a, a1, b), (a, b, b1)] {
                    if !self.s.contains_key(&key) {
                        return Err(Error::MissingEntry(format!(
                            "S_{{{},{},{}}}",
                            key.0, key.1, key.2
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Squared-distance entry, symmetric in (i, j).
    pub fn z(&self, i: usize, j: usize) -> Result<&Rational> {
        if !(1..=self.n).contains(&i) || !(1..=self.n).contains(&j) {
            return Err(Error::IndexOutOfRange { index: i.max(j), n: self.n });
        }
        Ok(&self.z[&(i.min(j), i.max(j))])
    }

    /// Area entry at a stored-form key.
    pub fn s(&self, key: (usize, usize, usize)) -> Result<&Rational> {
        self.s
            .get(&key)
            .ok_or(Error::BadEntryForm(key))
    }

    /// Resolve S_ijk for an arbitrary triple using the sign identities:
    /// looks for a permutation stored in the frieze and applies its sign.
    /// Triples with a repeated index that are not stored resolve to 0.
    pub fn s_value(&self, t: (usize, usize, usize)) -> Option<Rational> {
        let (i, j, k) = t;
        let perms: [([usize; 3], i8); 6] = [
            ([i, j, k], 1),
            ([j, k, i], 1),
            ([k, i, j], 1),
            ([i, k, j], -1),
            ([j, i, k], -1),
            ([k, j, i], -1),
        ];
        for (p, sign) in perms {
            if let Some(v) = self.s.get(&(p[0], p[1], p[2])) {
                return Some(if sign > 0 { v.clone() } else { -v });
            }
        }
        if i == j || j == k || i == k {
            return Some(Rational::zero());
        }
        None
    }

    pub fn z_entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.z.iter()
    }

    pub fn s_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Rational)> {
        self.s.iter()
    }

    /// Copy of this frieze with z_ij replaced by z_ij + delta.
    pub fn with_z_perturbed(&self, i: usize, j: usize, delta: &Rational) -> Result<Self> {
        let mut out = self.clone();
        let key = (i.min(j), i.max(j));
        let v = out
            .z
            .get_mut(&key)
            .ok_or(Error::IndexOutOfRange { index: i.max(j), n: self.n })?;
        *v += delta;
        Ok(out)
    }

    /// Copy of this frieze with the S entry at `key` replaced by S + delta.
    pub fn with_s_perturbed(&self, key: (usize, usize, usize), delta: &Rational) -> Result<Self> {
        let mut out = self.clone();
        let v = out.s.get_mut(&key).ok_or(Error::BadEntryForm(key))?;
        *v += delta;
        Ok(out)
    }

    /// The ten measurements of the diamond labeled (i, j, k, l):
    /// (x_il, x_ij, x_jk, x_kl, x_ik, x_jl, S_ijk, S_ikl, S_ijl, S_jkl).
    pub fn extract_diamond(&self, label: &DiamondLabel) -> Result<HeronianDiamond> {
        let DiamondLabel { i, j, k, l } = *label;
        // all four S entries are in stored form for a frieze-form label
        Ok(HeronianDiamond {
            a: self.z(i, l)?.clone(),
            b: self.z(i, j)?.clone(),
            c: self.z(j, k)?.clone(),
            d: self.z(k, l)?.clone(),
            e: self.z(i, k)?.clone(),
            f: self.z(j, l)?.clone(),
            p: self.s((i, j, k))?.clone(),
            q: self.s((i, k, l))?.clone(),
            r: self.s((i, j, l))?.clone(),
            s: self.s((j, k, l))?.clone(),
        })
    }

    /// Check every diamond (b, b+1, c, c+1), b, c in 1..=n (the degenerate
    /// first/last-row diamonds included), plus the boundary conditions.
    /// Findings come back sorted by label and equation number.
    pub fn verify(&self) -> FriezeReport {
        let n = self.n;
        let labels: Vec<DiamondLabel> = (1..=n)
            .flat_map(|b| (1..=n).map(move |c| DiamondLabel::of_pair(b, c, n)))
            .collect();
        let mut violations: Vec<Violation> = labels
            .par_iter()
            .flat_map_iter(|label| {
                let diamond = self.extract_diamond(label).expect("frieze-form label");
                diamond
                    .residuals()
                    .into_iter()
                    .enumerate()
                    .filter(|(_, res)| !res.is_zero())
                    .map(|(idx, residual)| Violation::DiamondEquation {
                        label: *label,
                        equation: idx + 1,
                        residual,
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        for i in 1..=n {
            let v = &self.z[&(i, i)];
            if !v.is_zero() {
                violations.push(Violation::BoundaryZ { i, value: v.clone() });
            }
        }
        for (key, v) in &self.s {
            let (a, b, c) = *key;
            let degenerate = a == b || b == c || a == c;
            if degenerate && !v.is_zero() {
                violations.push(Violation::BoundaryS { key: *key, value: v.clone() });
            }
        }
        violations.sort_by_key(|v| match v {
            Violation::DiamondEquation { label, equation, .. } => {
                (0, label.i, label.k, *equation, (0, 0, 0))
            }
            Violation::BoundaryZ { i, .. } => (1, *i, 0, 0, (0, 0, 0)),
            Violation::BoundaryS { key, .. } => (2, 0, 0, 0, *key),
        });
        FriezeReport {
            diamonds_checked: labels.len(),
            violations,
        }
    }

    /// True iff the n consecutive-edge entries z_12 = z_23 = ... = z_n1 agree.
    pub fn is_equilateral(&self) -> bool {
        let n = self.n;
        let first = self.z(1, 2).expect("edge entry");
        (2..=n).all(|i| self.z(i, rep(i as i64 + 1, n)).expect("edge entry") == first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{rat, unit_square, Polygon};

    fn unit_square_diamond() -> HeronianDiamond {
        HeronianDiamond::from_tuple([
            rat(1),
            rat(1),
            rat(1),
            rat(1),
            rat(2),
            rat(2),
            rat(2),
            rat(2),
            rat(2),
            rat(2),
        ])
    }

    #[test]
    fn heron_h_examples() {
        assert_eq!(heron_h(&rat(1), &rat(1), &rat(2)), rat(4));
        assert_eq!(heron_h(&rat(1), &rat(1), &rat(1)), rat(3));
        for t in [rat(0), rat(3), rat(-7)] {
            assert_eq!(heron_h(&rat(0), &t, &t), rat(0));
        }
        // total symmetry
        assert_eq!(
            heron_h(&rat(2), &rat(5), &rat(11)),
            heron_h(&rat(11), &rat(2), &rat(5))
        );
    }

    #[test]
    fn unit_square_diamond_is_heronian() {
        let d = unit_square_diamond();
        assert!(d.residuals().iter().all(Rational::is_zero));
    }

    #[test]
    fn zero_tuple_is_heronian() {
        let d = HeronianDiamond::from_tuple(std::array::from_fn(|_| rat(0)));
        assert!(d.is_heronian());
    }

    #[test]
    fn broken_sum_rule_shows_in_equation_five() {
        let mut d = unit_square_diamond();
        d.s = rat(3);
        let res = d.residuals();
        assert_eq!(res[4], rat(1));
        assert!(!d.is_heronian());
    }

    #[test]
    fn polygonal_frieze_of_unit_square() {
        let f = HeronianFrieze::from_polygon(&unit_square());
        assert_eq!(f.z(1, 3).unwrap(), &rat(2));
        assert_eq!(f.z(3, 1).unwrap(), &rat(2));
        assert_eq!(f.s((1, 2, 3)).unwrap(), &rat(2));
        for i in 1..=4 {
            assert!(f.z(i, i).unwrap().is_zero());
        }
    }

    #[test]
    fn repeated_vertex_yields_zero_measurements() {
        let p = Polygon::from_ints(&[(1, 1), (1, 1), (4, 0)]).unwrap();
        let f = HeronianFrieze::from_polygon(&p);
        assert!(f.z(1, 2).unwrap().is_zero());
        for b in 1..=3 {
            assert!(f.s((1, 2, b)).unwrap().is_zero());
        }
    }

    #[test]
    fn extract_unit_square_diamond() {
        let f = HeronianFrieze::from_polygon(&unit_square());
        let label = DiamondLabel::new(1, 2, 3, 4, 4).unwrap();
        assert_eq!(f.extract_diamond(&label).unwrap(), unit_square_diamond());
    }

    #[test]
    fn first_row_degenerate_diamond() {
        let f = HeronianFrieze::from_polygon(&unit_square());
        let label = DiamondLabel::new(1, 2, 2, 3, 4).unwrap();
        let d = f.extract_diamond(&label).unwrap();
        assert!(d.c.is_zero()); // x_22
        assert!(d.is_heronian());
    }

    #[test]
    fn non_frieze_labels_are_rejected() {
        assert!(DiamondLabel::new(1, 3, 2, 4, 4).is_err());
        assert!(DiamondLabel::new(1, 2, 4, 1, 4).is_ok()); // wraps: l = k+1 mod n
        assert!(DiamondLabel::new(4, 1, 2, 3, 4).is_ok());
        assert!(DiamondLabel::new(0, 1, 2, 3, 4).is_err());
    }

    #[test]
    fn verify_passes_on_random_polygons() {
        for n in 3..=10 {
            let p = crate::geometry::random_polygon(n, 1000 + n as u64, 8).unwrap();
            let report = HeronianFrieze::from_polygon(&p).verify();
            assert!(report.passed(), "n={n}: {:?}", report.violations);
            assert_eq!(report.diamonds_checked, n * n);
        }
        let hexagon = crate::geometry::random_polygon(6, 1, 5).unwrap();
        assert!(HeronianFrieze::from_polygon(&hexagon).verify().passed());
    }

    #[test]
    fn verify_names_the_offending_diamond_after_perturbation() {
        let p = crate::geometry::random_polygon(6, 9, 5).unwrap();
        let f = HeronianFrieze::from_polygon(&p);
        let bad = f.with_s_perturbed((2, 3, 5), &rat(1)).unwrap();
        let report = bad.verify();
        assert!(!report.passed());
        let names_diamond = report.violations.iter().any(|v| {
            matches!(v, Violation::DiamondEquation { label, .. }
                if [label.i, label.j, label.k, label.l].contains(&2))
        });
        assert!(names_diamond);
    }

    #[test]
    fn triangle_frieze_verifies() {
        let p = Polygon::from_ints(&[(0, 0), (3, 0), (0, 4)]).unwrap();
        let report = HeronianFrieze::from_polygon(&p).verify();
        assert!(report.passed());
    }

    #[test]
    fn equilateral_predicate() {
        assert!(HeronianFrieze::from_polygon(&unit_square()).is_equilateral());
        let right = Polygon::from_ints(&[(0, 0), (3, 0), (0, 4)]).unwrap();
        assert!(!HeronianFrieze::from_polygon(&right).is_equilateral());
        let collapsed = Polygon::from_ints(&[(2, 2), (2, 2), (2, 2), (2, 2), (2, 2)]).unwrap();
        assert!(HeronianFrieze::from_polygon(&collapsed).is_equilateral());
    }

    #[test]
    fn diamond_extraction_symmetry_swaps_roles() {
        let p = crate::geometry::random_polygon(7, 4, 9).unwrap();
        let f = HeronianFrieze::from_polygon(&p);
        for (b, c) in [(1, 4), (2, 6), (5, 3)] {
            let d1 = f
                .extract_diamond(&DiamondLabel::of_pair(b, c, 7))
                .unwrap();
            let d2 = f
                .extract_diamond(&DiamondLabel::of_pair(c, b, 7))
                .unwrap();
            assert_eq!(d2.a, d1.c);
            assert_eq!(d2.b, d1.d);
            assert_eq!(d2.c, d1.a);
            assert_eq!(d2.d, d1.b);
            assert_eq!(d2.e, d1.e);
            assert_eq!(d2.f, d1.f);
            assert_eq!(d2.p, d1.q);
            assert_eq!(d2.q, d1.p);
            assert_eq!(d2.r, d1.s);
            assert_eq!(d2.s, d1.r);
        }
    }

    #[test]
    fn s_value_resolves_permutations() {
        let p = unit_square();
        let f = HeronianFrieze::from_polygon(&p);
        // S_132 = -S_123
        assert_eq!(f.s_value((1, 3, 2)).unwrap(), rat(-2));
        // sorted wrap triple resolves through the stored (4,1,b) form
        assert_eq!(
            f.s_value((1, 3, 4)).unwrap(),
            p.signed_area4(1, 3, 4).unwrap()
        );
        assert!(f.s_value((2, 2, 2)).unwrap().is_zero());
    }
}
