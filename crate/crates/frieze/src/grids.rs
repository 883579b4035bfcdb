//! Plücker friezes P(k, n), Heronian minor friezes, S-subfriezes, and the
//! vanishing-determinant checks on their diamonds.
//!
//! The Plücker frieze is the grid (r, m) -> p_{o([r']^{k-1}, m')} on the
//! strip of n+k-1 rows; its top and bottom k-1 rows are structural zeros. A
//! size-s diamond anchored at (r, m) is the s×s matrix with entry (i, j) =
//! p_{o([r+i-1]^{k-1}, m+j-1)}, all indices mod n with representatives
//! 1..=n. Diamonds of size k+1 that fit inside the strip have vanishing
//! determinant; size-k diamonds generically do not vanish.

use num_traits::Zero;
use rayon::prelude::*;

use crate::geometry::{Polygon, Rational};
use crate::grassmannian::{determinant, CoordinateMatrix};
use crate::heronian::HeronianFrieze;
use crate::{rep, Error, Result};

/// A symbolic frieze entry: a sorted Plücker coordinate, or the zero
/// coordinate when an index repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PluckerEntry {
    Zero,
    Coordinate(Vec<usize>),
}

impl PluckerEntry {
    fn from_tuple(tuple: Vec<usize>) -> Self {
        let mut sorted = tuple;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            PluckerEntry::Zero
        } else {
            PluckerEntry::Coordinate(sorted)
        }
    }

    /// Exact value on a coordinate matrix; the zero coordinate is 0.
    pub fn value(&self, m: &CoordinateMatrix) -> Result<Rational> {
        match self {
            PluckerEntry::Zero => Ok(Rational::zero()),
            PluckerEntry::Coordinate(cols) => m.minor(cols),
        }
    }
}

impl std::fmt::Display for PluckerEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PluckerEntry::Zero => write!(f, "0"),
            PluckerEntry::Coordinate(cols) => {
                write!(f, "p_{{")?;
                for (i, c) in cols.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// The symbolic Plücker frieze P(k, n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerFrieze {
    k: usize,
    n: usize,
}

impl PluckerFrieze {
    /// Requires 2 <= k <= n. The usual standing assumption is k <= n/2;
    /// larger k still produces a well-defined grid, flagged by
    /// [`PluckerFrieze::exceeds_standing_assumption`].
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k < 2 || k > n {
            return Err(Error::BadGrassmannian { k, n });
        }
        Ok(PluckerFrieze { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn exceeds_standing_assumption(&self) -> bool {
        2 * self.k > self.n
    }

    /// Number of rows of the strip, top and bottom k-1 of them zero.
    pub fn strip_rows(&self) -> usize {
        self.n + self.k - 1
    }

    /// Grid entry phi(r, m) = p_{o([r']^{k-1}, m')} with r' = r mod n and
    /// m' = (m + r' - 1) mod n.
    pub fn entry(&self, r: i64, m: i64) -> PluckerEntry {
        let rr = rep(r, self.n) as i64;
        let mm = rep(m + rr - 1, self.n);
        let mut tuple: Vec<usize> = (0..self.k as i64 - 1)
            .map(|off| rep(rr + off, self.n))
            .collect();
        tuple.push(mm);
        PluckerEntry::from_tuple(tuple)
    }

    /// Diamond entry (i, j) for the anchor (r, m): the column index is taken
    /// directly as m + j - 1 mod n.
    pub fn diamond_entry(&self, r: i64, m: i64, i: usize, j: usize) -> PluckerEntry {
        let mut tuple: Vec<usize> = (0..self.k as i64 - 1)
            .map(|off| rep(r + i as i64 - 1 + off, self.n))
            .collect();
        tuple.push(rep(m + j as i64 - 1, self.n));
        PluckerEntry::from_tuple(tuple)
    }

    /// Anchors (row offsets) at which a size-s diamond fits inside the
    /// strip: representatives m - r + 1 in [size, n + k - size].
    pub fn anchor_window(&self, size: usize) -> std::ops::RangeInclusive<usize> {
        size..=(self.n + self.k - size).min(self.n)
    }

    fn anchor_admissible(&self, r: usize, m: usize, size: usize) -> bool {
        self.anchor_window(size)
            .contains(&rep(m as i64 - r as i64 + 1, self.n))
    }
}

/// An s×s diamond of a Plücker frieze.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriezeDiamond {
    pub size: usize,
    pub anchor: (usize, usize),
    pub entries: Vec<Vec<PluckerEntry>>,
}

impl FriezeDiamond {
    pub fn values(&self, m: &CoordinateMatrix) -> Result<Vec<Vec<Rational>>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.value(m)).collect())
            .collect()
    }

    pub fn determinant(&self, m: &CoordinateMatrix) -> Result<Rational> {
        Ok(determinant(&self.values(m)?))
    }
}

/// Extract the size×size diamond anchored at (r, m); errors when the diamond
/// does not fit the strip.
pub fn extract_diamond(
    fz: &PluckerFrieze,
    r: usize,
    m: usize,
    size: usize,
) -> Result<FriezeDiamond> {
    if size < 1 || !fz.anchor_admissible(r, m, size) {
        return Err(Error::WindowViolation { r, m, size });
    }
    let entries = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| fz.diamond_entry(r as i64, m as i64, i, j))
                .collect()
        })
        .collect();
    Ok(FriezeDiamond { size, anchor: (r, m), entries })
}

/// One anchor's determinant in a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorDeterminant {
    pub r: usize,
    pub m: usize,
    pub value: Rational,
}

/// Full-anchor determinant sweep over the diamonds of one size.
#[derive(Clone, Debug)]
pub struct DeterminantReport {
    pub k: usize,
    pub n: usize,
    pub size: usize,
    /// The sweep asserts vanishing exactly when size = k + 1.
    pub vanishing_asserted: bool,
    pub checks: Vec<AnchorDeterminant>,
}

impl DeterminantReport {
    pub fn nonzero(&self) -> Vec<&AnchorDeterminant> {
        self.checks.iter().filter(|c| !c.value.is_zero()).collect()
    }

    pub fn passed(&self) -> bool {
        !self.vanishing_asserted || self.nonzero().is_empty()
    }
}

/// Evaluate every size×size diamond determinant of P(k, n) on `matrix`,
/// sweeping all admissible anchors (r, m).
pub fn check_diamond_determinants(
    matrix: &CoordinateMatrix,
    size: usize,
) -> Result<DeterminantReport> {
    let k = matrix.k();
    let n = matrix.n();
    let fz = PluckerFrieze::new(k, n)?;
    if size < 1 || fz.anchor_window(size).is_empty() {
        return Err(Error::WindowViolation { r: 0, m: 0, size });
    }
    let anchors: Vec<(usize, usize)> = (1..=n)
        .flat_map(|r| {
            fz.anchor_window(size)
                .map(move |mt| (r, rep(mt as i64 + r as i64 - 1, n)))
        })
        .collect();
    let checks: Vec<AnchorDeterminant> = anchors
        .par_iter()
        .map(|&(r, m)| {
            let diamond = extract_diamond(&fz, r, m, size).expect("admissible anchor");
            let value = diamond.determinant(matrix).expect("matching dimensions");
            AnchorDeterminant { r, m, value }
        })
        .collect();
    Ok(DeterminantReport {
        k,
        n,
        size,
        vanishing_asserted: size == k + 1,
        checks,
    })
}

/// Sweep every 4×4 diamond of the polygon's Heronian minor frieze. All
/// determinants vanish; k = 3 keeps every entry an even rearrangement of a
/// Plücker coordinate, so no anchor window is needed.
pub fn check_minor_diamonds(p: &Polygon) -> Result<DeterminantReport> {
    let n = p.n();
    if n < 5 {
        return Err(Error::InvalidInput(format!(
            "4x4 minor-diamond sweep needs n >= 5, got {n}"
        )));
    }
    let mf = HeronianMinorFrieze::from_polygon(p);
    let anchors: Vec<(usize, usize)> = (1..=n)
        .flat_map(|r| (1..=n).map(move |m| (r, m)))
        .collect();
    let checks: Vec<AnchorDeterminant> = anchors
        .par_iter()
        .map(|&(r, m)| AnchorDeterminant {
            r,
            m,
            value: determinant(&mf.diamond(r, m)),
        })
        .collect();
    Ok(DeterminantReport { k: 3, n, size: 4, vanishing_asserted: true, checks })
}

/// The Heronian minor frieze: entry (a, b) is the minor m_{a,a+1,b} of the
/// polygon's coordinate matrix, indices mod n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeronianMinorFrieze {
    n: usize,
    entries: Vec<Vec<Rational>>,
}

impl HeronianMinorFrieze {
    pub fn from_polygon(p: &Polygon) -> Self {
        let n = p.n();
        let m = CoordinateMatrix::from_polygon(p);
        let entries = (1..=n)
            .map(|a| {
                let a1 = rep(a as i64 + 1, n);
                (1..=n)
                    .map(|b| m.minor(&[a, a1, b]).expect("valid columns"))
                    .collect()
            })
            .collect();
        HeronianMinorFrieze { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// m_{a,a+1,b}, 1-based, indices taken mod n.
    pub fn entry(&self, a: usize, b: usize) -> &Rational {
        &self.entries[rep(a as i64, self.n) - 1][rep(b as i64, self.n) - 1]
    }

    /// The 4×4 diamond anchored at (r, m): entry (i, j) = m_{r+i-1, r+i, m+j-1}.
    pub fn diamond(&self, r: usize, m: usize) -> Vec<Vec<Rational>> {
        (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        self.entry(rep(r as i64 + i, self.n), rep(m as i64 + j, self.n))
                            .clone()
                    })
                    .collect()
            })
            .collect()
    }
}

/// Which family of S-entries forms the subfrieze.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SSubfriezeVariant {
    /// Entries S_{a,a+1,b} (the diagonals carrying the edge pairs).
    Primary,
    /// Entries S_{a,b,b+1} (the alternating diagonals not chosen above).
    Alternate,
}

impl SSubfriezeVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            SSubfriezeVariant::Primary => "s-primary",
            SSubfriezeVariant::Alternate => "s-alternate",
        }
    }
}

/// An S-subfrieze of a Heronian frieze, stored as the full (a, b) grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SSubfrieze {
    n: usize,
    variant: SSubfriezeVariant,
    entries: Vec<Vec<Rational>>,
}

/// Collect the S-entries of `f` on one family of alternating diagonals.
pub fn build_s_subfrieze(f: &HeronianFrieze, variant: SSubfriezeVariant) -> SSubfrieze {
    let n = f.n();
    let entries = (1..=n)
        .map(|a| {
            let a1 = rep(a as i64 + 1, n);
            (1..=n)
                .map(|b| {
                    let b1 = rep(b as i64 + 1, n);
                    let key = match variant {
                        SSubfriezeVariant::Primary => (a, a1, b),
                        SSubfriezeVariant::Alternate => (a, b, b1),
                    };
                    f.s(key).expect("stored form").clone()
                })
                .collect()
        })
        .collect();
    SSubfrieze { n, variant, entries }
}

impl SSubfrieze {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> SSubfriezeVariant {
        self.variant
    }

    /// Primary: S_{a,a+1,b}; alternate: S_{a,b,b+1}. Indices mod n.
    pub fn entry(&self, a: usize, b: usize) -> &Rational {
        &self.entries[rep(a as i64, self.n) - 1][rep(b as i64, self.n) - 1]
    }

    /// Row `a` of the pattern, sweeping b = a+1, a+2, ..., a cyclically.
    pub fn row(&self, a: usize) -> Vec<Rational> {
        (1..=self.n as i64)
            .map(|off| self.entry(a, rep(a as i64 + off, self.n)).clone())
            .collect()
    }

    /// The 4×4 diamond anchored at (r, m); same (i, j) pattern for both
    /// variants, read off the grid.
    pub fn diamond(&self, r: usize, m: usize) -> Vec<Vec<Rational>> {
        (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        self.entry(rep(r as i64 + i, self.n), rep(m as i64 + j, self.n))
                            .clone()
                    })
                    .collect()
            })
            .collect()
    }
}

/// One anchor of an S-subfrieze sweep: the S-diamond determinant and the
/// matching minor-frieze diamond determinant.
#[derive(Clone, Debug)]
pub struct SAnchorCheck {
    pub r: usize,
    pub m: usize,
    pub s_det: Rational,
    pub minor_det: Rational,
}

/// Result of sweeping all 4×4 S-subfrieze diamonds of a polygon.
#[derive(Clone, Debug)]
pub struct SDiamondReport {
    pub n: usize,
    pub variant: SSubfriezeVariant,
    pub checks: Vec<SAnchorCheck>,
    /// Entrywise S = 2m over the whole subfrieze grid.
    pub entrywise_twice_minor: bool,
}

impl SDiamondReport {
    pub fn passed(&self) -> bool {
        self.entrywise_twice_minor
            && self.checks.iter().all(|c| {
                c.s_det.is_zero()
                    && c.minor_det.is_zero()
                    && c.s_det == &c.minor_det * Rational::from_integer(16.into())
            })
    }
}

/// For every anchor (r, m) with 1 <= r, m <= n, compute the 4×4 S-diamond determinant
/// and its paired minor-frieze determinant; the S-determinant must equal 16
/// times the minor determinant and both must vanish. Requires n >= 5 so a
/// diamond with distinct anchor rows exists.
pub fn check_s_diamonds(p: &Polygon, variant: SSubfriezeVariant) -> Result<SDiamondReport> {
    let n = p.n();
    if n < 5 {
        return Err(Error::InvalidInput(format!(
            "4x4 S-diamond sweep needs n >= 5, got {n}"
        )));
    }
    let frieze = HeronianFrieze::from_polygon(p);
    let sub = build_s_subfrieze(&frieze, variant);
    let matrix = CoordinateMatrix::from_polygon(p);
    let minor_grid: Vec<Vec<Rational>> = (1..=n)
        .map(|a| {
            let a1 = rep(a as i64 + 1, n);
            (1..=n)
                .map(|b| {
                    let b1 = rep(b as i64 + 1, n);
                    let cols = match variant {
                        SSubfriezeVariant::Primary => [a, a1, b],
                        SSubfriezeVariant::Alternate => [a, b, b1],
                    };
                    matrix.minor(&cols).expect("valid columns")
                })
                .collect()
        })
        .collect();
    let two = Rational::from_integer(2.into());
    let entrywise_twice_minor = (0..n).all(|a| {
        (0..n).all(|b| sub.entries[a][b] == &two * &minor_grid[a][b])
    });
    let anchors: Vec<(usize, usize)> = (1..=n)
        .flat_map(|r| (1..=n).map(move |m| (r, m)))
        .collect();
    let checks: Vec<SAnchorCheck> = anchors
        .par_iter()
        .map(|&(r, m)| {
            let s_mat = sub.diamond(r, m);
            let m_mat: Vec<Vec<Rational>> = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            minor_grid[rep(r as i64 + i, n) - 1][rep(m as i64 + j, n) - 1].clone()
                        })
                        .collect()
                })
                .collect();
            SAnchorCheck {
                r,
                m,
                s_det: determinant(&s_mat),
                minor_det: determinant(&m_mat),
            }
        })
        .collect();
    Ok(SDiamondReport { n, variant, checks, entrywise_twice_minor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{random_polygon, rat, unit_square};

    fn coord(cols: &[usize]) -> PluckerEntry {
        PluckerEntry::Coordinate(cols.to_vec())
    }

    #[test]
    fn strip_has_zero_border_rows() {
        let fz = PluckerFrieze::new(3, 6).unwrap();
        for r in 1..=6i64 {
            for m in [1, 2, 7, 8] {
                assert_eq!(fz.entry(r, m), PluckerEntry::Zero, "r={r} m={m}");
            }
            for m in 3..=6i64 {
                assert!(matches!(fz.entry(r, m), PluckerEntry::Coordinate(_)));
            }
        }
    }

    #[test]
    fn row_one_of_p3n_lists_consecutive_coordinates() {
        let fz = PluckerFrieze::new(3, 7).unwrap();
        assert_eq!(fz.entry(1, 3), coord(&[1, 2, 3]));
        assert_eq!(fz.entry(1, 4), coord(&[1, 2, 4]));
        assert_eq!(fz.entry(1, 7), coord(&[1, 2, 7]));
    }

    #[test]
    fn wrapped_positions_match_the_displayed_pattern() {
        // the first nonzero row reads p_{r,r+1,r+2} with indices mod n
        let n = 7;
        let fz = PluckerFrieze::new(3, n).unwrap();
        assert_eq!(fz.entry(2, 3), coord(&[2, 3, 4]));
        assert_eq!(fz.entry(n as i64 - 1, 3), coord(&[1, n - 1, n]));
        assert_eq!(fz.entry(n as i64, 3), coord(&[1, 2, n]));
        assert_eq!(fz.entry(n as i64 + 1, 3), coord(&[1, 2, 3]));
        // rows repeat with period n in both grid directions
        for r in 1..=n as i64 {
            for m in 1..=(n + 2) as i64 {
                assert_eq!(fz.entry(r, m), fz.entry(r + n as i64, m));
                assert_eq!(fz.entry(r, m), fz.entry(r, m + n as i64));
            }
        }
    }

    #[test]
    fn the_three_by_six_fixture_diamond() {
        // the displayed 4×4 fragment of P(3,6) anchored at r=1, m=4
        let fz = PluckerFrieze::new(3, 6).unwrap();
        let d = extract_diamond(&fz, 1, 4, 4).unwrap();
        let expect: [[PluckerEntry; 4]; 4] = [
            [coord(&[1, 2, 4]), coord(&[1, 2, 5]), coord(&[1, 2, 6]), PluckerEntry::Zero],
            [coord(&[2, 3, 4]), coord(&[2, 3, 5]), coord(&[2, 3, 6]), coord(&[1, 2, 3])],
            [PluckerEntry::Zero, coord(&[3, 4, 5]), coord(&[3, 4, 6]), coord(&[1, 3, 4])],
            [PluckerEntry::Zero, PluckerEntry::Zero, coord(&[4, 5, 6]), coord(&[1, 4, 5])],
        ];
        for (i, row) in expect.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                assert_eq!(&d.entries[i][j], cell, "entry ({},{})", i + 1, j + 1);
            }
        }
        // and its determinant vanishes on a polygon matrix
        let p = random_polygon(6, 5, 9).unwrap();
        let m = CoordinateMatrix::from_polygon(&p);
        assert!(d.determinant(&m).unwrap().is_zero());
    }

    #[test]
    fn diamond_entries_agree_with_grid_parameterization() {
        // entry (i, j) of the diamond at (r, m) sits at grid cell
        // (r + i - 1, (m - r + 1) + (j - i))
        let fz = PluckerFrieze::new(3, 7).unwrap();
        let (r, m) = (2usize, 6usize);
        let d = extract_diamond(&fz, r, m, 4).unwrap();
        for i in 1..=4usize {
            for j in 1..=4usize {
                let grid_r = r as i64 + i as i64 - 1;
                let grid_m = (m as i64 - r as i64 + 1) + (j as i64 - i as i64);
                assert_eq!(d.entries[i - 1][j - 1], fz.entry(grid_r, grid_m));
            }
        }
    }

    #[test]
    fn size_one_diamond_is_a_single_entry() {
        let fz = PluckerFrieze::new(3, 6).unwrap();
        let d = extract_diamond(&fz, 2, 5, 1).unwrap();
        assert_eq!(d.entries.len(), 1);
        assert_eq!(d.entries[0][0], fz.diamond_entry(2, 5, 1, 1));
    }

    #[test]
    fn window_violations_are_rejected() {
        let fz = PluckerFrieze::new(3, 6).unwrap();
        // m - r + 1 = 2 lies outside [4, 5]
        assert!(extract_diamond(&fz, 1, 2, 4).is_err());
        assert!(extract_diamond(&fz, 1, 4, 4).is_ok());
        assert!(extract_diamond(&fz, 1, 6, 4).is_err());
    }

    #[test]
    fn k_plus_one_diamonds_vanish_for_k_two_and_three() {
        for n in 4..=8usize {
            let p = random_polygon(n, 60 + n as u64, 9).unwrap();
            let m2 = CoordinateMatrix::xy_from_polygon(&p);
            let rep2 = check_diamond_determinants(&m2, 3).unwrap();
            assert!(rep2.vanishing_asserted);
            assert!(rep2.passed(), "k=2 n={n}: {:?}", rep2.nonzero());
            if n >= 6 {
                let m3 = CoordinateMatrix::from_polygon(&p);
                let rep3 = check_diamond_determinants(&m3, 4).unwrap();
                assert!(rep3.passed(), "k=3 n={n}: {:?}", rep3.nonzero());
            }
        }
    }

    #[test]
    fn size_k_diamonds_are_generically_nonzero() {
        let p = random_polygon(8, 2, 9).unwrap();
        let m = CoordinateMatrix::from_polygon(&p);
        let report = check_diamond_determinants(&m, 3).unwrap();
        assert!(!report.vanishing_asserted);
        assert!(!report.nonzero().is_empty());
    }

    #[test]
    fn minor_frieze_of_unit_square() {
        let mf = HeronianMinorFrieze::from_polygon(&unit_square());
        assert_eq!(mf.entry(1, 3), &rat(1)); // m_123
        assert!(mf.entry(1, 2).is_zero()); // m_122
        assert_eq!(mf.entry(4, 2), &rat(1)); // m_412, wraps to (4,1,2)
    }

    #[test]
    fn s_subfrieze_rows_match_expected_entries() {
        let p = random_polygon(8, 8, 9).unwrap();
        let f = HeronianFrieze::from_polygon(&p);
        let primary = build_s_subfrieze(&f, SSubfriezeVariant::Primary);
        for b in [5, 6, 7, 8] {
            assert_eq!(primary.entry(1, b), &p.signed_area4(1, 2, b).unwrap());
        }
        // first entry of each pattern row is the degenerate S_{a,a+1,a+1}
        for a in 1..=8 {
            assert!(primary.row(a)[0].is_zero());
        }
        let alternate = build_s_subfrieze(&f, SSubfriezeVariant::Alternate);
        assert_eq!(alternate.entry(2, 2), &p.signed_area4(2, 2, 3).unwrap());
        assert_eq!(alternate.entry(2, 3), &p.signed_area4(2, 3, 4).unwrap());
        assert_eq!(alternate.entry(2, 4), &p.signed_area4(2, 4, 5).unwrap());
        assert!(alternate.entry(2, 2).is_zero());
    }

    #[test]
    fn s_subfrieze_entries_are_twice_the_minors() {
        let p = random_polygon(6, 33, 9).unwrap();
        let f = HeronianFrieze::from_polygon(&p);
        let sub = build_s_subfrieze(&f, SSubfriezeVariant::Primary);
        let mf = HeronianMinorFrieze::from_polygon(&p);
        let two = rat(2);
        for a in 1..=6 {
            for b in 1..=6 {
                assert_eq!(sub.entry(a, b), &(&two * mf.entry(a, b)));
            }
        }
    }

    #[test]
    fn s_diamond_sweeps_vanish_for_both_variants() {
        for n in [5usize, 6, 8] {
            let p = random_polygon(n, 70 + n as u64, 9).unwrap();
            for variant in [SSubfriezeVariant::Primary, SSubfriezeVariant::Alternate] {
                let report = check_s_diamonds(&p, variant).unwrap();
                assert!(report.passed(), "n={n} {variant:?}");
                assert_eq!(report.checks.len(), n * n);
            }
        }
    }

    #[test]
    fn octagon_example_diamond_is_part_of_the_sweep() {
        // rows S_12•, S_23•, S_34•, S_45•, columns 5..8
        let p = random_polygon(8, 123, 9).unwrap();
        let f = HeronianFrieze::from_polygon(&p);
        let sub = build_s_subfrieze(&f, SSubfriezeVariant::Primary);
        let d = sub.diamond(1, 5);
        assert_eq!(d[0][0], p.signed_area4(1, 2, 5).unwrap());
        assert_eq!(d[3][0], p.signed_area4(4, 5, 5).unwrap());
        assert_eq!(d[3][3], p.signed_area4(4, 5, 8).unwrap());
        assert!(determinant(&d).is_zero());
        let report = check_s_diamonds(&p, SSubfriezeVariant::Primary).unwrap();
        assert!(report.checks.iter().any(|c| (c.r, c.m) == (1, 5)));
    }

    #[test]
    fn s_diamond_sweep_requires_order_five() {
        let p = random_polygon(4, 1, 5).unwrap();
        assert!(check_s_diamonds(&p, SSubfriezeVariant::Primary).is_err());
    }

    #[test]
    fn small_k_rejected() {
        assert!(PluckerFrieze::new(1, 5).is_err());
        assert!(PluckerFrieze::new(4, 3).is_err());
        assert!(PluckerFrieze::new(4, 7).unwrap().exceeds_standing_assumption());
    }
}
