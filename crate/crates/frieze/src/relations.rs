//! Heronian minor relations: the Plücker relations of Gr(3, n) built solely
//! from Heronian minors, their classification, an independent brute-force
//! oracle, and the corresponding S-relations.
//!
//! A minor of the coordinate matrix is *Heronian* when its ordered column
//! triple reads (a, a+1, b) or (a, b, b+1) mod n; those are exactly the
//! minors realizing frieze S-entries. m_{1,n,b} is the negative of the
//! Heronian minor m_{n,1,b}. A Gr(3, n) relation qualifies when every one of
//! its eight minors is Heronian up to such a sign.
//!
//! Distinct (i-pair, j-tuple) choices can spell out the same quadratic
//! identity (a three-term relation has two such spellings), so relations are
//! deduplicated by their canonical identity form and keyed by the
//! lexicographically least spelling.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::geometry::{Polygon, Rational};
use crate::grassmannian::{increasing_tuples, CoordinateMatrix};
use crate::heronian::HeronianFrieze;
use crate::{rep, Error, Result};

/// Whether an ordered minor triple is a Heronian minor, the negative of one,
/// or neither.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorStatus {
    Heronian,
    NegatedHeronian,
    NotHeronian,
}

/// Status of the ordered triple `t` for order `n`.
///
/// (a, a+1, b) and (a, b, b+1) match with addition mod n, so (n, 1, b) and
/// (a, n, 1) are Heronian. (1, n, b) is the negative of the Heronian minor
/// m_{n,1,b}. Anything else, e.g. (2, 4, 1), is not Heronian.
pub fn minor_status(t: (usize, usize, usize), n: usize) -> MinorStatus {
    let (a, b, c) = t;
    if rep(a as i64 + 1, n) == b || rep(b as i64 + 1, n) == c {
        MinorStatus::Heronian
    } else if a == 1 && b == n {
        MinorStatus::NegatedHeronian
    } else {
        MinorStatus::NotHeronian
    }
}

/// A sorted second factor (u, v, w) appears in a relation as written; when
/// it contains the wrap pair {n, 1} it equals the Heronian minor m_{n,1,v}
/// through the even rewrite m_{1,v,n} = m_{n,1,v}, so the rotation is
/// consulted as well.
fn second_factor_heronian(t: [usize; 3], n: usize) -> bool {
    let direct = minor_status((t[0], t[1], t[2]), n);
    if direct != MinorStatus::NotHeronian {
        return true;
    }
    minor_status((t[2], t[0], t[1]), n) != MinorStatus::NotHeronian
}

/// Clause of the classification theorem that admits a relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseTag {
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    C1,
    C2,
    D1,
    D2,
    E1,
    E2,
    E3,
}

impl CaseTag {
    pub const ALL: [CaseTag; 13] = [
        CaseTag::A1,
        CaseTag::A2,
        CaseTag::A3,
        CaseTag::B1,
        CaseTag::B2,
        CaseTag::B3,
        CaseTag::C1,
        CaseTag::C2,
        CaseTag::D1,
        CaseTag::D2,
        CaseTag::E1,
        CaseTag::E2,
        CaseTag::E3,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::A1 => "a1",
            CaseTag::A2 => "a2",
            CaseTag::A3 => "a3",
            CaseTag::B1 => "b1",
            CaseTag::B2 => "b2",
            CaseTag::B3 => "b3",
            CaseTag::C1 => "c1",
            CaseTag::C2 => "c2",
            CaseTag::D1 => "d1",
            CaseTag::D2 => "d2",
            CaseTag::E1 => "e1",
            CaseTag::E2 => "e2",
            CaseTag::E3 => "e3",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn strictly_increasing(j: &[usize; 4]) -> bool {
    j.windows(2).all(|w| w[0] < w[1])
}

/// The four index pairs whose coincidence with the i-pair makes the relation
/// trivially true (it cancels term by term).
pub fn is_trivial_pair(i_pair: (usize, usize), j: &[usize; 4]) -> bool {
    let adjacent = [(j[0], j[1]), (j[1], j[2]), (j[2], j[3]), (j[0], j[3])];
    adjacent.contains(&i_pair)
}

fn overlap_values(i_pair: (usize, usize), j: &[usize; 4]) -> Vec<usize> {
    j.iter().copied().filter(|&v| v == i_pair.0 || v == i_pair.1).collect()
}

/// All classification clauses matched by the tuple pair, in tag order; empty
/// when the pair is out of range, trivial, or simply not Heronian.
pub fn classify(i_pair: (usize, usize), j_tuple: [usize; 4], n: usize) -> Vec<CaseTag> {
    let (i1, i2) = i_pair;
    let j = j_tuple;
    if n < 4
        || i1 < 1
        || i1 >= i2
        || i2 > n
        || j[0] < 1
        || j[3] > n
        || !strictly_increasing(&j)
        || is_trivial_pair(i_pair, &j)
    {
        return Vec::new();
    }
    let overlap = overlap_values(i_pair, &j);
    let consecutive = i2 == i1 + 1;
    let wrap_pair = i1 == 1 && i2 == n;
    let (j0, j1, j2, j3) = (j[0], j[1], j[2], j[3]);
    let mut tags = Vec::new();
    match overlap.as_slice() {
        [] => {
            if wrap_pair && j1 == j0 + 1 && j3 == j2 + 1 {
                tags.push(CaseTag::A1);
            }
            if consecutive && j1 == j0 + 1 && j3 == j2 + 1 {
                tags.push(CaseTag::A2);
            }
            if consecutive && j0 == 1 && j2 == j1 + 1 && j3 == n {
                tags.push(CaseTag::A3);
            }
        }
        [v] if *v == j0 => {
            if (i1, i2) == (1, 2) && j0 == 1 && j2 == j1 + 1 && j3 == n {
                tags.push(CaseTag::B1);
            }
            if wrap_pair && j0 == 1 && j1 == 2 && j3 == j2 + 1 {
                tags.push(CaseTag::B2);
            }
            if consecutive && j0 == i1 + 1 && j1 == i1 + 2 && j3 == j2 + 1 {
                tags.push(CaseTag::B3);
            }
        }
        [v] if *v == j1 => {
            if consecutive && j0 == 1 && j1 == i1 + 1 && j2 == i1 + 2 && j3 == n {
                tags.push(CaseTag::C1);
            }
            if consecutive && j0 + 1 == i1 && j1 == i1 && j3 == j2 + 1 {
                tags.push(CaseTag::C2);
            }
        }
        [v] if *v == j2 => {
            if consecutive && j0 == 1 && j1 + 1 == i1 && j2 == i1 && j3 == n {
                tags.push(CaseTag::D1);
            }
            if consecutive && j1 == j0 + 1 && j2 == i1 + 1 && j3 == i1 + 2 {
                tags.push(CaseTag::D2);
            }
        }
        [v] if *v == j3 => {
            if i1 + 1 == n && i2 == n && j0 == 1 && j2 == j1 + 1 && j3 == n {
                tags.push(CaseTag::E1);
            }
            if wrap_pair && j1 == j0 + 1 && j2 + 1 == n && j3 == n {
                tags.push(CaseTag::E2);
            }
            if consecutive && j1 == j0 + 1 && j2 + 1 == i1 && j3 == i1 {
                tags.push(CaseTag::E3);
            }
        }
        _ => {}
    }
    tags
}

/// One signed monomial m_left · m_right of a minor relation, left factor in
/// relation order (i1, i2, j_r), right factor sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorTerm {
    pub sign: i8,
    pub left: [usize; 3],
    pub right: [usize; 3],
}

impl MinorTerm {
    /// Identically zero because the left factor repeats a column.
    pub fn is_zero(&self) -> bool {
        let [a, b, c] = self.left;
        a == b || b == c || a == c
    }
}

/// The four Eq-ordered terms of the relation for (i_pair, j_tuple).
pub fn minor_terms(i_pair: (usize, usize), j_tuple: &[usize; 4]) -> Vec<MinorTerm> {
    (0..4)
        .map(|r| {
            let jr = j_tuple[r];
            let mut right = [0usize; 3];
            let mut w = 0;
            for (idx, &v) in j_tuple.iter().enumerate() {
                if idx != r {
                    right[w] = v;
                    w += 1;
                }
            }
            MinorTerm {
                sign: if r % 2 == 0 { 1 } else { -1 },
                left: [i_pair.0, i_pair.1, jr],
                right,
            }
        })
        .collect()
}

fn sort_sign(t: [usize; 3]) -> ([usize; 3], i8) {
    let mut s = t;
    s.sort_unstable();
    let mut sign = 1i8;
    for i in 0..3 {
        for j in (i + 1)..3 {
            if t[i] > t[j] {
                sign = -sign;
            }
        }
    }
    (s, sign)
}

/// A signed unordered product of two sorted triples.
pub type IdentityTerm = (([usize; 3], [usize; 3]), i8);

/// A relation's identity form: its nonvanishing monomials as unordered pairs
/// of sorted triples, listed in increasing order, global sign normalized so
/// the first term is positive. Two tuple choices spell the same identity iff
/// their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalIdentity(pub Vec<IdentityTerm>);

pub fn canonical_identity(i_pair: (usize, usize), j_tuple: &[usize; 4]) -> CanonicalIdentity {
    let mut acc: BTreeMap<([usize; 3], [usize; 3]), i8> = BTreeMap::new();
    for term in minor_terms(i_pair, j_tuple) {
        if term.is_zero() {
            continue;
        }
        let (ls, lsign) = sort_sign(term.left);
        let (rs, _) = sort_sign(term.right); // right factors are already sorted
        let key = (ls.min(rs), ls.max(rs));
        *acc.entry(key).or_insert(0) += term.sign * lsign;
    }
    let mut items: Vec<_> = acc.into_iter().filter(|(_, s)| *s != 0).collect();
    items.sort();
    if let Some(&(_, first)) = items.first() {
        if first < 0 {
            for (_, s) in &mut items {
                *s = -*s;
            }
        }
    }
    CanonicalIdentity(items)
}

/// A Heronian minor relation, stored under its lexicographically least
/// (i_pair, j_tuple) spelling. `case_tags` collects every theorem clause
/// matched across all equivalent spellings; the first is the canonical tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeronianMinorRelation {
    pub n: usize,
    pub i_pair: (usize, usize),
    pub j_tuple: [usize; 4],
    pub case_tags: Vec<CaseTag>,
    /// Values the j-tuple shares with the i-pair (empty for case a).
    pub overlap: Vec<usize>,
}

impl HeronianMinorRelation {
    pub fn minor_terms(&self) -> Vec<MinorTerm> {
        minor_terms(self.i_pair, &self.j_tuple)
    }

    pub fn canonical_identity(&self) -> CanonicalIdentity {
        canonical_identity(self.i_pair, &self.j_tuple)
    }

    /// Exact value of the minor relation on a 3×n matrix; zero always.
    pub fn evaluate(&self, m: &CoordinateMatrix) -> Result<Rational> {
        if m.k() != 3 {
            return Err(Error::DimensionMismatch { rows: m.k(), expected: 3 });
        }
        let mut acc = Rational::zero();
        for term in self.minor_terms() {
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
}

/// All relations produced by the classification clauses, deduplicated
/// canonically; n < 4 has no 4-element j-tuples and yields an empty list.
///
/// Spellings are generated clause by clause (there are O(n^3) of them)
/// rather than by scanning all tuple pairs; `classify` confirms each one.
pub fn enumerate_relations(n: usize) -> Vec<HeronianMinorRelation> {
    if n < 4 {
        return Vec::new();
    }
    dedup_relations(n, clause_spellings(n))
}

/// Instances of the thirteen clauses in tag order. Every emitted spelling
/// satisfies its clause's side conditions by construction.
fn clause_spellings(n: usize) -> Vec<Spelling> {
    let mut out: Vec<Spelling> = Vec::new();
    let mut push = |i: (usize, usize), j: [usize; 4]| {
        debug_assert!(
            !classify(i, j, n).is_empty(),
            "generated spelling must classify: {i:?} {j:?}"
        );
        out.push((i, j));
    };
    // a1: i = (1, n), j = (j0, j0+1, j2, j2+1) disjoint from {1, n}
    for j0 in 2..n {
        for j2 in (j0 + 2)..(n - 1) {
            push((1, n), [j0, j0 + 1, j2, j2 + 1]);
        }
    }
    // a2: consecutive i, double-edge j-tuple, disjoint
    for i1 in 1..n {
        for j0 in 1..n {
            for j2 in (j0 + 2)..n {
                let j = [j0, j0 + 1, j2, j2 + 1];
                if !j.contains(&i1) && !j.contains(&(i1 + 1)) {
                    push((i1, i1 + 1), j);
                }
            }
        }
    }
    // a3: consecutive i, j = (1, j1, j1+1, n), disjoint
    for i1 in 2..(n - 1) {
        for j1 in 2..(n - 1) {
            let j = [1, j1, j1 + 1, n];
            if !j.contains(&i1) && !j.contains(&(i1 + 1)) {
                push((i1, i1 + 1), j);
            }
        }
    }
    // b1: i = (1, 2), j = (1, j1, j1+1, n)
    for j1 in 3..(n - 1) {
        push((1, 2), [1, j1, j1 + 1, n]);
    }
    // b2: i = (1, n), j = (1, 2, j2, j2+1)
    for j2 in 3..(n - 1) {
        push((1, n), [1, 2, j2, j2 + 1]);
    }
    // b3: j = (i1+1, i1+2, j2, j2+1)
    for i1 in 1..(n - 1) {
        for j2 in (i1 + 3)..n {
            push((i1, i1 + 1), [i1 + 1, i1 + 2, j2, j2 + 1]);
        }
    }
    // c1: j = (1, i1+1, i1+2, n)
    for i1 in 2..(n - 2) {
        push((i1, i1 + 1), [1, i1 + 1, i1 + 2, n]);
    }
    // c2: j = (i1-1, i1, j2, j2+1)
    for i1 in 2..n {
        for j2 in (i1 + 2)..n {
            push((i1, i1 + 1), [i1 - 1, i1, j2, j2 + 1]);
        }
    }
    // d1: j = (1, i1-1, i1, n)
    for i1 in 3..(n - 1) {
        push((i1, i1 + 1), [1, i1 - 1, i1, n]);
    }
    // d2: j = (j0, j0+1, i1+1, i1+2)
    for i1 in 1..(n - 1) {
        for j0 in 1..i1.saturating_sub(1) {
            push((i1, i1 + 1), [j0, j0 + 1, i1 + 1, i1 + 2]);
        }
    }
    // e1: i = (n-1, n), j = (1, j1, j1+1, n)
    for j1 in 2..(n - 2) {
        push((n - 1, n), [1, j1, j1 + 1, n]);
    }
    // e2: i = (1, n), j = (j0, j0+1, n-1, n)
    for j0 in 2..(n - 2) {
        push((1, n), [j0, j0 + 1, n - 1, n]);
    }
    // e3: j = (j0, j0+1, i1-1, i1)
    for i1 in 2..n {
        for j0 in 1..i1.saturating_sub(2) {
            push((i1, i1 + 1), [j0, j0 + 1, i1 - 1, i1]);
        }
    }
    out
}

/// Independent oracle: keep a tuple pair iff all eight minors of its
/// relation have status other than `NotHeronian`, by direct application of
/// `minor_status`. Condition I is never assumed; it must emerge.
pub fn brute_force_relations(n: usize) -> Vec<HeronianMinorRelation> {
    collect_relations(n, |i_pair, j| {
        minor_terms(i_pair, j).iter().all(|term| {
            minor_status((term.left[0], term.left[1], term.left[2]), n) != MinorStatus::NotHeronian
                && second_factor_heronian(term.right, n)
        })
    })
}

fn collect_relations(
    n: usize,
    keep: impl Fn((usize, usize), &[usize; 4]) -> bool + Sync,
) -> Vec<HeronianMinorRelation> {
    if n < 4 {
        return Vec::new();
    }
    let pairs: Vec<(usize, usize)> = increasing_tuples(2, n)
        .into_iter()
        .map(|t| (t[0], t[1]))
        .collect();
    let quads: Vec<[usize; 4]> = increasing_tuples(4, n)
        .into_iter()
        .map(|t| [t[0], t[1], t[2], t[3]])
        .collect();
    let kept: Vec<Spelling> = pairs
        .par_iter()
        .flat_map_iter(|&i_pair| {
            quads
                .iter()
                .filter(|j| !is_trivial_pair(i_pair, j))
                .filter(|j| keep(i_pair, j))
                .map(move |j| (i_pair, *j))
                .collect::<Vec<_>>()
        })
        .collect();
    dedup_relations(n, kept)
}

/// An (i_pair, j_tuple) choice spelling out a relation.
type Spelling = ((usize, usize), [usize; 4]);

/// Group spellings by canonical identity; keep the least spelling as the key
/// and merge the clause tags of all spellings.
fn dedup_relations(n: usize, keys: Vec<Spelling>) -> Vec<HeronianMinorRelation> {
    let mut groups: BTreeMap<CanonicalIdentity, Vec<Spelling>> = BTreeMap::new();
    for (i_pair, j) in keys {
        let id = canonical_identity(i_pair, &j);
        if id.0.is_empty() {
            continue;
        }
        groups.entry(id).or_default().push((i_pair, j));
    }
    let mut out: Vec<HeronianMinorRelation> = groups
        .into_values()
        .map(|mut members| {
            members.sort();
            let (i_pair, j_tuple) = members[0];
            let mut case_tags: Vec<CaseTag> = members
                .iter()
                .flat_map(|(ip, j)| classify(*ip, *j, n))
                .collect();
            case_tags.sort();
            case_tags.dedup();
            HeronianMinorRelation {
                n,
                i_pair,
                j_tuple,
                case_tags,
                overlap: overlap_values(i_pair, &j_tuple),
            }
        })
        .collect();
    out.sort_by_key(|r| (r.i_pair, r.j_tuple));
    out
}

/// Which of the two S-relation shapes applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SRelationVariant {
    /// (i1, i2) = (1, n): first factors rewritten S_{n,1,b}, leading sign
    /// negative.
    WrapPair,
    /// Consecutive (i1, i2): plain alternating signs.
    Consecutive,
}

/// One signed product of two S-entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct STerm {
    pub sign: i8,
    pub left: [usize; 3],
    pub right: [usize; 3],
}

impl STerm {
    pub fn is_zero(&self) -> bool {
        let [a, b, c] = self.left;
        let [d, e, f] = self.right;
        a == b || b == c || a == c || d == e || e == f || d == f
    }
}

/// The S-relation of a Heronian minor relation: every m replaced by S = 2m
/// and the identity scaled by 4. Identically-zero terms are kept so the
/// four-summand pattern stays visible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SRelation {
    pub n: usize,
    pub variant: SRelationVariant,
    pub terms: Vec<STerm>,
}

pub fn to_s_relation(relation: &HeronianMinorRelation) -> SRelation {
    let n = relation.n;
    let wrap = relation.i_pair == (1, n);
    let terms = relation
        .minor_terms()
        .into_iter()
        .map(|t| {
            if wrap {
                // S_{1,n,b} = -S_{n,1,b} flips every sign once
                STerm {
                    sign: -t.sign,
                    left: [n, 1, t.left[2]],
                    right: t.right,
                }
            } else {
                STerm { sign: t.sign, left: t.left, right: t.right }
            }
        })
        .collect();
    SRelation {
        n,
        variant: if wrap { SRelationVariant::WrapPair } else { SRelationVariant::Consecutive },
        terms,
    }
}

/// Exact residual of an S-relation on a polygon; zero for every polygon.
pub fn verify_s_relation(p: &Polygon, s: &SRelation) -> Result<Rational> {
    if p.n() != s.n {
        return Err(Error::DimensionMismatch { rows: p.n(), expected: s.n });
    }
    let mut acc = Rational::zero();
    for term in &s.terms {
        let l = p.signed_area4(term.left[0], term.left[1], term.left[2])?;
        let r = p.signed_area4(term.right[0], term.right[1], term.right[2])?;
        let prod = l * r;
        if term.sign > 0 {
            acc += prod;
        } else {
            acc -= prod;
        }
    }
    Ok(acc)
}

/// Residual of an S-relation evaluated from a frieze's stored entries, for
/// verification runs that have no polygon. `None` if some triple cannot be
/// resolved to a stored entry.
pub fn s_relation_residual_on_frieze(f: &HeronianFrieze, s: &SRelation) -> Option<Rational> {
    if f.n() != s.n {
        return None;
    }
    let mut acc = Rational::zero();
    for term in &s.terms {
        let l = f.s_value((term.left[0], term.left[1], term.left[2]))?;
        let r = f.s_value((term.right[0], term.right[1], term.right[2]))?;
        let prod = l * r;
        if term.sign > 0 {
            acc += prod;
        } else {
            acc -= prod;
        }
    }
    Some(acc)
}

/// One summand's positions: the diagonal S-entry paired with the diamond
/// S-entry it multiplies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionPair {
    pub diagonal_entry: [usize; 3],
    pub diamond_entry: [usize; 3],
}

/// Frieze positions of an S-relation: four entries on the diagonal x_{i1,i2}
/// paired with the four S-entries of one frieze diamond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationPositions {
    pub diagonal: (usize, usize),
    /// Frieze diamond label (b, b+1, c, c+1) mod n carrying the j-side
    /// entries.
    pub diamond: [usize; 4],
    pub pairs: Vec<PositionPair>,
}

/// Read off the diagonal and diamond of a relation. The j-tuple of a
/// Heronian minor relation is either (j0, j0+1, j2, j2+1), the diamond
/// labeled by those vertices, or (1, j1, j1+1, n), whose diamond is
/// (j1, j1+1, n, 1).
pub fn relation_positions(relation: &HeronianMinorRelation) -> Result<RelationPositions> {
    let j = relation.j_tuple;
    let n = relation.n;
    let diamond = if j[1] == j[0] + 1 && j[3] == j[2] + 1 {
        [j[0], j[1], j[2], j[3]]
    } else if j[2] == j[1] + 1 && j[0] == 1 && j[3] == n {
        [j[1], j[2], n, 1]
    } else {
        return Err(Error::InvalidInput(format!(
            "j-tuple {:?} is not of a Heronian relation shape",
            j
        )));
    };
    let s = to_s_relation(relation);
    let pairs = s
        .terms
        .iter()
        .map(|t| PositionPair { diagonal_entry: t.left, diamond_entry: t.right })
        .collect();
    Ok(RelationPositions { diagonal: relation.i_pair, diamond, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::random_polygon;

    #[test]
    fn minor_status_examples() {
        assert_eq!(minor_status((5, 6, 1), 6), MinorStatus::Heronian);
        assert_eq!(minor_status((1, 6, 3), 6), MinorStatus::NegatedHeronian);
        assert_eq!(minor_status((2, 4, 1), 6), MinorStatus::NotHeronian);
        // mod-n wrap forms
        assert_eq!(minor_status((6, 1, 4), 6), MinorStatus::Heronian);
        assert_eq!(minor_status((3, 6, 1), 6), MinorStatus::Heronian);
        assert_eq!(minor_status((2, 3, 2), 6), MinorStatus::Heronian);
        assert_eq!(minor_status((2, 4, 2), 6), MinorStatus::NotHeronian);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify((5, 6), [1, 2, 3, 4], 6), vec![CaseTag::A2]);
        assert_eq!(classify((2, 4), [1, 2, 5, 6], 6), vec![]);
        assert_eq!(classify((1, 2), [2, 3, 4, 5], 6), vec![CaseTag::B3]);
        assert_eq!(classify((1, 6), [2, 3, 4, 5], 6), vec![CaseTag::A1]);
        assert_eq!(classify((2, 3), [1, 4, 5, 6], 6), vec![CaseTag::A3]);
        // trivial adjacent pairs never classify
        assert_eq!(classify((3, 4), [1, 3, 4, 6], 6), vec![]);
    }

    #[test]
    fn enumeration_counts_by_order() {
        // frozen counts; n=6 matches the published list of 18. The counts
        // follow n(n-3)(n-4)/2, an emergent regression surface for the
        // generator + dedup pipeline.
        let expect = [(4, 0), (5, 5), (6, 18), (7, 42), (8, 80), (9, 135), (10, 210)];
        for (n, count) in expect {
            assert_eq!(enumerate_relations(n).len(), count, "n={n}");
        }
        for n in 4..=14 {
            assert_eq!(enumerate_relations(n).len(), n * (n - 3) * (n - 4) / 2, "n={n}");
        }
        assert!(enumerate_relations(3).is_empty());
    }

    #[test]
    fn clause_generation_agrees_with_tuple_scan() {
        // generating from the clauses and filtering the full tuple scan
        // through `classify` land on identical relation sets
        for n in 4..=10 {
            let generated = enumerate_relations(n);
            let scanned = collect_relations(n, |i_pair, j| !classify(i_pair, *j, n).is_empty());
            assert_eq!(generated, scanned, "n={n}");
        }
    }

    #[test]
    fn oracle_equivalence_small_orders() {
        for n in 4..=9 {
            let a = enumerate_relations(n);
            let b = brute_force_relations(n);
            assert_eq!(a, b, "n={n}");
        }
    }

    #[test]
    fn merged_spellings_carry_both_tags() {
        let rels = enumerate_relations(6);
        let find = |i: (usize, usize), j: [usize; 4]| {
            rels.iter()
                .find(|r| r.i_pair == i && r.j_tuple == j)
                .unwrap_or_else(|| panic!("missing relation {:?} {:?}", i, j))
        };
        assert_eq!(find((1, 2), [1, 3, 4, 6]).case_tags, vec![CaseTag::B1, CaseTag::B2]);
        assert_eq!(find((1, 2), [2, 3, 4, 5]).case_tags, vec![CaseTag::B3, CaseTag::C2]);
        assert_eq!(find((2, 3), [1, 3, 4, 6]).case_tags, vec![CaseTag::C1, CaseTag::D1]);
        assert_eq!(find((3, 4), [1, 2, 4, 5]).case_tags, vec![CaseTag::D2, CaseTag::E3]);
        assert_eq!(find((1, 6), [2, 3, 5, 6]).case_tags, vec![CaseTag::E1, CaseTag::E2]);
        assert_eq!(find((1, 2), [3, 4, 5, 6]).case_tags, vec![CaseTag::A2]);
    }

    #[test]
    fn trivial_pairs_cancel_term_by_term() {
        // (i1,i2) equal to an adjacent pair of the j-tuple: the canonical
        // identity collapses to nothing
        for (i_pair, j) in [
            ((2, 3), [2, 3, 5, 7]),
            ((3, 5), [2, 3, 5, 7]),
            ((5, 7), [2, 3, 5, 7]),
            ((2, 7), [2, 3, 5, 7]),
        ] {
            assert!(is_trivial_pair(i_pair, &j));
            assert!(canonical_identity(i_pair, &j).0.is_empty(), "{i_pair:?}");
        }
    }

    #[test]
    fn violated_side_conditions_yield_nothing_new() {
        // Each clause's boundary case is either not strictly increasing, an
        // excluded adjacent pair, or carries a non-Heronian minor; none adds
        // a relation.
        let n = 8;
        let relations = enumerate_relations(n);
        let known: std::collections::BTreeSet<_> =
            relations.iter().map(|r| r.canonical_identity()).collect();
        let boundary_cases: Vec<((usize, usize), [usize; 4])> = vec![
            ((1, 2), [1, 2, 3, n]),     // b1 with j1 = 2: adjacent pair (j0, j1)
            ((1, n), [1, 2, n - 1, n]), // b2 with j2+1 = n: adjacent pair (j0, j3)
            ((3, 4), [2, 3, 4, 5]),     // c2 with j2 = i1+1: adjacent pair (j1, j2)
            ((3, 4), [2, 3, 4, 5]),     // d2 with j0+1 = i1: same excluded tuple
            ((1, n), [1, 2, n - 1, n]), // e2 with j0 = 1
        ];
        for (i_pair, j) in boundary_cases {
            assert!(is_trivial_pair(i_pair, &j), "{i_pair:?} {j:?}");
            assert!(classify(i_pair, j, n).is_empty());
        }
        // a3 with j1 at the border collapses the tuple entirely
        assert!(!strictly_increasing(&[1, 1, 2, n]));
        assert!(!strictly_increasing(&[1, n - 1, n, n]));
        // relaxing condition I instead: some minor is literally not Heronian
        for (i_pair, j) in [((2, 4), [1, 2, 5, 6]), ((2, 5), [1, 3, 4, 6])] {
            let bad = minor_terms(i_pair, &j).iter().any(|t| {
                minor_status((t.left[0], t.left[1], t.left[2]), n) == MinorStatus::NotHeronian
            });
            assert!(bad, "{i_pair:?} {j:?}");
            assert!(!known.contains(&canonical_identity(i_pair, &j)));
        }
    }

    #[test]
    fn nonadjacent_double_overlaps_are_vacuous() {
        // {i1,i2} = {j0,j2} and the like cannot satisfy condition I: the
        // oracle finds no overlap-2 relation at any tested order.
        for n in 4..=10 {
            for rel in brute_force_relations(n) {
                assert!(rel.overlap.len() <= 1, "n={n} {:?}", rel);
            }
        }
    }

    #[test]
    fn relations_evaluate_to_zero_on_random_polygons() {
        for n in [5usize, 6, 7] {
            let p = random_polygon(n, 40 + n as u64, 9).unwrap();
            let m = CoordinateMatrix::from_polygon(&p);
            for rel in enumerate_relations(n) {
                assert!(rel.evaluate(&m).unwrap().is_zero());
                let s = to_s_relation(&rel);
                assert!(verify_s_relation(&p, &s).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn s_relation_of_wrap_pair_has_leading_minus() {
        let rels = enumerate_relations(6);
        let rel = rels
            .iter()
            .find(|r| r.i_pair == (1, 6) && r.j_tuple == [2, 3, 4, 5])
            .unwrap();
        let s = to_s_relation(rel);
        assert_eq!(s.variant, SRelationVariant::WrapPair);
        assert_eq!(s.terms.len(), 4);
        assert_eq!(s.terms[0].sign, -1);
        assert_eq!(s.terms[0].left, [6, 1, 2]);
        assert_eq!(s.terms[0].right, [3, 4, 5]);
    }

    #[test]
    fn case_b_relation_has_three_surviving_terms() {
        let rels = enumerate_relations(6);
        let rel = rels
            .iter()
            .find(|r| r.i_pair == (1, 2) && r.j_tuple == [2, 3, 4, 5])
            .unwrap();
        let s = to_s_relation(rel);
        assert_eq!(s.terms.iter().filter(|t| !t.is_zero()).count(), 3);
        assert_eq!(s.terms.len(), 4);
    }

    #[test]
    fn example_octagon_s_relation_vanishes() {
        // diagonal x_23 against diamond 3456
        let p = random_polygon(8, 14, 9).unwrap();
        let rel = HeronianMinorRelation {
            n: 8,
            i_pair: (2, 3),
            j_tuple: [3, 4, 5, 6],
            case_tags: classify((2, 3), [3, 4, 5, 6], 8),
            overlap: vec![3],
        };
        let s = to_s_relation(&rel);
        assert_eq!(s.terms[0].left, [2, 3, 3]);
        assert_eq!(s.terms[0].right, [4, 5, 6]);
        assert!(s.terms[0].is_zero());
        assert!(verify_s_relation(&p, &s).unwrap().is_zero());
    }

    #[test]
    fn case_b_leading_sign_is_negative() {
        // the three-term case-(b) identity carries a leading minus on the
        // surviving first term; flipping that sign breaks the identity
        let p = random_polygon(6, 55, 9).unwrap();
        let rels = enumerate_relations(6);
        let rel = rels
            .iter()
            .find(|r| r.i_pair == (1, 2) && r.j_tuple == [2, 3, 5, 6])
            .unwrap();
        let s = to_s_relation(rel);
        let surviving: Vec<&STerm> = s.terms.iter().filter(|t| !t.is_zero()).collect();
        assert_eq!(surviving[0].sign, -1);
        assert!(verify_s_relation(&p, &s).unwrap().is_zero());
        let mut flipped = s.clone();
        for t in &mut flipped.terms {
            if !t.is_zero() {
                t.sign = -t.sign;
                break;
            }
        }
        assert!(!verify_s_relation(&p, &flipped).unwrap().is_zero());
    }

    #[test]
    fn corrupted_relation_has_nonzero_residual() {
        let p = random_polygon(8, 14, 9).unwrap();
        let s = SRelation {
            n: 8,
            variant: SRelationVariant::Consecutive,
            terms: vec![
                STerm { sign: 1, left: [2, 3, 3], right: [4, 5, 6] },
                STerm { sign: -1, left: [2, 3, 4], right: [3, 5, 6] },
                STerm { sign: 1, left: [2, 3, 5], right: [3, 4, 6] },
                // last index corrupted: 5 instead of [3,4,5]
                STerm { sign: -1, left: [2, 3, 6], right: [3, 4, 7] },
            ],
        };
        assert!(!verify_s_relation(&p, &s).unwrap().is_zero());
    }

    #[test]
    fn positions_of_consecutive_and_wrap_diamonds() {
        let rels = enumerate_relations(6);
        let rel = rels
            .iter()
            .find(|r| r.i_pair == (2, 3) && r.j_tuple == [3, 4, 5, 6])
            .unwrap();
        let pos = relation_positions(rel).unwrap();
        assert_eq!(pos.diagonal, (2, 3));
        assert_eq!(pos.diamond, [3, 4, 5, 6]);
        assert_eq!(pos.pairs.len(), 4);

        let wrap = rels
            .iter()
            .find(|r| r.i_pair == (2, 3) && r.j_tuple == [1, 4, 5, 6])
            .unwrap();
        let pos = relation_positions(wrap).unwrap();
        assert_eq!(pos.diamond, [4, 5, 6, 1]);
    }

    #[test]
    fn frieze_evaluation_matches_polygon_evaluation() {
        let p = random_polygon(7, 99, 9).unwrap();
        let f = HeronianFrieze::from_polygon(&p);
        for rel in enumerate_relations(7) {
            let s = to_s_relation(&rel);
            let via_frieze = s_relation_residual_on_frieze(&f, &s).unwrap();
            assert!(via_frieze.is_zero());
        }
    }
}
