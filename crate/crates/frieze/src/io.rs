//! File formats and report serialization. All numeric payloads are exact
//! fraction strings ("p" or "p/q"), never floats, and every array is emitted
//! in canonical order so identical inputs produce byte-identical output.

use serde::{Deserialize, Serialize};

use crate::geometry::{format_rational, parse_rational, Point, Polygon, Rational};
use crate::grassmannian::{CoordinateMatrix, PluckerRelation};
use crate::grids::{DeterminantReport, PluckerEntry, SDiamondReport};
use crate::heronian::{FriezeReport, HeronianFrieze, Violation};
use crate::relations::{to_s_relation, HeronianMinorRelation};
use crate::{Error, Result};

/// Polygon file: `{"n": 4, "vertices": [["0","0"], ["1","0"], ...]}` with
/// rationals as fraction strings; `"p"` alone means p/1.
#[derive(Debug, Serialize, Deserialize)]
pub struct PolygonFile {
    pub n: usize,
    pub vertices: Vec<[String; 2]>,
}

pub fn parse_polygon_json(text: &str) -> Result<Polygon> {
    let file: PolygonFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("polygon JSON: {e}")))?;
    if file.n != file.vertices.len() {
        return Err(Error::InvalidInput(format!(
            "polygon JSON: n = {} but {} vertices listed",
            file.n,
            file.vertices.len()
        )));
    }
    let vertices = file
        .vertices
        .iter()
        .map(|[x, y]| Ok(Point::new(parse_rational(x)?, parse_rational(y)?)))
        .collect::<Result<Vec<_>>>()?;
    Polygon::new(vertices)
}

pub fn polygon_to_file(p: &Polygon) -> PolygonFile {
    PolygonFile {
        n: p.n(),
        vertices: p
            .vertices()
            .iter()
            .map(|v| [format_rational(&v.x), format_rational(&v.y)])
            .collect(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ZEntryJson {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SEntryJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: String,
}

/// Frieze export: all z pairs (i <= j) and all stored-form S triples, sorted
/// by index for diffable output.
#[derive(Debug, Serialize, Deserialize)]
pub struct FriezeFile {
    pub n: usize,
    pub z: Vec<ZEntryJson>,
    #[serde(rename = "S")]
    pub s: Vec<SEntryJson>,
}

pub fn frieze_to_file(f: &HeronianFrieze) -> FriezeFile {
    FriezeFile {
        n: f.n(),
        z: f
            .z_entries()
            .map(|(&(i, j), v)| ZEntryJson { i, j, value: format_rational(v) })
            .collect(),
        s: f
            .s_entries()
            .map(|(&(i, j, k), v)| SEntryJson { i, j, k, value: format_rational(v) })
            .collect(),
    }
}

pub fn parse_frieze_json(text: &str) -> Result<HeronianFrieze> {
    let file: FriezeFile =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("frieze JSON: {e}")))?;
    let z = file
        .z
        .iter()
        .map(|e| Ok(((e.i, e.j), parse_rational(&e.value)?)))
        .collect::<Result<Vec<_>>>()?;
    let s = file
        .s
        .iter()
        .map(|e| Ok(((e.i, e.j, e.k), parse_rational(&e.value)?)))
        .collect::<Result<Vec<_>>>()?;
    HeronianFrieze::from_entries(file.n, z, s)
}

/// One signed product of a relation, as index triples.
#[derive(Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub sign: i8,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    /// Identically zero (a factor repeats an index); kept to show the
    /// four-summand pattern.
    pub zero: bool,
}

/// A Heronian minor relation with its S-form and optional residual on a
/// supplied polygon.
#[derive(Debug, Serialize, Deserialize)]
pub struct RelationJson {
    pub i: [usize; 2],
    pub j: [usize; 4],
    /// Canonical clause tag (first of `cases`).
    pub case: String,
    /// Every clause matched across equivalent spellings of the identity.
    pub cases: Vec<String>,
    pub overlap: Vec<usize>,
    pub minor_terms: Vec<TermJson>,
    pub s_terms: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_residual: Option<String>,
}

pub fn relation_to_json(
    rel: &HeronianMinorRelation,
    matrix: Option<&CoordinateMatrix>,
    polygon: Option<&Polygon>,
) -> Result<RelationJson> {
    let s_rel = to_s_relation(rel);
    let residual = match matrix {
        Some(m) => Some(format_rational(&rel.evaluate(m)?)),
        None => None,
    };
    let s_residual = match polygon {
        Some(p) => Some(format_rational(&crate::relations::verify_s_relation(p, &s_rel)?)),
        None => None,
    };
    Ok(RelationJson {
        i: [rel.i_pair.0, rel.i_pair.1],
        j: rel.j_tuple,
        case: rel
            .case_tags
            .first()
            .map(|t| t.to_string())
            .unwrap_or_default(),
        cases: rel.case_tags.iter().map(|t| t.to_string()).collect(),
        overlap: rel.overlap.clone(),
        minor_terms: rel
            .minor_terms()
            .iter()
            .map(|t| TermJson {
                sign: t.sign,
                left: t.left.to_vec(),
                right: t.right.to_vec(),
                zero: t.is_zero(),
            })
            .collect(),
        s_terms: s_rel
            .terms
            .iter()
            .map(|t| TermJson {
                sign: t.sign,
                left: t.left.to_vec(),
                right: t.right.to_vec(),
                zero: t.is_zero(),
            })
            .collect(),
        residual,
        s_residual,
    })
}

/// A raw Gr(k, n) Plücker relation with its exact value on a matrix.
#[derive(Debug, Serialize, Deserialize)]
pub struct PluckerRelationJson {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub terms: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

pub fn plucker_relation_to_json(
    rel: &PluckerRelation,
    matrix: Option<&CoordinateMatrix>,
) -> Result<PluckerRelationJson> {
    let value = match matrix {
        Some(m) => Some(format_rational(&crate::grassmannian::evaluate_relation(m, rel)?)),
        None => None,
    };
    Ok(PluckerRelationJson {
        i: rel.i_tuple.clone(),
        j: rel.j_tuple.clone(),
        terms: rel
            .terms()
            .iter()
            .map(|t| TermJson {
                sign: t.sign,
                left: t.left.clone(),
                right: t.right.clone(),
                zero: t.is_zero(),
            })
            .collect(),
        value,
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ViolationJson {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<[usize; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equation: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entry: Option<Vec<usize>>,
    pub value: String,
}

/// Verification run over a frieze: diamond equations, boundary conditions,
/// and (given a polygon) the full Plücker and S relation sweeps.
#[derive(Debug, Serialize, Deserialize)]
pub struct VerifyReportJson {
    pub n: usize,
    pub equilateral: bool,
    pub diamonds_checked: usize,
    pub violations: Vec<ViolationJson>,
    pub plucker_relations_checked: usize,
    pub plucker_nonzero: Vec<PluckerRelationJson>,
    pub s_relations_checked: usize,
    pub s_nonzero: Vec<RelationJson>,
    pub passed: bool,
}

pub fn frieze_report_violations(report: &FriezeReport) -> Vec<ViolationJson> {
    report
        .violations
        .iter()
        .map(|v| match v {
            Violation::DiamondEquation { label, equation, residual } => ViolationJson {
                kind: "diamond-equation".into(),
                label: Some([label.i, label.j, label.k, label.l]),
                equation: Some(*equation),
                entry: None,
                value: format_rational(residual),
            },
            Violation::BoundaryZ { i, value } => ViolationJson {
                kind: "boundary-z".into(),
                label: None,
                equation: None,
                entry: Some(vec![*i, *i]),
                value: format_rational(value),
            },
            Violation::BoundaryS { key, value } => ViolationJson {
                kind: "boundary-s".into(),
                label: None,
                equation: None,
                entry: Some(vec![key.0, key.1, key.2]),
                value: format_rational(value),
            },
        })
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GridEntryJson {
    pub r: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tuple: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DeterminantEntryJson {
    pub anchor: [usize; 2],
    pub size: usize,
    pub value: String,
}

/// Grid export with its determinant sweep.
#[derive(Debug, Serialize, Deserialize)]
pub struct GridReportJson {
    pub kind: String,
    pub k: usize,
    pub n: usize,
    pub entries: Vec<GridEntryJson>,
    pub determinant_report: Vec<DeterminantEntryJson>,
    pub vanishing_asserted: bool,
    pub passed: bool,
}

pub fn plucker_grid_entries(
    fz: &crate::grids::PluckerFrieze,
    matrix: Option<&CoordinateMatrix>,
) -> Result<Vec<GridEntryJson>> {
    let mut out = Vec::new();
    for r in 1..=fz.n() {
        for m in 1..=fz.strip_rows() {
            let entry = fz.entry(r as i64, m as i64);
            let (tuple, value) = match &entry {
                PluckerEntry::Zero => (None, matrix.map(|_| "0".to_string())),
                PluckerEntry::Coordinate(cols) => {
                    let value = match matrix {
                        Some(mat) => Some(format_rational(&entry.value(mat)?)),
                        None => None,
                    };
                    (Some(cols.clone()), value)
                }
            };
            out.push(GridEntryJson { r, m, tuple, value });
        }
    }
    Ok(out)
}

pub fn determinant_report_entries(report: &DeterminantReport) -> Vec<DeterminantEntryJson> {
    report
        .checks
        .iter()
        .map(|c| DeterminantEntryJson {
            anchor: [c.r, c.m],
            size: report.size,
            value: format_rational(&c.value),
        })
        .collect()
}

pub fn s_report_entries(report: &SDiamondReport) -> Vec<DeterminantEntryJson> {
    report
        .checks
        .iter()
        .map(|c| DeterminantEntryJson {
            anchor: [c.r, c.m],
            size: 4,
            value: format_rational(&c.s_det),
        })
        .collect()
}

/// Grid values for the minor frieze / S-subfrieze exports: (a, b) cells in
/// row-major order with the defining triple.
pub fn labelled_grid_entries<F>(n: usize, triple: F, value_of: impl Fn(usize, usize) -> Rational) -> Vec<GridEntryJson>
where
    F: Fn(usize, usize) -> [usize; 3],
{
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            out.push(GridEntryJson {
                r: a,
                m: b,
                tuple: Some(triple(a, b).to_vec()),
                value: Some(format_rational(&value_of(a, b))),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    #[test]
    fn polygon_round_trip() {
        let text = r#"{"n": 3, "vertices": [["0","0"], ["1/2","0"], ["0","-2/3"]]}"#;
        let p = parse_polygon_json(text).unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(p.vertex(2).unwrap().x, Rational::new(1.into(), 2.into()));
        let file = polygon_to_file(&p);
        let p2 = parse_polygon_json(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn bad_polygon_files_are_rejected() {
        assert!(parse_polygon_json("not json").is_err());
        assert!(parse_polygon_json(r#"{"n": 2, "vertices": [["0","0"],["1","1"]]}"#).is_err());
        assert!(
            parse_polygon_json(r#"{"n": 3, "vertices": [["0","0"],["1","0"],["1/0","1"]]}"#)
                .is_err()
        );
        assert!(parse_polygon_json(r#"{"n": 4, "vertices": [["0","0"]]}"#).is_err());
    }

    #[test]
    fn frieze_round_trip_preserves_entries() {
        let p = crate::geometry::random_polygon(5, 3, 7).unwrap();
        let f = HeronianFrieze::from_polygon(&p);
        let file = frieze_to_file(&f);
        let back = parse_frieze_json(&serde_json::to_string(&file).unwrap()).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn frieze_ingestion_rejects_bad_or_missing_entries() {
        let p = crate::geometry::random_polygon(5, 3, 7).unwrap();
        let file = frieze_to_file(&HeronianFrieze::from_polygon(&p));
        let mut text = serde_json::to_string(&file).unwrap();
        // a triple outside the two stored forms
        text = text.replacen(
            r#"{"i":1,"j":2,"k":4,"#,
            r#"{"i":1,"j":3,"k":5,"#,
            1,
        );
        assert!(matches!(
            parse_frieze_json(&text),
            Err(crate::Error::BadEntryForm(_)) | Err(crate::Error::MissingEntry(_))
        ));
        // dropping an entry leaves the frieze incomplete
        let mut file = frieze_to_file(&HeronianFrieze::from_polygon(&p));
        file.s.pop();
        assert!(matches!(
            parse_frieze_json(&serde_json::to_string(&file).unwrap()),
            Err(crate::Error::MissingEntry(_))
        ));
    }

    #[test]
    fn frieze_export_is_sorted() {
        let p = crate::geometry::random_polygon(5, 3, 7).unwrap();
        let file = frieze_to_file(&HeronianFrieze::from_polygon(&p));
        let z_keys: Vec<(usize, usize)> = file.z.iter().map(|e| (e.i, e.j)).collect();
        let mut sorted = z_keys.clone();
        sorted.sort();
        assert_eq!(z_keys, sorted);
        let s_keys: Vec<(usize, usize, usize)> = file.s.iter().map(|e| (e.i, e.j, e.k)).collect();
        let mut sorted = s_keys.clone();
        sorted.sort();
        assert_eq!(s_keys, sorted);
    }

    #[test]
    fn fraction_strings_never_floats() {
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(format_rational(&half), "1/2");
        assert_eq!(format_rational(&rat(5)), "5");
    }
}
