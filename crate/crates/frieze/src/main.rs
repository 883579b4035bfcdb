//! Command-line front end: polygon generation and ingestion, frieze
//! construction and verification, relation enumeration with the brute-force
//! oracle, and determinant sweeps. Reports are canonical JSON (or text) with
//! all numbers as exact fraction strings.
//!
//! Exit codes: 0 verified / ok, 1 a mathematical assertion failed, 2 usage
//! or input error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;

use frieze::geometry::{format_rational, random_polygon, Polygon};
use frieze::grassmannian::{evaluate_relation, generate_plucker_relations, CoordinateMatrix};
use frieze::grids::{
    check_diamond_determinants, check_minor_diamonds, check_s_diamonds, PluckerFrieze,
    SSubfriezeVariant,
};
use frieze::heronian::HeronianFrieze;
use frieze::io::{
    determinant_report_entries, frieze_report_violations, frieze_to_file, labelled_grid_entries,
    parse_frieze_json, parse_polygon_json, plucker_grid_entries, plucker_relation_to_json,
    polygon_to_file, relation_to_json, s_report_entries, GridReportJson, PluckerRelationJson,
    RelationJson, VerifyReportJson,
};
use frieze::relations::{
    brute_force_relations, enumerate_relations, s_relation_residual_on_frieze, to_s_relation,
    verify_s_relation,
};

#[derive(Parser)]
#[command(name = "frieze", version, about = "Exact-arithmetic Heronian friezes and Plücker relations")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    #[value(name = "s-primary")]
    SPrimary,
    #[value(name = "s-alternate")]
    SAlternate,
    Minor,
    Plucker,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a deterministic random polygon file.
    Polygon {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        bound: u64,
    },
    /// Build the polygonal Heronian frieze of a polygon and emit it.
    Frieze {
        #[arg(long)]
        polygon: PathBuf,
    },
    /// Verify all diamond equations, boundary conditions, and relation
    /// residuals of a frieze (from a polygon or a frieze export).
    Verify {
        #[arg(long)]
        polygon: Option<PathBuf>,
        /// Verify a previously exported frieze file instead.
        #[arg(long, conflicts_with = "polygon")]
        frieze: Option<PathBuf>,
    },
    /// Enumerate the Heronian minor relations of order n (or, with --k, the
    /// raw Plücker relations of Gr(k, n)).
    Relations {
        #[arg(long)]
        n: usize,
        /// Cross-check the enumeration against the brute-force oracle.
        #[arg(long)]
        oracle: bool,
        /// Evaluate every relation on this polygon.
        #[arg(long)]
        polygon: Option<PathBuf>,
        /// Emit the full Gr(k, n) Plücker relation family instead.
        #[arg(long, conflicts_with = "oracle")]
        k: Option<usize>,
    },
    /// Determinant sweeps over frieze diamonds.
    Determinants {
        #[arg(long)]
        polygon: PathBuf,
        #[arg(long, value_enum)]
        variant: Variant,
        /// Row count for the plucker variant (2 or 3).
        #[arg(long)]
        k: Option<usize>,
        /// Diamond size; defaults to k+1 (plucker) or 4 (minor, s-*).
        #[arg(long)]
        size: Option<usize>,
    },
}

/// Usage/input problem (exit 2), as opposed to a failed mathematical
/// assertion (exit 1).
struct UsageError(String);

impl From<frieze::Error> for UsageError {
    fn from(e: frieze::Error) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// FRIEZE_THREADS caps the sweep parallelism; 0 or unset means automatic.
fn init_thread_pool() {
    if let Ok(v) = std::env::var("FRIEZE_THREADS") {
        if let Ok(threads) = v.trim().parse::<usize>() {
            if threads > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, UsageError> {
    match &cli.command {
        Command::Polygon { n, seed, bound } => {
            let p = random_polygon(*n, *seed, *bound)?;
            emit_json(cli, &polygon_to_file(&p))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Frieze { polygon } => {
            let p = read_polygon(polygon)?;
            let f = HeronianFrieze::from_polygon(&p);
            emit_json(cli, &frieze_to_file(&f))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { polygon, frieze } => cmd_verify(cli, polygon.as_deref(), frieze.as_deref()),
        Command::Relations { n, oracle, polygon, k } => {
            cmd_relations(cli, *n, *oracle, polygon.as_deref(), *k)
        }
        Command::Determinants { polygon, variant, k, size } => {
            cmd_determinants(cli, polygon, *variant, *k, *size)
        }
    }
}

fn read_polygon(path: &std::path::Path) -> Result<Polygon, UsageError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    Ok(parse_polygon_json(&text)?)
}

fn emit(cli: &Cli, content: &str) -> Result<(), UsageError> {
    use std::io::Write;
    match &cli.out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?,
        None => {
            // a closed pipe (e.g. | head) is not an error worth reporting
            if let Err(e) = std::io::stdout().write_all(content.as_bytes()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(UsageError(e.to_string()));
                }
            }
        }
    }
    Ok(())
}

fn emit_json<T: Serialize>(cli: &Cli, doc: &T) -> Result<(), UsageError> {
    let mut text = serde_json::to_string_pretty(doc).map_err(|e| UsageError(e.to_string()))?;
    text.push('\n');
    emit(cli, &text)
}

fn cmd_verify(
    cli: &Cli,
    polygon: Option<&std::path::Path>,
    frieze_path: Option<&std::path::Path>,
) -> Result<ExitCode, UsageError> {
    let (frieze, matrix, polygon) = match (polygon, frieze_path) {
        (Some(path), None) => {
            let p = read_polygon(path)?;
            let m = CoordinateMatrix::from_polygon(&p);
            (HeronianFrieze::from_polygon(&p), Some(m), Some(p))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            (parse_frieze_json(&text)?, None, None)
        }
        _ => return Err(UsageError("verify needs exactly one of --polygon or --frieze".into())),
    };
    let n = frieze.n();
    let diamond_report = frieze.verify();

    // Plücker relations need coordinates; they run only for polygon input.
    let mut plucker_checked = 0usize;
    let mut plucker_nonzero: Vec<PluckerRelationJson> = Vec::new();
    if let Some(m) = &matrix {
        for rel in generate_plucker_relations(3, n)? {
            plucker_checked += 1;
            if !evaluate_relation(m, &rel)?.is_zero() {
                plucker_nonzero.push(plucker_relation_to_json(&rel, Some(m))?);
            }
        }
    }

    let mut s_checked = 0usize;
    let mut s_nonzero: Vec<RelationJson> = Vec::new();
    for rel in enumerate_relations(n) {
        let s_rel = to_s_relation(&rel);
        let residual = match &polygon {
            Some(p) => verify_s_relation(p, &s_rel)?,
            None => match s_relation_residual_on_frieze(&frieze, &s_rel) {
                Some(v) => v,
                None => continue,
            },
        };
        s_checked += 1;
        if !residual.is_zero() {
            let mut json = relation_to_json(&rel, matrix.as_ref(), polygon.as_ref())?;
            if json.s_residual.is_none() {
                json.s_residual = Some(format_rational(&residual));
            }
            s_nonzero.push(json);
        }
    }

    let passed =
        diamond_report.passed() && plucker_nonzero.is_empty() && s_nonzero.is_empty();
    let report = VerifyReportJson {
        n,
        equilateral: frieze.is_equilateral(),
        diamonds_checked: diamond_report.diamonds_checked,
        violations: frieze_report_violations(&diamond_report),
        plucker_relations_checked: plucker_checked,
        plucker_nonzero,
        s_relations_checked: s_checked,
        s_nonzero,
        passed,
    };
    match cli.format {
        Format::Json => emit_json(cli, &report)?,
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(
                text,
                "order {n}: {} diamonds checked, {} violations",
                report.diamonds_checked,
                report.violations.len()
            );
            for v in &diamond_report.violations {
                let _ = writeln!(text, "  {v}");
            }
            let _ = writeln!(
                text,
                "plucker relations: {} checked, {} nonzero",
                report.plucker_relations_checked,
                report.plucker_nonzero.len()
            );
            let _ = writeln!(
                text,
                "s-relations: {} checked, {} nonzero",
                report.s_relations_checked,
                report.s_nonzero.len()
            );
            let _ = writeln!(text, "{}", if passed { "PASS" } else { "FAIL" });
            emit(cli, &text)?;
        }
    }
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct OracleJson {
    enumerated: usize,
    brute_force: usize,
    sets_identical: bool,
}

#[derive(Serialize)]
struct RelationsReportJson {
    n: usize,
    count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleJson>,
    relations: Vec<RelationJson>,
}

fn cmd_relations(
    cli: &Cli,
    n: usize,
    oracle: bool,
    polygon: Option<&std::path::Path>,
    raw_k: Option<usize>,
) -> Result<ExitCode, UsageError> {
    if n < 4 {
        return Err(UsageError(format!(
            "relations need n >= 4 (no 4-element column tuples exist for n = {n})"
        )));
    }
    let polygon = polygon.map(read_polygon).transpose()?;
    if let Some(p) = &polygon {
        if p.n() != n {
            return Err(UsageError(format!(
                "polygon has {} vertices but --n is {n}",
                p.n()
            )));
        }
    }
    if let Some(k) = raw_k {
        return cmd_raw_plucker_relations(cli, k, n, polygon.as_ref());
    }
    let matrix = polygon.as_ref().map(CoordinateMatrix::from_polygon);
    let relations = enumerate_relations(n);
    let oracle_result = if oracle {
        let brute = brute_force_relations(n);
        Some(OracleJson {
            enumerated: relations.len(),
            brute_force: brute.len(),
            sets_identical: brute == relations,
        })
    } else {
        None
    };

    let mut failed = oracle_result.as_ref().is_some_and(|o| !o.sets_identical);
    let mut relation_docs = Vec::with_capacity(relations.len());
    for rel in &relations {
        let doc = relation_to_json(rel, matrix.as_ref(), polygon.as_ref())?;
        if doc.residual.as_deref().is_some_and(|r| r != "0")
            || doc.s_residual.as_deref().is_some_and(|r| r != "0")
        {
            failed = true;
        }
        relation_docs.push(doc);
    }

    let report = RelationsReportJson {
        n,
        count: relations.len(),
        oracle: oracle_result,
        relations: relation_docs,
    };
    match cli.format {
        Format::Json => emit_json(cli, &report)?,
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "order {n}: {} heronian minor relations", report.count);
            if let Some(o) = &report.oracle {
                let _ = writeln!(
                    text,
                    "oracle: {} enumerated, {} brute-force, {}",
                    o.enumerated,
                    o.brute_force,
                    if o.sets_identical { "sets identical" } else { "SETS DIFFER" }
                );
            }
            for rel in &relations {
                let _ = writeln!(text, "  {}", render_relation(rel));
            }
            emit(cli, &text)?;
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

/// Emit the full Gr(k, n) family in canonical order; with a polygon the
/// exact value of each relation is attached (always 0).
fn cmd_raw_plucker_relations(
    cli: &Cli,
    k: usize,
    n: usize,
    polygon: Option<&Polygon>,
) -> Result<ExitCode, UsageError> {
    let matrix = match (k, polygon) {
        (3, Some(p)) => Some(CoordinateMatrix::from_polygon(p)),
        (2, Some(p)) => Some(CoordinateMatrix::xy_from_polygon(p)),
        (_, Some(_)) => {
            return Err(UsageError(format!(
                "polygon evaluation supports k = 2 or 3, got {k}"
            )))
        }
        (_, None) => None,
    };
    let relations = generate_plucker_relations(k, n)?;
    let mut failed = false;
    let mut docs = Vec::with_capacity(relations.len());
    for rel in &relations {
        let doc = plucker_relation_to_json(rel, matrix.as_ref())?;
        if doc.value.as_deref().is_some_and(|v| v != "0") {
            failed = true;
        }
        docs.push(doc);
    }
    match cli.format {
        Format::Json => emit_json(cli, &docs)?,
        Format::Text => {
            let mut text = String::new();
            let _ = writeln!(text, "Gr({k},{n}): {} plucker relations", docs.len());
            for d in &docs {
                let _ = writeln!(text, "  i={:?} j={:?} value={}", d.i, d.j, d.value.as_deref().unwrap_or("-"));
            }
            emit(cli, &text)?;
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn render_relation(rel: &frieze::relations::HeronianMinorRelation) -> String {
    let mut s = format!(
        "i=({},{}) j=({},{},{},{}) case={}",
        rel.i_pair.0,
        rel.i_pair.1,
        rel.j_tuple[0],
        rel.j_tuple[1],
        rel.j_tuple[2],
        rel.j_tuple[3],
        rel.case_tags
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join("+")
    );
    s.push_str(" :");
    for term in rel.minor_terms() {
        if term.is_zero() {
            continue;
        }
        let sign = if term.sign > 0 { " + " } else { " - " };
        let _ = write!(
            s,
            "{sign}m({},{},{})m({},{},{})",
            term.left[0], term.left[1], term.left[2], term.right[0], term.right[1], term.right[2]
        );
    }
    s.push_str(" = 0");
    s
}

fn cmd_determinants(
    cli: &Cli,
    polygon: &std::path::Path,
    variant: Variant,
    k: Option<usize>,
    size: Option<usize>,
) -> Result<ExitCode, UsageError> {
    let p = read_polygon(polygon)?;
    let n = p.n();
    let report = match variant {
        Variant::Plucker => {
            let k = k.unwrap_or(3);
            let matrix = match k {
                3 => CoordinateMatrix::from_polygon(&p),
                2 => CoordinateMatrix::xy_from_polygon(&p),
                _ => {
                    return Err(UsageError(format!(
                        "plucker sweeps over a polygon support k = 2 or 3, got {k}"
                    )))
                }
            };
            let size = size.unwrap_or(k + 1);
            let det = check_diamond_determinants(&matrix, size)?;
            let fz = PluckerFrieze::new(k, n)?;
            if fz.exceeds_standing_assumption() {
                eprintln!("warning: k = {k} exceeds the usual bound k <= n/2 for n = {n}");
            }
            GridReportJson {
                kind: "plucker".into(),
                k,
                n,
                entries: plucker_grid_entries(&fz, Some(&matrix))?,
                determinant_report: determinant_report_entries(&det),
                vanishing_asserted: det.vanishing_asserted,
                passed: det.passed(),
            }
        }
        Variant::Minor => {
            if let Some(s) = size {
                if s != 4 {
                    return Err(UsageError("minor-frieze diamonds are 4x4".into()));
                }
            }
            let det = check_minor_diamonds(&p)?;
            let matrix = CoordinateMatrix::from_polygon(&p);
            GridReportJson {
                kind: "minor".into(),
                k: 3,
                n,
                entries: labelled_grid_entries(
                    n,
                    |a, b| [a, frieze::rep(a as i64 + 1, n), b],
                    |a, b| {
                        matrix
                            .minor(&[a, frieze::rep(a as i64 + 1, n), b])
                            .expect("valid columns")
                    },
                ),
                determinant_report: determinant_report_entries(&det),
                vanishing_asserted: true,
                passed: det.passed(),
            }
        }
        Variant::SPrimary | Variant::SAlternate => {
            if let Some(s) = size {
                if s != 4 {
                    return Err(UsageError("s-subfrieze diamonds are 4x4".into()));
                }
            }
            let sub_variant = if variant == Variant::SPrimary {
                SSubfriezeVariant::Primary
            } else {
                SSubfriezeVariant::Alternate
            };
            let det = check_s_diamonds(&p, sub_variant)?;
            GridReportJson {
                kind: sub_variant.as_str().into(),
                k: 3,
                n,
                entries: labelled_grid_entries(
                    n,
                    |a, b| match sub_variant {
                        SSubfriezeVariant::Primary => [a, frieze::rep(a as i64 + 1, n), b],
                        SSubfriezeVariant::Alternate => [a, b, frieze::rep(b as i64 + 1, n)],
                    },
                    |a, b| {
                        let t = match sub_variant {
                            SSubfriezeVariant::Primary => (a, frieze::rep(a as i64 + 1, n), b),
                            SSubfriezeVariant::Alternate => (a, b, frieze::rep(b as i64 + 1, n)),
                        };
                        p.signed_area4(t.0, t.1, t.2).expect("valid indices")
                    },
                ),
                determinant_report: s_report_entries(&det),
                vanishing_asserted: true,
                passed: det.passed(),
            }
        }
    };
    let passed = report.passed;
    match cli.format {
        Format::Json => emit_json(cli, &report)?,
        Format::Text => {
            let nonzero: Vec<_> = report
                .determinant_report
                .iter()
                .filter(|d| d.value != "0")
                .collect();
            let mut text = String::new();
            let _ = writeln!(
                text,
                "kind={} k={} n={} size={}: {} anchors, {} nonzero determinants",
                report.kind,
                report.k,
                report.n,
                report.determinant_report.first().map_or(0, |d| d.size),
                report.determinant_report.len(),
                nonzero.len()
            );
            for d in nonzero.iter().take(20) {
                let _ = writeln!(
                    text,
                    "  anchor ({}, {}): {}",
                    d.anchor[0], d.anchor[1], d.value
                );
            }
            let _ = writeln!(
                text,
                "{}",
                if report.vanishing_asserted {
                    if passed { "PASS" } else { "FAIL" }
                } else {
                    "no vanishing asserted"
                }
            );
            emit(cli, &text)?;
        }
    }
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
