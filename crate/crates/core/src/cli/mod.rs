//! Command-line front end.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 on input or validation errors, 3 when a resource cap is hit.

mod input;
mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use input::CandidateFile;

use crate::criteria::{
    self, candidate_degree, catalog, catalog_up_to, check_bezout, check_bl, check_conj_index,
    check_conj_original, detailed_differences, expected_eu_difference, Candidate, CatalogEntry,
    Criterion, CriterionReport, Family,
};
use crate::cubical::{self, default_dims, OracleAgreement, DEFAULT_POINT_CAP};
use crate::error::{Error, Result};
use crate::invariants::{tetrahedral, CuspCollection, IntPoly};
use render::{columns, fields, join, labeled_rows, verdict};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cuspidal",
    version,
    about = "Invariants, realizability criteria and lattice cohomology of cusp collections"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// δ, degree, Δ, Q, R and the H/F table
    Invariants(InvariantsArgs),
    /// Bézout, Borodzik–Livingston and conjecture checks
    Check(CheckArgs),
    /// eu ℍ⁰ and eu ℍ* per Spin^c index
    Cohomology(CohomologyArgs),
    /// Known rational cuspidal curves with three or more cusps
    Catalog(CatalogArgs),
    /// Brute-force cubical oracle against the closed formulas
    Oracle(OracleArgs),
    /// Regroupings of the multiplicity multiset
    Stability(StabilityArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Candidate file (`-` for stdin)
    file: Option<PathBuf>,
    /// Cusp literals given inline, e.g. "[6] [2_4] [2_2]"
    #[arg(long, conflicts_with = "file")]
    cusps: Option<String>,
    /// Degree; overrides the file and the candidate equation
    #[arg(long)]
    d: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct InvariantsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Last k shown in the H/F table (default 2δ−2)
    #[arg(long)]
    window: Option<u64>,
    /// Show only k divisible by this
    #[arg(long, default_value_t = 1)]
    stride: u64,
    /// Print the H/F table only
    #[arg(long)]
    table_only: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    Bezout,
    Bl,
    ConjOriginal,
    ConjIndex,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Run the checks even if 2δ ≠ (d−1)(d−2)
    #[arg(long)]
    force: bool,
    /// Restrict to these checks
    #[arg(long, value_enum, value_delimiter = ',')]
    only: Vec<CriterionArg>,
}

#[derive(Args, Debug)]
struct CohomologyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Spin^c index in [0, d)
    #[arg(long, conflicts_with = "all_spinc")]
    a: Option<u64>,
    /// Every Spin^c index
    #[arg(long)]
    all_spinc: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    C,
    D,
    E,
    Sporadic3,
    Sporadic4,
    All,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    #[command(flatten)]
    output: OutputArgs,
    #[arg(long, value_enum, ignore_case = true, default_value_t = FamilyArg::All)]
    family: FamilyArg,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    u: Option<u64>,
    #[arg(long)]
    l: Option<u64>,
    /// Largest degree listed when parameters are omitted
    #[arg(long, default_value_t = 9)]
    max_d: u64,
    /// List C_{d,u} only for u ≤ (d−2)/2
    #[arg(long)]
    distinct: bool,
    /// Run the criteria and compare with the closed-form eu differences
    #[arg(long)]
    check: bool,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Single index j
    #[arg(long, conflicts_with = "sweep", required_unless_present = "sweep")]
    j: Option<u64>,
    /// Every j in [0, 2δ−2]
    #[arg(long)]
    sweep: bool,
    /// Box margins m_i = 2δ_i + 1 + margin; results must agree across them
    #[arg(long, value_delimiter = ',', default_value = "0")]
    box_margin: Vec<usize>,
    /// Explicit box dimensions m_1,…,m_ν
    #[arg(long = "box", value_delimiter = ',', conflicts_with = "box_margin")]
    box_dims: Vec<usize>,
    /// Largest admissible number of lattice points
    #[arg(long, default_value_t = DEFAULT_POINT_CAP)]
    cap: usize,
    /// Write one `j<j>.tsv` Betti table per index into this directory
    #[arg(long)]
    dump_betti: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct StabilityArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Largest number of cusps in a regrouping
    #[arg(long)]
    max_parts: Option<usize>,
}

/// Result of one command: the exit code and what goes to stdout.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

pub fn main() -> i32 {
    let cli = Cli::parse();
    let outcome = run(cli);
    print!("{}", outcome.stdout);
    std::io::stdout().flush().ok();
    outcome.code
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            Outcome {
                code,
                stdout: if code == EXIT_OK {
                    e.to_string()
                } else {
                    String::new()
                },
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Invariants(a) => cmd_invariants(a),
        Command::Check(a) => cmd_check(a),
        Command::Cohomology(a) => cmd_cohomology(a),
        Command::Catalog(a) => cmd_catalog(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Stability(a) => cmd_stability(a),
    };
    match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::RectangleTooLarge { .. } => EXIT_CAP,
                _ => EXIT_INPUT,
            };
            Outcome {
                code,
                stdout: String::new(),
            }
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    command: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

fn emit<T: Serialize>(
    format: Format,
    command: &str,
    body: &T,
    text: impl FnOnce() -> String,
    pass: bool,
) -> Result<Outcome> {
    let stdout = match format {
        Format::Text => text(),
        Format::Machine => {
            let env = Envelope {
                schema_version: SCHEMA_VERSION,
                command,
                body,
            };
            serde_json::to_string_pretty(&env).expect("reports serialize") + "\n"
        }
    };
    Ok(Outcome {
        code: if pass { EXIT_OK } else { EXIT_CHECK_FAILED },
        stdout,
    })
}

struct Loaded {
    collection: CuspCollection,
    degree: Option<u64>,
}

fn load(input: &InputArgs) -> Result<Loaded> {
    let file = match (&input.cusps, &input.file) {
        (Some(text), _) => CandidateFile::parse(text)?,
        (None, Some(path)) if path.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
                .map_err(|e| Error::InvalidInput(format!("reading stdin: {e}")))?;
            CandidateFile::parse(&s)?
        }
        (None, Some(path)) => {
            let s = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("reading {}: {e}", path.display())))?;
            CandidateFile::parse(&s)?
        }
        (None, None) => {
            return Err(Error::InvalidInput(
                "give a candidate file or --cusps".into(),
            ))
        }
    };
    let collection = file.collection()?;
    let degree = input
        .d
        .or(file.degree)
        .or_else(|| candidate_degree(collection.delta()));
    Ok(Loaded { collection, degree })
}

fn require_degree(l: &Loaded) -> Result<u64> {
    l.degree.ok_or_else(|| {
        Error::InvalidInput(format!(
            "2*delta = {} is not of the form (d-1)(d-2); pass --d",
            2 * l.collection.delta()
        ))
    })
}

fn cusp_list(c: &CuspCollection) -> String {
    c.cusps()
        .iter()
        .map(|cu| cu.ty.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

// ---------------------------------------------------------------- invariants

#[derive(Serialize)]
struct CuspInfo {
    literal: String,
    multseq: String,
    semigroup: String,
    delta: u64,
    conductor: u64,
}

#[derive(Serialize)]
struct HfTable {
    k: Vec<i64>,
    h: Vec<i64>,
    f: Vec<i64>,
    diff: Vec<i64>,
}

#[derive(Serialize)]
struct InvariantsReport {
    cusps: Vec<CuspInfo>,
    nu: usize,
    delta: u64,
    degree: Option<u64>,
    is_candidate: bool,
    geometric_genus: Option<i64>,
    alexander: Vec<i64>,
    q: Vec<i64>,
    r: Option<Vec<i64>>,
    table: HfTable,
}

fn hf_table(c: &CuspCollection, last: u64, stride: u64) -> HfTable {
    let h = c.h_fn();
    let f = c.f_values(last as usize);
    let ks: Vec<i64> = (0..=last as i64).step_by(stride.max(1) as usize).collect();
    HfTable {
        h: ks.iter().map(|&k| h.value(k + 1)).collect(),
        f: ks.iter().map(|&k| f.get(k)).collect(),
        diff: ks.iter().map(|&k| h.value(k + 1) - f.get(k)).collect(),
        k: ks,
    }
}

fn render_hf(t: &HfTable) -> String {
    let s = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>();
    labeled_rows(&[
        ("k", s(&t.k)),
        ("H(k+1)", s(&t.h)),
        ("F(k)", s(&t.f)),
        ("H(k+1)-F(k)", s(&t.diff)),
    ])
}

fn cmd_invariants(a: InvariantsArgs) -> Result<Outcome> {
    let l = load(&a.input)?;
    let c = &l.collection;
    let is_candidate = l.degree.is_some_and(|d| d >= 3 && c.is_candidate_for(d));
    let last = a.window.unwrap_or(c.top_index() as u64);
    let r = match l.degree {
        Some(d) if d >= 3 => Some(c.r_poly(d)?.coeffs().values().to_vec()),
        _ => None,
    };
    let report = InvariantsReport {
        cusps: c
            .cusps()
            .iter()
            .map(|cu| {
                Ok(CuspInfo {
                    literal: cu.ty.to_string(),
                    multseq: cu.semigroup.multseq()?.to_string(),
                    semigroup: cu.semigroup.to_string(),
                    delta: cu.semigroup.delta(),
                    conductor: cu.semigroup.conductor(),
                })
            })
            .collect::<Result<_>>()?,
        nu: c.nu(),
        delta: c.delta(),
        degree: l.degree,
        is_candidate,
        geometric_genus: is_candidate.then(|| tetrahedral(l.degree.unwrap())),
        alexander: c.alexander_product().coeffs().values().to_vec(),
        q: c.q_coefficients()?.values().to_vec(),
        r,
        table: hf_table(c, last, a.stride),
    };
    emit(
        a.output.format,
        "invariants",
        &report,
        || {
            if a.table_only {
                return render_hf(&report.table);
            }
            let poly = |v: &[i64]| IntPoly::new(crate::IntSeq::new(v.to_vec())).to_string();
            let mut pairs = vec![
                (
                    "cusps",
                    join(
                        &report.cusps.iter().map(|c| &c.literal).collect::<Vec<_>>(),
                        ", ",
                    ),
                ),
                (
                    "multiplicities",
                    join(
                        &report.cusps.iter().map(|c| &c.multseq).collect::<Vec<_>>(),
                        ", ",
                    ),
                ),
                (
                    "semigroups",
                    join(
                        &report
                            .cusps
                            .iter()
                            .map(|c| &c.semigroup)
                            .collect::<Vec<_>>(),
                        ", ",
                    ),
                ),
                ("nu", report.nu.to_string()),
                ("delta", report.delta.to_string()),
                (
                    "degree",
                    match (report.degree, report.is_candidate) {
                        (Some(d), true) => d.to_string(),
                        (Some(d), false) => format!("{d} (2*delta != (d-1)(d-2))"),
                        (None, _) => "none".into(),
                    },
                ),
            ];
            if let Some(pg) = report.geometric_genus {
                pairs.push(("p_g", pg.to_string()));
            }
            pairs.push(("Delta(t)", poly(&report.alexander)));
            pairs.push(("Q(t)", poly(&report.q)));
            if let Some(r) = &report.r {
                pairs.push(("R(t)", poly(r)));
            }
            format!("{}\n{}", fields(&pairs), render_hf(&report.table))
        },
        true,
    )
}

// --------------------------------------------------------------------- check

#[derive(Serialize)]
struct CheckReport {
    cusps: String,
    delta: u64,
    d: u64,
    satisfies_equation: bool,
    forced: bool,
    criteria: Vec<CriterionReport>,
    pass: bool,
}

fn render_criterion(r: &CriterionReport) -> String {
    let mut head = format!("{:<14} {}", r.criterion.to_string(), verdict(r.pass));
    let failing = r.failing_js();
    if !failing.is_empty() {
        head.push_str(&format!("  (j = {})", join(&failing, ", ")));
    }
    if let Some(diff) = r.difference {
        head.push_str(&format!("  (eu H0 - eu H* = {diff})"));
    }
    let mut s = head + "\n";
    let body = if r.criterion == Criterion::ConjIndex {
        let row = &r.rows[0];
        labeled_rows(&[
            ("  eu H*", vec![row.lhs.to_string()]),
            ("  eu H0", vec![row.rhs.to_string()]),
        ])
    } else {
        let lhs = match r.criterion {
            Criterion::ConjOriginal => "  F(jd)",
            _ => "  H(jd+1)",
        };
        labeled_rows(&[
            (
                "  j",
                r.rows
                    .iter()
                    .map(|x| x.j.unwrap_or(0).to_string())
                    .collect(),
            ),
            (lhs, r.rows.iter().map(|x| x.lhs.to_string()).collect()),
            (
                "  (j+1)(j+2)/2",
                r.rows.iter().map(|x| x.rhs.to_string()).collect(),
            ),
        ])
    };
    s.push_str(&body);
    s
}

fn cmd_check(a: CheckArgs) -> Result<Outcome> {
    let l = load(&a.input)?;
    let d = require_degree(&l)?;
    let mut cand = Candidate::new(l.collection.clone(), d);
    if a.force {
        cand = cand.forced();
    }
    let wanted = |c: CriterionArg| a.only.is_empty() || a.only.contains(&c);
    let mut reports = Vec::new();
    if wanted(CriterionArg::Bezout) {
        reports.push(check_bezout(&cand)?);
    }
    if wanted(CriterionArg::Bl) {
        reports.push(check_bl(&cand)?);
    }
    if wanted(CriterionArg::ConjOriginal) {
        reports.push(check_conj_original(&cand)?);
    }
    if wanted(CriterionArg::ConjIndex) {
        reports.push(check_conj_index(&cand)?);
    }
    let pass = reports.iter().all(|r| r.pass);
    let report = CheckReport {
        cusps: cusp_list(&l.collection),
        delta: l.collection.delta(),
        d,
        satisfies_equation: cand.satisfies_equation(),
        forced: a.force,
        criteria: reports,
        pass,
    };
    emit(
        a.output.format,
        "check",
        &report,
        || {
            let mut s = fields(&[
                ("cusps", report.cusps.clone()),
                ("delta", report.delta.to_string()),
                (
                    "d",
                    if report.satisfies_equation {
                        report.d.to_string()
                    } else {
                        format!("{} (forced; 2*delta != (d-1)(d-2))", report.d)
                    },
                ),
            ]);
            for r in &report.criteria {
                s.push('\n');
                s.push_str(&render_criterion(r));
            }
            s
        },
        pass,
    )
}

// ---------------------------------------------------------------- cohomology

#[derive(Serialize)]
struct CohomologyRow {
    a: u64,
    /// `Σ_{j≡a (d)} (H(j+1)+δ−1−j)` and `Σ_{j≡a (d)} (F(j)+δ−1−j)`.
    eu_h0: i64,
    eu_hstar: i64,
    /// `Σ_{j≡−a (d)} H(j+1)` and `Σ_{j≡−a (d)} F(j)`; candidates only.
    candidate_form: Option<(i64, i64)>,
}

#[derive(Serialize)]
struct CohomologyReport {
    cusps: String,
    delta: u64,
    d: u64,
    satisfies_equation: bool,
    rows: Vec<CohomologyRow>,
}

fn cmd_cohomology(a: CohomologyArgs) -> Result<Outcome> {
    let l = load(&a.input)?;
    let d = require_degree(&l)?;
    if d == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let c = &l.collection;
    let cand = d >= 3 && c.is_candidate_for(d);
    let indices: Vec<u64> = match (a.a, a.all_spinc) {
        (Some(x), _) => vec![x],
        (None, true) => (0..d).collect(),
        (None, false) => vec![0],
    };
    let rows = indices
        .iter()
        .map(|&x| {
            let r = c.eu_report(d, x)?;
            Ok(CohomologyRow {
                a: x,
                eu_h0: r.eu_h0,
                eu_hstar: r.eu_hstar,
                candidate_form: if cand {
                    Some(c.eu_corollary(d, x)?)
                } else {
                    None
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = CohomologyReport {
        cusps: cusp_list(c),
        delta: c.delta(),
        d,
        satisfies_equation: cand,
        rows,
    };
    emit(
        a.output.format,
        "cohomology",
        &report,
        || {
            let mut s = fields(&[
                ("cusps", report.cusps.clone()),
                ("delta", report.delta.to_string()),
                ("d", report.d.to_string()),
            ]);
            s.push('\n');
            s.push_str(
                "general:        sum over j = a (mod d) of H(j+1)+delta-1-j and F(j)+delta-1-j\n",
            );
            if report.satisfies_equation {
                s.push_str("candidate form: sum over j = -a (mod d) of H(j+1) and F(j)\n");
            }
            s.push('\n');
            let mut header = vec!["a", "eu H0", "eu H*"];
            if report.satisfies_equation {
                header.extend(["eu H0 (cand)", "eu H* (cand)"]);
            }
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    let mut v = vec![r.a.to_string(), r.eu_h0.to_string(), r.eu_hstar.to_string()];
                    if let Some((h0, hs)) = r.candidate_form {
                        v.extend([h0.to_string(), hs.to_string()]);
                    }
                    v
                })
                .collect();
            s.push_str(&columns(&header, &rows));
            s
        },
        true,
    )
}

// ------------------------------------------------------------------- catalog

#[derive(Serialize)]
struct CatalogCheck {
    bezout: bool,
    bl: bool,
    conj_original: bool,
    conj_original_failing: Vec<u64>,
    conj_index: bool,
    differences: Vec<i64>,
    eu_h0: i64,
    eu_hstar: i64,
    eu_difference: i64,
    expected_difference: Option<i64>,
    pass: bool,
}

#[derive(Serialize)]
struct CatalogRow {
    curve: String,
    family: Family,
    d: u64,
    cusps: Vec<String>,
    newton: Vec<String>,
    check: Option<CatalogCheck>,
}

#[derive(Serialize)]
struct CatalogReport {
    entries: Vec<CatalogRow>,
    pass: bool,
}

fn catalog_entries(a: &CatalogArgs) -> Result<Vec<CatalogEntry>> {
    let c_range = |d: u64| -> Vec<u64> {
        let top = if a.distinct { (d - 2) / 2 } else { d - 3 };
        (1..=top).collect()
    };
    let mut out = Vec::new();
    match a.family {
        FamilyArg::C => match (a.d, a.u) {
            (Some(d), Some(u)) => out.push(catalog(Family::C { d, u })?),
            (Some(d), None) => {
                if d < 4 {
                    return Err(Error::CatalogParams(format!("C needs d >= 4, got {d}")));
                }
                for u in c_range(d) {
                    out.push(catalog(Family::C { d, u })?);
                }
            }
            (None, Some(_)) => return Err(Error::CatalogParams("--u needs --d".into())),
            (None, None) => {
                for d in 4..=a.max_d {
                    for u in c_range(d) {
                        out.push(catalog(Family::C { d, u })?);
                    }
                }
            }
        },
        FamilyArg::D => match a.l {
            Some(l) => out.push(catalog(Family::D { l })?),
            None => {
                for l in (1..).take_while(|l| 2 * l + 3 <= a.max_d) {
                    out.push(catalog(Family::D { l })?);
                }
            }
        },
        FamilyArg::E => match a.l {
            Some(l) => out.push(catalog(Family::E { l })?),
            None => {
                for l in (1..).take_while(|l| 3 * l + 4 <= a.max_d) {
                    out.push(catalog(Family::E { l })?);
                }
            }
        },
        FamilyArg::Sporadic3 => out.push(catalog(Family::Sporadic3)?),
        FamilyArg::Sporadic4 => out.push(catalog(Family::Sporadic4)?),
        FamilyArg::All => {
            out = catalog_up_to(a.max_d);
            if a.distinct {
                out.retain(|e| !matches!(e.family, Family::C { d, u } if u > (d - 2) / 2));
            }
        }
    }
    Ok(out)
}

fn catalog_check(e: &CatalogEntry) -> Result<CatalogCheck> {
    let c = e.collection();
    let cand = Candidate::new(c.clone(), e.d);
    let bezout = check_bezout(&cand)?;
    let bl = check_bl(&cand)?;
    let orig = check_conj_original(&cand)?;
    let index = check_conj_index(&cand)?;
    let (eu_h0, eu_hstar) = c.eu_canonical(e.d)?;
    let expected = expected_eu_difference(e);
    let eu_difference = eu_h0 - eu_hstar;
    Ok(CatalogCheck {
        bezout: bezout.pass,
        bl: bl.pass,
        conj_original: orig.pass,
        conj_original_failing: orig.failing_js(),
        conj_index: index.pass,
        differences: detailed_differences(&c, e.d),
        eu_h0,
        eu_hstar,
        eu_difference,
        expected_difference: expected,
        pass: bl.pass && expected.is_none_or(|x| x == eu_difference),
    })
}

fn cmd_catalog(a: CatalogArgs) -> Result<Outcome> {
    let entries = catalog_entries(&a)?;
    let rows = entries
        .iter()
        .map(|e| {
            Ok(CatalogRow {
                curve: e.family.to_string(),
                family: e.family,
                d: e.d,
                cusps: e.cusps.iter().map(|m| m.to_string()).collect(),
                newton: e.newton.iter().map(|n| n.to_string()).collect(),
                check: if a.check {
                    Some(catalog_check(e)?)
                } else {
                    None
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = rows.iter().all(|r| r.check.as_ref().is_none_or(|c| c.pass));
    let report = CatalogReport {
        entries: rows,
        pass,
    };
    emit(
        a.output.format,
        "catalog",
        &report,
        || {
            if !a.check {
                let rows: Vec<Vec<String>> = report
                    .entries
                    .iter()
                    .map(|r| {
                        vec![
                            r.curve.clone(),
                            r.d.to_string(),
                            r.cusps.join(", "),
                            r.newton.join(", "),
                        ]
                    })
                    .collect();
                return columns(&["curve", "d", "cusps", "Newton pairs"], &rows);
            }
            let rows: Vec<Vec<String>> = report
                .entries
                .iter()
                .map(|r| {
                    let c = r.check.as_ref().unwrap();
                    vec![
                        r.curve.clone(),
                        r.d.to_string(),
                        r.cusps.join(", "),
                        join(&c.differences, " "),
                        c.eu_difference.to_string(),
                        c.expected_difference.map_or("-".into(), |x| x.to_string()),
                        verdict(c.bl).into(),
                        verdict(c.conj_original).into(),
                        verdict(c.conj_index).into(),
                    ]
                })
                .collect();
            columns(
                &[
                    "curve",
                    "d",
                    "cusps",
                    "H(jd+1)-F(jd)",
                    "eu H0 - eu H*",
                    "expected",
                    "bl",
                    "conj_original",
                    "conj_index",
                ],
                &rows,
            )
        },
        pass,
    )
}

// -------------------------------------------------------------------- oracle

#[derive(Serialize)]
struct OracleReport {
    cusps: String,
    nu: usize,
    delta: u64,
    boxes: Vec<Vec<usize>>,
    results: Vec<OracleAgreement>,
    pass: bool,
}

fn cmd_oracle(a: OracleArgs) -> Result<Outcome> {
    let l = load(&a.input)?;
    let c = &l.collection;
    let boxes: Vec<Vec<usize>> = if a.box_dims.is_empty() {
        a.box_margin.iter().map(|&m| default_dims(c, m)).collect()
    } else {
        vec![a.box_dims.clone()]
    };
    for b in &boxes {
        let points = cubical::point_count(b);
        if points > a.cap {
            return Err(Error::RectangleTooLarge { points, cap: a.cap });
        }
    }
    let results = match a.j {
        Some(j) => vec![cubical::verify_j_in(c, j, &boxes, a.cap)?],
        None => {
            use rayon::prelude::*;
            (0..=c.top_index() as u64)
                .into_par_iter()
                .map(|j| cubical::verify_j_in(c, j, &boxes, a.cap))
                .collect::<Result<Vec<_>>>()?
        }
    };
    if let Some(dir) = &a.dump_betti {
        std::fs::create_dir_all(dir)
            .map_err(|e| Error::InvalidInput(format!("creating {}: {e}", dir.display())))?;
        for r in &results {
            let path = dir.join(format!("j{}.tsv", r.j));
            std::fs::write(&path, r.table.to_tsv())
                .map_err(|e| Error::InvalidInput(format!("writing {}: {e}", path.display())))?;
        }
    }
    let pass = results.iter().all(|r| r.pass);
    let report = OracleReport {
        cusps: cusp_list(c),
        nu: c.nu(),
        delta: c.delta(),
        boxes,
        results,
        pass,
    };
    emit(
        a.output.format,
        "oracle",
        &report,
        || {
            let mut s = fields(&[
                ("cusps", report.cusps.clone()),
                ("delta", report.delta.to_string()),
                (
                    "boxes",
                    report
                        .boxes
                        .iter()
                        .map(|b| format!("[{}]", join(b, ",")))
                        .collect::<Vec<_>>()
                        .join(" "),
                ),
            ]);
            s.push('\n');
            let mut header = vec![
                "j",
                "eu H0",
                "H(j+1)+d-1-j",
                "eu H*",
                "F(j)+d-1-j",
                "min W|T_j",
                "expected",
                "vanishing",
                "box-stable",
            ];
            if report.nu == 2 {
                header.push("sum b1");
            }
            header.push("verdict");
            let rows: Vec<Vec<String>> = report
                .results
                .iter()
                .map(|r| {
                    let mut v = vec![
                        r.j.to_string(),
                        r.oracle_eu_h0.to_string(),
                        r.expected_eu_h0.to_string(),
                        r.oracle_eu_hstar.to_string(),
                        r.expected_eu_hstar.to_string(),
                        r.min_w.to_string(),
                        r.expected_min_w.to_string(),
                        yes_no(r.vanishing),
                        yes_no(r.margin_stable),
                    ];
                    if report.nu == 2 {
                        v.push(r.h1_total.to_string());
                    }
                    v.push(verdict(r.pass).into());
                    v
                })
                .collect();
            s.push_str(&columns(&header, &rows));
            s
        },
        pass,
    )
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.into()
}

// ----------------------------------------------------------------- stability

fn cmd_stability(a: StabilityArgs) -> Result<Outcome> {
    let l = load(&a.input)?;
    let report = criteria::stability(&l.collection, l.degree, a.max_parts)?;
    let pass =
        report.h_equal && report.bl_constant != Some(false) && report.eu_h0_constant != Some(false);
    emit(
        a.output.format,
        "stability",
        &report,
        || {
            let opt = |b: Option<bool>| b.map_or("-".to_string(), yes_no);
            let mut s = fields(&[
                ("multiset", format!("{{{}}}", join(&report.multiset, ","))),
                ("d", report.d.map_or("none".into(), |d| d.to_string())),
                (
                    "regroupings",
                    format!(
                        "{}{}",
                        report.regroupings.len(),
                        if report.truncated { " (truncated)" } else { "" }
                    ),
                ),
            ]);
            s.push('\n');
            let rows: Vec<Vec<String>> = report
                .regroupings
                .iter()
                .map(|r| {
                    vec![
                        r.cusps.join(", "),
                        r.bl_pass.map_or("-".into(), |b| verdict(b).into()),
                        join(&r.eu_h0, " "),
                        join(&r.eu_hstar, " "),
                    ]
                })
                .collect();
            s.push_str(&columns(
                &["cusps", "bl", "eu H0 (a = 0..d-1)", "eu H* (a = 0..d-1)"],
                &rows,
            ));
            s.push('\n');
            s.push_str(&fields(&[
                ("H equal", yes_no(report.h_equal)),
                ("bl constant", opt(report.bl_constant)),
                ("eu H0 constant", opt(report.eu_h0_constant)),
                ("eu H* constant", opt(report.eu_hstar_constant)),
            ]));
            s
        },
        pass,
    )
}
