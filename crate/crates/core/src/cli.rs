//! Command-line front end.
//!
//! Each command builds a report that renders either as text or as one JSON
//! document. Decimal fields in JSON carry six fractional digits, residuals
//! are in scientific notation and polynomial coefficients are exact integers.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::bounds::{self, BoundQuery, TableRow};
use crate::chromatic::chromatic_deletion_contraction;
use crate::error::{Error, Result};
use crate::graph::{classify, pair_independence_ratio, parse_graph, ClassMembership, Graph};
use crate::penrose::{
    chromatic_via_penrose_capped, enum_cap_from_env, verify_partition_scheme, VertexOrdering,
    ENUM_CAP_ENV, MAX_ENUM_VERTICES,
};
use crate::poly::SparsePolynomial;
use crate::roots::{all_inside, find_roots, RootReport, ROOT_RESIDUAL_TOLERANCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "clawfree",
    version,
    about = "Zero-free disks for chromatic polynomials of claw-free graphs",
    after_help = "Graph files: a header line `n m`, then m lines `u v` with 0-based vertices; \
                  `#` starts a comment line.\nThe environment variable CLAWFREE_MAX_ENUM overrides \
                  the forest enumeration vertex cap (default 12, hard ceiling 24)."
)]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a graph, compute kappa, the disk bound and chromatic roots.
    Analyze {
        file: PathBuf,
        /// Vertex cap for exact polynomial stages.
        #[arg(long)]
        max_enum: Option<usize>,
    },
    /// Evaluate the constant C for a class and kappa.
    Bounds {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        class: u8,
        #[arg(long)]
        kappa: f64,
        #[arg(long)]
        a: Option<f64>,
        #[arg(long)]
        delta: Option<usize>,
    },
    /// Tabulate C and its minimizer for both classes over a kappa grid.
    Table1 {
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        /// Compare against the embedded reference values (tolerance 5e-6).
        #[arg(long)]
        check: bool,
    },
    /// Check the interval partition on every small vertex subset and the
    /// forest expansion against deletion-contraction.
    VerifyScheme {
        file: PathBuf,
        #[arg(long, default_value_t = 6)]
        rmax: usize,
    },
    /// Chromatic polynomial roots with residuals.
    Roots { file: PathBuf },
}

/// What a command invocation printed and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Conditioning { .. } => EXIT_VERIFY,
        Error::Parse { .. }
        | Error::Domain { .. }
        | Error::Contract(_)
        | Error::Io(_)
        | Error::DegenerateKappa { .. } => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, code)) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}

fn execute(cli: &Cli) -> Result<(String, i32)> {
    match &cli.command {
        Command::Analyze { file, max_enum } => {
            let cap = max_enum.unwrap_or_else(enum_cap_from_env);
            emit(&analyze(&read(file)?, cap)?, cli.json)
        }
        Command::Bounds {
            class,
            kappa,
            a,
            delta,
        } => emit(&bounds_report(*class, *kappa, *a, *delta)?, cli.json),
        Command::Table1 { step, check } => emit(&table1_report(*step, *check)?, cli.json),
        Command::VerifyScheme { file, rmax } => emit(
            &verify_scheme(&read(file)?, *rmax, enum_cap_from_env())?,
            cli.json,
        ),
        Command::Roots { file } => {
            emit(&roots_report(&read(file)?, enum_cap_from_env())?, cli.json)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

/// A command result: serializable, renderable as text, with an exit code.
pub trait Report: Serialize {
    fn text(&self) -> String;
    fn exit_code(&self) -> i32 {
        EXIT_OK
    }
}

fn emit<R: Report>(r: &R, json: bool) -> Result<(String, i32)> {
    let out = if json {
        let mut s = serde_json::to_string_pretty(r).map_err(|e| Error::contract(e.to_string()))?;
        s.push('\n');
        s
    } else {
        r.text()
    };
    Ok((out, r.exit_code()))
}

// ---------------------------------------------------------------------------
// JSON number formats

/// A decimal rendered with exactly six fractional digits; `null` if not finite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Fixed6(pub f64);

impl std::fmt::Display for Fixed6 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = if self.0 == 0.0 { 0.0 } else { self.0 };
        write!(f, "{v:.6}")
    }
}

impl Serialize for Fixed6 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        raw_number(s, self.0.is_finite().then(|| self.to_string()))
    }
}

/// Scientific notation with six significant fractional digits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sci6(pub f64);

impl std::fmt::Display for Sci6 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:.6e}", self.0)
    }
}

impl Serialize for Sci6 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        raw_number(s, self.0.is_finite().then(|| self.to_string()))
    }
}

/// An exact integer, written as a JSON number of any length.
#[derive(Clone, Debug, PartialEq)]
pub struct BigNum(pub BigInt);

impl Serialize for BigNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        raw_number(s, Some(self.0.to_string()))
    }
}

fn raw_number<S: Serializer>(s: S, text: Option<String>) -> std::result::Result<S::Ok, S::Error> {
    match text {
        None => s.serialize_none(),
        Some(t) => RawValue::from_string(t)
            .map_err(serde::ser::Error::custom)?
            .serialize(s),
    }
}

fn coefficients(p: &SparsePolynomial) -> Vec<BigNum> {
    p.coeffs().iter().cloned().map(BigNum).collect()
}

// ---------------------------------------------------------------------------
// analyze

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    /// 1-based lines that repeated an earlier edge.
    pub duplicate_edge_lines: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KappaReport {
    pub exact: String,
    pub decimal: Fixed6,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiskBound {
    pub applicable: bool,
    pub reason: Option<String>,
    pub class_index: Option<u8>,
    pub c: Option<Fixed6>,
    pub a_star: Option<Fixed6>,
    pub z: Option<Fixed6>,
    /// `C Δ`.
    pub radius: Option<Fixed6>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChromaticReport {
    pub computed: bool,
    pub reason: Option<String>,
    /// Lowest degree first.
    pub coefficients: Option<Vec<BigNum>>,
    pub display: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootEntry {
    pub re: Fixed6,
    pub im: Fixed6,
    pub modulus: Fixed6,
    pub residual: Sci6,
    pub exact: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootsBlock {
    pub roots: Vec<RootEntry>,
    pub max_residual: Sci6,
    pub ill_conditioned: bool,
}

impl From<&RootReport> for RootsBlock {
    fn from(r: &RootReport) -> Self {
        RootsBlock {
            roots: r
                .roots
                .iter()
                .map(|x| RootEntry {
                    re: Fixed6(x.re),
                    im: Fixed6(x.im),
                    modulus: Fixed6(x.modulus()),
                    residual: Sci6(x.residual),
                    exact: x.exact,
                })
                .collect(),
            max_residual: Sci6(r.max_residual),
            ill_conditioned: r.ill_conditioned,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Yes,
    No,
    NotComputed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::NotComputed => "not-computed",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub class: ClassMembership,
    pub kappa: KappaReport,
    pub bound: DiskBound,
    pub chromatic: ChromaticReport,
    pub roots: Option<RootsBlock>,
    pub disk_verdict: Verdict,
}

fn not_applicable(reason: &str) -> DiskBound {
    DiskBound {
        applicable: false,
        reason: Some(reason.into()),
        class_index: None,
        c: None,
        a_star: None,
        z: None,
        radius: None,
    }
}

fn exact_chromatic(g: &Graph, cap: usize) -> Result<std::result::Result<SparsePolynomial, String>> {
    match chromatic_via_penrose_capped(g, &VertexOrdering::natural(g.vertex_count()), cap) {
        Ok(p) => Ok(Ok(p)),
        Err(Error::CapExceeded { size, cap, .. }) => Ok(Err(format!(
            "{size} vertices exceeds the enumeration cap {cap} (raise with --max-enum or {ENUM_CAP_ENV})"
        ))),
        Err(e) => Err(e),
    }
}

/// Full report for the graph file contents `text`; `cap` bounds the
/// vertex count of the exact polynomial stage.
pub fn analyze(text: &str, cap: usize) -> Result<AnalysisReport> {
    let parsed = parse_graph(text)?;
    let g = &parsed.graph;
    let class = classify(g);
    let delta = g.max_degree();

    let kappa_exact = match pair_independence_ratio(g) {
        Ok(r) => Some(r),
        Err(Error::DegenerateKappa { .. }) => None,
        Err(e) => return Err(e),
    };
    let kappa = match kappa_exact {
        Some(r) => {
            let value = *r.numer() as f64 / *r.denom() as f64;
            KappaReport {
                exact: r.to_string(),
                decimal: Fixed6(value),
                note: (value > 1.0).then(|| {
                    "kappa exceeds 1, outside the range [0, 1] of the constants".to_string()
                }),
            }
        }
        None => KappaReport {
            exact: "0".into(),
            decimal: Fixed6(0.0),
            note: Some("max degree <= 1 makes floor(D^2/4) = 0; reported as 0".into()),
        },
    };

    let bound = if !class.claw_free {
        not_applicable("graph is not claw-free")
    } else if delta < 3 {
        not_applicable("theorem requires max degree >= 3")
    } else {
        let i = class.class_index.expect("claw-free graphs have a class");
        let k = kappa.decimal.0;
        let best = bounds::minimize_c(i, k)?;
        let radius = best.c_star * delta as f64;
        DiskBound {
            applicable: true,
            reason: None,
            class_index: Some(i),
            c: Some(Fixed6(best.c_star)),
            a_star: Some(Fixed6(best.a_star)),
            z: Some(Fixed6(1.0 / radius)),
            radius: Some(Fixed6(radius)),
        }
    };

    let (chromatic, roots) = match exact_chromatic(g, cap)? {
        Ok(p) => {
            let roots = if p.degree().unwrap_or(0) > 0 {
                Some(find_roots(&p)?)
            } else {
                None
            };
            (
                ChromaticReport {
                    computed: true,
                    reason: None,
                    coefficients: Some(coefficients(&p)),
                    display: Some(p.display_in("q")),
                },
                roots,
            )
        }
        Err(reason) => (
            ChromaticReport {
                computed: false,
                reason: Some(reason),
                coefficients: None,
                display: None,
            },
            None,
        ),
    };

    let disk_verdict = match (&bound.radius, &roots) {
        (Some(r), Some(rep)) => {
            if all_inside(rep, r.0) {
                Verdict::Yes
            } else {
                Verdict::No
            }
        }
        _ => Verdict::NotComputed,
    };

    Ok(AnalysisReport {
        graph: GraphSummary {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            max_degree: delta,
            duplicate_edge_lines: parsed.duplicate_lines.clone(),
        },
        class,
        kappa,
        bound,
        chromatic,
        roots: roots.as_ref().map(RootsBlock::from),
        disk_verdict,
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_roots(out: &mut String, r: &RootsBlock) {
    out.push_str("roots:\n");
    for x in &r.roots {
        let tag = if x.exact { " exact" } else { "" };
        out.push_str(&format!(
            "  {} {}{}i  |q|={}  residual={}{}\n",
            x.re,
            if x.im.0 < 0.0 { "-" } else { "+" },
            Fixed6(x.im.0.abs()),
            x.modulus,
            x.residual,
            tag
        ));
    }
    if r.ill_conditioned {
        out.push_str(&format!(
            "warning: ill-conditioned, max residual {} >= {:e}\n",
            r.max_residual, ROOT_RESIDUAL_TOLERANCE
        ));
    }
}

impl Report for AnalysisReport {
    fn text(&self) -> String {
        let mut out = String::new();
        let g = &self.graph;
        out.push_str(&format!(
            "graph: n={} m={} max_degree={}\n",
            g.vertices, g.edges, g.max_degree
        ));
        if !g.duplicate_edge_lines.is_empty() {
            out.push_str(&format!(
                "note: duplicate edges ignored on lines {:?}\n",
                g.duplicate_edge_lines
            ));
        }
        let c = &self.class;
        out.push_str(&format!(
            "class: claw-free={} square-free={} diamond-free={} class_index={}\n",
            yes_no(c.claw_free),
            yes_no(c.square_free),
            yes_no(c.diamond_free),
            c.class_index.map_or("none".to_string(), |i| i.to_string())
        ));
        out.push_str(&format!(
            "kappa: {} ({})\n",
            self.kappa.exact, self.kappa.decimal
        ));
        if let Some(note) = &self.kappa.note {
            out.push_str(&format!("note: {note}\n"));
        }
        match (&self.bound.c, &self.bound.radius) {
            (Some(cc), Some(r)) => out.push_str(&format!(
                "bound: C={} a*={} radius C*D={}\n",
                cc,
                self.bound.a_star.unwrap(),
                r
            )),
            _ => out.push_str(&format!(
                "bound: none ({})\n",
                self.bound.reason.as_deref().unwrap_or("")
            )),
        }
        match &self.chromatic.display {
            Some(d) => out.push_str(&format!("chromatic polynomial: {d}\n")),
            None => out.push_str(&format!(
                "chromatic polynomial: not-computed ({})\n",
                self.chromatic.reason.as_deref().unwrap_or("")
            )),
        }
        if let Some(r) = &self.roots {
            render_roots(&mut out, r);
        }
        out.push_str(&format!("disk verdict: {}\n", self.disk_verdict.as_str()));
        out
    }

    fn exit_code(&self) -> i32 {
        if self.disk_verdict == Verdict::No {
            EXIT_VERIFY
        } else {
            EXIT_OK
        }
    }
}

// ---------------------------------------------------------------------------
// bounds

#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub class_index: u8,
    pub kappa: Fixed6,
    pub c_star: Fixed6,
    pub a_star: Fixed6,
    pub a: Fixed6,
    pub x_star: Fixed6,
    pub c_of_a: Fixed6,
    pub delta: Option<usize>,
    pub z_of_a: Option<Fixed6>,
    pub radius: Option<Fixed6>,
}

pub fn bounds_report(
    class: u8,
    kappa: f64,
    a: Option<f64>,
    delta: Option<usize>,
) -> Result<BoundsReport> {
    let mut q = BoundQuery::new(class, kappa)?;
    if let Some(a) = a {
        q = q.with_a(a)?;
    }
    let r = q.evaluate(delta)?;
    Ok(BoundsReport {
        class_index: r.class_index,
        kappa: Fixed6(r.kappa),
        c_star: Fixed6(r.c_star),
        a_star: Fixed6(r.a_star),
        a: Fixed6(r.a),
        x_star: Fixed6(r.x_star),
        c_of_a: Fixed6(r.c_of_a),
        delta: r.delta,
        z_of_a: r.z_of_a.map(Fixed6),
        radius: r.radius.map(Fixed6),
    })
}

impl Report for BoundsReport {
    fn text(&self) -> String {
        let mut out = format!("class {} kappa {}\n", self.class_index, self.kappa);
        out.push_str(&format!("C={} a*={}\n", self.c_star, self.a_star));
        out.push_str(&format!(
            "a={} x*={} C(a)={}\n",
            self.a, self.x_star, self.c_of_a
        ));
        if let (Some(d), Some(z), Some(r)) = (self.delta, self.z_of_a, self.radius) {
            out.push_str(&format!("delta={d} z(a)={z} radius={r}\n"));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// table1

#[derive(Clone, Debug, Serialize)]
pub struct TableRowOut {
    pub kappa: Fixed6,
    pub c0: Fixed6,
    pub c1: Fixed6,
    pub a0: Fixed6,
    pub a1: Fixed6,
}

impl From<&TableRow> for TableRowOut {
    fn from(r: &TableRow) -> Self {
        TableRowOut {
            kappa: Fixed6(r.kappa),
            c0: Fixed6(r.c0),
            c1: Fixed6(r.c1),
            a0: Fixed6(r.a0),
            a1: Fixed6(r.a1),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DeviationOut {
    pub kappa: Fixed6,
    pub column: &'static str,
    pub computed: Fixed6,
    pub expected: Fixed6,
    pub deviation: Sci6,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCheck {
    pub rows_compared: usize,
    pub tolerance: Sci6,
    pub passed: bool,
    pub deviations: Vec<DeviationOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table1Report {
    pub step: Fixed6,
    pub rows: Vec<TableRowOut>,
    pub check: Option<TableCheck>,
}

pub fn table1_report(step: f64, check: bool) -> Result<Table1Report> {
    let rows = bounds::table1(step)?;
    let check = check.then(|| {
        let (devs, compared) = bounds::compare_with_snapshot(&rows);
        TableCheck {
            rows_compared: compared,
            tolerance: Sci6(bounds::TABLE1_TOLERANCE),
            passed: devs.is_empty() && compared > 0,
            deviations: devs
                .iter()
                .map(|d| DeviationOut {
                    kappa: Fixed6(d.kappa),
                    column: d.column,
                    computed: Fixed6(d.computed),
                    expected: Fixed6(d.expected),
                    deviation: Sci6(d.deviation),
                })
                .collect(),
        }
    });
    Ok(Table1Report {
        step: Fixed6(step),
        rows: rows.iter().map(TableRowOut::from).collect(),
        check,
    })
}

impl Report for Table1Report {
    fn text(&self) -> String {
        let mut out = format!(
            "{:>8}  {:>10}  {:>10}  {:>10}  {:>10}\n",
            "kappa", "C0", "C1", "a0*", "a1*"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:>8}  {:>10}  {:>10}  {:>10}  {:>10}\n",
                r.kappa.to_string(),
                r.c0.to_string(),
                r.c1.to_string(),
                r.a0.to_string(),
                r.a1.to_string()
            ));
        }
        if let Some(c) = &self.check {
            for d in &c.deviations {
                out.push_str(&format!(
                    "deviation: kappa={} {} computed={} expected={} ({})\n",
                    d.kappa, d.column, d.computed, d.expected, d.deviation
                ));
            }
            out.push_str(&format!(
                "check: {} ({} rows compared, tolerance {})\n",
                if c.passed { "pass" } else { "FAIL" },
                c.rows_compared,
                c.tolerance
            ));
        }
        out
    }

    fn exit_code(&self) -> i32 {
        match &self.check {
            Some(c) if !c.passed => EXIT_VERIFY,
            _ => EXIT_OK,
        }
    }
}

// ---------------------------------------------------------------------------
// verify-scheme

#[derive(Clone, Debug, Serialize)]
pub struct SchemeFailureOut {
    pub subset: Vec<usize>,
    pub edge_set: Vec<String>,
    pub cover_count: usize,
    pub connected_spanning: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SchemeCheck {
    pub passed: bool,
    pub r_max: usize,
    pub subsets_checked: usize,
    pub connected_spanning_sets: usize,
    pub spanning_trees: usize,
    pub failure: Option<SchemeFailureOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub passed: bool,
    pub forest_expansion: Vec<BigNum>,
    pub deletion_contraction: Vec<BigNum>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySchemeReport {
    pub vertices: usize,
    pub edges: usize,
    pub scheme: SchemeCheck,
    pub identity: IdentityCheck,
}

pub fn verify_scheme(text: &str, r_max: usize, cap: usize) -> Result<VerifySchemeReport> {
    let g = parse_graph(text)?.graph;
    let ord = VertexOrdering::natural(g.vertex_count());
    let rep = verify_partition_scheme(&g, &ord, r_max)?;
    let penrose = chromatic_via_penrose_capped(&g, &ord, cap.min(MAX_ENUM_VERTICES))?;
    let oracle = chromatic_deletion_contraction(&g)?;
    Ok(VerifySchemeReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        scheme: SchemeCheck {
            passed: rep.passed(),
            r_max,
            subsets_checked: rep.subsets_checked,
            connected_spanning_sets: rep.connected_spanning_sets,
            spanning_trees: rep.spanning_trees,
            failure: rep.failure.map(|f| SchemeFailureOut {
                subset: f.subset,
                edge_set: f.edge_set.iter().map(|e| e.to_string()).collect(),
                cover_count: f.cover_count,
                connected_spanning: f.connected_spanning,
            }),
        },
        identity: IdentityCheck {
            passed: penrose == oracle,
            forest_expansion: coefficients(&penrose),
            deletion_contraction: coefficients(&oracle),
        },
    })
}

fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "FAIL"
    }
}

impl Report for VerifySchemeReport {
    fn text(&self) -> String {
        let s = &self.scheme;
        let mut out = format!("graph: n={} m={}\n", self.vertices, self.edges);
        out.push_str(&format!(
            "partition scheme (|R| <= {}): {} ({} subsets, {} connected spanning sets, {} spanning trees)\n",
            s.r_max,
            pass_fail(s.passed),
            s.subsets_checked,
            s.connected_spanning_sets,
            s.spanning_trees
        ));
        if let Some(f) = &s.failure {
            out.push_str(&format!(
                "  counterexample: R={:?} edges=[{}] covered {} times, connected spanning={}\n",
                f.subset,
                f.edge_set.join(" "),
                f.cover_count,
                yes_no(f.connected_spanning)
            ));
        }
        out.push_str(&format!(
            "forest expansion = deletion-contraction: {}\n",
            pass_fail(self.identity.passed)
        ));
        out
    }

    fn exit_code(&self) -> i32 {
        if self.scheme.passed && self.identity.passed {
            EXIT_OK
        } else {
            EXIT_VERIFY
        }
    }
}

// ---------------------------------------------------------------------------
// roots

#[derive(Clone, Debug, Serialize)]
pub struct RootsReport {
    pub coefficients: Vec<BigNum>,
    pub display: String,
    pub degree: usize,
    pub accepted: bool,
    pub roots: RootsBlock,
}

pub fn roots_report(text: &str, cap: usize) -> Result<RootsReport> {
    let g = parse_graph(text)?.graph;
    let p = chromatic_via_penrose_capped(&g, &VertexOrdering::natural(g.vertex_count()), cap)?;
    let rep = find_roots(&p)?;
    Ok(RootsReport {
        coefficients: coefficients(&p),
        display: p.display_in("q"),
        degree: rep.degree,
        accepted: !rep.ill_conditioned,
        roots: RootsBlock::from(&rep),
    })
}

impl Report for RootsReport {
    fn text(&self) -> String {
        let mut out = format!("P(q) = {}\n", self.display);
        render_roots(&mut out, &self.roots);
        out
    }
}
