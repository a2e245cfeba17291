//! The `raag` command line: parse a graph, run one analysis, print a report.
//!
//! Reports are JSON by default, wrapped in an envelope
//! `{"schema": "raag-report/1", "version", "command", "graph", "result"}`;
//! `--pretty` prints a human-readable table instead. Identical input and
//! flags always give byte-identical output.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cohomology::{filtration, graded_group_cohomology, CohomologyError, GradedCohomologyReport};
use crate::flag::{clique_counts, cohomological_dimension, flag_complex, Simplex};
use crate::forms::{form_report, hyperbolic, isometry_check, stabilization_isometry, FormsError, HermitianForm};
use crate::graph::{
    ends, free_product_skeleton, is_connected, parse_graph, parse_spec, GraphEcho, GraphError, SimplicialGraph,
};
use crate::group_ring::GroupRing;
use crate::homology::{euler_characteristic, reduced_homology};
use crate::lambda_matrix::{LambdaMatrix, MatrixError};
use crate::model::{minimal_model_invariants, salvetti_resolution, tensor_down, verify_resolution, ModelError};
use crate::tame::{
    cd3_automatic, generate_tame, h1_dual_nonzero, random_build_script, separator_criterion, tame_sufficient,
    torsion_criterion, BuildScript, TameError,
};

pub const SCHEMA: &str = "raag-report/1";

#[derive(Debug, Parser)]
#[command(name = "raag", version, about = "Invariants of right-angled Artin groups from their defining graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file, or a builtin spec: complete:N, path:N, cycle:N, disjoint-edges:N,
    /// disjoint:A+B, join:A,B
    #[arg(long, value_name = "FILE|SPEC")]
    pub graph: String,
    /// Human-readable tables instead of JSON
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Clique counts, cohomological dimension, ends, flag complex homology
    Invariants(GraphInput),
    /// Graded pieces of H^k(π;Λ), one summand per simplex
    Cohomology {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        degree: usize,
    },
    /// Filtration quotients F_j/F_{j−1} of H^k(π;Λ)
    Filtration {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        degree: usize,
    },
    /// Sufficient checks for tame cohomology
    Tame {
        #[command(flatten)]
        input: GraphInput,
        /// Largest independent separator tried
        #[arg(long, default_value_t = 3)]
        max_separator: usize,
    },
    /// Build a graph with tame cohomology from a random or given script
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        steps: usize,
        /// Run this build script instead of a random one
        #[arg(long, value_name = "FILE")]
        script: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// The Salvetti resolution over Λ, checked and tensored down to Z
    Resolution(GraphInput),
    /// Rank data of the minimal 4-manifold model
    Model(GraphInput),
    /// Analyse a hermitian form over Λ
    #[command(group(ArgGroup::new("form").required(true).args(["matrix", "hyperbolic"])))]
    Forms {
        #[command(flatten)]
        input: GraphInput,
        /// Matrix file: one row per line, entries separated by `;`
        #[arg(long, value_name = "FILE")]
        matrix: Option<PathBuf>,
        /// Use the hyperbolic form of this rank
        #[arg(long, value_name = "R")]
        hyperbolic: Option<usize>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {reason}")]
    Io { path: String, reason: String },
    #[error("`{0}` is neither a readable file nor a builtin spec")]
    GraphSource(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Tame(#[from] TameError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Forms(#[from] FormsError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Exit code with the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), reason: e.to_string() })
}

/// An existing path is read as a graph file; anything else must be a spec.
pub fn load_graph(source: &str) -> Result<SimplicialGraph, CliError> {
    let path = Path::new(source);
    if path.is_file() {
        return Ok(parse_graph(&read(path)?)?);
    }
    if source.contains(':') {
        return Ok(parse_spec(source)?);
    }
    Err(CliError::GraphSource(source.to_string()))
}

struct Report {
    command: &'static str,
    graph: SimplicialGraph,
    result: Value,
    pretty: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: &'static str,
    version: &'static str,
    command: &'static str,
    graph: GraphEcho,
    result: &'a Value,
}

fn envelope(r: &Report) -> String {
    let e = Envelope {
        schema: SCHEMA,
        version: env!("CARGO_PKG_VERSION"),
        command: r.command,
        graph: GraphEcho::from(&r.graph),
        result: &r.result,
    };
    let mut s = serde_json::to_string(&e).expect("reports serialize");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn simplex_label(g: &SimplicialGraph, s: &Simplex) -> String {
    if s.is_empty() {
        "∅".to_string()
    } else {
        format!("{{{}}}", s.names(g).join(","))
    }
}

fn invariants(g: SimplicialGraph) -> Report {
    let counts = clique_counts(&g);
    let cd = cohomological_dimension(&g);
    let fc = flag_complex(&g);
    let homology: Vec<Value> =
        (-1..=fc.dim().max(0)).map(|d| json!({"degree": d, "group": reduced_homology(&fc, d)})).collect();
    let euler = euler_characteristic(&fc).ok();
    let skeleton = free_product_skeleton(&g);
    let chi_m0 = minimal_model_invariants(&g).ok().map(|m| m.chi_m0);
    let result = json!({
        "clique_counts": {"b0": counts.b0(), "b": counts.as_slice()},
        "cohomological_dimension": cd,
        "ends": ends(&g),
        "free_product_skeleton": {
            "connected": skeleton.connected,
            "n": skeleton.n,
            "m": skeleton.m,
            "witness": GraphEcho::from(&skeleton.witness),
        },
        "flag_complex": {
            "dim": fc.dim(),
            "euler_characteristic": euler,
            "reduced_homology": homology,
        },
        "h1_dual_nonzero": h1_dual_nonzero(&g),
        "chi_m0": chi_m0,
    });
    let mut p = String::new();
    let _ = writeln!(p, "vertices            {}", g.vertex_count());
    let _ = writeln!(
        p,
        "clique counts b0..  1 {}",
        counts.as_slice().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    );
    let _ = writeln!(p, "cd                  {}", cd.cd);
    let _ = writeln!(p, "ends                {}", to_value(&ends(&g)).as_str().unwrap_or_default());
    let _ = writeln!(
        p,
        "free product        n={} m={}{}",
        skeleton.n,
        skeleton.m,
        if skeleton.connected { " (connected)" } else { "" }
    );
    let _ = writeln!(p, "flag complex dim    {}", fc.dim());
    if let Some(e) = euler {
        let _ = writeln!(p, "euler char          {e}");
    }
    for d in -1..=fc.dim().max(0) {
        let _ = writeln!(p, "H̃_{d:<3}              {}", reduced_homology(&fc, d));
    }
    let _ = writeln!(p, "H¹(π;Λ)* ≠ 0        {}", h1_dual_nonzero(&g));
    match chi_m0 {
        Some(c) => {
            let _ = writeln!(p, "χ(M₀)               {c}");
        }
        None => {
            let _ = writeln!(p, "χ(M₀)               n/a (4-clique)");
        }
    }
    Report { command: "invariants", graph: g, result, pretty: p }
}

#[derive(Serialize)]
struct CohomologyPayload<'a> {
    #[serde(flatten)]
    report: &'a GradedCohomologyReport,
    free_lambda_rank: usize,
    summary: String,
}

fn cohomology(g: SimplicialGraph, degree: usize) -> Report {
    let r = graded_group_cohomology(&g, degree);
    let payload = CohomologyPayload { report: &r, free_lambda_rank: r.free_lambda_rank(), summary: r.describe() };
    let mut p = format!("Gr H^{degree}(π;Λ) = {}\n", r.describe());
    for s in &r.summands {
        let _ = writeln!(p, "  dim σ = {:>2}  {}", s.simplex_dim(), s.describe());
    }
    Report { command: "cohomology", result: to_value(&payload), graph: g, pretty: p }
}

fn filtration_report(g: SimplicialGraph, degree: usize) -> Result<Report, CliError> {
    let f = filtration(&g, degree)?;
    let mut p = format!("filtration of H^{degree}(π;Λ)\n");
    for q in &f.quotients {
        let body = if q.summands.is_empty() {
            "0".to_string()
        } else {
            q.summands.iter().map(|s| s.describe()).collect::<Vec<_>>().join(" ⊕ ")
        };
        let name = if q.index == 0 { "F_0".to_string() } else { format!("F_{}/F_{}", q.index, q.index - 1) };
        let _ = writeln!(p, "  {name:<10} {body}");
    }
    Ok(Report { command: "filtration", result: to_value(&f), graph: g, pretty: p })
}

fn status_line(v: &Value) -> String {
    match (v["status"].as_str(), v["reason"].as_str()) {
        (Some(s), Some(r)) => format!("{s}: {r}"),
        (Some(s), None) => s.to_string(),
        _ => v.to_string(),
    }
}

fn tame(g: SimplicialGraph, max_separator: usize) -> Report {
    let verdict = tame_sufficient(&g);
    let criteria: Vec<Value> = [1usize, 2]
        .iter()
        .map(|&i| json!({"degree": i, "status": torsion_criterion(&g, i).expect("degree ≥ 1")}))
        .collect();
    let separator = if is_connected(&g) {
        to_value(&separator_criterion(&g, max_separator).expect("connected"))
    } else {
        json!({"status": "skipped", "reason": "graph is disconnected"})
    };
    let cd3 = cd3_automatic(&g);
    let result = json!({
        "verdict": verdict,
        "torsion_criterion": criteria,
        "separator": separator,
        "max_separator": max_separator,
        "cd3": cd3,
        "h1_dual_nonzero": h1_dual_nonzero(&g),
    });
    let mut p = String::new();
    let _ = writeln!(p, "overall        {}", result["verdict"]["overall"].as_str().unwrap_or_default());
    for (k, label) in [("condition_i", "(i)   H²*"), ("condition_ii", "(ii)  H³*"), ("condition_iii", "(iii) Ext¹")]
    {
        let _ = writeln!(p, "{label:<14} {}", status_line(&result["verdict"][k]));
    }
    for note in &verdict.notes {
        let _ = writeln!(p, "note           {note}");
    }
    let _ = writeln!(
        p,
        "separator      {}",
        match separator["status"].as_str() {
            Some("holds") => format!(
                "S = {}  Γ₁ = {}  Γ₂ = {}",
                separator["witness"]["separator"], separator["witness"]["gamma1"], separator["witness"]["gamma2"]
            ),
            Some(other) => other.to_string(),
            None => String::new(),
        }
    );
    let _ = writeln!(p, "cd             {}", cd3.summary);
    let _ = writeln!(p, "H¹(π;Λ)* ≠ 0   {}", h1_dual_nonzero(&g));
    Report { command: "tame", graph: g, result, pretty: p }
}

fn generate(seed: u64, steps: usize, script: Option<&Path>) -> Result<Report, CliError> {
    let (script, source) = match script {
        Some(path) => (read(path)?.parse::<BuildScript>()?, "file"),
        None => (random_build_script(steps, seed), "random"),
    };
    let g = generate_tame(&script)?;
    let verdict = tame_sufficient(&g);
    let lines: Vec<String> = script.moves.iter().map(ToString::to_string).collect();
    let mut result = json!({"source": source, "script": lines, "verdict": verdict});
    if source == "random" {
        result["seed"] = json!(seed);
        result["steps"] = json!(steps);
    }
    let mut p = script.to_string();
    let _ = writeln!(
        p,
        "# {} vertices, {} edges, overall {}",
        g.vertex_count(),
        g.edge_count(),
        result["verdict"]["overall"].as_str().unwrap_or_default()
    );
    p.push_str(&g.to_text());
    Ok(Report { command: "generate", graph: g, result, pretty: p })
}

fn resolution(g: SimplicialGraph) -> Result<Report, CliError> {
    let c = salvetti_resolution(&g)?;
    let verified = verify_resolution(&c);
    let z = tensor_down(&c);
    let betti: Vec<Value> = (0..=c.top_degree() as isize).map(|i| to_value(&z.homology(i))).collect();
    let differentials: Vec<Value> = (1..=c.top_degree())
        .map(|i| {
            let d = c.differential(i).expect("in range");
            let entries: Vec<Vec<String>> =
                (0..d.rows()).map(|r| (0..d.cols()).map(|k| d.get(r, k).to_string()).collect()).collect();
            json!({
                "degree": i,
                "rows": c.basis(i - 1).iter().map(|s| simplex_label(&g, s)).collect::<Vec<_>>(),
                "cols": c.basis(i).iter().map(|s| simplex_label(&g, s)).collect::<Vec<_>>(),
                "entries": entries,
            })
        })
        .collect();
    let result =
        json!({"ranks": c.ranks(), "verified": verified, "tensored_homology": betti, "differentials": differentials});
    let mut p = format!("ranks {:?}, d² = 0 and ε∘d₁ = 0: {verified}\n", c.ranks());
    p.push_str(&c.dump());
    Ok(Report { command: "resolution", graph: g, result, pretty: p })
}

fn model(g: SimplicialGraph) -> Result<Report, CliError> {
    let m = minimal_model_invariants(&g)?;
    let mut p = String::new();
    let [b1, b2, b3] = m.clique_counts;
    let _ = writeln!(p, "b1 b2 b3               {b1} {b2} {b3}");
    let _ = writeln!(p, "χ(M₀)                  {}", m.chi_m0);
    let _ = writeln!(p, "rk π₂(M₀) ⊗ Z          {}", m.pi2_tensor_rank);
    let _ = writeln!(p, "π₂(M)* rank            {}", m.pi2_dual_rank);
    let _ = writeln!(p, "stabilization bound    {} ({})", m.stabilization_bound, m.stabilization_bound_label);
    let _ = writeln!(p, "π₂(M₀)                 {}", m.pi2_structure);
    let _ = writeln!(p, "four-term sequence     {}", m.four_term.sequence);
    Ok(Report { command: "model", result: to_value(&m), graph: g, pretty: p })
}

fn rows_text(m: &LambdaMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

fn forms(g: SimplicialGraph, matrix: Option<&Path>, hyper: Option<usize>) -> Result<Report, CliError> {
    let ring = GroupRing::new(g.clone());
    let m = match (matrix, hyper) {
        (Some(path), _) => LambdaMatrix::parse(&ring, &read(path)?)?,
        (None, Some(r)) => hyperbolic(&ring, r).matrix().clone(),
        (None, None) => unreachable!("clap requires one of --matrix, --hyperbolic"),
    };
    let report = form_report(&m)?;
    let mut result = to_value(&report);
    let mut p =
        format!("rank {}  hermitian {}  strongly even {}\n", report.rank, report.hermitian, report.strongly_even);
    if report.hermitian {
        let _ = writeln!(p, "w = {:?}", report.w);
    }
    if report.strongly_even {
        let theta = HermitianForm::new(m)?;
        let bundle = stabilization_isometry(&theta)?;
        let ok = isometry_check(&bundle.psi, &hyperbolic(&ring, theta.rank()), &bundle.k);
        result["stabilization"] =
            json!({"psi": rows_text(bundle.psi.matrix()), "k": rows_text(&bundle.k), "isometry": ok});
        let _ = writeln!(p, "witness λ:\n{}", bundle.lambda.matrix());
        let _ = writeln!(p, "k: (F ⊕ F*, ψ) → H(Λ^{}), isometry {ok}\n{}", theta.rank(), bundle.k);
    }
    Ok(Report { command: "forms", graph: g, result, pretty: p })
}

fn dispatch(cli: Cli) -> Result<(Report, bool), CliError> {
    Ok(match cli.command {
        Command::Invariants(i) => (invariants(load_graph(&i.graph)?), i.pretty),
        Command::Cohomology { input, degree } => (cohomology(load_graph(&input.graph)?, degree), input.pretty),
        Command::Filtration { input, degree } => (filtration_report(load_graph(&input.graph)?, degree)?, input.pretty),
        Command::Tame { input, max_separator } => (tame(load_graph(&input.graph)?, max_separator), input.pretty),
        Command::Generate { seed, steps, script, pretty } => (generate(seed, steps, script.as_deref())?, pretty),
        Command::Resolution(i) => (resolution(load_graph(&i.graph)?)?, i.pretty),
        Command::Model(i) => (model(load_graph(&i.graph)?)?, i.pretty),
        Command::Forms { input, matrix, hyperbolic } => {
            (forms(load_graph(&input.graph)?, matrix.as_deref(), hyperbolic)?, input.pretty)
        }
    })
}

/// Run the CLI on `args` (including the program name). Exit code 2 means a
/// usage error, 1 an input or validation failure.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli) {
        Ok((report, pretty)) => {
            let stdout = if pretty { report.pretty.clone() } else { envelope(&report) };
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
