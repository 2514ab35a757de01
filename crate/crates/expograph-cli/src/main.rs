//! Command-line surface for exponential graphs: generation, analysis,
//! routing, certificate construction/verification and comparison tables.
//!
//! Exit codes: 0 ok, 1 usage, 2 budget exceeded, 3 verification mismatch.

mod expr;
mod report;
mod tables;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use expograph::expo::ExpoSpace;
use expograph::hamiltonicity::{
    self, cist_gkn, cp_ham_cycle, edhc_gkn, ham_cycle_gk2, lift_ham_cycle,
};
use expograph::metrics::{self, RouteMode};
use expograph::{ham_search, Budget, CistPair, Error, Graph, HamCycleCert, Host, Result};

use expr::{eval, eval_concrete, parse, Expr};
use report::{analyze, AnalyzeFlags, DiamChoice, SCHEMA_VERSION};

const EXIT_USAGE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "expograph",
    version,
    about = "Exponential graphs G^H: generation, analysis, routing, Hamiltonian certificates and comparison tables"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiamArg {
    Formula,
    Bfs,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Hamcycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum WhatArg {
    Cycle,
    Edhc,
    Cist,
}

#[derive(Subcommand)]
enum Cmd {
    /// Materialize a graph expression as an edge-list file with a JSON sidecar
    Gen {
        /// graph expression, e.g. EXP(C8,K2), CPOW(K2,3), OMEGA(3), B(2,3)
        expr: String,
        /// output path for the edge list; sidecar written next to it as <out>.json
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 2_000_000)]
        max_vertices: u64,
    },
    /// Report order/size/degrees plus requested diameter and connectivity analyses
    Analyze {
        expr: String,
        #[arg(long)]
        kappa: bool,
        #[arg(long)]
        lambda: bool,
        #[arg(long)]
        superlambda: bool,
        #[arg(long, value_enum)]
        diam: Option<DiamArg>,
        /// strip timing for byte-reproducible output
        #[arg(long)]
        canonical: bool,
        #[arg(long, default_value_t = 2_000_000)]
        max_vertices: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Route between two vertex ids of an exponential graph without materializing it
    Route {
        /// an EXP(...) expression
        expr: String,
        x: usize,
        y: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        #[arg(long)]
        canonical: bool,
        #[arg(long, default_value_t = 2_000_000)]
        max_vertices: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct Hamiltonian-cycle / edge-disjoint-cycle / spanning-tree certificates
    Ham {
        /// an EXP(...) expression
        expr: String,
        #[arg(long, value_enum)]
        what: WhatArg,
        /// re-check the certificate before writing
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 2_000_000)]
        max_vertices: u64,
    },
    /// Render a comparison table with verified / formula-only cell labels
    Tables {
        /// table number, 1..8
        which: usize,
        #[arg(long, default_value_t = 100_000)]
        max_vertices: u64,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a saved certificate file against a regenerated host
    Verify {
        /// host expression the certificate was generated for
        expr: String,
        /// certificate JSON: a cycle, an array of cycles, or a tree pair
        file: PathBuf,
        /// seed for sampled checks on large hosts
        #[arg(long, default_value_t = 0xC157)]
        seed: u64,
        #[arg(long, default_value_t = 2_000_000)]
        max_vertices: u64,
    },
}

fn budget_of(max_vertices: u64) -> Budget {
    Budget {
        max_vertices,
        max_edges: max_vertices.saturating_mul(20),
    }
}

fn error_exit(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } | Error::LimitExceeded { .. } => EXIT_BUDGET,
        Error::MalformedCertificate(_) => EXIT_MISMATCH,
        _ => EXIT_USAGE,
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(Error::from),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization cannot fail");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// gen

fn cmd_gen(expr: &str, out: Option<&Path>, budget: &Budget) -> Result<u8> {
    let e = parse(expr)?;
    let ev = eval(&e, budget)?;
    let g = ev.graph.as_ref().ok_or(Error::BudgetExceeded {
        what: "generation",
        needed: ev.order().display.clone(),
        cap: budget.max_vertices,
    })?;
    let sidecar = json!({
        "schemaVersion": SCHEMA_VERSION,
        "spec": ev.expr,
        "order": g.order().to_string(),
        "size": g.size().to_string(),
        "minDegree": g.min_degree(),
        "maxDegree": g.max_degree(),
    });
    match out {
        Some(path) => {
            let mut buf = Vec::new();
            g.write_edge_list(&mut buf)?;
            fs::write(path, &buf)?;
            let mut sidecar_path = path.as_os_str().to_owned();
            sidecar_path.push(".json");
            fs::write(sidecar_path, to_pretty(&sidecar))?;
        }
        None => emit(&g.to_edge_list_string(), None)?,
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// analyze

fn cmd_analyze(
    expr: &str,
    flags: &AnalyzeFlags,
    budget: &Budget,
    out: Option<&Path>,
) -> Result<u8> {
    let e = parse(expr)?;
    let report = analyze(&e, flags, budget)?;
    emit(&to_pretty(&report), out)?;
    Ok(if report.mismatches.is_empty() {
        0
    } else {
        EXIT_MISMATCH
    })
}

// ---------------------------------------------------------------------------
// route

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RouteReport {
    schema_version: u32,
    spec: String,
    x: usize,
    y: usize,
    mode: String,
    plan: metrics::RoutePlan,
    #[serde(skip_serializing_if = "Option::is_none")]
    bfs_distance: Option<usize>,
    /// plan length over BFS distance, when the host was materializable
    #[serde(skip_serializing_if = "Option::is_none")]
    stretch: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    mismatches: Vec<String>,
}

fn cmd_route(
    expr: &str,
    x: usize,
    y: usize,
    mode: ModeArg,
    budget: &Budget,
    out: Option<&Path>,
) -> Result<u8> {
    let e = parse(expr)?;
    let Expr::Exp(a, b) = &e else {
        return Err(Error::InvalidParameter(format!(
            "route needs an EXP(...) expression, got {e}"
        )));
    };
    let g = eval_concrete(a, budget)?;
    let h = eval_concrete(b, budget)?;
    let space = ExpoSpace::new(g, h)?;
    let (mode_name, route_mode) = match mode {
        ModeArg::Exact => ("exact", RouteMode::Exact),
        ModeArg::Hamcycle => ("hamcycle", RouteMode::HamCycle),
    };
    let plan = metrics::route(&space, x, y, route_mode)?;

    let mut mismatches = Vec::new();
    let (bfs_distance, stretch) = match space.materialize(budget) {
        Ok(gh) => {
            let d = gh
                .distance(x, y)?
                .ok_or(Error::Disconnected)?;
            let stretch = if d == 0 {
                "1.0000".to_string()
            } else {
                format!("{:.4}", plan.length as f64 / d as f64)
            };
            match route_mode {
                RouteMode::Exact if plan.length != d => mismatches.push(format!(
                    "exact route length {} differs from BFS distance {d}",
                    plan.length
                )),
                _ if plan.length < d => mismatches.push(format!(
                    "route length {} below BFS distance {d}",
                    plan.length
                )),
                _ => {}
            }
            (Some(d), Some(stretch))
        }
        Err(Error::BudgetExceeded { .. }) => (None, None),
        Err(e) => return Err(e),
    };

    let report = RouteReport {
        schema_version: SCHEMA_VERSION,
        spec: e.to_string(),
        x,
        y,
        mode: mode_name.into(),
        plan,
        bfs_distance,
        stretch,
        mismatches,
    };
    let code = if report.mismatches.is_empty() {
        0
    } else {
        EXIT_MISMATCH
    };
    emit(&to_pretty(&report), out)?;
    Ok(code)
}

// ---------------------------------------------------------------------------
// ham

/// A Hamiltonian cycle of `g`: the natural vertex order when it happens to be
/// a cycle (complete graphs, cycle graphs), otherwise brute-force search.
fn find_hc(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n >= 3 && (0..n).all(|i| g.has_edge(i, (i + 1) % n)) {
        return Ok((0..n).collect());
    }
    let mut cycle = ham_search::hamiltonian_cycle_limited(g, 64)?.ok_or_else(|| {
        Error::Precondition("base graph has no Hamiltonian cycle".into())
    })?;
    cycle.pop(); // drop the repeated closing vertex
    Ok(cycle)
}

fn is_complete(g: &Graph) -> bool {
    let n = g.order();
    g.size() == n * (n - 1) / 2
}

fn cmd_ham(
    expr: &str,
    what: WhatArg,
    verify: bool,
    budget: &Budget,
    out: Option<&Path>,
) -> Result<u8> {
    let e = parse(expr)?;
    let Expr::Exp(a, b) = &e else {
        return Err(Error::InvalidParameter(format!(
            "ham needs an EXP(...) expression, got {e}"
        )));
    };
    let g = eval_concrete(a, budget)?;
    let h = eval_concrete(b, budget)?;
    let space = ExpoSpace::new(g.clone(), h.clone())?;
    let q = h.order();

    let (payload, ok) = match what {
        WhatArg::Cycle => {
            let hc = find_hc(&g)?;
            let cert = if is_complete(&h) && q == 2 {
                ham_cycle_gk2(&g, &hc)?
            } else {
                let cp = cp_ham_cycle(&g, &hc, q)?;
                lift_ham_cycle(&space, &cp)?
            };
            let ok = !verify || hamiltonicity::verify_ham_cycle(&space, &cert)?;
            (serde_json::to_value(&cert).expect("certificates serialize"), ok)
        }
        WhatArg::Edhc => {
            if !is_complete(&h) {
                return Err(Error::Precondition(
                    "edge-disjoint Hamiltonian cycles require a complete exponent K_n".into(),
                ));
            }
            let hc = find_hc(&g)?;
            let (c1, c2) = edhc_gkn(&g, &hc, q)?;
            let ok = !verify
                || (hamiltonicity::verify_ham_cycle(&space, &c1)?
                    && hamiltonicity::verify_ham_cycle(&space, &c2)?
                    && hamiltonicity::verify_edge_disjoint(&c1, &c2)?);
            (
                serde_json::to_value([&c1, &c2]).expect("certificates serialize"),
                ok,
            )
        }
        WhatArg::Cist => {
            if !is_complete(&h) {
                return Err(Error::Precondition(
                    "completely independent spanning trees require a complete exponent K_n"
                        .into(),
                ));
            }
            let hc = find_hc(&g)?;
            let pair = cist_gkn(&g, &hc, q)?;
            let ok = !verify || hamiltonicity::verify_cist(&space, &pair)?;
            (serde_json::to_value(&pair).expect("certificates serialize"), ok)
        }
    };
    let mut text = serde_json::to_string_pretty(&payload).expect("json serializes");
    text.push('\n');
    if !ok {
        eprintln!("verification failed; certificate not written");
        return Ok(EXIT_MISMATCH);
    }
    emit(&text, out)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify

enum HostView {
    Space(ExpoSpace),
    Graph(Graph),
}

impl Host for HostView {
    fn host_order(&self) -> usize {
        match self {
            HostView::Space(s) => s.host_order(),
            HostView::Graph(g) => g.host_order(),
        }
    }
    fn host_adjacent(&self, u: usize, v: usize) -> bool {
        match self {
            HostView::Space(s) => s.host_adjacent(u, v),
            HostView::Graph(g) => g.host_adjacent(u, v),
        }
    }
}

fn cmd_verify(expr: &str, file: &Path, seed: u64, budget: &Budget) -> Result<u8> {
    let e = parse(expr)?;
    let host = match &e {
        Expr::Exp(a, b) => {
            let g = eval_concrete(a, budget)?;
            let h = eval_concrete(b, budget)?;
            // the codec answers adjacency without materializing the graph
            HostView::Space(ExpoSpace::new(g, h)?)
        }
        _ => {
            let mut ev = eval(&e, budget)?;
            let order = ev.order().display;
            HostView::Graph(ev.graph.take().ok_or(Error::BudgetExceeded {
                what: "verification host",
                needed: order,
                cap: budget.max_vertices,
            })?)
        }
    };
    let raw = fs::read_to_string(file)?;
    let value: serde_json::Value =
        serde_json::from_str(&raw).map_err(|err| Error::Parse(format!("bad JSON: {err}")))?;

    let verified = if value.is_array() {
        let certs: Vec<HamCycleCert> = serde_json::from_value(value)
            .map_err(|err| Error::MalformedCertificate(err.to_string()))?;
        let mut all = true;
        for c in &certs {
            all &= hamiltonicity::verify_ham_cycle(&host, c)?;
        }
        for i in 0..certs.len() {
            for j in i + 1..certs.len() {
                all &= hamiltonicity::verify_edge_disjoint(&certs[i], &certs[j])?;
            }
        }
        all
    } else if value.get("t1").is_some() {
        let pair: CistPair = serde_json::from_value(value)
            .map_err(|err| Error::MalformedCertificate(err.to_string()))?;
        hamiltonicity::verify_cist_seeded(&host, &pair, seed)?
    } else {
        let cert: HamCycleCert = serde_json::from_value(value)
            .map_err(|err| Error::MalformedCertificate(err.to_string()))?;
        hamiltonicity::verify_ham_cycle(&host, &cert)?
    };
    let outcome = json!({
        "schemaVersion": SCHEMA_VERSION,
        "spec": e.to_string(),
        "verified": verified,
    });
    emit(&to_pretty(&outcome), None)?;
    Ok(if verified { 0 } else { EXIT_MISMATCH })
}

// ---------------------------------------------------------------------------
// tables

fn cmd_tables(which: usize, max_vertices: u64, as_json: bool, out: Option<&Path>) -> Result<u8> {
    let table = tables::render(which, max_vertices)?;
    let text = if as_json {
        to_pretty(&table)
    } else {
        table.render_text()
    };
    emit(&text, out)?;
    Ok(if table.has_mismatch() { EXIT_MISMATCH } else { 0 })
}

// ---------------------------------------------------------------------------

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Gen {
            expr,
            out,
            max_vertices,
        } => cmd_gen(&expr, out.as_deref(), &budget_of(max_vertices)),
        Cmd::Analyze {
            expr,
            kappa,
            lambda,
            superlambda,
            diam,
            canonical,
            max_vertices,
            out,
        } => {
            let flags = AnalyzeFlags {
                kappa,
                lambda,
                superlambda,
                diam: diam.map(|d| match d {
                    DiamArg::Formula => DiamChoice::Formula,
                    DiamArg::Bfs => DiamChoice::Bfs,
                    DiamArg::Both => DiamChoice::Both,
                }),
                canonical,
            };
            cmd_analyze(&expr, &flags, &budget_of(max_vertices), out.as_deref())
        }
        Cmd::Route {
            expr,
            x,
            y,
            mode,
            canonical: _,
            max_vertices,
            out,
        } => cmd_route(&expr, x, y, mode, &budget_of(max_vertices), out.as_deref()),
        Cmd::Ham {
            expr,
            what,
            verify,
            out,
            max_vertices,
        } => cmd_ham(&expr, what, verify, &budget_of(max_vertices), out.as_deref()),
        Cmd::Tables {
            which,
            max_vertices,
            json,
            out,
        } => cmd_tables(which, max_vertices, json, out.as_deref()),
        Cmd::Verify {
            expr,
            file,
            seed,
            max_vertices,
        } => cmd_verify(&expr, &file, seed, &budget_of(max_vertices)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            // help/version go to stdout, usage errors to stderr
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit(&e))
        }
    }
}
