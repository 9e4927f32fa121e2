mod exit;
mod input;
mod survey;
mod tables;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use semlab::graph::build_lower_bound_witness;
use semlab::labeling::{check_sem_certificate, verify_sem, SemCertificate, VertexLabeling};
use semlab::search::{
    deficiency, deficiency_upper_via_alpha, find_alpha_valuation, find_graceful, find_harmonious, find_sequential,
    strength_with_numbering, DeficiencyResult, SearchError,
};
use semlab::sidon::{
    certify_infinite_deficiency, check_infinity_certificate, kotzig_lower_bound, rho_star_with_witness,
    InfinityCertificate,
};
use semlab::{emit_graph6, Graph};

use exit::{Failure, Status};
use input::{BudgetArgs, GraphSource, OutputArgs};

#[derive(Debug, Parser)]
#[command(name = "semlab", version, about = "Exact super edge-magic labeling search and certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a vertex labeling or a saved super edge-magic certificate
    Verify {
        #[command(flatten)]
        graph: GraphSource,
        /// Labels as `1,2,3` or a JSON array
        #[arg(long, conflicts_with = "certificate", required_unless_present = "certificate")]
        labels: Option<String>,
        /// Number of isolated vertices (default: inferred from the labels)
        #[arg(long)]
        isolated: Option<usize>,
        /// Saved certificate JSON to re-check
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Super edge-magic deficiency: finite with a witness, infinite with a
    /// clique certificate, or unknown
    Deficiency {
        #[command(flatten)]
        graph: GraphSource,
        /// Largest number of isolated vertices to try
        #[arg(long, default_value_t = 8)]
        cap: u32,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Minimum over numberings of the largest edge sum
    Strength {
        #[command(flatten)]
        graph: GraphSource,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// α-valuation search (or plain graceful with --graceful)
    Alpha {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long)]
        graceful: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Harmonious labeling search
    Harmonious {
        #[command(flatten)]
        graph: GraphSource,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sequential labeling search
    Sequential {
        #[command(flatten)]
        graph: GraphSource,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Smallest pairwise-sum span of a well-spread set of size n
    RhoStar {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Clique certificate for infinite deficiency, or re-check one with --check
    CertifyInfinite {
        #[command(flatten)]
        graph: GraphSource,
        /// Certificate JSON to re-check against the graph
        #[arg(long)]
        check: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Survey of all nontrivial trees up to an order, as CSV
    SurveyTrees {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bound tables as CSV
    Tables {
        #[arg(long, value_enum)]
        what: tables::Table,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
        /// Largest alpha tried for l-bounds
        #[arg(long, default_value_t = 3)]
        max_alpha: usize,
        /// Exact prism deficiency from a separate search, as `n=value`
        #[arg(long, value_parser = parse_injection)]
        exact: Vec<(usize, u64)>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dense graph with consecutive edge sums one edge below the l(n) bound
    WitnessLowerBound {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn parse_injection(s: &str) -> Result<(usize, u64), String> {
    let (n, v) = s.split_once('=').ok_or("expected n=value")?;
    Ok((n.trim().parse().map_err(|e| format!("{e}"))?, v.trim().parse().map_err(|e| format!("{e}"))?))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn name(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.order()))
}

/// Maps an engine error to a status: budget exhaustion is unknown, bad
/// input is a usage error.
fn engine_failure(g: &Graph, e: SearchError) -> Failure {
    let status = match e {
        SearchError::BudgetExhausted { .. } => Status::Unknown,
        SearchError::InvalidInput(_) => Status::Usage,
    };
    Failure { status, message: format!("{}: {e}", name(g)) }
}

fn parse_labels(text: &str) -> Result<Vec<u32>, Failure> {
    let text = text.trim();
    if text.starts_with('[') {
        return serde_json::from_str(text).map_err(|e| Failure::usage(format!("bad labels: {e}")));
    }
    text.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| Failure::usage(format!("bad label {t:?}: {e}"))))
        .collect()
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::usage(format!("bad certificate {}: {e}", path.display())))
}

fn cmd_verify(
    graph: &GraphSource,
    labels: Option<&str>,
    isolated: Option<usize>,
    certificate: Option<&PathBuf>,
    output: &OutputArgs,
) -> Result<Status, Failure> {
    let g = graph.load_one()?;
    if let Some(path) = certificate {
        let cert: SemCertificate = read_json(path)?;
        check_sem_certificate(&g, &cert).map_err(|e| Failure::verification(format!("invalid certificate: {e}")))?;
        println!("valid certificate: k = {}", cert.k);
        return Ok(Status::Success);
    }
    let values = parse_labels(labels.expect("clap requires labels or a certificate"))?;
    let p = g.order();
    let isolated = isolated.unwrap_or_else(|| {
        let max = values.iter().copied().max().unwrap_or(0) as usize;
        values.len().max(max).saturating_sub(p)
    });
    let f = VertexLabeling::new(values).map_err(|e| Failure::verification(format!("verification failed: {e}")))?;
    let cert = verify_sem(&g, &f, isolated).map_err(|e| Failure::verification(format!("verification failed: {e}")))?;
    let json = to_json(&cert);
    println!("{json}");
    output.write(&json)?;
    Ok(Status::Success)
}

fn describe(result: &DeficiencyResult) -> String {
    match result {
        DeficiencyResult::Finite { value, witness } => format!("finite {value} (k = {})", witness.k),
        DeficiencyResult::Infinite { certificate: c } => {
            format!("infinite (clique of size {}, rho* >= {} > q = {})", c.m, c.rho_lower, c.q)
        }
        DeficiencyResult::Unknown { searched_cap, lower_bound, budget_exhausted: false } => {
            format!("unknown (cap {searched_cap}; deficiency >= {lower_bound})")
        }
        DeficiencyResult::Unknown { searched_cap, lower_bound, budget_exhausted: true } => {
            format!("unknown (budget exhausted at {lower_bound} isolated vertices, cap {searched_cap})")
        }
    }
}

fn cmd_deficiency(graph: &GraphSource, cap: u32, budget: &BudgetArgs, output: &OutputArgs) -> Result<Status, Failure> {
    let graphs = graph.load()?;
    let mut status = Status::Success;
    let mut artifacts = Vec::new();
    for g in &graphs {
        let result = deficiency(g, cap, budget.budget()).map_err(|e| engine_failure(g, e))?;
        status = status.max(match result {
            DeficiencyResult::Finite { .. } => Status::Success,
            DeficiencyResult::Infinite { .. } => Status::Negative,
            DeficiencyResult::Unknown { .. } => Status::Unknown,
        });
        if output.json {
            println!("{}", serde_json::json!({ "graph6": name(g), "result": result }));
        } else {
            println!("{}: {}", name(g), describe(&result));
        }
        artifacts.push(match &result {
            DeficiencyResult::Finite { witness, .. } => serde_json::to_value(witness),
            DeficiencyResult::Infinite { certificate } => serde_json::to_value(certificate),
            unknown => serde_json::to_value(unknown),
        });
    }
    let artifacts: Vec<serde_json::Value> = artifacts.into_iter().map(|a| a.expect("serializable")).collect();
    if artifacts.len() == 1 {
        output.write(&to_json(&artifacts[0]))?;
    } else {
        output.write(&to_json(&artifacts))?;
    }
    Ok(status)
}

/// Runs `find` on every graph; a witness is success, `None` is a proven
/// negative.
fn cmd_find<T: Serialize>(
    graph: &GraphSource,
    output: &OutputArgs,
    what: &str,
    find: impl Fn(&Graph) -> Result<Option<T>, SearchError>,
    extra: impl Fn(&Graph, &T) -> Option<String>,
) -> Result<Status, Failure> {
    let graphs = graph.load()?;
    let mut status = Status::Success;
    let mut found = Vec::new();
    for g in &graphs {
        let result = match find(g) {
            Ok(r) => r,
            Err(e @ SearchError::BudgetExhausted { .. }) => {
                println!("{}: unknown ({e})", name(g));
                status = status.max(Status::Unknown);
                continue;
            }
            Err(e) => return Err(engine_failure(g, e)),
        };
        match &result {
            Some(w) if output.json => println!("{}", serde_json::json!({ "graph6": name(g), what: w })),
            Some(w) => {
                let json = serde_json::to_string(w).expect("serializable");
                let note = extra(g, w).map(|s| format!("; {s}")).unwrap_or_default();
                println!("{}: {what} {json}{note}", name(g));
            }
            None => {
                status = status.max(Status::Negative);
                if output.json {
                    println!("{}", serde_json::json!({ "graph6": name(g), what: null }));
                } else {
                    println!("{}: no {what} labeling exists", name(g));
                }
            }
        }
        found.push(result);
    }
    if found.len() == 1 {
        output.write(&to_json(&found[0]))?;
    } else {
        output.write(&to_json(&found))?;
    }
    Ok(status)
}

fn cmd_certify(graph: &GraphSource, check: Option<&PathBuf>, output: &OutputArgs) -> Result<Status, Failure> {
    if let Some(path) = check {
        let g = graph.load_one()?;
        let cert: InfinityCertificate = read_json(path)?;
        check_infinity_certificate(&g, &cert).map_err(|e| Failure::verification(format!("invalid certificate: {e}")))?;
        println!("valid certificate: rho* >= {} > q = {}", cert.rho_lower, cert.q);
        return Ok(Status::Success);
    }
    let graphs = graph.load()?;
    let mut status = Status::Success;
    let mut certs = Vec::new();
    for g in &graphs {
        let cert = certify_infinite_deficiency(g);
        match &cert {
            Some(c) if output.json => println!("{}", serde_json::json!({ "graph6": name(g), "certificate": c })),
            Some(c) => println!("{}: infinite deficiency\n{}", name(g), c.inequality_ledger()),
            None => {
                status = status.max(Status::Unknown);
                println!("{}: no clique certificate (finiteness is not implied)", name(g));
            }
        }
        certs.push(cert);
    }
    if certs.len() == 1 {
        output.write(&to_json(&certs[0]))?;
    } else {
        output.write(&to_json(&certs))?;
    }
    Ok(status)
}

fn cmd_survey(max_n: usize, budget: &BudgetArgs, output: &OutputArgs) -> Result<Status, Failure> {
    if max_n > survey::MAX_SURVEY_ORDER {
        return Err(Failure::usage(format!("--max-n is limited to {}", survey::MAX_SURVEY_ORDER)));
    }
    let rows = survey::survey(max_n, budget.budget());
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        w.serialize(row).map_err(|e| Failure::usage(e.to_string()))?;
    }
    if rows.is_empty() {
        w.write_record([
            "tree_id",
            "order",
            "graph6",
            "is_caterpillar",
            "sem",
            "strength",
            "strength_matches",
            "harmonious",
            "sequential",
            "conjecture3_slack",
        ])
        .map_err(|e| Failure::usage(e.to_string()))?;
    }
    let csv = String::from_utf8(w.into_inner().map_err(|e| Failure::usage(e.to_string()))?).expect("utf-8");
    let (summary, status) = survey::summarize(&rows, max_n);
    if output.out.is_some() {
        output.write(&csv)?;
        println!("{summary}");
    } else {
        print!("{csv}");
        eprintln!("{summary}");
    }
    Ok(status)
}

fn run(cli: Cli) -> Result<Status, Failure> {
    match cli.command {
        Command::Verify { graph, labels, isolated, certificate, output } => {
            cmd_verify(&graph, labels.as_deref(), isolated, certificate.as_ref(), &output)
        }
        Command::Deficiency { graph, cap, budget, output } => cmd_deficiency(&graph, cap, &budget, &output),
        Command::Strength { graph, budget, output } => cmd_find(
            &graph,
            &output,
            "strength",
            |g| {
                strength_with_numbering(g, budget.budget())
                    .map(|(strength, numbering)| Some(serde_json::json!({ "value": strength, "numbering": numbering })))
            },
            |_, _| None,
        ),
        Command::Alpha { graph, graceful: true, budget, output } => {
            cmd_find(&graph, &output, "graceful", |g| find_graceful(g, budget.budget()), |_, _| None)
        }
        Command::Alpha { graph, graceful: false, budget, output } => cmd_find(
            &graph,
            &output,
            "alpha",
            |g| find_alpha_valuation(g, budget.budget()),
            |g, _| {
                let bound = deficiency_upper_via_alpha(g, budget.budget()).ok().flatten()?;
                Some(format!("deficiency <= {bound}"))
            },
        ),
        Command::Harmonious { graph, budget, output } => {
            cmd_find(&graph, &output, "harmonious", |g| find_harmonious(g, budget.budget()), |_, _| None)
        }
        Command::Sequential { graph, budget, output } => {
            cmd_find(&graph, &output, "sequential", |g| find_sequential(g, budget.budget()), |_, _| None)
        }
        Command::RhoStar { n, budget, output } => {
            let (r, set) = rho_star_with_witness(n, budget.budget()).map_err(|e| match e {
                SearchError::BudgetExhausted { .. } => Failure { status: Status::Unknown, message: e.to_string() },
                SearchError::InvalidInput(m) => Failure::usage(m),
            })?;
            let report = serde_json::json!({
                "n": n,
                "rho_star": r,
                "witness": set.elements(),
                "kotzig": kotzig_lower_bound(n).ok(),
            });
            if output.json {
                println!("{report}");
            } else {
                println!("rho*({n}) = {r}, witness {:?}", set.elements());
            }
            output.write(&to_json(&report))?;
            Ok(Status::Success)
        }
        Command::CertifyInfinite { graph, check, output } => cmd_certify(&graph, check.as_ref(), &output),
        Command::SurveyTrees { max_n, budget, output } => cmd_survey(max_n, &budget, &output),
        Command::Tables { what, from, to, max_alpha, exact, budget, output } => {
            let (lo, hi) = what.default_range();
            let req = tables::TableRequest {
                what,
                from: from.unwrap_or(lo),
                to: to.unwrap_or(hi),
                max_alpha,
                exact: exact.into_iter().collect::<BTreeMap<_, _>>(),
                budget: budget.budget(),
            };
            let csv = tables::render(&req)?;
            if output.out.is_some() {
                output.write(&csv)?;
            } else {
                print!("{csv}");
            }
            Ok(Status::Success)
        }
        Command::WitnessLowerBound { n, output } => {
            let (g, f) = build_lower_bound_witness(n).map_err(|e| Failure::usage(e.to_string()))?;
            let isolated = (f.max_label() as usize).saturating_sub(n);
            let cert = verify_sem(&g, &f, isolated)
                .map_err(|e| Failure::verification(format!("witness does not verify: {e}")))?;
            if output.json {
                println!("{}", serde_json::json!({ "graph6": name(&g), "size": g.size(), "certificate": cert }));
            } else {
                println!("{}: order {n}, size {}, labels {:?}, edge sums {}..={}", name(&g), g.size(), f.values(), cert.s, cert.s + g.size() as u32 - 1);
            }
            output.write(&to_json(&cert))?;
            Ok(Status::Success)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Status::Usage.into() } else { Status::Success.into() };
        }
    };
    match run(cli) {
        Ok(status) => status.into(),
        Err(failure) => {
            eprintln!("{failure}");
            failure.status.into()
        }
    }
}
