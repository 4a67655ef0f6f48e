//! Command-line front end: single-graph checks, corpus scans, the
//! structural check suite, and power-of-two cycle hunts.
//!
//! Exit codes: 0 all pass, 1 violation found (counterexample bundle
//! written), 2 input error, 3 budget exhausted with incomplete coverage.

use std::fs;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use evencycle::classify::{ClassFilter, HuntConfig};
use evencycle::corpus::read_graph6_lines;
use evencycle::graph::Graph;
use evencycle::harness::{append_bundles, run_scan, write_jsonl, ScanOptions, ScanReport};
use evencycle::{classify, from_graph6, from_graph6_any, graph, to_graph6, verify_certificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Classify one graph and print its certificate.
    Check,
    /// Classify every record of a graph6 corpus, one JSON line each.
    Scan,
    /// Scan plus the per-graph structural check suite.
    Lemmas,
    /// Sweep a corpus for graphs with no power-of-two cycle length.
    Hunt,
    /// Print only the witness vertex sequence for one graph.
    Witness,
}

#[derive(Debug, Parser)]
#[command(name = "evencycle", version, about = "Short even-cycle certificates over graph corpora")]
struct Cli {
    /// What to run.
    #[arg(long, value_enum)]
    mode: Mode,

    /// Input file: graph6 records one per line (scan/lemmas/hunt), or a
    /// single graph as graph6 or edge-list text (check/witness).
    #[arg(long)]
    input: Option<PathBuf>,

    /// Inline graph6 record instead of a file.
    #[arg(long)]
    inline: Option<String>,

    /// Record filter: comma-separated `min-degree=K,connected,cubic,p10-free`.
    #[arg(long, default_value = "")]
    filter: String,

    /// Largest power-of-two cycle length hunted for.
    #[arg(long, default_value_t = 16)]
    kmax: usize,

    /// Worker threads; output is identical for any value.
    #[arg(long, default_value_t = 1)]
    workers: usize,

    /// Operation budget for the exponential enumerations. The
    /// EVENCYCLE_BUDGET environment variable overrides this flag.
    #[arg(long, default_value_t = evencycle::DEFAULT_OP_BUDGET)]
    budget: u64,

    /// Report path (JSON Lines); stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Where counterexample bundles are appended on violations.
    #[arg(long, default_value = "evencycle-counterexample.jsonl")]
    bundle: PathBuf,

    /// Capture per-stage timings (makes output nondeterministic).
    #[arg(long)]
    timings: bool,

    /// Accept long-form graph6 records (n > 62).
    #[arg(long)]
    long_form: bool,
}

fn main() -> ExitCode {
    let mut cli = Cli::parse();
    if let Ok(v) = std::env::var("EVENCYCLE_BUDGET") {
        match v.parse::<u64>() {
            Ok(b) => cli.budget = b,
            Err(_) => {
                eprintln!("error: EVENCYCLE_BUDGET={v:?} is not a number");
                return ExitCode::from(2);
            }
        }
    }
    if cli.budget == 0 {
        eprintln!("error: --budget must be positive");
        return ExitCode::from(2);
    }
    if cli.workers == 0 {
        eprintln!("error: --workers must be positive");
        return ExitCode::from(2);
    }
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    ExitCode::from(code as u8)
}

fn run(cli: &Cli) -> io::Result<i32> {
    match cli.mode {
        Mode::Check | Mode::Witness => run_single(cli),
        Mode::Scan | Mode::Lemmas => run_corpus(cli),
        Mode::Hunt => run_hunt(cli),
    }
}

/// Loads the single-graph input for check/witness: an inline graph6
/// record, or a file holding either one graph6 record or edge-list text.
fn load_single(cli: &Cli) -> io::Result<Result<Graph, String>> {
    let parse_g6 = |rec: &str| {
        if cli.long_form {
            from_graph6_any(rec)
        } else {
            from_graph6(rec)
        }
    };
    if let Some(rec) = &cli.inline {
        return Ok(parse_g6(rec).map_err(|e| e.to_string()));
    }
    let Some(path) = &cli.input else {
        return Ok(Err("check/witness needs --inline or --input".to_string()));
    };
    let text = fs::read_to_string(path)?;
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.len() == 1 {
        if let Ok(g) = parse_g6(lines[0].trim()) {
            return Ok(Ok(g));
        }
    }
    Ok(graph::from_edge_list_text(&text).map_err(|e| e.to_string()))
}

fn run_single(cli: &Cli) -> io::Result<i32> {
    let g = match load_single(cli)? {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
    };
    if g.n() == 0 {
        eprintln!("error: the vertexless graph has no certificate");
        return Ok(2);
    }
    let record = to_graph6(&g).unwrap_or_else(|_| evencycle::to_graph6_any(&g));
    let report = run_scan(&[record], &scan_options(cli, false));
    let rec = &report.records[0];
    match cli.mode {
        Mode::Witness => {
            if let Some(cert) = &rec.certificate {
                let verts = match cert {
                    evencycle::harness::CertificateSummary::Cycle4 { vertices }
                    | evencycle::harness::CertificateSummary::Cycle8 { vertices }
                    | evencycle::harness::CertificateSummary::InducedP10 { vertices } => {
                        vertices.clone()
                    }
                    evencycle::harness::CertificateSummary::LowDegreeVertex { vertex, .. } => {
                        vec![*vertex]
                    }
                };
                let words: Vec<String> = verts.iter().map(|v| v.to_string()).collect();
                println!("{}", words.join(" "));
            }
        }
        _ => {
            println!("graph: {} vertices, {} edges", g.n(), g.edge_count());
            match classify(&g) {
                Ok(cert) => {
                    let verts: Vec<String> =
                        cert.witness_vertices().iter().map(|v| v.to_string()).collect();
                    println!("certificate: {:?} [{}]", cert.kind(), verts.join(" "));
                    println!("verified: {}", verify_certificate(&g, &cert));
                }
                Err(_) => println!("certificate: NONE (violation)"),
            }
            println!("{}", serde_json::to_string(rec)?);
        }
    }
    append_bundles(&cli.bundle, &report.bundles)?;
    Ok(report.status.exit_code())
}

fn scan_options(cli: &Cli, lemmas: bool) -> ScanOptions {
    ScanOptions {
        workers: cli.workers,
        capture_timings: cli.timings,
        run_lemmas: lemmas,
        op_budget: cli.budget,
        allow_long_form: cli.long_form,
    }
}

fn load_corpus(cli: &Cli) -> io::Result<Result<Vec<String>, String>> {
    if let Some(rec) = &cli.inline {
        return Ok(Ok(vec![rec.clone()]));
    }
    let Some(path) = &cli.input else {
        return Ok(Err("this mode needs --input (or --inline)".to_string()));
    };
    Ok(Ok(read_graph6_lines(path)?))
}

fn emit_report(cli: &Cli, report: &ScanReport) -> io::Result<()> {
    match &cli.out {
        Some(path) => {
            let f = fs::File::create(path)?;
            write_jsonl(report, BufWriter::new(f))?;
        }
        None => {
            let stdout = io::stdout();
            write_jsonl(report, BufWriter::new(stdout.lock()))?;
        }
    }
    append_bundles(&cli.bundle, &report.bundles)
}

fn run_corpus(cli: &Cli) -> io::Result<i32> {
    let records = match load_corpus(cli)? {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
    };
    let filter = match ClassFilter::parse(&cli.filter) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
    };
    // Filters drop records before scanning; the report indexes the kept ones.
    let records = apply_filter(records, &filter, cli);
    let report = run_scan(&records, &scan_options(cli, cli.mode == Mode::Lemmas));
    emit_report(cli, &report)?;
    Ok(report.status.exit_code())
}

fn apply_filter(records: Vec<String>, filter: &ClassFilter, cli: &Cli) -> Vec<String> {
    if filter == &ClassFilter::default() {
        return records;
    }
    records
        .into_iter()
        .filter(|rec| {
            let parsed =
                if cli.long_form { from_graph6_any(rec) } else { from_graph6(rec) };
            match parsed {
                Ok(g) => filter.accepts(&g),
                Err(_) => true, // keep malformed records so they are reported
            }
        })
        .collect()
}

fn run_hunt(cli: &Cli) -> io::Result<i32> {
    let records = match load_corpus(cli)? {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
    };
    let filter = match ClassFilter::parse(&cli.filter) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
    };
    if cli.kmax < 4 {
        eprintln!("error: --kmax must be at least 4");
        return Ok(2);
    }
    let config = HuntConfig {
        kmax: cli.kmax,
        filter,
        op_budget: cli.budget,
        workers: cli.workers,
        ..Default::default()
    };
    let result = evencycle::classify::hunt_power_of_two(&records, &config);
    let json = serde_json::to_string(&result)?;
    match &cli.out {
        Some(path) => fs::write(path, format!("{json}\n"))?,
        None => println!("{json}"),
    }
    eprintln!(
        "hunt: examined {} graphs (filter {}), {} counterexamples, {} errors",
        result.examined,
        result.filter,
        result.counterexamples.len(),
        result.errors.len()
    );
    if !result.counterexamples.is_empty() {
        let bundles: Vec<evencycle::harness::CounterexampleBundle> = result
            .counterexamples
            .iter()
            .map(|ce| evencycle::harness::CounterexampleBundle {
                graph6: ce.graph6.clone(),
                operation: "hunt_power_of_two".to_string(),
                preconditions_verified: vec![format!("filter {}", result.filter)],
                witness: serde_json::json!({ "reason": ce.reason }),
            })
            .collect();
        append_bundles(&cli.bundle, &bundles)?;
        return Ok(1);
    }
    if !result.errors.is_empty() {
        // Parse failures exit 2; budget failures exit 3. Mixed runs take
        // the input-error code.
        let any_parse = result.errors.iter().any(|e| !e.message.contains("budget"));
        return Ok(if any_parse { 2 } else { 3 });
    }
    Ok(0)
}
