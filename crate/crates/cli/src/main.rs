//! `orientcount`: batch front end for counting cyclic-triangle-free
//! orientations and re-running every verification.
//!
//! Exit status: 0 when everything checked holds, 1 when a mathematical claim
//! fails, 2 on usage or input errors.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use orientcount::audit::{all_dominance, audit_all, summarize, verify_lemma_claim, AuditConfig, Scope};
use orientcount::certify::{certify_configurations, certify_section2};
use orientcount::closed_forms::k1ll_count;
use orientcount::enumerate::{class_forms, find_maximizers, verify_theorem, SweepOptions, GENERATE_MAX_VERTICES};
use orientcount::extension::{ext, ExtConfig};
use orientcount::{count_orientations, oracle_count, parse_graph6, Count, Graph, VertexSet};

#[derive(Debug, Parser)]
#[command(name = "orientcount", version, about = "Count and verify orientations without cyclic triangles")]
struct Cli {
    /// Emit JSON lines instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the parallel sweeps.
    #[arg(long, global = true, env = "ORIENT_WORKERS", value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count orientations of each graph6 line.
    Count {
        /// Read graph6 lines from this file instead of stdin.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Also run the brute-force oracle and fail on disagreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Compute ext(A, B) for each graph6 line.
    Ext {
        /// Comma-separated vertices of A.
        #[arg(long = "a", value_name = "VERTICES")]
        a: String,
        /// Comma-separated vertices of B.
        #[arg(long = "b", value_name = "VERTICES")]
        b: String,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Evaluate the closed form for K_{1,l,l}.
    Formula {
        #[arg(long)]
        ell: u64,
    },
    /// List the isomorphism classes on N vertices as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Report the maximum count over N-vertex graphs and its maximizers.
    Extremal {
        #[arg(long)]
        n: usize,
        /// Count every class instead of skipping those that cannot win.
        #[arg(long)]
        definitive: bool,
    },
    /// Verify the maximum for one N, or run every check with `all`.
    Verify {
        /// A vertex count, or `all`.
        target: String,
        /// Disable pruning in the exhaustive sweeps.
        #[arg(long)]
        definitive: bool,
    },
    /// Audit the inequality ledger exactly.
    Audit {
        #[arg(long, default_value_t = 200)]
        max_n: u64,
    },
    /// Certify the extension-count bounds exhaustively.
    CertifyExt {
        /// Emit one record per configuration instead of one per claim.
        #[arg(long)]
        configurations: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Claim,
}

impl From<orientcount::Error> for Failure {
    fn from(e: orientcount::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string(value).expect("serialisable"));
    } else {
        println!("{}", text());
    }
}

fn claim(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Claim)
    }
}

fn read_input(file: Option<&PathBuf>) -> Result<String, Failure> {
    match file {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

/// Non-empty graph6 lines with their 1-based line numbers.
fn graphs(file: Option<&PathBuf>) -> Result<Vec<(usize, String, Graph)>, Failure> {
    let text = read_input(file)?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| Failure::Usage(format!("line {}: {e}", i + 1)))?;
        out.push((i + 1, line.to_string(), g));
    }
    Ok(out)
}

fn vertex_set(spec: &str, n: usize) -> Result<VertexSet, Failure> {
    let mut vs = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| Failure::Usage(format!("not a vertex index: {part:?}")))?;
        if v >= n {
            return Err(Failure::Usage(format!("vertex {v} out of range for a graph on {n} vertices")));
        }
        vs.push(v);
    }
    Ok(VertexSet::from_vertices(vs))
}

#[derive(Serialize)]
struct CountLine<'a> {
    line: usize,
    graph6: &'a str,
    count: Count,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<Count>,
}

fn cmd_count(json: bool, file: Option<&PathBuf>, oracle: bool) -> Outcome {
    let mut agree = true;
    for (line, g6, g) in graphs(file)? {
        let count = count_orientations(&g);
        let check = if oracle { Some(oracle_count(&g)?) } else { None };
        if let Some(o) = &check {
            if *o != count {
                eprintln!("line {line}: engine {count} disagrees with oracle {o}");
                agree = false;
            }
        }
        let rec = CountLine { line, graph6: &g6, count, oracle: check };
        emit(json, &rec, || rec.count.to_string());
    }
    claim(agree)
}

#[derive(Serialize)]
struct ExtLine<'a> {
    line: usize,
    graph6: &'a str,
    ext: Count,
    witness: String,
    witness_arcs: Vec<(usize, usize)>,
}

fn cmd_ext(json: bool, a: &str, b: &str, file: Option<&PathBuf>) -> Outcome {
    for (line, g6, g) in graphs(file)? {
        let (sa, sb) = (vertex_set(a, g.n())?, vertex_set(b, g.n())?);
        let r = ext(&ExtConfig::new(g, sa, sb)?)?;
        let rec = ExtLine {
            line,
            graph6: &g6,
            witness: r.witness.bit_string(),
            witness_arcs: r.witness_arcs(),
            ext: r.value,
        };
        emit(json, &rec, || format!("{} {}", rec.ext, if rec.witness.is_empty() { "-" } else { &rec.witness }));
    }
    Ok(())
}

#[derive(Serialize)]
struct FormulaLine {
    ell: u64,
    count: Count,
}

fn cmd_formula(json: bool, ell: u64) -> Outcome {
    let rec = FormulaLine { ell, count: k1ll_count(ell)? };
    emit(json, &rec, || rec.count.to_string());
    Ok(())
}

fn cmd_enumerate(json: bool, n: usize) -> Outcome {
    #[derive(Serialize)]
    struct Line<'a> {
        n: usize,
        graph6: &'a str,
    }
    for f in class_forms(n)? {
        let g6 = f.graph6();
        emit(json, &Line { n, graph6: &g6 }, || g6.clone());
    }
    Ok(())
}

fn sweep(definitive: bool) -> SweepOptions {
    SweepOptions { prune: !definitive, workers: None }
}

fn cmd_extremal(json: bool, n: usize, definitive: bool) -> Outcome {
    let r = find_maximizers(n, sweep(definitive))?;
    emit(json, &r, || {
        let forms: Vec<String> = r.maximizers.iter().map(|f| f.graph6()).collect();
        format!(
            "n={}: max={} over {} classes ({} counted), maximizers: {}",
            r.n,
            r.max_count,
            r.classes,
            r.counted,
            forms.join(" ")
        )
    });
    Ok(())
}

#[derive(Serialize)]
struct StepLine {
    step: String,
    verdict: &'static str,
    detail: String,
}

fn step(json: bool, name: impl Into<String>, ok: bool, detail: String) -> bool {
    let rec = StepLine { step: name.into(), verdict: if ok { "PASS" } else { "FAIL" }, detail };
    emit(json, &rec, || format!("{:<24} {:<5} {}", rec.step, rec.verdict, rec.detail));
    ok
}

fn cmd_verify(json: bool, target: &str, definitive: bool) -> Outcome {
    if target != "all" {
        let n: usize = target
            .parse()
            .map_err(|_| Failure::Usage(format!("expected a vertex count or `all`, got {target:?}")))?;
        if n == 0 || n > GENERATE_MAX_VERTICES {
            return Err(Failure::Usage(format!("n must be in 1..={GENERATE_MAX_VERTICES}")));
        }
        let r = verify_theorem(n, sweep(definitive))?;
        emit(json, &r, || r.summary());
        return claim(r.pass);
    }
    let mut ok = true;
    for n in 1..=GENERATE_MAX_VERTICES {
        let r = verify_theorem(n, sweep(definitive))?;
        ok &= step(json, format!("maximum n={n}"), r.pass, r.summary());
    }
    let certs = certify_section2()?;
    let violated = certs.iter().filter(|c| !c.verdict.passed()).count();
    ok &= step(
        json,
        "extension bounds",
        violated == 0,
        format!("{} claims, {violated} violated", certs.len()),
    );
    let lemma = verify_lemma_claim()?;
    ok &= step(
        json,
        "7-vertex lemma",
        lemma.pass,
        format!("{} qualifying classes, max {} < 4096", lemma.qualifying, lemma.max_count),
    );
    let cfg = AuditConfig::default();
    let rs = audit_all(&cfg)?;
    let failed: Vec<String> = rs
        .iter()
        .filter(|r| r.scope == Scope::Claimed && !r.verdict.passed())
        .map(|r| format!("{} {:?}", r.id, r.params))
        .collect();
    ok &= step(
        json,
        "inequality ledger",
        failed.is_empty(),
        format!("{} instances, claimed failures: [{}]", rs.len(), failed.join(", ")),
    );
    let dom = all_dominance(cfg.max_n);
    ok &= step(
        json,
        "dominance certificates",
        dom.iter().all(|c| c.pass),
        format!("{} certificates", dom.len()),
    );
    claim(ok)
}

fn scope_name(s: Scope) -> &'static str {
    match s {
        Scope::Claimed => "claimed",
        Scope::Reference => "reference",
    }
}

fn cmd_audit(json: bool, max_n: u64) -> Outcome {
    if max_n < 16 {
        return Err(Failure::Usage("--max-n must be at least 16".into()));
    }
    let cfg = AuditConfig { max_n, ..AuditConfig::default() };
    let rs = audit_all(&cfg)?;
    let dom = all_dominance(max_n);
    if json {
        for r in &rs {
            emit(true, r, String::new);
        }
        for c in &dom {
            emit(true, c, String::new);
        }
    } else {
        for s in summarize(&rs) {
            println!("{:<28} {:<9} {:>6} instances {:>4} failed", s.id, scope_name(s.scope), s.instances, s.failed);
        }
        for r in rs.iter().filter(|r| !r.verdict.passed()) {
            println!(
                "FAILED {} [{}] {:?}: {} {} {}",
                r.id,
                scope_name(r.scope),
                r.params,
                r.lhs,
                r.relation.symbol(),
                r.rhs
            );
        }
        for c in &dom {
            println!("{} crossover {}: {}", c.case, c.crossover, if c.pass { "PASS" } else { "FAIL" });
        }
    }
    let claimed_ok = rs.iter().all(|r| r.scope != Scope::Claimed || r.verdict.passed());
    claim(claimed_ok && dom.iter().all(|c| c.pass))
}

fn cmd_certify(json: bool, configurations: bool) -> Outcome {
    if configurations {
        let recs = certify_configurations()?;
        let ok = recs.iter().all(|r| r.verdict.passed());
        for r in &recs {
            emit(json, r, || format!("{} {} A={:#x} B={:#x} {} / {} {}", r.claim_id, r.host_graph6, r.a_mask, r.b_mask, r.attained, r.bound, r.verdict));
        }
        return claim(ok);
    }
    let certs = certify_section2()?;
    let ok = certs.iter().all(|c| c.verdict.passed());
    for c in &certs {
        emit(json, c, || {
            format!(
                "{:<40} {} {} {:>3} configurations, attained {} {} {}",
                c.claim_id,
                c.verdict,
                c.host_graph6,
                c.configurations,
                c.attained,
                c.relation,
                c.bound
            )
        });
    }
    claim(ok)
}

fn run(cli: Cli) -> Outcome {
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(w as usize)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let json = cli.json;
    match &cli.command {
        Command::Count { file, oracle } => cmd_count(json, file.as_ref(), *oracle),
        Command::Ext { a, b, file } => cmd_ext(json, a, b, file.as_ref()),
        Command::Formula { ell } => cmd_formula(json, *ell),
        Command::Enumerate { n } => cmd_enumerate(json, *n),
        Command::Extremal { n, definitive } => cmd_extremal(json, *n, *definitive),
        Command::Verify { target, definitive } => cmd_verify(json, target, *definitive),
        Command::Audit { max_n } => cmd_audit(json, *max_n),
        Command::CertifyExt { configurations } => cmd_certify(json, *configurations),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Claim) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
