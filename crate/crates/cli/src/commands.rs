//! Command implementations. Each returns a machine report plus a
//! human-readable rendering; the caller picks one by output format.
//!
//! Report `command` echoes canonicalize the inputs that determine the
//! result; execution details (worker count, timing) are excluded so that
//! equal inputs give byte-identical reports.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use idealforge_core::classify;
use idealforge_core::dsl;
use idealforge_core::ideal::IdealSet;
use idealforge_core::ring::OrderCaps;
use idealforge_core::theorem::{
    build_corpus, parse_pred_expr, search, sweep, CorpusSpec, TheoremId,
};

use crate::report::{predicate_entry, stats_entry, theorem_entry, Report};

#[derive(Debug)]
pub enum CliError {
    /// Bad input: malformed expressions, unknown ids, unreadable files.
    Usage(String),
    /// Internal failure.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failed(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failed(m) => m,
        }
    }
}

pub struct CommandOutput {
    pub report: Report,
    pub text: String,
    /// True when a theorem failed; maps to exit code 1.
    pub failed: bool,
}

fn eval_ring(expr: &str) -> Result<dsl::EvalRing, CliError> {
    let ast = dsl::parse_ring(expr).map_err(|e| CliError::Usage(e.to_string()))?;
    dsl::eval_ring(&ast, &OrderCaps::default()).map_err(|e| CliError::Usage(e.render(expr)))
}

fn eval_ideal(expr: &str, ring: &dsl::EvalRing) -> Result<IdealSet, CliError> {
    let ast = dsl::parse_ideal(expr).map_err(|e| CliError::Usage(e.to_string()))?;
    dsl::eval_ideal_on(&ast, ring).map_err(|e| CliError::Usage(e.render(expr)))
}

pub fn cmd_classify(ring_expr: &str, ideal_expr: &str) -> Result<CommandOutput, CliError> {
    let evaluated = eval_ring(ring_expr)?;
    let ideal = eval_ideal(ideal_expr, &evaluated)?;
    let ring = &evaluated.ring;
    let bundle = classify::ideal_report(ring, &ideal).map_err(|e| CliError::Usage(e.to_string()))?;

    let mut report = Report::new(format!(
        "classify --ring {ring_expr} --ideal {ideal_expr}"
    ));
    report.instances = vec![
        format!("ring {} (order {})", ring.label(), ring.order()),
        format!("ideal {} (size {})", bundle.ideal_display, ideal.len()),
    ];
    let instance = format!("{} I={}", ring.label(), bundle.ideal_display);
    for v in &bundle.verdicts {
        report
            .verdicts
            .push(predicate_entry(ring, instance.clone(), v));
    }
    report.recount();

    let mut text = String::new();
    let _ = writeln!(text, "ring  {} (order {})", ring.label(), ring.order());
    let _ = writeln!(text, "ideal {} (size {})", bundle.ideal_display, ideal.len());
    for v in &bundle.verdicts {
        let mark = if v.holds { "true " } else { "false" };
        match &v.witness {
            Some(w) => {
                let labels: Vec<String> = w
                    .iter()
                    .map(|&e| format!("{}", ring.name(e)))
                    .collect();
                let _ = writeln!(
                    text,
                    "  {:18} {}  witness ({})",
                    v.predicate.name(),
                    mark,
                    labels.join(", ")
                );
            }
            None => {
                let _ = writeln!(text, "  {:18} {}", v.predicate.name(), mark);
            }
        }
    }
    Ok(CommandOutput {
        report,
        text,
        failed: false,
    })
}

fn load_corpus_spec(path: Option<&Path>) -> Result<CorpusSpec, CliError> {
    match path {
        None => Ok(CorpusSpec::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("bad corpus spec {}: {e}", p.display())))
        }
    }
}

fn parse_suite(suite: &str) -> Result<Vec<TheoremId>, CliError> {
    if suite == "all" {
        return Ok(TheoremId::ALL.to_vec());
    }
    suite
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            TheoremId::parse(name)
                .ok_or_else(|| CliError::Usage(format!("unknown theorem id {name:?}")))
        })
        .collect()
}

pub fn cmd_verify(
    suite: &str,
    corpus_path: Option<&Path>,
    jobs: usize,
    timing: bool,
) -> Result<CommandOutput, CliError> {
    let ids = parse_suite(suite)?;
    let spec = load_corpus_spec(corpus_path)?;
    let start = Instant::now();
    let (corpus, diags) = build_corpus(&spec);
    let outcome = sweep(&corpus, &ids, jobs.max(1));

    let corpus_echo = corpus_path
        .map(|p| format!(" --corpus {}", p.display()))
        .unwrap_or_default();
    let mut report = Report::new(format!("verify --suite {suite}{corpus_echo}"));
    report.instances = corpus
        .rings
        .iter()
        .map(|c| c.label().to_string())
        .collect();
    report.diagnostics = diags.clone();
    for v in outcome.failures() {
        report.verdicts.push(theorem_entry(v));
    }
    report.summary.theorems = outcome.stats.iter().map(stats_entry).collect();
    report.recount();
    // Failures are double-counted by recount (listed and in stats); fix up.
    report.summary.total = outcome.stats.iter().map(|s| s.instances()).sum();
    report.summary.pass = outcome.stats.iter().map(|s| s.pass).sum();
    report.summary.vacuous = outcome.stats.iter().map(|s| s.vacuous).sum();
    report.summary.fail = outcome.stats.iter().map(|s| s.fail).sum();
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }

    let mut text = String::new();
    let _ = writeln!(
        text,
        "corpus: {} rings, {} products, {} idealizations, {} amalgamations",
        corpus.rings.len(),
        corpus.products.len(),
        corpus.idealizations.len(),
        corpus.amalgams.len()
    );
    for d in &diags {
        let _ = writeln!(text, "note: {d}");
    }
    for s in &outcome.stats {
        let _ = writeln!(
            text,
            "{:10} pass {:6}  vacuous {:6}  fail {}",
            s.theorem.name(),
            s.pass,
            s.vacuous,
            s.fail
        );
    }
    for v in outcome.failures() {
        let w = v
            .witness
            .as_ref()
            .map(|w| format!(" [{}: {}]", w.subcheck, w.detail))
            .unwrap_or_default();
        let _ = writeln!(text, "FAIL {} on {}{}", v.theorem.name(), v.instance, w);
    }
    let failed = outcome.total_failures() > 0;
    let _ = writeln!(
        text,
        "result: {} ({} failures, {} substantive passes)",
        if failed { "FAIL" } else { "PASS" },
        report.summary.fail,
        report.summary.pass
    );
    if timing {
        let _ = writeln!(text, "elapsed: {:?}", start.elapsed());
    }
    Ok(CommandOutput {
        report,
        text,
        failed,
    })
}

pub fn cmd_search(
    where_expr: &str,
    corpus_path: Option<&Path>,
    limit: usize,
) -> Result<CommandOutput, CliError> {
    let expr = parse_pred_expr(where_expr).map_err(|e| CliError::Usage(e.to_string()))?;
    let spec = load_corpus_spec(corpus_path)?;
    let (corpus, diags) = build_corpus(&spec);
    let hits = search(&corpus, &expr, limit);

    let corpus_echo = corpus_path
        .map(|p| format!(" --corpus {}", p.display()))
        .unwrap_or_default();
    let mut report = Report::new(format!(
        "search --where {where_expr} --limit {limit}{corpus_echo}"
    ));
    report.instances = hits
        .iter()
        .map(|h| format!("{} [{}]", h.ring, h.ideals.join(", ")))
        .collect();
    report.diagnostics = diags;
    report.summary.total = hits.len();
    report.summary.pass = hits.len();

    let mut text = String::new();
    let _ = writeln!(text, "{} witness(es) for `{where_expr}`", hits.len());
    for h in &hits {
        let _ = writeln!(text, "  {}  ideals [{}]", h.ring, h.ideals.join(", "));
    }
    Ok(CommandOutput {
        report,
        text,
        failed: false,
    })
}

pub fn cmd_enumerate(ring_expr: &str) -> Result<CommandOutput, CliError> {
    let evaluated = eval_ring(ring_expr)?;
    let ring = &evaluated.ring;
    let lattice = idealforge_core::ideal::all_ideals(ring);

    let mut report = Report::new(format!("enumerate --ring {ring_expr}"));
    report.instances = vec![format!("ring {} (order {})", ring.label(), ring.order())];
    let mut text = String::new();
    let _ = writeln!(
        text,
        "{} has {} ideals",
        ring.label(),
        lattice.len()
    );
    for i in &lattice {
        let mut flags: Vec<&str> = Vec::new();
        if i.is_proper() {
            let wj = classify::is_weakly_j_ideal(ring, i).unwrap();
            let j = classify::is_j_ideal(ring, i).unwrap();
            if wj.holds {
                flags.push("weaklyJ");
            }
            if j.holds {
                flags.push("J");
            }
            if i.is_maximal() {
                flags.push("maximal");
            }
            let instance = format!("{} I={}", ring.label(), i.display_short());
            report.verdicts.push(predicate_entry(ring, instance, &wj));
        }
        let _ = writeln!(
            text,
            "  {:12} size {:4}  {}",
            i.display_short(),
            i.len(),
            flags.join(",")
        );
    }
    report.recount();
    Ok(CommandOutput {
        report,
        text,
        failed: false,
    })
}
