//! The `glocon` command line.
//!
//! Exit codes: 0 success, 1 diagnostics at or above `--fail-on`, 2 usage
//! error, 3 I/O, parse or pairing failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use glocon_core::agreement::{
    label_kappa, pair_corpora, span_prf, KappaLevel, KappaResult, MatchMode, PrfReport, Reference,
};
use glocon_core::assemble::{assemble_events, export_rows, write_csv, write_jsonl};
use glocon_core::lint::{validate_corpus, LintConfig, Severity};
use glocon_core::model::DocumentRecord;
use glocon_core::standoff::read_corpus_file;
use glocon_core::stats::corpus_stats;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIAGNOSTICS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "glocon",
    version,
    about = "Validate, assemble and compare GLOCON-annotated corpora"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a corpus against the annotation rules
    Validate {
        corpus: PathBuf,
        /// Lint configuration (JSON)
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Lowest severity that makes the run fail
        #[arg(long, value_enum, default_value_t = FailOn::Error)]
        fail_on: FailOn,
    },
    /// Export one row per assembled event
    Assemble {
        corpus: PathBuf,
        /// Write rows here instead of stdout
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = RowFormat::Csv)]
        format: RowFormat,
    },
    /// Inter-annotator agreement between two corpora of the same documents
    Agree {
        a: PathBuf,
        b: PathBuf,
        /// Only this level (default: all)
        #[arg(long, value_enum)]
        level: Option<Level>,
        /// Span matching for the token level
        #[arg(long, value_enum, default_value_t = Mode::Strict)]
        mode: Mode,
        /// Corpus treated as the reference for span scores
        #[arg(long, value_enum, default_value_t = Side::A)]
        reference: Side,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Annotation and label counts
    Stats {
        corpus: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RowFormat {
    Csv,
    Jsonl,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FailOn {
    Error,
    Warning,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Level {
    Doc,
    Sentence,
    Token,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    Strict,
    Lenient,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Side {
    A,
    B,
}

/// Run with the process's stdout and stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Run with explicit output streams. `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Validate {
            corpus,
            config,
            format,
            fail_on,
        } => validate(&corpus, config.as_deref(), format, fail_on, out, err),
        Command::Assemble {
            corpus,
            out: path,
            format,
        } => assemble(&corpus, path.as_deref(), format, out, err),
        Command::Agree {
            a,
            b,
            level,
            mode,
            reference,
            format,
        } => agree(&a, &b, level, mode, reference, format, out, err),
        Command::Stats { corpus, format } => stats(&corpus, format, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "glocon: {e}");
            EXIT_INPUT
        }
    }
}

type Outcome = Result<i32, String>;

struct Loaded {
    documents: Vec<DocumentRecord>,
    parse_failed: bool,
}

/// Read a corpus, reporting rejected lines on `err`.
fn load(path: &Path, err: &mut dyn Write) -> Result<Loaded, String> {
    let parsed = read_corpus_file(path).map_err(|e| format!("{}: {e}", path.display()))?;
    for e in &parsed.errors {
        let _ = writeln!(err, "{}: {e}", path.display());
    }
    Ok(Loaded {
        parse_failed: !parsed.errors.is_empty(),
        documents: parsed.documents,
    })
}

fn io_err(e: io::Error) -> String {
    e.to_string()
}

fn validate(
    path: &Path,
    config: Option<&Path>,
    format: ReportFormat,
    fail_on: FailOn,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let cfg = match config {
        Some(p) => LintConfig::from_file(p).map_err(|e| format!("{}: {e}", p.display()))?,
        None => LintConfig::default(),
    };
    let loaded = load(path, err)?;
    let report = validate_corpus(&loaded.documents, &cfg);
    let t = report.totals;
    let summary = format!(
        "{} documents, {} errors, {} warnings, {} info",
        loaded.documents.len(),
        t.error,
        t.warning,
        t.info
    );
    match format {
        ReportFormat::Text => {
            for d in report.diagnostics() {
                writeln!(out, "{d}").map_err(io_err)?;
            }
            writeln!(out, "{summary}").map_err(io_err)?;
        }
        ReportFormat::Json => {
            let all: Vec<_> = report.diagnostics().collect();
            serde_json::to_writer_pretty(&mut *out, &all).map_err(|e| e.to_string())?;
            writeln!(out).map_err(io_err)?;
            let _ = writeln!(err, "{summary}");
        }
    }
    if loaded.parse_failed {
        return Ok(EXIT_INPUT);
    }
    let threshold = match fail_on {
        FailOn::Error => Severity::Error,
        FailOn::Warning => Severity::Warning,
    };
    Ok(if t.at_least(threshold) > 0 {
        EXIT_DIAGNOSTICS
    } else {
        EXIT_OK
    })
}

fn assemble(path: &Path, dest: Option<&Path>, format: RowFormat, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let loaded = load(path, err)?;
    let records: Vec<_> = loaded.documents.iter().flat_map(assemble_events).collect();
    let rows = export_rows(&records);
    let write = |w: &mut dyn Write| match format {
        RowFormat::Csv => write_csv(w, &rows),
        RowFormat::Jsonl => write_jsonl(w, &rows),
    };
    match dest {
        Some(p) => {
            let file = File::create(p).map_err(|e| format!("{}: {e}", p.display()))?;
            let mut w = BufWriter::new(file);
            write(&mut w).and_then(|_| w.flush()).map_err(io_err)?;
        }
        None => write(out).map_err(io_err)?,
    }
    let _ = writeln!(err, "{} events from {} documents", rows.len(), loaded.documents.len());
    Ok(if loaded.parse_failed { EXIT_INPUT } else { EXIT_OK })
}

#[allow(clippy::too_many_arguments)]
fn agree(
    a: &Path,
    b: &Path,
    level: Option<Level>,
    mode: Mode,
    reference: Side,
    format: ReportFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let la = load(a, err)?;
    let lb = load(b, err)?;
    let pairing = pair_corpora(&la.documents, &lb.documents).map_err(|e| e.to_string())?;
    let wants = |l: Level| level.is_none_or(|x| x == l);

    let mut levels = Vec::new();
    if wants(Level::Doc) {
        levels.extend([KappaLevel::DocProtest, KappaLevel::DocViolent, KappaLevel::DocDemand]);
    }
    if wants(Level::Sentence) {
        levels.push(KappaLevel::Sentence);
    }
    let kappas: Vec<(KappaLevel, Result<KappaResult, String>)> = levels
        .into_iter()
        .map(|l| (l, label_kappa(&pairing, l).map_err(|e| e.to_string())))
        .collect();
    let spans = wants(Level::Token).then(|| {
        let mode = match mode {
            Mode::Strict => MatchMode::Strict,
            Mode::Lenient => MatchMode::Lenient,
        };
        let reference = match reference {
            Side::A => Reference::A,
            Side::B => Reference::B,
        };
        span_prf(&pairing, mode, reference)
    });

    let header = format!(
        "{} paired documents, {} only in {}, {} only in {}",
        pairing.pairs.len(),
        pairing.only_a.len(),
        a.display(),
        pairing.only_b.len(),
        b.display()
    );
    match format {
        ReportFormat::Text => {
            writeln!(out, "{header}").map_err(io_err)?;
            for (level, k) in &kappas {
                match k {
                    Ok(k) => writeln!(
                        out,
                        "{:<12} kappa={:.4} p_o={:.4} p_e={:.4} n={} skipped={}",
                        level.as_str(),
                        k.kappa,
                        k.observed_agreement,
                        k.expected_agreement,
                        k.n,
                        k.skipped
                    ),
                    Err(e) => writeln!(out, "{:<12} {e}", level.as_str()),
                }
                .map_err(io_err)?;
            }
            if let Some(r) = &spans {
                write_prf_table(out, r).map_err(io_err)?;
            }
        }
        ReportFormat::Json => {
            let kappa: Vec<_> = kappas
                .iter()
                .map(|(level, k)| match k {
                    Ok(k) => serde_json::to_value(k).expect("serializable"),
                    Err(e) => json!({ "level": level, "error": e }),
                })
                .collect();
            let doc = json!({
                "pairs": pairing.pairs.len(),
                "only_a": pairing.only_a,
                "only_b": pairing.only_b,
                "kappa": kappa,
                "spans": spans,
            });
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(|e| e.to_string())?;
            writeln!(out).map_err(io_err)?;
            let _ = writeln!(err, "{header}");
        }
    }
    Ok(if la.parse_failed || lb.parse_failed {
        EXIT_INPUT
    } else {
        EXIT_OK
    })
}

fn write_prf_table(out: &mut dyn Write, r: &PrfReport) -> io::Result<()> {
    let side = match r.reference {
        Reference::A => "a",
        Reference::B => "b",
    };
    writeln!(out, "spans: {} matching, reference {side}, {}", r.mode, r.matching)?;
    writeln!(
        out,
        "{:<28} {:>6} {:>6} {:>6} {:>7} {:>7} {:>7}",
        "tag", "tp", "fp", "fn", "P", "R", "F1"
    )?;
    for s in r.per_tag.iter().chain([&r.micro]) {
        let name = s.tag.map_or("micro", |t| t.as_str());
        writeln!(
            out,
            "{:<28} {:>6} {:>6} {:>6} {:>7.4} {:>7.4} {:>7.4}",
            name, s.counts.tp, s.counts.fp, s.counts.fn_, s.precision, s.recall, s.f1
        )?;
    }
    Ok(())
}

fn stats(path: &Path, format: ReportFormat, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let loaded = load(path, err)?;
    let s = corpus_stats(&loaded.documents);
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &s).map_err(|e| e.to_string())?;
            writeln!(out).map_err(io_err)?;
        }
        ReportFormat::Text => {
            let w = &mut *out;
            (|| -> io::Result<()> {
                writeln!(w, "documents {}", s.documents)?;
                writeln!(w, "sentences {}", s.sentences)?;
                writeln!(w, "annotations {}", s.annotations)?;
                writeln!(w, "events {}", s.events)?;
                for (n, docs) in &s.events_per_document {
                    writeln!(w, "  documents with {n} events: {docs}")?;
                }
                for (name, dist) in [
                    ("protest", &s.doc_protest),
                    ("violent", &s.doc_violent),
                    ("demand", &s.doc_demand),
                    ("sentence label", &s.sentence_labels),
                ] {
                    let parts: Vec<String> = dist.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(w, "{name}: {}", parts.join(" "))?;
                }
                for (tag, n) in s.per_tag.iter().filter(|(_, n)| **n > 0) {
                    writeln!(w, "  {tag:<28} {n}")?;
                }
                Ok(())
            })()
            .map_err(io_err)?;
        }
    }
    Ok(if loaded.parse_failed { EXIT_INPUT } else { EXIT_OK })
}
