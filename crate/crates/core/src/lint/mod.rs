//! Schema rule checking.
//!
//! [`validate_document`] runs every enabled rule of the catalog in
//! [`RuleId`] against one document and returns diagnostics in canonical
//! order. Rule ids starting with `E` are errors by default, `W` warnings.

mod checks;
mod config;
mod diagnostic;
mod overlap;
mod rules;

pub use checks::is_punctuation_only;
pub use config::{ConfigError, Lexicons, LintConfig};
pub use diagnostic::{sort_diagnostics, Diagnostic};
pub use overlap::{allowed_overlap, semantic_hosts};
pub use rules::{RuleId, Severity, UnknownRule};

use serde::Serialize;

use crate::assemble::{assemble_events, check_separation};
use crate::model::DocumentRecord;

/// Diagnostics of all enabled rules for one document, sorted by
/// (sentence, start, rule).
pub fn validate_document(doc: &DocumentRecord, cfg: &LintConfig) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    checks::run_all(&checks::Ctx::new(doc, &cfg.lexicons), &mut out);
    out.extend(check_separation(&assemble_events(doc)));
    out.retain(|d| cfg.is_enabled(d.rule));
    for d in &mut out {
        d.severity = cfg.severity(d.rule);
    }
    sort_diagnostics(&mut out);
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SeverityTotals {
    pub error: usize,
    pub warning: usize,
    pub info: usize,
}

impl SeverityTotals {
    pub fn add(&mut self, severity: Severity) {
        match severity {
            Severity::Error => self.error += 1,
            Severity::Warning => self.warning += 1,
            Severity::Info => self.info += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.error + self.warning + self.info
    }

    /// Number of diagnostics at `threshold` or above.
    pub fn at_least(&self, threshold: Severity) -> usize {
        match threshold {
            Severity::Error => self.error,
            Severity::Warning => self.error + self.warning,
            Severity::Info => self.total(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DocumentReport {
    pub doc_id: String,
    pub diagnostics: Vec<Diagnostic>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub documents: Vec<DocumentReport>,
    pub totals: SeverityTotals,
}

impl CorpusReport {
    pub fn diagnostics(&self) -> impl Iterator<Item = &Diagnostic> {
        self.documents.iter().flat_map(|d| &d.diagnostics)
    }
}

/// Per-document diagnostics in input order, with severity totals.
pub fn validate_corpus(docs: &[DocumentRecord], cfg: &LintConfig) -> CorpusReport {
    let mut report = CorpusReport::default();
    for doc in docs {
        let diagnostics = validate_document(doc, cfg);
        for d in &diagnostics {
            report.totals.add(d.severity);
        }
        report.documents.push(DocumentReport {
            doc_id: doc.doc_id().to_string(),
            diagnostics,
        });
    }
    report
}
