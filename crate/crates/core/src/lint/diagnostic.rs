use std::fmt;

use serde::Serialize;

use super::{RuleId, Severity};
use crate::model::{Annotation, TokenSpan};

/// One rule violation, located at a token span of the document.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Diagnostic {
    pub rule: RuleId,
    pub severity: Severity,
    pub doc_id: String,
    pub sentence: usize,
    pub start: usize,
    pub end: usize,
    pub annotations: Vec<String>,
    pub message: String,
}

impl Diagnostic {
    /// A diagnostic at `span` with the rule's default severity.
    pub fn at_span(rule: RuleId, doc_id: &str, span: &TokenSpan, message: impl Into<String>) -> Self {
        Diagnostic {
            rule,
            severity: rule.default_severity(),
            doc_id: doc_id.to_string(),
            sentence: span.sentence(),
            start: span.start(),
            end: span.end(),
            annotations: Vec::new(),
            message: message.into(),
        }
    }

    pub fn at(rule: RuleId, doc_id: &str, annotation: &Annotation, message: impl Into<String>) -> Self {
        Self::at_span(rule, doc_id, annotation.span(), message).with_ids([annotation.id()])
    }

    pub fn with_ids<'a>(mut self, ids: impl IntoIterator<Item = &'a str>) -> Self {
        self.annotations.extend(ids.into_iter().map(String::from));
        self
    }

    /// Canonical ordering key: sentence, start, rule, then the rest.
    pub fn sort_key(&self) -> (usize, usize, RuleId, usize, &[String], &str) {
        (
            self.sentence,
            self.start,
            self.rule,
            self.end,
            &self.annotations,
            &self.message,
        )
    }
}

/// `doc:sentence:start-end RULE severity message`
impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}-{} {} {} {}",
            self.doc_id, self.sentence, self.start, self.end, self.rule, self.severity, self.message
        )
    }
}

pub fn sort_diagnostics(diagnostics: &mut [Diagnostic]) {
    diagnostics.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}
