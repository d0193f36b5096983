#![allow(dead_code)]

pub mod fixtures;
pub mod oracle;
pub mod random;

use std::collections::BTreeSet;

use glocon_core::lint::{validate_document, LintConfig, RuleId};
use glocon_core::model::DocumentRecord;

pub fn rules_fired(doc: &DocumentRecord) -> BTreeSet<RuleId> {
    validate_document(doc, &LintConfig::default())
        .iter()
        .map(|d| d.rule)
        .collect()
}

/// Unordered id pairs of the E030 diagnostics the engine reports.
pub fn engine_e030_pairs(doc: &DocumentRecord) -> BTreeSet<(String, String)> {
    validate_document(doc, &LintConfig::default())
        .into_iter()
        .filter(|d| d.rule == RuleId::E030)
        .map(|d| {
            let (p, q) = (d.annotations[0].clone(), d.annotations[1].clone());
            if p < q {
                (p, q)
            } else {
                (q, p)
            }
        })
        .collect()
}
