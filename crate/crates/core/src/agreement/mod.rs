//! Agreement between two annotations of the same documents.

mod kappa;
mod prf;

pub use kappa::{label_kappa, KappaLevel, KappaResult};
pub use prf::{match_spans, span_prf, MatchMode, PrfCounts, PrfReport, Reference, TagScores};

use std::collections::{HashMap, HashSet};

use crate::model::DocumentRecord;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AgreementError {
    #[error(
        "document `{doc_id}` is tokenized differently in the two corpora (first difference in sentence {sentence})"
    )]
    TokenMismatch { doc_id: String, sentence: usize },
    #[error("no item carries a {level} label on both sides ({skipped} skipped)")]
    NoItems { level: KappaLevel, skipped: usize },
}

/// Documents present in both corpora, matched by id, in the order of `a`.
#[derive(Debug, Clone)]
pub struct Pairing<'c> {
    pub pairs: Vec<(&'c DocumentRecord, &'c DocumentRecord)>,
    pub only_a: Vec<String>,
    pub only_b: Vec<String>,
}

/// Pair two corpora by doc_id. Paired documents must have identical
/// sentences and tokens; the first pair that differs aborts the pairing.
pub fn pair_corpora<'c>(a: &'c [DocumentRecord], b: &'c [DocumentRecord]) -> Result<Pairing<'c>, AgreementError> {
    let by_id: HashMap<&str, &DocumentRecord> = b.iter().map(|d| (d.doc_id(), d)).collect();
    let in_a: HashSet<&str> = a.iter().map(|d| d.doc_id()).collect();
    let mut pairing = Pairing {
        pairs: Vec::new(),
        only_a: Vec::new(),
        only_b: b
            .iter()
            .filter(|d| !in_a.contains(d.doc_id()))
            .map(|d| d.doc_id().to_string())
            .collect(),
    };
    for da in a {
        let Some(db) = by_id.get(da.doc_id()) else {
            pairing.only_a.push(da.doc_id().to_string());
            continue;
        };
        if let Some(sentence) = first_divergence(da, db) {
            return Err(AgreementError::TokenMismatch {
                doc_id: da.doc_id().to_string(),
                sentence,
            });
        }
        pairing.pairs.push((da, db));
    }
    Ok(pairing)
}

fn first_divergence(a: &DocumentRecord, b: &DocumentRecord) -> Option<usize> {
    let (sa, sb) = (a.sentences(), b.sentences());
    sa.iter()
        .zip(sb)
        .position(|(x, y)| x.tokens() != y.tokens())
        .or_else(|| (sa.len() != sb.len()).then(|| sa.len().min(sb.len())))
}
