//! Corpus counts.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::assemble::assemble_events;
use crate::model::{DemandLabel, DocumentRecord, ProtestLabel, SentenceLabel, TagId, ViolenceLabel};

pub const UNLABELED: &str = "unlabeled";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub documents: usize,
    pub sentences: usize,
    pub annotations: usize,
    /// Every tag of the tagset, zero counts included.
    pub per_tag: BTreeMap<TagId, usize>,
    pub doc_protest: BTreeMap<&'static str, usize>,
    pub doc_violent: BTreeMap<&'static str, usize>,
    pub doc_demand: BTreeMap<&'static str, usize>,
    /// Sentence counts keyed by label code, plus `unlabeled`.
    pub sentence_labels: BTreeMap<&'static str, usize>,
    /// Assembled events over the whole corpus.
    pub events: usize,
    /// Number of documents with a given number of events.
    pub events_per_document: BTreeMap<usize, usize>,
}

fn distribution(names: impl IntoIterator<Item = &'static str>) -> BTreeMap<&'static str, usize> {
    names.into_iter().chain([UNLABELED]).map(|n| (n, 0)).collect()
}

fn sentence_key(label: Option<SentenceLabel>) -> &'static str {
    match label {
        Some(SentenceLabel::NonEvent) => "0",
        Some(SentenceLabel::Event) => "1",
        Some(SentenceLabel::Planned) => "2",
        None => UNLABELED,
    }
}

pub fn corpus_stats(docs: &[DocumentRecord]) -> Stats {
    let mut s = Stats {
        documents: docs.len(),
        sentences: 0,
        annotations: 0,
        per_tag: TagId::ALL.iter().map(|&t| (t, 0)).collect(),
        doc_protest: distribution(ProtestLabel::ALL.iter().map(|l| l.as_str())),
        doc_violent: distribution(ViolenceLabel::ALL.iter().map(|l| l.as_str())),
        doc_demand: distribution(DemandLabel::ALL.iter().map(|l| l.as_str())),
        sentence_labels: distribution(["0", "1", "2"]),
        events: 0,
        events_per_document: BTreeMap::new(),
    };
    for doc in docs {
        let labels = doc.labels();
        *s.doc_protest
            .get_mut(labels.protest_label().map_or(UNLABELED, |l| l.as_str()))
            .unwrap() += 1;
        *s.doc_violent
            .get_mut(labels.violent().map_or(UNLABELED, |l| l.as_str()))
            .unwrap() += 1;
        *s.doc_demand
            .get_mut(labels.demand().map_or(UNLABELED, |l| l.as_str()))
            .unwrap() += 1;
        for sentence in doc.sentences() {
            s.sentences += 1;
            *s.sentence_labels.get_mut(sentence_key(sentence.label())).unwrap() += 1;
        }
        for a in doc.annotations() {
            s.annotations += 1;
            *s.per_tag.get_mut(&a.tag()).unwrap() += 1;
        }
        let events = assemble_events(doc).len();
        s.events += events;
        *s.events_per_document.entry(events).or_default() += 1;
    }
    s
}
