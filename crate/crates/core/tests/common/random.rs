//! Seeded random documents.

use std::ops::RangeInclusive;

use glocon_core::model::{
    Annotation, Confidence, DemandLabel, DocumentLabels, DocumentRecord, EventSet, Focus, ProtestLabel, SentenceLabel,
    SentenceRecord, TagId, TokenSpan, ViolenceLabel,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const VOCAB: &[&str] = &[
    "Workers",
    "workers",
    "marched",
    "protest",
    "rally",
    "in",
    "at",
    "the",
    "The",
    "a",
    "an",
    "Delhi",
    "India",
    "Pune",
    "more",
    "than",
    "about",
    "500",
    "people",
    "Maoists",
    "Hospital",
    "Safdarjung",
    "city",
    "hall",
    ".",
    ",",
    "(",
    ")",
    "“",
    "”",
    "year’s",
    "struck",
    "BKU",
];

const COMMENTS: &[&str] = &["unsure", "check \"title\"", "ñandú ✓ ok", "line\nbreak", ""];

#[derive(Debug, Clone)]
pub struct Shape {
    pub sentences: RangeInclusive<usize>,
    pub tokens: RangeInclusive<usize>,
    pub annotations: RangeInclusive<usize>,
    pub max_span: usize,
    pub max_event: u32,
}

impl Shape {
    /// Small dense documents where overlaps are frequent.
    pub fn small() -> Self {
        Shape {
            sentences: 1..=3,
            tokens: 3..=8,
            annotations: 0..=12,
            max_span: 3,
            max_event: 3,
        }
    }

    /// Roughly 200 tokens and 15 annotations per document.
    pub fn news() -> Self {
        Shape {
            sentences: 8..=12,
            tokens: 15..=25,
            annotations: 13..=17,
            max_span: 4,
            max_event: 3,
        }
    }
}

fn labels(rng: &mut ChaCha8Rng) -> DocumentLabels {
    match rng.gen_range(0..3) {
        0 => DocumentLabels::default(),
        1 => DocumentLabels::no_protest(),
        _ => {
            let violent = [None, Some(ViolenceLabel::Violent), Some(ViolenceLabel::NonViolent)]
                .choose(rng)
                .copied()
                .unwrap();
            let demand = match rng.gen_range(0..4) {
                0 => None,
                i => Some(DemandLabel::ALL[i - 1]),
            };
            DocumentLabels::new(Some(ProtestLabel::Protest), violent, demand).unwrap()
        }
    }
}

fn events(rng: &mut ChaCha8Rng, max: u32) -> Option<EventSet> {
    if rng.gen_bool(0.4) {
        return None;
    }
    let mut numbers: Vec<u32> = (1..=max).filter(|_| rng.gen_bool(0.4)).collect();
    if numbers.is_empty() {
        numbers.push(rng.gen_range(1..=max));
    }
    Some(EventSet::new(numbers).unwrap())
}

fn semantic_for(rng: &mut ChaCha8Rng, focus: Focus) -> TagId {
    let options: Vec<TagId> = TagId::ALL.iter().copied().filter(|t| t.focus() == focus).collect();
    *options.choose(rng).unwrap()
}

/// A random structurally valid document. Hosts often receive a
/// coterminous semantic tag, and some annotations duplicate an earlier
/// span so that overlaps of every kind occur.
pub fn random_document(rng: &mut ChaCha8Rng, id: &str, shape: &Shape) -> DocumentRecord {
    let n_sentences = rng.gen_range(shape.sentences.clone());
    let sentences: Vec<SentenceRecord> = (0..n_sentences)
        .map(|i| {
            let n = rng.gen_range(shape.tokens.clone());
            let tokens = (0..n).map(|_| VOCAB.choose(rng).unwrap().to_string()).collect();
            let label = [
                None,
                Some(SentenceLabel::NonEvent),
                Some(SentenceLabel::Event),
                Some(SentenceLabel::Planned),
            ]
            .choose(rng)
            .copied()
            .unwrap();
            SentenceRecord::new(i, tokens, label).unwrap()
        })
        .collect();

    let target = rng.gen_range(shape.annotations.clone());
    let mut annotations: Vec<Annotation> = Vec::new();
    while annotations.len() < target {
        let span = if !annotations.is_empty() && rng.gen_bool(0.25) {
            *annotations.choose(rng).unwrap().span()
        } else {
            let s = rng.gen_range(0..n_sentences);
            let len = sentences[s].tokens().len();
            let start = rng.gen_range(0..len);
            let end = rng.gen_range(start + 1..=(start + shape.max_span).min(len));
            TokenSpan::new(s, start, end).unwrap()
        };
        let tag = *TagId::ALL.choose(rng).unwrap();
        let ev = events(rng, shape.max_event);
        let mut a = Annotation::new(format!("a{}", annotations.len()), tag, span);
        if let Some(ev) = ev.clone() {
            a = if rng.gen_bool(0.3) {
                a.with_flat_events(ev)
            } else {
                a.with_events(ev)
            };
        }
        if rng.gen_bool(0.2) {
            let micros: u32 = rng.gen_range(0..=1_000_000);
            a = a.with_confidence(Confidence::new(micros as f64 / 1e6).unwrap());
        }
        if rng.gen_bool(0.15) {
            a = a.with_comment(*COMMENTS.choose(rng).unwrap());
        }
        annotations.push(a);

        if let Some(focus) = tag.hosted_semantic_focus() {
            if annotations.len() < target && rng.gen_bool(0.6) {
                let mut s = Annotation::new(format!("a{}", annotations.len()), semantic_for(rng, focus), span);
                if let Some(ev) = ev {
                    s = s.with_events(ev);
                }
                annotations.push(s);
            }
        }
    }
    DocumentRecord::new(id, labels(rng), sentences, annotations).unwrap()
}

pub fn random_corpus(seed: u64, n: usize, shape: &Shape) -> Vec<DocumentRecord> {
    let mut rng = rng(seed);
    (0..n)
        .map(|i| random_document(&mut rng, &format!("doc{i}"), shape))
        .collect()
}
