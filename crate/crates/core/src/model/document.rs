use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use super::{DocumentLabels, ModelError, SentenceLabel, TagId, TokenSpan};

/// Non-empty set of event numbers, each at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct EventSet(BTreeSet<u32>);

impl EventSet {
    pub fn new<I: IntoIterator<Item = u32>>(numbers: I) -> Result<Self, ModelError> {
        let set: BTreeSet<u32> = numbers.into_iter().collect();
        if set.is_empty() {
            return Err(ModelError::BadEventRef("event set is empty".into()));
        }
        if set.contains(&0) {
            return Err(ModelError::BadEventRef("event numbers start at 1".into()));
        }
        Ok(EventSet(set))
    }

    pub fn single(number: u32) -> Result<Self, ModelError> {
        Self::new([number])
    }

    pub fn contains(&self, number: u32) -> bool {
        self.0.contains(&number)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn intersects(&self, other: &EventSet) -> bool {
        self.0.iter().any(|n| other.0.contains(n))
    }

    pub fn first(&self) -> u32 {
        *self.0.first().expect("event set is non-empty")
    }
}

/// Unnumbered annotations belong to event 1.
impl Default for EventSet {
    fn default() -> Self {
        EventSet(BTreeSet::from([1]))
    }
}

impl fmt::Display for EventSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| format!("Event {n}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Annotator confidence in [0, 1], kept at micro resolution so that the
/// six-digit serialized form is exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Confidence(u32);

impl Confidence {
    const SCALE: f64 = 1_000_000.0;

    pub fn new(value: f64) -> Result<Self, ModelError> {
        if !value.is_finite() || !(0.0..=1.0).contains(&value) {
            return Err(ModelError::BadConfidence(value));
        }
        Ok(Confidence((value * Self::SCALE).round() as u32))
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / Self::SCALE
    }

    pub fn micros(self) -> u32 {
        self.0
    }

    /// Decimal form with at most six fractional digits, always with at
    /// least one.
    pub fn to_decimal(self) -> String {
        let whole = self.0 / 1_000_000;
        let frac = format!("{:06}", self.0 % 1_000_000);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            format!("{whole}.0")
        } else {
            format!("{whole}.{frac}")
        }
    }
}

/// One tagged token span.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Annotation {
    id: String,
    tag: TagId,
    span: TokenSpan,
    events: EventSet,
    names_event_one: bool,
    confidence: Option<Confidence>,
    comment: Option<String>,
}

impl Annotation {
    /// An annotation of event 1 with no confidence or comment.
    pub fn new(id: impl Into<String>, tag: TagId, span: TokenSpan) -> Self {
        Annotation {
            id: id.into(),
            tag,
            span,
            events: EventSet::default(),
            names_event_one: false,
            confidence: None,
            comment: None,
        }
    }

    pub fn with_events(mut self, events: EventSet) -> Self {
        self.names_event_one = false;
        self.events = events;
        self
    }

    /// Events taken from a FLAT comment. A comment that lists `Event 1`
    /// explicitly is remembered, since the first event is meant to stay
    /// unnumbered.
    pub fn with_flat_events(mut self, events: EventSet) -> Self {
        self.names_event_one = events.contains(1);
        self.events = events;
        self
    }

    pub fn with_confidence(mut self, confidence: Confidence) -> Self {
        self.confidence = Some(confidence);
        self
    }

    pub fn with_comment(mut self, comment: impl Into<String>) -> Self {
        self.comment = Some(comment.into());
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn tag(&self) -> TagId {
        self.tag
    }

    pub fn span(&self) -> &TokenSpan {
        &self.span
    }

    pub fn events(&self) -> &EventSet {
        &self.events
    }

    /// True when the source FLAT comment spelled out `Event 1`.
    pub fn names_event_one(&self) -> bool {
        self.names_event_one
    }

    pub fn confidence(&self) -> Option<Confidence> {
        self.confidence
    }

    pub fn comment(&self) -> Option<&str> {
        self.comment.as_deref()
    }

    pub fn sentence(&self) -> usize {
        self.span.sentence()
    }

    /// Canonical order: sentence, start, end, tag, then id.
    pub fn sort_key(&self) -> (usize, usize, usize, TagId, &str) {
        (
            self.span.sentence(),
            self.span.start(),
            self.span.end(),
            self.tag,
            &self.id,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SentenceRecord {
    index: usize,
    tokens: Vec<String>,
    label: Option<SentenceLabel>,
}

impl SentenceRecord {
    pub fn new(index: usize, tokens: Vec<String>, label: Option<SentenceLabel>) -> Result<Self, ModelError> {
        if tokens.is_empty() {
            return Err(ModelError::EmptySentence(index));
        }
        Ok(SentenceRecord { index, tokens, label })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn label(&self) -> Option<SentenceLabel> {
        self.label
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// One news article with its labels and token annotations.
///
/// Annotations are held in canonical order regardless of the order they
/// were supplied in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DocumentRecord {
    doc_id: String,
    labels: DocumentLabels,
    sentences: Vec<SentenceRecord>,
    annotations: Vec<Annotation>,
}

impl DocumentRecord {
    pub fn new(
        doc_id: impl Into<String>,
        labels: DocumentLabels,
        sentences: Vec<SentenceRecord>,
        mut annotations: Vec<Annotation>,
    ) -> Result<Self, ModelError> {
        for (position, sentence) in sentences.iter().enumerate() {
            if sentence.index != position {
                return Err(ModelError::SentenceIndex {
                    expected: position,
                    found: sentence.index,
                });
            }
        }
        let mut seen = HashSet::with_capacity(annotations.len());
        for annotation in &annotations {
            check_span(&sentences, annotation.span())?;
            if !seen.insert(annotation.id.as_str()) {
                return Err(ModelError::DuplicateId(annotation.id.clone()));
            }
        }
        annotations.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(DocumentRecord {
            doc_id: doc_id.into(),
            labels,
            sentences,
            annotations,
        })
    }

    pub fn doc_id(&self) -> &str {
        &self.doc_id
    }

    pub fn labels(&self) -> &DocumentLabels {
        &self.labels
    }

    pub fn sentences(&self) -> &[SentenceRecord] {
        &self.sentences
    }

    pub fn annotations(&self) -> &[Annotation] {
        &self.annotations
    }

    pub fn annotation(&self, id: &str) -> Option<&Annotation> {
        self.annotations.iter().find(|a| a.id == id)
    }

    pub fn tokens(&self, span: &TokenSpan) -> &[String] {
        &self.sentences[span.sentence()].tokens[span.start()..span.end()]
    }

    /// Surface text of a span, tokens joined by single spaces.
    pub fn span_text(&self, span: &TokenSpan) -> String {
        self.tokens(span).join(" ")
    }

    /// All event numbers that appear on any annotation.
    pub fn event_numbers(&self) -> BTreeSet<u32> {
        self.annotations.iter().flat_map(|a| a.events.iter()).collect()
    }
}

/// Bounds check of a span against the sentences it may land in.
pub fn check_span(sentences: &[SentenceRecord], span: &TokenSpan) -> Result<(), ModelError> {
    let sentence = sentences.get(span.sentence()).ok_or_else(|| {
        ModelError::BadSpan(format!(
            "sentence {} does not exist ({} sentences)",
            span.sentence(),
            sentences.len()
        ))
    })?;
    if span.end() > sentence.len() {
        return Err(ModelError::BadSpan(format!(
            "span [{},{}) exceeds the {} tokens of sentence {}",
            span.start(),
            span.end(),
            sentence.len(),
            span.sentence()
        )));
    }
    Ok(())
}
