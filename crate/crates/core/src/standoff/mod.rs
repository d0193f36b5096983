//! Reading and writing `.glocon.jsonl` corpora.
//!
//! One document per line:
//!
//! ```text
//! {"doc_id":"…","labels":{"protest":…,"violent":…,"demand":…},
//!  "sentences":[{"index":0,"tokens":[…],"label":1}],
//!  "annotations":[{"id":"…","tag":"…","sentence":0,"start":0,"end":1,
//!                  "events":[1],"confidence":null,"comment":null}]}
//! ```
//!
//! On input `labels`, `sentences`, `annotations`, a sentence `label` and the
//! annotation `events`, `confidence` and `comment` keys may be omitted;
//! `events` may be an integer array or a FLAT comment string (`"Event 2,
//! Event 3"`). Output is canonical: every key in the order above, absent
//! values as `null`, annotations in canonical order, events as an array
//! unless the source comment named `Event 1`, confidence with at most six
//! fractional digits, LF after every record.

mod event_refs;

use std::collections::HashSet;
use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;
use serde_json::Value;

use crate::model::{
    check_span, Annotation, Confidence, DemandLabel, DocumentLabels, DocumentRecord, EventSet, ModelError,
    ProtestLabel, SentenceLabel, SentenceRecord, TagId, TokenSpan, ViolenceLabel,
};

pub use event_refs::parse_event_refs;

/// Conventional corpus file extension.
pub const EXTENSION: &str = ".glocon.jsonl";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParseErrorKind {
    MalformedRecord,
    UnknownTag,
    BadSpan,
    BadLabel,
    BadEventRef,
    DuplicateId,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::MalformedRecord => "malformed_record",
            ParseErrorKind::UnknownTag => "unknown_tag",
            ParseErrorKind::BadSpan => "bad_span",
            ParseErrorKind::BadLabel => "bad_label",
            ParseErrorKind::BadEventRef => "bad_event_ref",
            ParseErrorKind::DuplicateId => "duplicate_id",
        })
    }
}

/// A rejected corpus line. `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("line {line}{}: {kind}: {message}", doc_id.as_ref().map(|d| format!(" ({d})")).unwrap_or_default())]
pub struct ParseError {
    pub line: usize,
    pub doc_id: Option<String>,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, doc_id: Option<&str>, kind: ParseErrorKind, message: impl Into<String>) -> Self {
        ParseError {
            line,
            doc_id: doc_id.map(String::from),
            kind,
            message: message.into(),
        }
    }

    fn from_model(line: usize, doc_id: Option<&str>, e: ModelError) -> Self {
        let kind = match e {
            ModelError::BadSpan(_) => ParseErrorKind::BadSpan,
            ModelError::BadLabel(_) => ParseErrorKind::BadLabel,
            ModelError::BadEventRef(_) => ParseErrorKind::BadEventRef,
            ModelError::DuplicateId(_) => ParseErrorKind::DuplicateId,
            ModelError::BadConfidence(_) | ModelError::EmptySentence(_) | ModelError::SentenceIndex { .. } => {
                ParseErrorKind::MalformedRecord
            }
        };
        ParseError::new(line, doc_id, kind, e.to_string())
    }
}

/// Documents in input order plus every rejected line.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParsedCorpus {
    pub documents: Vec<DocumentRecord>,
    pub errors: Vec<ParseError>,
}

/// Parse a corpus stream.
///
/// Blank lines are skipped. A line that breaks any rule yields only
/// errors; a second document with an already seen `doc_id` is rejected as
/// `duplicate_id`. The only stream-level failures are I/O errors and bytes
/// that are not UTF-8.
pub fn parse_corpus<R: BufRead>(mut reader: R) -> io::Result<ParsedCorpus> {
    let mut corpus = ParsedCorpus::default();
    let mut seen_ids = HashSet::new();
    let mut buf = Vec::new();
    let mut line_no = 0;
    loop {
        buf.clear();
        if reader.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        line_no += 1;
        let line = std::str::from_utf8(&buf).map_err(|e| {
            io::Error::new(
                io::ErrorKind::InvalidData,
                format!("line {line_no} is not valid UTF-8: {e}"),
            )
        })?;
        let line = line.trim_end_matches(['\n', '\r']);
        if line.trim().is_empty() {
            continue;
        }
        match parse_line(line_no, line) {
            Ok(doc) => {
                if seen_ids.insert(doc.doc_id().to_string()) {
                    corpus.documents.push(doc);
                } else {
                    corpus.errors.push(ParseError::new(
                        line_no,
                        Some(doc.doc_id()),
                        ParseErrorKind::DuplicateId,
                        format!("document `{}` already appeared earlier", doc.doc_id()),
                    ));
                }
            }
            Err(errors) => corpus.errors.extend(errors),
        }
    }
    Ok(corpus)
}

pub fn parse_str(input: &str) -> ParsedCorpus {
    parse_corpus(input.as_bytes()).expect("in-memory UTF-8 input cannot fail")
}

pub fn read_corpus_file(path: impl AsRef<Path>) -> io::Result<ParsedCorpus> {
    parse_corpus(BufReader::new(File::open(path)?))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    doc_id: String,
    #[serde(default)]
    labels: RawLabels,
    #[serde(default)]
    sentences: Vec<RawSentence>,
    #[serde(default)]
    annotations: Vec<RawAnnotation>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawLabels {
    #[serde(default)]
    protest: Value,
    #[serde(default)]
    violent: Value,
    #[serde(default)]
    demand: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSentence {
    index: Option<usize>,
    tokens: Vec<String>,
    #[serde(default)]
    label: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAnnotation {
    id: String,
    tag: String,
    sentence: i64,
    start: i64,
    end: i64,
    #[serde(default)]
    events: Value,
    #[serde(default)]
    confidence: Option<f64>,
    #[serde(default)]
    comment: Option<String>,
}

/// Parse one corpus line into a document, or every problem found in it.
pub fn parse_line(line_no: usize, line: &str) -> Result<DocumentRecord, Vec<ParseError>> {
    let malformed = |doc_id: Option<&str>, msg: String| {
        vec![ParseError::new(line_no, doc_id, ParseErrorKind::MalformedRecord, msg)]
    };
    let value: Value = serde_json::from_str(line).map_err(|e| malformed(None, e.to_string()))?;
    let doc_id_hint = value.get("doc_id").and_then(Value::as_str).map(String::from);
    let doc_id_hint = doc_id_hint.as_deref();
    let raw: RawDocument = serde_json::from_value(value).map_err(|e| malformed(doc_id_hint, e.to_string()))?;
    let doc_id = Some(raw.doc_id.as_str());
    let at = |e: ModelError| ParseError::from_model(line_no, doc_id, e);

    let mut errors = Vec::new();

    let labels = parse_labels(&raw.labels).map_err(at);
    let labels = labels.unwrap_or_else(|e| {
        errors.push(e);
        DocumentLabels::default()
    });

    let mut sentences = Vec::with_capacity(raw.sentences.len());
    for (position, s) in raw.sentences.into_iter().enumerate() {
        let result = SentenceLabel::parse_value(&s.label)
            .and_then(|label| SentenceRecord::new(s.index.unwrap_or(position), s.tokens, label));
        match result {
            Ok(sentence) => sentences.push(sentence),
            Err(e) => errors.push(at(e)),
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let mut annotations = Vec::with_capacity(raw.annotations.len());
    let mut ids = HashSet::new();
    for a in raw.annotations {
        if !ids.insert(a.id.clone()) {
            errors.push(at(ModelError::DuplicateId(a.id.clone())));
            continue;
        }
        match parse_annotation(&sentences, a) {
            Ok(annotation) => annotations.push(annotation),
            Err(AnnotationError::UnknownTag(msg)) => {
                errors.push(ParseError::new(line_no, doc_id, ParseErrorKind::UnknownTag, msg))
            }
            Err(AnnotationError::Model(e)) => errors.push(at(e)),
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    DocumentRecord::new(raw.doc_id.clone(), labels, sentences, annotations).map_err(|e| vec![at(e)])
}

fn parse_labels(raw: &RawLabels) -> Result<DocumentLabels, ModelError> {
    DocumentLabels::new(
        optional_label::<ProtestLabel>(&raw.protest, "protest")?,
        optional_label::<ViolenceLabel>(&raw.violent, "violent")?,
        optional_label::<DemandLabel>(&raw.demand, "demand")?,
    )
}

fn optional_label<T: std::str::FromStr<Err = ModelError>>(value: &Value, key: &str) -> Result<Option<T>, ModelError> {
    match value {
        Value::Null => Ok(None),
        Value::String(s) => s.parse().map(Some),
        other => Err(ModelError::BadLabel(format!("`{key}` must be a string, got {other}"))),
    }
}

impl SentenceLabel {
    fn parse_value(value: &Value) -> Result<Option<SentenceLabel>, ModelError> {
        match value {
            Value::Null => Ok(None),
            Value::Number(n) => match n.as_u64() {
                Some(code) => SentenceLabel::from_code(code).map(Some),
                None => Err(ModelError::BadLabel(format!("sentence label {n} is not 0, 1 or 2"))),
            },
            other => Err(ModelError::BadLabel(format!(
                "sentence label must be an integer, got {other}"
            ))),
        }
    }
}

enum AnnotationError {
    UnknownTag(String),
    Model(ModelError),
}

impl From<ModelError> for AnnotationError {
    fn from(e: ModelError) -> Self {
        AnnotationError::Model(e)
    }
}

fn parse_annotation(sentences: &[SentenceRecord], raw: RawAnnotation) -> Result<Annotation, AnnotationError> {
    let tag: TagId = raw
        .tag
        .parse()
        .map_err(|e: crate::model::UnknownTag| AnnotationError::UnknownTag(format!("annotation `{}`: {e}", raw.id)))?;
    let index = |v: i64, what: &str| {
        usize::try_from(v).map_err(|_| ModelError::BadSpan(format!("annotation `{}`: {what} {v} is negative", raw.id)))
    };
    let span = TokenSpan::new(
        index(raw.sentence, "sentence")?,
        index(raw.start, "start")?,
        index(raw.end, "end")?,
    )
    .and_then(|span| check_span(sentences, &span).map(|_| span))
    .map_err(|e| match e {
        ModelError::BadSpan(m) => ModelError::BadSpan(format!("annotation `{}`: {m}", raw.id)),
        other => other,
    })?;

    let mut annotation = Annotation::new(raw.id.clone(), tag, span);
    annotation = match &raw.events {
        Value::Null => annotation,
        Value::String(comment) => annotation.with_flat_events(parse_event_refs(Some(comment))?),
        Value::Array(items) => {
            let numbers = items
                .iter()
                .map(|item| {
                    item.as_u64()
                        .and_then(|n| u32::try_from(n).ok())
                        .filter(|&n| n > 0)
                        .ok_or_else(|| {
                            ModelError::BadEventRef(format!(
                                "annotation `{}`: event number {item} is not a positive integer",
                                raw.id
                            ))
                        })
                })
                .collect::<Result<Vec<_>, _>>()?;
            annotation.with_events(EventSet::new(numbers).map_err(|e| match e {
                ModelError::BadEventRef(m) => ModelError::BadEventRef(format!("annotation `{}`: {m}", raw.id)),
                other => other,
            })?)
        }
        other => {
            return Err(ModelError::BadEventRef(format!(
                "annotation `{}`: events must be an array or a comment string, got {other}",
                raw.id
            ))
            .into())
        }
    };
    if let Some(c) = raw.confidence {
        annotation = annotation.with_confidence(Confidence::new(c)?);
    }
    if let Some(comment) = raw.comment {
        annotation = annotation.with_comment(comment);
    }
    Ok(annotation)
}

#[derive(Serialize)]
struct WireDocument<'a> {
    doc_id: &'a str,
    labels: WireLabels,
    sentences: Vec<WireSentence<'a>>,
    annotations: Vec<WireAnnotation<'a>>,
}

#[derive(Serialize)]
struct WireLabels {
    protest: Option<&'static str>,
    violent: Option<&'static str>,
    demand: Option<&'static str>,
}

#[derive(Serialize)]
struct WireSentence<'a> {
    index: usize,
    tokens: &'a [String],
    label: Option<u8>,
}

#[derive(Serialize)]
struct WireAnnotation<'a> {
    id: &'a str,
    tag: &'static str,
    sentence: usize,
    start: usize,
    end: usize,
    events: WireEvents,
    confidence: Option<Box<RawValue>>,
    comment: Option<&'a str>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum WireEvents {
    List(Vec<u32>),
    Comment(String),
}

/// Write one document as a canonical line, LF included.
pub fn write_document<W: Write>(mut out: W, doc: &DocumentRecord) -> io::Result<()> {
    let labels = doc.labels();
    let wire = WireDocument {
        doc_id: doc.doc_id(),
        labels: WireLabels {
            protest: labels.protest_label().map(ProtestLabel::as_str),
            violent: labels.violent().map(ViolenceLabel::as_str),
            demand: labels.demand().map(DemandLabel::as_str),
        },
        sentences: doc
            .sentences()
            .iter()
            .map(|s| WireSentence {
                index: s.index(),
                tokens: s.tokens(),
                label: s.label().map(SentenceLabel::code),
            })
            .collect(),
        annotations: doc
            .annotations()
            .iter()
            .map(|a| WireAnnotation {
                id: a.id(),
                tag: a.tag().as_str(),
                sentence: a.span().sentence(),
                start: a.span().start(),
                end: a.span().end(),
                events: if a.names_event_one() {
                    WireEvents::Comment(a.events().to_string())
                } else {
                    WireEvents::List(a.events().iter().collect())
                },
                confidence: a
                    .confidence()
                    .map(|c| RawValue::from_string(c.to_decimal()).expect("decimal is valid JSON")),
                comment: a.comment(),
            })
            .collect(),
    };
    serde_json::to_writer(&mut out, &wire)?;
    out.write_all(b"\n")
}

pub fn write_corpus<W: Write>(mut out: W, docs: &[DocumentRecord]) -> io::Result<()> {
    for doc in docs {
        write_document(&mut out, doc)?;
    }
    Ok(())
}

/// Canonical serialization of a corpus.
pub fn serialize_corpus(docs: &[DocumentRecord]) -> Vec<u8> {
    let mut out = Vec::new();
    write_corpus(&mut out, docs).expect("writing to a Vec cannot fail");
    out
}
