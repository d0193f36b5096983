//! Typed representation of the GLOCON annotation schema.

mod builder;
mod document;
mod labels;
mod span;
mod tag;

pub use builder::DocumentBuilder;
pub use document::{check_span, Annotation, Confidence, DocumentRecord, EventSet, SentenceRecord};
pub use labels::{DemandLabel, DocumentLabels, ProtestLabel, SentenceLabel, ViolenceLabel};
pub use span::{coterminous, overlaps, TokenSpan};
pub use tag::{focus_of, Focus, TagId, UnknownTag};

/// A value that would break a model invariant.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("bad span: {0}")]
    BadSpan(String),
    #[error("bad label: {0}")]
    BadLabel(String),
    #[error("bad event reference: {0}")]
    BadEventRef(String),
    #[error("confidence {0} is outside [0, 1]")]
    BadConfidence(f64),
    #[error("duplicate annotation id `{0}`")]
    DuplicateId(String),
    #[error("sentence {0} has no tokens")]
    EmptySentence(usize),
    #[error("sentence at position {expected} carries index {found}")]
    SentenceIndex { expected: usize, found: usize },
}
