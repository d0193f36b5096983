use serde::Serialize;

use super::ModelError;

/// A contiguous, non-empty token range inside one sentence.
///
/// `start` is inclusive and `end` exclusive. A span can never reach into a
/// neighbouring sentence; the token count bound is checked when the span is
/// placed into a document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TokenSpan {
    sentence: usize,
    start: usize,
    end: usize,
}

impl TokenSpan {
    pub fn new(sentence: usize, start: usize, end: usize) -> Result<Self, ModelError> {
        if start >= end {
            return Err(ModelError::BadSpan(format!(
                "span [{start},{end}) in sentence {sentence} is empty or reversed"
            )));
        }
        Ok(TokenSpan { sentence, start, end })
    }

    pub fn sentence(&self) -> usize {
        self.sentence
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn token_count(&self) -> usize {
        self.end - self.start
    }

    pub fn overlaps(&self, other: &TokenSpan) -> bool {
        overlaps(self, other)
    }

    pub fn coterminous(&self, other: &TokenSpan) -> bool {
        coterminous(self, other)
    }

    /// True when `inner` lies entirely within `self`.
    pub fn contains(&self, inner: &TokenSpan) -> bool {
        self.sentence == inner.sentence && self.start <= inner.start && inner.end <= self.end
    }
}

pub fn overlaps(a: &TokenSpan, b: &TokenSpan) -> bool {
    a.sentence == b.sentence && a.start < b.end && b.start < a.end
}

pub fn coterminous(a: &TokenSpan, b: &TokenSpan) -> bool {
    a == b
}
