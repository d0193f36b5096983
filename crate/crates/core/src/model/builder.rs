use super::{
    Annotation, DocumentLabels, DocumentRecord, EventSet, ModelError, SentenceLabel, SentenceRecord, TagId, TokenSpan,
};

/// Incremental construction of a [`DocumentRecord`] from whitespace
/// tokenized sentences.
///
/// Annotation ids are assigned as `t1`, `t2`, ... in call order. The first
/// problem encountered is reported by [`DocumentBuilder::build`].
///
/// ```
/// use glocon_core::model::{DocumentBuilder, DocumentLabels, SentenceLabel, TagId};
///
/// let doc = DocumentBuilder::new("d1")
///     .labels(DocumentLabels::protest())
///     .sentence("Workers marched on Monday .", Some(SentenceLabel::Event))
///     .phrase(0, "marched", TagId::EventType, &[1])
///     .phrase(0, "marched", TagId::Demonstration, &[1])
///     .phrase(0, "on Monday", TagId::EventTime, &[1])
///     .build()
///     .unwrap();
/// assert_eq!(doc.annotations().len(), 3);
/// ```
#[derive(Debug, Clone)]
pub struct DocumentBuilder {
    doc_id: String,
    labels: DocumentLabels,
    sentences: Vec<SentenceRecord>,
    annotations: Vec<Annotation>,
    error: Option<ModelError>,
}

impl DocumentBuilder {
    pub fn new(doc_id: impl Into<String>) -> Self {
        DocumentBuilder {
            doc_id: doc_id.into(),
            labels: DocumentLabels::default(),
            sentences: Vec::new(),
            annotations: Vec::new(),
            error: None,
        }
    }

    pub fn labels(mut self, labels: DocumentLabels) -> Self {
        self.labels = labels;
        self
    }

    pub fn sentence(self, text: &str, label: Option<SentenceLabel>) -> Self {
        let tokens = text.split_whitespace().map(String::from).collect();
        self.tokens(tokens, label)
    }

    pub fn tokens(mut self, tokens: Vec<String>, label: Option<SentenceLabel>) -> Self {
        let index = self.sentences.len();
        match SentenceRecord::new(index, tokens, label) {
            Ok(sentence) => self.sentences.push(sentence),
            Err(e) => self.fail(e),
        }
        self
    }

    /// Tag tokens `[start, end)` of `sentence`. An empty `events` slice
    /// leaves the annotation unnumbered (event 1).
    pub fn span(mut self, sentence: usize, start: usize, end: usize, tag: TagId, events: &[u32]) -> Self {
        match self.make(sentence, start, end, tag, events) {
            Ok(annotation) => self.annotations.push(annotation),
            Err(e) => self.fail(e),
        }
        self
    }

    /// Tag the first occurrence of `phrase` (whitespace tokenized) in
    /// `sentence`.
    pub fn phrase(self, sentence: usize, phrase: &str, tag: TagId, events: &[u32]) -> Self {
        self.nth_phrase(sentence, phrase, 0, tag, events)
    }

    /// Tag the `nth` (0-based) occurrence of `phrase` in `sentence`.
    pub fn nth_phrase(mut self, sentence: usize, phrase: &str, nth: usize, tag: TagId, events: &[u32]) -> Self {
        let needle: Vec<&str> = phrase.split_whitespace().collect();
        let found = self.sentences.get(sentence).and_then(|s| {
            let tokens = s.tokens();
            (0..tokens.len())
                .filter(|&i| {
                    i + needle.len() <= tokens.len()
                        && tokens[i..i + needle.len()].iter().zip(&needle).all(|(t, n)| t == n)
                })
                .nth(nth)
        });
        match found {
            Some(start) if !needle.is_empty() => self.span(sentence, start, start + needle.len(), tag, events),
            _ => {
                self.fail(ModelError::BadSpan(format!(
                    "phrase `{phrase}` not found in sentence {sentence}"
                )));
                self
            }
        }
    }

    /// Add a fully formed annotation.
    pub fn annotation(mut self, annotation: Annotation) -> Self {
        self.annotations.push(annotation);
        self
    }

    pub fn next_id(&self) -> String {
        format!("t{}", self.annotations.len() + 1)
    }

    pub fn build(self) -> Result<DocumentRecord, ModelError> {
        if let Some(e) = self.error {
            return Err(e);
        }
        DocumentRecord::new(self.doc_id, self.labels, self.sentences, self.annotations)
    }

    fn make(
        &self,
        sentence: usize,
        start: usize,
        end: usize,
        tag: TagId,
        events: &[u32],
    ) -> Result<Annotation, ModelError> {
        let span = TokenSpan::new(sentence, start, end)?;
        let annotation = Annotation::new(self.next_id(), tag, span);
        Ok(if events.is_empty() {
            annotation
        } else {
            annotation.with_events(EventSet::new(events.iter().copied())?)
        })
    }

    fn fail(&mut self, e: ModelError) {
        if self.error.is_none() {
            self.error = Some(e);
        }
    }
}
