//! Corpus toolkit for news articles annotated with the GLOCON protest event
//! schema.
//!
//! * [`model`]: tags, spans, labels and documents.
//! * [`standoff`]: the `.glocon.jsonl` corpus format.
//! * [`lint`]: rule catalog and document validation.
//! * [`assemble`]: per-event records and flat row export.
//! * [`agreement`]: Cohen's kappa and span precision/recall/F1.
//! * [`stats`]: corpus counts.

pub mod agreement;
pub mod assemble;
pub mod lint;
pub mod model;
pub mod standoff;
pub mod stats;
