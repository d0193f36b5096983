use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::Pairing;
use crate::model::{Annotation, TagId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MatchMode {
    /// Equal tag and coterminous span.
    Strict,
    /// Equal tag and overlapping span.
    Lenient,
}

impl FromStr for MatchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(MatchMode::Strict),
            "lenient" => Ok(MatchMode::Lenient),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

impl fmt::Display for MatchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatchMode::Strict => "strict",
            MatchMode::Lenient => "lenient",
        })
    }
}

/// Which corpus of the pair is treated as the reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Reference {
    A,
    B,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct PrfCounts {
    pub tp: u64,
    pub fp: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
}

impl PrfCounts {
    /// `tp / (tp + fp)`. With nothing predicted this is 1 when nothing was
    /// expected either, else 0.
    pub fn precision(&self) -> f64 {
        ratio(self.tp, self.tp + self.fp, self.fn_ == 0)
    }

    /// `tp / (tp + fn)`, with the same convention for an empty reference.
    pub fn recall(&self) -> f64 {
        ratio(self.tp, self.tp + self.fn_, self.fp == 0)
    }

    /// Harmonic mean of precision and recall, 0 when both are 0.
    pub fn f1(&self) -> f64 {
        let (p, r) = (self.precision(), self.recall());
        if p + r == 0.0 {
            0.0
        } else {
            2.0 * p * r / (p + r)
        }
    }

    fn add(&mut self, other: PrfCounts) {
        self.tp += other.tp;
        self.fp += other.fp;
        self.fn_ += other.fn_;
    }

    fn scores(&self, tag: Option<TagId>) -> TagScores {
        TagScores {
            tag,
            counts: *self,
            precision: self.precision(),
            recall: self.recall(),
            f1: self.f1(),
        }
    }
}

fn ratio(num: u64, den: u64, vacuous: bool) -> f64 {
    if den == 0 {
        if vacuous {
            1.0
        } else {
            0.0
        }
    } else {
        num as f64 / den as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TagScores {
    /// `None` for the micro average.
    pub tag: Option<TagId>,
    #[serde(flatten)]
    pub counts: PrfCounts,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrfReport {
    pub mode: MatchMode,
    pub reference: Reference,
    pub matching: &'static str,
    /// Tags seen on either side, in tagset order.
    pub per_tag: Vec<TagScores>,
    pub micro: TagScores,
}

impl PrfReport {
    pub fn tag(&self, tag: TagId) -> Option<&TagScores> {
        self.per_tag.iter().find(|s| s.tag == Some(tag))
    }
}

/// Span agreement between the two sides of each pair.
///
/// Matching is greedy and one-to-one: hypothesis annotations are visited
/// in canonical order and each takes the first unmatched reference
/// annotation of the same tag that qualifies. In lenient mode a strict pass
/// runs first and overlapping matches are then sought for what is left, so
/// every strict match is also a lenient one. Event numbers are ignored.
pub fn span_prf(pairs: &Pairing<'_>, mode: MatchMode, reference: Reference) -> PrfReport {
    let mut per_tag: BTreeMap<TagId, PrfCounts> = BTreeMap::new();
    for (a, b) in &pairs.pairs {
        let (refs, hyps) = match reference {
            Reference::A => (a.annotations(), b.annotations()),
            Reference::B => (b.annotations(), a.annotations()),
        };
        for (tag, counts) in match_document(refs, hyps, mode) {
            per_tag.entry(tag).or_default().add(counts);
        }
    }
    let mut micro = PrfCounts::default();
    for c in per_tag.values() {
        micro.add(*c);
    }
    PrfReport {
        mode,
        reference,
        matching: "greedy one-to-one in canonical span order",
        per_tag: per_tag.iter().map(|(t, c)| c.scores(Some(*t))).collect(),
        micro: micro.scores(None),
    }
}

/// Indices `(hypothesis, reference)` of matched annotations within one
/// document, in the order matches were made.
pub fn match_spans(refs: &[Annotation], hyps: &[Annotation], mode: MatchMode) -> Vec<(usize, usize)> {
    let mut ref_used = vec![false; refs.len()];
    let mut hyp_used = vec![false; hyps.len()];
    let mut out = Vec::new();
    let mut pass = |accept: &dyn Fn(&Annotation, &Annotation) -> bool, out: &mut Vec<(usize, usize)>| {
        for (h, hyp) in hyps.iter().enumerate() {
            if hyp_used[h] {
                continue;
            }
            let found = refs
                .iter()
                .enumerate()
                .position(|(r, rf)| !ref_used[r] && rf.tag() == hyp.tag() && accept(hyp, rf));
            if let Some(r) = found {
                ref_used[r] = true;
                hyp_used[h] = true;
                out.push((h, r));
            }
        }
    };
    pass(&|h, r| h.span().coterminous(r.span()), &mut out);
    if mode == MatchMode::Lenient {
        pass(&|h, r| h.span().overlaps(r.span()), &mut out);
    }
    out
}

fn match_document(refs: &[Annotation], hyps: &[Annotation], mode: MatchMode) -> BTreeMap<TagId, PrfCounts> {
    let mut counts: BTreeMap<TagId, PrfCounts> = BTreeMap::new();
    let matched = match_spans(refs, hyps, mode);
    let mut hyp_hit = vec![false; hyps.len()];
    let mut ref_hit = vec![false; refs.len()];
    for &(h, r) in &matched {
        hyp_hit[h] = true;
        ref_hit[r] = true;
        counts.entry(hyps[h].tag()).or_default().tp += 1;
    }
    for (_, hyp) in hyps.iter().enumerate().filter(|(h, _)| !hyp_hit[*h]) {
        counts.entry(hyp.tag()).or_default().fp += 1;
    }
    for (_, rf) in refs.iter().enumerate().filter(|(r, _)| !ref_hit[*r]) {
        counts.entry(rf.tag()).or_default().fn_ += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agreement::pair_corpora;
    use crate::model::{DocumentBuilder, DocumentRecord};

    fn base() -> DocumentBuilder {
        DocumentBuilder::new("d").sentence("a b c d e f g h", None)
    }

    fn report(a: DocumentRecord, b: DocumentRecord, mode: MatchMode) -> PrfReport {
        let (a, b) = (vec![a], vec![b]);
        span_prf(&pair_corpora(&a, &b).unwrap(), mode, Reference::A)
    }

    #[test]
    fn partial_recall() {
        let reference = base()
            .span(0, 0, 1, TagId::EventType, &[])
            .span(0, 4, 5, TagId::EventType, &[2])
            .build()
            .unwrap();
        let hyp = base().span(0, 4, 5, TagId::EventType, &[7]).build().unwrap();
        let r = report(reference, hyp, MatchMode::Strict);
        let s = r.tag(TagId::EventType).unwrap();
        assert_eq!((s.precision, s.recall), (1.0, 0.5));
        assert!((s.f1 - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn shifted_span() {
        let reference = base().span(0, 3, 6, TagId::EventTime, &[]).build().unwrap();
        let hyp = base().span(0, 2, 5, TagId::EventTime, &[]).build().unwrap();
        let strict = report(reference.clone(), hyp.clone(), MatchMode::Strict);
        assert_eq!(strict.micro.counts, PrfCounts { tp: 0, fp: 1, fn_: 1 });
        let lenient = report(reference, hyp, MatchMode::Lenient);
        assert_eq!(lenient.micro.counts, PrfCounts { tp: 1, fp: 0, fn_: 0 });
    }

    #[test]
    fn lenient_keeps_exact_matches_first() {
        // overlap matching alone would give [0,3) the reference [1,2)
        let reference = base()
            .span(0, 1, 2, TagId::EventTime, &[])
            .span(0, 2, 3, TagId::EventTime, &[])
            .build()
            .unwrap();
        let hyp = base()
            .span(0, 0, 3, TagId::EventTime, &[])
            .span(0, 1, 2, TagId::EventTime, &[])
            .build()
            .unwrap();
        let lenient = report(reference, hyp, MatchMode::Lenient);
        assert_eq!(lenient.micro.counts.tp, 2);
    }

    #[test]
    fn tags_must_agree() {
        let reference = base().span(0, 0, 1, TagId::EventType, &[]).build().unwrap();
        let hyp = base().span(0, 0, 1, TagId::EventMention, &[]).build().unwrap();
        let r = report(reference, hyp, MatchMode::Lenient);
        assert_eq!(r.micro.counts, PrfCounts { tp: 0, fp: 1, fn_: 1 });
        assert_eq!(r.per_tag.len(), 2);
        assert_eq!(r.micro.f1, 0.0);
    }

    #[test]
    fn empty_sides_are_perfect() {
        let r = report(base().build().unwrap(), base().build().unwrap(), MatchMode::Strict);
        assert_eq!((r.micro.precision, r.micro.recall, r.micro.f1), (1.0, 1.0, 1.0));
    }
}
