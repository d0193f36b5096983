//! Folding token-level annotations into per-event records.

mod export;

pub use export::{export_rows, write_csv, write_jsonl, EventRow, COLUMNS};

use std::collections::BTreeSet;

use serde::Serialize;

use crate::lint::{Diagnostic, RuleId};
use crate::model::{Annotation, DocumentLabels, DocumentRecord, Focus, TagId, TokenSpan};

/// An event_type or event_mention occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trigger {
    pub annotation_id: String,
    pub span: TokenSpan,
    pub text: String,
    pub is_type: bool,
    pub in_title: bool,
    /// Event category tagged on this trigger for the record's event, if
    /// exactly one distinct category is present.
    pub semantic: Option<TagId>,
}

/// Any tagged argument: its tag, location and surface text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Argument {
    pub annotation_id: String,
    pub tag: TagId,
    pub span: TokenSpan,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParticipantRecord {
    pub head: Argument,
    pub semantic: Option<TagId>,
    pub attributes: Vec<Argument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrganizerRecord {
    pub head: Argument,
    pub semantic: Option<TagId>,
    pub attributes: Vec<Argument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EventRecord {
    pub doc_id: String,
    pub labels: DocumentLabels,
    pub event_number: u32,
    pub semantic_category: Option<TagId>,
    pub triggers: Vec<Trigger>,
    pub times: Vec<Argument>,
    pub places: Vec<Argument>,
    pub facilities: Vec<Argument>,
    pub urban_rural_markers: Vec<Argument>,
    pub targets: Vec<Argument>,
    pub participants: Vec<ParticipantRecord>,
    pub organizers: Vec<OrganizerRecord>,
    /// Attributes and counts not contained in exactly one head.
    pub loose_attributes: Vec<Argument>,
    /// Ids of loose attributes contained in more than one head.
    pub ambiguous_attributes: Vec<String>,
}

impl EventRecord {
    fn new(doc: &DocumentRecord, event_number: u32) -> Self {
        EventRecord {
            doc_id: doc.doc_id().to_string(),
            labels: *doc.labels(),
            event_number,
            semantic_category: None,
            triggers: Vec::new(),
            times: Vec::new(),
            places: Vec::new(),
            facilities: Vec::new(),
            urban_rural_markers: Vec::new(),
            targets: Vec::new(),
            participants: Vec::new(),
            organizers: Vec::new(),
            loose_attributes: Vec::new(),
            ambiguous_attributes: Vec::new(),
        }
    }

    pub fn has_trigger(&self) -> bool {
        !self.triggers.is_empty()
    }

    /// Every argument of the record, in canonical annotation order.
    pub fn arguments(&self) -> Vec<&Argument> {
        let mut all: Vec<&Argument> = self
            .times
            .iter()
            .chain(&self.places)
            .chain(&self.facilities)
            .chain(&self.urban_rural_markers)
            .chain(&self.targets)
            .chain(&self.loose_attributes)
            .collect();
        for p in &self.participants {
            all.push(&p.head);
            all.extend(&p.attributes);
        }
        for o in &self.organizers {
            all.push(&o.head);
            all.extend(&o.attributes);
        }
        all.sort_by(|a, b| arg_key(a).cmp(&arg_key(b)));
        all
    }

    /// Span and ids used to locate diagnostics about the whole event.
    fn anchor(&self) -> Option<(TokenSpan, &str)> {
        let trigger = self.triggers.first().map(|t| (t.span, t.annotation_id.as_str()));
        let arg = self.arguments().first().map(|a| (a.span, a.annotation_id.as_str()));
        match (trigger, arg) {
            (Some(t), Some(a)) => Some(if (a.0, a.1) < (t.0, t.1) { a } else { t }),
            (t, a) => t.or(a),
        }
    }
}

fn arg_key(a: &Argument) -> (TokenSpan, TagId, &str) {
    (a.span, a.tag, &a.annotation_id)
}

fn argument(doc: &DocumentRecord, a: &Annotation) -> Argument {
    Argument {
        annotation_id: a.id().to_string(),
        tag: a.tag(),
        span: *a.span(),
        text: doc.span_text(a.span()),
    }
}

/// The category a host carries for `event`: the semantic tags of the right
/// focus coterminous with it and naming the event. `None` unless exactly
/// one distinct category is present.
pub fn hosted_category(doc: &DocumentRecord, host: &Annotation, event: u32) -> Option<TagId> {
    let focus = host.tag().hosted_semantic_focus()?;
    let found: BTreeSet<TagId> = doc
        .annotations()
        .iter()
        .filter(|s| s.tag().focus() == focus && s.span().coterminous(host.span()) && s.events().contains(event))
        .map(Annotation::tag)
        .collect();
    single(found)
}

fn single(set: BTreeSet<TagId>) -> Option<TagId> {
    if set.len() == 1 {
        set.into_iter().next()
    } else {
        None
    }
}

pub(crate) fn title_spans(doc: &DocumentRecord) -> Vec<TokenSpan> {
    doc.annotations()
        .iter()
        .filter(|a| a.tag() == TagId::DocumentTitle)
        .map(|a| *a.span())
        .collect()
}

pub(crate) fn in_title(titles: &[TokenSpan], a: &Annotation) -> bool {
    a.tag() != TagId::DocumentTitle && titles.iter().any(|t| t.contains(a.span()))
}

/// One record per event number carried by at least one trigger or argument,
/// sorted by event number. Annotations numbered with several events feed
/// every one of those records. Assembly never fails; damaged documents
/// yield records without triggers.
pub fn assemble_events(doc: &DocumentRecord) -> Vec<EventRecord> {
    let titles = title_spans(doc);
    let numbers: BTreeSet<u32> = doc
        .annotations()
        .iter()
        .filter(|a| a.tag().is_trigger() || a.tag().is_argument())
        .flat_map(|a| a.events().iter())
        .collect();

    numbers.into_iter().map(|k| assemble_one(doc, &titles, k)).collect()
}

fn assemble_one(doc: &DocumentRecord, titles: &[TokenSpan], k: u32) -> EventRecord {
    let mut record = EventRecord::new(doc, k);
    let members: Vec<&Annotation> = doc.annotations().iter().filter(|a| a.events().contains(k)).collect();

    let is_participant_attr = |t: TagId| t.is_participant_attribute() || t == TagId::ParticipantCount;
    let mut attributes = Vec::new();
    for a in &members {
        let tag = a.tag();
        match tag {
            TagId::EventType | TagId::EventMention => record.triggers.push(Trigger {
                annotation_id: a.id().to_string(),
                span: *a.span(),
                text: doc.span_text(a.span()),
                is_type: tag == TagId::EventType,
                in_title: in_title(titles, a),
                semantic: hosted_category(doc, a, k),
            }),
            TagId::EventTime => record.times.push(argument(doc, a)),
            TagId::EventPlace => record.places.push(argument(doc, a)),
            TagId::FacilityType | TagId::FacilityName => record.facilities.push(argument(doc, a)),
            TagId::UrbanLocationIdentifier | TagId::RuralLocationIdentifier => {
                record.urban_rural_markers.push(argument(doc, a))
            }
            TagId::TargetType | TagId::TargetName => record.targets.push(argument(doc, a)),
            TagId::ParticipantType | TagId::ParticipantName => record.participants.push(ParticipantRecord {
                head: argument(doc, a),
                semantic: hosted_category(doc, a, k),
                attributes: Vec::new(),
            }),
            TagId::OrganizerType | TagId::OrganizerName => record.organizers.push(OrganizerRecord {
                head: argument(doc, a),
                semantic: hosted_category(doc, a, k),
                attributes: Vec::new(),
            }),
            t if is_participant_attr(t) || t.is_organizer_attribute() => attributes.push(*a),
            _ => {
                debug_assert!(matches!(tag.focus(), Focus::DocInfo) || tag.is_semantic());
            }
        }
    }

    for attr in attributes {
        let arg = argument(doc, attr);
        let holders: Vec<usize> = if is_participant_attr(attr.tag()) {
            record
                .participants
                .iter()
                .enumerate()
                .filter(|(_, p)| p.head.tag == TagId::ParticipantType && p.head.span.contains(attr.span()))
                .map(|(i, _)| i)
                .collect()
        } else {
            record
                .organizers
                .iter()
                .enumerate()
                .filter(|(_, o)| o.head.span.contains(attr.span()))
                .map(|(i, _)| i)
                .collect()
        };
        match holders.as_slice() {
            [i] if is_participant_attr(attr.tag()) => record.participants[*i].attributes.push(arg),
            [i] => record.organizers[*i].attributes.push(arg),
            [] => record.loose_attributes.push(arg),
            _ => {
                record.ambiguous_attributes.push(arg.annotation_id.clone());
                record.loose_attributes.push(arg);
            }
        }
    }

    let categories: BTreeSet<TagId> = record.triggers.iter().filter_map(|t| t.semantic).collect();
    record.semantic_category = single(categories);
    record
}

type Axes<'r> = (Vec<&'r str>, Vec<&'r str>, Vec<&'r str>, Vec<&'r str>, Option<TagId>);

fn texts(args: &[Argument]) -> Vec<&str> {
    let mut v: Vec<&str> = args.iter().map(|a| a.text.as_str()).collect();
    v.sort_unstable();
    v
}

/// Sorted surface forms of time, place, facility and actor heads, plus the
/// event category.
fn separation_axes(r: &EventRecord) -> Axes<'_> {
    let mut actors: Vec<&str> = r
        .participants
        .iter()
        .map(|p| p.head.text.as_str())
        .chain(r.organizers.iter().map(|o| o.head.text.as_str()))
        .collect();
    actors.sort_unstable();
    (
        texts(&r.times),
        texts(&r.places),
        texts(&r.facilities),
        actors,
        r.semantic_category,
    )
}

/// Event-separation plausibility over one document's records.
///
/// W140 for every pair of events that agree on time, place, facility,
/// actors and category as surface-text multisets (located at the later
/// event), and E020 for each record that has arguments but no trigger.
pub fn check_separation(records: &[EventRecord]) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let axes: Vec<_> = records.iter().map(separation_axes).collect();
    for (j, later) in records.iter().enumerate() {
        for (i, earlier) in records[..j].iter().enumerate() {
            if axes[i] != axes[j] {
                continue;
            }
            if let Some((span, id)) = later.anchor() {
                out.push(
                    Diagnostic::at_span(
                        RuleId::W140,
                        &later.doc_id,
                        &span,
                        format!(
                            "event {} cannot be told apart from event {} by time, place, facility, actors or category",
                            later.event_number, earlier.event_number
                        ),
                    )
                    .with_ids([id]),
                );
            }
        }
    }
    for r in records.iter().filter(|r| !r.has_trigger()) {
        let args = r.arguments();
        if let Some(first) = args.first() {
            out.push(
                Diagnostic::at_span(
                    RuleId::E020,
                    &r.doc_id,
                    &first.span,
                    format!(
                        "event {} has arguments but no event_type or event_mention",
                        r.event_number
                    ),
                )
                .with_ids(args.iter().map(|a| a.annotation_id.as_str())),
            );
        }
    }
    out
}
