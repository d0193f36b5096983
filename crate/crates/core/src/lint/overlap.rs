//! The overlap licensing matrix.

use crate::model::{Annotation, DocumentRecord, TagId};

/// Whether two overlapping annotations may coexist.
///
/// A `*_type`/`*_name` pair of one family is never licensed. Otherwise the
/// pair is licensed when the document title is involved, when the events
/// are disjoint, when an attribute sits inside its participant or organizer
/// head, when a facility meets a target, or when a semantic tag is
/// coterminous with its host. A semantic tag also inherits every license of
/// the host it is coterminous with, so `[Maoists]` may carry
/// participant_type, its semantic category and participant_ideology at once.
///
/// The result is unspecified for pairs that do not overlap.
pub fn allowed_overlap(a: &Annotation, b: &Annotation, doc: &DocumentRecord) -> bool {
    if a.tag().is_type_name_pair(b.tag()) {
        return false;
    }
    if licensed(a, b) {
        return true;
    }
    let hosts_a = semantic_hosts(a, doc);
    let hosts_b = semantic_hosts(b, doc);
    hosts_a.iter().any(|h| licensed(h, b))
        || hosts_b.iter().any(|h| licensed(a, h))
        || hosts_a.iter().any(|ha| hosts_b.iter().any(|hb| licensed(ha, hb)))
}

/// The hosts a semantic tag is coterminous with: annotations of a tag that
/// can carry the category, on the same tokens, sharing an event number.
pub fn semantic_hosts<'d>(semantic: &Annotation, doc: &'d DocumentRecord) -> Vec<&'d Annotation> {
    if !semantic.tag().is_semantic() {
        return Vec::new();
    }
    doc.annotations().iter().filter(|h| is_host_of(h, semantic)).collect()
}

pub(crate) fn is_host_of(host: &Annotation, semantic: &Annotation) -> bool {
    semantic.tag().is_semantic_host(host.tag())
        && host.span().coterminous(semantic.span())
        && host.events().intersects(semantic.events())
}

fn licensed(a: &Annotation, b: &Annotation) -> bool {
    let (ta, tb) = (a.tag(), b.tag());
    if ta.is_type_name_pair(tb) {
        return false;
    }
    if ta == TagId::DocumentTitle || tb == TagId::DocumentTitle {
        return true;
    }
    if !a.events().intersects(b.events()) {
        return true;
    }
    let contains_attribute = |head: &Annotation, attr: &Annotation| {
        let (h, t) = (head.tag(), attr.tag());
        let family = (h == TagId::ParticipantType && t.is_participant_attribute())
            || (h.is_organizer_head() && t.is_organizer_attribute());
        family && head.span().contains(attr.span())
    };
    if contains_attribute(a, b) || contains_attribute(b, a) {
        return true;
    }
    if (ta.is_facility() && tb.is_target()) || (tb.is_facility() && ta.is_target()) {
        return true;
    }
    is_host_of(a, b) || is_host_of(b, a)
}
