//! Brute-force restatement of the overlap matrix, written against tag names
//! rather than the library's tag predicates.

use std::collections::BTreeSet;

use glocon_core::model::{Annotation, DocumentRecord};

const PARTICIPANT_ATTRS: &[&str] = &[
    "participant_ideology",
    "participant_ethnicity",
    "participant_religion",
    "participant_caste",
    "participant_ses",
];
const ORGANIZER_ATTRS: &[&str] = &[
    "organizer_ideology",
    "organizer_ethnicity",
    "organizer_religion",
    "organizer_caste",
    "organizer_ses",
];
const EVENT_SEMANTIC: &[&str] = &[
    "demonstration",
    "industrial_action",
    "group_clash",
    "armed_militancy",
    "electoral_politics",
    "other_event",
];
const PARTICIPANT_SEMANTIC: &[&str] = &[
    "peasant",
    "worker",
    "small_producer",
    "employer_executive",
    "professional",
    "student",
    "politician",
    "activist",
    "militant",
    "people",
    "other_participant",
];
const ORGANIZER_SEMANTIC: &[&str] = &[
    "political_party",
    "ngo",
    "union",
    "militant_armed_organization",
    "chamber_of_professionals",
    "person",
    "other_organizer",
];

fn name(a: &Annotation) -> &'static str {
    a.tag().as_str()
}

fn same_tokens(a: &Annotation, b: &Annotation) -> bool {
    a.sentence() == b.sentence() && a.span().start() == b.span().start() && a.span().end() == b.span().end()
}

fn intersect(a: &Annotation, b: &Annotation) -> bool {
    a.sentence() == b.sentence() && a.span().start().max(b.span().start()) < a.span().end().min(b.span().end())
}

fn inside(inner: &Annotation, outer: &Annotation) -> bool {
    inner.sentence() == outer.sentence()
        && outer.span().start() <= inner.span().start()
        && inner.span().end() <= outer.span().end()
}

fn share_event(a: &Annotation, b: &Annotation) -> bool {
    a.events().iter().any(|k| b.events().contains(k))
}

fn name_exclusive(x: &str, y: &str) -> bool {
    ["facility", "participant", "organizer", "target"].iter().any(|f| {
        let (t, n) = (format!("{f}_type"), format!("{f}_name"));
        (x == t && y == n) || (x == n && y == t)
    })
}

fn may_host(semantic: &str, host: &str) -> bool {
    (EVENT_SEMANTIC.contains(&semantic) && (host == "event_type" || host == "event_mention"))
        || (PARTICIPANT_SEMANTIC.contains(&semantic) && host == "participant_type")
        || (ORGANIZER_SEMANTIC.contains(&semantic) && (host == "organizer_type" || host == "organizer_name"))
}

fn hosts_of(s: &Annotation, h: &Annotation) -> bool {
    may_host(name(s), name(h)) && same_tokens(s, h) && share_event(s, h)
}

/// Clauses (i) to (vi) for one pair, no inheritance.
fn clauses(a: &Annotation, b: &Annotation) -> bool {
    let (x, y) = (name(a), name(b));
    if name_exclusive(x, y) {
        return false;
    }
    let clause_i = x == "document_title" || y == "document_title";
    let clause_ii = (x == "participant_type" && PARTICIPANT_ATTRS.contains(&y) && inside(b, a))
        || (y == "participant_type" && PARTICIPANT_ATTRS.contains(&x) && inside(a, b));
    let org_head = |t: &str| t == "organizer_type" || t == "organizer_name";
    let clause_iii = (org_head(x) && ORGANIZER_ATTRS.contains(&y) && inside(b, a))
        || (org_head(y) && ORGANIZER_ATTRS.contains(&x) && inside(a, b));
    let clause_iv = hosts_of(a, b) || hosts_of(b, a);
    let clause_v = !share_event(a, b);
    let facility = |t: &str| t == "facility_type" || t == "facility_name";
    let target = |t: &str| t == "target_type" || t == "target_name";
    let clause_vi = (facility(x) && target(y)) || (facility(y) && target(x));
    clause_i || clause_ii || clause_iii || clause_iv || clause_v || clause_vi
}

fn licensed(a: &Annotation, b: &Annotation, doc: &DocumentRecord) -> bool {
    if name_exclusive(name(a), name(b)) {
        return false;
    }
    // a semantic tag stands in for any host it sits on
    let stand_ins = |s: &Annotation| -> Vec<Annotation> {
        let mut v = vec![s.clone()];
        v.extend(doc.annotations().iter().filter(|h| hosts_of(s, h)).cloned());
        v
    };
    let (xs, ys) = (stand_ins(a), stand_ins(b));
    xs.iter().any(|x| ys.iter().any(|y| clauses(x, y)))
}

/// Unordered id pairs that E030 must report.
pub fn e030_pairs(doc: &DocumentRecord) -> BTreeSet<(String, String)> {
    let anns = doc.annotations();
    let mut out = BTreeSet::new();
    for i in 0..anns.len() {
        for j in 0..anns.len() {
            if i >= j || !intersect(&anns[i], &anns[j]) {
                continue;
            }
            let (a, b) = (&anns[i], &anns[j]);
            if licensed(a, b, doc) {
                continue;
            }
            let loc = |t: &str| t == "urban_location_identifier" || t == "rural_location_identifier";
            let fac = |t: &str| t == "facility_type" || t == "facility_name";
            if (loc(name(a)) && fac(name(b))) || (loc(name(b)) && fac(name(a))) {
                continue;
            }
            let (p, q) = (a.id().to_string(), b.id().to_string());
            out.insert(if p < q { (p, q) } else { (q, p) });
        }
    }
    out
}
