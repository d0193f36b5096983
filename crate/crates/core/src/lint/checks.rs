//! Per-rule checks. Each emits at the rule's default severity; filtering
//! and overrides happen in `validate_document`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::OnceLock;

use regex::Regex;

use super::overlap::{allowed_overlap, is_host_of};
use super::{Diagnostic, Lexicons, RuleId};
use crate::assemble::{hosted_category, in_title, title_spans};
use crate::model::{Annotation, DocumentRecord, Focus, ProtestLabel, SentenceLabel, TagId, TokenSpan};

pub(crate) struct Ctx<'d> {
    pub doc: &'d DocumentRecord,
    pub lex: &'d Lexicons,
    titles: Vec<TokenSpan>,
    triggers: Vec<&'d Annotation>,
}

impl<'d> Ctx<'d> {
    pub fn new(doc: &'d DocumentRecord, lex: &'d Lexicons) -> Self {
        Ctx {
            doc,
            lex,
            titles: title_spans(doc),
            triggers: doc.annotations().iter().filter(|a| a.tag().is_trigger()).collect(),
        }
    }

    fn id(&self) -> &str {
        self.doc.doc_id()
    }

    fn at(&self, rule: RuleId, a: &Annotation, msg: impl Into<String>) -> Diagnostic {
        Diagnostic::at(rule, self.id(), a, msg)
    }

    fn text(&self, a: &Annotation) -> String {
        self.doc.span_text(a.span())
    }
}

pub(crate) fn run_all(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    event_sentences(cx, out);
    trigger_discipline(cx, out);
    actor_semantics(cx, out);
    overlaps(cx, out);
    no_protest(cx, out);
    span_edges(cx, out);
    sentence_labels(cx, out);
    token_event_words(cx, out);
    numbering(cx, out);
    places_and_counts(cx, out);
    trigger_categories(cx, out);
    actor_consistency(cx, out);
}

/// E010 and W141.
fn event_sentences(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    for a in cx.doc.annotations() {
        if !a.tag().is_argument() || in_title(&cx.titles, a) {
            continue;
        }
        let anchored = cx
            .triggers
            .iter()
            .any(|t| t.sentence() == a.sentence() && t.events().intersects(a.events()));
        if !anchored {
            out.push(cx.at(
                RuleId::E010,
                a,
                format!(
                    "{} `{}` has no trigger of its event(s) {} in sentence {}",
                    a.tag(),
                    cx.text(a),
                    a.events(),
                    a.sentence()
                ),
            ));
        }
    }

    let mut carried: BTreeMap<u32, (&Annotation, bool)> = BTreeMap::new();
    for a in cx.doc.annotations() {
        let substantive = a.tag().is_trigger() || a.tag().is_argument();
        for k in a.events().iter() {
            let entry = carried.entry(k).or_insert((a, false));
            entry.1 |= substantive;
        }
    }
    for (k, (first, substantive)) in carried {
        if !substantive {
            out.push(cx.at(
                RuleId::W141,
                first,
                format!("event {k} is carried only by document or semantic tags"),
            ));
        }
    }
}

/// E021: at most one event_type per event inside and outside the title,
/// every event category on a trigger, exactly one category per trigger.
fn trigger_discipline(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    let mut seen: HashMap<(u32, bool), &Annotation> = HashMap::new();
    for t in cx.triggers.iter().filter(|t| t.tag() == TagId::EventType) {
        let title = in_title(&cx.titles, t);
        for k in t.events().iter() {
            if let Some(first) = seen.get(&(k, title)) {
                let place = if title { "in the title" } else { "outside the title" };
                out.push(
                    cx.at(
                        RuleId::E021,
                        t,
                        format!("event {k} has a second event_type `{}` {place}", cx.text(t)),
                    )
                    .with_ids([first.id()]),
                );
            } else {
                seen.insert((k, title), t);
            }
        }
    }
    semantic_pairing(cx, out, Focus::EventSemantic, RuleId::E021);
}

/// E022 and E023.
fn actor_semantics(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    semantic_pairing(cx, out, Focus::ParticipantSemantic, RuleId::E022);
    semantic_pairing(cx, out, Focus::OrganizerSemantic, RuleId::E023);
}

fn semantic_pairing(cx: &Ctx, out: &mut Vec<Diagnostic>, focus: Focus, rule: RuleId) {
    let anns = cx.doc.annotations();
    for s in anns.iter().filter(|s| s.tag().focus() == focus) {
        if !anns.iter().any(|h| is_host_of(h, s)) {
            out.push(cx.at(
                rule,
                s,
                format!(
                    "semantic tag {} on `{}` is not coterminous with a host tag",
                    s.tag(),
                    cx.text(s)
                ),
            ));
        }
    }
    for h in anns.iter().filter(|h| h.tag().hosted_semantic_focus() == Some(focus)) {
        let tags: Vec<&Annotation> = anns
            .iter()
            .filter(|s| s.tag().focus() == focus && is_host_of(h, s))
            .collect();
        match tags.len() {
            1 => {}
            0 => out.push(cx.at(
                rule,
                h,
                format!("{} `{}` has no semantic category tag", h.tag(), cx.text(h)),
            )),
            n => out.push(
                cx.at(
                    rule,
                    h,
                    format!("{} `{}` has {n} semantic category tags", h.tag(), cx.text(h)),
                )
                .with_ids(tags.iter().map(|s| s.id())),
            ),
        }
    }
}

/// E030 and W120.
fn overlaps(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    let anns = cx.doc.annotations();
    for (i, a) in anns.iter().enumerate() {
        for b in &anns[i + 1..] {
            // annotations are sorted by (sentence, start)
            if b.sentence() != a.sentence() || b.span().start() >= a.span().end() {
                break;
            }
            if allowed_overlap(a, b, cx.doc) {
                continue;
            }
            let location_facility = (a.tag().is_location_identifier() && b.tag().is_facility())
                || (b.tag().is_location_identifier() && a.tag().is_facility());
            let (rule, msg) = if location_facility {
                (
                    RuleId::W120,
                    "location identifier overlaps a facility; the facility tag takes priority",
                )
            } else {
                (RuleId::E030, "overlap not licensed")
            };
            out.push(
                cx.at(
                    rule,
                    a,
                    format!("{} `{}` and {} `{}`: {msg}", a.tag(), cx.text(a), b.tag(), cx.text(b)),
                )
                .with_ids([b.id()]),
            );
        }
    }
}

/// E050. Violence and demand labels on non-protest documents are rejected
/// when the document is built, so only the token and sentence clauses can
/// fire here.
fn no_protest(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    if cx.doc.labels().protest_label() != Some(ProtestLabel::NoProtest) {
        return;
    }
    for a in cx.doc.annotations() {
        out.push(cx.at(
            RuleId::E050,
            a,
            format!("{} annotation in a no_protest document", a.tag()),
        ));
    }
    for s in cx.doc.sentences() {
        if s.label() == Some(SentenceLabel::Event) {
            out.push(Diagnostic::at_span(
                RuleId::E050,
                cx.id(),
                &sentence_span(s.index(), s.len()),
                "sentence labeled 1 in a no_protest document",
            ));
        }
    }
}

fn sentence_span(index: usize, len: usize) -> TokenSpan {
    TokenSpan::new(index, 0, len).expect("sentences are never empty")
}

pub fn is_punctuation_only(token: &str) -> bool {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^[\p{P}\p{S}]+$").unwrap())
        .is_match(token)
}

/// W101, W102, W103. The document title is annotated whole and exempt;
/// semantic tags share their host's span and are reported through it.
fn span_edges(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    let checked = |a: &&Annotation| a.tag() != TagId::DocumentTitle && !a.tag().is_semantic();
    for a in cx.doc.annotations().iter().filter(checked) {
        let tokens = cx.doc.tokens(a.span());
        let (first, last) = (&tokens[0], &tokens[tokens.len() - 1]);
        if is_punctuation_only(first) || is_punctuation_only(last) {
            out.push(cx.at(
                RuleId::W101,
                a,
                format!("{} `{}` starts or ends with punctuation", a.tag(), cx.text(a)),
            ));
        }
        if cx.lex.is_indefinite_article(first) {
            out.push(cx.at(
                RuleId::W102,
                a,
                format!("{} `{}` starts with the article `{first}`", a.tag(), cx.text(a)),
            ));
        }
        if cx.lex.is_definite_article(first) {
            out.push(cx.at(
                RuleId::W103,
                a,
                format!("{} `{}` starts with lowercase `{first}`", a.tag(), cx.text(a)),
            ));
        }
    }
}

/// W110 and W111.
fn sentence_labels(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    for s in cx.doc.sentences() {
        if s.label() == Some(SentenceLabel::Event) && !cx.triggers.iter().any(|t| t.sentence() == s.index()) {
            out.push(Diagnostic::at_span(
                RuleId::W110,
                cx.id(),
                &sentence_span(s.index(), s.len()),
                "sentence labeled 1 has no event_type or event_mention",
            ));
        }
    }
    for t in &cx.triggers {
        let label = cx.doc.sentences()[t.sentence()].label();
        if let Some(l @ (SentenceLabel::NonEvent | SentenceLabel::Planned)) = label {
            out.push(cx.at(
                RuleId::W111,
                t,
                format!("{} `{}` in a sentence labeled {}", t.tag(), cx.text(t), l.code()),
            ));
        }
    }
}

/// W112: a token event word as event_type while the event also has a
/// trigger that is not a token event word.
fn token_event_words(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    for t in cx.triggers.iter().filter(|t| t.tag() == TagId::EventType) {
        if !cx.lex.is_token_event_word(&cx.text(t)) {
            continue;
        }
        let better = cx.triggers.iter().find(|o| {
            o.id() != t.id() && o.events().intersects(t.events()) && !cx.lex.is_token_event_word(&cx.text(o))
        });
        if let Some(o) = better {
            out.push(
                cx.at(
                    RuleId::W112,
                    t,
                    format!(
                        "token event word `{}` tagged event_type; `{}` is more specific",
                        cx.text(t),
                        cx.text(o)
                    ),
                )
                .with_ids([o.id()]),
            );
        }
    }
}

/// W121 and W122.
fn numbering(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    let used = cx.doc.event_numbers();
    if let Some(gap) = (1..).find(|k| !used.contains(k)) {
        let beyond = cx.doc.annotations().iter().find(|a| a.events().iter().any(|k| k > gap));
        if let Some(a) = beyond {
            out.push(cx.at(
                RuleId::W121,
                a,
                format!("event {gap} is skipped; numbers used: {}", join_numbers(&used)),
            ));
        }
    }
    for a in cx.doc.annotations().iter().filter(|a| a.names_event_one()) {
        out.push(cx.at(
            RuleId::W122,
            a,
            format!("comment `{}` names event 1 explicitly", a.events()),
        ));
    }
}

fn join_numbers(set: &BTreeSet<u32>) -> String {
    set.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")
}

/// W130 and W131.
fn places_and_counts(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    for a in cx.doc.annotations() {
        match a.tag() {
            TagId::EventPlace if cx.lex.is_country(&cx.text(a)) => {
                out.push(cx.at(RuleId::W130, a, format!("country `{}` tagged event_place", cx.text(a))))
            }
            TagId::ParticipantCount => {
                if let Some(q) = cx.lex.leading_qualifier(cx.doc.tokens(a.span())) {
                    out.push(cx.at(
                        RuleId::W131,
                        a,
                        format!("participant_count `{}` includes the qualifier `{q}`", cx.text(a)),
                    ));
                }
            }
            _ => {}
        }
    }
}

/// W142: all triggers of an event should carry the same category.
fn trigger_categories(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    let mut by_event: BTreeMap<u32, (BTreeSet<TagId>, &Annotation)> = BTreeMap::new();
    for t in &cx.triggers {
        for k in t.events().iter() {
            let entry = by_event.entry(k).or_insert_with(|| (BTreeSet::new(), t));
            entry.0.extend(
                cx.doc
                    .annotations()
                    .iter()
                    .filter(|s| s.tag().focus() == Focus::EventSemantic && s.events().contains(k) && is_host_of(t, s))
                    .map(Annotation::tag),
            );
        }
    }
    for (k, (cats, first)) in by_event {
        if cats.len() > 1 {
            let names: Vec<&str> = cats.iter().map(|c| c.as_str()).collect();
            out.push(cx.at(
                RuleId::W142,
                first,
                format!("triggers of event {k} carry different categories: {}", names.join(", ")),
            ));
        }
    }
}

/// W143: the same participant or organizer expression should keep its
/// semantic category throughout the document.
fn actor_consistency(cx: &Ctx, out: &mut Vec<Diagnostic>) {
    let mut first_seen: HashMap<(Focus, String), (TagId, &Annotation)> = HashMap::new();
    for h in cx.doc.annotations() {
        let Some(focus) = h.tag().hosted_semantic_focus() else {
            continue;
        };
        if focus == Focus::EventSemantic {
            continue;
        }
        let cats: BTreeSet<TagId> = h
            .events()
            .iter()
            .filter_map(|k| hosted_category(cx.doc, h, k))
            .collect();
        if cats.len() != 1 {
            continue;
        }
        let cat = *cats.first().unwrap();
        let key = (focus, cx.text(h).to_lowercase());
        match first_seen.get(&key) {
            None => {
                first_seen.insert(key, (cat, h));
            }
            Some((prev, earlier)) if *prev != cat => out.push(
                cx.at(
                    RuleId::W143,
                    h,
                    format!("`{}` is {cat} here but {prev} earlier", cx.text(h)),
                )
                .with_ids([earlier.id()]),
            ),
            Some(_) => {}
        }
    }
}
