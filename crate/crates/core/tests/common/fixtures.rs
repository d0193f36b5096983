//! Hand-encoded documents: two worked multi-event examples and one
//! broken/fixed pair per lint rule.

use glocon_core::lint::RuleId;
use glocon_core::model::{
    Annotation, DocumentBuilder, DocumentLabels, DocumentRecord, EventSet, SentenceLabel, TagId, TokenSpan,
};

use TagId::*;

const EVENT: Option<SentenceLabel> = Some(SentenceLabel::Event);

pub const BJP_SENTENCE: &str = "At noon , BJP workers gathered in the square and shouted slogans , \
    condemning the failure of the Union Government in delivering justice to the victims of \
    last year’s terror attack at the train station where armed militants killed 25 people .";

/// Two events in one sentence: the BJP gathering and the militant attack.
pub fn bjp() -> DocumentRecord {
    DocumentBuilder::new("bjp")
        .labels(DocumentLabels::protest())
        .sentence(BJP_SENTENCE, EVENT)
        .phrase(0, "At noon", EventTime, &[])
        .phrase(0, "BJP", OrganizerName, &[])
        .phrase(0, "BJP", PoliticalParty, &[])
        .phrase(0, "workers", ParticipantType, &[])
        .phrase(0, "workers", People, &[])
        .phrase(0, "gathered", EventType, &[])
        .phrase(0, "gathered", Demonstration, &[])
        .phrase(0, "in the square", FacilityType, &[])
        .phrase(0, "shouted slogans", EventMention, &[])
        .phrase(0, "shouted slogans", Demonstration, &[])
        .phrase(0, "Union Government", TargetType, &[])
        .phrase(0, "last year’s", EventTime, &[2])
        .phrase(0, "attack", EventType, &[2])
        .phrase(0, "attack", ArmedMilitancy, &[2])
        .phrase(0, "at the train station", FacilityType, &[2])
        .phrase(0, "militants", ParticipantType, &[2])
        .phrase(0, "militants", Militant, &[2])
        .phrase(0, "killed", EventMention, &[2])
        .phrase(0, "killed", ArmedMilitancy, &[2])
        .build()
        .unwrap()
}

/// A plural reference followed by two singular events, each with its own
/// place.
pub fn karnataka() -> DocumentRecord {
    DocumentBuilder::new("karnataka")
        .labels(DocumentLabels::protest())
        .sentence(
            "Karnataka State Government Employees Association engaged in a wave of demonstrations \
             across Karnataka yesterday , urging the government not to go ahead with the new \
             retirement scheme .",
            EVENT,
        )
        .sentence(
            "In Bangalore , hundreds of workers participated in the rally in front of the collectorate .",
            EVENT,
        )
        .sentence(
            "Mysore was also the scene of protest as around 3000 employees took to the streets .",
            EVENT,
        )
        .phrase(
            0,
            "Karnataka State Government Employees Association",
            OrganizerName,
            &[],
        )
        .phrase(0, "Karnataka State Government Employees Association", Union, &[])
        .phrase(0, "demonstrations", EventType, &[])
        .phrase(0, "demonstrations", Demonstration, &[])
        .nth_phrase(0, "Karnataka", 1, EventPlace, &[])
        .phrase(0, "yesterday", EventTime, &[])
        .phrase(1, "Bangalore", EventPlace, &[2])
        .phrase(1, "hundreds", ParticipantCount, &[2])
        .phrase(1, "workers", ParticipantType, &[2])
        .phrase(1, "workers", Worker, &[2])
        .phrase(1, "rally", EventType, &[2])
        .phrase(1, "rally", Demonstration, &[2])
        .phrase(1, "in front of the collectorate", FacilityType, &[2])
        .phrase(2, "Mysore", EventPlace, &[3])
        .phrase(2, "protest", EventMention, &[3])
        .phrase(2, "protest", Demonstration, &[3])
        .phrase(2, "3000", ParticipantCount, &[3])
        .phrase(2, "employees", ParticipantType, &[3])
        .phrase(2, "employees", Worker, &[3])
        .phrase(2, "took to the streets", EventType, &[3])
        .phrase(2, "took to the streets", Demonstration, &[3])
        .build()
        .unwrap()
}

pub struct RuleFixture {
    pub rule: RuleId,
    /// Triggers `rule` and nothing else.
    pub broken: DocumentRecord,
    /// The smallest change to `broken` that triggers nothing.
    pub fixed: DocumentRecord,
}

fn doc(id: &str) -> DocumentBuilder {
    DocumentBuilder::new(id).labels(DocumentLabels::protest())
}

/// `marched` as event 1's event_type with its category.
fn marched(b: DocumentBuilder, sentence: usize) -> DocumentBuilder {
    b.phrase(sentence, "marched", EventType, &[])
        .phrase(sentence, "marched", Demonstration, &[])
}

fn pair(rule: RuleId, make: impl Fn(bool) -> DocumentBuilder) -> RuleFixture {
    RuleFixture {
        rule,
        broken: make(true).build().unwrap(),
        fixed: make(false).build().unwrap(),
    }
}

pub fn rule_fixtures() -> Vec<RuleFixture> {
    let base = "Workers marched in Delhi on Monday .";
    vec![
        pair(RuleId::E010, |broken| {
            let b = marched(doc("e010").sentence(base, EVENT), 0)
                .sentence("It rained on Monday .", Some(SentenceLabel::NonEvent));
            let s = if broken { 1 } else { 0 };
            b.phrase(s, "on Monday", EventTime, &[])
        }),
        pair(RuleId::E020, |broken| {
            let b = marched(
                doc("e020")
                    .sentence("Delhi workers protest", None)
                    .sentence(base, EVENT),
                1,
            )
            .span(0, 0, 3, DocumentTitle, &[])
            .phrase(0, "Delhi", EventPlace, &[2]);
            if broken {
                b
            } else {
                b.phrase(0, "protest", EventType, &[2])
                    .phrase(0, "protest", Demonstration, &[2])
            }
        }),
        pair(RuleId::E021, |broken| {
            let b = marched(doc("e021").sentence("Workers marched and rallied in Delhi .", EVENT), 0);
            let tag = if broken { EventType } else { EventMention };
            b.phrase(0, "rallied", tag, &[])
                .phrase(0, "rallied", Demonstration, &[])
        }),
        pair(RuleId::E022, |broken| {
            let b = marched(doc("e022").sentence(base, EVENT), 0).phrase(0, "Workers", ParticipantType, &[]);
            if broken {
                b
            } else {
                b.phrase(0, "Workers", Worker, &[])
            }
        }),
        pair(RuleId::E023, |broken| {
            let b = marched(doc("e023").sentence("BKU members marched in Delhi .", EVENT), 0).phrase(
                0,
                "BKU",
                OrganizerName,
                &[],
            );
            if broken {
                b
            } else {
                b.phrase(0, "BKU", Union, &[])
            }
        }),
        pair(RuleId::E030, |broken| {
            let b = marched(doc("e030").sentence(base, EVENT), 0).phrase(0, "Delhi", EventPlace, &[]);
            b.phrase(0, if broken { "Delhi" } else { "on Monday" }, EventTime, &[])
        }),
        pair(RuleId::E050, |broken| {
            let labels = if broken {
                DocumentLabels::no_protest()
            } else {
                DocumentLabels::protest()
            };
            marched(DocumentBuilder::new("e050").labels(labels).sentence(base, None), 0)
        }),
        pair(RuleId::W101, |broken| {
            marched(doc("w101").sentence(base, EVENT), 0).phrase(
                0,
                if broken { "on Monday ." } else { "on Monday" },
                EventTime,
                &[],
            )
        }),
        pair(RuleId::W102, |broken| {
            marched(doc("w102").sentence("Workers marched in a park .", EVENT), 0).phrase(
                0,
                if broken { "a park" } else { "park" },
                FacilityType,
                &[],
            )
        }),
        pair(RuleId::W103, |broken| {
            marched(doc("w103").sentence("Workers marched in the square .", EVENT), 0).phrase(
                0,
                if broken { "the square" } else { "square" },
                FacilityType,
                &[],
            )
        }),
        pair(RuleId::W110, |broken| {
            let label = if broken {
                SentenceLabel::Event
            } else {
                SentenceLabel::NonEvent
            };
            marched(doc("w110").sentence(base, EVENT), 0).sentence("It was hot .", Some(label))
        }),
        pair(RuleId::W111, |broken| {
            let label = if broken {
                SentenceLabel::NonEvent
            } else {
                SentenceLabel::Event
            };
            marched(doc("w111").sentence(base, Some(label)), 0)
        }),
        pair(RuleId::W112, |broken| {
            let (ty, mention) = if broken {
                ("protest", "marched")
            } else {
                ("marched", "protest")
            };
            doc("w112")
                .sentence("Workers marched in Delhi ; the protest ended .", EVENT)
                .phrase(0, ty, EventType, &[])
                .phrase(0, ty, Demonstration, &[])
                .phrase(0, mention, EventMention, &[])
                .phrase(0, mention, Demonstration, &[])
        }),
        pair(RuleId::W120, |broken| {
            let b = marched(doc("w120").sentence("Workers marched to the city hall .", EVENT), 0).phrase(
                0,
                "city hall",
                FacilityType,
                &[],
            );
            if broken {
                b.phrase(0, "city", UrbanLocationIdentifier, &[])
            } else {
                b
            }
        }),
        pair(RuleId::W121, |broken| {
            let n = if broken { 3 } else { 2 };
            marched(doc("w121").sentence(base, EVENT), 0)
                .sentence("Farmers rallied in Pune .", EVENT)
                .phrase(1, "rallied", EventType, &[n])
                .phrase(1, "rallied", Demonstration, &[n])
                .phrase(1, "Pune", EventPlace, &[n])
        }),
        pair(RuleId::W122, |broken| {
            let b = doc("w122")
                .sentence(base, EVENT)
                .phrase(0, "marched", Demonstration, &[]);
            let trigger = Annotation::new(b.next_id(), EventType, TokenSpan::new(0, 1, 2).unwrap());
            let events = EventSet::single(1).unwrap();
            b.annotation(if broken {
                trigger.with_flat_events(events)
            } else {
                trigger.with_events(events)
            })
        }),
        pair(RuleId::W130, |broken| {
            marched(doc("w130").sentence("Workers marched in Delhi , India .", EVENT), 0).phrase(
                0,
                if broken { "India" } else { "Delhi" },
                EventPlace,
                &[],
            )
        }),
        pair(RuleId::W131, |broken| {
            marched(doc("w131").sentence("More than 500 workers marched .", EVENT), 0).phrase(
                0,
                if broken { "More than 500" } else { "500" },
                ParticipantCount,
                &[],
            )
        }),
        pair(RuleId::W140, |broken| {
            let second = if broken {
                "They marched in Delhi again ."
            } else {
                "They marched in Pune again ."
            };
            let place = if broken { "Delhi" } else { "Pune" };
            marched(doc("w140").sentence(base, EVENT), 0)
                .phrase(0, "Delhi", EventPlace, &[])
                .sentence(second, EVENT)
                .phrase(1, "marched", EventType, &[2])
                .phrase(1, "marched", Demonstration, &[2])
                .phrase(1, place, EventPlace, &[2])
        }),
        pair(RuleId::W141, |broken| {
            let events: &[u32] = if broken { &[2] } else { &[] };
            marched(doc("w141").sentence("Workers protest", None).sentence(base, EVENT), 1).span(
                0,
                0,
                2,
                DocumentTitle,
                events,
            )
        }),
        pair(RuleId::W142, |broken| {
            let category = if broken { IndustrialAction } else { Demonstration };
            marched(doc("w142").sentence("Workers marched and struck .", EVENT), 0)
                .phrase(0, "struck", EventMention, &[])
                .phrase(0, "struck", category, &[])
        }),
        pair(RuleId::W143, |broken| {
            let category = if broken { People } else { Worker };
            marched(doc("w143").sentence(base, EVENT), 0)
                .sentence("The workers shouted slogans .", EVENT)
                .phrase(0, "Workers", ParticipantType, &[])
                .phrase(0, "Workers", Worker, &[])
                .phrase(1, "shouted slogans", EventMention, &[])
                .phrase(1, "shouted slogans", Demonstration, &[])
                .phrase(1, "workers", ParticipantType, &[])
                .phrase(1, "workers", category, &[])
        }),
    ]
}
