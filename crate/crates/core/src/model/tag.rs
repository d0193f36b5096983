//! The closed token-level tagset and its annotation foci.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Annotation focus a tag belongs to.
///
/// The annotation editor groups tags into event, participant, organizer,
/// target and semantic foci. Document information tags and the three kinds
/// of semantic category are kept apart here because every rule treats them
/// differently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Focus {
    DocInfo,
    Event,
    EventSemantic,
    Participant,
    ParticipantSemantic,
    Organizer,
    OrganizerSemantic,
    Target,
}

impl Focus {
    pub fn is_semantic(self) -> bool {
        matches!(
            self,
            Focus::EventSemantic | Focus::ParticipantSemantic | Focus::OrganizerSemantic
        )
    }
}

macro_rules! tagset {
    ($( $variant:ident => $name:literal, $focus:ident; )*) => {
        /// Canonical tag identifier.
        ///
        /// Declaration order is the canonical sort order used for annotations.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TagId {
            $( $variant, )*
        }

        impl TagId {
            pub const ALL: &'static [TagId] = &[ $( TagId::$variant, )* ];

            /// Canonical lower_snake_case name.
            pub fn as_str(self) -> &'static str {
                match self {
                    $( TagId::$variant => $name, )*
                }
            }

            pub fn focus(self) -> Focus {
                match self {
                    $( TagId::$variant => Focus::$focus, )*
                }
            }

            fn from_canonical(name: &str) -> Option<TagId> {
                match name {
                    $( $name => Some(TagId::$variant), )*
                    _ => None,
                }
            }
        }
    };
}

tagset! {
    DocumentTitle => "document_title", DocInfo;
    EventTimePublished => "event_time_published", DocInfo;
    EventPlacePublished => "event_place_published", DocInfo;

    EventType => "event_type", Event;
    EventMention => "event_mention", Event;
    EventTime => "event_time", Event;
    EventPlace => "event_place", Event;
    FacilityType => "facility_type", Event;
    FacilityName => "facility_name", Event;
    UrbanLocationIdentifier => "urban_location_identifier", Event;
    RuralLocationIdentifier => "rural_location_identifier", Event;

    Demonstration => "demonstration", EventSemantic;
    IndustrialAction => "industrial_action", EventSemantic;
    GroupClash => "group_clash", EventSemantic;
    ArmedMilitancy => "armed_militancy", EventSemantic;
    ElectoralPolitics => "electoral_politics", EventSemantic;
    OtherEvent => "other_event", EventSemantic;

    ParticipantType => "participant_type", Participant;
    ParticipantName => "participant_name", Participant;
    ParticipantCount => "participant_count", Participant;
    ParticipantIdeology => "participant_ideology", Participant;
    ParticipantEthnicity => "participant_ethnicity", Participant;
    ParticipantReligion => "participant_religion", Participant;
    ParticipantCaste => "participant_caste", Participant;
    ParticipantSes => "participant_ses", Participant;

    Peasant => "peasant", ParticipantSemantic;
    Worker => "worker", ParticipantSemantic;
    SmallProducer => "small_producer", ParticipantSemantic;
    EmployerExecutive => "employer_executive", ParticipantSemantic;
    Professional => "professional", ParticipantSemantic;
    Student => "student", ParticipantSemantic;
    Politician => "politician", ParticipantSemantic;
    Activist => "activist", ParticipantSemantic;
    Militant => "militant", ParticipantSemantic;
    People => "people", ParticipantSemantic;
    OtherParticipant => "other_participant", ParticipantSemantic;

    OrganizerType => "organizer_type", Organizer;
    OrganizerName => "organizer_name", Organizer;
    OrganizerIdeology => "organizer_ideology", Organizer;
    OrganizerEthnicity => "organizer_ethnicity", Organizer;
    OrganizerReligion => "organizer_religion", Organizer;
    OrganizerCaste => "organizer_caste", Organizer;
    OrganizerSes => "organizer_ses", Organizer;

    PoliticalParty => "political_party", OrganizerSemantic;
    Ngo => "ngo", OrganizerSemantic;
    Union => "union", OrganizerSemantic;
    MilitantArmedOrganization => "militant_armed_organization", OrganizerSemantic;
    ChamberOfProfessionals => "chamber_of_professionals", OrganizerSemantic;
    Person => "person", OrganizerSemantic;
    OtherOrganizer => "other_organizer", OrganizerSemantic;

    TargetType => "target_type", Target;
    TargetName => "target_name", Target;
}

/// Legacy spellings and FLAT export spellings that map
/// onto a canonical tag. Matching is exact.
const ALIASES: &[(&str, TagId)] = &[
    ("participant_SES", TagId::ParticipantSes),
    ("organizer_SES", TagId::OrganizerSes),
    ("Organizer_ideology", TagId::OrganizerIdeology),
    ("e_time", TagId::EventTime),
    ("e_type", TagId::EventType),
    ("e_mention", TagId::EventMention),
    ("e_place", TagId::EventPlace),
    ("f_type", TagId::FacilityType),
    ("f_name", TagId::FacilityName),
    ("org_name", TagId::OrganizerName),
    ("org_type", TagId::OrganizerType),
    ("part_type", TagId::ParticipantType),
    ("part_name", TagId::ParticipantName),
    ("industrial action", TagId::IndustrialAction),
    ("group clash", TagId::GroupClash),
    ("armed militancy", TagId::ArmedMilitancy),
    ("electoral politics", TagId::ElectoralPolitics),
    ("small producer", TagId::SmallProducer),
    ("employer/executive", TagId::EmployerExecutive),
    ("political party", TagId::PoliticalParty),
    ("militant/armed organization", TagId::MilitantArmedOrganization),
    ("chamber of professionals", TagId::ChamberOfProfessionals),
];

/// Tag name outside the canonical set and the alias table.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown tag `{0}`")]
pub struct UnknownTag(pub String);

impl FromStr for TagId {
    type Err = UnknownTag;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TagId::from_canonical(s)
            .or_else(|| ALIASES.iter().find(|(alias, _)| *alias == s).map(|&(_, tag)| tag))
            .ok_or_else(|| UnknownTag(s.to_string()))
    }
}

impl TagId {
    pub fn is_trigger(self) -> bool {
        matches!(self, TagId::EventType | TagId::EventMention)
    }

    pub fn is_semantic(self) -> bool {
        self.focus().is_semantic()
    }

    pub fn is_facility(self) -> bool {
        matches!(self, TagId::FacilityType | TagId::FacilityName)
    }

    pub fn is_target(self) -> bool {
        matches!(self, TagId::TargetType | TagId::TargetName)
    }

    pub fn is_location_identifier(self) -> bool {
        matches!(self, TagId::UrbanLocationIdentifier | TagId::RuralLocationIdentifier)
    }

    /// Event arguments: every tag that is neither document information,
    /// a trigger, nor a semantic category.
    pub fn is_argument(self) -> bool {
        !self.is_trigger() && !self.is_semantic() && self.focus() != Focus::DocInfo
    }

    pub fn is_participant_attribute(self) -> bool {
        matches!(
            self,
            TagId::ParticipantIdeology
                | TagId::ParticipantEthnicity
                | TagId::ParticipantReligion
                | TagId::ParticipantCaste
                | TagId::ParticipantSes
        )
    }

    pub fn is_organizer_attribute(self) -> bool {
        matches!(
            self,
            TagId::OrganizerIdeology
                | TagId::OrganizerEthnicity
                | TagId::OrganizerReligion
                | TagId::OrganizerCaste
                | TagId::OrganizerSes
        )
    }

    pub fn is_organizer_head(self) -> bool {
        matches!(self, TagId::OrganizerType | TagId::OrganizerName)
    }

    /// Whether `host` can carry a semantic tag of this kind.
    ///
    /// Event categories sit on triggers, participant categories on
    /// `participant_type`, organizer categories on `organizer_type` and
    /// `organizer_name`. Returns false when `self` is not a semantic tag.
    pub fn is_semantic_host(self, host: TagId) -> bool {
        match self.focus() {
            Focus::EventSemantic => host.is_trigger(),
            Focus::ParticipantSemantic => host == TagId::ParticipantType,
            Focus::OrganizerSemantic => host.is_organizer_head(),
            _ => false,
        }
    }

    /// Focus of semantic tags this tag hosts, if it is a host at all.
    pub fn hosted_semantic_focus(self) -> Option<Focus> {
        if self.is_trigger() {
            Some(Focus::EventSemantic)
        } else if self == TagId::ParticipantType {
            Some(Focus::ParticipantSemantic)
        } else if self.is_organizer_head() {
            Some(Focus::OrganizerSemantic)
        } else {
            None
        }
    }

    /// `*_type` / `*_name` pairs of one entity family. A type tag may never
    /// overlap the name tag of its own family.
    pub fn is_type_name_pair(self, other: TagId) -> bool {
        use TagId::*;
        matches!(
            (self, other),
            (FacilityType, FacilityName)
                | (FacilityName, FacilityType)
                | (ParticipantType, ParticipantName)
                | (ParticipantName, ParticipantType)
                | (OrganizerType, OrganizerName)
                | (OrganizerName, OrganizerType)
                | (TargetType, TargetName)
                | (TargetName, TargetType)
        )
    }
}

pub fn focus_of(tag: TagId) -> Focus {
    tag.focus()
}

impl fmt::Display for TagId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TagId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for TagId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let name = String::deserialize(deserializer)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}
