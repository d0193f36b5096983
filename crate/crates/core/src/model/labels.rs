//! Document and sentence level label vocabularies.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::ModelError;

macro_rules! label_enum {
    ($(#[$meta:meta])* $name:ident { $( $variant:ident => $text:literal ),* $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        pub enum $name {
            $( #[serde(rename = $text)] $variant, )*
        }

        impl $name {
            pub const ALL: &'static [$name] = &[ $( $name::$variant, )* ];

            pub fn as_str(self) -> &'static str {
                match self {
                    $( $name::$variant => $text, )*
                }
            }
        }

        impl FromStr for $name {
            type Err = ModelError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $( $text => Ok($name::$variant), )*
                    other => Err(ModelError::BadLabel(format!(
                        concat!("`{}` is not a valid ", stringify!($name)),
                        other
                    ))),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

label_enum! {
    /// Whether the article reports at least one protest event.
    ProtestLabel { Protest => "protest", NoProtest => "no_protest" }
}

label_enum! {
    /// Whether some protest event in the article is violent.
    ViolenceLabel { Violent => "violent", NonViolent => "non_violent" }
}

label_enum! {
    /// The demand category of the first appearing event.
    DemandLabel {
        NonEconomic => "non_economic",
        EconomicNonWelfare => "economic_non_welfare",
        EconomicWelfare => "economic_welfare",
    }
}

/// Sentence label: past or ongoing events are 1, planned events 2, the rest 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SentenceLabel {
    NonEvent,
    Event,
    Planned,
}

impl SentenceLabel {
    pub const ALL: &'static [SentenceLabel] = &[SentenceLabel::NonEvent, SentenceLabel::Event, SentenceLabel::Planned];

    pub fn code(self) -> u8 {
        match self {
            SentenceLabel::NonEvent => 0,
            SentenceLabel::Event => 1,
            SentenceLabel::Planned => 2,
        }
    }

    pub fn from_code(code: u64) -> Result<Self, ModelError> {
        match code {
            0 => Ok(SentenceLabel::NonEvent),
            1 => Ok(SentenceLabel::Event),
            2 => Ok(SentenceLabel::Planned),
            other => Err(ModelError::BadLabel(format!(
                "sentence label must be 0, 1 or 2, got {other}"
            ))),
        }
    }
}

impl Serialize for SentenceLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.code())
    }
}

impl fmt::Display for SentenceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// The three document level labels.
///
/// Violence and demand labels only exist for protest documents; the
/// constructor refuses anything else.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct DocumentLabels {
    protest: Option<ProtestLabel>,
    violent: Option<ViolenceLabel>,
    demand: Option<DemandLabel>,
}

impl DocumentLabels {
    pub fn new(
        protest: Option<ProtestLabel>,
        violent: Option<ViolenceLabel>,
        demand: Option<DemandLabel>,
    ) -> Result<Self, ModelError> {
        if protest != Some(ProtestLabel::Protest) {
            if violent.is_some() {
                return Err(ModelError::BadLabel(
                    "violence label set on a document not labeled protest".into(),
                ));
            }
            if demand.is_some() {
                return Err(ModelError::BadLabel(
                    "demand label set on a document not labeled protest".into(),
                ));
            }
        }
        Ok(DocumentLabels {
            protest,
            violent,
            demand,
        })
    }

    pub fn protest() -> Self {
        DocumentLabels {
            protest: Some(ProtestLabel::Protest),
            ..Self::default()
        }
    }

    pub fn no_protest() -> Self {
        DocumentLabels {
            protest: Some(ProtestLabel::NoProtest),
            ..Self::default()
        }
    }

    pub fn protest_label(&self) -> Option<ProtestLabel> {
        self.protest
    }

    pub fn violent(&self) -> Option<ViolenceLabel> {
        self.violent
    }

    pub fn demand(&self) -> Option<DemandLabel> {
        self.demand
    }

    pub fn is_protest(&self) -> bool {
        self.protest == Some(ProtestLabel::Protest)
    }
}
