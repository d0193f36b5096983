//! The rule catalog.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Diagnostic severity. Ordered `Info < Warning < Error`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Info,
    Warning,
    Error,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Severity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "info" => Ok(Severity::Info),
            "warning" => Ok(Severity::Warning),
            "error" => Ok(Severity::Error),
            other => Err(format!("unknown severity `{other}`")),
        }
    }
}

macro_rules! catalog {
    ($( $variant:ident, $severity:ident, $title:literal; )*) => {
        /// Stable rule identifier. `E` rules are errors and `W` rules
        /// warnings by default; W141 and W143 default to info.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum RuleId {
            $( $variant, )*
        }

        impl RuleId {
            pub const ALL: &'static [RuleId] = &[ $( RuleId::$variant, )* ];

            pub fn as_str(self) -> &'static str {
                match self {
                    $( RuleId::$variant => stringify!($variant), )*
                }
            }

            pub fn default_severity(self) -> Severity {
                match self {
                    $( RuleId::$variant => Severity::$severity, )*
                }
            }

            pub fn title(self) -> &'static str {
                match self {
                    $( RuleId::$variant => $title, )*
                }
            }
        }
    };
}

catalog! {
    E010, Error, "argument outside the event sentences of its event";
    E020, Error, "event referenced by arguments has no trigger";
    E021, Error, "event trigger discipline violated";
    E022, Error, "participant_type and participant semantic tag not paired";
    E023, Error, "organizer type/name and organizer semantic tag not paired";
    E030, Error, "overlapping annotations not licensed";
    E050, Error, "annotation or event label in a document without protest";
    W101, Warning, "span starts or ends with punctuation";
    W102, Warning, "span starts with an indefinite article";
    W103, Warning, "span starts with lowercase definite article";
    W110, Warning, "event sentence without a trigger";
    W111, Warning, "trigger in a sentence not labeled as event sentence";
    W112, Warning, "token event word tagged event_type";
    W120, Warning, "location identifier overlaps a facility";
    W121, Warning, "event numbers not contiguous from 1";
    W122, Warning, "explicit Event 1 comment";
    W130, Warning, "country tagged as event place";
    W131, Warning, "participant count includes an estimation qualifier";
    W140, Warning, "events indistinguishable on every separation axis";
    W141, Info, "event number used without triggers or arguments";
    W142, Warning, "triggers of one event carry different semantic categories";
    W143, Info, "same expression carries different actor semantic categories";
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule id `{0}`")]
pub struct UnknownRule(pub String);

impl FromStr for RuleId {
    type Err = UnknownRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleId::ALL
            .iter()
            .copied()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}

impl Serialize for RuleId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for RuleId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
