//! Lint configuration and lexicons.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::path::Path;

use serde::Deserialize;

use super::{RuleId, Severity};

const DEFAULT_COUNTRIES: &str = include_str!("countries_en.txt");

/// Word lists the span rules consult. One set per corpus language.
///
/// Matching is case-insensitive except for definite articles, where only
/// the exact listed spelling (lowercase `the` by default) is flagged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicons {
    articles_indefinite: HashSet<String>,
    articles_definite: HashSet<String>,
    estimation_qualifiers: Vec<Vec<String>>,
    token_event_words: HashSet<String>,
    countries: HashSet<String>,
}

impl Default for Lexicons {
    /// English lists and the bundled country gazetteer.
    fn default() -> Self {
        Lexicons::new(
            ["a", "an"],
            ["the"],
            ["more than", "nearly", "as many as", "about", "over"],
            ["incident", "event", "protest", "agitation"],
            DEFAULT_COUNTRIES.lines().map(str::trim).filter(|l| !l.is_empty()),
        )
    }
}

impl Lexicons {
    pub fn new<'a>(
        articles_indefinite: impl IntoIterator<Item = &'a str>,
        articles_definite: impl IntoIterator<Item = &'a str>,
        estimation_qualifiers: impl IntoIterator<Item = &'a str>,
        token_event_words: impl IntoIterator<Item = &'a str>,
        countries: impl IntoIterator<Item = &'a str>,
    ) -> Self {
        let lower =
            |it: &mut dyn Iterator<Item = &'a str>| -> HashSet<String> { it.map(|w| w.to_lowercase()).collect() };
        Lexicons {
            articles_indefinite: lower(&mut articles_indefinite.into_iter()),
            articles_definite: articles_definite.into_iter().map(String::from).collect(),
            estimation_qualifiers: estimation_qualifiers
                .into_iter()
                .map(|q| q.split_whitespace().map(str::to_lowercase).collect::<Vec<_>>())
                .filter(|q| !q.is_empty())
                .collect(),
            token_event_words: lower(&mut token_event_words.into_iter()),
            countries: countries.into_iter().map(normalize_phrase).collect(),
        }
    }

    pub fn is_indefinite_article(&self, token: &str) -> bool {
        self.articles_indefinite.contains(&token.to_lowercase())
    }

    pub fn is_definite_article(&self, token: &str) -> bool {
        self.articles_definite.contains(token)
    }

    pub fn is_token_event_word(&self, text: &str) -> bool {
        self.token_event_words.contains(&normalize_phrase(text))
    }

    pub fn is_country(&self, text: &str) -> bool {
        self.countries.contains(&normalize_phrase(text))
    }

    /// The estimation qualifier that `tokens` begin with, if any.
    pub fn leading_qualifier(&self, tokens: &[String]) -> Option<String> {
        self.estimation_qualifiers
            .iter()
            .find(|q| q.len() <= tokens.len() && q.iter().zip(tokens).all(|(q, t)| *q == t.to_lowercase()))
            .map(|q| q.join(" "))
    }
}

fn normalize_phrase(text: &str) -> String {
    text.split_whitespace()
        .map(str::to_lowercase)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Rule selection, severity overrides and lexicons.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LintConfig {
    pub severity_overrides: BTreeMap<RuleId, Severity>,
    pub disabled_rules: BTreeSet<RuleId>,
    pub lexicons: Lexicons,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid config: {0}")]
    Invalid(#[from] serde_json::Error),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    severity_overrides: BTreeMap<RuleId, Severity>,
    #[serde(default)]
    disabled_rules: BTreeSet<RuleId>,
    #[serde(default)]
    lexicons: RawLexicons,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawLexicons {
    articles_indefinite: Option<Vec<String>>,
    articles_definite: Option<Vec<String>>,
    estimation_qualifiers: Option<Vec<String>>,
    token_event_words: Option<Vec<String>>,
    countries: Option<Vec<String>>,
}

fn pick(given: &Option<Vec<String>>) -> Option<Vec<&str>> {
    given.as_ref().map(|v| v.iter().map(String::as_str).collect())
}

impl LintConfig {
    pub fn severity(&self, rule: RuleId) -> Severity {
        self.severity_overrides
            .get(&rule)
            .copied()
            .unwrap_or_else(|| rule.default_severity())
    }

    pub fn is_enabled(&self, rule: RuleId) -> bool {
        !self.disabled_rules.contains(&rule)
    }

    pub fn disable(mut self, rule: RuleId) -> Self {
        self.disabled_rules.insert(rule);
        self
    }

    /// Parse the JSON config format. Lexicon lists that are left out keep
    /// their English defaults; unknown keys and rule ids are rejected.
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let raw: RawConfig = serde_json::from_str(text)?;
        let defaults = Lexicons::default();
        let l = raw.lexicons;
        let lexicons = Lexicons {
            articles_indefinite: match pick(&l.articles_indefinite) {
                Some(v) => Lexicons::new(v, [], [], [], []).articles_indefinite,
                None => defaults.articles_indefinite,
            },
            articles_definite: match pick(&l.articles_definite) {
                Some(v) => Lexicons::new([], v, [], [], []).articles_definite,
                None => defaults.articles_definite,
            },
            estimation_qualifiers: match pick(&l.estimation_qualifiers) {
                Some(v) => Lexicons::new([], [], v, [], []).estimation_qualifiers,
                None => defaults.estimation_qualifiers,
            },
            token_event_words: match pick(&l.token_event_words) {
                Some(v) => Lexicons::new([], [], [], v, []).token_event_words,
                None => defaults.token_event_words,
            },
            countries: match pick(&l.countries) {
                Some(v) => Lexicons::new([], [], [], [], v).countries,
                None => defaults.countries,
            },
        };
        Ok(LintConfig {
            severity_overrides: raw.severity_overrides,
            disabled_rules: raw.disabled_rules,
            lexicons,
        })
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tokens(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn english_defaults() {
        let l = Lexicons::default();
        assert!(l.is_indefinite_article("An"));
        assert!(l.is_definite_article("the"));
        assert!(!l.is_definite_article("The"));
        assert!(l.is_token_event_word("Incident"));
        assert!(!l.is_token_event_word("rally"));
        assert!(l.is_country("india"));
        assert!(l.is_country("South  Africa"));
        assert!(!l.is_country("Karnataka"));
        assert_eq!(l.leading_qualifier(&tokens("As many as 50")), Some("as many as".into()));
        assert_eq!(l.leading_qualifier(&tokens("as many")), None);
        assert_eq!(l.leading_qualifier(&tokens("800")), None);
    }

    #[test]
    fn json_config() {
        let cfg = LintConfig::from_json(
            r#"{"severity_overrides":{"W101":"error"},"disabled_rules":["W103"],
                "lexicons":{"articles_indefinite":["un","una"],"countries":["Brasil"]}}"#,
        )
        .unwrap();
        assert_eq!(cfg.severity(RuleId::W101), Severity::Error);
        assert_eq!(cfg.severity(RuleId::W102), Severity::Warning);
        assert!(!cfg.is_enabled(RuleId::W103));
        assert!(cfg.lexicons.is_indefinite_article("Una"));
        assert!(!cfg.lexicons.is_indefinite_article("a"));
        assert!(cfg.lexicons.is_country("brasil"));
        assert!(!cfg.lexicons.is_country("India"));
        assert!(cfg.lexicons.is_token_event_word("protest"));
    }

    #[test]
    fn unknown_keys_and_rules_are_rejected() {
        assert!(LintConfig::from_json(r#"{"disabled_rules":["X001"]}"#).is_err());
        assert!(LintConfig::from_json(r#"{"severity_overrides":{"W101":"fatal"}}"#).is_err());
        assert!(LintConfig::from_json(r#"{"rules":[]}"#).is_err());
        assert!(LintConfig::from_json(r#"{"lexicons":{"verbs":[]}}"#).is_err());
        assert_eq!(LintConfig::from_json("{}").unwrap(), LintConfig::default());
    }
}
