use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{AgreementError, Pairing};
use crate::model::{DemandLabel, DocumentRecord, ProtestLabel, SentenceLabel, ViolenceLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KappaLevel {
    DocProtest,
    DocViolent,
    DocDemand,
    Sentence,
}

impl KappaLevel {
    pub const ALL: [KappaLevel; 4] = [
        KappaLevel::DocProtest,
        KappaLevel::DocViolent,
        KappaLevel::DocDemand,
        KappaLevel::Sentence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            KappaLevel::DocProtest => "doc_protest",
            KappaLevel::DocViolent => "doc_violent",
            KappaLevel::DocDemand => "doc_demand",
            KappaLevel::Sentence => "sentence",
        }
    }

    /// The level's label vocabulary, in a fixed order.
    pub fn categories(self) -> Vec<&'static str> {
        match self {
            KappaLevel::DocProtest => ProtestLabel::ALL.iter().map(|l| l.as_str()).collect(),
            KappaLevel::DocViolent => ViolenceLabel::ALL.iter().map(|l| l.as_str()).collect(),
            KappaLevel::DocDemand => DemandLabel::ALL.iter().map(|l| l.as_str()).collect(),
            KappaLevel::Sentence => vec!["0", "1", "2"],
        }
    }

    /// Category index of `doc`'s label, one entry per item at this level.
    fn items(self, doc: &DocumentRecord) -> Vec<Option<usize>> {
        let labels = doc.labels();
        match self {
            KappaLevel::DocProtest => vec![labels.protest_label().map(|l| l as usize)],
            KappaLevel::DocViolent => vec![labels.violent().map(|l| l as usize)],
            KappaLevel::DocDemand => vec![labels.demand().map(|l| l as usize)],
            KappaLevel::Sentence => doc
                .sentences()
                .iter()
                .map(|s| s.label().map(|l: SentenceLabel| l.code() as usize))
                .collect(),
        }
    }
}

impl fmt::Display for KappaLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for KappaLevel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        KappaLevel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown level `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KappaResult {
    pub level: KappaLevel,
    pub kappa: f64,
    pub observed_agreement: f64,
    pub expected_agreement: f64,
    pub categories: Vec<&'static str>,
    /// `confusion[i][j]`: items labeled `categories[i]` in a and
    /// `categories[j]` in b.
    pub confusion: Vec<Vec<u64>>,
    pub n: u64,
    /// Items left out because one side has no label.
    pub skipped: usize,
}

/// Cohen's kappa over the items of `level` labeled on both sides.
///
/// Computed from integer counts as
/// `(n * agreed - sum(a_i * b_i)) / (n^2 - sum(a_i * b_i))`, which is
/// `(p_o - p_e) / (1 - p_e)`. When `p_e = 1` both annotators used one
/// category throughout and kappa is reported as 1.
pub fn label_kappa(pairs: &Pairing<'_>, level: KappaLevel) -> Result<KappaResult, AgreementError> {
    let categories = level.categories();
    let k = categories.len();
    let mut confusion = vec![vec![0u64; k]; k];
    let mut skipped = 0;
    for (a, b) in &pairs.pairs {
        for (x, y) in level.items(a).into_iter().zip(level.items(b)) {
            match (x, y) {
                (Some(x), Some(y)) => confusion[x][y] += 1,
                _ => skipped += 1,
            }
        }
    }
    let n: u64 = confusion.iter().flatten().sum();
    if n == 0 {
        return Err(AgreementError::NoItems { level, skipped });
    }
    let agreed: u64 = (0..k).map(|i| confusion[i][i]).sum();
    let chance: u128 = (0..k)
        .map(|i| {
            let row: u64 = confusion[i].iter().sum();
            let col: u64 = confusion.iter().map(|r| r[i]).sum();
            row as u128 * col as u128
        })
        .sum();
    let n2 = n as u128 * n as u128;
    let kappa = if chance == n2 {
        1.0
    } else {
        let num = (n as u128 * agreed as u128) as i128 - chance as i128;
        num as f64 / (n2 - chance) as f64
    };
    Ok(KappaResult {
        level,
        kappa,
        observed_agreement: agreed as f64 / n as f64,
        expected_agreement: chance as f64 / n2 as f64,
        categories,
        confusion,
        n,
        skipped,
    })
}
