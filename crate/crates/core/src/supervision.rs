//! Distant supervision: labels temporal relations by aligning them with the
//! sentences of a textual biography.
//!
//! A relation is relevant when a single sentence mentions both its object and
//! a four-digit year inside the relation's validity (year granularity, open
//! bounds unbounded). Entity objects are mentioned by their label or any
//! alias; date literals are mentioned by the property label. Names are
//! compared as whole token sequences after [`normalize`].

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::kg::{EntityId, FactObject, TemporalKg};
use crate::relation::{extract_relations, RelationError, TemporalRelation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SupervisionError {
    #[error("relation subject `{found}` does not match biography person `{expected}`")]
    PersonMismatch { expected: String, found: String },
    #[error(transparent)]
    Relation(#[from] RelationError),
}

/// Corpus flavor a biography (and a model) comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Wikipedia,
    BioWeb,
}

impl Source {
    pub const ALL: [Source; 2] = [Source::Wikipedia, Source::BioWeb];

    pub fn as_str(self) -> &'static str {
        match self {
            Source::Wikipedia => "wikipedia",
            Source::BioWeb => "bio_web",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown source `{0}` (expected wikipedia or bio_web)")]
pub struct UnknownSource(pub String);

impl FromStr for Source {
    type Err = UnknownSource;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Source::ALL.into_iter().find(|src| src.as_str() == s).ok_or_else(|| UnknownSource(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiographyDoc {
    pub person: EntityId,
    pub source: Source,
    pub sentences: Vec<String>,
}

impl BiographyDoc {
    /// One sentence per line; blank lines are dropped.
    pub fn from_lines(person: EntityId, source: Source, text: &str) -> Self {
        let sentences = text.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect();
        Self { person, source, sentences }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evidence {
    pub sentence: usize,
    /// Normalized name (or property label) that matched.
    pub label: String,
    pub year: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledRelation {
    pub relation: TemporalRelation,
    pub source: Source,
    pub relevant: bool,
    pub evidence: Option<Evidence>,
}

/// Lowercases, turns every non-alphanumeric character into a separator and
/// splits on whitespace.
pub fn normalize(text: &str) -> Vec<String> {
    let mut cleaned = String::with_capacity(text.len());
    for c in text.chars() {
        if c.is_alphanumeric() {
            cleaned.extend(c.to_lowercase());
        } else {
            cleaned.push(' ');
        }
    }
    cleaned.split_whitespace().map(String::from).collect()
}

fn contains_sequence(haystack: &[String], needle: &[String]) -> bool {
    !needle.is_empty() && haystack.windows(needle.len()).any(|w| w == needle)
}

fn year_token(token: &str) -> Option<i32> {
    (token.len() == 4 && token.bytes().all(|b| b.is_ascii_digit())).then(|| token.parse().ok()).flatten()
}

/// Normalized names a sentence may use to mention the relation's object.
fn mention_names(kg: &TemporalKg, relation: &TemporalRelation) -> Vec<Vec<String>> {
    match &relation.object {
        FactObject::Date(_) => alloc::vec![normalize(&relation.property_label)],
        FactObject::Entity(id) => match kg.entity(id.as_str()) {
            Some(entity) => entity.names().map(normalize).collect(),
            None => kg.node(id.as_str()).map(|n| alloc::vec![normalize(n.label())]).unwrap_or_default(),
        },
    }
}

/// Tries to align `relation` with one tokenized sentence.
fn match_sentence(names: &[Vec<String>], relation: &TemporalRelation, tokens: &[String]) -> Option<(String, i32)> {
    let year = tokens.iter().filter_map(|t| year_token(t)).find(|&y| relation.validity.contains_year(y))?;
    let name = names.iter().find(|n| contains_sequence(tokens, n))?;
    Some((name.join(" "), year))
}

/// Labels `relations` (all extracted for `doc.person`) against the biography.
pub fn label_relations(
    kg: &TemporalKg,
    doc: &BiographyDoc,
    relations: &[TemporalRelation],
) -> Result<Vec<LabeledRelation>, SupervisionError> {
    if let Some(bad) = relations.iter().find(|r| r.subject != doc.person) {
        return Err(SupervisionError::PersonMismatch {
            expected: doc.person.to_string(),
            found: bad.subject.to_string(),
        });
    }
    let sentences: Vec<Vec<String>> = doc.sentences.iter().map(|s| normalize(s)).collect();

    Ok(relations
        .iter()
        .map(|relation| {
            let names = mention_names(kg, relation);
            let evidence = sentences.iter().enumerate().find_map(|(idx, tokens)| {
                match_sentence(&names, relation, tokens).map(|(label, year)| Evidence { sentence: idx, label, year })
            });
            LabeledRelation { relation: relation.clone(), source: doc.source, relevant: evidence.is_some(), evidence }
        })
        .collect())
}

/// Whether `sentence` alone supports `relation`.
pub fn sentence_supports(kg: &TemporalKg, relation: &TemporalRelation, sentence: &str) -> Option<(String, i32)> {
    match_sentence(&mention_names(kg, relation), relation, &normalize(sentence))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceSummary {
    pub persons: usize,
    pub relations: usize,
    pub positives: usize,
}

impl SourceSummary {
    pub fn positive_fraction(&self) -> f64 {
        if self.relations == 0 {
            0.0
        } else {
            self.positives as f64 / self.relations as f64
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Benchmark {
    /// Grouped by source, then person id, then timeline order.
    pub records: Vec<LabeledRelation>,
    pub warnings: Vec<String>,
}

impl Benchmark {
    pub fn for_source(&self, source: Source) -> impl Iterator<Item = &LabeledRelation> {
        self.records.iter().filter(move |r| r.source == source)
    }

    pub fn summary(&self, source: Source) -> SourceSummary {
        let mut persons: Vec<&EntityId> = Vec::new();
        let mut summary = SourceSummary::default();
        for record in self.for_source(source) {
            if persons.last() != Some(&&record.relation.subject) {
                persons.push(&record.relation.subject);
            }
            summary.relations += 1;
            summary.positives += usize::from(record.relevant);
        }
        persons.dedup();
        summary.persons = persons.len();
        summary
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// Labels every document. Documents whose person is unknown (or not a
/// person) are skipped with a warning.
pub fn build_benchmark(kg: &TemporalKg, docs: &[BiographyDoc]) -> Result<Benchmark, SupervisionError> {
    let mut order: Vec<&BiographyDoc> = docs.iter().collect();
    order.sort_by(|a, b| (a.source, &a.person).cmp(&(b.source, &b.person)));

    let mut bench = Benchmark::default();
    for doc in order {
        let relations = match extract_relations(kg, doc.person.as_str()) {
            Ok(r) => r,
            Err(RelationError::UnknownPerson(id)) => {
                bench.warnings.push(alloc::format!("{}: unknown person `{id}`, skipped", doc.source));
                continue;
            }
            Err(RelationError::NotAPerson(id)) => {
                bench.warnings.push(alloc::format!("{}: `{id}` is not a person, skipped", doc.source));
                continue;
            }
        };
        bench.records.extend(label_relations(kg, doc, &relations)?);
    }
    Ok(bench)
}
