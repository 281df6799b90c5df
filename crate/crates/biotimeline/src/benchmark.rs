//! Benchmark JSON lines: one labeled relation per line.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use biotimeline_core::{
    extract_relations, EntityId, LabeledRelation, RelationError, RelationKind, Source, TemporalKg, TemporalRelation,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchmarkRecord {
    pub person: EntityId,
    pub source: Source,
    pub property: String,
    /// Entity id, or the date in dump form for date objects.
    pub object: String,
    pub object_kind: String,
    pub start: Option<String>,
    pub end: Option<String>,
    pub kind: RelationKind,
    pub relevant: bool,
    /// Index of the first supporting sentence.
    pub evidence_sentence: Option<usize>,
    pub matched_year: Option<i32>,
}

fn object_repr(rel: &TemporalRelation) -> String {
    match rel.object.date() {
        Some(date) => date.dump_form(),
        None => rel.object.key(),
    }
}

impl From<&LabeledRelation> for BenchmarkRecord {
    fn from(labeled: &LabeledRelation) -> Self {
        let rel = &labeled.relation;
        BenchmarkRecord {
            person: rel.subject.clone(),
            source: labeled.source,
            property: rel.property.clone(),
            object: object_repr(rel),
            object_kind: rel.object.kind_name().into(),
            start: rel.validity.start.map(|d| d.dump_form()),
            end: rel.validity.end.map(|d| d.dump_form()),
            kind: rel.kind,
            relevant: labeled.relevant,
            evidence_sentence: labeled.evidence.as_ref().map(|e| e.sentence),
            matched_year: labeled.evidence.as_ref().map(|e| e.year),
        }
    }
}

impl BenchmarkRecord {
    fn matches(&self, rel: &TemporalRelation) -> bool {
        self.property == rel.property
            && self.kind == rel.kind
            && self.object_kind == rel.object.kind_name()
            && self.object == object_repr(rel)
            && self.start == rel.validity.start.map(|d| d.dump_form())
            && self.end == rel.validity.end.map(|d| d.dump_form())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum BenchmarkError {
    #[error("benchmark line {line}: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },
    #[error("benchmark line {line}: {source}")]
    Person {
        line: usize,
        #[source]
        source: RelationError,
    },
    #[error("benchmark line {line}: no matching relation of `{person}` in the graph")]
    UnknownRelation { line: usize, person: String },
}

/// One JSON object per line, each terminated by a newline.
pub fn to_jsonl(records: &[LabeledRelation]) -> String {
    let mut out = String::new();
    for record in records {
        out.push_str(&serde_json::to_string(&BenchmarkRecord::from(record)).expect("record serializes"));
        out.push('\n');
    }
    out
}

/// Parses JSON lines; blank lines are ignored.
pub fn parse_jsonl(text: &str) -> Result<Vec<(usize, BenchmarkRecord)>, BenchmarkError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map(|r| (i + 1, r)).map_err(|source| BenchmarkError::Json { line: i + 1, source })
        })
        .collect()
}

/// A benchmark line joined back to its relation in the graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedRecord {
    pub relation: TemporalRelation,
    pub source: Source,
    pub relevant: bool,
}

/// Re-extracts each person's relations and pairs every record with the
/// relation it describes.
pub fn resolve(kg: &TemporalKg, records: &[(usize, BenchmarkRecord)]) -> Result<Vec<ResolvedRecord>, BenchmarkError> {
    let mut extracted: BTreeMap<&str, Vec<TemporalRelation>> = BTreeMap::new();
    let mut out = Vec::with_capacity(records.len());
    for (line, record) in records {
        let person = record.person.as_str();
        if !extracted.contains_key(person) {
            let rels =
                extract_relations(kg, person).map_err(|source| BenchmarkError::Person { line: *line, source })?;
            extracted.insert(person, rels);
        }
        let relation = extracted[person]
            .iter()
            .find(|r| record.matches(r))
            .ok_or_else(|| BenchmarkError::UnknownRelation { line: *line, person: person.into() })?;
        out.push(ResolvedRecord { relation: relation.clone(), source: record.source, relevant: record.relevant });
    }
    Ok(out)
}
