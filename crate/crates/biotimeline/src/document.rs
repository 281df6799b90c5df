//! JSON documents served by the API and written by the CLI.

use std::collections::BTreeSet;

use chrono::{DateTime, SecondsFormat, Utc};
use serde::{Deserialize, Serialize};

use biotimeline_core::timeline::object_label;
use biotimeline_core::{
    DateInterval, Entity, EntityId, Event, GeoPoint, Source, TemporalKg, TemporalRelation, Timeline,
};

pub const DEFAULT_URL_TEMPLATE: &str = "https://en.wikipedia.org/wiki/{id}";

/// Builds external links by substituting `{id}`; an empty template
/// disables links.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UrlTemplate(String);

impl UrlTemplate {
    pub fn new(template: impl Into<String>) -> Self {
        Self(template.into())
    }

    pub fn render(&self, id: &EntityId) -> Option<String> {
        (!self.0.is_empty()).then(|| self.0.replace("{id}", id.as_str()))
    }
}

impl Default for UrlTemplate {
    fn default() -> Self {
        Self::new(DEFAULT_URL_TEMPLATE)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("invalid RFC 3339 timestamp `{0}`")]
pub struct TimestampError(String);

/// Current UTC time in RFC 3339 form.
pub fn now_timestamp() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true)
}

/// Validates `text` and converts it to UTC.
pub fn parse_timestamp(text: &str) -> Result<String, TimestampError> {
    let parsed = DateTime::parse_from_rfc3339(text).map_err(|_| TimestampError(text.into()))?;
    Ok(parsed.with_timezone(&Utc).to_rfc3339_opts(SecondsFormat::AutoSi, true))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PersonInfo {
    pub id: EntityId,
    pub label: String,
    pub aliases: Vec<String>,
    pub type_tags: BTreeSet<String>,
    pub existence: Option<DateInterval>,
    pub link_count: u64,
    pub description: Option<String>,
    pub external_url: Option<String>,
}

impl PersonInfo {
    pub fn new(entity: &Entity, urls: &UrlTemplate) -> Self {
        PersonInfo {
            id: entity.id.clone(),
            label: entity.label.clone(),
            aliases: entity.aliases.clone(),
            type_tags: entity.type_tags.clone(),
            existence: entity.existence,
            link_count: entity.link_count,
            description: entity.description.clone(),
            external_url: urls.render(&entity.id),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelatedPersonInfo {
    pub id: EntityId,
    pub label: String,
    pub count: usize,
    pub link_count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimelineDocument {
    pub person: PersonInfo,
    pub generated_at: String,
    pub timeline: Timeline,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExportedRelation {
    pub relation: TemporalRelation,
    pub score: f64,
    pub relevant: bool,
    pub group_label: Option<String>,
    pub object_label: String,
    pub location: Option<GeoPoint>,
}

/// Everything behind one timeline computation, including the relations
/// judged non-relevant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExportDocument {
    pub person: PersonInfo,
    pub model_source: Source,
    pub generated_at: String,
    pub entries: Vec<ExportedRelation>,
    pub rejected: Vec<ExportedRelation>,
    pub events: Vec<Event>,
}

impl ExportDocument {
    pub fn from_timeline(kg: &TemporalKg, doc: &TimelineDocument) -> Self {
        let timeline = &doc.timeline;
        let entries = timeline
            .entries
            .iter()
            .map(|e| ExportedRelation {
                relation: e.relation.clone(),
                score: e.score,
                relevant: true,
                group_label: Some(e.group_label.clone()),
                object_label: e.object_label.clone(),
                location: e.location,
            })
            .collect();
        let rejected = timeline
            .rejected
            .iter()
            .map(|r| ExportedRelation {
                relation: r.relation.clone(),
                score: r.score,
                relevant: false,
                group_label: None,
                object_label: object_label(kg, &r.relation.object),
                location: None,
            })
            .collect();
        ExportDocument {
            person: doc.person.clone(),
            model_source: timeline.source_model,
            generated_at: doc.generated_at.clone(),
            entries,
            rejected,
            events: timeline.events.clone(),
        }
    }
}
