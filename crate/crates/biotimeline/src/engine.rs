//! A loaded graph and its models.

use std::path::Path;

use biotimeline_core::timeline::{person_events, related_people, DEFAULT_RELATED_LIMIT};
use biotimeline_core::{build_timeline, Event, Source, TemporalKg, TimelineError};

use crate::document::{ExportDocument, PersonInfo, RelatedPersonInfo, TimelineDocument, UrlTemplate};
use crate::dump::{load_kg, LoadError};
use crate::store::{ModelSet, StoreError};

#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("unknown person `{0}`")]
    UnknownPerson(String),
    #[error("no `{0}` model loaded")]
    ModelUnavailable(Source),
    #[error(transparent)]
    Timeline(TimelineError),
}

impl From<TimelineError> for EngineError {
    fn from(err: TimelineError) -> Self {
        match err {
            TimelineError::UnknownPerson(id) => EngineError::UnknownPerson(id),
            other => EngineError::Timeline(other),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Engine {
    pub kg: TemporalKg,
    pub models: ModelSet,
    pub urls: UrlTemplate,
}

impl Engine {
    pub fn new(kg: TemporalKg, models: ModelSet, urls: UrlTemplate) -> Self {
        Self { kg, models, urls }
    }

    pub fn load(data: impl AsRef<Path>, models: impl AsRef<Path>, urls: UrlTemplate) -> Result<Self, EngineError> {
        Ok(Self::new(load_kg(data)?, ModelSet::load(models)?, urls))
    }

    pub fn person_info(&self, id: &str) -> Result<PersonInfo, EngineError> {
        self.kg.person(id).map(|p| PersonInfo::new(p, &self.urls)).ok_or_else(|| EngineError::UnknownPerson(id.into()))
    }

    pub fn search(&self, query: &str, limit: usize) -> Vec<PersonInfo> {
        self.kg.search_persons(query, limit).into_iter().map(|p| PersonInfo::new(p, &self.urls)).collect()
    }

    pub fn timeline(&self, id: &str, source: Source, generated_at: String) -> Result<TimelineDocument, EngineError> {
        let person = self.person_info(id)?;
        let model = self.models.get(source).ok_or(EngineError::ModelUnavailable(source))?;
        let timeline = build_timeline(&self.kg, id, model, &self.models.schema)?;
        Ok(TimelineDocument { person, generated_at, timeline })
    }

    pub fn export(&self, id: &str, source: Source, generated_at: String) -> Result<ExportDocument, EngineError> {
        Ok(ExportDocument::from_timeline(&self.kg, &self.timeline(id, source, generated_at)?))
    }

    pub fn related(&self, id: &str, limit: Option<usize>) -> Result<Vec<RelatedPersonInfo>, EngineError> {
        let related = related_people(&self.kg, id, limit.unwrap_or(DEFAULT_RELATED_LIMIT))?;
        Ok(related
            .into_iter()
            .map(|r| {
                let entity = self.kg.entity(r.id.as_str());
                RelatedPersonInfo {
                    label: entity.map(|e| e.label.clone()).unwrap_or_default(),
                    link_count: entity.map_or(0, |e| e.link_count),
                    id: r.id,
                    count: r.count,
                }
            })
            .collect())
    }

    pub fn events(&self, id: &str) -> Result<Vec<Event>, EngineError> {
        Ok(person_events(&self.kg, id)?)
    }
}
