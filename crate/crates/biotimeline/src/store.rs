//! Model and schema files.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use biotimeline_core::{
    train, Example, FeatureError, FeatureSchema, Hyperparams, ModelError, RelevanceModel, Source, TemporalKg,
    TrainReport,
};

use crate::benchmark::ResolvedRecord;

pub const SCHEMA_FILE: &str = "schema.json";

pub fn model_file_name(source: Source) -> String {
    format!("model.{}.json", source.as_str())
}

#[derive(Debug, thiserror::Error)]
pub enum StoreError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{}: {source}", path.display())]
    Model {
        path: PathBuf,
        #[source]
        source: ModelError,
    },
    #[error("{}: {source}", path.display())]
    Schema {
        path: PathBuf,
        #[source]
        source: FeatureError,
    },
    #[error("no model files in {}", .0.display())]
    NoModels(PathBuf),
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("value serializes");
    text.push('\n');
    text
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), StoreError> {
    write_text(path, &to_pretty_json(value))
}

pub fn write_text(path: &Path, text: &str) -> Result<(), StoreError> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(|source| StoreError::Io { path: parent.to_owned(), source })?;
    }
    fs::write(path, text).map_err(|source| StoreError::Io { path: path.to_owned(), source })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, StoreError> {
    let text = fs::read_to_string(path).map_err(|source| StoreError::Io { path: path.to_owned(), source })?;
    serde_json::from_str(&text).map_err(|source| StoreError::Json { path: path.to_owned(), source })
}

pub fn load_schema(path: &Path) -> Result<FeatureSchema, StoreError> {
    let schema: FeatureSchema = read_json(path)?;
    schema.validate().map_err(|source| StoreError::Schema { path: path.to_owned(), source })?;
    Ok(schema)
}

/// The shared schema and the models found beside it.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSet {
    pub schema: FeatureSchema,
    pub models: BTreeMap<Source, RelevanceModel>,
}

impl ModelSet {
    /// Loads `schema.json` and every `model.<source>.json` present in `dir`,
    /// checking each model against the schema.
    pub fn load(dir: impl AsRef<Path>) -> Result<Self, StoreError> {
        let dir = dir.as_ref();
        let schema = load_schema(&dir.join(SCHEMA_FILE))?;
        let mut models = BTreeMap::new();
        for source in Source::ALL {
            let path = dir.join(model_file_name(source));
            if !path.exists() {
                continue;
            }
            let model: RelevanceModel = read_json(&path)?;
            model.check_schema(&schema).map_err(|source| StoreError::Model { path: path.clone(), source })?;
            models.insert(source, model);
        }
        if models.is_empty() {
            return Err(StoreError::NoModels(dir.to_owned()));
        }
        Ok(Self { schema, models })
    }

    pub fn get(&self, source: Source) -> Option<&RelevanceModel> {
        self.models.get(&source)
    }
}

/// Builds the schema over the whole benchmark and trains the `source` model.
pub fn train_source(
    kg: &TemporalKg,
    records: &[ResolvedRecord],
    source: Source,
    hp: Hyperparams,
) -> Result<(FeatureSchema, RelevanceModel, TrainReport), ModelError> {
    let schema = FeatureSchema::build(records.iter().map(|r| &r.relation), kg)?;
    let examples = records
        .iter()
        .filter(|r| r.source == source)
        .map(|r| Ok(Example { features: schema.featurize(&r.relation, kg)?, relevant: r.relevant }))
        .collect::<Result<Vec<_>, FeatureError>>()?;
    let (model, report) = train(&examples, source, schema.fingerprint(), hp)?;
    Ok((schema, model, report))
}
