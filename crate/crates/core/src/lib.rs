//! Biography timelines from a temporal knowledge graph.
//!
//! This crate is `no_std` (it needs `alloc`). It holds the graph model and
//! every algorithmic step of the pipeline:
//!
//! - [`kg`]: TSV dump parsing and the immutable, indexed graph,
//! - [`relation`]: the three kinds of temporal relations of a person,
//! - [`supervision`]: distant-supervision labels from textual biographies,
//! - [`features`]: the numeric encoding of a relation,
//! - [`model`]: the linear hinge-loss classifier,
//! - [`timeline`]: timeline assembly with grouping, events and related people.
//!
//! File IO, the HTTP service and the command line live in the `biotimeline`
//! crate.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod date;
pub mod features;
pub mod kg;
pub mod model;
pub mod relation;
pub mod supervision;
pub mod timeline;

pub use date::{Date, DateInterval, Precision};
pub use features::{build_schema, featurize, FeatureError, FeatureSchema, FeatureVector};
pub use kg::{Entity, EntityId, EntityKind, Event, Fact, FactObject, GeoPoint, KgError, TemporalKg};
pub use model::{train, train_on_benchmark, Example, Hyperparams, ModelError, RelevanceModel, TrainReport};
pub use relation::{extract_relations, RelationError, RelationKind, RelationObject, TemporalRelation};
pub use supervision::{
    build_benchmark, label_relations, Benchmark, BiographyDoc, Evidence, LabeledRelation, Source, SupervisionError,
};
pub use timeline::{
    assign_groups, build_timeline, person_events, related_people, RejectedRelation, RelatedPerson, Timeline,
    TimelineEntry, TimelineError, MISC_GROUP,
};
