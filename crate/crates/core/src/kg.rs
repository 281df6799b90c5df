//! In-memory temporal knowledge graph parsed from the TSV dump family.
//!
//! The graph is built once by [`TemporalKg::from_tsv`] and is read-only
//! afterwards. Entities and events share one id space; both maps iterate in
//! ascending byte order of their ids.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::date::{Date, DateInterval, Position};

pub const ENTITIES_FILE: &str = "entities.tsv";
pub const EVENTS_FILE: &str = "events.tsv";
pub const FACTS_FILE: &str = "facts.tsv";

pub const ENTITIES_HEADER: &str =
    "id\tlabel\tkind\ttype_tags\tbirth_or_start\tdeath_or_end\tlat\tlon\tlink_count\tdescription";
pub const EVENTS_HEADER: &str = "id\tlabel\tstart\tend\tlat\tlon\tparticipants\tdescription";
pub const FACTS_HEADER: &str = "subject\tproperty\tproperty_label\tobject_kind\tobject\tvalidity_start\tvalidity_end";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KgError {
    #[error("{file}:{line}: {reason}")]
    MalformedLine { file: &'static str, line: usize, reason: String },
    #[error("dangling reference to `{0}`")]
    DanglingReference(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("{file}:{line}: invalid date `{text}`")]
    InvalidDate { file: &'static str, line: usize, text: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid id `{0}`")]
pub struct InvalidId(pub String);

/// Opaque identifier of an entity or event (`[A-Za-z0-9_]+`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct EntityId(String);

impl EntityId {
    pub fn new(id: impl Into<String>) -> Result<Self, InvalidId> {
        let id = id.into();
        if id.is_empty() || !id.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
            return Err(InvalidId(id));
        }
        Ok(Self(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for EntityId {
    type Error = InvalidId;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        Self::new(value)
    }
}

impl From<EntityId> for String {
    fn from(id: EntityId) -> Self {
        id.0
    }
}

impl Borrow<str> for EntityId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for EntityId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for EntityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeoPoint {
    pub lat: f64,
    pub lon: f64,
}

impl GeoPoint {
    pub fn new(lat: f64, lon: f64) -> Option<Self> {
        ((-90.0..=90.0).contains(&lat) && (-180.0..=180.0).contains(&lon)).then_some(Self { lat, lon })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EntityKind {
    Person,
    Other,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entity {
    pub id: EntityId,
    pub label: String,
    /// Alternative names, e.g. maiden names. Never contains `label`.
    pub aliases: Vec<String>,
    pub kind: EntityKind,
    pub type_tags: BTreeSet<String>,
    pub existence: Option<DateInterval>,
    pub location: Option<GeoPoint>,
    pub link_count: u64,
    pub description: Option<String>,
}

impl Entity {
    pub fn is_person(&self) -> bool {
        self.kind == EntityKind::Person
    }

    /// The label followed by all aliases.
    pub fn names(&self) -> impl Iterator<Item = &str> {
        core::iter::once(self.label.as_str()).chain(self.aliases.iter().map(String::as_str))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Event {
    pub id: EntityId,
    pub label: String,
    pub description: String,
    pub happening: DateInterval,
    pub location: Option<GeoPoint>,
    pub participants: BTreeSet<EntityId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum FactObject {
    Entity(EntityId),
    Date(Date),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fact {
    pub subject: EntityId,
    pub property: String,
    pub property_label: String,
    pub object: FactObject,
    /// Explicitly asserted validity span; never set for date objects.
    pub validity: Option<DateInterval>,
}

/// Something an id can resolve to.
#[derive(Debug, Clone, Copy)]
pub enum Node<'a> {
    Entity(&'a Entity),
    Event(&'a Event),
}

impl<'a> Node<'a> {
    pub fn label(&self) -> &'a str {
        match self {
            Node::Entity(e) => &e.label,
            Node::Event(e) => &e.label,
        }
    }

    /// Existence time of an entity or happening time of an event.
    pub fn lifespan(&self) -> Option<DateInterval> {
        match self {
            Node::Entity(e) => e.existence,
            Node::Event(e) => Some(e.happening),
        }
    }

    pub fn location(&self) -> Option<GeoPoint> {
        match self {
            Node::Entity(e) => e.location,
            Node::Event(e) => e.location,
        }
    }

    pub fn link_count(&self) -> u64 {
        match self {
            Node::Entity(e) => e.link_count,
            Node::Event(_) => 0,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct TemporalKg {
    entities: BTreeMap<EntityId, Entity>,
    events: BTreeMap<EntityId, Event>,
    facts: Vec<Fact>,
    facts_by_subject: BTreeMap<EntityId, Vec<usize>>,
    events_by_participant: BTreeMap<EntityId, Vec<EntityId>>,
}

struct Row<'a> {
    file: &'static str,
    line: usize,
    fields: Vec<&'a str>,
}

impl<'a> Row<'a> {
    fn malformed(&self, reason: impl Into<String>) -> KgError {
        KgError::MalformedLine { file: self.file, line: self.line, reason: reason.into() }
    }

    fn id(&self, col: usize) -> Result<EntityId, KgError> {
        EntityId::new(self.fields[col]).map_err(|e| self.malformed(e.to_string()))
    }

    fn date(&self, col: usize, position: Position) -> Result<Option<Date>, KgError> {
        let text = self.fields[col];
        if text.is_empty() {
            return Ok(None);
        }
        Date::parse(text, position).map(Some).map_err(|_| KgError::InvalidDate {
            file: self.file,
            line: self.line,
            text: text.to_owned(),
        })
    }

    fn interval(&self, start: usize, end: usize) -> Result<Option<DateInterval>, KgError> {
        let start = self.date(start, Position::Start)?;
        let end = self.date(end, Position::End)?;
        if start.is_none() && end.is_none() {
            return Ok(None);
        }
        DateInterval::new(start, end).map(Some).map_err(|e| self.malformed(e.to_string()))
    }

    fn location(&self, lat: usize, lon: usize) -> Result<Option<GeoPoint>, KgError> {
        match (self.fields[lat], self.fields[lon]) {
            ("", "") => Ok(None),
            (lat, lon) => {
                let lat: f64 = lat.parse().map_err(|_| self.malformed("latitude is not a number"))?;
                let lon: f64 = lon.parse().map_err(|_| self.malformed("longitude is not a number"))?;
                GeoPoint::new(lat, lon).map(Some).ok_or_else(|| self.malformed("coordinates out of range"))
            }
        }
    }

    fn id_list(&self, col: usize) -> Result<BTreeSet<EntityId>, KgError> {
        let text = self.fields[col];
        if text.is_empty() {
            return Ok(BTreeSet::new());
        }
        text.split('|').map(|id| EntityId::new(id).map_err(|e| self.malformed(e.to_string()))).collect()
    }
}

fn rows<'a>(file: &'static str, text: &'a str, header: &'static str) -> Result<Vec<Row<'a>>, KgError> {
    let columns = header.split('\t').count();
    let mut out = Vec::new();
    if text.is_empty() {
        return Ok(out);
    }
    let mut lines = text.strip_suffix('\n').unwrap_or(text).split('\n');
    if lines.next() != Some(header) {
        return Err(KgError::MalformedLine { file, line: 1, reason: "missing or wrong header row".into() });
    }
    for (idx, line) in lines.enumerate() {
        let line_no = idx + 2;
        let malformed = |reason: &str| KgError::MalformedLine { file, line: line_no, reason: reason.into() };
        if line.contains('\r') {
            return Err(malformed("carriage return in line"));
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != columns {
            return Err(KgError::MalformedLine {
                file,
                line: line_no,
                reason: alloc::format!("expected {columns} columns, found {}", fields.len()),
            });
        }
        out.push(Row { file, line: line_no, fields });
    }
    Ok(out)
}

fn parse_entity(row: &Row<'_>) -> Result<Entity, KgError> {
    let f = &row.fields;
    let id = row.id(0)?;
    let mut names = f[1].split('|');
    let label = names.next().unwrap_or_default().to_owned();
    let aliases: Vec<String> = names.map(str::to_owned).collect();
    if label.is_empty() || aliases.iter().any(String::is_empty) {
        return Err(row.malformed("empty label or alias"));
    }
    let kind = match f[2] {
        "person" => EntityKind::Person,
        "other" => EntityKind::Other,
        other => return Err(row.malformed(alloc::format!("unknown kind `{other}`"))),
    };
    let type_tags = if f[3].is_empty() {
        BTreeSet::new()
    } else {
        let tags: BTreeSet<String> = f[3].split('|').map(str::to_owned).collect();
        if tags.iter().any(String::is_empty) {
            return Err(row.malformed("empty type tag"));
        }
        tags
    };
    let link_count = f[8].parse().map_err(|_| row.malformed("link_count is not a non-negative integer"))?;
    Ok(Entity {
        id,
        label,
        aliases,
        kind,
        type_tags,
        existence: row.interval(4, 5)?,
        location: row.location(6, 7)?,
        link_count,
        description: (!f[9].is_empty()).then(|| f[9].to_owned()),
    })
}

fn parse_event(row: &Row<'_>) -> Result<Event, KgError> {
    let f = &row.fields;
    let happening = row.interval(2, 3)?.ok_or_else(|| row.malformed("event without start or end"))?;
    Ok(Event {
        id: row.id(0)?,
        label: f[1].to_owned(),
        description: f[7].to_owned(),
        happening,
        location: row.location(4, 5)?,
        participants: row.id_list(6)?,
    })
}

fn parse_fact(row: &Row<'_>) -> Result<Fact, KgError> {
    let f = &row.fields;
    if f[1].is_empty() {
        return Err(row.malformed("empty property"));
    }
    let validity = row.interval(5, 6)?;
    let object = match f[3] {
        "entity" => FactObject::Entity(row.id(4)?),
        "date" => {
            if validity.is_some() {
                return Err(row.malformed("date objects cannot carry a validity span"));
            }
            FactObject::Date(row.date(4, Position::Start)?.ok_or_else(|| row.malformed("empty date object"))?)
        }
        other => return Err(row.malformed(alloc::format!("unknown object_kind `{other}`"))),
    };
    Ok(Fact { subject: row.id(0)?, property: f[1].to_owned(), property_label: f[2].to_owned(), object, validity })
}

impl TemporalKg {
    /// Parses and validates the three dump files given as text.
    pub fn from_tsv(entities: &str, events: &str, facts: &str) -> Result<Self, KgError> {
        let mut kg = TemporalKg::default();

        for row in rows(ENTITIES_FILE, entities, ENTITIES_HEADER)? {
            let entity = parse_entity(&row)?;
            if kg.entities.contains_key(&entity.id) {
                return Err(KgError::DuplicateId(entity.id.0));
            }
            kg.entities.insert(entity.id.clone(), entity);
        }

        for row in rows(EVENTS_FILE, events, EVENTS_HEADER)? {
            let event = parse_event(&row)?;
            if kg.entities.contains_key(&event.id) || kg.events.contains_key(&event.id) {
                return Err(KgError::DuplicateId(event.id.0));
            }
            kg.events.insert(event.id.clone(), event);
        }
        for event in kg.events.values() {
            for participant in &event.participants {
                if !kg.entities.contains_key(participant) {
                    return Err(KgError::DanglingReference(participant.0.clone()));
                }
                kg.events_by_participant.entry(participant.clone()).or_default().push(event.id.clone());
            }
        }

        for row in rows(FACTS_FILE, facts, FACTS_HEADER)? {
            let fact = parse_fact(&row)?;
            if !kg.entities.contains_key(&fact.subject) {
                return Err(KgError::DanglingReference(fact.subject.0));
            }
            if let FactObject::Entity(object) = &fact.object {
                if kg.node(object.as_str()).is_none() {
                    return Err(KgError::DanglingReference(object.0.clone()));
                }
            }
            kg.facts_by_subject.entry(fact.subject.clone()).or_default().push(kg.facts.len());
            kg.facts.push(fact);
        }

        Ok(kg)
    }

    pub fn entity(&self, id: &str) -> Option<&Entity> {
        self.entities.get(id)
    }

    pub fn event(&self, id: &str) -> Option<&Event> {
        self.events.get(id)
    }

    pub fn node(&self, id: &str) -> Option<Node<'_>> {
        self.entities.get(id).map(Node::Entity).or_else(|| self.events.get(id).map(Node::Event))
    }

    /// The entity with this id, if it exists and is a person.
    pub fn person(&self, id: &str) -> Option<&Entity> {
        self.entity(id).filter(|e| e.is_person())
    }

    pub fn entities(&self) -> impl Iterator<Item = &Entity> {
        self.entities.values()
    }

    pub fn persons(&self) -> impl Iterator<Item = &Entity> {
        self.entities.values().filter(|e| e.is_person())
    }

    pub fn events(&self) -> impl Iterator<Item = &Event> {
        self.events.values()
    }

    pub fn facts(&self) -> &[Fact] {
        &self.facts
    }

    /// Facts whose subject is `id`, in file order.
    pub fn facts_of<'a>(&'a self, id: &str) -> impl Iterator<Item = &'a Fact> + 'a {
        self.facts_by_subject.get(id).into_iter().flatten().map(|&i| &self.facts[i])
    }

    /// Events `id` participates in, ascending by event id.
    pub fn events_of<'a>(&'a self, id: &str) -> impl Iterator<Item = &'a Event> + 'a {
        self.events_by_participant.get(id).into_iter().flatten().map(|e| &self.events[e])
    }

    pub fn entity_count(&self) -> usize {
        self.entities.len()
    }

    pub fn person_count(&self) -> usize {
        self.persons().count()
    }

    pub fn event_count(&self) -> usize {
        self.events.len()
    }

    pub fn fact_count(&self) -> usize {
        self.facts.len()
    }

    /// Persons whose label contains `query` case-insensitively, most linked
    /// first, ties by id.
    pub fn search_persons(&self, query: &str, limit: usize) -> Vec<&Entity> {
        if query.is_empty() {
            return Vec::new();
        }
        let needle = query.to_lowercase();
        let mut hits: Vec<&Entity> = self.persons().filter(|p| p.label.to_lowercase().contains(&needle)).collect();
        hits.sort_by(|a, b| b.link_count.cmp(&a.link_count).then_with(|| a.id.cmp(&b.id)));
        hits.truncate(limit);
        hits
    }
}
