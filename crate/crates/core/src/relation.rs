//! Candidate timeline entries of a person.
//!
//! A person's temporal relations are the union of three kinds:
//!
//! 1. facts whose object is a date literal (the validity is that single day,
//!    or the whole year for a year-only literal),
//! 2. facts carrying an explicitly asserted validity span,
//! 3. entity facts without a span whose object has an existence (or, for
//!    events, happening) interval; the validity is that interval clipped to
//!    the subject's own lifespan, and the candidate is dropped when the two
//!    do not overlap.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::date::{Date, DateInterval, Position, Precision};
use crate::kg::{EntityId, FactObject, TemporalKg};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelationError {
    #[error("unknown person `{0}`")]
    UnknownPerson(String),
    #[error("`{0}` is not a person")]
    NotAPerson(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    LiteralDate = 1,
    AssertedSpan = 2,
    IndirectExistence = 3,
}

impl RelationKind {
    pub const ALL: [RelationKind; 3] =
        [RelationKind::LiteralDate, RelationKind::AssertedSpan, RelationKind::IndirectExistence];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(n: u8) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.number() == n)
    }
}

impl Serialize for RelationKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.number())
    }
}

impl<'de> Deserialize<'de> for RelationKind {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let n = u8::deserialize(deserializer)?;
        Self::from_number(n).ok_or_else(|| serde::de::Error::custom(alloc::format!("invalid relation kind {n}")))
    }
}

pub type RelationObject = FactObject;

impl FactObject {
    /// Entity id, or the date in `YYYY-MM-DD` form for literals.
    pub fn key(&self) -> String {
        match self {
            FactObject::Entity(id) => id.as_str().into(),
            FactObject::Date(date) => date.to_string(),
        }
    }

    pub fn entity(&self) -> Option<&EntityId> {
        match self {
            FactObject::Entity(id) => Some(id),
            FactObject::Date(_) => None,
        }
    }

    pub fn date(&self) -> Option<&Date> {
        match self {
            FactObject::Entity(_) => None,
            FactObject::Date(date) => Some(date),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            FactObject::Entity(_) => "entity",
            FactObject::Date(_) => "date",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TemporalRelation {
    pub subject: EntityId,
    pub property: String,
    pub property_label: String,
    pub object: RelationObject,
    pub validity: DateInterval,
    pub kind: RelationKind,
}

impl TemporalRelation {
    /// Timeline order: start (absent first), end (absent last), property,
    /// object key, then kind.
    pub fn cmp_timeline(&self, other: &Self) -> Ordering {
        self.validity
            .cmp_chronological(&other.validity)
            .then_with(|| self.property.cmp(&other.property))
            .then_with(|| self.object.key().cmp(&other.object.key()))
            .then_with(|| self.kind.cmp(&other.kind))
            .then_with(|| (self.validity.start, self.validity.end).cmp(&(other.validity.start, other.validity.end)))
    }

    fn same_entry(&self, other: &Self) -> bool {
        self.property == other.property
            && self.object == other.object
            && self.validity == other.validity
            && self.kind == other.kind
    }
}

fn literal_span(date: Date) -> DateInterval {
    match date.precision() {
        Precision::Day => DateInterval::point(date),
        Precision::Year => DateInterval { start: Some(date), end: Some(Date::from_year(date.year(), Position::End)) },
    }
}

/// All temporal relations of `person`, in timeline order and without
/// duplicate (property, object, validity, kind) tuples.
pub fn extract_relations(kg: &TemporalKg, person: &str) -> Result<Vec<TemporalRelation>, RelationError> {
    let subject = kg.entity(person).ok_or_else(|| RelationError::UnknownPerson(person.into()))?;
    if !subject.is_person() {
        return Err(RelationError::NotAPerson(person.into()));
    }
    let lifespan = subject.existence.unwrap_or_default();

    let mut out = Vec::new();
    for fact in kg.facts_of(person) {
        let relation = |validity, kind| TemporalRelation {
            subject: subject.id.clone(),
            property: fact.property.clone(),
            property_label: fact.property_label.clone(),
            object: fact.object.clone(),
            validity,
            kind,
        };
        match (&fact.object, fact.validity) {
            (FactObject::Date(date), _) => out.push(relation(literal_span(*date), RelationKind::LiteralDate)),
            (FactObject::Entity(_), Some(span)) => out.push(relation(span, RelationKind::AssertedSpan)),
            (FactObject::Entity(object), None) => {
                let inferred = kg
                    .node(object.as_str())
                    .and_then(|node| node.lifespan())
                    .filter(DateInterval::has_bound)
                    .and_then(|span| span.intersect(&lifespan));
                if let Some(validity) = inferred {
                    out.push(relation(validity, RelationKind::IndirectExistence));
                }
            }
        }
    }

    out.sort_by(TemporalRelation::cmp_timeline);
    out.dedup_by(|b, a| a.same_entry(b));
    Ok(out)
}
