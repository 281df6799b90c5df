//! Biography timeline assembly: classified relations plus the linked
//! events, related people and locations shown next to them.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::date::cmp_start;
use crate::features::{FeatureError, FeatureSchema};
use crate::kg::{Entity, EntityId, Event, FactObject, GeoPoint, TemporalKg};
use crate::model::{is_relevant, ModelError, RelevanceModel};
use crate::relation::{extract_relations, RelationError, TemporalRelation};
use crate::supervision::Source;

pub const MISC_GROUP: &str = "Misc.";
pub const DEFAULT_RELATED_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TimelineError {
    #[error("unknown person `{0}`")]
    UnknownPerson(String),
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
}

impl From<RelationError> for TimelineError {
    fn from(err: RelationError) -> Self {
        match err {
            RelationError::UnknownPerson(id) | RelationError::NotAPerson(id) => TimelineError::UnknownPerson(id),
        }
    }
}

impl From<FeatureError> for TimelineError {
    fn from(err: FeatureError) -> Self {
        TimelineError::SchemaMismatch(alloc::format!("{err}"))
    }
}

impl From<ModelError> for TimelineError {
    fn from(err: ModelError) -> Self {
        TimelineError::SchemaMismatch(alloc::format!("{err}"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimelineEntry {
    pub relation: TemporalRelation,
    pub score: f64,
    pub group_label: String,
    pub object_label: String,
    pub location: Option<GeoPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RejectedRelation {
    pub relation: TemporalRelation,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelatedPerson {
    pub id: EntityId,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timeline {
    pub person: EntityId,
    pub source_model: Source,
    pub entries: Vec<TimelineEntry>,
    pub events: Vec<Event>,
    pub related_people: Vec<RelatedPerson>,
    pub rejected: Vec<RejectedRelation>,
}

fn person_entity<'a>(kg: &'a TemporalKg, person: &str) -> Result<&'a Entity, TimelineError> {
    kg.person(person).ok_or_else(|| TimelineError::UnknownPerson(person.into()))
}

/// Extracts, scores and splits the relations of `person`.
pub fn build_timeline(
    kg: &TemporalKg,
    person: &str,
    model: &RelevanceModel,
    schema: &FeatureSchema,
) -> Result<Timeline, TimelineError> {
    person_entity(kg, person)?;
    model.check_schema(schema)?;
    let relations = extract_relations(kg, person)?;
    let events = person_events(kg, person)?;

    let mut entries = Vec::new();
    let mut rejected = Vec::new();
    for relation in relations {
        let score = model.score(&schema.featurize(&relation, kg)?)?;
        if is_relevant(score) {
            let object_label = object_label(kg, &relation.object);
            let location = entry_location(kg, &relation, &events);
            entries.push(TimelineEntry { group_label: String::new(), relation, score, object_label, location });
        } else {
            rejected.push(RejectedRelation { relation, score });
        }
    }

    Ok(Timeline {
        person: person_entity(kg, person)?.id.clone(),
        source_model: model.source,
        entries: assign_groups(entries),
        events,
        related_people: related_people(kg, person, DEFAULT_RELATED_LIMIT)?,
        rejected,
    })
}

pub fn object_label(kg: &TemporalKg, object: &FactObject) -> String {
    match object {
        FactObject::Entity(id) => kg.node(id.as_str()).map_or_else(|| id.as_str().into(), |n| n.label().into()),
        FactObject::Date(date) => alloc::format!("{date}"),
    }
}

/// Object location if known, otherwise the location of the person's event
/// overlapping the validity whose start is closest to the validity start.
fn entry_location(kg: &TemporalKg, relation: &TemporalRelation, events: &[Event]) -> Option<GeoPoint> {
    if let Some(point) = relation.object.entity().and_then(|id| kg.node(id.as_str())).and_then(|n| n.location()) {
        return Some(point);
    }
    let distance = |event: &Event| -> i64 {
        match (event.happening.start.or(event.happening.end), relation.validity.start.or(relation.validity.end)) {
            (Some(a), Some(b)) => a.days_until(&b).abs(),
            _ => i64::MAX,
        }
    };
    events
        .iter()
        .filter(|e| e.location.is_some() && e.happening.overlaps(&relation.validity))
        .min_by(|a, b| distance(a).cmp(&distance(b)).then_with(|| a.id.cmp(&b.id)))
        .and_then(|e| e.location)
}

/// Labels each entry with its property label, or "Misc." when the property
/// occurs only once among `entries`. Order is preserved.
pub fn assign_groups(mut entries: Vec<TimelineEntry>) -> Vec<TimelineEntry> {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for e in &entries {
        *counts.entry(e.relation.property.clone()).or_default() += 1;
    }
    for e in &mut entries {
        e.group_label =
            if counts[&e.relation.property] >= 2 { e.relation.property_label.clone() } else { MISC_GROUP.into() };
    }
    entries
}

/// Events the person participates in, by start date then id.
pub fn person_events(kg: &TemporalKg, person: &str) -> Result<Vec<Event>, TimelineError> {
    person_entity(kg, person)?;
    let mut events: Vec<Event> = kg.events_of(person).cloned().collect();
    events.sort_by(|a, b| {
        cmp_start(a.happening.start.as_ref(), b.happening.start.as_ref()).then_with(|| a.id.cmp(&b.id))
    });
    Ok(events)
}

/// Persons linked to `person` through relation objects or shared events,
/// ranked by co-occurrence count, then link count, then id.
pub fn related_people(kg: &TemporalKg, person: &str, limit: usize) -> Result<Vec<RelatedPerson>, TimelineError> {
    person_entity(kg, person)?;
    let mut counts: BTreeMap<&EntityId, usize> = BTreeMap::new();
    let relations = extract_relations(kg, person)?;
    for rel in &relations {
        if let Some(id) = rel.object.entity() {
            if id.as_str() != person && kg.person(id.as_str()).is_some() {
                *counts.entry(id).or_default() += 1;
            }
        }
    }
    for event in kg.events_of(person) {
        for other in &event.participants {
            if other.as_str() != person && kg.person(other.as_str()).is_some() {
                *counts.entry(other).or_default() += 1;
            }
        }
    }

    let mut ranked: Vec<(&EntityId, usize, u64)> =
        counts.into_iter().map(|(id, n)| (id, n, kg.entity(id.as_str()).map_or(0, |e| e.link_count))).collect();
    ranked.sort_by(|a, b| match b.1.cmp(&a.1) {
        Ordering::Equal => b.2.cmp(&a.2).then_with(|| a.0.cmp(b.0)),
        other => other,
    });
    Ok(ranked.into_iter().take(limit).map(|(id, count, _)| RelatedPerson { id: id.clone(), count }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kg::{ENTITIES_HEADER, EVENTS_HEADER, FACTS_HEADER};
    use crate::relation::RelationKind;
    use alloc::{format, vec};

    fn kg() -> TemporalKg {
        let entities = format!(
            "{ENTITIES_HEADER}\n\
             John_Adams\tJohn Adams\tperson\tpolitician\t1735-10-30\t1826-07-04\t\t\t950\t\n\
             Abigail_Adams\tAbigail Adams\tperson\t\t1744-11-22\t1818-10-28\t\t\t400\t\n\
             JQA\tJohn Quincy Adams\tperson\t\t1767-07-11\t1848-02-23\t\t\t800\t\n\
             Jefferson\tThomas Jefferson\tperson\t\t1743-04-13\t1826-07-04\t\t\t900\t\n\
             Hermit\tHermit\tperson\t\t1700\t1780\t\t\t1\t\n\
             President\tPresident of the United States\tother\t\t1789\t\t38.9\t-77.0\t5000\t\n"
        );
        let events = format!(
            "{EVENTS_HEADER}\n\
             Amnesty\tAmnesty\t1800-05-21\t1800-05-21\t40.3\t-76.9\tJohn_Adams\tPresident John Adams issues general amnesty\n\
             Inaug\tInauguration\t1797-03-04\t1797-03-04\t39.95\t-75.16\tJohn_Adams|Jefferson\tInauguration\n\
             Decl\tDeclaration\t1776-07-04\t1776-07-04\t39.95\t-75.15\tJohn_Adams|Jefferson\tSigning\n\
             B\tSame day B\t1776-07-04\t1776-07-05\t\t\tJohn_Adams\tx\n"
        );
        let facts = format!(
            "{FACTS_HEADER}\n\
             John_Adams\tborn\tBorn\tdate\t1735-10-30\t\t\n\
             John_Adams\tspouse\tSpouse\tentity\tAbigail_Adams\t1764-10-25\t1818-10-28\n\
             John_Adams\tchild\tChild\tentity\tJQA\t\t\n\
             John_Adams\tpositionHeld\tPosition held\tentity\tPresident\t1797-03-04\t1801-03-04\n\
             John_Adams\tpositionHeld\tPosition held\tentity\tJefferson\t1800\t1800\n"
        );
        TemporalKg::from_tsv(&entities, &events, &facts).unwrap()
    }

    fn schema_and_model(kg: &TemporalKg, weights: Option<Vec<f64>>, bias: f64) -> (FeatureSchema, RelevanceModel) {
        let rels = extract_relations(kg, "John_Adams").unwrap();
        let schema = FeatureSchema::build(&rels, kg).unwrap();
        let model = RelevanceModel {
            source: Source::Wikipedia,
            lambda: 1e-3,
            epochs: 1,
            seed: 0,
            bias,
            weights: weights.unwrap_or_else(|| vec![0.0; schema.dimension]),
            schema_hash: schema.fingerprint(),
        };
        (schema, model)
    }

    fn entry(property: &str, label: &str) -> TimelineEntry {
        TimelineEntry {
            relation: TemporalRelation {
                subject: EntityId::new("P").unwrap(),
                property: property.into(),
                property_label: label.into(),
                object: FactObject::Entity(EntityId::new("O").unwrap()),
                validity: Default::default(),
                kind: RelationKind::AssertedSpan,
            },
            score: 1.0,
            group_label: String::new(),
            object_label: String::new(),
            location: None,
        }
    }

    #[test]
    fn groups_follow_frequency() {
        let mut entries = Vec::new();
        for _ in 0..3 {
            entries.push(entry("positionHeld", "Position held"));
        }
        entries.push(entry("signatory", "Signatory"));
        entries.push(entry("child", "Child"));
        entries.push(entry("signatory", "Signatory"));
        let groups: Vec<String> = assign_groups(entries).into_iter().map(|e| e.group_label).collect();
        assert_eq!(groups, ["Position held", "Position held", "Position held", "Signatory", "Misc.", "Signatory"]);

        let distinct = assign_groups(vec![entry("a", "A"), entry("b", "B")]);
        assert!(distinct.iter().all(|e| e.group_label == MISC_GROUP));
        let same = assign_groups((0..5).map(|_| entry("a", "A")).collect());
        assert!(same.iter().all(|e| e.group_label == "A"));
    }

    #[test]
    fn everything_rejected_with_negative_bias() {
        let kg = kg();
        let (schema, model) = schema_and_model(&kg, None, -1e9);
        let tl = build_timeline(&kg, "John_Adams", &model, &schema).unwrap();
        assert!(tl.entries.is_empty());
        assert_eq!(tl.rejected.len(), extract_relations(&kg, "John_Adams").unwrap().len());
        assert!(tl.rejected.iter().all(|r| r.score == -1e9));
    }

    #[test]
    fn everything_accepted_with_positive_bias() {
        let kg = kg();
        let (schema, model) = schema_and_model(&kg, None, 1.0);
        let tl = build_timeline(&kg, "John_Adams", &model, &schema).unwrap();
        assert!(tl.rejected.is_empty());
        let props: Vec<&str> = tl.entries.iter().map(|e| e.relation.property.as_str()).collect();
        assert_eq!(props, ["born", "spouse", "child", "positionHeld", "positionHeld"]);
        let groups: Vec<&str> = tl.entries.iter().map(|e| e.group_label.as_str()).collect();
        assert_eq!(groups, ["Misc.", "Misc.", "Misc.", "Position held", "Position held"]);
        assert_eq!(tl.entries[3].object_label, "President of the United States");
        // Office has its own coordinates.
        assert_eq!(tl.entries[3].location, GeoPoint::new(38.9, -77.0));
        // Jefferson has none; the amnesty event in 1800 supplies one.
        assert_eq!(tl.entries[4].location, GeoPoint::new(40.3, -76.9));
        assert_eq!(tl.entries[0].object_label, "1735-10-30");
    }

    #[test]
    fn empty_person_timeline() {
        let kg = kg();
        let (schema, model) = schema_and_model(&kg, None, 1.0);
        let tl = build_timeline(&kg, "Hermit", &model, &schema).unwrap();
        assert!(
            tl.entries.is_empty() && tl.rejected.is_empty() && tl.events.is_empty() && tl.related_people.is_empty()
        );
    }

    #[test]
    fn schema_and_person_errors() {
        let kg = kg();
        let (schema, mut model) = schema_and_model(&kg, None, 1.0);
        assert_eq!(build_timeline(&kg, "Nobody", &model, &schema), Err(TimelineError::UnknownPerson("Nobody".into())));
        assert!(matches!(build_timeline(&kg, "President", &model, &schema), Err(TimelineError::UnknownPerson(_))));
        model.schema_hash = "other".into();
        assert!(matches!(build_timeline(&kg, "John_Adams", &model, &schema), Err(TimelineError::SchemaMismatch(_))));
        model.weights.pop();
        assert!(matches!(build_timeline(&kg, "John_Adams", &model, &schema), Err(TimelineError::SchemaMismatch(_))));
    }

    #[test]
    fn events_sorted_with_id_ties() {
        let kg = kg();
        let ids: Vec<String> = person_events(&kg, "John_Adams").unwrap().into_iter().map(|e| e.id.into()).collect();
        assert_eq!(ids, ["B", "Decl", "Inaug", "Amnesty"]);
        assert!(person_events(&kg, "Hermit").unwrap().is_empty());
        assert!(person_events(&kg, "Nobody").is_err());
    }

    #[test]
    fn related_ranking() {
        let kg = kg();
        let related = related_people(&kg, "John_Adams", 10).unwrap();
        let got: Vec<(&str, usize)> = related.iter().map(|r| (r.id.as_str(), r.count)).collect();
        // Jefferson: one relation + two shared events.
        assert_eq!(got, [("Jefferson", 3), ("JQA", 1), ("Abigail_Adams", 1)]);
        assert!(related_people(&kg, "John_Adams", 0).unwrap().is_empty());
        assert!(related_people(&kg, "Hermit", 10).unwrap().is_empty());
        assert!(related_people(&kg, "Nobody", 10).is_err());
    }
}
