//! Fixed-length numeric encoding of a temporal relation.
//!
//! Layout: `[property one-hot | subject type multi-hot | numeric block]`.
//! The numeric block has nine slots, see [`NUMERIC_FEATURES`].

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::kg::{FactObject, TemporalKg};
use crate::relation::{RelationKind, TemporalRelation};

pub const NUMERIC_FEATURES: [&str; 9] = [
    "log1p_object_link_count",
    "kind_literal_date",
    "kind_asserted_span",
    "kind_indirect_existence",
    "log1p_duration_days",
    "start_years_after_birth",
    "end_years_after_death",
    "starts_before_birth",
    "ends_after_death",
];

const DAYS_PER_YEAR: f64 = 365.2425;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FeatureError {
    #[error("cannot build a feature schema from an empty benchmark")]
    EmptyBenchmark,
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("unknown subject `{0}`")]
    UnknownSubject(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureSchema {
    pub property_vocab: Vec<String>,
    pub type_vocab: Vec<String>,
    pub dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FeatureVector(pub Vec<f64>);

impl FeatureVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl FeatureSchema {
    pub fn new(properties: BTreeSet<String>, types: BTreeSet<String>) -> Self {
        let dimension = properties.len() + types.len() + NUMERIC_FEATURES.len();
        Self { property_vocab: properties.into_iter().collect(), type_vocab: types.into_iter().collect(), dimension }
    }

    /// Collects the property vocabulary from `relations` and the type
    /// vocabulary from their subjects.
    pub fn build<'a>(
        relations: impl IntoIterator<Item = &'a TemporalRelation>,
        kg: &TemporalKg,
    ) -> Result<Self, FeatureError> {
        let mut properties = BTreeSet::new();
        let mut types = BTreeSet::new();
        let mut any = false;
        for rel in relations {
            any = true;
            properties.insert(rel.property.clone());
            if let Some(subject) = kg.entity(rel.subject.as_str()) {
                types.extend(subject.type_tags.iter().cloned());
            }
        }
        if !any {
            return Err(FeatureError::EmptyBenchmark);
        }
        Ok(Self::new(properties, types))
    }

    fn numeric_offset(&self) -> usize {
        self.property_vocab.len() + self.type_vocab.len()
    }

    /// Checks the stored dimension and the vocabulary ordering.
    pub fn validate(&self) -> Result<(), FeatureError> {
        let expected = self.numeric_offset() + NUMERIC_FEATURES.len();
        if self.dimension != expected {
            return Err(FeatureError::SchemaMismatch(alloc::format!(
                "dimension {} but vocabularies imply {expected}",
                self.dimension
            )));
        }
        let sorted = |v: &[String]| v.windows(2).all(|w| w[0] < w[1]);
        if !sorted(&self.property_vocab) || !sorted(&self.type_vocab) {
            return Err(FeatureError::SchemaMismatch("vocabularies must be sorted and unique".into()));
        }
        Ok(())
    }

    /// Hex SHA-256 of the compact JSON form of the schema.
    pub fn fingerprint(&self) -> String {
        let json = serde_json::to_vec(self).expect("schema serializes");
        let digest = Sha256::digest(&json);
        let mut hex = String::with_capacity(64);
        for byte in digest {
            use core::fmt::Write;
            let _ = write!(hex, "{byte:02x}");
        }
        hex
    }

    /// Column names, in vector order.
    pub fn feature_names(&self) -> Vec<String> {
        let mut names = Vec::with_capacity(self.dimension);
        names.extend(self.property_vocab.iter().map(|p| alloc::format!("property={p}")));
        names.extend(self.type_vocab.iter().map(|t| alloc::format!("type={t}")));
        names.extend(NUMERIC_FEATURES.iter().map(|n| String::from(*n)));
        names
    }

    pub fn featurize(&self, rel: &TemporalRelation, kg: &TemporalKg) -> Result<FeatureVector, FeatureError> {
        self.validate()?;
        let subject =
            kg.entity(rel.subject.as_str()).ok_or_else(|| FeatureError::UnknownSubject(rel.subject.to_string()))?;
        let mut values = alloc::vec![0.0; self.dimension];

        if let Ok(i) = self.property_vocab.binary_search(&rel.property) {
            values[i] = 1.0;
        }
        let type_offset = self.property_vocab.len();
        for tag in &subject.type_tags {
            if let Ok(i) = self.type_vocab.binary_search(tag) {
                values[type_offset + i] = 1.0;
            }
        }

        let numeric = &mut values[self.numeric_offset()..];
        numeric[0] = match &rel.object {
            FactObject::Entity(id) => libm::log1p(kg.node(id.as_str()).map_or(0, |n| n.link_count()) as f64),
            FactObject::Date(_) => 0.0,
        };
        let kind_slot = match rel.kind {
            RelationKind::LiteralDate => 1,
            RelationKind::AssertedSpan => 2,
            RelationKind::IndirectExistence => 3,
        };
        numeric[kind_slot] = 1.0;

        let life = subject.existence.unwrap_or_default();
        let (birth, death) = (life.start, life.end);
        let start = rel.validity.start.or(birth);
        let end = rel.validity.end.or(death);
        numeric[4] = match (start, end) {
            (Some(s), Some(e)) => libm::log1p(s.days_until(&e).max(0) as f64),
            _ => 0.0,
        };
        if let (Some(s), Some(b)) = (rel.validity.start, birth) {
            numeric[5] = b.days_until(&s) as f64 / DAYS_PER_YEAR;
            numeric[7] = f64::from(u8::from(s.cmp_day(&b).is_lt()));
        }
        if let (Some(e), Some(d)) = (rel.validity.end, death) {
            numeric[6] = d.days_until(&e) as f64 / DAYS_PER_YEAR;
            numeric[8] = f64::from(u8::from(e.cmp_day(&d).is_gt()));
        }
        Ok(FeatureVector(values))
    }
}

pub fn build_schema<'a>(
    relations: impl IntoIterator<Item = &'a TemporalRelation>,
    kg: &TemporalKg,
) -> Result<FeatureSchema, FeatureError> {
    FeatureSchema::build(relations, kg)
}

pub fn featurize(
    rel: &TemporalRelation,
    kg: &TemporalKg,
    schema: &FeatureSchema,
) -> Result<FeatureVector, FeatureError> {
    schema.featurize(rel, kg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kg::{ENTITIES_HEADER, EVENTS_HEADER, FACTS_HEADER};
    use crate::relation::extract_relations;
    use alloc::format;

    fn kg() -> TemporalKg {
        let entities = format!(
            "{ENTITIES_HEADER}\n\
             John_Adams\tJohn Adams\tperson\tpolitician|lawyer\t1735-10-30\t1826-07-04\t\t\t950\t\n\
             Abigail_Adams\tAbigail Adams\tperson\t\t1744-11-22\t1818-10-28\t\t\t400\t\n\
             Living\tLiving Person\tperson\tactor\t1975-06-04\t\t\t\t10\t\n\
             Unknown\tUnknown Person\tperson\t\t\t\t\t\t0\t\n"
        );
        let facts = format!(
            "{FACTS_HEADER}\n\
             John_Adams\tborn\tBorn\tdate\t1735-10-30\t\t\n\
             John_Adams\tspouse\tSpouse\tentity\tAbigail_Adams\t1764-10-25\t1818-10-28\n\
             Living\tspouse\tSpouse\tentity\tJohn_Adams\t2005\t\n\
             Unknown\tborn\tBorn\tdate\t1900\t\t\n"
        );
        TemporalKg::from_tsv(&entities, &format!("{EVENTS_HEADER}\n"), &facts).unwrap()
    }

    fn numeric(schema: &FeatureSchema, v: &FeatureVector) -> Vec<f64> {
        v.0[schema.dimension - 9..].to_vec()
    }

    #[test]
    fn dimension_formula() {
        let kg = kg();
        let rels = extract_relations(&kg, "John_Adams").unwrap();
        let schema = FeatureSchema::build(&rels, &kg).unwrap();
        assert_eq!(schema.property_vocab, ["born", "spouse"]);
        assert_eq!(schema.type_vocab, ["lawyer", "politician"]);
        assert_eq!(schema.dimension, 2 + 2 + 9);

        let single = FeatureSchema::build(&rels[..1], &kg).unwrap();
        assert_eq!(single.dimension, 1 + 2 + 9);
        let untyped = extract_relations(&kg, "Unknown").unwrap();
        assert_eq!(FeatureSchema::build(&untyped, &kg).unwrap().dimension, 10);
        assert_eq!(FeatureSchema::build(&[], &kg), Err(FeatureError::EmptyBenchmark));
    }

    #[test]
    fn marriage_features() {
        let kg = kg();
        let rels = extract_relations(&kg, "John_Adams").unwrap();
        let schema = FeatureSchema::build(&rels, &kg).unwrap();
        let spouse = rels.iter().find(|r| r.property == "spouse").unwrap();
        let v = schema.featurize(spouse, &kg).unwrap();
        assert_eq!(&v.0[..4], &[0.0, 1.0, 1.0, 1.0]);
        let n = numeric(&schema, &v);
        assert_eq!(n[0], libm::log1p(400.0));
        assert_eq!(&n[1..4], &[0.0, 1.0, 0.0]);
        // 1764-10-25 .. 1818-10-28 is 19725 days.
        assert_eq!(n[4], libm::log1p(19_725.0));
        assert_eq!(n[5], 10_588.0 / DAYS_PER_YEAR);
        assert_eq!(n[6], -2_806.0 / DAYS_PER_YEAR);
        assert_eq!((n[7], n[8]), (0.0, 0.0));
    }

    #[test]
    fn birth_is_a_point() {
        let kg = kg();
        let rels = extract_relations(&kg, "John_Adams").unwrap();
        let schema = FeatureSchema::build(&rels, &kg).unwrap();
        let v = schema.featurize(&rels[0], &kg).unwrap();
        let n = numeric(&schema, &v);
        assert_eq!(n[0], 0.0);
        assert_eq!(&n[1..5], &[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(n[5], 0.0);
    }

    #[test]
    fn unseen_property_is_all_zero() {
        let kg = kg();
        let rels = extract_relations(&kg, "John_Adams").unwrap();
        let schema = FeatureSchema::build(&rels[..1], &kg).unwrap();
        let v = schema.featurize(&rels[1], &kg).unwrap();
        assert_eq!(v.0[0], 0.0);
    }

    #[test]
    fn open_intervals_stay_finite() {
        let kg = kg();
        let mut rels = extract_relations(&kg, "Living").unwrap();
        rels.extend(extract_relations(&kg, "Unknown").unwrap());
        let schema = FeatureSchema::build(&rels, &kg).unwrap();
        for rel in &rels {
            let v = schema.featurize(rel, &kg).unwrap();
            assert!(v.0.iter().all(|x| x.is_finite()));
        }
        let living = schema.featurize(&rels[0], &kg).unwrap();
        let n = numeric(&schema, &living);
        // Open end with no death date: no duration, no end offset.
        assert_eq!((n[4], n[6], n[8]), (0.0, 0.0, 0.0));
        assert_eq!(n[5], 10_804.0 / DAYS_PER_YEAR);
    }

    #[test]
    fn inconsistent_schema_rejected() {
        let kg = kg();
        let rels = extract_relations(&kg, "John_Adams").unwrap();
        let mut schema = FeatureSchema::build(&rels, &kg).unwrap();
        schema.dimension += 1;
        assert!(matches!(schema.featurize(&rels[0], &kg), Err(FeatureError::SchemaMismatch(_))));
    }

    #[test]
    fn fingerprint_tracks_content() {
        let kg = kg();
        let rels = extract_relations(&kg, "John_Adams").unwrap();
        let a = FeatureSchema::build(&rels, &kg).unwrap();
        let b = FeatureSchema::build(&rels[..1], &kg).unwrap();
        assert_eq!(a.fingerprint().len(), 64);
        assert_eq!(a.fingerprint(), a.clone().fingerprint());
        assert_ne!(a.fingerprint(), b.fingerprint());
        assert_eq!(a.feature_names().len(), a.dimension);
    }
}
