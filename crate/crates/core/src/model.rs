//! Linear max-margin relevance classifier.
//!
//! Training minimizes `lambda/2 * (|w|^2 + b^2) + mean(hinge)` with
//! Pegasos-style stochastic subgradient steps of size `1 / (lambda * t)`. The
//! bias is handled as an extra weight on a constant feature. Each epoch visits
//! the examples in an order drawn from a ChaCha8 stream seeded with
//! `Hyperparams::seed`, so a given input always yields the same bits.
//!
//! The objective is evaluated on the whole training set at every epoch
//! boundary and the iterate with the lowest value is kept (earliest wins on
//! ties).

use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::features::{FeatureError, FeatureSchema, FeatureVector};
use crate::kg::TemporalKg;
use crate::supervision::{LabeledRelation, Source};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("training set needs at least one relevant and one non-relevant example")]
    DegenerateTrainingSet,
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("invalid hyperparameters: {0}")]
    InvalidHyperparams(&'static str),
}

impl From<FeatureError> for ModelError {
    fn from(err: FeatureError) -> Self {
        ModelError::SchemaMismatch(alloc::format!("{err}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hyperparams {
    pub lambda: f64,
    pub epochs: u32,
    pub seed: u64,
}

impl Default for Hyperparams {
    fn default() -> Self {
        Self { lambda: 1e-3, epochs: 50, seed: 42 }
    }
}

impl Hyperparams {
    fn validate(&self) -> Result<(), ModelError> {
        if !(self.lambda.is_finite() && self.lambda > 0.0) {
            return Err(ModelError::InvalidHyperparams("lambda must be a positive number"));
        }
        if self.epochs == 0 {
            return Err(ModelError::InvalidHyperparams("epochs must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelevanceModel {
    pub source: Source,
    pub lambda: f64,
    pub epochs: u32,
    pub seed: u64,
    pub bias: f64,
    pub weights: Vec<f64>,
    pub schema_hash: String,
}

/// One training instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Example {
    pub features: FeatureVector,
    pub relevant: bool,
}

impl Example {
    fn label(&self) -> f64 {
        if self.relevant {
            1.0
        } else {
            -1.0
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TrainReport {
    /// Objective of the raw iterate after each epoch.
    pub epoch_objective: Vec<f64>,
    /// Objective of the retained model after each epoch.
    pub retained_objective: Vec<f64>,
    /// 1-based epoch whose iterate was kept.
    pub selected_epoch: u32,
}

fn dot(weights: &[f64], x: &[f64]) -> f64 {
    weights.iter().zip(x).map(|(w, x)| w * x).sum()
}

fn objective(weights: &[f64], bias: f64, examples: &[Example], lambda: f64) -> f64 {
    let norm = dot(weights, weights) + bias * bias;
    let hinge: f64 =
        examples.iter().map(|ex| (1.0 - ex.label() * (dot(weights, ex.features.as_slice()) + bias)).max(0.0)).sum();
    0.5 * lambda * norm + hinge / examples.len() as f64
}

impl RelevanceModel {
    pub fn hyperparams(&self) -> Hyperparams {
        Hyperparams { lambda: self.lambda, epochs: self.epochs, seed: self.seed }
    }

    pub fn dimension(&self) -> usize {
        self.weights.len()
    }

    pub fn score(&self, vec: &FeatureVector) -> Result<f64, ModelError> {
        if vec.len() != self.weights.len() {
            return Err(ModelError::SchemaMismatch(alloc::format!(
                "model has {} weights, vector has {} values",
                self.weights.len(),
                vec.len()
            )));
        }
        Ok(dot(&self.weights, vec.as_slice()) + self.bias)
    }

    /// Relevant iff the score is strictly positive.
    pub fn predict(&self, vec: &FeatureVector) -> Result<bool, ModelError> {
        self.score(vec).map(is_relevant)
    }

    /// Mean hinge loss over `examples`.
    pub fn hinge_loss(&self, examples: &[Example]) -> Result<f64, ModelError> {
        if examples.is_empty() {
            return Ok(0.0);
        }
        let mut total = 0.0;
        for ex in examples {
            total += (1.0 - ex.label() * self.score(&ex.features)?).max(0.0);
        }
        Ok(total / examples.len() as f64)
    }

    pub fn accuracy(&self, examples: &[Example]) -> Result<f64, ModelError> {
        if examples.is_empty() {
            return Ok(0.0);
        }
        let mut correct = 0usize;
        for ex in examples {
            correct += usize::from(self.predict(&ex.features)? == ex.relevant);
        }
        Ok(correct as f64 / examples.len() as f64)
    }

    /// Checks that the model was trained against `schema`.
    pub fn check_schema(&self, schema: &FeatureSchema) -> Result<(), ModelError> {
        if self.weights.len() != schema.dimension {
            return Err(ModelError::SchemaMismatch(alloc::format!(
                "model has {} weights, schema dimension is {}",
                self.weights.len(),
                schema.dimension
            )));
        }
        if self.schema_hash != schema.fingerprint() {
            return Err(ModelError::SchemaMismatch("schema hash differs".into()));
        }
        Ok(())
    }
}

/// The decision rule; ties are non-relevant.
pub fn is_relevant(score: f64) -> bool {
    score > 0.0
}

/// Trains a model on already featurized examples.
pub fn train(
    examples: &[Example],
    source: Source,
    schema_hash: String,
    hp: Hyperparams,
) -> Result<(RelevanceModel, TrainReport), ModelError> {
    hp.validate()?;
    let positives = examples.iter().filter(|e| e.relevant).count();
    if positives == 0 || positives == examples.len() {
        return Err(ModelError::DegenerateTrainingSet);
    }
    let dim = examples[0].features.len();
    if let Some(bad) = examples.iter().find(|e| e.features.len() != dim) {
        return Err(ModelError::SchemaMismatch(alloc::format!(
            "examples mix dimensions {dim} and {}",
            bad.features.len()
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(hp.seed);
    let mut order: Vec<usize> = (0..examples.len()).collect();
    let mut weights = alloc::vec![0.0; dim];
    let mut bias = 0.0;
    let mut step = 0u64;

    let mut best = (f64::INFINITY, weights.clone(), bias, 0u32);
    let mut report = TrainReport::default();

    for epoch in 1..=hp.epochs {
        order.shuffle(&mut rng);
        for &i in &order {
            step += 1;
            let eta = 1.0 / (hp.lambda * step as f64);
            let ex = &examples[i];
            let y = ex.label();
            let x = ex.features.as_slice();
            let margin = y * (dot(&weights, x) + bias);
            let shrink = 1.0 - eta * hp.lambda;
            for w in weights.iter_mut() {
                *w *= shrink;
            }
            bias *= shrink;
            if margin < 1.0 {
                for (w, xi) in weights.iter_mut().zip(x) {
                    *w += eta * y * xi;
                }
                bias += eta * y;
            }
        }

        let value = objective(&weights, bias, examples, hp.lambda);
        report.epoch_objective.push(value);
        if value < best.0 {
            best = (value, weights.clone(), bias, epoch);
        }
        report.retained_objective.push(best.0);
    }

    let (_, weights, bias, selected) = best;
    report.selected_epoch = selected;
    let model =
        RelevanceModel { source, lambda: hp.lambda, epochs: hp.epochs, seed: hp.seed, bias, weights, schema_hash };
    Ok((model, report))
}

/// Featurizes the `source` part of a benchmark with `schema`.
pub fn examples_for_source(
    benchmark: &[LabeledRelation],
    source: Source,
    schema: &FeatureSchema,
    kg: &TemporalKg,
) -> Result<Vec<Example>, ModelError> {
    benchmark
        .iter()
        .filter(|r| r.source == source)
        .map(|r| Ok(Example { features: schema.featurize(&r.relation, kg)?, relevant: r.relevant }))
        .collect()
}

/// Trains the model of one corpus flavor from labeled relations.
pub fn train_on_benchmark(
    benchmark: &[LabeledRelation],
    source: Source,
    schema: &FeatureSchema,
    kg: &TemporalKg,
    hp: Hyperparams,
) -> Result<(RelevanceModel, TrainReport), ModelError> {
    let examples = examples_for_source(benchmark, source, schema, kg)?;
    train(&examples, source, schema.fingerprint(), hp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ex(features: &[f64], relevant: bool) -> Example {
        Example { features: FeatureVector(features.to_vec()), relevant }
    }

    fn model(weights: &[f64], bias: f64) -> RelevanceModel {
        RelevanceModel {
            source: Source::Wikipedia,
            lambda: 1e-3,
            epochs: 1,
            seed: 0,
            bias,
            weights: weights.to_vec(),
            schema_hash: String::new(),
        }
    }

    #[test]
    fn score_arithmetic() {
        let zero = model(&[0.0, 0.0, 0.0], 0.0);
        assert_eq!(zero.score(&FeatureVector(vec![3.0, -1.0, 7.0])).unwrap(), 0.0);
        let unit = model(&[0.0, 1.0, 0.0], -1.0);
        assert_eq!(unit.score(&FeatureVector(vec![5.0, 2.0, 9.0])).unwrap(), 1.0);
        assert!(matches!(unit.score(&FeatureVector(vec![1.0])), Err(ModelError::SchemaMismatch(_))));
    }

    #[test]
    fn threshold_ties_are_negative() {
        assert!(!is_relevant(0.0));
        assert!(is_relevant(0.7));
        assert!(!is_relevant(-0.2));
        let m = model(&[1.0], 0.0);
        assert!(!m.predict(&FeatureVector(vec![0.0])).unwrap());
    }

    #[test]
    fn degenerate_sets_rejected() {
        let all_pos = [ex(&[1.0], true), ex(&[2.0], true)];
        assert_eq!(
            train(&all_pos, Source::Wikipedia, String::new(), Hyperparams::default()).unwrap_err(),
            ModelError::DegenerateTrainingSet
        );
        assert_eq!(
            train(&[], Source::Wikipedia, String::new(), Hyperparams::default()).unwrap_err(),
            ModelError::DegenerateTrainingSet
        );
    }

    #[test]
    fn bad_hyperparams_rejected() {
        let data = [ex(&[1.0], true), ex(&[-1.0], false)];
        let hp = Hyperparams { lambda: 0.0, ..Hyperparams::default() };
        assert!(matches!(train(&data, Source::BioWeb, String::new(), hp), Err(ModelError::InvalidHyperparams(_))));
        let hp = Hyperparams { epochs: 0, ..Hyperparams::default() };
        assert!(matches!(train(&data, Source::BioWeb, String::new(), hp), Err(ModelError::InvalidHyperparams(_))));
    }

    #[test]
    fn mixed_dimensions_rejected() {
        let data = [ex(&[1.0], true), ex(&[-1.0, 0.0], false)];
        assert!(matches!(
            train(&data, Source::BioWeb, String::new(), Hyperparams::default()),
            Err(ModelError::SchemaMismatch(_))
        ));
    }

    #[test]
    fn learns_a_threshold() {
        let data: Vec<Example> = (0..40)
            .map(|i| {
                let x = f64::from(i) / 10.0 - 2.0;
                ex(&[x], x > 0.0)
            })
            .collect();
        let (m, report) = train(&data, Source::Wikipedia, "h".into(), Hyperparams::default()).unwrap();
        assert_eq!(m.accuracy(&data).unwrap(), 1.0);
        assert_eq!(report.epoch_objective.len(), 50);
        assert!(report.retained_objective.windows(2).all(|w| w[1] <= w[0]));
        assert_eq!(m.hyperparams(), Hyperparams::default());
        assert_eq!(m.schema_hash, "h");
    }
}
