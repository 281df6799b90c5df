mod common;

use biotimeline::core::{train, FeatureVector, Hyperparams, ModelError, RelevanceModel, Source};
use biotimeline::store::to_pretty_json;
use common::{mean_hinge, separable_points};
use proptest::prelude::*;

fn fit(examples: &[biotimeline::core::Example], seed: u64) -> RelevanceModel {
    let hp = Hyperparams { seed, ..Hyperparams::default() };
    train(examples, Source::Wikipedia, "synthetic".into(), hp).unwrap().0
}

#[test]
fn separable_set_is_learned_exactly() {
    let data = separable_points(200, 1);
    let model = fit(&data, 42);
    assert_eq!(model.accuracy(&data).unwrap(), 1.0);
    let hinge = mean_hinge(&model.weights, model.bias, &data);
    assert!(hinge < 1e-3, "{hinge}");
    assert_eq!(model.hinge_loss(&data).unwrap(), hinge);
}

#[test]
fn other_separable_sets_are_learned() {
    for seed in 2..8 {
        let data = separable_points(200, seed);
        assert_eq!(fit(&data, 42).accuracy(&data).unwrap(), 1.0, "data seed {seed}");
    }
}

#[test]
fn same_seed_same_bytes() {
    let data = separable_points(200, 1);
    assert_eq!(to_pretty_json(&fit(&data, 42)), to_pretty_json(&fit(&data, 42)));
    assert_ne!(fit(&data, 42).weights, fit(&data, 43).weights);
}

#[test]
fn degenerate_sets_are_rejected() {
    let data: Vec<_> = separable_points(50, 1).into_iter().filter(|e| e.relevant).collect();
    let err = train(&data, Source::BioWeb, String::new(), Hyperparams::default()).unwrap_err();
    assert_eq!(err, ModelError::DegenerateTrainingSet);
    let bad = Hyperparams { lambda: 0.0, ..Hyperparams::default() };
    assert!(matches!(
        train(&separable_points(10, 1), Source::BioWeb, String::new(), bad),
        Err(ModelError::InvalidHyperparams(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prediction_ignores_positive_scaling(
        weights in prop::collection::vec(-10.0f64..10.0, 5),
        bias in -10.0f64..10.0,
        x in prop::collection::vec(-10.0f64..10.0, 5),
        scale in prop::sample::select(vec![0.125, 0.5, 2.0, 8.0, 1024.0]),
    ) {
        let model = RelevanceModel {
            source: Source::Wikipedia, lambda: 1e-3, epochs: 1, seed: 0, bias, weights: weights.clone(), schema_hash: String::new(),
        };
        let scaled = RelevanceModel { bias: bias * scale, weights: weights.iter().map(|w| w * scale).collect(), ..model.clone() };
        let v = FeatureVector(x);
        prop_assert_eq!(model.predict(&v).unwrap(), scaled.predict(&v).unwrap());
    }
}
