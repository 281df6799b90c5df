mod common;

use biotimeline::core::supervision::label_relations;
use biotimeline::core::{build_benchmark, extract_relations, BiographyDoc, EntityId, Source};
use biotimeline::dump::read_corpus;
use common::{corpus_dir, fixture_kg, supervision_oracle};
use proptest::prelude::*;

#[test]
fn labels_match_oracle_on_fixture_corpus() {
    let kg = fixture_kg();
    let corpus = read_corpus(corpus_dir()).unwrap();
    assert!(corpus.warnings.is_empty(), "{:?}", corpus.warnings);
    assert_eq!(corpus.docs.len(), 100);
    for doc in &corpus.docs {
        let rels = extract_relations(&kg, doc.person.as_str()).unwrap();
        let labeled = label_relations(&kg, doc, &rels).unwrap();
        assert_eq!(labeled.len(), rels.len());
        for (rel, got) in rels.iter().zip(&labeled) {
            let expected = supervision_oracle(&kg, doc, rel);
            assert_eq!(got.relevant, expected.is_some(), "{} {:?}", doc.person, rel);
            let evidence = got.evidence.as_ref().map(|e| (e.sentence, e.label.clone(), e.year));
            assert_eq!(evidence, expected, "{} {:?}", doc.person, rel);
        }
    }
}

#[test]
fn fixture_positive_fraction_is_strictly_between_zero_and_one() {
    let kg = fixture_kg();
    let corpus = read_corpus(corpus_dir()).unwrap();
    let bench = build_benchmark(&kg, &corpus.docs).unwrap();
    for source in Source::ALL {
        let summary = bench.summary(source);
        let fraction = summary.positive_fraction();
        assert!(fraction > 0.0 && fraction < 1.0, "{source}: {fraction}");
        let oracle_positives = corpus
            .docs
            .iter()
            .filter(|d| d.source == source)
            .flat_map(|d| {
                let rels = extract_relations(&kg, d.person.as_str()).unwrap();
                rels.into_iter().filter(|r| supervision_oracle(&kg, d, r).is_some()).collect::<Vec<_>>()
            })
            .count();
        assert_eq!(summary.positives, oracle_positives);
    }
}

#[test]
fn maiden_name_alias_matches() {
    let kg = fixture_kg();
    let doc = BiographyDoc::from_lines(
        EntityId::new("John_Adams").unwrap(),
        Source::BioWeb,
        "He married Abigail Smith in 1764.",
    );
    let rels = extract_relations(&kg, "John_Adams").unwrap();
    let labeled = label_relations(&kg, &doc, &rels).unwrap();
    let spouse = labeled.iter().find(|l| l.relation.property == "spouse").unwrap();
    let evidence = spouse.evidence.as_ref().unwrap();
    assert_eq!((evidence.sentence, evidence.label.as_str(), evidence.year), (0, "abigail smith", 1764));
}

fn sentences() -> impl Strategy<Value = Vec<String>> {
    let words = prop::sample::select(vec![
        "John",
        "Adams",
        "Abigail",
        "Smith",
        "Harvard",
        "College",
        "President",
        "of",
        "the",
        "United",
        "States",
        "born",
        "died",
        "1735",
        "1764",
        "1797",
        "1801",
        "1826",
        "1900",
        "married",
        "Treaty",
        "Paris",
    ]);
    prop::collection::vec(prop::collection::vec(words, 1..12).prop_map(|w| w.join(" ")), 0..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Adding sentences never withdraws a positive label.
    #[test]
    fn more_text_only_adds_positives(base in sentences(), extra in sentences()) {
        let kg = fixture_kg();
        let person = EntityId::new("John_Adams").unwrap();
        let rels = extract_relations(&kg, "John_Adams").unwrap();
        let short = BiographyDoc { person: person.clone(), source: Source::Wikipedia, sentences: base.clone() };
        let mut all = base;
        all.extend(extra);
        let long = BiographyDoc { person, source: Source::Wikipedia, sentences: all };
        let a = label_relations(&kg, &short, &rels).unwrap();
        let b = label_relations(&kg, &long, &rels).unwrap();
        for (a, b) in a.iter().zip(&b) {
            if a.relevant {
                prop_assert!(b.relevant);
                prop_assert_eq!(&a.evidence, &b.evidence);
            }
        }
    }

    #[test]
    fn labels_match_oracle_on_random_text(text in sentences()) {
        let kg = fixture_kg();
        let doc = BiographyDoc { person: EntityId::new("John_Adams").unwrap(), source: Source::BioWeb, sentences: text };
        let rels = extract_relations(&kg, "John_Adams").unwrap();
        for (rel, got) in rels.iter().zip(label_relations(&kg, &doc, &rels).unwrap()) {
            let evidence = got.evidence.map(|e| (e.sentence, e.label, e.year));
            prop_assert_eq!(evidence, supervision_oracle(&kg, &doc, rel));
        }
    }
}
