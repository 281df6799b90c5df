//! Fixture paths, a random graph generator and brute-force oracles shared
//! by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::PathBuf;

use chrono::NaiveDate;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use biotimeline::core::kg::{ENTITIES_HEADER, EVENTS_HEADER, FACTS_HEADER};
use biotimeline::core::{BiographyDoc, TemporalKg, TemporalRelation};

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn data_dir() -> PathBuf {
    fixtures().join("mini_ekg")
}

pub fn corpus_dir() -> PathBuf {
    fixtures().join("corpus")
}

pub fn models_dir() -> PathBuf {
    fixtures().join("models")
}

pub fn fixture_kg() -> TemporalKg {
    biotimeline::dump::load_kg(data_dir()).expect("fixture loads")
}

// ---------------------------------------------------------------------------
// Random graphs.

#[derive(Debug, Clone)]
pub struct GenNode {
    pub id: String,
    pub person: bool,
    pub event: bool,
    pub start: Option<String>,
    pub end: Option<String>,
}

#[derive(Debug, Clone)]
pub struct GenFact {
    pub subject: String,
    pub property: String,
    pub date_object: bool,
    pub object: String,
    pub start: Option<String>,
    pub end: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct GenGraph {
    pub nodes: Vec<GenNode>,
    pub facts: Vec<GenFact>,
}

const PROPERTIES: [&str; 6] = ["born", "child", "memberOf", "positionHeld", "residence", "spouse"];

fn full_date(rng: &mut ChaCha8Rng) -> String {
    let y = rng.random_range(1700..1900);
    let m = rng.random_range(1..=12);
    let d = rng.random_range(1..=28);
    format!("{y:04}-{m:02}-{d:02}")
}

fn any_date(rng: &mut ChaCha8Rng) -> String {
    if rng.random_bool(0.3) {
        format!("{}", rng.random_range(1700..1900))
    } else {
        full_date(rng)
    }
}

fn ordered(a: String, b: String) -> (String, String) {
    if bound(&a, false) <= bound(&b, true) {
        (a, b)
    } else {
        (b, a)
    }
}

fn lifespan(
    rng: &mut ChaCha8Rng,
    date: fn(&mut ChaCha8Rng) -> String,
    need_bound: bool,
) -> (Option<String>, Option<String>) {
    let (a, b) = ordered(date(rng), date(rng));
    match rng.random_range(0..if need_bound { 3 } else { 4 }) {
        0 => (Some(a), Some(b)),
        1 => (Some(a), None),
        2 => (None, Some(b)),
        _ => (None, None),
    }
}

impl GenGraph {
    /// At most 100 nodes and 300 facts.
    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n_nodes = rng.random_range(2..=100);
        let mut g = GenGraph::default();
        for i in 0..n_nodes {
            let roll = rng.random_range(0..10);
            let (person, event) = (roll < 4, roll == 9);
            let (start, end) = lifespan(&mut rng, any_date, event);
            let prefix = if event {
                "E"
            } else if person {
                "P"
            } else {
                "O"
            };
            g.nodes.push(GenNode { id: format!("{prefix}{i}"), person, event, start, end });
        }
        let subjects: Vec<String> = g.nodes.iter().filter(|n| !n.event).map(|n| n.id.clone()).collect();
        let objects: Vec<String> = g.nodes.iter().map(|n| n.id.clone()).collect();
        let n_facts = rng.random_range(0..=300);
        while g.facts.len() < n_facts {
            if !g.facts.is_empty() && rng.random_bool(0.05) {
                let copy = g.facts.choose(&mut rng).unwrap().clone();
                g.facts.push(copy);
                continue;
            }
            let subject = subjects.choose(&mut rng).unwrap().clone();
            let property = PROPERTIES.choose(&mut rng).unwrap().to_string();
            if rng.random_bool(0.15) {
                let object = any_date(&mut rng);
                g.facts.push(GenFact { subject, property, date_object: true, object, start: None, end: None });
                continue;
            }
            let object = objects.choose(&mut rng).unwrap().clone();
            let (start, end) = if rng.random_bool(0.4) { lifespan(&mut rng, full_date, true) } else { (None, None) };
            g.facts.push(GenFact { subject, property, date_object: false, object, start, end });
        }
        g
    }

    pub fn to_tsv(&self) -> (String, String, String) {
        let opt = |o: &Option<String>| o.clone().unwrap_or_default();
        let mut entities = format!("{ENTITIES_HEADER}\n");
        let mut events = format!("{EVENTS_HEADER}\n");
        for n in &self.nodes {
            if n.event {
                writeln!(events, "{}\tEvent {}\t{}\t{}\t\t\t\t", n.id, n.id, opt(&n.start), opt(&n.end)).unwrap();
            } else {
                let kind = if n.person { "person" } else { "other" };
                writeln!(entities, "{}\tNode {}\t{kind}\t\t{}\t{}\t\t\t1\t", n.id, n.id, opt(&n.start), opt(&n.end))
                    .unwrap();
            }
        }
        let mut facts = format!("{FACTS_HEADER}\n");
        for f in &self.facts {
            let kind = if f.date_object { "date" } else { "entity" };
            writeln!(
                facts,
                "{}\t{}\t{}\t{kind}\t{}\t{}\t{}",
                f.subject,
                f.property,
                f.property,
                f.object,
                opt(&f.start),
                opt(&f.end)
            )
            .unwrap();
        }
        (entities, events, facts)
    }

    pub fn kg(&self) -> TemporalKg {
        let (a, b, c) = self.to_tsv();
        TemporalKg::from_tsv(&a, &b, &c).expect("generated graph is valid")
    }

    pub fn persons(&self) -> impl Iterator<Item = &GenNode> {
        self.nodes.iter().filter(|n| n.person)
    }
}

/// A relation reduced to comparable plain values:
/// (start, end, property, object, kind) with dates as `YYYY-MM-DD`.
pub type Canonical = (Option<NaiveDate>, Option<NaiveDate>, String, String, u8);

/// Day of a dump date string; year-only bounds expand to January 1 for
/// starts and December 31 for ends.
pub fn bound(text: &str, is_end: bool) -> NaiveDate {
    if text.len() == 4 {
        let y: i32 = text.parse().unwrap();
        if is_end {
            NaiveDate::from_ymd_opt(y, 12, 31).unwrap()
        } else {
            NaiveDate::from_ymd_opt(y, 1, 1).unwrap()
        }
    } else {
        NaiveDate::parse_from_str(text, "%Y-%m-%d").unwrap()
    }
}

pub fn canonical(rel: &TemporalRelation) -> Canonical {
    let day =
        |d: Option<biotimeline::core::Date>| d.map(|d| NaiveDate::parse_from_str(&d.to_string(), "%Y-%m-%d").unwrap());
    (day(rel.validity.start), day(rel.validity.end), rel.property.clone(), rel.object.key(), rel.kind.number())
}

fn timeline_order(a: &Canonical, b: &Canonical) -> std::cmp::Ordering {
    // Absent starts come first, absent ends last.
    let start = |c: &Canonical| c.0.map_or((0, NaiveDate::MIN), |d| (1, d));
    let end = |c: &Canonical| c.1.map_or((1, NaiveDate::MAX), |d| (0, d));
    start(a)
        .cmp(&start(b))
        .then(end(a).cmp(&end(b)))
        .then_with(|| a.2.cmp(&b.2))
        .then_with(|| a.3.cmp(&b.3))
        .then(a.4.cmp(&b.4))
}

/// Expected relations of `person`, computed straight from the generator's
/// description of the graph.
pub fn relation_oracle(g: &GenGraph, person: &str) -> Vec<Canonical> {
    let nodes: BTreeMap<&str, &GenNode> = g.nodes.iter().map(|n| (n.id.as_str(), n)).collect();
    let p = nodes[person];
    let life_start = p.start.as_deref().map(|s| bound(s, false));
    let life_end = p.end.as_deref().map(|s| bound(s, true));

    let mut out = Vec::new();
    for f in g.facts.iter().filter(|f| f.subject == person) {
        if f.date_object {
            let (s, e) = (bound(&f.object, false), bound(&f.object, true));
            out.push((Some(s), Some(e), f.property.clone(), s.format("%Y-%m-%d").to_string(), 1));
        } else if f.start.is_some() || f.end.is_some() {
            let s = f.start.as_deref().map(|s| bound(s, false));
            let e = f.end.as_deref().map(|s| bound(s, true));
            out.push((s, e, f.property.clone(), f.object.clone(), 2));
        } else {
            let o = nodes[f.object.as_str()];
            if o.start.is_none() && o.end.is_none() {
                continue;
            }
            let os = o.start.as_deref().map(|s| bound(s, false));
            let oe = o.end.as_deref().map(|s| bound(s, true));
            let s = [os, life_start].into_iter().flatten().max();
            let e = [oe, life_end].into_iter().flatten().min();
            if let (Some(s), Some(e)) = (s, e) {
                if s > e {
                    continue;
                }
            }
            out.push((s, e, f.property.clone(), f.object.clone(), 3));
        }
    }
    out.sort_by(timeline_order);
    out.dedup();
    out
}

pub fn is_timeline_ordered(rels: &[Canonical]) -> bool {
    rels.windows(2).all(|w| timeline_order(&w[0], &w[1]).is_le())
}

// ---------------------------------------------------------------------------
// Distant supervision.

/// Expected (relevant, evidence) of `rel` against `doc`: the first sentence
/// holding one of the names as whole words and a year inside the validity.
pub fn supervision_oracle(kg: &TemporalKg, doc: &BiographyDoc, rel: &TemporalRelation) -> Option<(usize, String, i32)> {
    let names: Vec<String> = match rel.object.entity() {
        None => vec![rel.property_label.clone()],
        Some(id) => match kg.entity(id.as_str()) {
            Some(e) => std::iter::once(e.label.clone()).chain(e.aliases.iter().cloned()).collect(),
            None => vec![kg.event(id.as_str()).unwrap().label.clone()],
        },
    };
    let clean = |text: &str| -> String {
        let mapped: String = text.chars().map(|c| if c.is_alphanumeric() { c } else { ' ' }).collect();
        let lowered = mapped.to_lowercase();
        lowered.split_whitespace().collect::<Vec<_>>().join(" ")
    };
    let lo = rel.validity.start.map_or(i32::MIN, |d| d.year());
    let hi = rel.validity.end.map_or(i32::MAX, |d| d.year());

    for (idx, sentence) in doc.sentences.iter().enumerate() {
        let padded = format!(" {} ", clean(sentence));
        let year = padded
            .split(' ')
            .filter(|t| t.len() == 4 && t.chars().all(|c| c.is_ascii_digit()))
            .map(|t| t.parse::<i32>().unwrap())
            .find(|y| (lo..=hi).contains(y));
        let name = names.iter().map(|n| clean(n)).find(|n| !n.is_empty() && padded.contains(&format!(" {n} ")));
        if let (Some(year), Some(name)) = (year, name) {
            return Some((idx, name, year));
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Classifier data.

/// `n` points in [-1, 1]^2 labeled by the side of the line
/// 0.6x + 0.8y = 0.1, keeping only points at distance ≥ 0.5 from it.
pub fn separable_points(n: usize, seed: u64) -> Vec<biotimeline::core::Example> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (x, y) = (rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
        let side: f64 = 0.6 * x + 0.8 * y - 0.1;
        if side.abs() >= 0.5 {
            out.push(biotimeline::core::Example {
                features: biotimeline::core::FeatureVector(vec![x, y]),
                relevant: side > 0.0,
            });
        }
    }
    out
}

/// Mean hinge loss computed directly from weights and bias.
pub fn mean_hinge(weights: &[f64], bias: f64, examples: &[biotimeline::core::Example]) -> f64 {
    let total: f64 = examples
        .iter()
        .map(|e| {
            let y = if e.relevant { 1.0 } else { -1.0 };
            let score: f64 = weights.iter().zip(&e.features.0).map(|(w, x)| w * x).sum::<f64>() + bias;
            (1.0 - y * score).max(0.0)
        })
        .sum();
    total / examples.len() as f64
}
