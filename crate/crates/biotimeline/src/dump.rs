//! Knowledge-graph dumps and biography corpora on disk.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use biotimeline_core::kg::{EVENTS_FILE, FACTS_FILE};
use biotimeline_core::{BiographyDoc, EntityId, KgError, Source, TemporalKg};

pub use biotimeline_core::kg::ENTITIES_FILE;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Kg(#[from] KgError),
}

pub(crate) fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.to_owned(), source })
}

/// Loads `entities.tsv`, `events.tsv` and `facts.tsv` from `dir`.
pub fn load_kg(dir: impl AsRef<Path>) -> Result<TemporalKg, LoadError> {
    let dir = dir.as_ref();
    let entities = read(&dir.join(ENTITIES_FILE))?;
    let events = read(&dir.join(EVENTS_FILE))?;
    let facts = read(&dir.join(FACTS_FILE))?;
    Ok(TemporalKg::from_tsv(&entities, &events, &facts)?)
}

#[derive(Debug, Default)]
pub struct Corpus {
    /// Sorted by source, then person id.
    pub docs: Vec<BiographyDoc>,
    pub warnings: Vec<String>,
}

/// Reads `<dir>/<source>/<person_id>.txt` files. Unknown source
/// directories and file names that are not valid ids are skipped with a
/// warning; a missing source directory is simply empty.
pub fn read_corpus(dir: impl AsRef<Path>) -> Result<Corpus, LoadError> {
    let dir = dir.as_ref();
    let mut corpus = Corpus::default();
    let io_err = |path: &Path| {
        let path = path.to_owned();
        move |source| LoadError::Io { path, source }
    };

    for entry in sorted_entries(dir).map_err(io_err(dir))? {
        let name = entry.file_name().and_then(|n| n.to_str()).unwrap_or_default().to_owned();
        if entry.is_dir() && name.parse::<Source>().is_err() {
            corpus.warnings.push(format!("{}: unknown source directory, skipped", entry.display()));
        }
    }

    for source in Source::ALL {
        let sub = dir.join(source.as_str());
        if !sub.is_dir() {
            continue;
        }
        for path in sorted_entries(&sub).map_err(io_err(&sub))? {
            let Some(stem) = path.extension().filter(|e| *e == "txt").and(path.file_stem()).and_then(|s| s.to_str())
            else {
                corpus.warnings.push(format!("{}: not a .txt file, skipped", path.display()));
                continue;
            };
            let Ok(person) = EntityId::new(stem) else {
                corpus.warnings.push(format!("{}: file name is not a valid id, skipped", path.display()));
                continue;
            };
            let text = read(&path)?;
            corpus.docs.push(BiographyDoc::from_lines(person, source, &text));
        }
    }
    Ok(corpus)
}

fn sorted_entries(dir: &Path) -> io::Result<Vec<PathBuf>> {
    let mut paths = fs::read_dir(dir)?.map(|e| e.map(|e| e.path())).collect::<io::Result<Vec<_>>>()?;
    paths.sort();
    Ok(paths)
}
