//! Writing a pool to disk and the checksum manifest.

use std::fmt;
use std::fs;
use std::path::Path;

use qbank_core::emit::{emit_html, emit_txt, PoolDocument};
use qbank_core::templates::QuestionKind;
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Every question as FMB text (fill-in-the-blank only).
    Txt,
    /// Every question in the HTML document.
    Html,
    /// Fill-in-the-blank questions as text and multiple-choice as HTML,
    /// always writing both files.
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub filename: String,
    pub bytes: u64,
    pub sha256: String,
}

/// One line per written file: `<filename>\t<bytes>\t<sha-256 hex>`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

impl fmt::Display for Manifest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{}\t{}\t{}", e.filename, e.bytes, e.sha256)?;
        }
        Ok(())
    }
}

pub fn txt_filename(pool_name: &str) -> String {
    format!("{pool_name}TXT.txt")
}

pub fn html_filename(pool_name: &str) -> String {
    format!("{pool_name}.html")
}

/// The document files for `pool` as `(file name, contents)`. Without an
/// explicit format, fill-in-the-blank questions go to text and
/// multiple-choice questions to HTML, skipping a file that would be empty.
pub fn render_documents(
    pool: &PoolDocument,
    format: Option<OutputFormat>,
) -> qbank_core::Result<Vec<(String, String)>> {
    pool.check()?;
    let txt = |p: &PoolDocument| Ok::<_, qbank_core::Error>((txt_filename(&pool.pool_name), emit_txt(p)?));
    let html = |p: &PoolDocument| Ok::<_, qbank_core::Error>((html_filename(&pool.pool_name), emit_html(p)?));
    let (fitb, mc) = pool.split_by_kind();
    Ok(match format {
        Some(OutputFormat::Txt) => vec![txt(pool)?],
        Some(OutputFormat::Html) => vec![html(pool)?],
        Some(OutputFormat::Both) => vec![txt(&fitb)?, html(&mc)?],
        None => {
            let mut docs = Vec::new();
            if pool.has_kind(QuestionKind::FillInBlank) || pool.questions.is_empty() {
                docs.push(txt(&fitb)?);
            }
            if pool.has_kind(QuestionKind::MultipleChoice) {
                docs.push(html(&mc)?);
            }
            docs
        }
    })
}

fn entry(filename: &str, bytes: &[u8]) -> ManifestEntry {
    ManifestEntry {
        filename: filename.to_string(),
        bytes: bytes.len() as u64,
        sha256: hex::encode(Sha256::digest(bytes)),
    }
}

/// Writes the documents and every asset into `dir` (created if missing).
/// Documents come first in the manifest, then assets in pool order.
pub fn write_pool(
    pool: &PoolDocument,
    dir: &Path,
    format: Option<OutputFormat>,
) -> Result<Manifest, CliError> {
    let docs = render_documents(pool, format)?;
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut manifest = Manifest::default();
    let files = docs
        .iter()
        .map(|(name, text)| (name.as_str(), text.as_bytes()))
        .chain(pool.assets.iter().map(|a| (a.filename.as_str(), a.bytes.as_slice())));
    for (name, bytes) in files {
        let path = dir.join(name);
        fs::write(&path, bytes).map_err(|e| CliError::io(&path, e))?;
        manifest.entries.push(entry(name, bytes));
    }
    Ok(manifest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qbank_core::templates::assemble_pool;

    #[test]
    fn qcorr_pool_files() {
        let mut pool = assemble_pool("Qcorr", 1, 7, 29).unwrap();
        pool.clock = "Mon 13 Jan 2014 15:30:04".into();
        let dir = tempfile::tempdir().unwrap();
        let m = write_pool(&pool, dir.path(), None).unwrap();
        let names: Vec<&str> = m.entries.iter().map(|e| e.filename.as_str()).collect();
        assert_eq!(names, ["Qcorr.html", "correlation0029.svg"]);
        for e in &m.entries {
            let bytes = fs::read(dir.path().join(&e.filename)).unwrap();
            assert_eq!(bytes.len() as u64, e.bytes);
        }
        assert_eq!(write_pool(&pool, dir.path(), None).unwrap(), m);
    }

    #[test]
    fn empty_pool_writes_one_empty_document() {
        let pool = PoolDocument {
            pool_name: "Empty".into(),
            ..PoolDocument::default()
        };
        let dir = tempfile::tempdir().unwrap();
        let m = write_pool(&pool, dir.path(), None).unwrap();
        assert_eq!(m.entries.len(), 1);
        assert_eq!(m.entries[0].bytes, 0);
        assert_eq!(
            m.entries[0].sha256,
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn txt_rejects_multiple_choice() {
        let pool = assemble_pool("DiceSum", 2, 1, 1).unwrap();
        assert!(render_documents(&pool, Some(OutputFormat::Txt)).is_err());
        let docs = render_documents(&pool, Some(OutputFormat::Both)).unwrap();
        assert_eq!(docs[0], ("DiceSumTXT.txt".to_string(), String::new()));
    }

    #[test]
    fn unwritable_directory_names_path() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        fs::write(&blocker, b"x").unwrap();
        let pool = assemble_pool("ZScore", 1, 1, 1).unwrap();
        let err = write_pool(&pool, &blocker.join("sub"), None).unwrap_err();
        assert!(err.to_string().contains("file"), "{err}");
    }
}
