//! Pool documents and their two serializations: the FMB text dialect used
//! for fill-in-the-blank pools and the HTML document used for
//! multiple-choice pools with figures.

mod html;
mod txt;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use html::emit_html;
pub use txt::{emit_txt, parse_txt};

use crate::render::ImageAsset;
use crate::templates::{Question, QuestionKind};
use crate::{Error, Result};

/// An ordered pool of questions plus every figure they reference.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PoolDocument {
    pub pool_name: String,
    pub questions: Vec<Question>,
    pub assets: Vec<ImageAsset>,
    /// Timestamp written into the HTML title; injected by the caller.
    pub clock: String,
}

impl PoolDocument {
    /// Unique titles, valid questions, unique asset names, and every
    /// referenced figure present.
    pub fn check(&self) -> Result<()> {
        let mut titles = BTreeSet::new();
        for q in &self.questions {
            q.check()?;
            if !titles.insert(q.title.as_str()) {
                return Err(emit_error(q, "duplicate title in pool"));
            }
        }
        let mut names = BTreeSet::new();
        for a in &self.assets {
            if !names.insert(a.filename.as_str()) {
                return Err(Error::invalid(format!("duplicate asset file name `{}`", a.filename)));
            }
        }
        for q in &self.questions {
            for r in q.referenced_assets() {
                if !names.contains(r) {
                    return Err(emit_error(q, &format!("missing asset `{r}`")));
                }
            }
        }
        Ok(())
    }

    pub fn has_kind(&self, kind: QuestionKind) -> bool {
        self.questions.iter().any(|q| q.kind() == kind)
    }

    /// `(fill-in-the-blank questions, multiple-choice questions)`, each part
    /// carrying only the assets it references.
    pub fn split_by_kind(&self) -> (PoolDocument, PoolDocument) {
        let part = |kind: QuestionKind| {
            let questions: Vec<Question> = self
                .questions
                .iter()
                .filter(|q| q.kind() == kind)
                .cloned()
                .collect();
            let used: BTreeSet<&str> = questions.iter().flat_map(|q| q.referenced_assets()).collect();
            PoolDocument {
                pool_name: self.pool_name.clone(),
                assets: self
                    .assets
                    .iter()
                    .filter(|a| used.contains(a.filename.as_str()))
                    .cloned()
                    .collect(),
                questions,
                clock: self.clock.clone(),
            }
        };
        (part(QuestionKind::FillInBlank), part(QuestionKind::MultipleChoice))
    }
}

fn emit_error(q: &Question, reason: &str) -> Error {
    Error::Emit {
        title: q.title.clone(),
        reason: reason.into(),
    }
}
