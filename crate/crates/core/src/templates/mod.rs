//! Question families.
//!
//! Each family turns a seeded [`RngStream`](crate::stats_sim::RngStream) into
//! a [`GeneratedItem`]: the question as it will be emitted, the figures it
//! refers to, and the underlying data ([`ItemData`]) so answers can be checked
//! independently of the text.

mod binomial;
mod correlation;
mod dice;
mod histogram;
mod linear;
mod pool;
mod quadratic;
mod trapezoid;
mod zscore;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use binomial::{gen_expand_binomial, gen_expand_binomial_mc, EXPAND_STEM, SYMBOL_PAIRS};
pub use correlation::{correlation_question, gen_correlation_mc, CORRELATION_STEM};
pub use dice::{dice_distractors, gen_dice_sum_mc};
pub use histogram::{gen_histogram_shape, HistogramShape, HISTOGRAM_STEM};
pub use linear::{
    alternate_multiplier, gen_linear_int_int, gen_linear_rat_rat, linear_int_question,
    linear_rat_question, solve_for_constant, LinearEquation, Side, Term,
};
pub use pool::{assemble_pool, assemble_pool_with, family, generate_item, Family, FAMILIES};
pub use quadratic::{gen_factor_quadratic, root_pair_text};
pub use trapezoid::{gen_trapezoid_mc, trapezoid_question, Ask, LatticeTrapezoid};
pub use zscore::{gen_zscore, zscore_accepted_forms};

use crate::exactmath::format_scaled;
use crate::render::ImageAsset;
use crate::stats_sim::{CorrelationDraw, RngStream, SampleXY};
use crate::exactmath::{IntPolynomial, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuestionKind {
    MultipleChoice,
    FillInBlank,
}

/// One multiple-choice alternative. When `image` is set the option is shown
/// as that image; `text` remains the plain-text value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct McOption {
    pub text: String,
    pub image: Option<String>,
    pub correct: bool,
}

impl McOption {
    pub fn new(text: impl Into<String>, correct: bool) -> Self {
        McOption {
            text: text.into(),
            image: None,
            correct,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Answer {
    MultipleChoice(Vec<McOption>),
    /// `label = [accepted, ...]`, e.g. `z = [-39, -39., -39.0, -39.00]`.
    FillIn { label: String, accepted: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Question {
    pub title: String,
    /// Instruction text without the item number; may span several lines.
    pub stem: String,
    /// Set-off line under the stem, such as the equation to solve.
    pub display: Option<String>,
    pub answer: Answer,
    /// Figure shown with the question.
    pub asset: Option<String>,
}

impl Question {
    pub fn kind(&self) -> QuestionKind {
        match self.answer {
            Answer::MultipleChoice(_) => QuestionKind::MultipleChoice,
            Answer::FillIn { .. } => QuestionKind::FillInBlank,
        }
    }

    pub fn options(&self) -> &[McOption] {
        match &self.answer {
            Answer::MultipleChoice(o) => o,
            Answer::FillIn { .. } => &[],
        }
    }

    pub fn correct_option(&self) -> Option<&McOption> {
        self.options().iter().find(|o| o.correct)
    }

    pub fn accepted(&self) -> &[String] {
        match &self.answer {
            Answer::FillIn { accepted, .. } => accepted,
            Answer::MultipleChoice(_) => &[],
        }
    }

    /// Every file name this question refers to.
    pub fn referenced_assets(&self) -> Vec<&str> {
        let mut out: Vec<&str> = self.asset.iter().map(String::as_str).collect();
        out.extend(self.options().iter().filter_map(|o| o.image.as_deref()));
        out
    }

    /// Structural invariants: one correct MC option with pairwise distinct
    /// option text, or a nonempty accepted list without duplicates.
    pub fn check(&self) -> Result<()> {
        let fail = |why: &str| {
            Err(Error::invalid(format!("question `{}`: {why}", self.title)))
        };
        if self.title.is_empty() {
            return fail("empty title");
        }
        match &self.answer {
            Answer::MultipleChoice(options) => {
                if options.len() < 2 {
                    return fail("fewer than two options");
                }
                if options.iter().filter(|o| o.correct).count() != 1 {
                    return fail("must have exactly one correct option");
                }
                let distinct: BTreeSet<&str> = options.iter().map(|o| o.text.as_str()).collect();
                if distinct.len() != options.len() {
                    return fail("option texts collide");
                }
            }
            Answer::FillIn { label, accepted } => {
                if label.is_empty() {
                    return fail("empty answer label");
                }
                if accepted.is_empty() {
                    return fail("no accepted answers");
                }
                let distinct: BTreeSet<&str> = accepted.iter().map(String::as_str).collect();
                if distinct.len() != accepted.len() {
                    return fail("duplicate accepted answers");
                }
            }
        }
        Ok(())
    }
}

/// Structured data behind a generated question, kept for answer checking.
#[derive(Debug, Clone, PartialEq)]
pub enum ItemData {
    Linear(LinearEquation),
    Correlation { draw: CorrelationDraw, sample: SampleXY },
    Trapezoid { shape: LatticeTrapezoid, ask: Ask },
    Quadratic { poly: IntPolynomial, roots: (Rational, Rational) },
    Binomial { first: char, second: char },
    Dice { target: i64 },
    ZScore { x: i64, mean: i64, sd: i64 },
    Histogram { values: Vec<f64>, shape: HistogramShape },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedItem {
    pub question: Question,
    pub assets: Vec<ImageAsset>,
    pub data: ItemData,
}

/// Generator bounds. Defaults reproduce the magnitudes of the published
/// examples (constants such as 842 and 1066, single-digit fractions).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Integer equations: variable coefficients in `[-lin_coef, lin_coef] \ {0}`.
    pub lin_coef: i64,
    /// Integer equations: constants in `[-lin_const, lin_const] \ {0}`.
    pub lin_const: i64,
    /// Integer equations: solution in `[-lin_solution, lin_solution]`.
    pub lin_solution: i64,
    /// Rational equations: numerators in `[-rat_numer, rat_numer] \ {0}`.
    pub rat_numer: i64,
    /// Rational equations: denominators in `[2, rat_denom]`.
    pub rat_denom: i64,
    /// Quadratics: roots in `[-quad_root, quad_root]`.
    pub quad_root: i64,
    /// Quadratics: leading coefficient in `[1, quad_lead]`.
    pub quad_lead: i64,
    pub z_mean_min: i64,
    pub z_mean_max: i64,
    pub z_sd_min: i64,
    pub z_sd_max: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            lin_coef: 20,
            lin_const: 1100,
            lin_solution: 50,
            rat_numer: 9,
            rat_denom: 9,
            quad_root: 9,
            quad_lead: 3,
            z_mean_min: 50,
            z_mean_max: 100,
            z_sd_min: 2,
            z_sd_max: 20,
        }
    }
}

impl Bounds {
    pub fn validate(&self) -> Result<()> {
        let checks = [
            (self.lin_coef >= 1, "lin_coef must be at least 1"),
            (self.lin_const >= 1, "lin_const must be at least 1"),
            (self.lin_solution >= 0, "lin_solution must be non-negative"),
            (self.rat_numer >= 1, "rat_numer must be at least 1"),
            (self.rat_denom >= 2, "rat_denom must be at least 2"),
            (self.quad_root >= 2, "quad_root must be at least 2"),
            (self.quad_lead >= 1, "quad_lead must be at least 1"),
            (self.z_mean_min <= self.z_mean_max, "z_mean_min exceeds z_mean_max"),
            (self.z_sd_min >= 1, "z_sd_min must be at least 1"),
            (self.z_sd_min <= self.z_sd_max, "z_sd_min exceeds z_sd_max"),
        ];
        for (ok, why) in checks {
            if !ok {
                return Err(Error::invalid(why));
            }
        }
        // every magnitude is kept well inside i64 so exact arithmetic cannot overflow
        let all = [
            self.lin_coef,
            self.lin_const,
            self.lin_solution,
            self.rat_numer,
            self.rat_denom,
            self.quad_root,
            self.quad_lead,
            self.z_mean_min.abs(),
            self.z_mean_max.abs(),
            self.z_sd_max,
        ];
        if all.iter().any(|&v| v > 1_000_000) {
            return Err(Error::invalid("bounds above 1e6 are not supported"));
        }
        Ok(())
    }
}

pub(crate) const MAX_ATTEMPTS: u32 = 100;

/// Runs `draw` until it yields a value; `Ok(None)` marks a degenerate draw.
pub(crate) fn retry<T>(
    family: &'static str,
    mut draw: impl FnMut() -> Result<Option<T>>,
) -> Result<T> {
    for _ in 0..MAX_ATTEMPTS {
        if let Some(v) = draw()? {
            return Ok(v);
        }
    }
    Err(Error::RetriesExhausted {
        family,
        attempts: MAX_ATTEMPTS,
    })
}

/// Two-decimal display, rounding half away from zero; never prints `-0.00`.
pub fn display_round2(v: f64) -> String {
    let k = libm::round(v * 100.0);
    format_scaled(k < 0.0, libm::fabs(k) as u128, 2)
}

pub(crate) fn shuffled(stream: &mut RngStream, mut options: Vec<McOption>) -> Vec<McOption> {
    stream.shuffle(&mut options);
    options
}

pub(crate) fn option_letter(i: usize) -> char {
    (b'a' + (i % 26) as u8) as char
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rounding_display() {
        assert_eq!(display_round2(-0.7849), "-0.78");
        assert_eq!(display_round2(0.125), "0.13");
        assert_eq!(display_round2(-0.125), "-0.13");
        assert_eq!(display_round2(-0.001), "0.00");
        assert_eq!(display_round2(0.97), "0.97");
        assert_eq!(display_round2(1.0), "1.00");
    }

    #[test]
    fn question_checks() {
        let mut q = Question {
            title: "T-0001".into(),
            stem: "s".into(),
            display: None,
            answer: Answer::MultipleChoice(vec![McOption::new("1", true), McOption::new("2", false)]),
            asset: None,
        };
        assert!(q.check().is_ok());
        q.answer = Answer::MultipleChoice(vec![McOption::new("1", true), McOption::new("1", false)]);
        assert!(q.check().is_err());
        q.answer = Answer::MultipleChoice(vec![McOption::new("1", true), McOption::new("2", true)]);
        assert!(q.check().is_err());
        q.answer = Answer::FillIn { label: "x".into(), accepted: vec![] };
        assert!(q.check().is_err());
        q.answer = Answer::FillIn { label: "x".into(), accepted: vec!["1".into()] };
        assert!(q.check().is_ok());
    }

    #[test]
    fn bounds_validation() {
        assert!(Bounds::default().validate().is_ok());
        let b = Bounds { rat_denom: 1, ..Bounds::default() };
        assert!(b.validate().is_err());
        let b = Bounds { z_sd_min: 5, z_sd_max: 4, ..Bounds::default() };
        assert!(b.validate().is_err());
    }
}
