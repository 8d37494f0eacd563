use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{
    gen_correlation_mc, gen_dice_sum_mc, gen_expand_binomial, gen_expand_binomial_mc,
    gen_factor_quadratic, gen_histogram_shape, gen_linear_int_int, gen_linear_rat_rat,
    gen_trapezoid_mc, gen_zscore, Ask, Bounds, GeneratedItem, QuestionKind,
};
use crate::emit::PoolDocument;
use crate::stats_sim::RngStream;
use crate::{Error, Result};

type Generator = fn(&mut RngStream, &Bounds, String, u32) -> Result<GeneratedItem>;

/// A registered question family. Titles are `name`, `separator`, then the
/// four-digit index.
#[derive(Clone, Copy)]
pub struct Family {
    pub name: &'static str,
    pub separator: &'static str,
    pub kind: QuestionKind,
    pub description: &'static str,
    generate: Generator,
}

impl core::fmt::Debug for Family {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Family")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .finish()
    }
}

impl Family {
    pub fn title(&self, index: u32) -> String {
        format!("{}{}{index:04}", self.name, self.separator)
    }
}

const fn fam(
    name: &'static str,
    separator: &'static str,
    kind: QuestionKind,
    description: &'static str,
    generate: Generator,
) -> Family {
    Family { name, separator, kind, description, generate }
}

use QuestionKind::{FillInBlank as Fitb, MultipleChoice as Mc};

pub const FAMILIES: [Family; 11] = [
    fam("LinEqIntCffIntSol", "-", Fitb, "linear equation, integer coefficients and solution",
        |s, b, t, _| gen_linear_int_int(s, b, t)),
    fam("LinEqRatCffRatAns", "-", Fitb, "linear equation, rational coefficients and solution",
        |s, b, t, _| gen_linear_rat_rat(s, b, t)),
    fam("Qcorr", "", Mc, "correlation of a simulated scatterplot",
        |s, _, t, i| gen_correlation_mc(s, t, i)),
    fam("TrapezoidArea", "-", Mc, "area of a lattice trapezoid",
        |s, _, t, i| gen_trapezoid_mc(s, Ask::Area, t, i)),
    fam("TrapezoidPerimeter", "-", Mc, "perimeter of a lattice trapezoid",
        |s, _, t, i| gen_trapezoid_mc(s, Ask::Perimeter, t, i)),
    fam("FactorQuadratic", "-", Mc, "roots of a factorable quadratic",
        |s, b, t, _| gen_factor_quadratic(s, b, t)),
    fam("ExpandBinomial", "-", Fitb, "expand a binomial square",
        |s, _, t, _| gen_expand_binomial(s, t)),
    fam("ExpandBinomialMC", "-", Mc, "expand a binomial square, multiple choice",
        |s, _, t, _| gen_expand_binomial_mc(s, t)),
    fam("DiceSum", "-", Mc, "probability of a two-dice sum",
        |s, _, t, _| gen_dice_sum_mc(s, t)),
    fam("ZScore", "-", Fitb, "z-score of a value",
        |s, b, t, _| gen_zscore(s, b, t)),
    fam("HistShape", "-", Mc, "shape of a histogram (placeholder)",
        |s, _, t, i| gen_histogram_shape(s, t, i)),
];

pub fn family(name: &str) -> Result<&'static Family> {
    FAMILIES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFamily(name.into()))
}

/// Question `index` of `family`, drawn from stream `index` of `master_seed`.
pub fn generate_item(
    family: &Family,
    master_seed: u64,
    index: u32,
    bounds: &Bounds,
) -> Result<GeneratedItem> {
    let mut stream = RngStream::new(master_seed, index as u64);
    (family.generate)(&mut stream, bounds, family.title(index), index)
}

pub fn assemble_pool(name: &str, count: u32, master_seed: u64, start_index: u32) -> Result<PoolDocument> {
    assemble_pool_with(name, count, master_seed, start_index, &Bounds::default())
}

/// `count` questions with indices `start_index..start_index + count`. The
/// clock is left empty for the caller to fill in.
pub fn assemble_pool_with(
    name: &str,
    count: u32,
    master_seed: u64,
    start_index: u32,
    bounds: &Bounds,
) -> Result<PoolDocument> {
    let fam = family(name)?;
    if count == 0 {
        return Err(Error::invalid("count must be at least 1"));
    }
    if start_index == 0 {
        return Err(Error::invalid("start index must be at least 1"));
    }
    let end = start_index
        .checked_add(count - 1)
        .filter(|&e| e <= 9999)
        .ok_or_else(|| Error::invalid("question indices must stay within 1..=9999"))?;
    bounds.validate()?;
    let mut questions = Vec::with_capacity(count as usize);
    let mut assets = Vec::new();
    for index in start_index..=end {
        let item = generate_item(fam, master_seed, index, bounds)?;
        questions.push(item.question);
        assets.extend(item.assets);
    }
    Ok(PoolDocument {
        pool_name: fam.name.into(),
        questions,
        assets,
        clock: String::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn titles() {
        let p = assemble_pool("Qcorr", 1, 7, 29).unwrap();
        assert_eq!(p.questions[0].title, "Qcorr0029");
        assert_eq!(p.assets[0].filename, "correlation0029.svg");
        let p = assemble_pool("LinEqIntCffIntSol", 3, 7, 31).unwrap();
        let t: Vec<&str> = p.questions.iter().map(|q| q.title.as_str()).collect();
        assert_eq!(t, ["LinEqIntCffIntSol-0031", "LinEqIntCffIntSol-0032", "LinEqIntCffIntSol-0033"]);
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(matches!(assemble_pool("Nope", 1, 0, 1), Err(Error::UnknownFamily(_))));
        assert!(assemble_pool("Qcorr", 0, 0, 1).is_err());
        assert!(assemble_pool("Qcorr", 1, 0, 0).is_err());
        assert!(assemble_pool("Qcorr", 2, 0, 9999).is_err());
    }

    #[test]
    fn every_family_generates_a_valid_pool() {
        for f in &FAMILIES {
            let p = assemble_pool(f.name, 5, 99, 1).unwrap();
            p.check().unwrap();
            assert!(p.questions.iter().all(|q| q.kind() == f.kind));
            assert_eq!(p, assemble_pool(f.name, 5, 99, 1).unwrap());
        }
    }

    #[test]
    fn question_depends_on_index_not_position() {
        let a = assemble_pool("DiceSum", 5, 3, 1).unwrap();
        let b = assemble_pool("DiceSum", 2, 3, 4).unwrap();
        assert_eq!(a.questions[3..], b.questions[..]);
    }
}
