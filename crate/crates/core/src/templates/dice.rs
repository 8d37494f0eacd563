use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{shuffled, Answer, GeneratedItem, ItemData, McOption, Question};
use crate::exactmath::Rational;
use crate::stats_sim::{dice_sum_probability, RngStream};
use crate::{Error, Result};

fn round2(r: Rational) -> Result<String> {
    r.to_fixed(2)
}

/// Distractor values for target `t`, rounded: `t/36`, the neighbouring
/// targets, unordered pairs over 21, and 1/11 (sums treated as equally
/// likely). Values equal to the rounded correct answer or to each other are
/// dropped; at most three are kept.
pub fn dice_distractors(target: i64) -> Result<Vec<String>> {
    let correct = round2(dice_sum_probability(target)?)?;
    let unordered = (1..=6)
        .flat_map(|a| (a..=6).map(move |b| a + b))
        .filter(|&s| s == target)
        .count() as i64;
    let mut pool = alloc::vec![Rational::new(target, 36)?];
    for t in [target - 1, target + 1] {
        if (2..=12).contains(&t) {
            pool.push(dice_sum_probability(t)?);
        }
    }
    pool.push(Rational::new(unordered, 21)?);
    pool.push(Rational::new(1, 11)?);
    let mut out: Vec<String> = Vec::new();
    for r in pool {
        let s = round2(r)?;
        if s != correct && !out.contains(&s) {
            out.push(s);
        }
    }
    out.truncate(3);
    Ok(out)
}

pub fn gen_dice_sum_mc(stream: &mut RngStream, title: String) -> Result<GeneratedItem> {
    let target = stream.int_inclusive(2, 12);
    let correct = round2(dice_sum_probability(target)?)?;
    let distractors = dice_distractors(target)?;
    if distractors.len() < 3 {
        return Err(Error::invalid(format!("too few dice distractors for {target}")));
    }
    let mut options = alloc::vec![McOption::new(correct, true)];
    options.extend(distractors.into_iter().map(|d| McOption::new(d, false)));
    Ok(GeneratedItem {
        question: Question {
            title,
            stem: format!(
                "Two fair six-sided dice are rolled. What is the probability that the sum of the dice is {target}?"
            ),
            display: None,
            answer: Answer::MultipleChoice(shuffled(stream, options)),
            asset: None,
        },
        assets: Vec::new(),
        data: ItemData::Dice { target },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_has_target_over_36_distractor() {
        let d = dice_distractors(5).unwrap();
        assert!(d.contains(&"0.14".into()));
        assert!(!d.contains(&"0.11".into()));
    }

    #[test]
    fn every_target_gets_four_options() {
        for t in 2..=12 {
            let d = dice_distractors(t).unwrap();
            assert_eq!(d.len(), 3, "target {t}");
        }
        for i in 0..200u64 {
            let item = gen_dice_sum_mc(&mut RngStream::new(9, i), "DiceSum-0001".into()).unwrap();
            item.question.check().unwrap();
            assert_eq!(item.question.options().len(), 4);
        }
    }
}
