use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{shuffled, Answer, GeneratedItem, ItemData, McOption, Question};
use crate::exactmath::enumerate_expansion_forms;
use crate::stats_sim::RngStream;
use crate::Result;

pub const EXPAND_STEM: &str = "Expand the following expression.";

pub const SYMBOL_PAIRS: [(char, char); 6] =
    [('a', 'b'), ('x', 'y'), ('m', 'n'), ('p', 'q'), ('s', 't'), ('u', 'v')];

fn draw_symbols(stream: &mut RngStream) -> (char, char) {
    let (p, q) = stream.choose(&SYMBOL_PAIRS);
    if stream.coin() {
        (q, p)
    } else {
        (p, q)
    }
}

fn square_text(first: char, second: char) -> String {
    format!("({first} + {second})^2")
}

/// Fill-in-the-blank expansion of `(first + second)^2`; every ordering of
/// the expanded terms is accepted.
pub fn gen_expand_binomial(stream: &mut RngStream, title: String) -> Result<GeneratedItem> {
    let (first, second) = draw_symbols(stream);
    let expr = square_text(first, second);
    let accepted = enumerate_expansion_forms(first, second)?;
    Ok(GeneratedItem {
        question: Question {
            title,
            stem: EXPAND_STEM.into(),
            display: Some(expr.clone()),
            answer: Answer::FillIn { label: expr, accepted },
            asset: None,
        },
        assets: Vec::new(),
        data: ItemData::Binomial { first, second },
    })
}

/// Multiple-choice expansion; the distractors include the "square each
/// term" rule `p^2 + q^2`.
pub fn gen_expand_binomial_mc(stream: &mut RngStream, title: String) -> Result<GeneratedItem> {
    let (first, second) = draw_symbols(stream);
    let (p, q) = if first < second { (first, second) } else { (second, first) };
    let options = [
        format!("{p}^2 + 2{p}{q} + {q}^2"),
        format!("{p}^2 + {q}^2"),
        format!("{p}^2 + {p}{q} + {q}^2"),
        format!("2{p} + 2{q}"),
    ]
    .into_iter()
    .enumerate()
    .map(|(i, t)| McOption::new(t, i == 0))
    .collect();
    Ok(GeneratedItem {
        question: Question {
            title,
            stem: EXPAND_STEM.into(),
            display: Some(square_text(first, second)),
            answer: Answer::MultipleChoice(shuffled(stream, options)),
            asset: None,
        },
        assets: Vec::new(),
        data: ItemData::Binomial { first, second },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::MonomialForm;

    #[test]
    fn fill_in_forms_all_expand_correctly() {
        for i in 0..100u64 {
            let item = gen_expand_binomial(&mut RngStream::new(3, i), "ExpandBinomial-0001".into()).unwrap();
            item.question.check().unwrap();
            let ItemData::Binomial { first, second } = item.data else { panic!() };
            assert_eq!(item.question.accepted().len(), 12);
            for f in item.question.accepted() {
                let form: MonomialForm = f.parse().unwrap();
                assert_eq!(form.eval(&[(first, 2), (second, 3)]).unwrap(), 25);
                assert_eq!(form.eval(&[(first, -4), (second, 7)]).unwrap(), 9);
            }
        }
    }

    #[test]
    fn mc_contains_square_each_term_distractor() {
        for i in 0..100u64 {
            let item = gen_expand_binomial_mc(&mut RngStream::new(3, i), "ExpandBinomialMC-0001".into()).unwrap();
            item.question.check().unwrap();
            let ItemData::Binomial { first, second } = item.data else { panic!() };
            let (p, q) = if first < second { (first, second) } else { (second, first) };
            let texts: Vec<&str> = item.question.options().iter().map(|o| o.text.as_str()).collect();
            assert!(texts.contains(&format!("{p}^2 + {q}^2").as_str()));
            for o in item.question.options() {
                let form: MonomialForm = o.text.parse().unwrap();
                let ok = [(2, 3), (-4, 7), (5, 1)].iter().all(|&(a, b)| {
                    form.eval(&[(first, a), (second, b)]).unwrap() == ((a + b) * (a + b)) as i128
                });
                assert_eq!(ok, o.correct, "{}", o.text);
            }
        }
    }
}
