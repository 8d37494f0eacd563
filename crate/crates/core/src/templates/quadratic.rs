use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{retry, shuffled, Answer, Bounds, GeneratedItem, ItemData, McOption, Question};
use crate::exactmath::{quadratic_from_roots, Rational};
use crate::stats_sim::RngStream;
use crate::Result;

/// `x = a or x = b` with the two values in ascending order.
pub fn root_pair_text(var: char, r1: i64, r2: i64) -> String {
    let (lo, hi) = if r1 <= r2 { (r1, r2) } else { (r2, r1) };
    format!("{var} = {lo} or {var} = {hi}")
}

/// Monic-times-`lead` quadratic with distinct nonzero integer roots. The
/// options are the true root pair, both roots sign-flipped (also what a
/// student gets by reading the factors `(x - 2)(x - 3)` as roots -2 and -3),
/// one root sign-flipped, and the coefficients read off as `{-b, c}`.
pub fn gen_factor_quadratic(
    stream: &mut RngStream,
    bounds: &Bounds,
    title: String,
) -> Result<GeneratedItem> {
    let (poly, r1, r2, options) = retry("FactorQuadratic", || {
        let r1 = stream.nonzero_int(bounds.quad_root);
        let r2 = stream.nonzero_int(bounds.quad_root);
        let lead = stream.int_inclusive(1, bounds.quad_lead);
        if r1 == r2 || r1 == -r2 {
            return Ok(None);
        }
        let poly = quadratic_from_roots(Rational::from_integer(r1), Rational::from_integer(r2), lead)?;
        let (b, c) = (poly.coefficient(1), poly.coefficient(0));
        if -b == c {
            return Ok(None);
        }
        let pairs = [(r1, r2), (-r1, -r2), (-r1, r2), (-b, c)];
        let texts: Vec<String> = pairs.iter().map(|&(p, q)| root_pair_text('x', p, q)).collect();
        let mut sorted = texts.clone();
        sorted.sort();
        sorted.dedup();
        Ok((sorted.len() == texts.len()).then_some((poly, r1, r2, texts)))
    })?;
    let options = options
        .into_iter()
        .enumerate()
        .map(|(i, t)| McOption::new(t, i == 0))
        .collect();
    let question = Question {
        title,
        stem: format!("Solve {} = 0.", poly.to_text('x')),
        display: None,
        answer: Answer::MultipleChoice(shuffled(stream, options)),
        asset: None,
    };
    Ok(GeneratedItem {
        question,
        assets: Vec::new(),
        data: ItemData::Quadratic {
            poly,
            roots: (Rational::from_integer(r1), Rational::from_integer(r2)),
        },
    })
}
