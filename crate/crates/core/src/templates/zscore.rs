use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Answer, Bounds, GeneratedItem, ItemData, Question};
use crate::exactmath::Rational;
use crate::stats_sim::RngStream;
use crate::{Error, Result};

/// Accepted spellings of `(x - mean) / sd` to two decimals: the rounded
/// value, then with trailing zeros stripped one at a time, then without the
/// leading zero when `|z| < 1`.
pub fn zscore_accepted_forms(x: i64, mean: i64, sd: i64) -> Result<Vec<String>> {
    if sd <= 0 {
        return Err(Error::invalid("standard deviation must be positive"));
    }
    let z = Rational::new(x.checked_sub(mean).ok_or(Error::Overflow)?, sd)?;
    let fixed = z.to_fixed(2)?;
    let mut out = alloc::vec![fixed.clone()];
    let mut s = fixed.clone();
    while s.contains('.') && s.ends_with('0') {
        s.pop();
        if s.ends_with('.') {
            s.pop();
        }
        out.push(s.clone());
    }
    let (sign, body) = match fixed.strip_prefix('-') {
        Some(b) => ("-", b),
        None => ("", fixed.as_str()),
    };
    if let Some(frac) = body.strip_prefix("0.") {
        out.push(format!("{sign}.{frac}"));
    }
    Ok(out)
}

pub fn gen_zscore(stream: &mut RngStream, bounds: &Bounds, title: String) -> Result<GeneratedItem> {
    let mean = stream.int_inclusive(bounds.z_mean_min, bounds.z_mean_max);
    let sd = stream.int_inclusive(bounds.z_sd_min, bounds.z_sd_max);
    let x = mean + stream.int_inclusive(-3 * sd, 3 * sd);
    let accepted = zscore_accepted_forms(x, mean, sd)?;
    Ok(GeneratedItem {
        question: Question {
            title,
            stem: format!(
                "Compute the z-score of x = {x} given mean {mean} and standard deviation {sd}. Give your answer to two decimal places."
            ),
            display: None,
            answer: Answer::FillIn { label: "z".into(), accepted },
            asset: None,
        },
        assets: Vec::new(),
        data: ItemData::ZScore { x, mean, sd },
    })
}
