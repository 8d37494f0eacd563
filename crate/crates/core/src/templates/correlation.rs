use alloc::string::String;
use alloc::vec::Vec;

use super::{display_round2, retry, shuffled, Answer, GeneratedItem, ItemData, McOption, Question};
use crate::render::{asset_filename, render_scatterplot, ImageFormat, DEFAULT_SCATTER_WIDTH};
use crate::stats_sim::{
    draw_correlation_params, sample_bivariate_normal, sample_correlation, shift_to_first_quadrant,
    RngStream,
};
use crate::{Error, Result};

pub const CORRELATION_STEM: &str =
    "Which of the following choices best describes the correlation of the scatterplot below?";
pub const CORRELATION_ASSET_FAMILY: &str = "correlation";

/// Builds the scatterplot question from already-formatted option values in
/// display order; `correct` indexes into `options`.
pub fn correlation_question(
    title: String,
    asset: String,
    options: &[&str],
    correct: usize,
) -> Question {
    Question {
        title,
        stem: CORRELATION_STEM.into(),
        display: None,
        answer: Answer::MultipleChoice(
            options
                .iter()
                .enumerate()
                .map(|(i, &t)| McOption::new(t, i == correct))
                .collect(),
        ),
        asset: Some(asset),
    }
}

/// Scatterplot of a simulated bivariate normal sample. The options are the
/// rounded sample correlation r, its negative, and values near 1, 0 and −1
/// (drawn from [0.90, 0.99], [−0.08, 0.08] and the negative of the first).
pub fn gen_correlation_mc(stream: &mut RngStream, title: String, index: u32) -> Result<GeneratedItem> {
    let (draw, sample, options) = retry("Qcorr", || {
        let draw = draw_correlation_params(stream);
        let sample = shift_to_first_quadrant(&sample_bivariate_normal(&draw, stream));
        let r = match sample_correlation(&sample) {
            Ok(r) => r,
            Err(Error::DegenerateSample(_)) => return Ok(None),
            Err(e) => return Err(e),
        };
        let near_one = stream.uniform(0.90, 0.99);
        let near_zero = display_round2(stream.uniform(-0.08, 0.08));
        let correct = display_round2(r);
        let options: Vec<String> = [
            correct.clone(),
            display_round2(-r),
            display_round2(near_one),
            near_zero,
            display_round2(-near_one),
        ]
        .into();
        let mut sorted = options.clone();
        sorted.sort();
        sorted.dedup();
        Ok((sorted.len() == options.len()).then_some((draw, sample, options)))
    })?;
    let mcq = options
        .into_iter()
        .enumerate()
        .map(|(i, t)| McOption::new(t, i == 0))
        .collect();
    let filename = asset_filename(CORRELATION_ASSET_FAMILY, index, ImageFormat::Svg);
    let figure = render_scatterplot(&sample, DEFAULT_SCATTER_WIDTH, filename.clone())?;
    Ok(GeneratedItem {
        question: Question {
            title,
            stem: CORRELATION_STEM.into(),
            display: None,
            answer: Answer::MultipleChoice(shuffled(stream, mcq)),
            asset: Some(filename),
        },
        assets: alloc::vec![figure],
        data: ItemData::Correlation { draw, sample },
    })
}
