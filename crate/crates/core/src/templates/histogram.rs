use alloc::string::String;
use alloc::vec::Vec;

use super::{retry, shuffled, Answer, GeneratedItem, ItemData, McOption, Question};
use crate::render::{asset_filename, render_histogram, ImageFormat};
use crate::stats_sim::{sample_skewness, RngStream};
use crate::Result;

pub const HISTOGRAM_STEM: &str =
    "Which of the following best describes the shape of the histogram below?";

const SAMPLE_SIZE: usize = 200;
const BINS: usize = 10;
const WIDTH: u32 = 500;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HistogramShape {
    SkewedRight,
    Symmetric,
    SkewedLeft,
}

impl HistogramShape {
    pub const ALL: [HistogramShape; 3] =
        [HistogramShape::SkewedRight, HistogramShape::Symmetric, HistogramShape::SkewedLeft];

    pub fn label(self) -> &'static str {
        match self {
            HistogramShape::SkewedRight => "Skewed right",
            HistogramShape::Symmetric => "Symmetric",
            HistogramShape::SkewedLeft => "Skewed left",
        }
    }

    /// Whether a sample skewness is clearly in this shape's band.
    pub fn matches(self, skewness: f64) -> bool {
        match self {
            HistogramShape::SkewedRight => skewness > 0.5,
            HistogramShape::Symmetric => skewness.abs() < 0.25,
            HistogramShape::SkewedLeft => skewness < -0.5,
        }
    }

    fn sample(self, stream: &mut RngStream) -> Vec<f64> {
        (0..SAMPLE_SIZE)
            .map(|_| match self {
                HistogramShape::SkewedRight => 10.0 + 8.0 * stream.standard_exponential(),
                HistogramShape::Symmetric => 30.0 + 6.0 * stream.standard_normal(),
                HistogramShape::SkewedLeft => 50.0 - 8.0 * stream.standard_exponential(),
            })
            .map(|v| libm::round(v * 10.0) / 10.0)
            .collect()
    }
}

/// Shape identification from a histogram of 200 simulated values. Drawn
/// samples are kept only when their skewness falls clearly inside the band
/// of the intended shape.
pub fn gen_histogram_shape(stream: &mut RngStream, title: String, index: u32) -> Result<GeneratedItem> {
    let shape = HistogramShape::ALL[stream.int_inclusive(0, 2) as usize];
    let values = retry("HistShape", || {
        let v = shape.sample(stream);
        Ok(shape.matches(sample_skewness(&v)?).then_some(v))
    })?;
    let filename = asset_filename("histogram", index, ImageFormat::Svg);
    let figure = render_histogram(&values, BINS, WIDTH, filename.clone())?;
    let options = HistogramShape::ALL
        .iter()
        .map(|&s| McOption::new(s.label(), s == shape))
        .collect();
    Ok(GeneratedItem {
        question: Question {
            title,
            stem: HISTOGRAM_STEM.into(),
            display: None,
            answer: Answer::MultipleChoice(shuffled(stream, options)),
            asset: Some(filename),
        },
        assets: alloc::vec![figure],
        data: ItemData::Histogram { values, shape },
    })
}
