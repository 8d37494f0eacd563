//! Seeded random streams and the small statistical routines used by the
//! question generators.

mod rng;

use alloc::vec::Vec;

pub use rng::RngStream;

use crate::exactmath::Rational;
use crate::{Error, Result};

/// Population correlation and sample size for one scatterplot question.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationDraw {
    pub population_r: f64,
    pub sample_size: usize,
}

pub const CORRELATION_ABS_RANGE: (f64, f64) = (0.5, 0.8);
pub const SAMPLE_SIZE_RANGE: (usize, usize) = (50, 200);

/// Paired observations.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleXY {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

impl SampleXY {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::invalid("x and y lengths differ"));
        }
        if x.iter().chain(&y).any(|v| !v.is_finite()) {
            return Err(Error::invalid("sample values must be finite"));
        }
        Ok(SampleXY { x, y })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Largest coordinate over both variables.
    pub fn max_value(&self) -> f64 {
        self.x
            .iter()
            .chain(&self.y)
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Draws |ρ| uniform on [0.5, 0.8], then its sign by a fair coin, then an
/// integer sample size uniform on [50, 200], in that order.
pub fn draw_correlation_params(stream: &mut RngStream) -> CorrelationDraw {
    let (lo, hi) = CORRELATION_ABS_RANGE;
    let magnitude = lo + (hi - lo) * stream.uniform01();
    let population_r = if stream.coin() { magnitude } else { -magnitude };
    let (nlo, nhi) = SAMPLE_SIZE_RANGE;
    let sample_size = stream.int_inclusive(nlo as i64, nhi as i64) as usize;
    CorrelationDraw {
        population_r,
        sample_size,
    }
}

/// Standard bivariate normal sample with correlation ρ:
/// `x = z1`, `y = ρ·z1 + √(1 − ρ²)·z2` for independent standard normals,
/// drawn pairwise as `(z1, z2)` from the stream.
pub fn sample_bivariate_normal(draw: &CorrelationDraw, stream: &mut RngStream) -> SampleXY {
    let rho = draw.population_r;
    let residual = libm::sqrt(1.0 - rho * rho);
    let mut x = Vec::with_capacity(draw.sample_size);
    let mut y = Vec::with_capacity(draw.sample_size);
    for _ in 0..draw.sample_size {
        let z1 = stream.standard_normal();
        let z2 = stream.standard_normal();
        x.push(z1);
        y.push(rho * z1 + residual * z2);
    }
    SampleXY { x, y }
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Pearson correlation, clamped to [−1, 1].
pub fn sample_correlation(s: &SampleXY) -> Result<f64> {
    if s.len() < 2 || s.x.len() != s.y.len() {
        return Err(Error::DegenerateSample("need at least two paired points"));
    }
    let (mx, my) = (mean(&s.x), mean(&s.y));
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in s.x.iter().zip(&s.y) {
        let (dx, dy) = (x - mx, y - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::DegenerateSample("a variable has zero variance"));
    }
    Ok((sxy / libm::sqrt(sxx * syy)).clamp(-1.0, 1.0))
}

/// Translates each variable with negative values so its minimum is zero.
pub fn shift_to_first_quadrant(s: &SampleXY) -> SampleXY {
    fn shift(v: &[f64]) -> Vec<f64> {
        let min = v.iter().copied().fold(f64::INFINITY, f64::min);
        if min < 0.0 {
            v.iter().map(|x| x - min).collect()
        } else {
            v.to_vec()
        }
    }
    SampleXY {
        x: shift(&s.x),
        y: shift(&s.y),
    }
}

/// Sample skewness `m3 / m2^(3/2)` with population moments.
pub fn sample_skewness(values: &[f64]) -> Result<f64> {
    if values.len() < 2 {
        return Err(Error::DegenerateSample("need at least two values"));
    }
    let m = mean(values);
    let n = values.len() as f64;
    let m2 = values.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / n;
    let m3 = values.iter().map(|v| (v - m) * (v - m) * (v - m)).sum::<f64>() / n;
    if m2 == 0.0 {
        return Err(Error::DegenerateSample("zero variance"));
    }
    Ok(m3 / libm::pow(m2, 1.5))
}

/// Probability that two fair dice sum to `target`, by counting the 36
/// ordered outcomes.
pub fn dice_sum_probability(target: i64) -> Result<Rational> {
    if !(2..=12).contains(&target) {
        return Err(Error::invalid("dice sum must be between 2 and 12"));
    }
    let favorable = (1..=6)
        .flat_map(|a| (1..=6).map(move |b| a + b))
        .filter(|&sum| sum == target)
        .count();
    Rational::new(favorable as i64, 36)
}

pub fn z_score(x: f64, mu: f64, sigma: f64) -> Result<f64> {
    if sigma.is_nan() || sigma <= 0.0 {
        return Err(Error::invalid("standard deviation must be positive"));
    }
    Ok((x - mu) / sigma)
}
