use alloc::string::String;

use super::{coord, tick_label, ticks, ImageAsset, Svg};
use crate::stats_sim::SampleXY;
use crate::{Error, Result};

pub const DEFAULT_SCATTER_WIDTH: u32 = 500;

const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 60.0;

/// Square scatterplot with both axes spanning `[0, max(x ∪ y)]`, labelled
/// "Variable 1" and "Variable 2". Expects a first-quadrant sample.
pub fn render_scatterplot(s: &SampleXY, width_px: u32, filename: String) -> Result<ImageAsset> {
    if s.len() < 2 {
        return Err(Error::invalid("scatterplot needs at least two points"));
    }
    if s.x.iter().chain(&s.y).any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::invalid("scatterplot expects finite, first-quadrant data"));
    }
    if width_px < 200 {
        return Err(Error::invalid("scatterplot width must be at least 200 px"));
    }
    let w = width_px as f64;
    let plot_w = w - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = w - MARGIN_TOP - MARGIN_BOTTOM;
    let max = match s.max_value() {
        m if m > 0.0 => m,
        _ => 1.0,
    };
    let px = |x: f64| MARGIN_LEFT + x / max * plot_w;
    let py = |y: f64| MARGIN_TOP + plot_h - y / max * plot_h;

    let mut svg = Svg::new(width_px, width_px);
    let (x0, y0) = (px(0.0), py(0.0));
    svg.line("axis", x0, y0, px(max), y0, "#000000", 1.0);
    svg.line("axis", x0, y0, x0, py(max), "#000000", 1.0);
    for t in ticks(max) {
        let label = tick_label(t, max);
        svg.line("tick", px(t), y0, px(t), y0 + 5.0, "#000000", 1.0);
        svg.text(px(t), y0 + 20.0, "middle", false, &label);
        svg.line("tick", x0 - 5.0, py(t), x0, py(t), "#000000", 1.0);
        svg.text(x0 - 8.0, py(t) + 5.0, "end", false, &label);
    }
    svg.text(MARGIN_LEFT + plot_w / 2.0, w - 15.0, "middle", false, "Variable 1");
    svg.text(20.0, MARGIN_TOP + plot_h / 2.0, "middle", true, "Variable 2");
    for (x, y) in s.x.iter().zip(&s.y) {
        svg.circle("pt", px(*x), py(*y), 3.0, "#1f4e9c");
    }
    // keeps the numeric range inspectable without parsing coordinates
    svg.raw(&alloc::format!("<desc>range 0 {}</desc>", coord(max)));
    Ok(svg.finish(filename))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stats_sim::{draw_correlation_params, sample_bivariate_normal, shift_to_first_quadrant, CorrelationDraw, RngStream};
    use alloc::string::ToString;
    use alloc::vec;

    fn sample(n: usize) -> SampleXY {
        let mut s = RngStream::new(29, 29);
        let d = CorrelationDraw { population_r: -0.78, sample_size: n };
        shift_to_first_quadrant(&sample_bivariate_normal(&d, &mut s))
    }

    #[test]
    fn one_circle_per_point_and_labels() {
        let s = sample(147);
        let asset = render_scatterplot(&s, DEFAULT_SCATTER_WIDTH, "correlation0029.svg".to_string()).unwrap();
        assert_eq!(asset.width_px, 500);
        let text = core::str::from_utf8(&asset.bytes).unwrap();
        assert_eq!(text.matches("<circle class=\"pt\"").count(), 147);
        assert!(text.contains(">Variable 1</text>"));
        assert!(text.contains(">Variable 2</text>"));
        assert!(text.contains("width=\"500\""));
    }

    #[test]
    fn deterministic_bytes() {
        let s = sample(60);
        let a = render_scatterplot(&s, 500, "a.svg".to_string()).unwrap();
        let b = render_scatterplot(&s.clone(), 500, "a.svg".to_string()).unwrap();
        assert_eq!(a, b);
        let mut st = RngStream::new(1, 1);
        let d = draw_correlation_params(&mut st);
        let s = shift_to_first_quadrant(&sample_bivariate_normal(&d, &mut st));
        assert!(render_scatterplot(&s, 500, "b.svg".to_string()).is_ok());
    }

    #[test]
    fn rejects_bad_input() {
        let one = SampleXY::new(vec![0.0], vec![0.0]).unwrap();
        assert!(render_scatterplot(&one, 500, "x.svg".to_string()).is_err());
        let empty = SampleXY::new(vec![], vec![]).unwrap();
        assert!(render_scatterplot(&empty, 500, "x.svg".to_string()).is_err());
        let negative = SampleXY::new(vec![-1.0, 1.0], vec![0.0, 1.0]).unwrap();
        assert!(render_scatterplot(&negative, 500, "x.svg".to_string()).is_err());
    }
}
