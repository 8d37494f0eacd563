use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{coord, tick_label, ticks, ImageAsset, Svg};
use crate::{Error, Result};

/// Counts over `bin_count` equal-width bins spanning `[min, max]`; the last
/// bin is closed on the right. A constant input uses the unit-width range
/// `[v, v + 1]`. Returns `(lower edge, bin width, counts)`.
pub fn histogram_counts(values: &[f64], bin_count: usize) -> Result<(f64, f64, Vec<usize>)> {
    if values.is_empty() {
        return Err(Error::invalid("histogram needs at least one value"));
    }
    if bin_count == 0 {
        return Err(Error::invalid("histogram needs at least one bin"));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::invalid("histogram values must be finite"));
    }
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let span = if max > min { max - min } else { 1.0 };
    let width = span / bin_count as f64;
    let mut counts = vec![0usize; bin_count];
    for &v in values {
        let k = libm::floor((v - min) / width) as usize;
        counts[k.min(bin_count - 1)] += 1;
    }
    Ok((min, width, counts))
}

const HEIGHT: f64 = 0.7;
const MARGIN_LEFT: f64 = 60.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 20.0;
const MARGIN_BOTTOM: f64 = 50.0;

/// Bar chart of [`histogram_counts`]; each bar carries its count in a
/// `data-count` attribute.
pub fn render_histogram(
    values: &[f64],
    bin_count: usize,
    width_px: u32,
    filename: String,
) -> Result<ImageAsset> {
    let (lower, bin_width, counts) = histogram_counts(values, bin_count)?;
    if width_px < 200 {
        return Err(Error::invalid("histogram width must be at least 200 px"));
    }
    let w = width_px as f64;
    let h = libm::round(w * HEIGHT);
    let plot_w = w - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = h - MARGIN_TOP - MARGIN_BOTTOM;
    let top_count = counts.iter().copied().max().unwrap_or(1).max(1) as f64;
    let bar_w = plot_w / bin_count as f64;
    let base = MARGIN_TOP + plot_h;

    let mut svg = Svg::new(width_px, h as u32);
    for (i, &c) in counts.iter().enumerate() {
        let bar_h = c as f64 / top_count * plot_h;
        svg.raw(&format!(
            "<rect class=\"bar\" data-count=\"{c}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#9db7d5\" stroke=\"#000000\" stroke-width=\"1.00\"/>",
            coord(MARGIN_LEFT + i as f64 * bar_w),
            coord(base - bar_h),
            coord(bar_w),
            coord(bar_h)
        ));
    }
    svg.line("axis", MARGIN_LEFT, base, MARGIN_LEFT + plot_w, base, "#000000", 1.0);
    svg.line("axis", MARGIN_LEFT, base, MARGIN_LEFT, MARGIN_TOP, "#000000", 1.0);
    for i in 0..=bin_count {
        let x = MARGIN_LEFT + i as f64 * bar_w;
        let edge = lower + i as f64 * bin_width;
        svg.line("tick", x, base, x, base + 5.0, "#000000", 1.0);
        if bin_count <= 12 || i % 2 == 0 {
            svg.text(x, base + 20.0, "middle", false, &format!("{:.1}", edge + 0.0));
        }
    }
    for t in ticks(top_count) {
        let y = base - t / top_count * plot_h;
        svg.line("tick", MARGIN_LEFT - 5.0, y, MARGIN_LEFT, y, "#000000", 1.0);
        svg.text(MARGIN_LEFT - 8.0, y + 5.0, "end", false, &tick_label(t, top_count.max(5.0)));
    }
    svg.text(20.0, MARGIN_TOP + plot_h / 2.0, "middle", true, "Frequency");
    Ok(svg.finish(filename))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn bar_counts(a: &ImageAsset) -> Vec<usize> {
        let t = core::str::from_utf8(&a.bytes).unwrap();
        t.match_indices("data-count=\"")
            .map(|(i, m)| {
                let rest = &t[i + m.len()..];
                rest[..rest.find('"').unwrap()].parse().unwrap()
            })
            .collect()
    }

    #[test]
    fn count_examples() {
        assert_eq!(histogram_counts(&[1.0, 1.0, 2.0], 2).unwrap().2, [2, 1]);
        assert_eq!(histogram_counts(&[4.0; 7], 1).unwrap().2, [7]);
        assert_eq!(histogram_counts(&[4.0; 7], 3).unwrap().2, [7, 0, 0]);
        assert!(histogram_counts(&[], 3).is_err());
        assert!(histogram_counts(&[1.0], 0).is_err());
    }

    #[test]
    fn bars_match_counts_and_sum() {
        let values: Vec<f64> = (0..97).map(|i| ((i * 37) % 101) as f64 / 7.0).collect();
        let a = render_histogram(&values, 9, 500, "h.svg".to_string()).unwrap();
        let bars = bar_counts(&a);
        assert_eq!(bars, histogram_counts(&values, 9).unwrap().2);
        assert_eq!(bars.iter().sum::<usize>(), 97);
        let b = render_histogram(&values, 9, 500, "h.svg".to_string()).unwrap();
        assert_eq!(a, b);

        let a = render_histogram(&[1.0, 1.0, 2.0], 2, 500, "h.svg".to_string()).unwrap();
        assert_eq!(bar_counts(&a), [2, 1]);
        assert!(render_histogram(&[], 2, 500, "h.svg".to_string()).is_err());
    }
}
