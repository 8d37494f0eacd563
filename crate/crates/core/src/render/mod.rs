//! Deterministic SVG figures referenced by questions.
//!
//! Every renderer is a pure function of its inputs: coordinates are written
//! with fixed precision, there are no timestamps or generated ids, and the
//! typeset expressions are drawn as stroked paths so nothing depends on the
//! fonts installed where the file is opened.

mod histogram;
mod lattice;
mod scatter;
mod typeset;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

pub use histogram::{histogram_counts, render_histogram};
pub use lattice::{render_lattice_figure, DEFAULT_GRID_EXTENT};
pub use scatter::{render_scatterplot, DEFAULT_SCATTER_WIDTH};
pub use typeset::render_typeset_radical;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ImageFormat {
    Svg,
}

impl ImageFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ImageFormat::Svg => "svg",
        }
    }
}

/// A rendered figure and the file name questions use to refer to it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ImageAsset {
    pub filename: String,
    pub format: ImageFormat,
    pub width_px: u32,
    pub bytes: Vec<u8>,
}

impl ImageAsset {
    /// Same image under another name.
    pub fn renamed(mut self, filename: String) -> Self {
        self.filename = filename;
        self
    }
}

/// `<family><index, zero-padded to 4 digits>.<ext>`, e.g. `correlation0029.svg`.
pub fn asset_filename(family: &str, index: u32, format: ImageFormat) -> String {
    format!("{family}{index:04}.{}", format.extension())
}

/// Fixed two-decimal coordinate, never `-0.00`.
pub(crate) fn coord(v: f64) -> String {
    format!("{:.2}", libm::round(v * 100.0) / 100.0 + 0.0)
}

pub(crate) struct Svg {
    body: String,
    width: u32,
}

impl Svg {
    pub(crate) fn new(width: u32, height: u32) -> Self {
        let mut body = String::new();
        let _ = write!(
            body,
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
             <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
             width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n\
             <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n"
        );
        Svg { body, width }
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn line(&mut self, class: &str, x1: f64, y1: f64, x2: f64, y2: f64, stroke: &str, w: f64) {
        let _ = writeln!(
            self.body,
            "<line class=\"{class}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" stroke-width=\"{}\"/>",
            coord(x1),
            coord(y1),
            coord(x2),
            coord(y2),
            coord(w)
        );
    }

    pub(crate) fn circle(&mut self, class: &str, cx: f64, cy: f64, r: f64, fill: &str) {
        let _ = writeln!(
            self.body,
            "<circle class=\"{class}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\"/>",
            coord(cx),
            coord(cy),
            coord(r)
        );
    }

    pub(crate) fn text(&mut self, x: f64, y: f64, anchor: &str, rotate: bool, content: &str) {
        let transform = if rotate {
            format!(" transform=\"rotate(-90 {} {})\"", coord(x), coord(y))
        } else {
            String::new()
        };
        let _ = writeln!(
            self.body,
            "<text x=\"{}\" y=\"{}\" font-family=\"Arial, sans-serif\" font-size=\"14\" text-anchor=\"{anchor}\"{transform}>{}</text>",
            coord(x),
            coord(y),
            escape_xml(content)
        );
    }

    pub(crate) fn raw(&mut self, element: &str) {
        self.body.push_str(element);
        self.body.push('\n');
    }

    pub(crate) fn finish(mut self, filename: String) -> ImageAsset {
        self.body.push_str("</svg>\n");
        ImageAsset {
            filename,
            format: ImageFormat::Svg,
            width_px: self.width,
            bytes: self.body.into_bytes(),
        }
    }
}

pub(crate) fn escape_xml(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

/// Roughly five round tick values covering `[0, max]`.
pub(crate) fn ticks(max: f64) -> Vec<f64> {
    let raw = max / 5.0;
    let magnitude = libm::pow(10.0, libm::floor(libm::log10(raw)));
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * magnitude)
        .find(|&s| s >= raw)
        .unwrap_or(10.0 * magnitude);
    let mut out = Vec::new();
    let mut k = 0.0;
    while k * step <= max * (1.0 + 1e-9) {
        out.push(k * step);
        k += 1.0;
    }
    out
}

pub(crate) fn tick_label(v: f64, max: f64) -> String {
    if max >= 5.0 {
        format!("{:.0}", v + 0.0)
    } else {
        format!("{:.1}", v + 0.0)
    }
}
