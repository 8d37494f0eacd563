use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{coord, escape_xml, ImageAsset, Svg};
use crate::exactmath::{RadicalSum, Rational};

/// Pixels per glyph unit. Glyphs live in a 4 × 8 box (y grows downward,
/// baseline at 8) and advance 6 units.
const SCALE: f64 = 3.0;
const ADVANCE: f64 = 6.0;
const SPACE: f64 = 3.0;
const PAD: f64 = 4.0;
const TOP: f64 = 3.0;

type Stroke = &'static [(f64, f64)];

fn glyph(c: char) -> &'static [Stroke] {
    match c {
        '0' => &[&[(0.0, 0.0), (4.0, 0.0), (4.0, 8.0), (0.0, 8.0), (0.0, 0.0)]],
        '1' => &[&[(1.0, 1.0), (2.0, 0.0), (2.0, 8.0)], &[(1.0, 8.0), (3.0, 8.0)]],
        '2' => &[&[(0.0, 0.0), (4.0, 0.0), (4.0, 4.0), (0.0, 4.0), (0.0, 8.0), (4.0, 8.0)]],
        '3' => &[&[(0.0, 0.0), (4.0, 0.0), (4.0, 8.0), (0.0, 8.0)], &[(1.0, 4.0), (4.0, 4.0)]],
        '4' => &[&[(0.0, 0.0), (0.0, 4.0), (4.0, 4.0)], &[(4.0, 0.0), (4.0, 8.0)]],
        '5' => &[&[(4.0, 0.0), (0.0, 0.0), (0.0, 4.0), (4.0, 4.0), (4.0, 8.0), (0.0, 8.0)]],
        '6' => &[&[(4.0, 0.0), (0.0, 0.0), (0.0, 8.0), (4.0, 8.0), (4.0, 4.0), (0.0, 4.0)]],
        '7' => &[&[(0.0, 0.0), (4.0, 0.0), (2.0, 8.0)]],
        '8' => &[&[(0.0, 0.0), (4.0, 0.0), (4.0, 8.0), (0.0, 8.0), (0.0, 0.0)], &[(0.0, 4.0), (4.0, 4.0)]],
        '9' => &[&[(4.0, 4.0), (0.0, 4.0), (0.0, 0.0), (4.0, 0.0), (4.0, 8.0), (0.0, 8.0)]],
        '+' => &[&[(0.0, 4.0), (4.0, 4.0)], &[(2.0, 2.0), (2.0, 6.0)]],
        '-' => &[&[(0.0, 4.0), (4.0, 4.0)]],
        '/' => &[&[(0.5, 8.5), (3.5, -0.5)]],
        '(' => &[&[(3.0, -0.5), (1.5, 2.0), (1.5, 6.0), (3.0, 8.5)]],
        ')' => &[&[(1.0, -0.5), (2.5, 2.0), (2.5, 6.0), (1.0, 8.5)]],
        _ => &[],
    }
}

struct Layout {
    paths: Vec<(&'static str, String)>,
    cursor: f64,
}

impl Layout {
    fn polyline(&mut self, class: &'static str, pts: impl Iterator<Item = (f64, f64)>) {
        let mut d = String::new();
        for (i, (x, y)) in pts.enumerate() {
            d.push_str(if i == 0 { "M" } else { " L" });
            d.push_str(&format!(
                "{} {}",
                coord(PAD + x * SCALE),
                coord(PAD + (TOP + y) * SCALE)
            ));
        }
        self.paths.push((class, d));
    }

    fn text(&mut self, s: &str) {
        for c in s.chars() {
            if c == ' ' {
                self.cursor += SPACE;
                continue;
            }
            let x0 = self.cursor;
            for stroke in glyph(c) {
                self.polyline("glyph", stroke.iter().map(|&(x, y)| (x0 + x, y)));
            }
            self.cursor += ADVANCE;
        }
    }

    /// Radical sign whose vinculum spans the radicand digits.
    fn radical(&mut self, radicand: u64) {
        let x0 = self.cursor;
        let digits = format!("{radicand}");
        let bar_end = x0 + 5.0 + digits.len() as f64 * ADVANCE;
        self.polyline(
            "radical",
            [
                (x0, 5.0),
                (x0 + 1.0, 4.5),
                (x0 + 2.5, 8.5),
                (x0 + 4.0, -1.5),
                (bar_end, -1.5),
            ]
            .into_iter(),
        );
        self.cursor = x0 + 5.0;
        self.text(&digits);
    }
}

fn magnitude_text(r: Rational) -> String {
    let mag = r.abs().unwrap_or(r);
    format!("{mag}")
}

/// Typesets `q0 + q1√n1 + ...` with a drawn radical sign; a rational value
/// comes out as plain digits.
pub fn render_typeset_radical(v: &RadicalSum, filename: String) -> ImageAsset {
    let mut layout = Layout {
        paths: Vec::new(),
        cursor: 0.0,
    };
    for (i, piece) in v.pieces().iter().enumerate() {
        let negative = piece.coefficient.signum() < 0;
        match (i, negative) {
            (0, true) => layout.text("-"),
            (0, false) => {}
            (_, true) => layout.text(" - "),
            (_, false) => layout.text(" + "),
        }
        match piece.radicand {
            None => layout.text(&magnitude_text(piece.coefficient)),
            Some(n) => {
                let mag = piece.coefficient.abs().unwrap_or(piece.coefficient);
                if mag != Rational::ONE {
                    if mag.is_integer() {
                        layout.text(&format!("{mag}"));
                    } else {
                        layout.text(&format!("({mag})"));
                    }
                }
                layout.radical(n);
            }
        }
    }
    let width = (2.0 * PAD + layout.cursor * SCALE) as u32;
    let height = (2.0 * PAD + (TOP + 10.0) * SCALE) as u32;
    let mut svg = Svg::new(width, height);
    svg.raw(&format!("<desc>{}</desc>", escape_xml(&v.to_ascii())));
    for (class, d) in &layout.paths {
        svg.raw(&format!(
            "<path class=\"{class}\" d=\"{d}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.50\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>"
        ));
    }
    svg.finish(filename)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn sum(q: i64, terms: &[(i64, u64)]) -> RadicalSum {
        let t: Vec<(Rational, u64)> = terms.iter().map(|&(c, n)| (Rational::from_integer(c), n)).collect();
        RadicalSum::from_parts(Rational::from_integer(q), &t).unwrap()
    }

    fn text(a: &ImageAsset) -> String {
        String::from_utf8(a.bytes.clone()).unwrap()
    }

    #[test]
    fn radical_examples() {
        let a = render_typeset_radical(&sum(13, &[(1, 13)]), "c.svg".to_string());
        let t = text(&a);
        assert!(t.contains("<desc>13 + sqrt(13)</desc>"));
        assert_eq!(t.matches("class=\"radical\"").count(), 1);
        // 1,3 before the sign, '+', 1,3 under the radical: glyph strokes 2+2+2+2+2
        assert_eq!(t.matches("class=\"glyph\"").count(), 10);

        let b = render_typeset_radical(&sum(10, &[(1, 13)]), "b.svg".to_string());
        assert!(text(&b).contains("<desc>10 + sqrt(13)</desc>"));
        assert_eq!(text(&b).matches("class=\"radical\"").count(), 1);
    }

    #[test]
    fn rational_has_no_radical() {
        let a = render_typeset_radical(&sum(15, &[]), "a.svg".to_string());
        let t = text(&a);
        assert!(t.contains("<desc>15</desc>"));
        assert!(!t.contains("radical"));
        assert!(!t.contains("<text"), "glyphs are paths, not host-font text");
    }

    #[test]
    fn deterministic_and_ascii() {
        let v = sum(-3, &[(2, 2), (-1, 5)]);
        let a = render_typeset_radical(&v, "x.svg".to_string());
        let b = render_typeset_radical(&v, "x.svg".to_string());
        assert_eq!(a, b);
        assert!(a.bytes.is_ascii());
        assert_eq!(text(&a).matches("class=\"radical\"").count(), 2);
    }
}
