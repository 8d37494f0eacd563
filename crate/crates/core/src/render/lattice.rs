use alloc::format;
use alloc::string::String;

use super::{ImageAsset, Svg};
use crate::templates::LatticeTrapezoid;
use crate::{Error, Result};

pub const DEFAULT_GRID_EXTENT: u32 = 8;

const WIDTH: u32 = 400;
const MARGIN: f64 = 30.0;

/// Dot grid over `[0, extent]²` with the trapezoid outline drawn on top.
pub fn render_lattice_figure(
    t: &LatticeTrapezoid,
    grid_extent: u32,
    filename: String,
) -> Result<ImageAsset> {
    if grid_extent == 0 {
        return Err(Error::invalid("grid extent must be positive"));
    }
    let extent = grid_extent as i64;
    for &(x, y) in t.vertices() {
        if !(0..=extent).contains(&x) || !(0..=extent).contains(&y) {
            return Err(Error::invalid(format!(
                "vertex ({x}, {y}) lies outside the grid [0, {extent}]^2"
            )));
        }
    }
    let step = (WIDTH as f64 - 2.0 * MARGIN) / grid_extent as f64;
    let px = |x: i64| MARGIN + x as f64 * step;
    let py = |y: i64| WIDTH as f64 - MARGIN - y as f64 * step;

    let mut svg = Svg::new(WIDTH, WIDTH);
    for gy in 0..=extent {
        for gx in 0..=extent {
            svg.circle("dot", px(gx), py(gy), 2.5, "#000000");
        }
    }
    let v = t.vertices();
    for i in 0..4 {
        let (a, b) = (v[i], v[(i + 1) % 4]);
        svg.line("edge", px(a.0), py(a.1), px(b.0), py(b.1), "#0000ff", 3.0);
    }
    Ok(svg.finish(filename))
}
