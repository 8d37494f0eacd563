use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{option_letter, retry, Answer, GeneratedItem, ItemData, McOption, Question};
use crate::exactmath::{RadicalSum, Rational};
use crate::render::{
    asset_filename, render_lattice_figure, render_typeset_radical, ImageFormat, DEFAULT_GRID_EXTENT,
};
use crate::stats_sim::RngStream;
use crate::{Error, Result};

type Point = (i64, i64);

fn sub(a: Point, b: Point) -> Point {
    (a.0 - b.0, a.1 - b.1)
}

fn cross(a: Point, b: Point) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: Point, b: Point) -> i64 {
    a.0 * b.0 + a.1 * b.1
}

/// Proper crossing or touching of segments `p1p2` and `p3p4`.
fn segments_meet(p1: Point, p2: Point, p3: Point, p4: Point) -> bool {
    let d1 = cross(sub(p4, p3), sub(p1, p3)).signum();
    let d2 = cross(sub(p4, p3), sub(p2, p3)).signum();
    let d3 = cross(sub(p2, p1), sub(p3, p1)).signum();
    let d4 = cross(sub(p2, p1), sub(p4, p1)).signum();
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    let on = |a: Point, b: Point, p: Point| {
        cross(sub(b, a), sub(p, a)) == 0 && dot(sub(p, a), sub(p, b)) <= 0
    };
    on(p3, p4, p1) || on(p3, p4, p2) || on(p1, p2, p3) || on(p1, p2, p4)
}

/// A lattice trapezoid, vertices counterclockwise, with exactly one pair of
/// parallel opposite sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeTrapezoid {
    vertices: [Point; 4],
    /// Index of the first edge of the parallel pair (0 or 1); edge `i` runs
    /// from vertex `i` to vertex `i + 1`.
    base_edge: usize,
    area: Rational,
    perimeter: RadicalSum,
}

impl LatticeTrapezoid {
    pub fn new(vertices: [Point; 4]) -> Result<Self> {
        if vertices.iter().any(|&(x, y)| x.abs() > 1 << 20 || y.abs() > 1 << 20) {
            return Err(Error::invalid("vertex coordinates too large"));
        }
        let edge = |i: usize| sub(vertices[(i + 1) % 4], vertices[i]);
        let twice_area: i64 = (0..4)
            .map(|i| cross(vertices[i], vertices[(i + 1) % 4]))
            .sum();
        if twice_area <= 0 {
            return Err(Error::invalid("vertices must be counterclockwise and non-degenerate"));
        }
        if segments_meet(vertices[0], vertices[1], vertices[2], vertices[3])
            || segments_meet(vertices[1], vertices[2], vertices[3], vertices[0])
        {
            return Err(Error::invalid("quadrilateral is self-intersecting"));
        }
        let parallel_02 = cross(edge(0), edge(2)) == 0;
        let parallel_13 = cross(edge(1), edge(3)) == 0;
        let base_edge = match (parallel_02, parallel_13) {
            (true, false) => 0,
            (false, true) => 1,
            (true, true) => return Err(Error::invalid("parallelogram, not a trapezoid")),
            (false, false) => return Err(Error::invalid("no pair of parallel sides")),
        };
        let mut perimeter = RadicalSum::default();
        for i in 0..4 {
            let e = edge(i);
            perimeter = perimeter.checked_add(&RadicalSum::sqrt(dot(e, e) as u64))?;
        }
        Ok(LatticeTrapezoid {
            vertices,
            base_edge,
            area: Rational::new(twice_area, 2)?,
            perimeter,
        })
    }

    pub fn vertices(&self) -> &[Point; 4] {
        &self.vertices
    }

    /// Shoelace area.
    pub fn area(&self) -> Rational {
        self.area
    }

    pub fn perimeter(&self) -> &RadicalSum {
        &self.perimeter
    }

    fn edge(&self, i: usize) -> Point {
        sub(self.vertices[(i + 1) % 4], self.vertices[i])
    }

    pub fn side_length(&self, i: usize) -> RadicalSum {
        let e = self.edge(i);
        RadicalSum::sqrt(dot(e, e) as u64)
    }

    /// `(opposite base length / base length, |base × offset|)`: the ratio
    /// t of the parallel sides and the parallelogram area `b·h` of the base
    /// edge. Both are rational on a lattice.
    fn base_measures(&self) -> Result<(Rational, i64)> {
        let i = self.base_edge;
        let base = self.edge(i);
        let opposite = self.edge(i + 2);
        let ratio = if base.0 != 0 {
            Rational::new(-opposite.0, base.0)?
        } else {
            Rational::new(-opposite.1, base.1)?
        };
        let offset = sub(self.vertices[(i + 2) % 4], self.vertices[i]);
        Ok((ratio, cross(base, offset).abs()))
    }

    /// `(b1 + b2)·h / 2` for the parallel sides; equal to [`area`](Self::area).
    pub fn trapezoid_formula_area(&self) -> Result<Rational> {
        let (t, bh) = self.base_measures()?;
        Rational::ONE
            .checked_add(t)?
            .checked_mul(Rational::from_integer(bh))?
            .checked_div(Rational::from_integer(2))
    }

    /// Area if the averaging of the bases is forgotten: longer base × height.
    pub fn area_distractor(&self) -> Result<Rational> {
        let (t, bh) = self.base_measures()?;
        Rational::from_integer(bh).checked_mul(t.max(Rational::ONE))
    }

    /// Perimeter with the closing side (last vertex back to the first) left
    /// out.
    pub fn perimeter_distractor(&self) -> Result<RadicalSum> {
        self.perimeter.checked_sub(&self.side_length(3))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ask {
    Area,
    Perimeter,
}

impl Ask {
    pub fn family(self) -> &'static str {
        match self {
            Ask::Area => "TrapezoidArea",
            Ask::Perimeter => "TrapezoidPerimeter",
        }
    }

    fn asset_family(self) -> &'static str {
        match self {
            Ask::Area => "trapezoid-area",
            Ask::Perimeter => "trapezoid-perimeter",
        }
    }

    fn stem(self) -> &'static str {
        match self {
            Ask::Area => "Which of the following choices is the area of the figure shown below?",
            Ask::Perimeter => {
                "Which of the following choices is the perimeter of the figure shown below?"
            }
        }
    }
}

/// The four candidate values in a fixed order: area, perimeter, perimeter
/// distractor, area distractor.
fn candidate_values(t: &LatticeTrapezoid) -> Result<[RadicalSum; 4]> {
    Ok([
        RadicalSum::rational(t.area()),
        t.perimeter().clone(),
        t.perimeter_distractor()?,
        RadicalSum::rational(t.area_distractor()?),
    ])
}

/// Builds the question and its figures for a given trapezoid. `order` maps
/// display slots to candidate values (see [`candidate_values`]); options are
/// shown as typeset images.
pub fn trapezoid_question(
    t: &LatticeTrapezoid,
    ask: Ask,
    title: String,
    index: u32,
    order: [usize; 4],
) -> Result<(Question, Vec<crate::render::ImageAsset>)> {
    let values = candidate_values(t)?;
    for i in 0..4 {
        for j in i + 1..4 {
            if values[i] == values[j] {
                return Err(Error::invalid("trapezoid option values collide"));
            }
        }
    }
    let correct_slot = match ask {
        Ask::Area => 0,
        Ask::Perimeter => 1,
    };
    let figure_name = asset_filename(ask.asset_family(), index, ImageFormat::Svg);
    let mut assets = alloc::vec![render_lattice_figure(t, DEFAULT_GRID_EXTENT, figure_name.clone())?];
    let mut options = Vec::with_capacity(4);
    for (pos, &slot) in order.iter().enumerate() {
        let family = format!("{}-{}", ask.asset_family(), option_letter(pos));
        let name = asset_filename(&family, index, ImageFormat::Svg);
        assets.push(render_typeset_radical(&values[slot], name.clone()));
        options.push(McOption {
            text: values[slot].to_ascii(),
            image: Some(name),
            correct: slot == correct_slot,
        });
    }
    Ok((
        Question {
            title,
            stem: ask.stem().into(),
            display: None,
            answer: Answer::MultipleChoice(options),
            asset: Some(figure_name),
        },
        assets,
    ))
}

/// Right or isosceles trapezoid with horizontal bases of different lengths
/// on the default 8 × 8 grid.
fn draw_trapezoid(stream: &mut RngStream) -> Result<Option<LatticeTrapezoid>> {
    let extent = DEFAULT_GRID_EXTENT as i64;
    let long = stream.int_inclusive(2, extent);
    let short = stream.int_inclusive(1, long - 1);
    let h = stream.int_inclusive(1, extent);
    let x0 = stream.int_inclusive(0, extent - long);
    let y0 = stream.int_inclusive(0, extent - h);
    let vertices = match stream.int_inclusive(0, 2) {
        // right angle on the left
        0 => [(x0, y0), (x0 + long, y0), (x0 + short, y0 + h), (x0, y0 + h)],
        // right angle on the right
        1 => [(x0, y0), (x0 + long, y0), (x0 + long, y0 + h), (x0 + long - short, y0 + h)],
        _ => {
            if (long - short) % 2 != 0 {
                return Ok(None);
            }
            let d = (long - short) / 2;
            [(x0, y0), (x0 + long, y0), (x0 + d + short, y0 + h), (x0 + d, y0 + h)]
        }
    };
    match LatticeTrapezoid::new(vertices) {
        Ok(t) => Ok(Some(t)),
        Err(Error::InvalidInput(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Trapezoid area or perimeter question with the four option values of the
/// published example (both correct values plus one distractor of each kind).
pub fn gen_trapezoid_mc(
    stream: &mut RngStream,
    ask: Ask,
    title: String,
    index: u32,
) -> Result<GeneratedItem> {
    let shape = retry(ask.family(), || {
        let Some(t) = draw_trapezoid(stream)? else {
            return Ok(None);
        };
        let values = candidate_values(&t)?;
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| values[i] != values[j]));
        Ok(distinct.then_some(t))
    })?;
    let order: Vec<usize> = shuffled_indices(stream);
    let (question, assets) = trapezoid_question(
        &shape,
        ask,
        title,
        index,
        [order[0], order[1], order[2], order[3]],
    )?;
    Ok(GeneratedItem {
        question,
        assets,
        data: ItemData::Trapezoid { shape, ask },
    })
}

fn shuffled_indices(stream: &mut RngStream) -> Vec<usize> {
    let mut order: Vec<usize> = (0..4).collect();
    stream.shuffle(&mut order);
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn figure4() -> LatticeTrapezoid {
        LatticeTrapezoid::new([(0, 0), (6, 0), (4, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn published_values() {
        let t = figure4();
        assert_eq!(t.area(), Rational::from_integer(15));
        assert_eq!(t.trapezoid_formula_area().unwrap(), Rational::from_integer(15));
        assert_eq!(t.perimeter().to_ascii(), "13 + sqrt(13)");
        assert_eq!(t.area_distractor().unwrap(), Rational::from_integer(18));
        assert_eq!(t.perimeter_distractor().unwrap().to_ascii(), "10 + sqrt(13)");
    }

    #[test]
    fn rejects_non_trapezoids() {
        // unit square: both pairs parallel
        assert!(LatticeTrapezoid::new([(0, 0), (1, 0), (1, 1), (0, 1)]).is_err());
        // clockwise
        assert!(LatticeTrapezoid::new([(0, 0), (0, 3), (4, 3), (6, 0)]).is_err());
        // bow tie
        assert!(LatticeTrapezoid::new([(0, 0), (6, 0), (0, 3), (4, 3)]).is_err());
        // kite: no parallel sides
        assert!(LatticeTrapezoid::new([(0, 0), (2, -1), (4, 0), (2, 3)]).is_err());
    }

    #[test]
    fn slanted_bases() {
        // bases along (1,1): (0,0)-(4,4) and (3,5)-(1,3)
        let t = LatticeTrapezoid::new([(0, 0), (4, 4), (3, 5), (1, 3)]).unwrap();
        assert_eq!(t.area(), t.trapezoid_formula_area().unwrap());
    }

    #[test]
    fn generated_shapes_are_consistent() {
        for i in 0..500u32 {
            let mut s = RngStream::new(12, i as u64);
            let ask = if i % 2 == 0 { Ask::Area } else { Ask::Perimeter };
            let item = gen_trapezoid_mc(&mut s, ask, format!("{}-{i:04}", ask.family()), i).unwrap();
            let ItemData::Trapezoid { shape, .. } = &item.data else { panic!() };
            assert_eq!(shape.area(), shape.trapezoid_formula_area().unwrap());
            let v = shape.vertices();
            let direct: f64 = (0..4)
                .map(|k| {
                    let (a, b) = (v[k], v[(k + 1) % 4]);
                    libm::hypot((b.0 - a.0) as f64, (b.1 - a.1) as f64)
                })
                .sum();
            assert!((shape.perimeter().value() - direct).abs() < 1e-9);
            item.question.check().unwrap();
            assert_eq!(item.question.options().len(), 4);
            // figure plus one image per option
            assert_eq!(item.assets.len(), 5);
            assert!(item.question.options().iter().all(|o| o.image.is_some()));
        }
    }
}
