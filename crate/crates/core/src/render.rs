//! Deterministic SVG drawings of arrangements.
//!
//! Clipping is exact; coordinates are rounded to three decimals only when
//! written out.

use std::fmt::Write as _;
use std::path::PathBuf;

use num_traits::{ToPrimitive, Zero};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact::{int, Line, Point, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub path: PathBuf,
    /// Margin around the vertices' bounding box, in arrangement units.
    pub padding: Rat,
    pub labels: bool,
    /// Fill the oracle's triangular faces.
    pub shade: bool,
}

impl RenderSpec {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        RenderSpec { path: path.into(), padding: int(1), labels: true, shade: true }
    }
}

const SIZE: f64 = 600.0;

struct Frame {
    x0: Rat,
    y0: Rat,
    x1: Rat,
    y1: Rat,
    scale: f64,
}

impl Frame {
    fn around(arr: &Arrangement, padding: &Rat) -> Frame {
        let vs: Vec<&Point> = arr.pairs().map(|(i, j)| arr.vertex(i, j)).collect();
        let min = |f: fn(&Point) -> &Rat| vs.iter().map(|p| f(p)).min().expect("n >= 2").clone();
        let max = |f: fn(&Point) -> &Rat| vs.iter().map(|p| f(p)).max().expect("n >= 2").clone();
        let (mut x0, mut y0) = (min(|p| &p.x) - padding, min(|p| &p.y) - padding);
        let (mut x1, mut y1) = (max(|p| &p.x) + padding, max(|p| &p.y) + padding);
        // a lone vertex with zero padding still needs an area
        if x0 == x1 {
            x0 -= int(1);
            x1 += int(1);
        }
        if y0 == y1 {
            y0 -= int(1);
            y1 += int(1);
        }
        let w = f(&(&x1 - &x0)).max(f(&(&y1 - &y0)));
        Frame { x0, y0, x1, y1, scale: SIZE / w }
    }

    fn px(&self, p: &Point) -> (f64, f64) {
        (f(&(&p.x - &self.x0)) * self.scale, f(&(&self.y1 - &p.y)) * self.scale)
    }

    fn width(&self) -> f64 {
        f(&(&self.x1 - &self.x0)) * self.scale
    }

    fn height(&self) -> f64 {
        f(&(&self.y1 - &self.y0)) * self.scale
    }

    /// Exact end points of `line` inside the box, ordered along its direction.
    fn clip(&self, line: &Line) -> Option<(Point, Point)> {
        let (a, b, c) = (Rat::from_integer(line.a().clone()), Rat::from_integer(line.b().clone()), Rat::from_integer(line.c().clone()));
        let inside = |p: &Point| p.x >= self.x0 && p.x <= self.x1 && p.y >= self.y0 && p.y <= self.y1;
        let mut hits: Vec<Point> = Vec::new();
        for y in [&self.y0, &self.y1] {
            hits.push(Point::new((&c - &b * y) / &a, y.clone()));
        }
        if !b.is_zero() {
            for x in [&self.x0, &self.x1] {
                hits.push(Point::new(x.clone(), (&c - &a * x) / &b));
            }
        }
        hits.retain(|p| inside(p));
        let lo = hits.iter().min_by(|p, q| line.param(p).cmp(&line.param(q)))?.clone();
        let hi = hits.iter().max_by(|p, q| line.param(p).cmp(&line.param(q)))?.clone();
        (lo != hi).then_some((lo, hi))
    }
}

fn f(r: &Rat) -> f64 {
    r.to_f64().expect("finite")
}

pub fn svg(arr: &Arrangement, padding: &Rat, labels: bool, shade: bool) -> String {
    let frame = Frame::around(arr, padding);
    let mut s = String::new();
    let (w, h) = (frame.width(), frame.height());
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.3}\" height=\"{h:.3}\" viewBox=\"0 0 {w:.3} {h:.3}\">"
    )
    .unwrap();
    writeln!(s, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>").unwrap();
    if shade {
        writeln!(s, "<g fill=\"#f4b860\" fill-opacity=\"0.5\" stroke=\"none\">").unwrap();
        for t in arr.triangle_faces_oracle().iter() {
            let [i, j, k] = t.ids();
            let pts: Vec<String> = [arr.vertex(i, j), arr.vertex(j, k), arr.vertex(i, k)]
                .iter()
                .map(|p| {
                    let (x, y) = frame.px(p);
                    format!("{x:.3},{y:.3}")
                })
                .collect();
            writeln!(s, "<polygon class=\"triangle\" data-lines=\"{t}\" points=\"{}\"/>", pts.join(" ")).unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }
    writeln!(s, "<g stroke=\"#1d3557\" stroke-width=\"1.5\">").unwrap();
    let mut tips = Vec::new();
    for id in arr.ids() {
        if let Some((p, q)) = frame.clip(arr.line(id)) {
            let ((x1, y1), (x2, y2)) = (frame.px(&p), frame.px(&q));
            writeln!(s, "<line class=\"line\" data-id=\"{id}\" x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\"/>")
                .unwrap();
            tips.push((id, x2, y2));
        }
    }
    writeln!(s, "</g>").unwrap();
    if labels {
        writeln!(s, "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"#e63946\">").unwrap();
        for (id, x, y) in tips {
            let (x, y) = (x.clamp(8.0, w - 16.0), y.clamp(16.0, h - 4.0));
            writeln!(s, "<text x=\"{x:.3}\" y=\"{y:.3}\">{id}</text>").unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }
    s.push_str("</svg>\n");
    s
}

pub fn render_svg(arr: &Arrangement, spec: &RenderSpec) -> Result<()> {
    if spec.padding < Rat::zero() {
        return Err(Error::BadToken(format!("negative padding {}", spec.padding)));
    }
    std::fs::write(&spec.path, svg(arr, &spec.padding, spec.labels, spec.shade))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nomenclature::realize_nomenclature;

    fn three() -> Arrangement {
        Arrangement::build(vec![
            Line::from_ints(1, -1, 0).unwrap(),
            Line::from_ints(1, 0, 1).unwrap(),
            Line::from_ints(1, 1, 3).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn three_lines() {
        let s = svg(&three(), &int(1), true, true);
        assert_eq!(s.matches("<line ").count(), 3);
        assert_eq!(s.matches("<polygon ").count(), 1);
        assert_eq!(s.matches("<text ").count(), 3);
        assert_eq!(s, svg(&three(), &int(1), true, true));
        let bare = svg(&three(), &int(0), false, false);
        assert_eq!(bare.matches("<polygon ").count(), 0);
        assert_eq!(bare.matches("<text ").count(), 0);
    }

    #[test]
    fn seven_lines() {
        let arr = realize_nomenclature(&"1^+1 2^-1 3^+1 7^+1 6^+1 4^-1 5^+1".parse().unwrap()).unwrap();
        let s = svg(&arr, &int(1), true, true);
        assert_eq!(s.matches("<line ").count(), 7);
        assert_eq!(s.matches("<polygon ").count(), 5);
    }

    #[test]
    fn writes_files() {
        let dir = tempfile::tempdir().unwrap();
        let spec = RenderSpec::new(dir.path().join("a.svg"));
        render_svg(&three(), &spec).unwrap();
        let first = std::fs::read(&spec.path).unwrap();
        render_svg(&three(), &spec).unwrap();
        assert_eq!(first, std::fs::read(&spec.path).unwrap());
        let bad = RenderSpec { padding: int(-1), ..spec };
        assert!(render_svg(&three(), &bad).is_err());
    }
}
