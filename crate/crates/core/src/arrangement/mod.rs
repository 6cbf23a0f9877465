//! Arrangements in conventional position and everything read directly off
//! their exact geometry.

mod faces;
mod triangles;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{cmp_angle, intersect, side, Line, Point, Rat};
use crate::LineId;

pub use faces::{Face, FaceComplex, FaceEdge};
pub use triangles::{Triangle, TriangleSet};

/// A line arrangement in general position, normalized to the conventional
/// embedding.
///
/// Ids `1..=n` follow strictly increasing direction angle. Every vertex lies
/// in the open first quadrant and every line crosses the positive x-axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    lines: Vec<Line>,
    vertices: Vec<Point>,
    // sides[m * pairs + v]: side of vertex v relative to line m+1
    sides: Vec<Ordering>,
    translation: (Rat, Rat),
}

/// For each line, the other ids ordered by where they cross it along the
/// conventional orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineOrderTable {
    rows: Vec<Vec<LineId>>,
}

impl LineOrderTable {
    pub fn row(&self, id: LineId) -> &[LineId] {
        &self.rows[id - 1]
    }

    pub fn rows(&self) -> impl Iterator<Item = (LineId, &[LineId])> {
        self.rows.iter().enumerate().map(|(i, r)| (i + 1, r.as_slice()))
    }
}

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Flat index of the vertex `L_i ∩ L_j` (1-based ids, any order).
fn pair_index(n: usize, i: LineId, j: LineId) -> usize {
    let (p, q) = if i < j { (i - 1, j - 1) } else { (j - 1, i - 1) };
    p * n - p * (p + 1) / 2 + (q - p - 1)
}

impl Arrangement {
    /// Validates general position, sorts by angle, assigns ids and translates
    /// into the conventional embedding.
    pub fn build(mut lines: Vec<Line>) -> Result<Self> {
        if lines.len() < 2 {
            return Err(Error::TooFewLines { min: 2, got: lines.len() });
        }
        lines.sort_by(cmp_angle);
        for (k, w) in lines.windows(2).enumerate() {
            if cmp_angle(&w[0], &w[1]) == Ordering::Equal {
                return Err(Error::ParallelLines(format!("lines {} and {}", k + 1, k + 2)));
            }
        }
        let raw = Self::assemble(lines, (Rat::zero(), Rat::zero()))?;
        let (tx, ty) = raw.normalizing_translation();
        if tx.is_zero() && ty.is_zero() {
            return Ok(raw);
        }
        let lines = raw.lines.iter().map(|l| l.translated(&tx, &ty)).collect();
        Self::assemble(lines, (tx, ty))
    }

    fn assemble(lines: Vec<Line>, translation: (Rat, Rat)) -> Result<Self> {
        let n = lines.len();
        let mut vertices = Vec::with_capacity(pair_count(n));
        for i in 0..n {
            for j in i + 1..n {
                vertices.push(intersect(&lines[i], &lines[j])?);
            }
        }
        let pairs = vertices.len();
        let mut sides = Vec::with_capacity(n * pairs);
        for line in &lines {
            sides.extend(vertices.iter().map(|v| side(line, v)));
        }
        let arr = Arrangement { lines, vertices, sides, translation };
        for m in 1..=n {
            for (i, j) in arr.pairs() {
                if m != i && m != j && arr.side_of(m, i, j) == Ordering::Equal {
                    let mut t = [i, j, m];
                    t.sort_unstable();
                    return Err(Error::ConcurrentTriple(t[0], t[1], t[2]));
                }
            }
        }
        Ok(arr)
    }

    /// Translation (+1 beyond each binding bound) that puts all vertices in
    /// the open first quadrant and all x-intercepts on the positive axis.
    /// Zero when the configuration is already conventional.
    fn normalizing_translation(&self) -> (Rat, Rat) {
        let one = Rat::from_integer(1.into());
        let past = |bound: Rat| if bound < Rat::zero() { Rat::zero() } else { bound + &one };
        let min_y = self.vertices.iter().map(|v| &v.y).min().expect("n >= 2");
        let ty = past(-min_y.clone());
        let min_x = self.vertices.iter().map(|v| &v.x).min().expect("n >= 2");
        let mut bound = -min_x.clone();
        for l in &self.lines {
            let slope_shift = Rat::new(l.b().clone(), l.a().clone()) * &ty;
            let b = -(l.x_intercept() + slope_shift);
            if b > bound {
                bound = b;
            }
        }
        (past(bound), ty)
    }

    pub fn n(&self) -> usize {
        self.lines.len()
    }

    pub fn ids(&self) -> std::ops::RangeInclusive<LineId> {
        1..=self.n()
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn line(&self, id: LineId) -> &Line {
        &self.lines[id - 1]
    }

    /// The translation applied by [`Arrangement::build`].
    pub fn translation(&self) -> &(Rat, Rat) {
        &self.translation
    }

    pub fn check_id(&self, id: LineId) -> Result<()> {
        if (1..=self.n()).contains(&id) {
            Ok(())
        } else {
            Err(Error::UnknownLine(id))
        }
    }

    /// All id pairs `(i, j)` with `i < j`, in vertex order.
    pub fn pairs(&self) -> impl Iterator<Item = (LineId, LineId)> {
        let n = self.n();
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
    }

    pub fn vertex(&self, i: LineId, j: LineId) -> &Point {
        &self.vertices[pair_index(self.n(), i, j)]
    }

    /// Side of the vertex `L_i ∩ L_j` relative to line `m`.
    pub fn side_of(&self, m: LineId, i: LineId, j: LineId) -> Ordering {
        self.sides[(m - 1) * self.vertices.len() + pair_index(self.n(), i, j)]
    }

    pub fn line_orders(&self) -> LineOrderTable {
        let rows = self
            .ids()
            .map(|i| {
                let line = self.line(i);
                let mut keyed: Vec<(Rat, LineId)> = self
                    .ids()
                    .filter(|&j| j != i)
                    .map(|j| (line.param(self.vertex(i, j)), j))
                    .collect();
                keyed.sort();
                keyed.into_iter().map(|(_, j)| j).collect()
            })
            .collect();
        LineOrderTable { rows }
    }

    /// Pairs `{i, j}` whose vertex is an end point on both lines.
    pub fn corner_points(&self) -> BTreeSet<(LineId, LineId)> {
        let orders = self.line_orders();
        let is_end = |row: &[LineId], x: LineId| row.first() == Some(&x) || row.last() == Some(&x);
        self.pairs()
            .filter(|&(i, j)| is_end(orders.row(i), j) && is_end(orders.row(j), i))
            .collect()
    }

    /// Corner points recomputed through quadrants instead of order tables:
    /// `L_i ∩ L_j` is a corner iff every other line misses the same one of the
    /// four quadrants cut out by `L_i` and `L_j`.
    pub fn corner_points_by_quadrants(&self) -> BTreeSet<(LineId, LineId)> {
        self.pairs()
            .filter(|&(i, j)| {
                let mut missed = None;
                self.ids().filter(|&m| m != i && m != j).all(|m| {
                    // The line through X = L_i∩L_m and Y = L_j∩L_m misses the
                    // quadrant opposite to the one holding segment XY.
                    let key = (self.side_of(j, i, m), self.side_of(i, j, m));
                    *missed.get_or_insert(key) == key
                })
            })
            .collect()
    }

    /// Ground truth: `{i, j, k}` is a triangle iff no other line separates any
    /// two of its three vertices.
    pub fn triangle_faces_oracle(&self) -> TriangleSet {
        let n = self.n();
        let mut set = TriangleSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    let uncut = self.ids().filter(|&m| m != i && m != j && m != k).all(|m| {
                        let s = self.side_of(m, i, j);
                        s != Ordering::Equal && self.side_of(m, j, k) == s && self.side_of(m, i, k) == s
                    });
                    if uncut {
                        set.insert(Triangle::new(i, j, k));
                    }
                }
            }
        }
        set
    }

    pub fn bounded_faces(&self) -> FaceComplex {
        faces::enumerate(self)
    }

    /// Isomorphism trivial on subscripts: each line's crossing order agrees,
    /// verbatim or reversed, independently per line.
    pub fn is_isomorphic_trivial(&self, other: &Arrangement) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let (a, b) = (self.line_orders(), other.line_orders());
        a.rows.iter().zip(&b.rows).all(|(r, s)| r == s || r.iter().eq(s.iter().rev()))
    }

    /// Stricter reading where one reversal choice applies to every line at once.
    pub fn is_isomorphic_trivial_global(&self, other: &Arrangement) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let (a, b) = (self.line_orders(), other.line_orders());
        a.rows == b.rows || a.rows.iter().zip(&b.rows).all(|(r, s)| r.iter().eq(s.iter().rev()))
    }

    /// Whether member `id` has every vertex not on it strictly on one side.
    pub fn member_at_infinity(&self, id: LineId) -> Result<bool> {
        self.check_id(id)?;
        let all: Vec<LineId> = self.ids().collect();
        Ok(self.member_at_infinity_among(id, &all))
    }

    /// [`Arrangement::member_at_infinity`] relative to the sub-arrangement
    /// formed by `among` (which need not contain `id`).
    pub fn member_at_infinity_among(&self, id: LineId, among: &[LineId]) -> bool {
        let mut seen = None;
        for (x, &p) in among.iter().enumerate() {
            for &q in &among[x + 1..] {
                if p == id || q == id {
                    continue;
                }
                let s = self.side_of(id, p, q);
                if *seen.get_or_insert(s) != s {
                    return false;
                }
            }
        }
        true
    }

    /// Whether an external line has every vertex strictly on one side.
    pub fn external_at_infinity(&self, line: &Line) -> Result<bool> {
        for (k, member) in self.lines.iter().enumerate() {
            if cmp_angle(line, member) == Ordering::Equal {
                return Err(Error::DegenerateExtension(format!("parallel to line {}", k + 1)));
            }
        }
        let mut seen = None;
        for ((i, j), v) in self.pairs().zip(&self.vertices) {
            let s = side(line, v);
            if s == Ordering::Equal {
                return Err(Error::DegenerateExtension(format!("passes through vertex L{i} ∩ L{j}")));
            }
            if *seen.get_or_insert(s) != s {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Rebuilds the arrangement without line `id`; the remaining lines keep
    /// their relative order and are relabelled `1..n-1`.
    pub fn without_line(&self, id: LineId) -> Result<Arrangement> {
        self.check_id(id)?;
        let lines = self
            .lines
            .iter()
            .enumerate()
            .filter(|(k, _)| k + 1 != id)
            .map(|(_, l)| l.clone())
            .collect();
        Arrangement::build(lines)
    }

    /// Side of the origin relative to line `id`.
    pub fn origin_side(&self, id: LineId) -> Ordering {
        side(self.line(id), &Point::origin())
    }
}
