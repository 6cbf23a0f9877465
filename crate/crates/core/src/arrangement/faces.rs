//! Bounded faces by half-edge traversal of the segment graph.
//!
//! Only the bounded segments between consecutive vertices on each line are
//! kept. Bounded faces of the arrangement are exactly the anticlockwise
//! cycles of that graph; the single clockwise cycle is the outer boundary.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{pair_index, Arrangement, Triangle, TriangleSet};
use crate::exact::Rat;
use crate::LineId;

/// A boundary edge: it lies on `line` and starts at vertex `start`
/// (the intersection of the two ids in the pair).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FaceEdge {
    pub line: LineId,
    pub start: (LineId, LineId),
}

/// A bounded face, boundary listed anticlockwise and rotated to begin on its
/// smallest line id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub edges: Vec<FaceEdge>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Line ids in anticlockwise boundary order.
    pub fn lines(&self) -> Vec<LineId> {
        self.edges.iter().map(|e| e.line).collect()
    }

    /// Vertex pairs of the boundary segments, each normalized `(start, end)`
    /// with the smaller pair first.
    pub fn segments(&self) -> Vec<((LineId, LineId), (LineId, LineId))> {
        let k = self.edges.len();
        (0..k)
            .map(|x| {
                let (a, b) = (self.edges[x].start, self.edges[(x + 1) % k].start);
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    pub fn shares_segment_with(&self, other: &Face) -> bool {
        let mine = self.segments();
        other.segments().iter().any(|s| mine.contains(s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FaceComplex {
    pub faces: Vec<Face>,
}

impl FaceComplex {
    pub fn triangles(&self) -> TriangleSet {
        self.faces
            .iter()
            .filter(|f| f.len() == 3)
            .map(|f| {
                let l = f.lines();
                Triangle::new(l[0], l[1], l[2])
            })
            .collect()
    }

    pub fn with_edge_count(&self, k: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.len() == k)
    }
}

struct HalfEdge {
    from: usize,
    to: usize,
    line: LineId,
    dir: (BigInt, BigInt),
}

// Anticlockwise order of direction vectors starting from the positive x-axis.
fn cmp_direction(a: &(BigInt, BigInt), b: &(BigInt, BigInt)) -> Ordering {
    let upper = |d: &(BigInt, BigInt)| d.1.is_positive() || (d.1.is_zero() && d.0.is_positive());
    match (upper(a), upper(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => {
            let cross = &a.0 * &b.1 - &a.1 * &b.0;
            BigInt::zero().cmp(&cross)
        }
    }
}

pub(super) fn enumerate(arr: &Arrangement) -> FaceComplex {
    let n = arr.n();
    if n < 3 {
        return FaceComplex::default();
    }
    let pairs: Vec<(LineId, LineId)> = arr.pairs().collect();
    let orders = arr.line_orders();

    let mut half: Vec<HalfEdge> = Vec::new();
    for (i, row) in orders.rows() {
        let (dx, dy) = arr.line(i).direction();
        for w in row.windows(2) {
            let (u, v) = (pair_index(n, i, w[0]), pair_index(n, i, w[1]));
            half.push(HalfEdge { from: u, to: v, line: i, dir: (dx.clone(), dy.clone()) });
            half.push(HalfEdge { from: v, to: u, line: i, dir: (-&dx, -&dy) });
        }
    }
    let twin = |h: usize| h ^ 1;

    let mut out: Vec<Vec<usize>> = vec![Vec::new(); pairs.len()];
    for (h, e) in half.iter().enumerate() {
        out[e.from].push(h);
    }
    let mut slot = vec![0usize; half.len()];
    for list in &mut out {
        list.sort_by(|&x, &y| cmp_direction(&half[x].dir, &half[y].dir));
        for (p, &h) in list.iter().enumerate() {
            slot[h] = p;
        }
    }
    // Face to the left: at the head, continue with the edge just clockwise of the twin.
    let next = |h: usize| {
        let t = twin(h);
        let list = &out[half[h].to];
        list[(slot[t] + list.len() - 1) % list.len()]
    };

    let mut visited = vec![false; half.len()];
    let mut faces = Vec::new();
    for start in 0..half.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut h = start;
        loop {
            visited[h] = true;
            cycle.push(h);
            h = next(h);
            if h == start {
                break;
            }
        }
        let mut area2 = Rat::zero();
        for &h in &cycle {
            let p = arr.vertex(pairs[half[h].from].0, pairs[half[h].from].1);
            let q = arr.vertex(pairs[half[h].to].0, pairs[half[h].to].1);
            area2 += &p.x * &q.y - &q.x * &p.y;
        }
        if !area2.is_positive() {
            continue;
        }
        let mut edges: Vec<FaceEdge> = cycle
            .iter()
            .map(|&h| FaceEdge { line: half[h].line, start: pairs[half[h].from] })
            .collect();
        let first = (0..edges.len()).min_by_key(|&x| edges[x].line).expect("non-empty cycle");
        edges.rotate_left(first);
        faces.push(Face { edges });
    }
    FaceComplex { faces }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Line;

    fn arr(lines: &[(i64, i64, i64)]) -> Arrangement {
        Arrangement::build(lines.iter().map(|&(a, b, c)| Line::from_ints(a, b, c).unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn three_lines_one_triangle() {
        let a = arr(&[(1, -1, 0), (1, 0, 1), (1, 1, 3)]);
        let faces = a.bounded_faces();
        assert_eq!(faces.faces.len(), 1);
        assert_eq!(faces.faces[0].len(), 3);
        assert_eq!(faces.triangles(), a.triangle_faces_oracle());
        // anticlockwise from line 1
        assert_eq!(faces.faces[0].lines(), vec![1, 3, 2]);
    }

    #[test]
    fn face_count_matches_euler() {
        // A simple arrangement of n lines has (n-1)(n-2)/2 bounded faces.
        let a = arr(&[(3, -1, -20), (1, 2, -7), (2, 5, 1), (1, -4, 9), (5, 1, 3)]);
        let faces = a.bounded_faces();
        assert_eq!(faces.faces.len(), 6);
        assert_eq!(faces.triangles(), a.triangle_faces_oracle());
    }

    #[test]
    fn direction_order() {
        let d = |x: i64, y: i64| (BigInt::from(x), BigInt::from(y));
        let mut v = vec![d(0, -1), d(-1, 0), d(1, 1), d(1, 0), d(-1, 1)];
        v.sort_by(cmp_direction);
        assert_eq!(v, vec![d(1, 0), d(1, 1), d(-1, 1), d(-1, 0), d(0, -1)]);
    }
}
