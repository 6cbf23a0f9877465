//! Global cyclicity: all n lines bounding one convex n-gon.
//!
//! Reading the n-gon's sides anticlockwise from line 1 gives two increasing
//! runs `1 = a_1 < … < a_r` and `a_{r+1} < … < a_n` with `1 < a_{r+1} < a_r`.
//! Such a cycle fixes the triangle set, and vice versa.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arrangement::{Arrangement, FaceComplex, Triangle, TriangleSet};
use crate::error::{Error, Result};
use crate::exact::{Line, Rat};
use crate::LineId;

/// Largest `n` accepted by [`enumerate_cycles`].
pub const MAX_ENUMERATE: usize = 24;
/// Largest `n` accepted by [`reconstruct_cycle`].
pub const MAX_RECONSTRUCT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GonalityCycle {
    seq: Vec<LineId>,
    r: usize,
}

impl GonalityCycle {
    pub fn new(seq: Vec<LineId>) -> Result<Self> {
        let n = seq.len();
        let mut seen = vec![false; n + 1];
        if seq.iter().any(|&a| a == 0 || a > n || std::mem::replace(&mut seen[a], true)) {
            return Err(Error::NotAPermutation(format!("cycle entries must be 1..={n} each exactly once")));
        }
        if seq.first() != Some(&1) {
            return Err(Error::MustStartAtOne);
        }
        let descents: Vec<usize> = (1..n).filter(|&x| seq[x] < seq[x - 1]).collect();
        // 1-based: a_{r+1} < a_r at 0-based index r
        match descents.as_slice() {
            [r] if *r >= 2 => Ok(GonalityCycle { seq, r: *r }),
            [] => Err(Error::InvalidCycle("no descent: the labels never wrap".into())),
            _ => Err(Error::InvalidCycle("more than two increasing runs".into())),
        }
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    pub fn seq(&self) -> &[LineId] {
        &self.seq
    }

    /// Length of the first run.
    pub fn r(&self) -> usize {
        self.r
    }

    /// `a_j`, 1-based.
    pub fn a(&self, j: usize) -> LineId {
        self.seq[j - 1]
    }

    pub fn first_run(&self) -> &[LineId] {
        &self.seq[..self.r]
    }

    pub fn second_run(&self) -> &[LineId] {
        &self.seq[self.r..]
    }

    /// Cycle whose first run is `{1} ∪ subset`; `subset` must avoid 1.
    fn from_first_run(n: usize, mask: u64) -> Option<Self> {
        let first: Vec<LineId> = std::iter::once(1).chain((2..=n).filter(|m| mask >> (m - 2) & 1 == 1)).collect();
        let r = first.len();
        if r < 2 || r > n - 1 {
            return None;
        }
        let second = (2..=n).filter(|m| mask >> (m - 2) & 1 == 0);
        let seq: Vec<LineId> = first.iter().copied().chain(second).collect();
        (seq[r] < seq[r - 1]).then_some(GonalityCycle { seq, r })
    }
}

impl fmt::Display for GonalityCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (x, a) in self.seq.iter().enumerate() {
            if x > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for GonalityCycle {
    type Err = Error;

    /// `"(1 5 2 6 3)"`; the parentheses may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        let seq = inner
            .split_whitespace()
            .map(|tok| {
                if tok.bytes().all(|b| b.is_ascii_digit()) {
                    tok.parse::<LineId>().map_err(|_| Error::BadToken(tok.into()))
                } else {
                    Err(Error::BadToken(tok.into()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        GonalityCycle::new(seq)
    }
}

/// Reads the cycle off a face with `n` edges, if one exists.
pub fn detect_gonality_cycle(arr: &Arrangement) -> Option<GonalityCycle> {
    detect_in(arr.n(), &arr.bounded_faces())
}

pub(crate) fn detect_in(n: usize, faces: &FaceComplex) -> Option<GonalityCycle> {
    if n < 3 {
        return None;
    }
    let face = faces.with_edge_count(n).next()?;
    GonalityCycle::new(face.lines()).ok()
}

/// The five triangle families of a globally cyclic arrangement.
pub fn thm_a_triangles(c: &GonalityCycle) -> Result<TriangleSet> {
    let (n, r) = (c.n(), c.r());
    if n < 4 {
        return Err(Error::NTooSmall { min: 4, got: n });
    }
    let a = |j: usize| c.a(j);
    let mut set = TriangleSet::new();
    for j in 1..=n - 2 {
        if j + 2 <= r || j > r {
            set.insert(Triangle::new(a(j), a(j + 1), a(j + 2)));
        }
    }
    if n >= r + 2 {
        set.insert(Triangle::new(a(1), a(n - 1), a(n)));
    }
    if a(2) < a(n) {
        set.insert(Triangle::new(a(1), a(2), a(n)));
    }
    if a(r + 1) < a(r - 1) {
        set.insert(Triangle::new(a(r + 1), a(r - 1), a(r)));
    }
    if n >= r + 2 && a(r + 2) < a(r) {
        set.insert(Triangle::new(a(r + 1), a(r + 2), a(r)));
    }
    Ok(set)
}

/// Every valid cycle on `n` lines, ordered by first-run bitmask.
pub fn cycles(n: usize) -> Result<impl Iterator<Item = GonalityCycle>> {
    if !(3..=MAX_ENUMERATE).contains(&n) {
        return Err(Error::NOutOfRange { min: 3, max: MAX_ENUMERATE, got: n });
    }
    Ok((0..1u64 << (n - 1)).filter_map(move |mask| GonalityCycle::from_first_run(n, mask)))
}

pub fn enumerate_cycles(n: usize) -> Result<Vec<GonalityCycle>> {
    Ok(cycles(n)?.collect())
}

/// `2^{n-1} - n`.
pub fn cycle_count_formula(n: usize) -> u64 {
    (1u64 << (n - 1)) - n as u64
}

/// Uniformly indexed cycle without materializing the list: rejection over
/// first-run masks driven by `draw(bound)`, which must return a value below `bound`.
pub(crate) fn sample_cycle(n: usize, mut draw: impl FnMut(u64) -> u64) -> GonalityCycle {
    loop {
        if let Some(c) = GonalityCycle::from_first_run(n, draw(1u64 << (n - 1))) {
            return c;
        }
    }
}

/// Lines tangent to the unit circle, one per label, whose outward normals
/// run anticlockwise in cycle order.
///
/// Label `m` gets direction angle `θ_m` from the stereographic ladder. First
/// run labels take the normal `θ_m + π/2`, second run labels `θ_m − π/2`.
pub fn realize_cycle(c: &GonalityCycle) -> Result<Arrangement> {
    realize_cycle_with(c, 1)
}

/// [`realize_cycle`] with `tan(θ_m / 2)` multiplied by `stretch`, which moves
/// every angle but keeps their order.
pub fn realize_cycle_with(c: &GonalityCycle, stretch: u32) -> Result<Arrangement> {
    let n = c.n();
    if stretch == 0 {
        return Err(Error::RealizationFailed("stretch must be positive".into()));
    }
    let mut first = vec![false; n + 1];
    for &m in c.first_run() {
        first[m] = true;
    }
    let lines = (1..=n)
        .map(|m| {
            let p = BigInt::from(stretch) * BigInt::from(2 * m as i64 - 1);
            let q = BigInt::from(2 * (n - m) as i64 + 1);
            let den = &p * &p + &q * &q;
            let (dx, dy) = (Rat::new(&q * &q - &p * &p, den.clone()), Rat::new(BigInt::from(2) * &p * &q, den));
            let (nx, ny) = if first[m] { (-dy, dx) } else { (dy, -dx) };
            Line::new(nx, ny, Rat::from_integer(BigInt::from(1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let arr = Arrangement::build(lines).map_err(|e| Error::RealizationFailed(e.to_string()))?;
    match detect_gonality_cycle(&arr) {
        Some(found) if &found == c => Ok(arr),
        Some(found) => Err(Error::RealizationFailed(format!("realized {found}, wanted {c}"))),
        None => Err(Error::RealizationFailed(format!("no {n}-gon when realizing {c}"))),
    }
}

/// The unique cycle whose [`thm_a_triangles`] list is `t`.
pub fn reconstruct_cycle(t: &TriangleSet, n: usize) -> Result<Option<GonalityCycle>> {
    if !(4..=MAX_RECONSTRUCT).contains(&n) {
        return Err(Error::NOutOfRange { min: 4, max: MAX_RECONSTRUCT, got: n });
    }
    for c in cycles(n)? {
        if &thm_a_triangles(&c)? == t {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Triangle criterion for three consecutive sides `(a, b, c)` of the n-gon,
/// read anticlockwise.
pub fn juxtaposed_is_triangle(a: LineId, b: LineId, c: LineId) -> bool {
    (a > c && c > b) || (b > a && a > c) || (c > b && b > a)
}

/// Every bounded face is the n-gon, a quadrilateral, or a triangle sharing a
/// side with the n-gon.
pub fn faces_are_near_ngon(n: usize, faces: &FaceComplex) -> bool {
    let Some(ngon) = faces.with_edge_count(n).next() else {
        return false;
    };
    faces.faces.iter().all(|f| match f.len() {
        k if k == n => f == ngon,
        4 => true,
        3 => f.shares_segment_with(ngon),
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Line;

    fn cyc(s: &str) -> GonalityCycle {
        s.parse().unwrap()
    }

    fn set(ts: &[[LineId; 3]]) -> TriangleSet {
        ts.iter().map(|t| Triangle::new(t[0], t[1], t[2])).collect()
    }

    #[test]
    fn validation() {
        let c = cyc("(1 3 4 2 5)");
        assert_eq!(c.r(), 3);
        assert_eq!(c.to_string(), "(1 3 4 2 5)");
        assert_eq!("(1 2 3 4)".parse::<GonalityCycle>().unwrap_err().code(), "invalid-cycle");
        assert_eq!("(2 1 3)".parse::<GonalityCycle>().unwrap_err().code(), "must-start-at-1");
        assert_eq!("(1 1 3)".parse::<GonalityCycle>().unwrap_err().code(), "not-a-permutation");
        assert_eq!("(1 4 2 5 3)".parse::<GonalityCycle>().unwrap_err().code(), "invalid-cycle");
        assert_eq!("(1 x 2)".parse::<GonalityCycle>().unwrap_err().code(), "bad-token");
        assert_eq!(cyc("1 3 2").r(), 2);
    }

    #[test]
    fn three_cycle_is_unique() {
        assert_eq!(enumerate_cycles(3).unwrap(), vec![cyc("(1 3 2)")]);
    }

    #[test]
    fn small_census() {
        // Independent count: every permutation starting at 1 checked by `new`.
        fn brute(n: usize) -> usize {
            fn perms(rest: &mut Vec<LineId>, acc: &mut Vec<LineId>, out: &mut usize) {
                if rest.is_empty() {
                    *out += GonalityCycle::new(acc.clone()).is_ok() as usize;
                    return;
                }
                for x in 0..rest.len() {
                    let v = rest.remove(x);
                    acc.push(v);
                    perms(rest, acc, out);
                    acc.pop();
                    rest.insert(x, v);
                }
            }
            let mut out = 0;
            perms(&mut (2..=n).collect(), &mut vec![1], &mut out);
            out
        }
        for n in 3..=7 {
            let list = enumerate_cycles(n).unwrap();
            assert_eq!(list.len(), brute(n));
            assert_eq!(list.len() as u64, cycle_count_formula(n));
        }
        assert_eq!(enumerate_cycles(2).unwrap_err().code(), "n-out-of-range");
        assert_eq!(enumerate_cycles(25).unwrap_err().code(), "n-out-of-range");
    }

    #[test]
    fn triangle_list_examples() {
        assert_eq!(thm_a_triangles(&cyc("(1 2 4 3)")).unwrap(), set(&[[1, 2, 4], [1, 2, 3]]));
        assert_eq!(
            thm_a_triangles(&cyc("(1 3 4 2 5)")).unwrap(),
            set(&[[1, 3, 4], [1, 2, 5], [1, 3, 5], [2, 3, 4]])
        );
        assert_eq!(thm_a_triangles(&cyc("(1 3 2)")).unwrap_err().code(), "n-too-small");
    }

    #[test]
    fn realize_and_detect() {
        let arr = realize_cycle(&cyc("(1 3 2)")).unwrap();
        assert_eq!(arr.bounded_faces().faces.len(), 1);
        let c = cyc("(1 2 4 3)");
        let arr = realize_cycle(&c).unwrap();
        assert_eq!(detect_gonality_cycle(&arr), Some(c.clone()));
        assert_eq!(arr.triangle_faces_oracle(), thm_a_triangles(&c).unwrap());
        for c in enumerate_cycles(6).unwrap() {
            let arr = realize_cycle(&c).unwrap();
            assert_eq!(detect_gonality_cycle(&arr).as_ref(), Some(&c));
            assert!(faces_are_near_ngon(6, &arr.bounded_faces()));
        }
    }

    #[test]
    fn three_lines_detect_the_three_cycle() {
        let arr = Arrangement::build(vec![
            Line::from_ints(1, -1, 0).unwrap(),
            Line::from_ints(1, 0, 1).unwrap(),
            Line::from_ints(1, 1, 3).unwrap(),
        ])
        .unwrap();
        assert_eq!(detect_gonality_cycle(&arr), Some(cyc("(1 3 2)")));
    }

    #[test]
    fn reconstruction() {
        assert_eq!(reconstruct_cycle(&set(&[[1, 2, 4], [1, 2, 3]]), 4).unwrap(), Some(cyc("(1 2 4 3)")));
        assert_eq!(reconstruct_cycle(&TriangleSet::new(), 5).unwrap(), None);
        assert_eq!(reconstruct_cycle(&TriangleSet::new(), 21).unwrap_err().code(), "n-out-of-range");
        assert_eq!(reconstruct_cycle(&TriangleSet::new(), 3).unwrap_err().code(), "n-out-of-range");
    }

    #[test]
    fn juxtaposition_rule() {
        assert!(juxtaposed_is_triangle(3, 1, 2));
        assert!(juxtaposed_is_triangle(2, 3, 1));
        assert!(juxtaposed_is_triangle(1, 2, 3));
        assert!(!juxtaposed_is_triangle(1, 3, 2));
    }
}
