use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::LineId;

/// An unordered triple of line ids, stored ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle([LineId; 3]);

impl Triangle {
    pub fn new(i: LineId, j: LineId, k: LineId) -> Self {
        let mut t = [i, j, k];
        t.sort_unstable();
        debug_assert!(t[0] < t[1] && t[1] < t[2], "triangle needs three distinct lines");
        Triangle(t)
    }

    pub fn ids(&self) -> [LineId; 3] {
        self.0
    }

    pub fn contains(&self, id: LineId) -> bool {
        self.0.contains(&id)
    }

    /// Corner adjacency: exactly two shared lines.
    pub fn is_corner_adjacent(&self, other: &Triangle) -> bool {
        self.0.iter().filter(|x| other.0.contains(x)).count() == 2
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

/// A set of triangles, iterated in canonical (lexicographic) order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleSet(BTreeSet<Triangle>);

impl TriangleSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, t: Triangle) -> bool {
        self.0.insert(t)
    }

    pub fn contains(&self, t: &Triangle) -> bool {
        self.0.contains(t)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triangle> {
        self.0.iter()
    }

    pub fn to_vec(&self) -> Vec<[LineId; 3]> {
        self.0.iter().map(Triangle::ids).collect()
    }

    /// Classes of the transitive closure of corner adjacency, ordered by their
    /// smallest triangle.
    pub fn equivalence_classes(&self) -> Vec<TriangleSet> {
        let items: Vec<Triangle> = self.0.iter().copied().collect();
        let mut parent: Vec<usize> = (0..items.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in 0..items.len() {
            for b in a + 1..items.len() {
                if items[a].is_corner_adjacent(&items[b]) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    // keep the smaller index as root so class order is stable
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut classes: BTreeMap<usize, TriangleSet> = BTreeMap::new();
        for (x, t) in items.iter().enumerate() {
            let root = find(&mut parent, x);
            classes.entry(root).or_default().insert(*t);
        }
        classes.into_values().collect()
    }
}

impl FromIterator<Triangle> for TriangleSet {
    fn from_iter<I: IntoIterator<Item = Triangle>>(iter: I) -> Self {
        TriangleSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a TriangleSet {
    type Item = &'a Triangle;
    type IntoIter = std::collections::btree_set::Iter<'a, Triangle>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// One triangle per line, `"i j k"`.
impl fmt::Display for TriangleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.0 {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}
