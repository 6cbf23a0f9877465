//! The differential checks run on every fuzz case, each comparing a
//! combinatorial prediction with the exact geometry.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, Triangle, TriangleSet};
use crate::cyclicity::{self, GonalityCycle};
use crate::nomenclature::{canonical_infinity_permutation, derive_nomenclature, realize_nomenclature, Nomenclature};
use crate::symbolic::{self, ConditionReading};
use crate::LineId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Triangles of the face walk equal the oracle.
    FacesVsOracle,
    /// Corner points by crossing orders equal corner points by quadrants.
    CornerQuadrants,
    /// Symbolic triangles from the nomenclature equal the oracle.
    NomenclatureTriangles,
    /// Every oracle triangle satisfies the necessary condition at its positions.
    NecessaryCondition,
    /// Lines inserted between a triangle's second and third side cross its
    /// first two sides beyond the corner, opposite to the third side.
    OppositeCrossings,
    /// Symbolic line-at-infinity equals the geometric test, per position.
    InfinityLine,
    /// The same on the sign-negated nomenclature and its own realization.
    InfinityLineNegated,
    /// Deriving the realization of a nomenclature gives it back.
    Roundtrip,
    /// Canonical nomenclature survives realize-then-derive.
    CanonicalIdempotent,
    /// Symbolic triangles from the gonality cycle equal the oracle.
    CycleTriangles,
    /// At most two corner-adjacency classes of triangles.
    ClassBound,
    /// Every bounded face is the n-gon, a quadrilateral, or a triangle on the n-gon.
    NearNgonFaces,
    /// Consecutive n-gon sides form a triangle exactly when the label rule says so.
    JuxtaposedSides,
    /// Detecting the cycle on its realization gives it back.
    DetectRoundtrip,
    /// The triangle list determines the cycle.
    Reconstruct,
}

impl Check {
    pub fn name(self) -> String {
        serde_json::to_value(self).expect("unit variant").as_str().expect("string").to_string()
    }

    pub fn parse(name: &str) -> Option<Check> {
        serde_json::from_value(serde_json::Value::String(name.to_string())).ok()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Cycles up to this size are also checked for reconstruction.
pub const RECONSTRUCT_MAX: usize = 12;

/// One arrangement together with whatever combinatorial description it came with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub arr: Arrangement,
    pub nom: Option<Nomenclature>,
    pub cycle: Option<GonalityCycle>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub position: Option<usize>,
    pub expected: String,
    pub actual: String,
}

fn show(t: &TriangleSet) -> String {
    t.iter().map(Triangle::to_string).collect::<Vec<_>>().join(", ")
}

fn compare<T: PartialEq + fmt::Debug>(expected: T, actual: T) -> Vec<Option<Mismatch>> {
    let m = (expected != actual)
        .then(|| Mismatch { position: None, expected: format!("{expected:?}"), actual: format!("{actual:?}") });
    vec![m]
}

fn compare_sets(expected: &TriangleSet, actual: &TriangleSet) -> Vec<Option<Mismatch>> {
    let m = (expected != actual)
        .then(|| Mismatch { position: None, expected: show(expected), actual: show(actual) });
    vec![m]
}

fn holds(ok: bool, what: impl FnOnce() -> String) -> Vec<Option<Mismatch>> {
    vec![(!ok).then(|| Mismatch { position: None, expected: "holds".into(), actual: what() })]
}

impl Case {
    /// Checks that make sense for this case.
    pub fn applicable(&self) -> Vec<Check> {
        let mut v = vec![Check::FacesVsOracle, Check::CornerQuadrants];
        if self.nom.is_some() {
            v.extend([
                Check::NomenclatureTriangles,
                Check::NecessaryCondition,
                Check::OppositeCrossings,
                Check::InfinityLine,
                Check::InfinityLineNegated,
                Check::Roundtrip,
                Check::CanonicalIdempotent,
            ]);
        }
        if let Some(c) = &self.cycle {
            v.extend([Check::DetectRoundtrip, Check::NearNgonFaces]);
            if c.n() >= 4 {
                v.extend([Check::CycleTriangles, Check::ClassBound, Check::JuxtaposedSides]);
            }
            if (4..=RECONSTRUCT_MAX).contains(&c.n()) {
                v.push(Check::Reconstruct);
            }
        }
        v
    }

    /// One entry per unit checked; `Some` is a failure.
    pub fn evaluate(&self, check: Check, reading: ConditionReading) -> Vec<Option<Mismatch>> {
        let arr = &self.arr;
        match check {
            Check::FacesVsOracle => compare_sets(&arr.triangle_faces_oracle(), &arr.bounded_faces().triangles()),
            Check::CornerQuadrants => compare(arr.corner_points(), arr.corner_points_by_quadrants()),
            Check::NomenclatureTriangles => {
                compare_sets(&arr.triangle_faces_oracle(), &symbolic::thm_b_triangles(self.nom()))
            }
            Check::NecessaryCondition => necessary_condition(arr, self.nom()),
            Check::OppositeCrossings => opposite_crossings(arr, self.nom()),
            Check::InfinityLine => infinity_lines(arr, self.nom(), reading),
            Check::InfinityLineNegated => {
                let neg = self.nom().negated();
                match realize_nomenclature(&neg) {
                    Ok(arr) => infinity_lines(&arr, &neg, reading),
                    Err(e) => vec![Some(Mismatch { position: None, expected: "realizable".into(), actual: e.to_string() })],
                }
            }
            Check::Roundtrip => {
                let nom = self.nom();
                let back = realize_nomenclature(nom).and_then(|a| derive_nomenclature(&a, Some(&nom.permutation())));
                compare(Ok(nom.clone()), back)
            }
            Check::CanonicalIdempotent => {
                let first = derive_nomenclature(arr, None);
                let again = first.clone().and_then(|n| realize_nomenclature(&n)).and_then(|a| derive_nomenclature(&a, None));
                compare(first, again)
            }
            Check::CycleTriangles => {
                let expected = arr.triangle_faces_oracle();
                match cyclicity::thm_a_triangles(self.cycle()) {
                    Ok(t) => compare_sets(&expected, &t),
                    Err(e) => vec![Some(Mismatch { position: None, expected: show(&expected), actual: e.to_string() })],
                }
            }
            Check::ClassBound => {
                let classes = arr.triangle_faces_oracle().equivalence_classes().len();
                holds(classes <= 2, || format!("{classes} classes"))
            }
            Check::NearNgonFaces => {
                holds(cyclicity::faces_are_near_ngon(arr.n(), &arr.bounded_faces()), || "a stray face".into())
            }
            Check::JuxtaposedSides => juxtaposed(arr, self.cycle()),
            Check::DetectRoundtrip => compare(Some(self.cycle().clone()), cyclicity::detect_gonality_cycle(arr)),
            Check::Reconstruct => {
                let c = self.cycle();
                let back = cyclicity::thm_a_triangles(c).and_then(|t| cyclicity::reconstruct_cycle(&t, c.n()));
                compare(Ok(Some(c.clone())), back)
            }
        }
    }

    pub fn first_failure(&self, check: Check, reading: ConditionReading) -> Option<Mismatch> {
        self.evaluate(check, reading).into_iter().flatten().next()
    }

    fn nom(&self) -> &Nomenclature {
        self.nom.as_ref().expect("check needs a nomenclature")
    }

    fn cycle(&self) -> &GonalityCycle {
        self.cycle.as_ref().expect("check needs a cycle")
    }

    /// The same case with line `id` deleted, descriptions re-derived.
    /// `None` when the smaller arrangement loses the description.
    pub fn without_line(&self, id: LineId) -> Option<Case> {
        if self.arr.n() <= 3 {
            return None;
        }
        let arr = self.arr.without_line(id).ok()?;
        let nom = match &self.nom {
            None => None,
            Some(nom) => {
                let perm: Vec<LineId> = nom
                    .permutation()
                    .into_iter()
                    .filter(|&l| l != id)
                    .map(|l| if l > id { l - 1 } else { l })
                    .collect();
                Some(derive_nomenclature(&arr, Some(&perm)).ok()?)
            }
        };
        let cycle = match &self.cycle {
            None => None,
            Some(_) => Some(cyclicity::detect_gonality_cycle(&arr)?),
        };
        Some(Case { arr, nom, cycle })
    }
}

/// Smallest case, by deleting one line at a time, on which `check` still fails.
pub fn shrink(case: &Case, check: Check, reading: ConditionReading) -> Case {
    let mut current = case.clone();
    'outer: loop {
        for id in current.arr.ids() {
            if let Some(smaller) = current.without_line(id) {
                if smaller.first_failure(check, reading).is_some() {
                    current = smaller;
                    continue 'outer;
                }
            }
        }
        return current;
    }
}

fn infinity_lines(arr: &Arrangement, nom: &Nomenclature, reading: ConditionReading) -> Vec<Option<Mismatch>> {
    (1..=nom.n())
        .map(|t| {
            let symbolic = symbolic::line_at_infinity_symbolic_with(nom, t, reading).expect("position in range");
            let geometric = arr.member_at_infinity(nom.label(t)).expect("label in range");
            (symbolic != geometric).then(|| Mismatch {
                position: Some(t),
                expected: format!("geometric {geometric}"),
                actual: format!("symbolic {symbolic}"),
            })
        })
        .collect()
}

/// Oracle triangles as position triples `i < j < k`.
fn triangle_positions(arr: &Arrangement, nom: &Nomenclature) -> Vec<[usize; 3]> {
    arr.triangle_faces_oracle()
        .iter()
        .map(|t| {
            let mut p = t.ids().map(|l| nom.position_of(l).expect("label in nomenclature"));
            p.sort_unstable();
            p
        })
        .collect()
}

fn necessary_condition(arr: &Arrangement, nom: &Nomenclature) -> Vec<Option<Mismatch>> {
    triangle_positions(arr, nom)
        .into_iter()
        .map(|[i, j, k]| {
            let ok = (i, j, k) == (1, 2, 3) || symbolic::necessary_case(nom, i, j, k).expect("in range").is_some();
            (!ok).then(|| Mismatch {
                position: Some(k),
                expected: "necessary condition".into(),
                actual: format!("fails at positions ({i}, {j}, {k})"),
            })
        })
        .collect()
}

fn opposite_crossings(arr: &Arrangement, nom: &Nomenclature) -> Vec<Option<Mismatch>> {
    triangle_positions(arr, nom)
        .into_iter()
        .filter(|p| p[2] > 3)
        .map(|[i, j, k]| {
            let (li, lj, lk) = (nom.label(i), nom.label(j), nom.label(k));
            let corner = arr.vertex(li, lj);
            let ok = [li, lj].into_iter().all(|x| {
                let line = arr.line(x);
                let at = |other: LineId| line.param(arr.vertex(x, other)).cmp(&line.param(corner));
                let third = at(lk);
                third != Ordering::Equal && (j + 1..k).all(|l| at(nom.label(l)) == third.reverse())
            });
            (!ok).then(|| Mismatch {
                position: Some(k),
                expected: "opposite crossings".into(),
                actual: format!("same side at positions ({i}, {j}, {k})"),
            })
        })
        .collect()
}

fn juxtaposed(arr: &Arrangement, c: &GonalityCycle) -> Vec<Option<Mismatch>> {
    let oracle = arr.triangle_faces_oracle();
    let s = c.seq();
    let n = s.len();
    (0..n)
        .map(|x| {
            let (a, b, cc) = (s[(x + n - 1) % n], s[x], s[(x + 1) % n]);
            let predicted = cyclicity::juxtaposed_is_triangle(a, b, cc);
            let actual = oracle.contains(&Triangle::new(a, b, cc));
            (predicted != actual).then(|| Mismatch {
                position: Some(x + 1),
                expected: format!("{a} {b} {cc} triangle {actual}"),
                actual: format!("rule says {predicted}"),
            })
        })
        .collect()
}

/// Nomenclature of an arbitrary arrangement, if it is of infinity type.
pub fn canonical_nomenclature(arr: &Arrangement) -> Option<Nomenclature> {
    let perm = canonical_infinity_permutation(arr)?;
    derive_nomenclature(arr, Some(&perm)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig() -> Case {
        let nom: Nomenclature = "1^+1 2^-1 3^+1 7^+1 6^+1 4^-1 5^+1".parse().unwrap();
        Case { arr: realize_nomenclature(&nom).unwrap(), nom: Some(nom), cycle: None }
    }

    #[test]
    fn names_roundtrip() {
        assert_eq!(Check::InfinityLineNegated.name(), "infinity-line-negated");
        assert_eq!(Check::parse("faces-vs-oracle"), Some(Check::FacesVsOracle));
        assert_eq!(Check::parse("nope"), None);
    }

    #[test]
    fn all_checks_pass_on_the_seven_lines() {
        let case = fig();
        for check in case.applicable() {
            assert_eq!(case.first_failure(check, ConditionReading::Mirrored), None, "{check}");
        }
    }

    #[test]
    fn cyclic_checks_pass() {
        let c: GonalityCycle = "(1 3 4 2 5)".parse().unwrap();
        let case = Case { arr: cyclicity::realize_cycle(&c).unwrap(), nom: None, cycle: Some(c) };
        assert!(case.applicable().contains(&Check::Reconstruct));
        for check in case.applicable() {
            assert_eq!(case.first_failure(check, ConditionReading::Mirrored), None, "{check}");
        }
    }

    #[test]
    fn literal_reading_fails_and_shrinks() {
        let nom: Nomenclature = "4^+1 3^-1 1^+1 2^-1".parse().unwrap();
        let case = Case { arr: realize_nomenclature(&nom).unwrap(), nom: Some(nom), cycle: None };
        let m = case.first_failure(Check::InfinityLine, ConditionReading::Literal).unwrap();
        assert_eq!(m.position, Some(1));
        let small = shrink(&case, Check::InfinityLine, ConditionReading::Literal);
        assert_eq!(small.arr.n(), 4);
        assert!(case.first_failure(Check::InfinityLine, ConditionReading::Mirrored).is_none());
    }
}
