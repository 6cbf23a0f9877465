//! Signed nomenclatures of infinity-type arrangements.
//!
//! A nomenclature lists the lines in an insertion order where every line is
//! at infinity for the lines before it, each tagged `+1` when it keeps the
//! origin and the earlier vertices on the same side and `−1` when it
//! separates them. The first three signs come from the triangle rule instead.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::exact::{Line, Rat};
use crate::LineId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Sign of a nonzero integer.
    pub fn of(x: i64) -> Option<Sign> {
        match x.cmp(&0) {
            Ordering::Greater => Some(Sign::Plus),
            Ordering::Less => Some(Sign::Minus),
            Ordering::Equal => None,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// `π(1)^{a_1} … π(n)^{a_n}`: a permutation of `1..=n` with one sign per entry.
///
/// The three leading labels, read in ascending label order, carry either
/// `+1 −1 +1` or `−1 +1 −1`. Positions are 1-based throughout.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Nomenclature {
    entries: Vec<(LineId, Sign)>,
}

impl Nomenclature {
    pub fn new(entries: Vec<(LineId, Sign)>) -> Result<Self> {
        let n = entries.len();
        if n < 3 {
            return Err(Error::NTooSmall { min: 3, got: n });
        }
        let mut seen = vec![false; n + 1];
        for &(label, _) in &entries {
            if label == 0 || label > n || std::mem::replace(&mut seen[label], true) {
                return Err(Error::NotAPermutation(format!(
                    "labels must be 1..={n} each exactly once"
                )));
            }
        }
        let mut lead = entries[..3].to_vec();
        lead.sort();
        let signs = [lead[0].1, lead[1].1, lead[2].1];
        if signs != [Sign::Plus, Sign::Minus, Sign::Plus] && signs != [Sign::Minus, Sign::Plus, Sign::Minus] {
            return Err(Error::BadLeadingSigns);
        }
        Ok(Nomenclature { entries })
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(LineId, Sign)] {
        &self.entries
    }

    /// `π(position)`.
    pub fn label(&self, position: usize) -> LineId {
        self.entries[position - 1].0
    }

    /// `a_position`.
    pub fn sign(&self, position: usize) -> Sign {
        self.entries[position - 1].1
    }

    pub fn position_of(&self, label: LineId) -> Option<usize> {
        self.entries.iter().position(|&(l, _)| l == label).map(|p| p + 1)
    }

    pub fn permutation(&self) -> Vec<LineId> {
        self.entries.iter().map(|&(l, _)| l).collect()
    }

    /// Every sign flipped; still well formed.
    pub fn negated(&self) -> Nomenclature {
        Nomenclature { entries: self.entries.iter().map(|&(l, s)| (l, -s)).collect() }
    }
}

impl fmt::Display for Nomenclature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (label, sign)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{label}^{sign}")?;
        }
        Ok(())
    }
}

impl FromStr for Nomenclature {
    type Err = Error;

    /// Whitespace-separated tokens `<id>^+1` / `<id>^-1`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split_whitespace()
            .map(|tok| {
                let bad = || Error::BadToken(tok.to_string());
                let (id, sign) = tok.split_once('^').ok_or_else(bad)?;
                if id.is_empty() || !id.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                let id: LineId = id.parse().map_err(|_| bad())?;
                let sign = match sign {
                    "+1" => Sign::Plus,
                    "-1" => Sign::Minus,
                    _ => return Err(bad()),
                };
                Ok((id, sign))
            })
            .collect::<Result<Vec<_>>>()?;
        Nomenclature::new(entries)
    }
}

/// Triangle signs of three lines, in ascending label order: `+1` for a line
/// that does not separate the origin from the opposite vertex.
pub fn triangle_signs(arr: &Arrangement, ids: [LineId; 3]) -> [Sign; 3] {
    let mut ids = ids;
    ids.sort_unstable();
    let [i, j, k] = ids;
    let sign = |me: LineId, p: LineId, q: LineId| {
        if arr.side_of(me, p, q) == arr.origin_side(me) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    };
    [sign(i, j, k), sign(j, i, k), sign(k, i, j)]
}

/// `+1` iff line `id` keeps the origin and every vertex among `prior` on one side.
fn separation_sign(arr: &Arrangement, id: LineId, prior: &[LineId]) -> Sign {
    let origin = arr.origin_side(id);
    let keeps = prior
        .iter()
        .enumerate()
        .all(|(x, &p)| prior[x + 1..].iter().all(|&q| arr.side_of(id, p, q) == origin));
    if keeps {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Outcome of searching for the canonical infinity permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinitySearch {
    /// Greedy rule: repeatedly take the at-infinity line with the largest id.
    pub greedy: Option<Vec<LineId>>,
    /// Backtracking over every at-infinity choice; only run when greedy fails.
    pub backtracked: Option<Vec<LineId>>,
}

impl InfinitySearch {
    /// Greedy failed although some infinity permutation exists.
    pub fn note_violation(&self) -> bool {
        self.greedy.is_none() && self.backtracked.is_some()
    }

    pub fn permutation(&self) -> Option<&[LineId]> {
        self.greedy.as_deref().or(self.backtracked.as_deref())
    }
}

/// The greedy canonical infinity permutation, if the greedy rule succeeds.
pub fn canonical_infinity_permutation(arr: &Arrangement) -> Option<Vec<LineId>> {
    let mut remaining: Vec<LineId> = arr.ids().collect();
    let mut tail = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let pick = *remaining.iter().rev().find(|&&id| arr.member_at_infinity_among(id, &remaining))?;
        remaining.retain(|&id| id != pick);
        tail.push(pick);
    }
    tail.reverse();
    Some(tail)
}

pub fn search_infinity_permutation(arr: &Arrangement) -> InfinitySearch {
    let greedy = canonical_infinity_permutation(arr);
    let backtracked = if greedy.is_some() { None } else { backtrack(arr) };
    InfinitySearch { greedy, backtracked }
}

fn backtrack(arr: &Arrangement) -> Option<Vec<LineId>> {
    fn go(arr: &Arrangement, remaining: &mut Vec<LineId>, tail: &mut Vec<LineId>, dead: &mut HashSet<Vec<LineId>>) -> bool {
        if remaining.len() <= 2 {
            tail.extend(remaining.iter().rev());
            return true;
        }
        if dead.contains(remaining) {
            return false;
        }
        let candidates: Vec<LineId> = remaining
            .iter()
            .rev()
            .copied()
            .filter(|&id| arr.member_at_infinity_among(id, remaining))
            .collect();
        for pick in candidates {
            let mut rest: Vec<LineId> = remaining.iter().copied().filter(|&x| x != pick).collect();
            tail.push(pick);
            if go(arr, &mut rest, tail, dead) {
                return true;
            }
            tail.truncate(tail.len() - 1);
        }
        dead.insert(remaining.clone());
        false
    }
    let mut remaining: Vec<LineId> = arr.ids().collect();
    let mut tail = Vec::new();
    if go(arr, &mut remaining, &mut tail, &mut HashSet::new()) {
        tail.reverse();
        Some(tail)
    } else {
        None
    }
}

/// Whether `perm` is an infinity permutation of `arr`; reports the first
/// offending position.
pub fn check_infinity_permutation(arr: &Arrangement, perm: &[LineId]) -> Result<()> {
    let n = arr.n();
    let mut seen = vec![false; n + 1];
    if perm.len() != n || perm.iter().any(|&l| l == 0 || l > n || std::mem::replace(&mut seen[l], true)) {
        return Err(Error::NotAPermutation(format!("expected a permutation of 1..={n}")));
    }
    for l in 2..n {
        if !arr.member_at_infinity_among(perm[l], &perm[..l]) {
            return Err(Error::NotAnInfinityPermutation { position: l + 1, line: perm[l] });
        }
    }
    Ok(())
}

/// Reads the nomenclature of `arr` for the given infinity permutation, or for
/// the canonical one when `perm` is `None`.
pub fn derive_nomenclature(arr: &Arrangement, perm: Option<&[LineId]>) -> Result<Nomenclature> {
    if arr.n() < 3 {
        return Err(Error::NTooSmall { min: 3, got: arr.n() });
    }
    let perm: Vec<LineId> = match perm {
        Some(p) => p.to_vec(),
        None => search_infinity_permutation(arr).permutation().ok_or(Error::NotInfinityType)?.to_vec(),
    };
    check_infinity_permutation(arr, &perm)?;

    let lead = triangle_signs(arr, [perm[0], perm[1], perm[2]]);
    let mut sorted = [perm[0], perm[1], perm[2]];
    sorted.sort_unstable();
    let lead_sign = |label: LineId| lead[sorted.iter().position(|&x| x == label).expect("leading label")];
    // the separation rule at position 3 coincides with the triangle rule
    debug_assert_eq!(separation_sign(arr, perm[2], &perm[..2]), lead_sign(perm[2]));

    let entries = perm
        .iter()
        .enumerate()
        .map(|(l, &label)| {
            let sign = if l < 3 { lead_sign(label) } else { separation_sign(arr, label, &perm[..l]) };
            (label, sign)
        })
        .collect();
    Nomenclature::new(entries)
}

/// Exact direction ladders used to assign each label a direction whose angle
/// order matches the label order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ladder {
    /// Rational unit vectors `((q²−p²), 2pq)/(p²+q²)` with `p/q = (2m−1)/(2n−2m+1)`,
    /// roughly evenly spread over `(0, π)`.
    #[default]
    Stereographic,
    /// Integer slopes: line `2x + (2m−n−1)y = c`.
    IntegerSlope,
}

impl Ladder {
    /// `(a, b)` for label `m` of `n`; `a > 0`.
    pub fn coefficients(self, m: LineId, n: usize) -> (BigInt, BigInt) {
        let (m, n) = (m as i64, n as i64);
        match self {
            Ladder::Stereographic => {
                let (p, q) = (BigInt::from(2 * m - 1), BigInt::from(2 * n - 2 * m + 1));
                (BigInt::from(2) * &p * &q, &p * &p - &q * &q)
            }
            Ladder::IntegerSlope => (BigInt::from(2), BigInt::from(2 * m - n - 1)),
        }
    }
}

pub fn realize_nomenclature(nom: &Nomenclature) -> Result<Arrangement> {
    realize_nomenclature_with(nom, Ladder::default())
}

/// Builds a conventional arrangement whose nomenclature for the permutation of
/// `nom` is `nom` itself.
///
/// Lines are inserted in nomenclature order. Each new line sits one unit past
/// the extreme existing vertex: on the far side from the origin's half-plane
/// for `+1`, so every earlier vertex shares the origin's side, and before the
/// nearest vertex for `−1`. The result is verified exactly before returning.
pub fn realize_nomenclature_with(nom: &Nomenclature, ladder: Ladder) -> Result<Arrangement> {
    let n = nom.n();
    let one = Rat::one();
    let mut placed: Vec<(LineId, Line)> = Vec::with_capacity(n);
    for (l, &(label, sign)) in nom.entries().iter().enumerate() {
        let (a, b) = ladder.coefficients(label, n);
        let (ra, rb) = (Rat::from_integer(a), Rat::from_integer(b));
        let c = if l < 2 {
            ra.clone()
        } else {
            // The origin ends up on the negative side of every line once normalized.
            let values = placed.iter().enumerate().flat_map(|(x, (_, p))| {
                placed[x + 1..].iter().map(move |(_, q)| crate::exact::intersect(p, q))
            });
            let mut lo: Option<Rat> = None;
            let mut hi: Option<Rat> = None;
            for v in values {
                let v = v?;
                let value = &ra * &v.x + &rb * &v.y;
                if lo.as_ref().is_none_or(|x| value < *x) {
                    lo = Some(value.clone());
                }
                if hi.as_ref().is_none_or(|x| value > *x) {
                    hi = Some(value);
                }
            }
            match sign {
                Sign::Plus => hi.expect("two lines placed") + &one,
                Sign::Minus => lo.expect("two lines placed") - &one,
            }
        };
        placed.push((label, Line::new(ra, rb, c)?));
    }
    placed.sort_by_key(|&(label, _)| label);
    let arr = Arrangement::build(placed.into_iter().map(|(_, line)| line).collect())
        .map_err(|e| Error::RealizationFailed(e.to_string()))?;
    let back = derive_nomenclature(&arr, Some(&nom.permutation()))
        .map_err(|e| Error::RealizationFailed(e.to_string()))?;
    if &back != nom {
        return Err(Error::RealizationFailed(format!("realized {back}, wanted {nom}")));
    }
    Ok(arr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::cmp_angle;

    const FIG: &str = "1^+1 2^-1 3^+1 7^+1 6^+1 4^-1 5^+1";

    fn nom(s: &str) -> Nomenclature {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_format() {
        let id = nom("1^+1 2^-1 3^+1");
        assert_eq!(id.permutation(), vec![1, 2, 3]);
        assert_eq!(id.n(), 3);
        let six = nom("1^+1 2^-1 5^+1 3^+1 4^-1 6^+1");
        assert_eq!(six.permutation(), vec![1, 2, 5, 3, 4, 6]);
        assert_eq!(six.sign(5), Sign::Minus);
        assert_eq!(nom("  1^+1   2^-1 3^+1 ").to_string(), "1^+1 2^-1 3^+1");
    }

    #[test]
    fn parse_errors() {
        let code = |s: &str| s.parse::<Nomenclature>().unwrap_err().code();
        assert_eq!(code("1^+1 1^-1 2^+1"), "not-a-permutation");
        assert_eq!(code("1^+1 2^-1 4^+1"), "not-a-permutation");
        assert_eq!(code("1^+2 2^-1 3^+1"), "bad-token");
        assert_eq!(code("1+1 2^-1 3^+1"), "bad-token");
        assert_eq!(code("x^+1 2^-1 3^+1"), "bad-token");
        assert_eq!(code("^+1 2^-1 3^+1"), "bad-token");
        assert_eq!(code("1^+1 2^+1 3^+1"), "bad-leading-signs");
        assert_eq!(code("3^-1 1^+1 2^-1"), "bad-leading-signs");
        assert_eq!(code("1^+1 2^-1"), "n-too-small");
    }

    #[test]
    fn leading_pattern_is_in_label_order() {
        // read by position these would be + + -, by label they are + - +
        assert!("3^+1 1^+1 2^-1".parse::<Nomenclature>().is_ok());
        assert!("3^+1 1^-1 2^+1".parse::<Nomenclature>().is_err());
    }

    #[test]
    fn realize_three_lines() {
        let arr = realize_nomenclature(&nom("1^+1 2^-1 3^+1")).unwrap();
        assert_eq!(triangle_signs(&arr, [1, 2, 3]), [Sign::Plus, Sign::Minus, Sign::Plus]);
        let arr = realize_nomenclature(&nom("2^+1 3^-1 1^-1")).unwrap();
        assert_eq!(triangle_signs(&arr, [1, 2, 3]), [Sign::Minus, Sign::Plus, Sign::Minus]);
    }

    #[test]
    fn seven_line_roundtrip_and_second_permutation() {
        let n = nom(FIG);
        let arr = realize_nomenclature(&n).unwrap();
        assert_eq!(derive_nomenclature(&arr, Some(&n.permutation())).unwrap(), n);
        let other = derive_nomenclature(&arr, Some(&[1, 2, 3, 4, 7, 6, 5])).unwrap();
        assert_eq!(other.to_string(), "1^+1 2^-1 3^+1 4^-1 7^+1 6^+1 5^+1");
        let canonical = canonical_infinity_permutation(&arr).unwrap();
        assert_eq!(canonical.last(), Some(&5));
    }

    #[test]
    fn three_line_canonical_permutation_is_identity() {
        let arr = realize_nomenclature(&nom("3^-1 1^-1 2^+1")).unwrap();
        assert_eq!(canonical_infinity_permutation(&arr), Some(vec![1, 2, 3]));
        let derived = derive_nomenclature(&arr, None).unwrap();
        let signs = triangle_signs(&arr, [1, 2, 3]);
        assert_eq!(derived.entries().iter().map(|e| e.1).collect::<Vec<_>>(), signs.to_vec());
    }

    #[test]
    fn second_counterexample_line_six_not_at_infinity() {
        let first = realize_nomenclature(&nom("1^+1 2^-1 5^+1 3^+1 4^-1 6^+1")).unwrap();
        let second = realize_nomenclature(&nom("1^+1 2^-1 5^+1 3^+1 6^+1 4^-1")).unwrap();
        assert!(first.member_at_infinity(6).unwrap());
        assert!(!second.member_at_infinity(6).unwrap());
    }

    #[test]
    fn derive_rejects_bad_permutations() {
        let arr = realize_nomenclature(&nom("1^+1 2^-1 5^+1 3^+1 6^+1 4^-1")).unwrap();
        // 6 is not at infinity for all of the others
        let err = derive_nomenclature(&arr, Some(&[1, 2, 5, 3, 4, 6])).unwrap_err();
        assert_eq!(err.code(), "not-an-infinity-permutation");
        let err = derive_nomenclature(&arr, Some(&[1, 2, 3])).unwrap_err();
        assert_eq!(err.code(), "not-a-permutation");
    }

    #[test]
    fn ladders_follow_label_order() {
        for ladder in [Ladder::Stereographic, Ladder::IntegerSlope] {
            for n in 3..12 {
                let lines: Vec<Line> = (1..=n)
                    .map(|m| {
                        let (a, b) = ladder.coefficients(m, n);
                        Line::new(Rat::from_integer(a), Rat::from_integer(b), Rat::one()).unwrap()
                    })
                    .collect();
                for w in lines.windows(2) {
                    assert_eq!(cmp_angle(&w[0], &w[1]), Ordering::Less);
                }
            }
        }
    }
}
