//! Purely symbolic reasoning on nomenclatures: which position triples are
//! triangles, and which positions are lines at infinity. No geometry here.

use crate::arrangement::{Triangle, TriangleSet};
use crate::error::{Error, Result};
use crate::nomenclature::{Nomenclature, Sign};

fn sign_of(x: i64) -> Sign {
    Sign::of(x).expect("distinct labels give a nonzero product")
}

fn check_positions(n: usize, i: usize, j: usize, k: usize) -> Result<()> {
    if 1 <= i && i < j && j < k && k <= n {
        Ok(())
    } else {
        Err(Error::BadPositions(format!("need 1 <= i < j < k <= {n}, got ({i}, {j}, {k})")))
    }
}

/// Which half of the necessary condition holds for positions `i < j`
/// with respect to the first `k` labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NecessaryCase {
    /// No label among the first `k` lies strictly between `π(i)` and `π(j)`.
    Gap,
    /// All of the first `k` labels lie between `π(i)` and `π(j)` inclusive.
    Span,
}

pub fn necessary_case(nom: &Nomenclature, i: usize, j: usize, k: usize) -> Result<Option<NecessaryCase>> {
    check_positions(nom.n(), i, j, k)?;
    let (pi, pj) = (nom.label(i), nom.label(j));
    let (lo, hi) = (pi.min(pj), pi.max(pj));
    let prefix = (1..=k).map(|p| nom.label(p));
    if !prefix.clone().any(|x| lo < x && x < hi) {
        Ok(Some(NecessaryCase::Gap))
    } else if prefix.into_iter().all(|x| lo <= x && x <= hi) {
        Ok(Some(NecessaryCase::Span))
    } else {
        Ok(None)
    }
}

/// Whether positions `i < j < k` carry a triangle.
pub fn thm_b_is_triangle(nom: &Nomenclature, i: usize, j: usize, k: usize) -> Result<bool> {
    if (i, j, k) == (1, 2, 3) {
        return Ok(true);
    }
    let Some(case) = necessary_case(nom, i, j, k)? else {
        return Ok(false);
    };
    let label = |p: usize| nom.label(p) as i64;
    let aj = nom.sign(j).value();
    let ok = match case {
        NecessaryCase::Gap => {
            let base = aj * (label(j) - label(i));
            nom.sign(k) == sign_of(base * (label(k) - label(j)))
                && (j + 1..k).all(|l| nom.sign(l) == -sign_of(base * (label(l) - label(j))))
        }
        NecessaryCase::Span => {
            nom.sign(k) == nom.sign(j) && (j + 1..k).all(|l| nom.sign(l) == -nom.sign(j))
        }
    };
    Ok(ok)
}

pub fn thm_b_triangles(nom: &Nomenclature) -> TriangleSet {
    let n = nom.n();
    let mut set = TriangleSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                if thm_b_is_triangle(nom, i, j, k).expect("positions in range") {
                    set.insert(Triangle::new(nom.label(i), nom.label(j), nom.label(k)));
                }
            }
        }
    }
    set
}

/// How to read the last ordering condition of the `π(u) < π(t)` branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditionReading {
    /// Mirror image of the `π(t) < π(u)` branch: tail labels below `π(t)`
    /// exceed the `−1` labels between `t` and `u`. Agrees with geometry.
    #[default]
    Mirrored,
    /// Word-for-word: tail labels above `π(t)` exceed those `−1` labels.
    /// Disagrees with geometry; kept for comparison.
    Literal,
}

/// Which set of ordering conditions decides a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Last,
    /// Last `+1` after `t` has a larger label.
    Above,
    /// No `+1` after `t`.
    NoPlus,
    /// Last `+1` after `t` has a smaller label.
    Below,
}

fn check_position(nom: &Nomenclature, t: usize) -> Result<()> {
    if (1..=nom.n()).contains(&t) {
        Ok(())
    } else {
        Err(Error::BadPosition(format!("position {t} outside 1..={}", nom.n())))
    }
}

/// The branch that decides position `t`, after normalizing `a_t` to `+1`.
pub fn branch(nom: &Nomenclature, t: usize) -> Result<Branch> {
    check_position(nom, t)?;
    let n = nom.n();
    if t == n {
        return Ok(Branch::Last);
    }
    let flip = nom.sign(t) == Sign::Minus;
    let plus = |p: usize| (nom.sign(p) == Sign::Plus) != flip;
    Ok(match (t + 1..=n).rev().find(|&p| plus(p)) {
        None => Branch::NoPlus,
        Some(u) if nom.label(t) < nom.label(u) => Branch::Above,
        Some(_) => Branch::Below,
    })
}

pub fn line_at_infinity_symbolic(nom: &Nomenclature, t: usize) -> Result<bool> {
    line_at_infinity_symbolic_with(nom, t, ConditionReading::Mirrored)
}

/// Whether the line at position `t` is at infinity for the whole arrangement.
pub fn line_at_infinity_symbolic_with(nom: &Nomenclature, t: usize, reading: ConditionReading) -> Result<bool> {
    check_position(nom, t)?;
    let n = nom.n();
    if t == n {
        return Ok(true);
    }
    let nom = if nom.sign(t) == Sign::Minus { nom.negated() } else { nom.clone() };
    let pi = |p: usize| nom.label(p);
    let pt = pi(t);
    let labels = |ps: &[usize]| ps.iter().map(|&p| pi(p)).collect::<Vec<_>>();
    let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
    let decreasing = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);

    let after: Vec<usize> = (t + 1..=n).collect();
    let before: Vec<usize> = labels(&(1..t).collect::<Vec<_>>());
    let plus: Vec<usize> = after.iter().copied().filter(|&p| nom.sign(p) == Sign::Plus).collect();
    let minus: Vec<usize> = after.iter().copied().filter(|&p| nom.sign(p) == Sign::Minus).collect();
    let (plus_l, minus_l, after_l) = (labels(&plus), labels(&minus), labels(&after));

    let Some(&u) = plus.last() else {
        // every later line separates; they must fan out away from π(t)
        let lo: Vec<usize> = after_l.iter().copied().filter(|&x| x < pt).collect();
        let hi: Vec<usize> = after_l.iter().copied().filter(|&x| x > pt).collect();
        let ordered = increasing(&lo) && decreasing(&hi);
        let above = before.iter().filter(|&&b| b > pt).all(|&b| after_l.iter().all(|&x| b > x));
        let below = before.iter().filter(|&&b| b < pt).all(|&b| after_l.iter().all(|&x| b < x));
        return Ok(ordered && above && below);
    };

    let mid = labels(&minus.iter().copied().filter(|&p| p < u).collect::<Vec<_>>());
    let tail = labels(&after.iter().copied().filter(|&p| p > u).collect::<Vec<_>>());
    let tail_lo: Vec<usize> = tail.iter().copied().filter(|&x| x < pt).collect();
    let tail_hi: Vec<usize> = tail.iter().copied().filter(|&x| x > pt).collect();
    let all_gt = |xs: &[usize], ys: &[usize]| xs.iter().all(|&x| ys.iter().all(|&y| x > y));
    let tail_ordered = increasing(&tail_lo) && decreasing(&tail_hi);

    let holds = if pt < pi(u) {
        let a = plus_l.iter().all(|&x| x > pt) && increasing(&plus_l);
        let b = all_gt(&plus_l, &minus_l);
        let c = before.iter().all(|&b| b > pt && all_gt(&[b], &minus_l) && all_gt(&plus_l, &[b]));
        let d = mid.iter().all(|&x| x > pt) && decreasing(&mid);
        let e = tail_ordered && all_gt(&mid, &tail_hi);
        a && b && c && d && e
    } else {
        let a = plus_l.iter().all(|&x| x < pt) && decreasing(&plus_l);
        let b = all_gt(&minus_l, &plus_l);
        let c = before.iter().all(|&b| b < pt && all_gt(&minus_l, &[b]) && all_gt(&[b], &plus_l));
        let d = mid.iter().all(|&x| x < pt) && increasing(&mid);
        let e = tail_ordered
            && match reading {
                ConditionReading::Mirrored => all_gt(&tail_lo, &mid),
                ConditionReading::Literal => all_gt(&tail_hi, &mid),
            };
        a && b && c && d && e
    };
    Ok(holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::LineId;

    const FIG: &str = "1^+1 2^-1 3^+1 7^+1 6^+1 4^-1 5^+1";
    const SIX_A: &str = "1^+1 2^-1 5^+1 3^+1 4^-1 6^+1";
    const SIX_B: &str = "1^+1 2^-1 5^+1 3^+1 6^+1 4^-1";

    fn nom(s: &str) -> Nomenclature {
        s.parse().unwrap()
    }

    fn set(ts: &[[LineId; 3]]) -> TriangleSet {
        ts.iter().map(|t| Triangle::new(t[0], t[1], t[2])).collect()
    }

    #[test]
    fn position_triples() {
        let n = nom(FIG);
        assert!(thm_b_is_triangle(&n, 4, 5, 7).unwrap());
        assert_eq!(necessary_case(&n, 4, 5, 7).unwrap(), Some(NecessaryCase::Gap));
        assert!(thm_b_is_triangle(&n, 1, 4, 5).unwrap());
        assert_eq!(necessary_case(&n, 1, 4, 5).unwrap(), Some(NecessaryCase::Span));
        assert!(thm_b_is_triangle(&n, 1, 2, 3).unwrap());
        assert_eq!(thm_b_is_triangle(&n, 2, 2, 3).unwrap_err().code(), "bad-positions");
        assert_eq!(thm_b_is_triangle(&n, 1, 2, 8).unwrap_err().code(), "bad-positions");
    }

    #[test]
    fn triangle_sets() {
        assert_eq!(thm_b_triangles(&nom(FIG)), set(&[[1, 2, 3], [1, 2, 4], [2, 3, 7], [1, 6, 7], [5, 6, 7]]));
        let six = set(&[[1, 2, 4], [1, 2, 5], [1, 3, 5], [2, 3, 6], [4, 5, 6]]);
        assert_eq!(thm_b_triangles(&nom(SIX_A)), six);
        assert_eq!(thm_b_triangles(&nom(SIX_B)), six);
        assert_eq!(thm_b_triangles(&nom("2^+1 3^-1 1^-1")), set(&[[1, 2, 3]]));
    }

    #[test]
    fn worked_examples_for_line_four() {
        let a = nom(SIX_A);
        let t = a.position_of(4).unwrap();
        assert!(!line_at_infinity_symbolic(&a, t).unwrap());
        let f = nom(FIG);
        let t = f.position_of(4).unwrap();
        assert!(line_at_infinity_symbolic(&f, t).unwrap());
    }

    #[test]
    fn line_six_in_the_pair() {
        assert!(line_at_infinity_symbolic(&nom(SIX_A), 6).unwrap());
        assert!(!line_at_infinity_symbolic(&nom(SIX_B), 5).unwrap());
    }

    #[test]
    fn last_position_and_errors() {
        let f = nom(FIG);
        assert!(line_at_infinity_symbolic(&f, 7).unwrap());
        assert_eq!(branch(&f, 7).unwrap(), Branch::Last);
        assert_eq!(line_at_infinity_symbolic(&f, 0).unwrap_err().code(), "bad-position");
        assert_eq!(line_at_infinity_symbolic(&f, 8).unwrap_err().code(), "bad-position");
    }

    #[test]
    fn readings_differ_on_the_known_case() {
        let n = nom("4^+1 3^-1 1^+1 2^-1");
        assert_eq!(branch(&n, 1).unwrap(), Branch::Below);
        assert!(!line_at_infinity_symbolic_with(&n, 1, ConditionReading::Mirrored).unwrap());
        assert!(line_at_infinity_symbolic_with(&n, 1, ConditionReading::Literal).unwrap());
    }

    #[test]
    fn negation_is_invisible() {
        let f = nom(FIG);
        for t in 1..=7 {
            assert_eq!(
                line_at_infinity_symbolic(&f, t).unwrap(),
                line_at_infinity_symbolic(&f.negated(), t).unwrap()
            );
        }
    }
}
