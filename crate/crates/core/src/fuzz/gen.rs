use super::rng::SplitMix64;
use crate::arrangement::Arrangement;
use crate::cyclicity::{self, GonalityCycle};
use crate::error::Result;
use crate::exact::{int, Line};
use crate::nomenclature::{realize_nomenclature, Nomenclature, Sign};
use crate::LineId;

/// Coefficient box for [`gen_generic`].
pub const GENERIC_BOX: i64 = 30;

fn sign(rng: &mut SplitMix64) -> Sign {
    if rng.coin() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Uniform permutation, uniform leading case, uniform later signs.
pub fn random_nomenclature(n: usize, rng: &mut SplitMix64) -> Nomenclature {
    let mut perm: Vec<LineId> = (1..=n).collect();
    rng.shuffle(&mut perm);
    let case = sign(rng);
    let mut lead = [perm[0], perm[1], perm[2]];
    lead.sort_unstable();
    let entries = perm
        .iter()
        .enumerate()
        .map(|(l, &label)| {
            let s = if l < 3 {
                if label == lead[1] {
                    -case
                } else {
                    case
                }
            } else {
                sign(rng)
            };
            (label, s)
        })
        .collect();
    Nomenclature::new(entries).expect("well formed by construction")
}

pub fn gen_infinity_type(n: usize, seed: u64) -> Result<(Nomenclature, Arrangement)> {
    let nom = random_nomenclature(n, &mut SplitMix64::new(seed));
    let arr = realize_nomenclature(&nom)?;
    Ok((nom, arr))
}

/// Uniform over valid cycles: indexed into the enumeration up to 20 lines,
/// rejection over first-run subsets beyond.
pub fn random_cycle(n: usize, rng: &mut SplitMix64) -> Result<GonalityCycle> {
    if n <= cyclicity::MAX_RECONSTRUCT {
        let mut all = cyclicity::enumerate_cycles(n)?;
        let k = rng.below(all.len() as u64) as usize;
        Ok(all.swap_remove(k))
    } else {
        Ok(cyclicity::sample_cycle(n, |bound| rng.below(bound)))
    }
}

pub fn gen_cyclic(n: usize, seed: u64) -> Result<(GonalityCycle, Arrangement)> {
    let c = random_cycle(n, &mut SplitMix64::new(seed))?;
    let arr = cyclicity::realize_cycle(&c)?;
    Ok((c, arr))
}

/// Integer lines `a·x + b·y = c` with `1 ≤ a ≤ 30`, `|b|, |c| ≤ 30`,
/// redrawn until in general position.
pub fn gen_generic(n: usize, seed: u64) -> Arrangement {
    let mut rng = SplitMix64::new(seed);
    loop {
        let lines: Vec<Line> = (0..n)
            .map(|_| {
                let a = rng.range(1, GENERIC_BOX);
                let b = rng.range(-GENERIC_BOX, GENERIC_BOX);
                let c = rng.range(-GENERIC_BOX, GENERIC_BOX);
                Line::new(int(a), int(b), int(c)).expect("a > 0")
            })
            .collect();
        if let Ok(arr) = Arrangement::build(lines) {
            return arr;
        }
    }
}
