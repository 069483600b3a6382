//! Uniform minors of MR matroids: explicit constructions and an exhaustive oracle.
//!
//! A minor is described by a [`MinorWitness`]: a flat `F` to contract and a set `X`
//! to delete. Every uniform minor without loops can be written this way with `F` a
//! flat, so the oracle only has to range over flats of the right rank.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bounds::{eq3_j, eq3_range, eq3_size, eq4_range};
use crate::error::{Error, Result};
use crate::matroid::{flats, is_flat, is_uniform, minor, Matroid};
use crate::mr::{MrMatroid, MrParams};
use crate::subset::Subset;

/// Ground-size limit for [`oracle_max_uniform`].
pub const ORACLE_LIMIT: usize = 15;

/// Certificate that `M/F \ X` is the uniform matroid `U_{n'}^{k'}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinorWitness {
    pub contract_flat: Subset,
    pub delete_set: Subset,
    pub target_rank: usize,
    pub claimed_size: usize,
    pub verified: bool,
    /// The small-rank construction was replaced by a searched witness, either because
    /// the literal construction does not apply or because a larger minor exists.
    pub boundary_case: bool,
}

impl MinorWitness {
    pub fn new(
        ground_size: usize,
        contract_flat: Subset,
        delete_set: Subset,
        target_rank: usize,
    ) -> Self {
        MinorWitness {
            contract_flat,
            delete_set,
            target_rank,
            claimed_size: ground_size - contract_flat.len() - delete_set.len(),
            verified: false,
            boundary_case: false,
        }
    }
}

/// `F=<list>; X=<list>; k'=<int>; n'=<int>; verified=<bool>`, with `; boundary=true`
/// appended for flagged witnesses.
impl fmt::Display for MinorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F={}; X={}; k'={}; n'={}; verified={}",
            self.contract_flat, self.delete_set, self.target_rank, self.claimed_size, self.verified,
        )?;
        if self.boundary_case {
            f.write_str("; boundary=true")?;
        }
        Ok(())
    }
}

impl FromStr for MinorWitness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut fields = BTreeMap::new();
        for part in s.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("witness field {part:?} has no '='")))?;
            fields.insert(key.trim(), val.trim());
        }
        let get = |key: &str| {
            fields
                .get(key)
                .copied()
                .ok_or_else(|| Error::Parse(format!("witness is missing {key}")))
        };
        let int = |key: &str| -> Result<usize> {
            get(key)?
                .parse()
                .map_err(|_| Error::Parse(format!("witness field {key} is not an integer")))
        };
        let flag = |key: &str| -> Result<bool> {
            match fields.get(key) {
                None => Ok(false),
                Some(v) => v
                    .parse()
                    .map_err(|_| Error::Parse(format!("witness field {key} is not a bool"))),
            }
        };
        Ok(MinorWitness {
            contract_flat: get("F")?.parse()?,
            delete_set: get("X")?.parse()?,
            target_rank: int("k'")?,
            claimed_size: int("n'")?,
            verified: flag("verified")?,
            boundary_case: flag("boundary")?,
        })
    }
}

/// Checks the witness from scratch: `F` is a flat, `F` and `X` are disjoint,
/// the claimed size is `|E| - |F| - |X|`, and `M/F \ X` is `U_{n'}^{k'}`.
pub fn verify_witness<M: Matroid + ?Sized>(m: &M, w: &MinorWitness) -> Result<bool> {
    let ground = m.ground();
    let (f, x) = (w.contract_flat, w.delete_set);
    if !f.is_subset(ground) || !x.is_subset(ground) || !f.is_disjoint(x) {
        return Ok(false);
    }
    if w.claimed_size + f.len() + x.len() != ground.len() {
        return Ok(false);
    }
    if !is_flat(m, f) {
        return Ok(false);
    }
    let view = minor(m, f, x)?;
    Ok(is_uniform(&view)? == Some((w.claimed_size, w.target_rank)))
}

fn finish(m: &MrMatroid, f: Subset, x: Subset, k_prime: usize) -> Result<MinorWitness> {
    let mut w = MinorWitness::new(m.params().n(), f, x, k_prime);
    w.verified = verify_witness(m, &w)?;
    Ok(w)
}

/// Delete the smallest element of every repair set: `U_{n-g}^k`.
pub fn witness_eq1(m: &MrMatroid) -> Result<MinorWitness> {
    let p = m.params();
    let x = p
        .repair_sets()
        .iter()
        .filter_map(|s| s.first())
        .collect::<Subset>();
    finish(m, Subset::EMPTY, x, p.k())
}

/// Rank-`r` uniform minor of size `n - k + r - ⌈k/r⌉ + 1`.
///
/// If `r | k`, contract the first `k/r - 1` repair sets. Otherwise contract the
/// first `⌊k/r⌋ - 1` repair sets plus `k - r - rank` elements `B` of the next one,
/// and delete one further element of that set.
pub fn witness_eq2(m: &MrMatroid) -> Result<MinorWitness> {
    let p = m.params();
    let (k, r) = (p.k(), p.r());
    let sets = p.repair_sets();
    let (f, x) = if k % r == 0 {
        let f = sets[..k / r - 1].iter().fold(Subset::EMPTY, |a, &s| a | s);
        (f, Subset::EMPTY)
    } else {
        let whole = k / r - 1;
        let f1 = sets[..whole].iter().fold(Subset::EMPTY, |a, &s| a | s);
        let partial = sets[whole];
        let b = partial.take_smallest(k - r - whole * r);
        let e = (partial - b).take_smallest(1);
        (f1 | b, e)
    };
    finish(m, f, x, r)
}

/// The two-case construction for `2 <= k' <= r - 1` with no deletions, or `None`
/// where a required block size is negative or runs past the last repair set.
pub fn literal_eq3_flat(p: &MrParams, k_prime: usize) -> Option<Subset> {
    let (k, r, g) = (p.k(), p.r(), p.g());
    let sets = p.repair_sets();
    let block = r - k_prime;
    let need = k - k_prime;

    let i1 = need / block;
    if i1 < g {
        let mut f = Subset::EMPTY;
        for s in &sets[..i1] {
            f = f | s.take_smallest(block);
        }
        return Some(f | sets[i1].take_smallest(need - i1 * block));
    }

    let j = eq3_j(p, k_prime);
    if j < 1 || j as usize > g {
        return None;
    }
    let j = j as usize;
    let rest = need.checked_sub(j * r)?;
    let i2 = rest / block;
    let rem = rest - i2 * block;
    if j + i2 > g || (rem > 0 && j + i2 >= g) {
        return None;
    }
    let mut f = sets[..j].iter().fold(Subset::EMPTY, |a, &s| a | s);
    for s in &sets[j..j + i2] {
        f = f | s.take_smallest(block);
    }
    if rem > 0 {
        f = f | sets[j + i2].take_smallest(rem);
    }
    Some(f)
}

/// Smallest-cost `(F, X)` of rank `k - k'` whose minor is `U^{k'}`, searching over
/// the number `t` of repair sets allowed to exceed `r - k'` contracted elements.
///
/// Each such set is either contracted whole or loses one element to deletion; the
/// other sets hold at most `r - k'` contracted elements.
pub fn searched_eq3(p: &MrParams, k_prime: usize) -> Option<(Subset, Subset)> {
    let (k, r, g) = (p.k(), p.r(), p.g());
    let sets = p.repair_sets();
    let block = r - k_prime;
    let need = k - k_prime;
    (0..=g).find_map(|t| {
        let mut remaining = need;
        let (mut f, mut x) = (Subset::EMPTY, Subset::EMPTY);
        for (i, &s) in sets.iter().enumerate() {
            let cap = if i < t { r } else { block };
            let c = cap.min(remaining);
            if c == r {
                f = f | s;
            } else {
                let part = s.take_smallest(c);
                f = f | part;
                if c > block {
                    x = x | (s - part).take_smallest(1);
                }
            }
            remaining -= c;
        }
        (remaining == 0).then_some((f, x))
    })
}

/// Rank-`k'` uniform minor for `2 <= k' <= r - 1`.
///
/// Returns the literal construction (size `n - k + k' - max{j, 0}`) when it applies
/// and nothing larger is found. Otherwise returns the best verified searched
/// witness, flagged as a boundary case.
pub fn witness_eq3(m: &MrMatroid, k_prime: usize) -> Result<MinorWitness> {
    let p = m.params();
    let formula = eq3_size(p, k_prime)?;

    let literal = match literal_eq3_flat(p, k_prime) {
        Some(f) => Some(finish(m, f, Subset::EMPTY, k_prime)?).filter(|w| w.verified),
        None => None,
    };
    let searched = match searched_eq3(p, k_prime) {
        Some((f, x)) => Some(finish(m, f, x, k_prime)?).filter(|w| w.verified),
        None => None,
    };

    match (literal, searched) {
        (Some(l), s) if s.is_none_or(|s| s.claimed_size <= l.claimed_size) => Ok(l),
        (_, Some(mut s)) if s.claimed_size >= formula => {
            s.boundary_case = true;
            Ok(s)
        }
        _ if p.n() <= ORACLE_LIMIT => match oracle_max_uniform(m, k_prime)? {
            Some((size, mut w)) if size >= formula => {
                w.boundary_case = true;
                Ok(w)
            }
            _ => Err(Error::NoConstruction(format!(
                "no verified rank-{k_prime} minor of size {formula} for {p}"
            ))),
        },
        _ => Err(Error::NoConstruction(format!(
            "rank-{k_prime} construction inapplicable for {p} and too large to search"
        ))),
    }
}

/// Rank-`k'` uniform minor for `r < k' < k`: delete one element per repair set,
/// then contract `k - k'` independent elements.
///
/// The contracted set is spread so that no repair set loses `r` elements to it; when
/// that is impossible, any repair set left with a single deleted element is
/// contracted whole instead (same minor, and the contracted set stays a flat).
pub fn witness_eq4(m: &MrMatroid, k_prime: usize) -> Result<MinorWitness> {
    let p = m.params();
    let range = eq4_range(p);
    if !range.contains(&k_prime) {
        return Err(Error::RankOutOfRange {
            k_prime,
            range: format!("[{}, {}]", range.start(), range.end()),
        });
    }
    let r = p.r();
    let need = p.k() - k_prime;
    let sets = p.repair_sets();
    let mut x = sets.iter().filter_map(|s| s.first()).collect::<Subset>();
    let rest = Subset::full(p.n()) - x;

    let mut f = Subset::EMPTY;
    for e in rest.iter() {
        if f.len() == need {
            break;
        }
        let home = sets.iter().find(|s| s.contains(e)).expect("partition");
        if (f & *home).len() + 1 < r {
            f.insert(e);
        }
    }
    for e in (rest - f).iter() {
        if f.len() == need {
            break;
        }
        f.insert(e);
    }
    for &s in sets {
        if (f & s).len() == r {
            x = x - s;
            f = f | s;
        }
    }
    finish(m, f, x, k_prime)
}

/// Every constructive witness for `m`: eq1, eq2, then eq3 and eq4 for each admissible `k'`.
pub fn all_witnesses(m: &MrMatroid) -> Result<Vec<(&'static str, MinorWitness)>> {
    let p = m.params();
    let mut out = vec![("eq1", witness_eq1(m)?), ("eq2", witness_eq2(m)?)];
    for kp in eq3_range(p) {
        out.push(("eq3", witness_eq3(m, kp)?));
    }
    for kp in eq4_range(p) {
        out.push(("eq4", witness_eq4(m, kp)?));
    }
    Ok(out)
}

/// Largest rank-`k'` uniform minor, by exhaustive search.
///
/// Ranges over every flat `F` of rank `rank(E) - k'` and, for each, every deletion set
/// `X ⊆ E - F`. Returns `None` if no rank-`k'` uniform minor exists. Ties go to the
/// first flat in canonical order, then the numerically smallest `X`.
pub fn oracle_max_uniform<M: Matroid + ?Sized>(
    m: &M,
    k_prime: usize,
) -> Result<Option<(usize, MinorWitness)>> {
    let ground = m.ground();
    let n = ground.len();
    if n > ORACLE_LIMIT {
        return Err(Error::too_large(
            "uniform-minor oracle",
            n as u128,
            ORACLE_LIMIT as u128,
        ));
    }
    let full = m.full_rank();
    if k_prime < 1 || k_prime > full {
        return Err(Error::RankOutOfRange {
            k_prime,
            range: format!("[1, {full}]"),
        });
    }
    let target = full - k_prime;
    let candidates: Vec<Subset> = match m.known_flats() {
        Some(f) => f,
        None => flats(m)?,
    }
    .into_iter()
    .filter(|&f| m.rank(f) == target)
    .collect();

    let best = candidates
        .par_iter()
        .enumerate()
        .filter_map(|(idx, &f)| {
            let rest = ground - f;
            largest_uniform_restriction(m, f, rest, target, k_prime)
                .map(|(size, x)| (size, idx, x, f))
        })
        .reduce_with(|a, b| {
            let key =
                |t: &(usize, usize, Subset, Subset)| (std::cmp::Reverse(t.0), t.1, t.2.bits());
            if key(&b) < key(&a) {
                b
            } else {
                a
            }
        });

    match best {
        None => Ok(None),
        Some((size, _, x, f)) => {
            let mut w = MinorWitness::new(n, f, x, k_prime);
            w.verified = verify_witness(m, &w)?;
            Ok(Some((size, w)))
        }
    }
}

/// In `M/f`, the largest `Y ⊆ rest` all of whose `k'`-subsets are bases, returned as
/// `(|Y|, rest - Y)`.
fn largest_uniform_restriction<M: Matroid + ?Sized>(
    m: &M,
    f: Subset,
    rest: Subset,
    f_rank: usize,
    k_prime: usize,
) -> Option<(usize, Subset)> {
    let w = rest.len();
    let mut good = vec![false; 1 << w];
    let mut best: Option<(usize, u64)> = None;
    for c in 0..1u64 << w {
        let size = c.count_ones() as usize;
        let ok = match size.cmp(&k_prime) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => m.rank(f | rest.deposit(c)) == f_rank + k_prime,
            std::cmp::Ordering::Greater => {
                let mut bits = c;
                let mut all = true;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    if !good[(c ^ low) as usize] {
                        all = false;
                        break;
                    }
                    bits ^= low;
                }
                all
            }
        };
        good[c as usize] = ok;
        if ok && size >= k_prime {
            let x = rest.deposit(!c & ((1u64 << w) - 1)).bits();
            let better = match best {
                None => true,
                Some((bs, bx)) => size > bs || (size == bs && x < bx),
            };
            if better {
                best = Some((size, x));
            }
        }
    }
    best.map(|(s, x)| (s, Subset::from_bits(x)))
}

/// Oracle maximum for every `2 <= k' <= rank(E)` that has a uniform minor.
pub fn oracle_max_uniform_all<M: Matroid + ?Sized>(
    m: &M,
) -> Result<BTreeMap<usize, (usize, MinorWitness)>> {
    let mut out = BTreeMap::new();
    for kp in 2..=m.full_rank() {
        if let Some(hit) = oracle_max_uniform(m, kp)? {
            out.insert(kp, hit);
        }
    }
    Ok(out)
}
