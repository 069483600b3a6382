//! The matroid shared by every `(n, k, r)` maximally recoverable LRC.
//!
//! With repair sets `R_1, .., R_g` partitioning `[n]`, the rank of `A` is
//! `min{k, |A| - #{i : R_i ⊆ A}}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParamError, Result};
use crate::matroid::{sort_canonical, Matroid, FLATS_LIMIT};
use crate::subset::{Subset, MAX_GROUND};

/// Validated `(n, k, r)` without a partition.
///
/// This is all the closed-form sizes and bounds need, so unlike [`MrParams`] it is
/// not limited to 64 elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LrcShape {
    n: usize,
    k: usize,
    r: usize,
}

impl LrcShape {
    pub fn new(n: usize, k: usize, r: usize) -> Result<Self, ParamError> {
        if r == 0 {
            return Err(ParamError::ZeroLocality);
        }
        if !n.is_multiple_of(r + 1) {
            return Err(ParamError::NotDivisible {
                n,
                r_plus_one: r + 1,
            });
        }
        if k <= r {
            return Err(ParamError::LocalityNotBelowDimension { k, r });
        }
        let max = n / (r + 1) * r;
        if k > max {
            return Err(ParamError::DimensionTooLarge { k, max });
        }
        Ok(LrcShape { n, k, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn g(&self) -> usize {
        self.n / (self.r + 1)
    }

    pub fn h(&self) -> usize {
        self.g() * self.r - self.k
    }

    /// Every valid triple with `n <= max_n`, ordered by `n`, then `r`, then `k`.
    pub fn all_up_to(max_n: usize) -> Vec<LrcShape> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            for r in 1..n {
                for k in r + 1..=n {
                    if let Ok(s) = LrcShape::new(n, k, r) {
                        out.push(s);
                    }
                }
            }
        }
        out
    }
}

impl From<&MrParams> for LrcShape {
    fn from(p: &MrParams) -> Self {
        p.shape()
    }
}

impl From<&LrcShape> for LrcShape {
    fn from(s: &LrcShape) -> Self {
        *s
    }
}

impl fmt::Display for LrcShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.n, self.k, self.r)
    }
}

/// `n,k,r`; a partition suffix is accepted and validated, then dropped.
impl FromStr for LrcShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains(':') {
            return Ok(s.parse::<MrParams>()?.shape());
        }
        let (n, k, r) = parse_triple(s)?;
        Ok(LrcShape::new(n, k, r)?)
    }
}

/// Validated MR-LRC parameters together with the repair-set partition.
///
/// Repair sets are stored sorted by their smallest element, so `R_1` is the set
/// containing element 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MrParams {
    n: usize,
    k: usize,
    r: usize,
    repair_sets: Vec<Subset>,
}

impl MrParams {
    /// Parameters with the contiguous partition `{0..r}, {r+1..2r+1}, ..`.
    pub fn new(n: usize, k: usize, r: usize) -> Result<Self, ParamError> {
        Self::check_numbers(n, k, r)?;
        let repair_sets = (0..n / (r + 1))
            .map(|i| Subset::from_indices(i * (r + 1)..(i + 1) * (r + 1)))
            .collect();
        Ok(MrParams {
            n,
            k,
            r,
            repair_sets,
        })
    }

    pub fn with_partition(
        n: usize,
        k: usize,
        r: usize,
        partition: &[Vec<usize>],
    ) -> Result<Self, ParamError> {
        Self::check_numbers(n, k, r)?;
        let g = n / (r + 1);
        if partition.len() != g {
            return Err(ParamError::Partition(format!(
                "expected {g} repair sets, got {}",
                partition.len()
            )));
        }
        let mut seen = Subset::EMPTY;
        let mut repair_sets = Vec::with_capacity(g);
        for block in partition {
            if block.len() != r + 1 {
                return Err(ParamError::Partition(format!(
                    "repair set {block:?} has {} elements, expected {}",
                    block.len(),
                    r + 1
                )));
            }
            let mut set = Subset::EMPTY;
            for &e in block {
                if e >= n {
                    return Err(ParamError::Partition(format!(
                        "index {e} is not below n = {n}"
                    )));
                }
                if seen.contains(e) {
                    return Err(ParamError::Partition(format!("index {e} appears twice")));
                }
                seen.insert(e);
                set.insert(e);
            }
            repair_sets.push(set);
        }
        repair_sets.sort_unstable_by_key(|s| s.first());
        Ok(MrParams {
            n,
            k,
            r,
            repair_sets,
        })
    }

    fn check_numbers(n: usize, k: usize, r: usize) -> Result<(), ParamError> {
        LrcShape::new(n, k, r)?;
        if n > MAX_GROUND {
            return Err(ParamError::LengthTooLarge { n, max: MAX_GROUND });
        }
        Ok(())
    }

    pub fn shape(&self) -> LrcShape {
        LrcShape {
            n: self.n,
            k: self.k,
            r: self.r,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of repair sets.
    pub fn g(&self) -> usize {
        self.n / (self.r + 1)
    }

    /// Number of heavy parities, `g*r - k`.
    pub fn h(&self) -> usize {
        self.g() * self.r - self.k
    }

    pub fn repair_sets(&self) -> &[Subset] {
        &self.repair_sets
    }

    pub fn is_default_partition(&self) -> bool {
        self.repair_sets
            .iter()
            .enumerate()
            .all(|(i, s)| *s == Subset::from_indices(i * (self.r + 1)..(i + 1) * (self.r + 1)))
    }

    /// Number of repair sets entirely inside `a`.
    pub fn full_sets_in(&self, a: Subset) -> usize {
        self.repair_sets.iter().filter(|s| s.is_subset(a)).count()
    }

    /// Every valid parameter triple with `n <= max_n`, contiguous partitions.
    pub fn all_up_to(max_n: usize) -> Vec<MrParams> {
        let mut out = Vec::new();
        for n in 1..=max_n.min(MAX_GROUND) {
            for r in 1..n {
                for k in r + 1..=n {
                    if let Ok(p) = MrParams::new(n, k, r) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

fn parse_triple(s: &str) -> Result<(usize, usize, usize)> {
    let nums: Vec<usize> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}")))
        })
        .collect::<Result<_>>()?;
    let [n, k, r] = nums[..] else {
        return Err(Error::Parse(format!("expected n,k,r in {s:?}")));
    };
    Ok((n, k, r))
}

/// `n,k,r` optionally followed by `:` and semicolon-separated repair sets.
impl FromStr for MrParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, partition) = match s.split_once(':') {
            Some((h, p)) => (h, Some(p)),
            None => (s, None),
        };
        let (n, k, r) = parse_triple(head)?;
        let params = match partition {
            None => MrParams::new(n, k, r)?,
            Some(p) => {
                let blocks = p
                    .split(';')
                    .map(|block| {
                        block
                            .split(',')
                            .map(|t| {
                                t.trim().parse().map_err(|_| {
                                    Error::Parse(format!("bad index {t:?} in partition"))
                                })
                            })
                            .collect::<Result<Vec<usize>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                MrParams::with_partition(n, k, r, &blocks)?
            }
        };
        Ok(params)
    }
}

impl fmt::Display for MrParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.n, self.k, self.r)?;
        if !self.is_default_partition() {
            f.write_str(":")?;
            for (i, s) in self.repair_sets.iter().enumerate() {
                if i > 0 {
                    f.write_str(";")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// The `(n, k, r)`-MR matroid with its closed-form rank function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MrMatroid {
    params: MrParams,
}

impl MrMatroid {
    pub fn new(params: MrParams) -> Self {
        MrMatroid { params }
    }

    pub fn params(&self) -> &MrParams {
        &self.params
    }

    /// `min{k, |A| - #{i : R_i ⊆ A}}`.
    pub fn rank_closed_form(&self, a: Subset) -> usize {
        (a.len() - self.params.full_sets_in(a)).min(self.params.k)
    }

    /// `min{k, Σ_i min(|A ∩ R_i|, r)}`: the truncated direct sum of `U_{r+1}^r` blocks.
    pub fn rank_direct_sum(&self, a: Subset) -> usize {
        let r = self.params.r;
        let s: usize = self
            .params
            .repair_sets
            .iter()
            .map(|&ri| (a & ri).len().min(r))
            .sum();
        s.min(self.params.k)
    }

    /// Whether `f` is a flat other than `E`: each repair set is inside `f` or meets it
    /// in at most `r - 1` elements, and `|f| - #{i : R_i ⊆ f} < k`.
    pub fn is_proper_flat(&self, f: Subset) -> bool {
        let p = &self.params;
        if !f.is_subset(Subset::full(p.n)) || f == Subset::full(p.n) {
            return false;
        }
        let mut full = 0;
        for &ri in &p.repair_sets {
            let meet = (f & ri).len();
            if meet == ri.len() {
                full += 1;
            } else if meet + 1 > p.r {
                return false;
            }
        }
        f.len() - full < p.k
    }

    /// All flats from the structural description, in canonical order.
    pub fn flats(&self) -> Result<Vec<Subset>> {
        let p = &self.params;
        if p.n > FLATS_LIMIT {
            return Err(Error::too_large(
                "MR flat enumeration",
                p.n as u128,
                FLATS_LIMIT as u128,
            ));
        }
        // (partial flat, rank so far)
        let mut partial: Vec<(Subset, usize)> = vec![(Subset::EMPTY, 0)];
        for &ri in &p.repair_sets {
            let options: Vec<(Subset, usize)> = std::iter::once((ri, p.r))
                .chain(
                    ri.submasks()
                        .filter(|b| b.len() < p.r)
                        .map(|b| (b, b.len())),
                )
                .collect();
            partial = partial
                .into_iter()
                .flat_map(|(f, rank)| {
                    options
                        .iter()
                        .filter(move |(_, add)| rank + add < p.k)
                        .map(move |&(b, add)| (f | b, rank + add))
                })
                .collect();
        }
        let mut out: Vec<Subset> = partial.into_iter().map(|(f, _)| f).collect();
        out.push(Subset::full(p.n));
        sort_canonical(&mut out);
        Ok(out)
    }

    /// `|f| - #{i : R_i ⊆ f}` for a proper flat `f`.
    pub fn flat_rank(&self, f: Subset) -> Result<usize> {
        if !self.is_proper_flat(f) {
            return Err(Error::NotAFlat(format!("{{{f}}} (as a proper flat)")));
        }
        Ok(f.len() - self.params.full_sets_in(f))
    }
}

impl From<MrParams> for MrMatroid {
    fn from(params: MrParams) -> Self {
        MrMatroid::new(params)
    }
}

impl Matroid for MrMatroid {
    fn ground(&self) -> Subset {
        Subset::full(self.params.n)
    }

    fn rank(&self, set: Subset) -> usize {
        self.rank_closed_form(set)
    }

    fn known_flats(&self) -> Option<Vec<Subset>> {
        self.flats().ok()
    }
}

/// Builds the MR matroid for `n,k,r` with the default partition.
pub fn make_mr(n: usize, k: usize, r: usize) -> Result<MrMatroid, ParamError> {
    MrParams::new(n, k, r).map(MrMatroid::new)
}
