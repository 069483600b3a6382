//! Closed-form uniform-minor sizes and the field-size lower bounds they imply.
//!
//! Everything here is exact integer or rational arithmetic. Floors of negative
//! quotients round toward negative infinity.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::mr::LrcShape;

/// `⌊a / b⌋` for `b > 0`, rounding toward negative infinity.
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// `⌈a / b⌉` for `b > 0`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    -floor_div(-a, b)
}

fn ints(p: LrcShape) -> (i64, i64, i64, i64, i64) {
    (
        p.n() as i64,
        p.k() as i64,
        p.r() as i64,
        p.g() as i64,
        p.h() as i64,
    )
}

/// Size of the rank-`k` minor obtained by deleting one element per repair set: `n - g`.
pub fn eq1_size(p: impl Into<LrcShape>) -> usize {
    let p: LrcShape = p.into();
    p.n() - p.g()
}

/// Size of the rank-`r` uniform minor: `n - k + r - ⌈k/r⌉ + 1`.
pub fn eq2_size(p: impl Into<LrcShape>) -> usize {
    let p: LrcShape = p.into();
    let (n, k, r, _, _) = ints(p);
    (n - k + r - ceil_div(k, r) + 1) as usize
}

/// Admissible `k'` for the small-rank family: `2 <= k' <= r - 1` (empty when `r < 3`).
pub fn eq3_range(p: impl Into<LrcShape>) -> RangeInclusive<usize> {
    let p: LrcShape = p.into();
    2..=p.r().saturating_sub(1)
}

/// Admissible `k'` for the large-rank family: `r < k' < k`.
pub fn eq4_range(p: impl Into<LrcShape>) -> RangeInclusive<usize> {
    let p: LrcShape = p.into();
    (p.r() + 1)..=(p.k() - 1)
}

fn check_range(k_prime: usize, range: RangeInclusive<usize>) -> Result<()> {
    if range.contains(&k_prime) {
        Ok(())
    } else {
        Err(Error::RankOutOfRange {
            k_prime,
            range: format!("[{}, {}]", range.start(), range.end()),
        })
    }
}

/// `j = ⌊-h/k'⌋ + g`, the number of repair sets the contracted flat must swallow.
pub fn eq3_j(p: impl Into<LrcShape>, k_prime: usize) -> i64 {
    let p: LrcShape = p.into();
    let (_, _, _, g, h) = ints(p);
    floor_div(-h, k_prime as i64) + g
}

/// `n - k + k' - max{j, 0}` for `2 <= k' <= r - 1`.
pub fn eq3_size(p: impl Into<LrcShape>, k_prime: usize) -> Result<usize> {
    let p: LrcShape = p.into();
    check_range(k_prime, eq3_range(p))?;
    let (n, k, _, _, _) = ints(p);
    let j = eq3_j(p, k_prime).max(0);
    Ok((n - k + k_prime as i64 - j) as usize)
}

/// `n - g - k + k'` for `r < k' < k`.
pub fn eq4_size(p: impl Into<LrcShape>, k_prime: usize) -> Result<usize> {
    let p: LrcShape = p.into();
    check_range(k_prime, eq4_range(p))?;
    Ok(p.n() - p.g() - p.k() + k_prime)
}

/// Every formula-backed `(rank, size)` pair, in increasing rank order.
///
/// When two families give the same rank, the larger size wins.
pub fn formula_sizes(p: impl Into<LrcShape>) -> BTreeMap<usize, usize> {
    let p: LrcShape = p.into();
    let mut out = BTreeMap::new();
    let mut put = |rank: usize, size: usize| {
        let e = out.entry(rank).or_insert(size);
        *e = (*e).max(size);
    };
    put(p.k(), eq1_size(p));
    put(p.r(), eq2_size(p));
    for kp in eq3_range(p) {
        put(kp, eq3_size(p, kp).expect("in range"));
    }
    for kp in eq4_range(p) {
        put(kp, eq4_size(p, kp).expect("in range"));
    }
    out
}

/// The largest uniform minor size from the closed-form theorem.
///
/// `r >= 3`: `n - min{g, k - r + 1}`; `r <= 2`: `n - min{g, k - r + ⌈k/r⌉ - 1}`.
pub fn largest_uniform_size(p: impl Into<LrcShape>) -> usize {
    let p: LrcShape = p.into();
    let (n, k, r, g, _) = ints(p);
    let sub = if r >= 3 {
        g.min(k - r + 1)
    } else {
        g.min(k - r + ceil_div(k, r) - 1)
    };
    (n - sub) as usize
}

/// `max(eq1, eq2, max_{k'} eq3)` recomputed from the individual formulas.
pub fn largest_from_formulas(p: impl Into<LrcShape>) -> usize {
    let p: LrcShape = p.into();
    eq3_range(p)
        .map(|kp| eq3_size(p, kp).expect("in range"))
        .chain([eq1_size(p), eq2_size(p)])
        .max()
        .expect("non-empty")
}

/// A field-size lower bound, clamped at 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldBound {
    pub value: u64,
    /// Unclamped formula value.
    pub raw: i64,
    /// The formula gave less than 2, so the bound says nothing.
    pub vacuous: bool,
}

impl FieldBound {
    fn clamp(raw: i64) -> Self {
        FieldBound {
            value: raw.max(2) as u64,
            raw,
            vacuous: raw < 2,
        }
    }
}

/// Field-size bound without the MDS conjecture.
///
/// `r >= 3`: `n - k + 1 - max{j, 0}` with `j = ⌊-h/2⌋ + g`;
/// `r = 2`: `n - k - ⌈k/r⌉ + 2`;
/// `r = 1`: `n - g - k + 1` (only the rank-`k` minor has rank at least 2).
pub fn q_lower_unconditional(p: impl Into<LrcShape>) -> FieldBound {
    let p: LrcShape = p.into();
    let (n, k, r, g, _) = ints(p);
    let raw = match r {
        1 => n - g - k + 1,
        2 => n - k - ceil_div(k, r) + 2,
        _ => n - k + 1 - eq3_j(p, 2).max(0),
    };
    FieldBound::clamp(raw)
}

/// Field-size bound assuming the MDS conjecture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjecturalBound {
    /// `n' - 1`.
    pub optimistic: u64,
    /// `n' - 2`, which holds even in the conjecture's even-`q` exceptions.
    pub safe: u64,
    /// Largest uniform minor size of rank at least 2.
    pub minor_size: usize,
    /// Rank of the achieving minor that was chosen.
    pub achiever_rank: usize,
    /// The chosen achiever falls into an exceptional case (`q = 2^m` with
    /// `k' = 3` or `k' = q - 1`), so only `safe` is guaranteed.
    pub exception_possible: bool,
}

fn exceptional(rank: usize, size: usize) -> bool {
    // the exceptions allow length q + 2, i.e. q = size - 2
    let q = size as i64 - 2;
    q >= 2 && (q as u64).is_power_of_two() && (rank == 3 || rank as i64 == q - 1)
}

pub fn q_lower_conjectural(p: impl Into<LrcShape>) -> ConjecturalBound {
    let p: LrcShape = p.into();
    let sizes: Vec<(usize, usize)> = formula_sizes(p)
        .into_iter()
        .filter(|&(rank, _)| rank >= 2)
        .collect();
    let best = sizes.iter().map(|&(_, s)| s).max().expect("rank k >= 2");
    let achievers: Vec<usize> = sizes
        .iter()
        .filter(|&&(_, s)| s == best)
        .map(|&(rank, _)| rank)
        .collect();
    let chosen = achievers
        .iter()
        .copied()
        .find(|&rank| !exceptional(rank, best))
        .unwrap_or(achievers[0]);
    ConjecturalBound {
        optimistic: (best - 1) as u64,
        safe: best.saturating_sub(2) as u64,
        minor_size: best,
        achiever_rank: chosen,
        exception_possible: exceptional(chosen, best),
    }
}

/// The puncturing bound `q >= k + 1`.
pub fn q_lower_gopalan(p: impl Into<LrcShape>) -> u64 {
    let p: LrcShape = p.into();
    p.k() as u64 + 1
}

/// Exponent `min{1, h - 2⌈h/g⌉} / ⌈h/g⌉` of the asymptotic bound at single local
/// erasures. `None` when `h = 0`. Informational only.
pub fn gopi_alpha(p: impl Into<LrcShape>) -> Option<Ratio<i64>> {
    let p: LrcShape = p.into();
    let (_, _, _, g, h) = ints(p);
    if h == 0 {
        return None;
    }
    let c = ceil_div(h, g);
    Some(Ratio::new(1.min(h - 2 * c), c))
}

/// Rate below which the unconditional bound is stated to beat `k + 1`.
pub fn rate_threshold(r: usize) -> Option<Ratio<i64>> {
    match r {
        0 | 1 => None,
        2 => Some(Ratio::new(2, 5)),
        3 => Some(Ratio::new(9, 20)),
        4 => Some(Ratio::new(12, 25)),
        _ => Some(Ratio::new(1, 2)),
    }
}

/// Comparison of the unconditional bound against `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    pub rate: Ratio<i64>,
    pub threshold: Option<Ratio<i64>>,
    pub q_unconditional: u64,
    pub q_gopalan: u64,
    /// `q_unconditional > k + 1`.
    pub improves: bool,
    /// `k/n <= threshold`.
    pub predicted: Option<bool>,
    /// `|k - threshold*n| < 1`: ceilings make the threshold approximate here.
    pub near_boundary: bool,
}

impl ThresholdReport {
    pub fn consistent(&self) -> Option<bool> {
        self.predicted.map(|pr| pr == self.improves)
    }
}

pub fn threshold_report(p: impl Into<LrcShape>) -> ThresholdReport {
    let p: LrcShape = p.into();
    let (n, k, r, _, _) = ints(p);
    let q_unconditional = q_lower_unconditional(p).value;
    let q_gopalan = q_lower_gopalan(p);
    let threshold = rate_threshold(r as usize);
    let rate = Ratio::new(k, n);
    let near_boundary = threshold.is_some_and(|t| {
        let gap = (k * t.denom() - t.numer() * n).abs();
        gap < *t.denom()
    });
    ThresholdReport {
        rate,
        threshold,
        q_unconditional,
        q_gopalan,
        improves: q_unconditional > q_gopalan,
        predicted: threshold.map(|t| rate <= t),
        near_boundary,
    }
}

/// All bounds and minor sizes for one parameter triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub params: LrcShape,
    pub eq1_size: usize,
    pub eq2_size: usize,
    pub eq3_sizes: BTreeMap<usize, usize>,
    pub eq4_sizes: BTreeMap<usize, usize>,
    pub largest_uniform: usize,
    pub q_unconditional: FieldBound,
    pub q_conjectural: ConjecturalBound,
    pub q_gopalan: u64,
    pub gopi_alpha: Option<Ratio<i64>>,
    pub threshold: ThresholdReport,
}

impl BoundsReport {
    pub fn new(p: impl Into<LrcShape>) -> Self {
        let p: LrcShape = p.into();
        BoundsReport {
            params: p,
            eq1_size: eq1_size(p),
            eq2_size: eq2_size(p),
            eq3_sizes: eq3_range(p)
                .map(|kp| (kp, eq3_size(p, kp).expect("in range")))
                .collect(),
            eq4_sizes: eq4_range(p)
                .map(|kp| (kp, eq4_size(p, kp).expect("in range")))
                .collect(),
            largest_uniform: largest_uniform_size(p),
            q_unconditional: q_lower_unconditional(p),
            q_conjectural: q_lower_conjectural(p),
            q_gopalan: q_lower_gopalan(p),
            gopi_alpha: gopi_alpha(p),
            threshold: threshold_report(p),
        }
    }

    /// Best small-rank size and its `k'` (smallest on ties).
    pub fn eq3_best(&self) -> Option<(usize, usize)> {
        self.eq3_sizes
            .iter()
            .fold(None, |best: Option<(usize, usize)>, (&kp, &s)| match best {
                Some((_, bs)) if bs >= s => best,
                _ => Some((kp, s)),
            })
    }

    /// Flat `key=value` block, one pair per line.
    pub fn to_key_value(&self) -> String {
        let p = &self.params;
        let mut s = String::new();
        let join = |m: &BTreeMap<usize, usize>| {
            m.iter()
                .map(|(kp, n)| format!("{kp}:{n}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        let _ = writeln!(s, "params={p}");
        let _ = writeln!(
            s,
            "n={}\nk={}\nr={}\ng={}\nh={}",
            p.n(),
            p.k(),
            p.r(),
            p.g(),
            p.h()
        );
        let _ = writeln!(s, "eq1={}", self.eq1_size);
        let _ = writeln!(s, "eq2={}", self.eq2_size);
        let _ = writeln!(s, "eq3={}", join(&self.eq3_sizes));
        let _ = writeln!(s, "eq4={}", join(&self.eq4_sizes));
        let _ = writeln!(s, "largest_uniform={}", self.largest_uniform);
        let _ = writeln!(s, "q_unconditional={}", self.q_unconditional.value);
        let _ = writeln!(s, "q_unconditional_raw={}", self.q_unconditional.raw);
        let _ = writeln!(
            s,
            "q_unconditional_vacuous={}",
            self.q_unconditional.vacuous
        );
        let c = &self.q_conjectural;
        let _ = writeln!(s, "q_conjectural={}", c.optimistic);
        let _ = writeln!(s, "q_conjectural_safe={}", c.safe);
        let _ = writeln!(s, "q_conjectural_rank={}", c.achiever_rank);
        let _ = writeln!(s, "q_conjectural_exception={}", c.exception_possible);
        let _ = writeln!(s, "q_gopalan={}", self.q_gopalan);
        match self.gopi_alpha {
            Some(a) => {
                let _ = writeln!(s, "gopi_alpha={a}");
            }
            None => s.push_str("gopi_alpha=undefined\n"),
        }
        let t = &self.threshold;
        let _ = writeln!(s, "rate={}", t.rate);
        match t.threshold {
            Some(th) => {
                let _ = writeln!(s, "rate_threshold={th}");
            }
            None => s.push_str("rate_threshold=none\n"),
        }
        let _ = writeln!(s, "improves_on_gopalan={}", t.improves);
        let _ = writeln!(
            s,
            "threshold_consistent={}",
            t.consistent().map_or("n/a".to_string(), |c| c.to_string())
        );
        let _ = writeln!(s, "threshold_near_boundary={}", t.near_boundary);
        s
    }
}
