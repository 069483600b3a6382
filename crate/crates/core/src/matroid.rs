//! Matroids given by rank oracles, and the exhaustive machinery built on them:
//! closure, flats, minors, axiom checks and uniform-matroid detection.
//!
//! A matroid's ground set is a [`Subset`] of `{0, .., 63}`. Minor views keep the
//! original element labels, so their ground set need not be contiguous; use
//! [`tabulate`] to relabel onto `{0, .., m-1}` when comparing against another
//! matroid.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::subset::{binomial, Subset};

/// Ground-size limit for [`check_axioms`] (pairs are enumerated, `4^n` work).
pub const AXIOM_LIMIT: usize = 14;
/// Ground-size limit for [`flats`] and [`tabulate`].
pub const FLATS_LIMIT: usize = 24;
/// Maximum number of basis candidates [`is_uniform`] will test.
pub const UNIFORM_LIMIT: u128 = 200_000_000;

pub trait Matroid: Sync {
    /// The ground set.
    fn ground(&self) -> Subset;

    /// Rank of `set`, which must lie inside [`Matroid::ground`].
    fn rank(&self, set: Subset) -> usize;

    fn ground_size(&self) -> usize {
        self.ground().len()
    }

    fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }

    /// A precomputed list of all flats, for matroids that know theirs in closed form.
    fn known_flats(&self) -> Option<Vec<Subset>> {
        None
    }
}

impl<M: Matroid + ?Sized> Matroid for &M {
    fn ground(&self) -> Subset {
        (**self).ground()
    }
    fn rank(&self, set: Subset) -> usize {
        (**self).rank(set)
    }
    fn known_flats(&self) -> Option<Vec<Subset>> {
        (**self).known_flats()
    }
}

/// A matroid on `{0, .., n-1}` with every rank stored explicitly.
///
/// Construction does not check the axioms; run [`check_axioms`] for that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMatroid {
    n: usize,
    ranks: Vec<u8>,
}

impl TableMatroid {
    pub fn new(n: usize, ranks: Vec<u8>) -> Result<Self> {
        if n > FLATS_LIMIT {
            return Err(Error::too_large(
                "rank table",
                n as u128,
                FLATS_LIMIT as u128,
            ));
        }
        if ranks.len() != 1 << n {
            return Err(Error::Parse(format!(
                "rank table for n = {n} needs {} entries, got {}",
                1usize << n,
                ranks.len()
            )));
        }
        Ok(TableMatroid { n, ranks })
    }

    pub fn from_fn(n: usize, rank: impl Fn(Subset) -> usize + Sync) -> Result<Self> {
        if n > FLATS_LIMIT {
            return Err(Error::too_large(
                "rank table",
                n as u128,
                FLATS_LIMIT as u128,
            ));
        }
        let ranks = Subset::full(n).par_map_submasks(|s| rank(s) as u8);
        Ok(TableMatroid { n, ranks })
    }

    /// The uniform matroid `U_n^k`.
    pub fn uniform(n: usize, k: usize) -> Result<Self> {
        Self::from_fn(n, |s| s.len().min(k))
    }

    pub fn ranks(&self) -> &[u8] {
        &self.ranks
    }
}

impl Matroid for TableMatroid {
    fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    fn rank(&self, set: Subset) -> usize {
        self.ranks[set.bits() as usize] as usize
    }
}

/// Tabulates `m`, relabelling its ground set onto `{0, .., m-1}` in increasing order.
///
/// This is the memoizing wrapper for repeated enumeration over an expensive oracle,
/// and also the canonical form for comparing matroids up to the natural index
/// bijection.
pub fn tabulate<M: Matroid + ?Sized>(m: &M) -> Result<TableMatroid> {
    let ground = m.ground();
    if ground.len() > FLATS_LIMIT {
        return Err(Error::too_large(
            "rank table",
            ground.len() as u128,
            FLATS_LIMIT as u128,
        ));
    }
    let ranks = ground.par_map_submasks(|s| m.rank(s) as u8);
    Ok(TableMatroid {
        n: ground.len(),
        ranks,
    })
}

/// `M|Y/X`: contraction by `contract`, restriction to `keep`.
///
/// Elements keep their labels from the base matroid.
#[derive(Clone, Copy, Debug)]
pub struct MinorView<'a, M: ?Sized> {
    base: &'a M,
    contract: Subset,
    keep: Subset,
    contract_rank: usize,
}

impl<'a, M: Matroid + ?Sized> MinorView<'a, M> {
    /// Contracts `contract` and deletes `delete`.
    pub fn new(base: &'a M, contract: Subset, delete: Subset) -> Result<Self> {
        let ground = base.ground();
        for set in [contract, delete] {
            if !set.is_subset(ground) {
                return Err(Error::OutsideGround {
                    set: set.to_string(),
                    ground: ground.to_string(),
                });
            }
        }
        if !contract.is_disjoint(delete) {
            return Err(Error::Overlap {
                contract: contract.to_string(),
                delete: delete.to_string(),
            });
        }
        Ok(MinorView {
            base,
            contract,
            keep: ground - contract - delete,
            contract_rank: base.rank(contract),
        })
    }

    pub fn contracted(&self) -> Subset {
        self.contract
    }

    pub fn kept(&self) -> Subset {
        self.keep
    }
}

impl<M: Matroid + ?Sized> Matroid for MinorView<'_, M> {
    fn ground(&self) -> Subset {
        self.keep
    }

    fn rank(&self, set: Subset) -> usize {
        debug_assert!(set.is_subset(self.keep), "{set:?} outside minor ground");
        self.base.rank(set | self.contract) - self.contract_rank
    }
}

pub fn contract<M: Matroid + ?Sized>(m: &M, x: Subset) -> Result<MinorView<'_, M>> {
    MinorView::new(m, x, Subset::EMPTY)
}

pub fn delete<M: Matroid + ?Sized>(m: &M, y: Subset) -> Result<MinorView<'_, M>> {
    MinorView::new(m, Subset::EMPTY, y)
}

/// `M|Y`.
pub fn restrict<M: Matroid + ?Sized>(m: &M, y: Subset) -> Result<MinorView<'_, M>> {
    let ground = m.ground();
    if !y.is_subset(ground) {
        return Err(Error::OutsideGround {
            set: y.to_string(),
            ground: ground.to_string(),
        });
    }
    MinorView::new(m, Subset::EMPTY, ground - y)
}

/// `M/X \ Y`.
pub fn minor<M: Matroid + ?Sized>(
    m: &M,
    contract_x: Subset,
    delete_y: Subset,
) -> Result<MinorView<'_, M>> {
    MinorView::new(m, contract_x, delete_y)
}

pub fn closure<M: Matroid + ?Sized>(m: &M, x: Subset) -> Subset {
    debug_assert!(x.is_subset(m.ground()));
    let r = m.rank(x);
    (m.ground() - x)
        .iter()
        .filter(|&e| m.rank(x.with(e)) == r)
        .fold(x, Subset::with)
}

pub fn is_flat<M: Matroid + ?Sized>(m: &M, f: Subset) -> bool {
    if !f.is_subset(m.ground()) {
        return false;
    }
    let r = m.rank(f);
    (m.ground() - f).iter().all(|e| m.rank(f.with(e)) > r)
}

/// Sorts by cardinality, then numeric mask value.
pub fn sort_canonical(sets: &mut [Subset]) {
    sets.sort_unstable_by_key(|s| s.card_order_key());
}

/// Every flat of `m`, in canonical order.
pub fn flats<M: Matroid + ?Sized>(m: &M) -> Result<Vec<Subset>> {
    let ground = m.ground();
    if ground.len() > FLATS_LIMIT {
        return Err(Error::too_large(
            "flat enumeration",
            ground.len() as u128,
            FLATS_LIMIT as u128,
        ));
    }
    let mut out: Vec<Subset> = (0..1u64 << ground.len())
        .into_par_iter()
        .map(|c| ground.deposit(c))
        .filter(|&f| is_flat(m, f))
        .collect();
    sort_canonical(&mut out);
    Ok(out)
}

/// Outcome of [`check_axioms`]: the first violation of each rank axiom, if any.
///
/// "First" means smallest `X`, then smallest `Y`, in numeric mask order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    /// `0 <= rank(X) <= |X|` fails at `X`.
    pub r1: Option<Subset>,
    /// `X ⊆ Y` but `rank(X) > rank(Y)`.
    pub r2: Option<(Subset, Subset)>,
    /// `rank(X) + rank(Y) < rank(X ∪ Y) + rank(X ∩ Y)`.
    pub r3: Option<(Subset, Subset)>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.r1.is_none() && self.r2.is_none() && self.r3.is_none()
    }
}

fn min_opt<T: Ord>(a: Option<T>, b: Option<T>) -> Option<T> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

/// Exhaustively checks (R.1)-(R.3) over all pairs of subsets.
pub fn check_axioms<M: Matroid + ?Sized>(m: &M) -> Result<AxiomReport> {
    let ground = m.ground();
    let n = ground.len();
    if n > AXIOM_LIMIT {
        return Err(Error::too_large(
            "axiom check",
            n as u128,
            AXIOM_LIMIT as u128,
        ));
    }
    let table = tabulate(m)?;
    let r = table.ranks();
    let full = (1u64 << n) - 1;

    let (r1, r2, r3) = (0..=full)
        .into_par_iter()
        .map(|x| {
            let rx = r[x as usize];
            let r1 = (rx as u32 > x.count_ones()).then_some(x);
            let mut r2 = None;
            let mut r3 = None;
            for y in 0..=full {
                let ry = r[y as usize];
                if r2.is_none() && x & !y == 0 && rx > ry {
                    r2 = Some((x, y));
                }
                if r3.is_none()
                    && (rx as u32 + ry as u32)
                        < r[(x | y) as usize] as u32 + r[(x & y) as usize] as u32
                {
                    r3 = Some((x, y));
                }
                if r2.is_some() && r3.is_some() {
                    break;
                }
            }
            (r1, r2, r3)
        })
        .reduce(
            || (None, None, None),
            |a, b| (min_opt(a.0, b.0), min_opt(a.1, b.1), min_opt(a.2, b.2)),
        );

    let lift = |c: u64| ground.deposit(c);
    Ok(AxiomReport {
        r1: r1.map(lift),
        r2: r2.map(|(x, y)| (lift(x), lift(y))),
        r3: r3.map(|(x, y)| (lift(x), lift(y))),
    })
}

/// Returns `(|E|, rank(E))` if `m` is the uniform matroid of that shape.
///
/// Uses the basis criterion: `m` is uniform iff every `rank(E)`-subset has full rank.
pub fn is_uniform<M: Matroid + ?Sized>(m: &M) -> Result<Option<(usize, usize)>> {
    let ground = m.ground();
    let n = ground.len();
    let r = m.full_rank();
    let candidates = binomial(n, r);
    if candidates > UNIFORM_LIMIT {
        return Err(Error::too_large(
            "uniformity check",
            candidates,
            UNIFORM_LIMIT,
        ));
    }
    if r == 0 {
        return Ok(Some((n, 0)));
    }
    let elems = ground.to_vec();
    let ok = elems.par_iter().all(|&first| {
        let above = ground - Subset::full(first + 1);
        above.k_subsets(r - 1).all(|s| m.rank(s.with(first)) == r)
    });
    Ok(ok.then_some((n, r)))
}

/// Checks both minor-flat identities for a flat `f` and a deletion set `x`:
///
/// * `F(M/f) = { A ⊆ E-f : A ∪ f ∈ F(M) }`
/// * `F(M\x) = { F - x : F ∈ F(M) }`
///
/// each side computed independently (closure scan on the minor vs. filtering the
/// flats of `m`).
pub fn flats_of_minor_check<M: Matroid + ?Sized>(m: &M, f: Subset, x: Subset) -> Result<bool> {
    if !is_flat(m, f) {
        return Err(Error::NotAFlat(format!("{{{f}}}")));
    }
    let all = flats(m)?;

    let direct_contract = flats(&contract(m, f)?)?;
    let mut via_m: Vec<Subset> = all
        .iter()
        .filter(|g| f.is_subset(**g))
        .map(|&g| g - f)
        .collect();
    sort_canonical(&mut via_m);

    let direct_delete = flats(&delete(m, x)?)?;
    let mut via_m_del: Vec<Subset> = all.iter().map(|&g| g - x).collect();
    sort_canonical(&mut via_m_del);
    via_m_del.dedup();

    Ok(direct_contract == via_m && direct_delete == via_m_del)
}
