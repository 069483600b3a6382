//! Bitmask subsets of a ground set `{0, .., n-1}` with `n <= 64`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::Error;

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// A subset of `{0, .., 63}` stored as a bit vector.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground size {n} exceeds {MAX_GROUND}");
        if n == MAX_GROUND {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        assert!(e < MAX_GROUND);
        Subset(1u64 << e)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(items: I) -> Self {
        items
            .into_iter()
            .fold(Subset::EMPTY, |acc, e| acc | Subset::singleton(e))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        e < MAX_GROUND && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= Subset::singleton(e).0;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !Subset::singleton(e).0;
    }

    pub fn with(self, e: usize) -> Self {
        self | Subset::singleton(e)
    }

    pub fn without(self, e: usize) -> Self {
        self - Subset::singleton(e)
    }

    pub const fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The `count` smallest elements of `self` (all of them if fewer).
    pub fn take_smallest(self, count: usize) -> Subset {
        Subset::from_indices(self.iter().take(count))
    }

    /// Sort key for the canonical enumeration order: cardinality, then numeric value.
    pub fn card_order_key(self) -> (usize, u64) {
        (self.len(), self.0)
    }

    /// All subsets of `self`, in increasing numeric order.
    pub fn submasks(self) -> Submasks {
        Submasks {
            mask: self.0,
            next: Some(0),
        }
    }

    /// All `k`-element subsets of `self`, in increasing order of their compact encoding.
    pub fn k_subsets(self, k: usize) -> KSubsets {
        KSubsets::new(self, k)
    }

    /// Deposits the low bits of `compact` onto the positions of `self` (a software `pdep`).
    pub fn deposit(self, compact: u64) -> Subset {
        let mut out = 0u64;
        let mut mask = self.0;
        let mut c = compact;
        while mask != 0 && c != 0 {
            let low = mask & mask.wrapping_neg();
            if c & 1 == 1 {
                out |= low;
            }
            c >>= 1;
            mask &= mask - 1;
        }
        Subset(out)
    }

    /// Inverse of [`Subset::deposit`]: packs the members of `set` lying in `self`
    /// into the low bits.
    pub fn extract(self, set: Subset) -> u64 {
        let mut out = 0u64;
        for (i, e) in self.iter().enumerate() {
            if set.contains(e) {
                out |= 1 << i;
            }
        }
        out
    }

    /// Parallel map over every subset of `self`.
    ///
    /// Results come back in increasing order of the compact encoding, so the output
    /// is independent of scheduling.
    pub fn par_map_submasks<T, F>(self, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(Subset) -> T + Sync + Send,
    {
        let m = self.len();
        assert!(m < 63, "too many subsets to enumerate");
        (0..1u64 << m)
            .into_par_iter()
            .map(|c| f(self.deposit(c)))
            .collect()
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        Subset(self.0 & !rhs.0)
    }
}

impl Not for Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        Subset(!self.0)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Comma-separated element list, e.g. `0,4,8`. The empty set prints as nothing.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for Subset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let s = s
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(s);
        let mut out = Subset::EMPTY;
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let e: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad element index {tok:?}")))?;
            if e >= MAX_GROUND {
                return Err(Error::Parse(format!("element {e} out of range")));
            }
            out.insert(e);
        }
        Ok(out)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Submasks {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(Subset(cur))
    }
}

/// Gosper's hack over the compact index space of a mask.
pub struct KSubsets {
    mask: Subset,
    width: usize,
    next: Option<u64>,
}

impl KSubsets {
    fn new(mask: Subset, k: usize) -> Self {
        let width = mask.len();
        let next = match k {
            _ if k > width => None,
            0 => Some(0),
            _ => Some(if k == 64 { u64::MAX } else { (1u64 << k) - 1 }),
        };
        KSubsets { mask, width, next }
    }
}

impl Iterator for KSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur.wrapping_add(low);
            if ripple == 0 {
                None
            } else {
                let nxt = ripple | (((cur ^ ripple) >> 2) / low);
                (self.width == 64 || nxt >> self.width == 0).then_some(nxt)
            }
        };
        Some(self.mask.deposit(cur))
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}
