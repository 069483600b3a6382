//! Linear codes over GF(p^m): generator matrices, their matroids, MDS/MR
//! certification, puncturing and shortening, and a seeded random search for MR codes.
//!
//! Matrix files are plain text:
//!
//! ```text
//! field 2^4 modulus=19
//! 4 8
//! 1 0 0 0 1 3 7 2
//! ...
//! ```
//!
//! The first line names the field (anything [`FieldSpec`] parses), the second gives
//! `k n`, and `k` rows of `n` canonical integers follow. Blank lines and lines
//! starting with `#` are ignored.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, FieldError, Result};
use crate::field::{FieldSpec, Gf};
use crate::matroid::{is_uniform, Matroid};
use crate::mr::MrParams;
use crate::subset::{binomial, Subset, MAX_GROUND};

/// Largest length for the exhaustive certifiers.
pub const CERTIFY_LIMIT: usize = 24;

/// A `k x n` generator matrix, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct GenMatrix {
    field: Gf,
    k: usize,
    n: usize,
    entries: Vec<u32>,
}

impl GenMatrix {
    pub fn new(field: Gf, k: usize, n: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != k * n {
            return Err(FieldError::Shape(format!(
                "{} entries for a {k}x{n} matrix",
                entries.len()
            ))
            .into());
        }
        if n > MAX_GROUND {
            return Err(FieldError::Shape(format!("{n} columns exceed {MAX_GROUND}")).into());
        }
        if let Some(&value) = entries.iter().find(|&&v| !field.contains(v)) {
            return Err(FieldError::ElementOutOfRange {
                value,
                order: field.order(),
            }
            .into());
        }
        Ok(GenMatrix {
            field,
            k,
            n,
            entries,
        })
    }

    pub fn from_rows(field: Gf, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(FieldError::Shape(format!(
                "row of length {} in a {n}-column matrix",
                bad.len()
            ))
            .into());
        }
        Self::new(field, rows.len(), n, rows.concat())
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.k)
            .map(<[u32]>::to_vec)
            .collect()
    }

    /// Dimension of the span of the columns in `x`.
    pub fn column_rank(&self, x: Subset) -> usize {
        let cols: Vec<Vec<u32>> = x
            .iter()
            .map(|j| (0..self.k).map(|i| self.entry(i, j)).collect())
            .collect();
        self.field.rank_of(&cols)
    }

    /// Row rank of the whole matrix.
    pub fn rank(&self) -> usize {
        self.column_rank(Subset::full(self.n))
    }

    fn check_columns(&self, x: Subset) -> Result<()> {
        if x.is_subset(Subset::full(self.n)) {
            Ok(())
        } else {
            Err(Error::OutsideGround {
                set: format!("{{{x}}}"),
                ground: format!("0..{}", self.n),
            })
        }
    }

    /// Keeps the columns in `keep` (in increasing order) and drops dependent rows.
    fn select_columns(&self, keep: Subset) -> GenMatrix {
        let width = keep.len();
        let mut rows: Vec<Vec<u32>> = self
            .rows()
            .into_iter()
            .map(|row| keep.iter().map(|j| row[j]).collect())
            .collect();
        let order: Vec<usize> = (0..width).collect();
        let pivots = self.field.rref_by(&mut rows, &order);
        rows.truncate(pivots.len());
        GenMatrix::from_rows(self.field.clone(), width, &rows).expect("shape is preserved")
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field.spec())?;
        writeln!(f, "{} {}", self.k, self.n)?;
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for GenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenMatrix[{}x{} over {:?}]", self.k, self.n, self.field)
    }
}

impl FromStr for GenMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .and_then(|l| l.strip_prefix("field"))
            .ok_or_else(|| Error::Parse("matrix file must start with a `field` line".into()))?;
        let spec: FieldSpec = header.trim().parse()?;
        let dims: Vec<usize> = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `k n` line".into()))?
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad dimension {t:?}")))
            })
            .collect::<Result<_>>()?;
        let [k, n] = dims[..] else {
            return Err(Error::Parse(
                "dimension line must hold exactly `k n`".into(),
            ));
        };
        let mut entries = Vec::with_capacity(k * n);
        for line in lines {
            for t in line.split_whitespace() {
                entries.push(
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad field element {t:?}")))?,
                );
            }
        }
        GenMatrix::new(Gf::new(spec), k, n, entries)
    }
}

/// The matroid of a code: `rank(X)` is the dimension spanned by the columns in `X`.
#[derive(Clone, Debug)]
pub struct LinearMatroid {
    g: GenMatrix,
}

impl LinearMatroid {
    pub fn matrix(&self) -> &GenMatrix {
        &self.g
    }
}

impl Matroid for LinearMatroid {
    fn ground(&self) -> Subset {
        Subset::full(self.g.n)
    }

    fn rank(&self, set: Subset) -> usize {
        self.g.column_rank(set)
    }
}

pub fn code_to_matroid(g: &GenMatrix) -> LinearMatroid {
    LinearMatroid { g: g.clone() }
}

fn check_certify_size(n: usize) -> Result<()> {
    if n > CERTIFY_LIMIT {
        Err(Error::too_large(
            "code certification length",
            n as u128,
            CERTIFY_LIMIT as u128,
        ))
    } else {
        Ok(())
    }
}

/// True iff every `k` columns are independent, i.e. the matroid is `U_n^k`.
pub fn is_mds_code(g: &GenMatrix) -> Result<bool> {
    check_certify_size(g.n)?;
    Ok(is_uniform(&code_to_matroid(g))? == Some((g.n, g.k)))
}

/// Certifies `g` as a maximally recoverable LRC with the repair sets of `p`.
///
/// Checks that each repair set spans at most `r` dimensions and that every
/// `k`-subset containing no whole repair set is an information set.
pub fn is_mr_lrc(g: &GenMatrix, p: &MrParams) -> Result<bool> {
    if g.n != p.n() || g.k != p.k() {
        return Err(FieldError::Shape(format!(
            "matrix is {}x{} but the parameters ask for k={}, n={}",
            g.k,
            g.n,
            p.k(),
            p.n()
        ))
        .into());
    }
    check_certify_size(g.n)?;
    if p.repair_sets().iter().any(|&rs| g.column_rank(rs) > p.r()) {
        return Ok(false);
    }
    let k = p.k();
    let ground = Subset::full(g.n);
    let elems = ground.to_vec();
    debug_assert!(binomial(g.n, k) <= binomial(CERTIFY_LIMIT, CERTIFY_LIMIT / 2));
    let ok = elems.par_iter().all(|&first| {
        let above = ground - Subset::full(first + 1);
        above.k_subsets(k - 1).all(|s| {
            let s = s.with(first);
            p.full_sets_in(s) > 0 || g.column_rank(s) == k
        })
    });
    Ok(ok)
}

/// Deletes the columns in `x`. The result is reduced to a basis of its row space.
pub fn puncture(g: &GenMatrix, x: Subset) -> Result<GenMatrix> {
    g.check_columns(x)?;
    Ok(g.select_columns(Subset::full(g.n) - x))
}

/// Keeps the codewords vanishing on `x`, then drops the columns in `x`.
///
/// The result has dimension `k - rank(x)`.
pub fn shorten(g: &GenMatrix, x: Subset) -> Result<GenMatrix> {
    g.check_columns(x)?;
    let rest = Subset::full(g.n) - x;
    let order: Vec<usize> = x.iter().chain(rest.iter()).collect();
    let mut rows = g.rows();
    let pivots = g.field.rref_by(&mut rows, &order);
    // rows pivoted outside x are zero on every column of x
    let kept: Vec<Vec<u32>> = pivots
        .iter()
        .filter(|&&(_, c)| !x.contains(c))
        .map(|&(i, _)| rest.iter().map(|j| rows[i][j]).collect())
        .collect();
    GenMatrix::from_rows(g.field.clone(), rest.len(), &kept)
}

/// Shortens on `f`, then punctures `x`; column labels of the result follow the
/// increasing order of `E - f - x`.
pub fn minor_code(g: &GenMatrix, f: Subset, x: Subset) -> Result<GenMatrix> {
    if !f.is_disjoint(x) {
        return Err(Error::Overlap {
            contract: format!("{{{f}}}"),
            delete: format!("{{{x}}}"),
        });
    }
    g.check_columns(x)?;
    let shortened = shorten(g, f)?;
    let rest = Subset::full(g.n) - f;
    puncture(&shortened, Subset::from_bits(rest.extract(x)))
}

/// A code found by [`search_mr_code`] and the trial that produced it.
#[derive(Clone, Debug)]
pub struct SearchHit {
    pub trial: u64,
    pub matrix: GenMatrix,
}

/// Generator for trial `trial`, or `None` if the drawn parity checks are dependent.
///
/// The parity-check matrix has one all-ones row per repair set and `h` rows of
/// uniform random entries; the generator is a basis of its null space in reduced form.
pub fn trial_code(p: &MrParams, field: &Gf, seed: u64, trial: u64) -> Option<GenMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let n = p.n();
    let q = field.order();
    let mut h_rows: Vec<Vec<u32>> = p
        .repair_sets()
        .iter()
        .map(|rs| (0..n).map(|j| rs.contains(j) as u32).collect())
        .collect();
    for _ in 0..p.h() {
        h_rows.push((0..n).map(|_| rng.gen_range(0..q)).collect());
    }
    let order: Vec<usize> = (0..n).collect();
    let pivots = field.rref_by(&mut h_rows, &order);
    if pivots.len() != n - p.k() {
        return None;
    }
    let pivot_cols = Subset::from_indices(pivots.iter().map(|&(_, c)| c));
    let free = Subset::full(n) - pivot_cols;
    let basis: Vec<Vec<u32>> = free
        .iter()
        .map(|fc| {
            let mut v = vec![0u32; n];
            v[fc] = 1;
            for &(row, pc) in &pivots {
                v[pc] = field.neg(h_rows[row][fc]);
            }
            v
        })
        .collect();
    GenMatrix::from_rows(field.clone(), n, &basis).ok()
}

/// Seeded random search for an MR code with parameters `p` over `field`.
///
/// Trial `t` draws from a ChaCha8 stream keyed by `(seed, t)`; the lowest certified
/// trial index wins, so the result does not depend on thread scheduling.
pub fn search_mr_code(
    p: &MrParams,
    field: &FieldSpec,
    trials: u64,
    seed: u64,
) -> Result<Option<SearchHit>> {
    check_certify_size(p.n())?;
    let gf = Gf::new(*field);
    let hit = (0..trials).into_par_iter().find_map_first(|trial| {
        let g = trial_code(p, &gf, seed, trial)?;
        is_mr_lrc(&g, p)
            .ok()
            .filter(|&ok| ok)
            .map(|_| SearchHit { trial, matrix: g })
    });
    Ok(hit)
}
