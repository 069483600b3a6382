//! Minor sizes and field-size bounds tabulated over a range of lengths `n`.

use std::fmt::Write as _;

use crate::bounds::BoundsReport;
use crate::error::{Error, Result};
use crate::mr::LrcShape;

pub const CSV_HEADER: &str = "n,g,h,eq1,eq2,eq3_kprime,eq3,thm,q_uncond,q_conj,q_gopalan";

/// One CSV row. `eq3` holds the best small-rank size and the `k'` achieving it
/// (smallest on ties); both are absent when `r < 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    pub g: usize,
    pub h: usize,
    pub eq1: usize,
    pub eq2: usize,
    pub eq3: Option<(usize, usize)>,
    pub thm: usize,
    pub q_unconditional: u64,
    pub q_conjectural: u64,
    pub q_gopalan: u64,
}

impl SweepRow {
    pub fn new(p: impl Into<LrcShape>) -> Self {
        let p: LrcShape = p.into();
        let rep = BoundsReport::new(p);
        SweepRow {
            n: p.n(),
            g: p.g(),
            h: p.h(),
            eq1: rep.eq1_size,
            eq2: rep.eq2_size,
            eq3: rep.eq3_best(),
            thm: rep.largest_uniform,
            q_unconditional: rep.q_unconditional.value,
            q_conjectural: rep.q_conjectural.optimistic,
            q_gopalan: rep.q_gopalan,
        }
    }

    pub fn to_csv(&self) -> String {
        let (kp, e3) = match self.eq3 {
            Some((kp, s)) => (kp.to_string(), s.to_string()),
            None => (String::new(), String::new()),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.g,
            self.h,
            self.eq1,
            self.eq2,
            kp,
            e3,
            self.thm,
            self.q_unconditional,
            self.q_conjectural,
            self.q_gopalan
        )
    }
}

/// Rows for every `n` in `n_min..=n_max` that is a multiple of `r + 1` and gives
/// valid parameters.
pub fn sweep(k: usize, r: usize, n_min: usize, n_max: usize) -> Result<Vec<SweepRow>> {
    let step = r + 1;
    let start = n_min.div_ceil(step).max(1) * step;
    let rows: Vec<SweepRow> = (start..=n_max)
        .step_by(step)
        .filter_map(|n| LrcShape::new(n, k, r).ok())
        .map(SweepRow::new)
        .collect();
    if rows.is_empty() {
        return Err(Error::EmptySweep { k, r, n_min, n_max });
    }
    Ok(rows)
}

/// CSV text: a `#` line recording `command`, the header, then one line per row.
pub fn to_csv(rows: &[SweepRow], command: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {command}");
    let _ = writeln!(out, "{CSV_HEADER}");
    for row in rows {
        let _ = writeln!(out, "{}", row.to_csv());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_rows() {
        let rows = sweep(7, 3, 8, 60).unwrap();
        assert_eq!(rows.first().unwrap().n, 12);
        assert_eq!(rows.last().unwrap().n, 60);
        let at = |n| rows.iter().find(|r| r.n == n).unwrap();
        let r12 = at(12);
        assert_eq!((r12.eq1, r12.eq2, r12.eq3.unwrap().1), (9, 6, 5));
        let r40 = at(40);
        assert_eq!((r40.eq1, r40.eq2, r40.eq3.unwrap().1), (30, 34, 35));
        assert_eq!(r40.q_unconditional, 34);
    }

    #[test]
    fn lengths_beyond_the_bitmask_limit() {
        let rows = sweep(7, 3, 100, 200).unwrap();
        assert_eq!(rows.len(), 26);
        assert_eq!(rows.last().unwrap().eq1, 150);
    }

    #[test]
    fn small_locality_leaves_eq3_blank() {
        let rows = sweep(4, 2, 9, 12).unwrap();
        assert!(rows.iter().all(|r| r.eq3.is_none()));
        assert!(to_csv(&rows, "x").lines().nth(2).unwrap().contains(",,"));
    }

    #[test]
    fn empty_range_is_an_error() {
        assert!(matches!(sweep(7, 3, 13, 15), Err(Error::EmptySweep { .. })));
    }
}
