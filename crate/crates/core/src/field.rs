//! Arithmetic in GF(p^m) for `p^m <= 2^16`.
//!
//! Elements are canonical integers: the coefficients of the representing polynomial
//! packed little-endian in base `p` (for `p = 2`, plain bit vectors). Moduli use the
//! same packing and include the leading coefficient, so `x^2 + x + 1` over GF(2) is
//! `7` and `x^2 + 1` over GF(3) is `10`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, FieldError};

const MAX_ORDER: u64 = 1 << 16;

/// Moduli used when none is given.
const DEFAULT_MODULI: &[(u32, u32, u64)] = &[
    (2, 2, 0b111),   // x^2 + x + 1
    (2, 3, 0b1011),  // x^3 + x + 1
    (3, 2, 10),      // x^2 + 1
    (2, 4, 0b10011), // x^4 + x + 1
];

/// Identifies a finite field: characteristic, extension degree and modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    /// `None` exactly when `m == 1`.
    modulus: Option<u64>,
}

fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

fn pack(ds: &[u32], p: u32) -> u64 {
    ds.iter()
        .rev()
        .fold(0u64, |acc, &d| acc * p as u64 + d as u64)
}

/// Polynomial remainder over GF(p); `divisor` must be monic.
fn poly_rem(mut a: Vec<u32>, divisor: &[u32], p: u32) -> Vec<u32> {
    let dd = divisor.len() - 1;
    while a.len() > dd {
        let lead = a.pop().expect("non-empty");
        if lead == 0 {
            continue;
        }
        let shift = a.len() - dd;
        for (i, &c) in divisor[..dd].iter().enumerate() {
            let sub = (lead as u64 * c as u64 % p as u64) as u32;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
    }
    a
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    for d in 1..=m / 2 {
        // monic divisors of degree d: p^d choices for the lower coefficients
        for low in 0..(p as u64).pow(d as u32) {
            let mut div = digits(low, p, d);
            div.push(1);
            if poly_rem(modulus.to_vec(), &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    pub fn new(p: u32, m: u32, modulus: Option<u64>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 || (p as u64).checked_pow(m).is_none_or(|q| q > MAX_ORDER) {
            return Err(FieldError::TooLarge { p, m });
        }
        if m == 1 {
            return Ok(FieldSpec {
                p,
                m,
                modulus: None,
            });
        }
        let modulus = match modulus {
            Some(v) => v,
            None => DEFAULT_MODULI
                .iter()
                .find(|&&(pp, mm, _)| pp == p && mm == m)
                .map(|&(_, _, v)| v)
                .ok_or(FieldError::NoDefaultModulus { p, m })?,
        };
        let q = (p as u64).pow(m);
        if modulus < q || modulus >= 2 * q {
            return Err(FieldError::BadModulus { p, m, modulus });
        }
        if !is_irreducible(&digits(modulus, p, m as usize + 1), p) {
            return Err(FieldError::Reducible(modulus));
        }
        Ok(FieldSpec {
            p,
            m,
            modulus: Some(modulus),
        })
    }

    pub fn prime(p: u32) -> Result<Self, FieldError> {
        Self::new(p, 1, None)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.m)
    }
}

/// `p`, `p^m`, `p^m modulus=<int>`, or a prime power `q` with a built-in modulus.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("bad field description {s:?}"));
        let mut parts = s.split_whitespace();
        let head = parts.next().ok_or_else(bad)?;
        let modulus = match parts.next() {
            None => None,
            Some(tok) => Some(
                tok.strip_prefix("modulus=")
                    .and_then(|v| v.parse::<u64>().ok())
                    .ok_or_else(bad)?,
            ),
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        let spec = if let Some((p, m)) = head.split_once('^') {
            let p = p.parse().map_err(|_| bad())?;
            let m = m.parse().map_err(|_| bad())?;
            FieldSpec::new(p, m, modulus)?
        } else {
            let q: u32 = head.parse().map_err(|_| bad())?;
            let (p, m) = prime_power(q).ok_or(FieldError::NotPrime(q))?;
            FieldSpec::new(p, m, modulus)?
        };
        Ok(spec)
    }
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => write!(f, "{}", self.p),
            Some(md) => write!(f, "{}^{} modulus={}", self.p, self.m, md),
        }
    }
}

/// A finite field with log/antilog tables.
#[derive(Clone)]
pub struct Gf {
    spec: FieldSpec,
    q: u32,
    exp: Arc<Vec<u32>>,
    log: Arc<Vec<u32>>,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Gf {}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.spec)
    }
}

impl Gf {
    pub fn new(spec: FieldSpec) -> Self {
        let q = spec.order();
        let slow = SlowField::new(&spec);
        let exp = (1..q)
            .find_map(|g| slow.powers_if_primitive(g, q - 1))
            .expect("every finite field has a primitive element");
        let mut log = vec![0u32; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        Gf {
            spec,
            q,
            exp: Arc::new(exp),
            log: Arc::new(log),
        }
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p;
        if p == 2 {
            return a ^ b;
        }
        if self.spec.m == 1 {
            return (a + b) % p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0u32, 1u32);
        while a != 0 || b != 0 {
            out += (a % p + b % p) % p * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let p = self.spec.p;
        if p == 2 {
            return a;
        }
        let (mut a, mut out, mut place) = (a, 0u32, 1u32);
        while a != 0 {
            out += (p - a % p) % p * place;
            a /= p;
            place *= p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] + self.log[b as usize];
        self.exp[(s % (self.q - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let l = self.log[a as usize];
        Ok(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    /// Reduces `rows` in place to reduced row-echelon form, considering pivot columns
    /// in the order given; returns the pivot `(row, column)` pairs.
    pub fn rref_by(&self, rows: &mut [Vec<u32>], column_order: &[usize]) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for &c in column_order {
            if next == rows.len() {
                break;
            }
            let Some(pr) = (next..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(next, pr);
            let inv = self.inv(rows[next][c]).expect("pivot is non-zero");
            for v in rows[next].iter_mut() {
                *v = self.mul(*v, inv);
            }
            let pivot_row = rows[next].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == next || row[c] == 0 {
                    continue;
                }
                let factor = row[c];
                for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                    *v = self.sub(*v, self.mul(factor, pv));
                }
            }
            pivots.push((next, c));
            next += 1;
        }
        pivots
    }

    /// Row rank by Gaussian elimination.
    pub fn rank_of(&self, rows: &[Vec<u32>]) -> usize {
        let Some(width) = rows.first().map(Vec::len) else {
            return 0;
        };
        let mut work = rows.to_vec();
        let order: Vec<usize> = (0..width).collect();
        self.rref_by(&mut work, &order).len()
    }
}

/// Polynomial arithmetic used only to build the tables.
struct SlowField {
    p: u32,
    m: usize,
    modulus: Vec<u32>,
}

impl SlowField {
    fn new(spec: &FieldSpec) -> Self {
        let m = spec.m as usize;
        let modulus = match spec.modulus {
            Some(v) => digits(v, spec.p, m + 1),
            None => vec![0, 1],
        };
        SlowField {
            p: spec.p,
            m,
            modulus,
        }
    }

    /// The table `g^0, .., g^(order-1)` when `g` generates the multiplicative group.
    fn powers_if_primitive(&self, g: u32, order: u32) -> Option<Vec<u32>> {
        let mut out = Vec::with_capacity(order as usize);
        let mut x = 1u32;
        for i in 0..order {
            if i > 0 && x == 1 {
                return None;
            }
            out.push(x);
            x = self.mul(x, g);
        }
        (x == 1).then_some(out)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        if self.m == 1 {
            return (a as u64 * b as u64 % p as u64) as u32;
        }
        let da = digits(a as u64, p, self.m);
        let db = digits(b as u64, p, self.m);
        let mut prod = vec![0u32; 2 * self.m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
            }
        }
        pack(&poly_rem(prod, &self.modulus, p), p) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(s: &str) -> Gf {
        Gf::new(s.parse().unwrap())
    }

    #[test]
    fn gf2_addition() {
        let f = gf("2");
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn gf4_defining_relation() {
        let f = gf("2^2 modulus=7");
        // x * x = x + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(gf("4").spec(), f.spec());
    }

    #[test]
    fn field_axioms_small_fields() {
        for s in [
            "2",
            "3",
            "5",
            "7",
            "4",
            "8",
            "9",
            "16",
            "3^3 modulus=34",
            "25",
        ] {
            let Ok(spec) = s.parse::<FieldSpec>() else {
                // 25 has no built-in modulus
                assert_eq!(s, "25");
                continue;
            };
            let f = Gf::new(spec);
            let q = f.order();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "{s}: inverse of {a}");
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert!(f.mul(a, b) < q);
                    for c in [0, 1, q - 1] {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "{s}: distributivity"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_full_order() {
        let f = gf("16");
        let mut seen: Vec<u32> = f.exp.to_vec();
        seen.sort_unstable();
        assert_eq!(seen, (1..16).collect::<Vec<_>>());
    }

    #[test]
    fn large_field_builds() {
        let f = gf("65521");
        assert_eq!(f.mul(f.inv(12345).unwrap(), 12345), 1);
        let f = gf("2^16 modulus=69643");
        assert_eq!(f.mul(f.inv(40000).unwrap(), 40000), 1);
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(gf("5").inv(0), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(4, 1, None), Err(FieldError::NotPrime(4)));
        assert!(matches!(
            FieldSpec::new(2, 17, None),
            Err(FieldError::TooLarge { .. })
        ));
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert_eq!(FieldSpec::new(2, 2, Some(5)), Err(FieldError::Reducible(5)));
        assert!(matches!(
            FieldSpec::new(2, 2, Some(3)),
            Err(FieldError::BadModulus { .. })
        ));
        assert!(matches!(
            FieldSpec::new(5, 2, None),
            Err(FieldError::NoDefaultModulus { .. })
        ));
        assert!("6".parse::<FieldSpec>().is_err());
        assert!("2^2 mod=7".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn spec_display_roundtrip() {
        for s in ["13", "2^4 modulus=19", "3^2 modulus=10"] {
            let spec: FieldSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn rank_of_identity_and_dependent_rows() {
        let f = gf("7");
        let id: Vec<Vec<u32>> = (0..4)
            .map(|i| (0..4).map(|j| (i == j) as u32).collect())
            .collect();
        assert_eq!(f.rank_of(&id), 4);
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(f.rank_of(&rows), 2);
        assert_eq!(f.rank_of(&[]), 0);
    }
}
