//! Counting partitions of `m` into exactly `mu` parts, with or without the
//! requirement that parts be mutually distinct.
//!
//! Two memoized recurrences do the counting:
//!
//! * distinct parts: `D(m + mu, mu) = D(m, mu) + D(m, mu - 1)`
//! * any parts:      `A(m, mu) = A(m - mu, mu) + A(m - 1, mu - 1)`
//!
//! with `D(0, 0) = A(0, 0) = 1` and zero for any other `m` at `mu = 0`. The
//! brute-force [`enumerate`] exists to certify both.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::qseries::triangular;

/// Largest `m` accepted by [`enumerate`].
pub const ENUMERATE_MAX_M: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("enumeration is limited to m <= {ENUMERATE_MAX_M}, got m = {0}")]
    EnumerationTooLarge(usize),
    #[error("the denumerant needs at least one allowed part")]
    NoParts,
}

/// An arbitrary-precision, never-negative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PartitionCount(BigUint);

impl PartitionCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<BigUint> for PartitionCount {
    fn from(v: BigUint) -> Self {
        Self(v)
    }
}

impl From<u64> for PartitionCount {
    fn from(v: u64) -> Self {
        Self(BigUint::from(v))
    }
}

impl PartialEq<u64> for PartitionCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for PartitionCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A partition of `m` query: the number, the number of parts, and whether
/// parts must be distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartitionQuery {
    pub m: usize,
    pub mu: usize,
    pub distinct: bool,
}

impl PartitionQuery {
    pub fn count(&self) -> PartitionCount {
        if self.distinct {
            count_distinct(self.m, self.mu)
        } else {
            count_any(self.m, self.mu)
        }
    }
}

/// Parts in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Parts smallest first, the way they are usually written out by hand.
    pub fn ascending(&self) -> Vec<usize> {
        self.parts.iter().rev().copied().collect()
    }
}

impl From<Vec<usize>> for Partition {
    /// Sorts the parts into nonincreasing order.
    fn from(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flavor {
    Distinct,
    Any,
}

/// Dense `(mu, m)` memo table, grown on demand.
///
/// Each counter owns its table, so sharing across threads means one counter
/// per thread or an external lock; the free functions build a fresh one per
/// call.
#[derive(Debug, Clone)]
struct CountTable {
    flavor: Flavor,
    // rows[mu][m]
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    fn new(flavor: Flavor) -> Self {
        Self {
            flavor,
            rows: vec![vec![BigUint::one()]],
        }
    }

    fn width(&self) -> usize {
        self.rows[0].len()
    }

    fn ensure(&mut self, max_m: usize, max_mu: usize) {
        let old_width = self.width();
        let width = old_width.max(max_m + 1);
        let old_rows = self.rows.len();
        let height = old_rows.max(max_mu + 1);

        // extend existing rows to the new width, in mu order so row mu - 1 is
        // already complete when row mu needs it
        for mu in 0..old_rows {
            for m in old_width..width {
                let v = self.cell(mu, m);
                self.rows[mu].push(v);
            }
        }
        for mu in old_rows..height {
            self.rows.push(Vec::with_capacity(width));
            for m in 0..width {
                let v = self.cell(mu, m);
                self.rows[mu].push(v);
            }
        }
    }

    fn at(&self, mu: usize, m: usize) -> BigUint {
        self.rows[mu][m].clone()
    }

    // Requires rows[mu][..m] and rows[mu - 1][..=m] to be filled.
    fn cell(&self, mu: usize, m: usize) -> BigUint {
        if mu == 0 {
            return if m == 0 {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        match self.flavor {
            Flavor::Distinct => {
                let t = triangular(mu);
                if m < t {
                    BigUint::zero()
                } else if m == t {
                    BigUint::one()
                } else {
                    &self.rows[mu][m - mu] + &self.rows[mu - 1][m - mu]
                }
            }
            Flavor::Any => {
                if m < mu {
                    BigUint::zero()
                } else {
                    &self.rows[mu][m - mu] + &self.rows[mu - 1][m - 1]
                }
            }
        }
    }

    fn count(&mut self, m: usize, mu: usize) -> PartitionCount {
        self.ensure(m, mu);
        PartitionCount(self.at(mu, m))
    }
}

/// Reusable memo for partitions into distinct parts.
#[derive(Debug, Clone)]
pub struct DistinctCounter(CountTable);

impl Default for DistinctCounter {
    fn default() -> Self {
        Self::new()
    }
}

impl DistinctCounter {
    pub fn new() -> Self {
        Self(CountTable::new(Flavor::Distinct))
    }

    pub fn count(&mut self, m: usize, mu: usize) -> PartitionCount {
        self.0.count(m, mu)
    }
}

/// Reusable memo for partitions into parts with repetition allowed.
#[derive(Debug, Clone)]
pub struct AnyCounter(CountTable);

impl Default for AnyCounter {
    fn default() -> Self {
        Self::new()
    }
}

impl AnyCounter {
    pub fn new() -> Self {
        Self(CountTable::new(Flavor::Any))
    }

    pub fn count(&mut self, m: usize, mu: usize) -> PartitionCount {
        self.0.count(m, mu)
    }
}

/// Number of ways to write `m` as a sum of exactly `mu` distinct positive integers.
pub fn count_distinct(m: usize, mu: usize) -> PartitionCount {
    DistinctCounter::new().count(m, mu)
}

/// Number of ways to write `m` as a sum of exactly `mu` positive integers.
pub fn count_any(m: usize, mu: usize) -> PartitionCount {
    AnyCounter::new().count(m, mu)
}

/// Number of multisets drawn from `{1, ..., mu}` that sum to `t`.
pub fn denumerant(t: usize, mu: usize) -> Result<PartitionCount, PartitionError> {
    if mu == 0 {
        return Err(PartitionError::NoParts);
    }
    let mut ways = vec![BigUint::zero(); t + 1];
    ways[0] = BigUint::one();
    for part in 1..=mu.min(t) {
        for s in part..=t {
            let add = ways[s - part].clone();
            ways[s] += add;
        }
    }
    Ok(PartitionCount(ways.swap_remove(t)))
}

/// `p(m)`, the number of partitions of `m` with no restriction on parts.
pub fn partition_number(m: usize) -> PartitionCount {
    if m == 0 {
        return PartitionCount(BigUint::one());
    }
    let mut counter = AnyCounter::new();
    counter.0.ensure(m, m);
    let total = (1..=m).map(|mu| counter.0.at(mu, m)).sum();
    PartitionCount(total)
}

/// All partitions of `m` into exactly `mu` parts (distinct if asked),
/// in decreasing lexicographic order of the part lists.
pub fn enumerate(m: usize, mu: usize, distinct: bool) -> Result<Vec<Partition>, PartitionError> {
    if m > ENUMERATE_MAX_M {
        return Err(PartitionError::EnumerationTooLarge(m));
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(mu);
    fill(m, mu, m, distinct, &mut stack, &mut out);
    Ok(out)
}

/// Appends every way to finish `stack` with `slots` more parts, each at most
/// `cap`, summing to `remaining`.
fn fill(
    remaining: usize,
    slots: usize,
    cap: usize,
    distinct: bool,
    stack: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
        }
        return;
    }
    // the remaining slots - 1 parts need at least this much
    let rest_min = if distinct {
        triangular(slots - 1)
    } else {
        slots - 1
    };
    if remaining < rest_min + 1 {
        return;
    }
    let hi = cap.min(remaining - rest_min);
    // smallest first part that still leaves room: slots parts each <= first
    let lo = if distinct {
        // first + (first-1) + ... + (first-slots+1) >= remaining
        let mut f = slots;
        while f * slots - triangular(slots - 1) < remaining {
            f += 1;
        }
        f
    } else {
        remaining.div_ceil(slots)
    };
    for first in (lo..=hi).rev() {
        stack.push(first);
        let next_cap = if distinct { first - 1 } else { first };
        fill(remaining - first, slots - 1, next_cap, distinct, stack, out);
        stack.pop();
    }
}
