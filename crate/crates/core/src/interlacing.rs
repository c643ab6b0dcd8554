//! The interlacing sets `U`, `D`, `U*`, `D*` of a pair `(λ, ρ)`, their
//! ribbon profiles, and the position-multiset encoding of their members.
//!
//! `up_set` and `down_set` are exhaustive searches and serve as oracles.
//! `encode`/`decode` work row by row: every row of a member ranges over an
//! interval fixed by `(λ, ρ)`, independently of the other rows.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{is_strip, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Down,
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileKind {
    Removable,
    Addable,
    DualRemovable,
    DualAddable,
}

impl ProfileKind {
    pub fn new(direction: Direction, dual: bool) -> Self {
        match (direction, dual) {
            (Direction::Down, false) => ProfileKind::Removable,
            (Direction::Up, false) => ProfileKind::Addable,
            (Direction::Down, true) => ProfileKind::DualRemovable,
            (Direction::Up, true) => ProfileKind::DualAddable,
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            ProfileKind::Removable | ProfileKind::DualRemovable => Direction::Down,
            ProfileKind::Addable | ProfileKind::DualAddable => Direction::Up,
        }
    }

    pub fn is_dual(self) -> bool {
        matches!(self, ProfileKind::DualRemovable | ProfileKind::DualAddable)
    }
}

/// Size of a ribbon. The bottom addable ribbon is unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Capacity {
    Finite(usize),
    Infinite,
}

impl Capacity {
    pub fn admits(self, count: usize) -> bool {
        match self {
            Capacity::Finite(c) => count <= c,
            Capacity::Infinite => true,
        }
    }
}

impl fmt::Display for Capacity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Capacity::Finite(c) => write!(f, "{c}"),
            Capacity::Infinite => write!(f, "∞"),
        }
    }
}

impl Serialize for Capacity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Capacity::Finite(c) => s.serialize_u64(*c as u64),
            Capacity::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Capacity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(c) => Ok(Capacity::Finite(c)),
            Raw::Str(s) if s == "inf" => Ok(Capacity::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!(
                "capacity must be a number or \"inf\", got \"{s}\""
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RibbonEntry {
    pub position: usize,
    /// Row of the ribbon, counted from the bottom starting at 1.
    pub row: usize,
    pub capacity: Capacity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonProfile {
    pub kind: ProfileKind,
    pub entries: Vec<RibbonEntry>,
}

impl RibbonProfile {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn capacity(&self, position: usize) -> Option<Capacity> {
        self.entries
            .iter()
            .find(|e| e.position == position)
            .map(|e| e.capacity)
    }
}

/// A finite multiset of non-negative integers, stored as multiplicities.
///
/// Used for ribbon positions and for insertion sets of tableau values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PositionMultiset {
    pub counts: BTreeMap<usize, usize>,
}

impl PositionMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_elems(elems: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::new();
        for e in elems {
            m.add(e, 1);
        }
        m
    }

    pub fn add(&mut self, position: usize, mult: usize) {
        if mult > 0 {
            *self.counts.entry(position).or_insert(0) += mult;
        }
    }

    /// Removes one copy; returns false when none was present.
    pub fn remove_one(&mut self, position: usize) -> bool {
        match self.counts.get_mut(&position) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(&position);
                true
            }
            None => false,
        }
    }

    /// Removes every copy and returns how many there were.
    pub fn take_all(&mut self, position: usize) -> usize {
        self.counts.remove(&position).unwrap_or(0)
    }

    pub fn count(&self, position: usize) -> usize {
        self.counts.get(&position).copied().unwrap_or(0)
    }

    /// Number of elements counted with multiplicity.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.values().all(|&c| c == 0)
    }

    /// True iff every multiplicity is at most one.
    pub fn is_set(&self) -> bool {
        self.counts.values().all(|&c| c <= 1)
    }

    pub fn max(&self) -> Option<usize> {
        self.counts.iter().rev().find(|(_, &c)| c > 0).map(|(&p, _)| p)
    }

    pub fn min(&self) -> Option<usize> {
        self.counts.iter().find(|(_, &c)| c > 0).map(|(&p, _)| p)
    }

    /// Elements in ascending order, repeated by multiplicity.
    pub fn elems(&self) -> Vec<usize> {
        self.counts
            .iter()
            .flat_map(|(&p, &c)| std::iter::repeat_n(p, c))
            .collect()
    }
}

impl fmt::Display for PositionMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.elems().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", body.join(","))
    }
}

/// All `ν` with `λ ≺ ν ≻ ρ` (`λ ≺′ ν ≻ ρ` when `dual`) and `|ν/(λ∪ρ)| = k`,
/// found by exhaustive search, in ascending order.
pub fn up_set(lambda: &Partition, rho: &Partition, k: usize, dual: bool) -> Vec<Partition> {
    let base = lambda.join(rho);
    // every row may grow by up to k cells, plus one new top row
    let rows = base.len() + 1;
    let mut out = Vec::new();
    let mut cur = vec![0usize; rows];
    search_up(0, k, &base, &mut cur, &mut |nu: &[usize]| {
        let nu = Partition::from_sorted(nu.to_vec());
        if is_strip(lambda, &nu, dual) && is_strip(rho, &nu, false) {
            out.push(nu);
        }
    });
    out.sort();
    out
}

fn search_up(
    r: usize,
    left: usize,
    base: &Partition,
    cur: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if r == cur.len() {
        if left == 0 {
            visit(cur);
        }
        return;
    }
    let lo = base.part(r);
    let mut hi = lo + left;
    if r > 0 {
        hi = hi.min(cur[r - 1]);
    }
    for v in lo..=hi {
        cur[r] = v;
        search_up(r + 1, left - (v - lo), base, cur, visit);
    }
}

/// All `μ` with `λ ≻ μ ≺ ρ` (`λ ≻ μ ≺′ ρ` when `dual`) and
/// `|(λ∩ρ)/μ| = k`, found by exhaustive search, in ascending order.
pub fn down_set(lambda: &Partition, rho: &Partition, k: usize, dual: bool) -> Vec<Partition> {
    let top = lambda.meet(rho);
    let mut out = Vec::new();
    if k > top.size() {
        return out;
    }
    let mut cur = vec![0usize; top.len()];
    search_down(0, k, &top, &mut cur, &mut |mu: &[usize]| {
        let mu = Partition::from_sorted(mu.to_vec());
        if is_strip(&mu, lambda, false) && is_strip(&mu, rho, dual) {
            out.push(mu);
        }
    });
    out.sort();
    out
}

fn search_down(
    r: usize,
    left: usize,
    top: &Partition,
    cur: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if r == cur.len() {
        if left == 0 {
            visit(cur);
        }
        return;
    }
    let hi = top.part(r);
    let lo = hi.saturating_sub(left);
    for v in lo..=hi {
        // keep the sequence weakly decreasing
        if r > 0 && v > cur[r - 1] {
            break;
        }
        cur[r] = v;
        search_down(r + 1, left - (hi - v), top, cur, visit);
    }
}

/// Allowed interval of one row of a member of an interlacing set.
#[derive(Clone, Copy, Debug)]
struct RowRange {
    /// Zero-based row index.
    row: usize,
    lo: usize,
    /// `None` when the row is unbounded.
    hi: Option<usize>,
}

impl RowRange {
    fn width(&self) -> Capacity {
        match self.hi {
            Some(h) => Capacity::Finite(h.saturating_sub(self.lo)),
            None => Capacity::Infinite,
        }
    }

    fn is_empty(&self) -> bool {
        matches!(self.hi, Some(h) if h < self.lo)
    }

    fn is_ribbon(&self) -> bool {
        self.width() != Capacity::Finite(0)
    }
}

fn row_ranges(lambda: &Partition, rho: &Partition, kind: ProfileKind) -> Vec<RowRange> {
    let l = |r: usize| lambda.part(r);
    let p = |r: usize| rho.part(r);
    let rows = lambda.len().max(rho.len());
    match kind {
        ProfileKind::Removable => (0..rows)
            .map(|r| RowRange {
                row: r,
                lo: l(r + 1).max(p(r + 1)),
                hi: Some(l(r).min(p(r))),
            })
            .collect(),
        ProfileKind::Addable => (0..=rows)
            .map(|r| RowRange {
                row: r,
                lo: l(r).max(p(r)),
                hi: (r > 0).then(|| l(r - 1).min(p(r - 1))),
            })
            .collect(),
        ProfileKind::DualRemovable => (0..rows)
            .map(|r| RowRange {
                row: r,
                lo: l(r + 1).max(p(r).saturating_sub(1)),
                hi: Some(l(r).min(p(r))),
            })
            .collect(),
        ProfileKind::DualAddable => (0..=rows)
            .map(|r| {
                let cap = if r == 0 { l(r) + 1 } else { (l(r) + 1).min(p(r - 1)) };
                RowRange {
                    row: r,
                    lo: l(r).max(p(r)),
                    hi: Some(cap),
                }
            })
            .collect(),
    }
}

/// Maximal removable or addable ribbons (single-cell corners in the dual
/// case) of the pair, numbered from the bottom. Removable positions start
/// at 1, addable positions at 0.
pub fn profile(lambda: &Partition, rho: &Partition, kind: ProfileKind) -> RibbonProfile {
    let first = match kind.direction() {
        Direction::Down => 1,
        Direction::Up => 0,
    };
    let entries = row_ranges(lambda, rho, kind)
        .into_iter()
        .filter(|rr| !rr.is_empty() && rr.is_ribbon())
        .enumerate()
        .map(|(i, rr)| RibbonEntry {
            position: first + i,
            row: rr.row + 1,
            capacity: rr.width(),
        })
        .collect();
    RibbonProfile { kind, entries }
}

/// True iff the pair admits interlacing partners at all, i.e. every row
/// interval is non-empty. The condition is the same for both directions.
pub fn is_compatible(lambda: &Partition, rho: &Partition, dual: bool) -> bool {
    let kinds = if dual {
        [ProfileKind::DualRemovable, ProfileKind::DualAddable]
    } else {
        [ProfileKind::Removable, ProfileKind::Addable]
    };
    kinds
        .iter()
        .all(|&k| row_ranges(lambda, rho, k).iter().all(|rr| !rr.is_empty()))
}

fn compatible_ranges(
    lambda: &Partition,
    rho: &Partition,
    kind: ProfileKind,
) -> Result<Vec<RowRange>> {
    let ranges = row_ranges(lambda, rho, kind);
    if let Some(rr) = ranges.iter().find(|rr| rr.is_empty()) {
        return Err(Error::Domain(format!(
            "{lambda} and {rho} admit no interlacing partition (row {} is overconstrained)",
            rr.row + 1
        )));
    }
    Ok(ranges)
}

/// Position multiset `R(μ)` (direction `Down`) or `S(ν)` (direction `Up`).
pub fn encode(
    x: &Partition,
    lambda: &Partition,
    rho: &Partition,
    direction: Direction,
    dual: bool,
) -> Result<PositionMultiset> {
    let kind = ProfileKind::new(direction, dual);
    let ranges = compatible_ranges(lambda, rho, kind)?;
    let outside = || {
        Error::Domain(format!(
            "{x} is not in the {} set of ({lambda}, {rho})",
            match direction {
                Direction::Down => "down",
                Direction::Up => "up",
            }
        ))
    };
    if x.len() > ranges.len() {
        return Err(outside());
    }
    let mut out = PositionMultiset::new();
    let mut position = match direction {
        Direction::Down => 1,
        Direction::Up => 0,
    };
    for rr in &ranges {
        let v = x.part(rr.row);
        if v < rr.lo || rr.hi.is_some_and(|h| v > h) {
            return Err(outside());
        }
        if !rr.is_ribbon() {
            continue;
        }
        let count = match direction {
            Direction::Down => rr.hi.unwrap_or(v) - v,
            Direction::Up => v - rr.lo,
        };
        out.add(position, count);
        position += 1;
    }
    Ok(out)
}

/// Inverse of [`encode`].
pub fn decode(
    m: &PositionMultiset,
    lambda: &Partition,
    rho: &Partition,
    direction: Direction,
    dual: bool,
) -> Result<Partition> {
    let kind = ProfileKind::new(direction, dual);
    let ranges = compatible_ranges(lambda, rho, kind)?;
    let mut rows = vec![0usize; ranges.len()];
    let mut position = match direction {
        Direction::Down => 1,
        Direction::Up => 0,
    };
    let mut used = 0;
    for rr in &ranges {
        rows[rr.row] = match direction {
            Direction::Down => rr.hi.unwrap_or(rr.lo),
            Direction::Up => rr.lo,
        };
        if !rr.is_ribbon() {
            continue;
        }
        let count = m.count(position);
        let cap = rr.width();
        if !cap.admits(count) {
            let Capacity::Finite(capacity) = cap else {
                unreachable!()
            };
            return Err(Error::Capacity {
                position,
                count,
                capacity,
            });
        }
        match direction {
            Direction::Down => rows[rr.row] -= count,
            Direction::Up => rows[rr.row] += count,
        }
        used += count;
        position += 1;
    }
    if used != m.total() {
        return Err(Error::Domain(format!(
            "multiset {m} uses positions beyond the last ribbon {}",
            position.saturating_sub(1)
        )));
    }
    Ok(Partition::from_sorted(rows))
}
