//! Integer partitions, Young diagrams in French convention, Frobenius
//! coordinates, strips and the special partition families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence
/// is the empty partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// A cell of a Young diagram: `column` counts from the left, `row` from the
/// bottom, both starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub column: usize,
    pub row: usize,
}

/// Arm and leg lengths `(a_1,...,a_l | b_1,...,b_l)` along the diagonal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusCoords {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        let f = FrobeniusCoords { arms, legs };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        if self.arms.len() != self.legs.len() {
            return Err(Error::InvalidFrobenius(format!(
                "{} arms but {} legs",
                self.arms.len(),
                self.legs.len()
            )));
        }
        for (name, seq) in [("arms", &self.arms), ("legs", &self.legs)] {
            if seq.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidFrobenius(format!(
                    "{name} {seq:?} are not strictly decreasing"
                )));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.arms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arms.is_empty()
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({}|{})", join(&self.arms), join(&self.legs))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let body: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails unless the parts
    /// are weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} increase from {} to {}",
                w[0], w[1]
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} contain an interior zero"
            )));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts that are already known to be weakly
    /// decreasing; trailing zeros are dropped.
    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `i + 1` (zero-based index), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let mut out = Vec::with_capacity(cols);
        for c in 1..=cols {
            out.push(self.0.iter().take_while(|&&p| p >= c).count());
        }
        Partition(out)
    }

    /// Side length of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let l = self.durfee();
        let conj = self.conjugate();
        FrobeniusCoords {
            arms: (0..l).map(|i| self.0[i] - i - 1).collect(),
            legs: (0..l).map(|i| conj.0[i] - i - 1).collect(),
        }
    }

    pub fn from_frobenius(f: &FrobeniusCoords) -> Result<Partition> {
        f.validate()?;
        let l = f.len();
        let mut parts: Vec<usize> = (0..l).map(|i| f.arms[i] + i + 1).collect();
        // rows above the Durfee square are read off the legs
        let height = f.legs.first().map_or(0, |b| b + 1);
        for row in (l + 1)..=height {
            parts.push((0..l).filter(|&j| f.legs[j] + j + 1 >= row).count());
        }
        Partition::new(parts)
    }

    /// True iff `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let n = self.len().min(other.len());
        Partition((0..n).map(|i| self.0[i].min(other.0[i])).collect())
    }

    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((0..n).map(|i| self.part(i).max(other.part(i))).collect())
    }

    /// `(λ∩ρ, λ∪ρ)`.
    pub fn meet_join(&self, other: &Partition) -> (Partition, Partition) {
        (self.meet(other), self.join(other))
    }

    pub fn has_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.column >= 1 && self.part(cell.row - 1) >= cell.column
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.skew_cells(&Partition::empty())
    }

    /// Cells of `self / inner`, row by row from the bottom.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            for column in inner.part(i) + 1..=p {
                out.push(Cell { column, row: i + 1 });
            }
        }
        out
    }

    /// Number of odd parts.
    pub fn odd_parts(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Parts rounded down after halving.
    pub fn floor_half(&self) -> Partition {
        Partition::from_sorted(self.0.iter().map(|p| p / 2).collect())
    }

    /// Parts rounded up after halving.
    pub fn ceil_half(&self) -> Partition {
        Partition::from_sorted(self.0.iter().map(|p| p.div_ceil(2)).collect())
    }

    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().map(|p| 2 * p).collect())
    }

    /// Inverse of [`Partition::doubled`]; fails on odd parts.
    pub fn halved(&self) -> Result<Partition> {
        if self.odd_parts() > 0 {
            return Err(Error::Domain(format!("{self} has odd parts")));
        }
        Ok(Partition(self.0.iter().map(|p| p / 2).collect()))
    }

    pub fn is_member(&self, family: Family) -> bool {
        member(self, family)
    }
}

/// `μ ≺ λ`: `μ ⊆ λ` and `λ/μ` has at most one cell per column.
pub fn is_horizontal_strip(mu: &Partition, lambda: &Partition) -> bool {
    if mu.len() > lambda.len() {
        return false;
    }
    (0..lambda.len()).all(|r| lambda.part(r + 1) <= mu.part(r) && mu.part(r) <= lambda.part(r))
}

/// `μ ≺′ λ`: `μ ⊆ λ` and `λ/μ` has at most one cell per row.
pub fn is_vertical_strip(mu: &Partition, lambda: &Partition) -> bool {
    lambda.contains(mu) && (0..lambda.len()).all(|r| lambda.part(r) <= mu.part(r) + 1)
}

/// Strip predicate selected by a flag: vertical when `vertical` is set.
pub fn is_strip(mu: &Partition, lambda: &Partition, vertical: bool) -> bool {
    if vertical {
        is_vertical_strip(mu, lambda)
    } else {
        is_horizontal_strip(mu, lambda)
    }
}

/// The partition families on which the projection identities live.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "all")]
    All,
    #[serde(rename = "even-rows")]
    EvenRows,
    #[serde(rename = "even-cols")]
    EvenColumns,
    /// Frobenius shape `(a | a+1)`.
    #[serde(rename = "asym+1")]
    AsymPlus,
    /// Frobenius shape `(a+1 | a)`.
    #[serde(rename = "asym-1")]
    AsymMinus,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::EvenColumns,
        Family::All,
        Family::EvenRows,
        Family::AsymPlus,
        Family::AsymMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::All => "all",
            Family::EvenRows => "even-rows",
            Family::EvenColumns => "even-cols",
            Family::AsymPlus => "asym+1",
            Family::AsymMinus => "asym-1",
        }
    }

    pub fn is_asym(self) -> bool {
        matches!(self, Family::AsymPlus | Family::AsymMinus)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown family `{s}`")))
    }
}

pub fn member(lambda: &Partition, family: Family) -> bool {
    match family {
        Family::All => true,
        Family::EvenRows => lambda.odd_parts() == 0,
        Family::EvenColumns => lambda.conjugate().odd_parts() == 0,
        Family::AsymPlus => {
            let f = lambda.frobenius();
            f.arms.iter().zip(&f.legs).all(|(a, b)| *b == a + 1)
        }
        Family::AsymMinus => {
            let f = lambda.frobenius();
            f.arms.iter().zip(&f.legs).all(|(a, b)| *a == b + 1)
        }
    }
}

/// Partitions of exactly `n`, lexicographically descending, with at most
/// `max_rows` rows and parts at most `max_part`.
pub fn partitions_of(n: usize, max_rows: usize, max_part: usize) -> Vec<Partition> {
    fn go(
        rest: usize,
        max_part: usize,
        rows_left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_rows, &mut Vec::new(), &mut out);
    out
}

/// All partitions with at most `max_size` cells, optionally inside a
/// `(rows, cols)` box, ordered by size and then lexicographically
/// descending.
pub fn enumerate_partitions(max_size: usize, bbox: Option<(usize, usize)>) -> Vec<Partition> {
    let (rows, cols) = bbox.unwrap_or((usize::MAX, usize::MAX));
    (0..=max_size)
        .flat_map(|n| partitions_of(n, rows, cols))
        .collect()
}

/// Every `ν` with `λ ≺ ν` (or `λ ≺′ ν` when `vertical`) adding at most
/// `max_cells` cells and staying inside `bound` when one is given.
pub fn strips_added(
    lambda: &Partition,
    max_cells: usize,
    vertical: bool,
    bound: Option<&Partition>,
) -> Vec<Partition> {
    if vertical {
        let conj_bound = bound.map(Partition::conjugate);
        return strips_added(&lambda.conjugate(), max_cells, false, conj_bound.as_ref())
            .iter()
            .map(Partition::conjugate)
            .collect();
    }
    // row r may grow up to λ_{r-1}; one new row at the top
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    let mut cur = vec![0; rows];
    fn go(
        r: usize,
        left: usize,
        lambda: &Partition,
        bound: Option<&Partition>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if r == cur.len() {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        let base = lambda.part(r);
        let mut hi = base + left;
        if r > 0 {
            hi = hi.min(lambda.part(r - 1));
        }
        if let Some(b) = bound {
            hi = hi.min(b.part(r));
        }
        for v in base..=hi {
            cur[r] = v;
            go(r + 1, left - (v - base), lambda, bound, cur, out);
        }
    }
    if let Some(b) = bound {
        if !b.contains(lambda) {
            return out;
        }
    }
    go(0, max_cells, lambda, bound, &mut cur, &mut out);
    out
}

/// Every `μ` with `μ ≺ λ` (or `μ ≺′ λ` when `vertical`) containing `lower`
/// when one is given.
pub fn strips_removed(
    lambda: &Partition,
    vertical: bool,
    lower: Option<&Partition>,
) -> Vec<Partition> {
    if vertical {
        let conj_lower = lower.map(Partition::conjugate);
        return strips_removed(&lambda.conjugate(), false, conj_lower.as_ref())
            .iter()
            .map(Partition::conjugate)
            .collect();
    }
    let mut out = Vec::new();
    if let Some(l) = lower {
        if !lambda.contains(l) {
            return out;
        }
    }
    let mut cur = vec![0; lambda.len()];
    fn go(
        r: usize,
        lambda: &Partition,
        lower: Option<&Partition>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if r == cur.len() {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        let lo = lambda.part(r + 1).max(lower.map_or(0, |l| l.part(r)));
        for v in lo..=lambda.part(r) {
            cur[r] = v;
            go(r + 1, lambda, lower, cur, out);
        }
    }
    go(0, lambda, lower, &mut cur, &mut out);
    out
}

#[cfg(test)]
pub(crate) fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}
