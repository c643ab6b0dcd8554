//! Local growth rules: bijections from the down-side of a pair `(λ, ρ)` to
//! its up-side, expressed on position multisets.
//!
//! * `Row` and `Col` send `⋃_{i≤k} D(λ,ρ,i)` onto `U(λ,ρ,k)`.
//! * `DualRow` and `DualCol` send `D*(λ,ρ,k) ∪ D*(λ,ρ,k−1)` onto `U*(λ,ρ,k)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::interlacing::{decode, encode, profile, Capacity, Direction, PositionMultiset, ProfileKind};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    Row,
    Col,
    DualRow,
    DualCol,
}

impl RuleId {
    pub const ALL: [RuleId; 4] = [RuleId::Row, RuleId::Col, RuleId::DualRow, RuleId::DualCol];

    pub fn is_dual(self) -> bool {
        matches!(self, RuleId::DualRow | RuleId::DualCol)
    }

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Row => "row",
            RuleId::Col => "col",
            RuleId::DualRow => "dual-row",
            RuleId::DualCol => "dual-col",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown rule `{s}`")))
    }
}

/// Capacities of the removable ribbons, indexed by position (index 0 unused).
fn removable_capacities(lambda: &Partition, rho: &Partition) -> Vec<usize> {
    let prof = profile(lambda, rho, ProfileKind::Removable);
    let mut caps = vec![0; prof.len() + 1];
    for e in prof.entries {
        if let Capacity::Finite(c) = e.capacity {
            caps[e.position] = c;
        }
    }
    caps
}

/// Row insertion on positions: pad with `k − |R|` zeros.
pub fn row_positions(r: &PositionMultiset, k: usize) -> Result<PositionMultiset> {
    let j = r.total();
    if j > k {
        return domain(format!("{j} removed cells exceed k = {k}"));
    }
    let mut s = r.clone();
    s.add(0, k - j);
    Ok(s)
}

/// Column insertion on positions: the greedy matching in which each element
/// of `R ⊎ {∞^(k−j)}`, taken in increasing order, claims the largest free
/// slot of `S^∞ \ R` strictly below it. `caps[i]` is the capacity of
/// ribbon `i ≥ 1`; position 0 has unbounded capacity.
pub fn col_positions(r: &PositionMultiset, k: usize, caps: &[usize]) -> Result<PositionMultiset> {
    let j = r.total();
    if j > k {
        return domain(format!("{j} removed cells exceed k = {k}"));
    }
    let d = caps.len().saturating_sub(1);
    // free[i] for i ≥ 1; position 0 never runs out
    let mut free = vec![0usize; d + 1];
    for i in 1..=d {
        free[i] = caps[i].checked_sub(r.count(i)).ok_or_else(|| {
            Error::Invariant(format!("position {i} holds more than its capacity {}", caps[i]))
        })?;
    }
    let mut out = PositionMultiset::new();
    let xs = r.elems().into_iter().map(Some).chain(std::iter::repeat_n(None, k - j));
    for x in xs {
        let below = x.unwrap_or(d + 1);
        let y = (1..below.min(d + 1)).rev().find(|&i| free[i] > 0).unwrap_or(0);
        if y > 0 {
            free[y] -= 1;
        }
        out.add(y, 1);
    }
    Ok(out)
}

/// Inverse of [`col_positions`]: each element of `S`, taken in decreasing
/// order, claims the smallest unclaimed slot strictly above it, where the
/// slots are `R^∞ \ S` together with unboundedly many `∞`.
pub fn col_positions_inverse(s: &PositionMultiset, caps: &[usize]) -> Result<PositionMultiset> {
    let d = caps.len().saturating_sub(1);
    if let Some(m) = s.max() {
        if m > d {
            return domain(format!("position {m} exceeds the largest ribbon {d}"));
        }
    }
    let mut free = vec![0usize; d + 1];
    for i in 1..=d {
        free[i] = caps[i].checked_sub(s.count(i)).ok_or_else(|| {
            Error::Invariant(format!("position {i} holds more than its capacity {}", caps[i]))
        })?;
    }
    let mut out = PositionMultiset::new();
    for y in s.elems().into_iter().rev() {
        if let Some(x) = (y + 1..=d).find(|&i| free[i] > 0) {
            free[x] -= 1;
            out.add(x, 1);
        }
    }
    Ok(out)
}

/// Dual row insertion on position sets.
pub fn dual_row_positions(r: &PositionMultiset, k: usize) -> Result<PositionMultiset> {
    let j = r.total();
    let mut s = r.clone();
    if j + 1 == k {
        s.add(0, 1);
    } else if j != k {
        return domain(format!("dual insertion needs |R| ∈ {{k, k−1}}, got |R| = {j}, k = {k}"));
    }
    Ok(s)
}

/// Dual column insertion on position sets; `d` is the number of dual
/// removable corners.
pub fn dual_col_positions(r: &PositionMultiset, k: usize, d: usize) -> Result<PositionMultiset> {
    let j = r.total();
    if j != k && j + 1 != k {
        return domain(format!("dual insertion needs |R| ∈ {{k, k−1}}, got |R| = {j}, k = {k}"));
    }
    let mut s = PositionMultiset::from_elems(r.elems().into_iter().map(|x| x - 1));
    if j + 1 == k {
        s.add(d, 1);
    }
    Ok(s)
}

/// `ν = F_{λ,ρ,k}(μ)` for the chosen rule.
pub fn apply_rule(
    rule: RuleId,
    lambda: &Partition,
    rho: &Partition,
    k: usize,
    mu: &Partition,
) -> Result<Partition> {
    let dual = rule.is_dual();
    let r = encode(mu, lambda, rho, Direction::Down, dual)?;
    let s = match rule {
        RuleId::Row => row_positions(&r, k)?,
        RuleId::Col => col_positions(&r, k, &removable_capacities(lambda, rho))?,
        RuleId::DualRow => dual_row_positions(&r, k)?,
        RuleId::DualCol => {
            let d = profile(lambda, rho, ProfileKind::DualRemovable).len();
            dual_col_positions(&r, k, d)?
        }
    };
    decode(&s, lambda, rho, Direction::Up, dual).map_err(|e| match e {
        Error::Capacity { .. } => Error::Invariant(format!("{rule} insertion overflowed a ribbon: {e}")),
        other => other,
    })
}

/// Inverse of [`apply_rule`] with `k = |ν/(λ∪ρ)|`. Returns `(μ, a)` where
/// `a = |ν| + |μ| − |λ| − |ρ|`.
pub fn unapply_rule(
    rule: RuleId,
    lambda: &Partition,
    rho: &Partition,
    nu: &Partition,
) -> Result<(Partition, usize)> {
    let dual = rule.is_dual();
    let s = encode(nu, lambda, rho, Direction::Up, dual)?;
    let k = s.total();
    let r = match rule {
        RuleId::Row => {
            let mut r = s.clone();
            r.take_all(0);
            r
        }
        RuleId::Col => col_positions_inverse(&s, &removable_capacities(lambda, rho))?,
        RuleId::DualRow => {
            let mut r = s.clone();
            r.take_all(0);
            r
        }
        RuleId::DualCol => {
            let d = profile(lambda, rho, ProfileKind::DualRemovable).len();
            let mut r = s.clone();
            if k > 0 && s.count(d) > 0 {
                r.remove_one(d);
            }
            PositionMultiset::from_elems(r.elems().into_iter().map(|x| x + 1))
        }
    };
    let mu = decode(&r, lambda, rho, Direction::Down, dual)?;
    Ok((mu, k - r.total()))
}
