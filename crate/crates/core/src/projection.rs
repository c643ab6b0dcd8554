//! Projection bijections. For a family `X` and a partition `λ` these map
//! the down-side of `λ` inside `X` onto `U_X(λ,k)`, the members `ν ∈ X`
//! with `λ ≺ ν` and `|ν/λ| = k`:
//!
//! * all partitions: `⋃_{i≤k} D_X(λ,i)`, through a local rule at `(λ, λ)`;
//! * even rows: `⋃_i D_X(λ,k−2i)`, by halving and a local rule at `(λ⁻, λ⁺)`;
//! * even columns: the single `μ` with one cell removed per odd column;
//! * 1-asymmetric: `D*_X(λ,k)`;
//! * (−1)-asymmetric: `D*_X(λ,k) ∪ D*_X(λ,k−2)`.
//!
//! The asymmetric maps work on Frobenius coordinates through the index sets
//! of [`asym_indices`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{domain, validation, Error, Result};
use crate::partition::{is_strip, member, strips_added, strips_removed, Family, FrobeniusCoords, Partition};
use crate::rules::{apply_rule, unapply_rule, RuleId};

/// How a projection bijection is chosen inside its family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProjVariant {
    RowStar,
    ColStar,
    /// Use a (non-dual) local rule; for all partitions and even rows.
    Inherit(RuleId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProjFamily {
    pub family: Family,
    pub variant: ProjVariant,
}

impl ProjFamily {
    /// Checks that the variant makes sense for the family. Even columns
    /// accept any variant since their map is forced.
    pub fn new(family: Family, variant: ProjVariant) -> Result<Self> {
        let ok = match family {
            Family::All | Family::EvenRows => {
                matches!(variant, ProjVariant::Inherit(RuleId::Row | RuleId::Col))
            }
            Family::EvenColumns => true,
            Family::AsymPlus => variant == ProjVariant::RowStar,
            Family::AsymMinus => matches!(variant, ProjVariant::RowStar | ProjVariant::ColStar),
        };
        if !ok {
            return validation(format!("projection variant {variant:?} is not available for {family}"));
        }
        Ok(ProjFamily { family, variant })
    }

    /// Down-side uses `≺′` for the asymmetric families.
    pub fn dual_down(&self) -> bool {
        self.family.is_asym()
    }
}

/// Whether `μ` lies in the domain of the projection map into `U_X(λ,k)`.
fn in_domain(family: Family, lambda: &Partition, k: usize, mu: &Partition) -> bool {
    if !member(mu, family) || !is_strip(mu, lambda, family.is_asym()) {
        return false;
    }
    let removed = lambda.size() - mu.size();
    match family {
        Family::All => removed <= k,
        Family::EvenRows => removed <= k && (k - removed).is_multiple_of(2),
        Family::EvenColumns | Family::AsymPlus => removed == k,
        Family::AsymMinus => removed == k || removed + 2 == k,
    }
}

/// Domain and image of the projection map for `(λ, k)`, both sorted.
/// Computed by filtering all strips, independently of the maps.
pub fn proj_sets(family: Family, lambda: &Partition, k: usize) -> (Vec<Partition>, Vec<Partition>) {
    let dual = family.is_asym();
    let mut down: Vec<Partition> = strips_removed(lambda, dual, None)
        .into_iter()
        .filter(|mu| in_domain(family, lambda, k, mu))
        .collect();
    let mut up: Vec<Partition> = strips_added(lambda, k, false, None)
        .into_iter()
        .filter(|nu| nu.size() == lambda.size() + k && member(nu, family))
        .collect();
    down.sort();
    up.sort();
    (down, up)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiDirection {
    Double,
    Halve,
}

/// The doubling map between strips at `(λ⁻, λ⁺)` and even-row strips at `λ`.
pub fn phi(x: &Partition, direction: PhiDirection) -> Result<Partition> {
    match direction {
        PhiDirection::Double => Ok(x.doubled()),
        PhiDirection::Halve => x.halved(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AsymSign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl AsymSign {
    pub fn of(family: Family) -> Option<AsymSign> {
        match family {
            Family::AsymPlus => Some(AsymSign::Plus),
            Family::AsymMinus => Some(AsymSign::Minus),
            _ => None,
        }
    }
}

/// The free choices on both sides of an asymmetric projection. `r_indices`
/// index the Frobenius terms that may shrink on the way down, `s_indices`
/// those that may grow on the way up. `exists` is false when `λ` has no
/// asymmetric neighbours at all; both lists are then empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymIndexSets {
    pub r_indices: Vec<usize>,
    pub s_indices: Vec<usize>,
    pub exists: bool,
}

/// Frobenius coordinates as signed integers, 1-based, with the sentinels
/// needed by the index-set definitions.
struct Coords {
    arms: Vec<i64>,
    legs: Vec<i64>,
}

impl Coords {
    fn of(lambda: &Partition) -> Coords {
        let f = lambda.frobenius();
        Coords {
            arms: f.arms.iter().map(|&x| x as i64).collect(),
            legs: f.legs.iter().map(|&x| x as i64).collect(),
        }
    }

    fn l(&self) -> usize {
        self.arms.len()
    }

    /// `a_i`, with `a_0 = ∞` and `a_{l+1} = −∞`.
    fn a(&self, i: usize) -> i64 {
        if i == 0 {
            i64::MAX
        } else if i > self.l() {
            i64::MIN
        } else {
            self.arms[i - 1]
        }
    }

    /// `b_i`, with `b_{l+1} = −1`.
    fn b(&self, i: usize) -> i64 {
        if i > self.l() {
            -1
        } else {
            self.legs[i - 1]
        }
    }

    /// Shift added to the legs when comparing with the arms.
    fn interlaces(&self, shift: i64) -> bool {
        (1..=self.l()).all(|i| {
            self.b(i) + shift >= self.a(i) && (i == self.l() || self.a(i) >= self.b(i + 1) + shift)
        })
    }
}

pub fn asym_indices(lambda: &Partition, sign: AsymSign) -> AsymIndexSets {
    let c = Coords::of(lambda);
    let l = c.l();
    let shift = match sign {
        AsymSign::Plus => 0,
        AsymSign::Minus => 2,
    };
    if !c.interlaces(shift) {
        return AsymIndexSets {
            r_indices: Vec::new(),
            s_indices: Vec::new(),
            exists: false,
        };
    }
    let s_range = match sign {
        AsymSign::Plus => 1..=l,
        AsymSign::Minus => 1..=l + 1,
    };
    let s_indices = s_range
        .filter(|&i| c.a(i - 1) > c.b(i) + shift && c.b(i) + shift > c.a(i))
        .collect();
    let r_indices = (1..=l)
        .filter(|&i| c.b(i + 1) + shift < c.a(i) && c.a(i) < c.b(i) + shift)
        .collect();
    AsymIndexSets {
        r_indices,
        s_indices,
        exists: true,
    }
}

fn from_coords(arms: Vec<i64>, legs: Vec<i64>) -> Result<Partition> {
    let to_usize = |v: Vec<i64>| -> Result<Vec<usize>> {
        v.into_iter()
            .map(|x| usize::try_from(x).map_err(|_| Error::Invariant(format!("negative Frobenius entry {x}"))))
            .collect()
    };
    Partition::from_frobenius(&FrobeniusCoords::new(to_usize(arms)?, to_usize(legs)?)?)
}

/// `R(μ)`: the free indices at which `μ` takes the smaller of its two options.
fn down_choices(sign: AsymSign, lambda: &Coords, sets: &AsymIndexSets, mu: &Partition) -> BTreeSet<usize> {
    let f = Coords::of(mu);
    // μ = (d | d+1) or (d+1 | d); read d, padding with −1
    let d = |i: usize| -> i64 {
        if i > f.l() {
            -1
        } else {
            match sign {
                AsymSign::Plus => f.arms[i - 1],
                AsymSign::Minus => f.legs[i - 1],
            }
        }
    };
    let low = match sign {
        AsymSign::Plus => 1,
        AsymSign::Minus => 2,
    };
    sets.r_indices
        .iter()
        .copied()
        .filter(|&i| d(i) == lambda.a(i) - low)
        .collect()
}

/// `S(ν)`: the free indices at which `ν` takes the larger option.
fn up_choices(sign: AsymSign, lambda: &Coords, sets: &AsymIndexSets, nu: &Partition) -> BTreeSet<usize> {
    let f = Coords::of(nu);
    let c = |i: usize| -> i64 {
        if i > f.l() {
            -1
        } else {
            match sign {
                AsymSign::Plus => f.arms[i - 1],
                AsymSign::Minus => f.legs[i - 1],
            }
        }
    };
    let high = match sign {
        AsymSign::Plus => 0,
        AsymSign::Minus => 1,
    };
    sets.s_indices
        .iter()
        .copied()
        .filter(|&i| c(i) == lambda.b(i) + high)
        .collect()
}

/// The asymmetric `μ` with `R(μ) = chosen`.
fn build_down(sign: AsymSign, lambda: &Coords, chosen: &BTreeSet<usize>) -> Result<Partition> {
    let (shift, low) = match sign {
        AsymSign::Plus => (0, 1),
        AsymSign::Minus => (2, 2),
    };
    let mut d = Vec::new();
    for i in 1..=lambda.l() {
        let a = lambda.a(i);
        let v = if a == lambda.b(i) + shift {
            a - low
        } else if a == lambda.b(i + 1) + shift {
            a - low + 1
        } else if a < lambda.b(i + 1) + shift {
            // only the last arm, of length 0, in the (−1) case
            -1
        } else if chosen.contains(&i) {
            a - low
        } else {
            a - low + 1
        };
        if v >= 0 {
            d.push(v);
        }
    }
    let e: Vec<i64> = d.iter().map(|x| x + 1).collect();
    match sign {
        AsymSign::Plus => from_coords(d, e),
        AsymSign::Minus => from_coords(e, d),
    }
}

/// The asymmetric `ν` with `S(ν) = chosen`.
fn build_up(sign: AsymSign, lambda: &Coords, chosen: &BTreeSet<usize>) -> Result<Partition> {
    let (shift, high) = match sign {
        AsymSign::Plus => (0, 0),
        AsymSign::Minus => (2, 1),
    };
    let top = match sign {
        AsymSign::Plus => lambda.l(),
        AsymSign::Minus => lambda.l() + 1,
    };
    let mut c = Vec::new();
    for i in 1..=top {
        let b = lambda.b(i);
        let v = if b + shift == lambda.a(i) {
            b + high
        } else if b + shift == lambda.a(i - 1) {
            b + high - 1
        } else if chosen.contains(&i) {
            b + high
        } else {
            b + high - 1
        };
        if v >= 0 {
            c.push(v);
        }
    }
    let e: Vec<i64> = c.iter().map(|x| x + 1).collect();
    match sign {
        AsymSign::Plus => from_coords(c, e),
        AsymSign::Minus => from_coords(e, c),
    }
}

/// Transports `R(μ)` to `S(ν)`. `grow` is true when `ν` has one more free
/// choice taken than `μ`, which only happens in the (−1) case.
fn transport(variant: ProjVariant, sets: &AsymIndexSets, r: &BTreeSet<usize>, grow: bool) -> Result<BTreeSet<usize>> {
    let rs = &sets.r_indices;
    let ss = &sets.s_indices;
    // index of each chosen r in R, 0-based
    let picked: Vec<usize> = rs
        .iter()
        .enumerate()
        .filter(|(_, x)| r.contains(x))
        .map(|(i, _)| i)
        .collect();
    let plus = ss.len() == rs.len();
    let mut out = BTreeSet::new();
    match (variant, plus) {
        (ProjVariant::RowStar, true) => {
            out.extend(picked.iter().map(|&i| ss[i]));
        }
        (ProjVariant::RowStar, false) => {
            // r_i ↦ s_i with S = s_0..s_n
            out.extend(picked.iter().map(|&i| ss[i + 1]));
            if grow {
                out.insert(ss[0]);
            }
        }
        (ProjVariant::ColStar, false) => {
            out.extend(picked.iter().map(|&i| ss[i]));
            if grow {
                out.insert(ss[ss.len() - 1]);
            }
        }
        _ => return domain(format!("projection variant {variant:?} does not apply here")),
    }
    Ok(out)
}

/// Inverse of [`transport`]; returns `R(μ)`.
fn transport_back(variant: ProjVariant, sets: &AsymIndexSets, s: &BTreeSet<usize>) -> Result<BTreeSet<usize>> {
    let rs = &sets.r_indices;
    let ss = &sets.s_indices;
    let picked: Vec<usize> = ss
        .iter()
        .enumerate()
        .filter(|(_, x)| s.contains(x))
        .map(|(i, _)| i)
        .collect();
    let plus = ss.len() == rs.len();
    let out = match (variant, plus) {
        (ProjVariant::RowStar, true) => picked.iter().map(|&i| rs[i]).collect(),
        (ProjVariant::RowStar, false) => picked.iter().filter(|&&i| i > 0).map(|&i| rs[i - 1]).collect(),
        (ProjVariant::ColStar, false) => picked.iter().filter(|&&i| i < rs.len()).map(|&i| rs[i]).collect(),
        _ => return domain(format!("projection variant {variant:?} does not apply here")),
    };
    Ok(out)
}

fn asym_apply(pf: ProjFamily, lambda: &Partition, k: usize, mu: &Partition) -> Result<Partition> {
    let sign = AsymSign::of(pf.family).expect("asymmetric family");
    let sets = asym_indices(lambda, sign);
    if !sets.exists {
        return domain(format!("{lambda} has no {} neighbours", pf.family));
    }
    let coords = Coords::of(lambda);
    let r = down_choices(sign, &coords, &sets, mu);
    let grow = lambda.size() - mu.size() + 2 == k;
    let s = transport(pf.variant, &sets, &r, grow)?;
    build_up(sign, &coords, &s)
}

fn asym_unapply(pf: ProjFamily, lambda: &Partition, nu: &Partition) -> Result<Partition> {
    let sign = AsymSign::of(pf.family).expect("asymmetric family");
    let sets = asym_indices(lambda, sign);
    if !sets.exists {
        return domain(format!("{lambda} has no {} neighbours", pf.family));
    }
    let coords = Coords::of(lambda);
    let s = up_choices(sign, &coords, &sets, nu);
    let r = transport_back(pf.variant, &sets, &s)?;
    build_down(sign, &coords, &r)
}

/// Removes one cell from every column of odd length.
fn trim_odd_columns(lambda: &Partition) -> Partition {
    let conj: Vec<usize> = lambda.conjugate().parts().iter().map(|&c| c - c % 2).collect();
    Partition::from_sorted(conj).conjugate()
}

/// Adds one cell on top of every column of odd length.
fn fill_odd_columns(lambda: &Partition) -> Partition {
    let conj: Vec<usize> = lambda.conjugate().parts().iter().map(|&c| c + c % 2).collect();
    Partition::from_sorted(conj).conjugate()
}

/// `ν ∈ U_X(λ,k)` paired with `μ` by the projection map.
pub fn proj_apply(pf: ProjFamily, lambda: &Partition, k: usize, mu: &Partition) -> Result<Partition> {
    if !in_domain(pf.family, lambda, k, mu) {
        return domain(format!(
            "{mu} is not in the {} projection domain of {lambda} for k = {k}",
            pf.family
        ));
    }
    let nu = match (pf.family, pf.variant) {
        (Family::All, ProjVariant::Inherit(rule)) => apply_rule(rule, lambda, lambda, k, mu)?,
        (Family::EvenRows, ProjVariant::Inherit(rule)) => {
            // k = 2k' + odd(λ)
            let odd = lambda.odd_parts();
            if k < odd || (k - odd) % 2 == 1 {
                return domain(format!("no even-row strip of size {k} over {lambda}"));
            }
            let (lo, hi) = (lambda.floor_half(), lambda.ceil_half());
            let half = apply_rule(rule, &lo, &hi, (k - odd) / 2, &phi(mu, PhiDirection::Halve)?)?;
            phi(&half, PhiDirection::Double)?
        }
        (Family::EvenColumns, _) => fill_odd_columns(lambda),
        (Family::AsymPlus | Family::AsymMinus, _) => asym_apply(pf, lambda, k, mu)?,
        _ => return validation(format!("projection variant {:?} is not available for {}", pf.variant, pf.family)),
    };
    if !member(&nu, pf.family) || !is_strip(lambda, &nu, false) || nu.size() != lambda.size() + k {
        return Err(Error::Invariant(format!(
            "{} projection sent {mu} to {nu}, outside U({lambda}, {k})",
            pf.family
        )));
    }
    Ok(nu)
}

/// Inverse of [`proj_apply`] with `k = |ν/λ|`. Returns `(μ, k − |λ/μ|)`.
pub fn proj_unapply(pf: ProjFamily, lambda: &Partition, nu: &Partition) -> Result<(Partition, usize)> {
    if !member(nu, pf.family) || !is_strip(lambda, nu, false) {
        return domain(format!("{nu} is not a {} strip extension of {lambda}", pf.family));
    }
    let k = nu.size() - lambda.size();
    let mu = match (pf.family, pf.variant) {
        (Family::All, ProjVariant::Inherit(rule)) => unapply_rule(rule, lambda, lambda, nu)?.0,
        (Family::EvenRows, ProjVariant::Inherit(rule)) => {
            let (lo, hi) = (lambda.floor_half(), lambda.ceil_half());
            let (half, _) = unapply_rule(rule, &lo, &hi, &phi(nu, PhiDirection::Halve)?)?;
            phi(&half, PhiDirection::Double)?
        }
        (Family::EvenColumns, _) => trim_odd_columns(lambda),
        (Family::AsymPlus | Family::AsymMinus, _) => asym_unapply(pf, lambda, nu)?,
        _ => return validation(format!("projection variant {:?} is not available for {}", pf.variant, pf.family)),
    };
    if !in_domain(pf.family, lambda, k, &mu) {
        return Err(Error::Invariant(format!(
            "{} projection inverse sent {nu} to {mu}, outside its domain",
            pf.family
        )));
    }
    Ok((mu.clone(), k - (lambda.size() - mu.size())))
}
