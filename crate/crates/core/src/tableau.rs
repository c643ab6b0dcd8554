//! Tableaux as chains of partitions.
//!
//! A chain `Λ^(0) ⊆ Λ^(1) ⊆ … ⊆ Λ^(n)` whose steps are horizontal strips is
//! a semistandard tableau with entries in `1..=n` (skew when `Λ^(0)` is not
//! empty); with vertical steps it is a dual semistandard tableau. Entry `i`
//! fills the cells of `Λ^(i) / Λ^(i−1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{validation, Error, Result};
use crate::partition::{is_strip, strips_removed, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepKind {
    Horizontal,
    Vertical,
}

impl StepKind {
    pub fn is_vertical(self) -> bool {
        self == StepKind::Vertical
    }

    pub fn from_vertical(vertical: bool) -> Self {
        if vertical {
            StepKind::Vertical
        } else {
            StepKind::Horizontal
        }
    }
}

#[derive(Deserialize)]
struct RawChain {
    chain: Vec<Partition>,
    steps: StepKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawChain")]
pub struct TableauChain {
    chain: Vec<Partition>,
    steps: StepKind,
}

impl TryFrom<RawChain> for TableauChain {
    type Error = Error;

    fn try_from(raw: RawChain) -> Result<Self> {
        TableauChain::new(raw.chain, raw.steps)
    }
}

impl TableauChain {
    /// Validates that consecutive partitions form strips of the given kind.
    pub fn new(chain: Vec<Partition>, steps: StepKind) -> Result<Self> {
        if chain.is_empty() {
            return validation("a tableau chain needs at least one partition");
        }
        for (i, w) in chain.windows(2).enumerate() {
            if !is_strip(&w[0], &w[1], steps.is_vertical()) {
                return validation(format!(
                    "step {} of the chain, {} to {}, is not a {} strip",
                    i + 1,
                    w[0],
                    w[1],
                    if steps.is_vertical() { "vertical" } else { "horizontal" }
                ));
            }
        }
        Ok(TableauChain { chain, steps })
    }

    /// The tableau with no entries: `n + 1` copies of `inner`.
    pub fn constant(inner: Partition, n: usize, steps: StepKind) -> Self {
        TableauChain {
            chain: vec![inner; n + 1],
            steps,
        }
    }

    /// Reads a filling given row by row from the bottom. Entries are in
    /// `1..=n`; zeros mark the cells of the inner shape of a skew tableau.
    pub fn from_rows(rows: &[Vec<usize>], n: usize, steps: StepKind) -> Result<Self> {
        let mut chain = Vec::with_capacity(n + 1);
        for bound in 0..=n {
            let mut parts = Vec::new();
            for (r, row) in rows.iter().enumerate() {
                if let Some(&bad) = row.iter().find(|&&v| v > n) {
                    return validation(format!("entry {bad} in row {} exceeds n = {n}", r + 1));
                }
                // cells holding values ≤ bound must be an initial segment
                let len = row.iter().take_while(|&&v| v <= bound).count();
                if row[len..].iter().any(|&v| v <= bound) {
                    return validation(format!("row {} is not weakly increasing", r + 1));
                }
                parts.push(len);
            }
            chain.push(Partition::new(parts).map_err(|_| {
                Error::Validation(format!(
                    "cells with entries at most {bound} do not form a partition"
                ))
            })?);
        }
        TableauChain::new(chain, steps)
    }

    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    pub fn steps(&self) -> StepKind {
        self.steps
    }

    /// Largest admissible entry.
    pub fn n(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn shape(&self) -> &Partition {
        self.chain.last().expect("chain is non-empty")
    }

    pub fn inner(&self) -> &Partition {
        &self.chain[0]
    }

    pub fn level(&self, i: usize) -> &Partition {
        &self.chain[i]
    }

    /// Number of entries equal to `i`, for `i = 1..=n`.
    pub fn weight(&self) -> Vec<usize> {
        self.chain.windows(2).map(|w| w[1].size() - w[0].size()).collect()
    }

    /// Row-by-row filling from the bottom; inner cells hold 0.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let shape = self.shape();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        for i in 1..=self.n() {
            for cell in self.chain[i].skew_cells(&self.chain[i - 1]) {
                rows[cell.row - 1][cell.column - 1] = i;
            }
        }
        rows
    }
}

impl fmt::Display for TableauChain {
    /// French drawing: the bottom row is printed last.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        if rows.is_empty() {
            return write!(f, "∅");
        }
        let width = self.n().to_string().len();
        for (i, row) in rows.iter().enumerate().rev() {
            let cells: Vec<String> = row
                .iter()
                .map(|&v| {
                    if v == 0 {
                        format!("{:>width$}", "·")
                    } else {
                        format!("{v:>width$}")
                    }
                })
                .collect();
            write!(f, "{}", cells.join(" "))?;
            if i > 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// All tableaux of shape `outer / inner` with entries in `1..=n`, in a
/// deterministic order.
pub fn all_tableaux(inner: &Partition, outer: &Partition, n: usize, steps: StepKind) -> Vec<TableauChain> {
    fn go(
        level: usize,
        top: &Partition,
        inner: &Partition,
        vertical: bool,
        suffix: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if level == 0 {
            if top == inner {
                let mut c = suffix.clone();
                c.push(top.clone());
                c.reverse();
                out.push(c);
            }
            return;
        }
        suffix.push(top.clone());
        for below in strips_removed(top, vertical, Some(inner)) {
            go(level - 1, &below, inner, vertical, suffix, out);
        }
        suffix.pop();
    }
    let mut chains = Vec::new();
    if !outer.contains(inner) {
        return Vec::new();
    }
    go(n, outer, inner, steps.is_vertical(), &mut Vec::new(), &mut chains);
    chains.sort();
    chains
        .into_iter()
        .map(|chain| TableauChain { chain, steps })
        .collect()
}
