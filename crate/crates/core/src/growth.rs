//! Rectangular growth diagrams and the RSK-type correspondences they induce.
//!
//! Vertices use matrix coordinates: `(i, j)` with `i` counting rows
//! downward and `j` counting columns to the right. In a square
//!
//! ```text
//!   μ ─── ρ
//!   │     │
//!   λ ─── ν
//! ```
//! the vertical steps `μ → λ` and `ρ → ν` are horizontal strips, and the
//! horizontal steps `μ → ρ` and `λ → ν` are horizontal strips (vertical
//! strips in a dual growth).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{validation, Error, Result};
use crate::partition::{is_strip, partitions_of, Partition};
use crate::rules::{apply_rule, unapply_rule, RuleId};
use crate::tableau::{StepKind, TableauChain};

/// A matrix of non-negative integers, serialized as an array of rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for IntMatrix {
    type Error = Error;

    fn try_from(entries: Vec<Vec<usize>>) -> Result<Self> {
        IntMatrix::new(entries)
    }
}

impl From<IntMatrix> for Vec<Vec<usize>> {
    fn from(m: IntMatrix) -> Self {
        m.entries
    }
}

impl IntMatrix {
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        if let Some(i) = entries.iter().position(|r| r.len() != cols) {
            return validation(format!(
                "matrix row {} has {} entries, expected {cols}",
                i + 1,
                entries[i].len()
            ));
        }
        Ok(IntMatrix {
            rows: entries.len(),
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![vec![0; cols]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry in row `i`, column `j`, both starting at 1.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, value: usize) {
        self.entries[i - 1][j - 1] = value;
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn is_binary(&self) -> bool {
        self.entries.iter().flatten().all(|&a| a <= 1)
    }

    pub fn total(&self) -> usize {
        self.entries.iter().flatten().sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: (0..self.cols)
                .map(|j| (0..self.rows).map(|i| self.entries[i][j]).collect())
                .collect(),
        }
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|j| self.entries.iter().map(|r| r[j]).sum())
            .collect()
    }
}

/// Two-line array of `A`: each pair `(j over i)` appears `A_{i,j}` times,
/// columns read left to right, each column top to bottom.
pub fn biword(a: &IntMatrix) -> (Vec<usize>, Vec<usize>) {
    let (mut top, mut bottom) = (Vec::new(), Vec::new());
    for j in 1..=a.cols() {
        for i in 1..=a.rows() {
            for _ in 0..a.get(i, j) {
                top.push(j);
                bottom.push(i);
            }
        }
    }
    (top, bottom)
}

/// Border chains of a skew growth: `left` labels the first column
/// `Λ_{i,0}`, `top` labels the first row `Λ_{0,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Borders {
    pub left: TableauChain,
    pub top: TableauChain,
}

impl Borders {
    /// Borders made of empty partitions.
    pub fn trivial(n: usize, m: usize, dual: bool) -> Self {
        Borders {
            left: TableauChain::constant(Partition::empty(), n, StepKind::Horizontal),
            top: TableauChain::constant(Partition::empty(), m, StepKind::from_vertical(dual)),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.left.shape().is_empty() && self.top.shape().is_empty()
    }

    fn check(&self, n: usize, m: usize, dual: bool) -> Result<()> {
        if self.left.n() != n || self.top.n() != m {
            return validation(format!(
                "borders have lengths {} and {}, matrix is {n}×{m}",
                self.left.n(),
                self.top.n()
            ));
        }
        if self.left.steps() != StepKind::Horizontal {
            return validation("the left border must have horizontal steps");
        }
        if self.top.steps() != StepKind::from_vertical(dual) {
            return validation(format!(
                "the top border must have {} steps",
                if dual { "vertical" } else { "horizontal" }
            ));
        }
        if self.left.inner() != self.top.inner() {
            return validation(format!(
                "borders start at different partitions {} and {}",
                self.left.inner(),
                self.top.inner()
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrowthGrid {
    /// `vertices[i][j] = Λ_{i,j}` for `0 ≤ i ≤ n`, `0 ≤ j ≤ m`.
    pub vertices: Vec<Vec<Partition>>,
    pub matrix: IntMatrix,
    pub dual: bool,
}

impl GrowthGrid {
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn m(&self) -> usize {
        self.matrix.cols()
    }

    pub fn get(&self, i: usize, j: usize) -> &Partition {
        &self.vertices[i][j]
    }

    /// Checks every condition of a (dual) growth with the grid's own
    /// borders: strip steps in both directions and the size law
    /// `|Λ_{i,j}| = |Λ_{i,0}| + |Λ_{0,j}| − |Λ_{0,0}| + Σ_{k≤i,l≤j} A_{k,l}`.
    pub fn is_growth(&self) -> bool {
        let (n, m) = (self.n(), self.m());
        if self.vertices.len() != n + 1 || self.vertices.iter().any(|r| r.len() != m + 1) {
            return false;
        }
        if self.dual && !self.matrix.is_binary() {
            return false;
        }
        let corner = self.get(0, 0).size();
        let mut block = vec![vec![0usize; m + 1]; n + 1];
        for i in 0..=n {
            for j in 0..=m {
                if i > 0 && j > 0 {
                    block[i][j] = block[i - 1][j] + block[i][j - 1] - block[i - 1][j - 1]
                        + self.matrix.get(i, j);
                }
                let v = self.get(i, j);
                if v.size() + corner != self.get(i, 0).size() + self.get(0, j).size() + block[i][j] {
                    return false;
                }
                if i > 0 && !is_strip(self.get(i - 1, j), v, false) {
                    return false;
                }
                if j > 0 && !is_strip(self.get(i, j - 1), v, self.dual) {
                    return false;
                }
            }
        }
        true
    }

    pub fn borders(&self) -> Borders {
        let steps = StepKind::from_vertical(self.dual);
        Borders {
            left: TableauChain::new(
                (0..=self.n()).map(|i| self.get(i, 0).clone()).collect(),
                StepKind::Horizontal,
            )
            .expect("grid columns are horizontal chains"),
            top: TableauChain::new(self.vertices[0].clone(), steps).expect("grid rows are chains"),
        }
    }
}

impl fmt::Display for GrowthGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::render_grid(&self.vertices, |i, j| self.matrix.get(i, j)))
    }
}

/// Fills the grid square by square, row-major, with
/// `ν = F_{λ,ρ,k}(μ)` and `k = |(λ∩ρ)/μ| + A_{i,j}`.
pub fn build_growth(rule: RuleId, a: &IntMatrix, borders: Option<&Borders>) -> Result<GrowthGrid> {
    let (n, m) = (a.rows(), a.cols());
    let dual = rule.is_dual();
    if dual && !a.is_binary() {
        return validation("dual rules need a {0,1}-matrix");
    }
    let trivial;
    let borders = match borders {
        Some(b) => b,
        None => {
            trivial = Borders::trivial(n, m, dual);
            &trivial
        }
    };
    borders.check(n, m, dual)?;
    let mut v = vec![vec![Partition::empty(); m + 1]; n + 1];
    for (i, row) in v.iter_mut().enumerate() {
        row[0] = borders.left.level(i).clone();
    }
    for (j, cell) in v[0].iter_mut().enumerate() {
        *cell = borders.top.level(j).clone();
    }
    for i in 1..=n {
        for j in 1..=m {
            let mu = &v[i - 1][j - 1];
            let lambda = &v[i][j - 1];
            let rho = &v[i - 1][j];
            let k = lambda.meet(rho).size() - mu.size() + a.get(i, j);
            v[i][j] = apply_rule(rule, lambda, rho, k, mu)?;
        }
    }
    Ok(GrowthGrid {
        vertices: v,
        matrix: a.clone(),
        dual,
    })
}

/// `P` reads the last column top to bottom, `Q` the last row left to right.
pub fn extract_pq(g: &GrowthGrid) -> (TableauChain, TableauChain) {
    let (n, m) = (g.n(), g.m());
    let p = TableauChain::new(
        (0..=n).map(|i| g.get(i, m).clone()).collect(),
        StepKind::Horizontal,
    )
    .expect("grid columns are horizontal chains");
    let q = TableauChain::new(g.vertices[n].clone(), StepKind::from_vertical(g.dual))
        .expect("grid rows are chains of the grid's kind");
    (p, q)
}

pub fn rsk(rule: RuleId, a: &IntMatrix, borders: Option<&Borders>) -> Result<(TableauChain, TableauChain)> {
    Ok(extract_pq(&build_growth(rule, a, borders)?))
}

/// Rebuilds the grid from its last column `P` and last row `Q`, sweeping
/// columns from the right and each column from the bottom.
pub fn inverse_growth(rule: RuleId, p: &TableauChain, q: &TableauChain) -> Result<GrowthGrid> {
    let dual = rule.is_dual();
    if p.steps() != StepKind::Horizontal {
        return validation("P must have horizontal steps");
    }
    if q.steps() != StepKind::from_vertical(dual) {
        return validation(format!(
            "Q must have {} steps for rule {rule}",
            if dual { "vertical" } else { "horizontal" }
        ));
    }
    if p.shape() != q.shape() {
        return validation(format!(
            "P and Q have different shapes {} and {}",
            p.shape(),
            q.shape()
        ));
    }
    let (n, m) = (p.n(), q.n());
    let mut v = vec![vec![Partition::empty(); m + 1]; n + 1];
    for (i, row) in v.iter_mut().enumerate() {
        row[m] = p.level(i).clone();
    }
    for (j, cell) in v[n].iter_mut().enumerate() {
        *cell = q.level(j).clone();
    }
    let mut a = IntMatrix::zeros(n, m);
    for j in (1..=m).rev() {
        for i in (1..=n).rev() {
            let (mu, entry) = unapply_rule(rule, &v[i][j - 1], &v[i - 1][j], &v[i][j])?;
            v[i - 1][j - 1] = mu;
            a.set(i, j, entry);
        }
    }
    let g = GrowthGrid {
        vertices: v,
        matrix: a,
        dual,
    };
    // the recovered borders must themselves be chains
    for i in 1..=n {
        if !is_strip(g.get(i - 1, 0), g.get(i, 0), false) {
            return validation("P and Q are not the output of a growth");
        }
    }
    for j in 1..=m {
        if !is_strip(g.get(0, j - 1), g.get(0, j), dual) {
            return validation("P and Q are not the output of a growth");
        }
    }
    Ok(g)
}

pub fn rsk_inverse(rule: RuleId, p: &TableauChain, q: &TableauChain) -> Result<(IntMatrix, Borders)> {
    let g = inverse_growth(rule, p, q)?;
    let borders = g.borders();
    Ok((g.matrix, borders))
}

/// Every growth (or dual growth) of `A` with empty borders, found by
/// backtracking over all partitions of the sizes the size law prescribes.
pub fn enumerate_growths(a: &IntMatrix, dual: bool) -> Vec<GrowthGrid> {
    let (n, m) = (a.rows(), a.cols());
    let mut sizes = vec![vec![0usize; m + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=m {
            sizes[i][j] = sizes[i - 1][j] + sizes[i][j - 1] - sizes[i - 1][j - 1] + a.get(i, j);
        }
    }
    if dual && !a.is_binary() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut v = vec![vec![Partition::empty(); m + 1]; n + 1];
    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        n: usize,
        m: usize,
        dual: bool,
        sizes: &[Vec<usize>],
        v: &mut Vec<Vec<Partition>>,
        a: &IntMatrix,
        out: &mut Vec<GrowthGrid>,
    ) {
        if idx == n * m {
            out.push(GrowthGrid {
                vertices: v.clone(),
                matrix: a.clone(),
                dual,
            });
            return;
        }
        let (i, j) = (idx / m + 1, idx % m + 1);
        for cand in partitions_of(sizes[i][j], usize::MAX, usize::MAX) {
            if is_strip(&v[i - 1][j], &cand, false) && is_strip(&v[i][j - 1], &cand, dual) {
                v[i][j] = cand;
                go(idx + 1, n, m, dual, sizes, v, a, out);
            }
        }
        v[i][j] = Partition::empty();
    }
    if n > 0 && m > 0 {
        go(0, n, m, dual, &sizes, &mut v, a, &mut out);
    } else {
        out.push(GrowthGrid {
            vertices: v,
            matrix: a.clone(),
            dual,
        });
    }
    out
}
