//! Triangular growth diagrams and the Littlewood bijections.
//!
//! Vertices `Λ_{i,j}` live on `0 ≤ i ≤ j ≤ n`. The square with
//! bottom-right corner `(i, j)`, `i < j`, is an ordinary growth square with
//! entry `c_{i,j}`; the diagonal square at `(j, j)` has only three corners
//!
//! ```text
//!   μ ─── λ        μ = Λ_{j−1,j−1}, λ = Λ_{j−1,j}, ν = Λ_{j,j}
//!         │
//!         ν
//! ```
//!
//! and is filled by a projection map with `k = |λ/μ| + c_{j,j}`. Steps down
//! a column are horizontal strips; steps along a row are horizontal strips,
//! or vertical strips in a dual diagram.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, validation, Error, Result};
use crate::growth::IntMatrix;
use crate::insertion::insert;
use crate::interlacing::PositionMultiset;
use crate::partition::{is_strip, member, partitions_of, Family, Partition};
use crate::projection::{proj_apply, proj_unapply, ProjFamily, ProjVariant};
use crate::rules::{apply_rule, unapply_rule, RuleId};
use crate::tableau::{StepKind, TableauChain};

/// A family together with the local rules used to build its diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LittlewoodVariant {
    pub family: Family,
    pub base_rule: RuleId,
    pub proj: ProjFamily,
}

impl LittlewoodVariant {
    /// The pairings matching the classical insertion algorithms: row
    /// insertion for even columns and all partitions, column insertion for
    /// even rows, dual row insertion for 1-asymmetric and dual column
    /// insertion for (−1)-asymmetric shapes.
    pub fn canonical(family: Family) -> Self {
        let (base_rule, variant) = match family {
            Family::EvenColumns | Family::All => (RuleId::Row, ProjVariant::Inherit(RuleId::Row)),
            Family::EvenRows => (RuleId::Col, ProjVariant::Inherit(RuleId::Col)),
            Family::AsymPlus => (RuleId::DualRow, ProjVariant::RowStar),
            Family::AsymMinus => (RuleId::DualCol, ProjVariant::RowStar),
        };
        LittlewoodVariant {
            family,
            base_rule,
            proj: ProjFamily { family, variant },
        }
    }

    pub fn with_rules(family: Family, base_rule: RuleId, variant: ProjVariant) -> Result<Self> {
        if base_rule.is_dual() != family.is_asym() {
            return validation(format!(
                "{family} diagrams need a {} base rule, got {base_rule}",
                if family.is_asym() { "dual" } else { "non-dual" }
            ));
        }
        Ok(LittlewoodVariant {
            family,
            base_rule,
            proj: ProjFamily::new(family, variant)?,
        })
    }

    pub fn is_dual(&self) -> bool {
        self.base_rule.is_dual()
    }

    pub fn border_steps(&self) -> StepKind {
        StepKind::from_vertical(self.is_dual())
    }
}

/// Whether `value` may sit on (or off) the diagonal of a `family` array.
pub fn entry_allowed(family: Family, diagonal: bool, value: usize) -> bool {
    match (family, diagonal) {
        (Family::AsymPlus | Family::AsymMinus, false) => value <= 1,
        (_, false) => true,
        (Family::EvenColumns | Family::AsymPlus, true) => value == 0,
        (Family::All, true) => true,
        (Family::EvenRows, true) => value.is_multiple_of(2),
        (Family::AsymMinus, true) => value == 0 || value == 2,
    }
}

#[derive(Deserialize)]
struct RawArray {
    n: usize,
    rows: Vec<Vec<usize>>,
    variant: Family,
}

/// Entries `c_{i,j}`, `1 ≤ i ≤ j ≤ n`. `rows[i−1]` lists `c_{i,i}, …, c_{i,n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawArray")]
pub struct TriangularArray {
    n: usize,
    rows: Vec<Vec<usize>>,
    variant: Family,
}

impl TryFrom<RawArray> for TriangularArray {
    type Error = Error;

    fn try_from(raw: RawArray) -> Result<Self> {
        let c = TriangularArray::new(raw.rows, raw.variant)?;
        if c.n != raw.n {
            return validation(format!("n = {} but the array has {} rows", raw.n, c.n));
        }
        Ok(c)
    }
}

impl TriangularArray {
    pub fn new(rows: Vec<Vec<usize>>, variant: Family) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n - i {
                return validation(format!("row {} has {} entries, expected {}", i + 1, row.len(), n - i));
            }
            for (off, &value) in row.iter().enumerate() {
                if !entry_allowed(variant, off == 0, value) {
                    return validation(format!(
                        "entry {value} at ({}, {}) is not allowed for {variant}",
                        i + 1,
                        i + 1 + off
                    ));
                }
            }
        }
        Ok(TriangularArray { n, rows, variant })
    }

    pub fn zeros(n: usize, variant: Family) -> Self {
        TriangularArray {
            n,
            rows: (0..n).map(|i| vec![0; n - i]).collect(),
            variant,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Family {
        self.variant
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `c_{i,j}` for `1 ≤ i ≤ j ≤ n`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - i]
    }

    /// Entries `c_{1,j}, …, c_{j,j}` of column `j`.
    pub fn column(&self, j: usize) -> Vec<usize> {
        (1..=j).map(|i| self.get(i, j)).collect()
    }

    /// The symmetric matrix with `A_{i,j} = A_{j,i} = c_{i,j}`.
    pub fn symmetric(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n, self.n);
        for i in 1..=self.n {
            for j in i..=self.n {
                a.set(i, j, self.get(i, j));
                a.set(j, i, self.get(i, j));
            }
        }
        a
    }

    /// Cells added to the diagram: twice the off-diagonal sum plus the
    /// diagonal sum.
    pub fn weight_size(&self) -> usize {
        (1..=self.n)
            .flat_map(|i| (i..=self.n).map(move |j| (i, j)))
            .map(|(i, j)| if i == j { self.get(i, j) } else { 2 * self.get(i, j) })
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriGrid {
    /// `vertices[i][j − i] = Λ_{i,j}`.
    pub vertices: Vec<Vec<Partition>>,
    pub array: TriangularArray,
    pub dual: bool,
}

impl TriGrid {
    pub fn n(&self) -> usize {
        self.array.n()
    }

    pub fn get(&self, i: usize, j: usize) -> &Partition {
        &self.vertices[i][j - i]
    }

    /// The first row `Λ_{0,0}, …, Λ_{0,n}`.
    pub fn border(&self) -> TableauChain {
        TableauChain::new(self.vertices[0].clone(), StepKind::from_vertical(self.dual))
            .expect("the first row of a triangular grid is a chain")
    }

    /// Checks the strip conditions and the size law
    /// `|Λ_{i,j}| = |Λ_{0,i}| + |Λ_{0,j}| − |Λ_{0,0}| + Σ_{k≤i, l≤j} A_{k,l}`
    /// with `A` the symmetric matrix of the array.
    #[allow(clippy::needless_range_loop)]
    pub fn is_growth(&self) -> bool {
        let n = self.n();
        if self.vertices.len() != n + 1 || (0..=n).any(|i| self.vertices[i].len() != n + 1 - i) {
            return false;
        }
        let a = self.array.symmetric();
        let corner = self.get(0, 0).size();
        let mut block = vec![vec![0usize; n + 1]; n + 1];
        for i in 1..=n {
            for j in 1..=n {
                block[i][j] = block[i - 1][j] + block[i][j - 1] - block[i - 1][j - 1] + a.get(i, j);
            }
        }
        for j in 0..=n {
            for i in 0..=j {
                let v = self.get(i, j);
                if v.size() + corner != self.get(0, i).size() + self.get(0, j).size() + block[i][j] {
                    return false;
                }
                if i > 0 && !is_strip(self.get(i - 1, j), v, false) {
                    return false;
                }
                if j > i && !is_strip(self.get(i, j - 1), v, self.dual) {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for TriGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let labels: Vec<Vec<Option<Partition>>> = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| (j >= i).then(|| self.get(i, j).clone()))
                    .collect()
            })
            .collect();
        f.write_str(&crate::render::render_labels(&labels, |i, j| {
            (i <= j).then(|| self.array.get(i, j))
        }))
    }
}

fn check_border(v: &LittlewoodVariant, n: usize, border: &TableauChain) -> Result<()> {
    if border.n() != n {
        return validation(format!("border has {} steps, array has n = {n}", border.n()));
    }
    if border.steps() != v.border_steps() {
        return validation(format!(
            "{} diagrams need a border with {} steps",
            v.family,
            if v.is_dual() { "vertical" } else { "horizontal" }
        ));
    }
    if !member(border.inner(), v.family) {
        return validation(format!("border starts at {}, which is not in {}", border.inner(), v.family));
    }
    Ok(())
}

/// Fills the diagram column by column from the left, each column from the
/// top with the diagonal square last. `border` prescribes the first row;
/// by default it is empty.
pub fn build_triangular(v: &LittlewoodVariant, c: &TriangularArray, border: Option<&TableauChain>) -> Result<TriGrid> {
    if c.variant() != v.family {
        return validation(format!("array is for {} but the variant is {}", c.variant(), v.family));
    }
    let n = c.n();
    let first_row = match border {
        Some(b) => {
            check_border(v, n, b)?;
            b.chain().to_vec()
        }
        None => vec![Partition::empty(); n + 1],
    };
    let mut vertices: Vec<Vec<Partition>> = (0..=n).map(|i| vec![Partition::empty(); n + 1 - i]).collect();
    vertices[0] = first_row;
    for j in 1..=n {
        for i in 1..j {
            let mu = &vertices[i - 1][j - i];
            let lambda = &vertices[i][j - 1 - i];
            let rho = &vertices[i - 1][j - i + 1];
            let k = lambda.meet(rho).size() - mu.size() + c.get(i, j);
            vertices[i][j - i] = apply_rule(v.base_rule, lambda, rho, k, mu)?;
        }
        let mu = &vertices[j - 1][0];
        let lambda = &vertices[j - 1][1];
        let k = lambda.size() - mu.size() + c.get(j, j);
        vertices[j][0] = proj_apply(v.proj, lambda, k, mu)?;
    }
    Ok(TriGrid {
        vertices,
        array: c.clone(),
        dual: v.is_dual(),
    })
}

/// `P` reads the last column top to bottom.
pub fn extract_p(g: &TriGrid) -> TableauChain {
    let n = g.n();
    TableauChain::new((0..=n).map(|i| g.get(i, n).clone()).collect(), StepKind::Horizontal)
        .expect("columns of a triangular grid are horizontal chains")
}

pub fn littlewood_map(v: &LittlewoodVariant, c: &TriangularArray, border: Option<&TableauChain>) -> Result<TableauChain> {
    Ok(extract_p(&build_triangular(v, c, border)?))
}

/// Rebuilds the diagram from its last column, sweeping columns from the
/// right; in each column the diagonal square is undone first, then the
/// full squares from the bottom up.
pub fn inverse_triangular(v: &LittlewoodVariant, p: &TableauChain) -> Result<TriGrid> {
    if p.steps() != StepKind::Horizontal {
        return validation("P must have horizontal steps");
    }
    if !member(p.shape(), v.family) {
        return domain(format!("shape {} of P is not in {}", p.shape(), v.family));
    }
    let n = p.n();
    let mut vertices: Vec<Vec<Partition>> = (0..=n).map(|i| vec![Partition::empty(); n + 1 - i]).collect();
    for i in 0..=n {
        vertices[i][n - i] = p.level(i).clone();
    }
    let mut rows: Vec<Vec<usize>> = (0..n).map(|i| vec![0; n - i]).collect();
    for j in (1..=n).rev() {
        let (mu, entry) = proj_unapply(v.proj, &vertices[j - 1][1], &vertices[j][0])?;
        vertices[j - 1][0] = mu;
        rows[j - 1][0] = entry;
        for i in (1..j).rev() {
            let (mu, entry) = unapply_rule(v.base_rule, &vertices[i][j - 1 - i], &vertices[i - 1][j - i + 1], &vertices[i][j - i])?;
            vertices[i - 1][j - i] = mu;
            rows[i - 1][j - i] = entry;
        }
    }
    let array = TriangularArray::new(rows, v.family)
        .map_err(|e| Error::Invariant(format!("inverse produced an invalid array: {e}")))?;
    let g = TriGrid {
        vertices,
        array,
        dual: v.is_dual(),
    };
    TableauChain::new(g.vertices[0].clone(), v.border_steps())
        .map_err(|_| Error::Validation("P does not come from a triangular diagram".into()))?;
    Ok(g)
}

/// Inverse of [`littlewood_map`]. The border is `None` when it is empty.
pub fn littlewood_inverse(v: &LittlewoodVariant, p: &TableauChain) -> Result<(TriangularArray, Option<TableauChain>)> {
    let g = inverse_triangular(v, p)?;
    let border = g.border();
    let border = (!border.shape().is_empty()).then_some(border);
    Ok((g.array, border))
}

/// Adds column `i = T.n() + 1` of an array to the tableau built from the
/// first `i − 1` columns. The off-diagonal entries `c_{1,i}, …, c_{i−1,i}`
/// are inserted with the base rule, then the cells of the projection image
/// receive the entry `i`. The border is taken to be constant.
pub fn triangular_insert(v: &LittlewoodVariant, t: &TableauChain, column: &[usize]) -> Result<TableauChain> {
    let i = t.n() + 1;
    if column.len() != i {
        return validation(format!("column {i} needs {i} entries, got {}", column.len()));
    }
    for (r, &value) in column.iter().enumerate() {
        if !entry_allowed(v.family, r + 1 == i, value) {
            return validation(format!("entry {value} at ({}, {i}) is not allowed for {}", r + 1, v.family));
        }
    }
    let mut values = PositionMultiset::new();
    for (r, &value) in column[..i - 1].iter().enumerate() {
        values.add(r + 1, value);
    }
    let inserted = insert(v.base_rule, t, &values)?;
    let mu = t.shape();
    let lambda = inserted.shape();
    let k = lambda.size() - mu.size() + column[i - 1];
    let nu = proj_apply(v.proj, lambda, k, mu)?;
    let mut chain = inserted.chain().to_vec();
    chain.push(nu);
    TableauChain::new(chain, StepKind::Horizontal)
}

/// Every triangular (dual) growth of `c` with empty first row, by
/// backtracking over the partitions of the sizes the size law prescribes.
pub fn enumerate_triangular(c: &TriangularArray, dual: bool) -> Vec<TriGrid> {
    let n = c.n();
    let a = c.symmetric();
    let mut sizes = vec![vec![0usize; n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            sizes[i][j] = sizes[i - 1][j] + sizes[i][j - 1] - sizes[i - 1][j - 1] + a.get(i, j);
        }
    }
    let cells: Vec<(usize, usize)> = (1..=n).flat_map(|j| (1..=j).map(move |i| (i, j))).collect();
    let mut vertices: Vec<Vec<Partition>> = (0..=n).map(|i| vec![Partition::empty(); n + 1 - i]).collect();
    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        sizes: &[Vec<usize>],
        dual: bool,
        vertices: &mut Vec<Vec<Partition>>,
        c: &TriangularArray,
        out: &mut Vec<TriGrid>,
    ) {
        if idx == cells.len() {
            out.push(TriGrid {
                vertices: vertices.clone(),
                array: c.clone(),
                dual,
            });
            return;
        }
        let (i, j) = cells[idx];
        for cand in partitions_of(sizes[i][j], usize::MAX, usize::MAX) {
            let above = &vertices[i - 1][j - i + 1];
            let ok_left = i == j || is_strip(&vertices[i][j - 1 - i], &cand, dual);
            if ok_left && is_strip(above, &cand, false) {
                vertices[i][j - i] = cand;
                go(idx + 1, cells, sizes, dual, vertices, c, out);
            }
        }
        vertices[i][j - i] = Partition::empty();
    }
    go(0, &cells, &sizes, dual, &mut vertices, c, &mut out);
    out
}
