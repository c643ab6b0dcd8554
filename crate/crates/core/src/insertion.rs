//! Insertion of a multiset of values into a tableau, done cell by cell with
//! bumping. This computes one column of a growth diagram without building
//! the grid, and is checked against it.
//!
//! For `i = 1, 2, …` the current multiplicity `k` of `i` in the insertion
//! set determines `ν = F_{λ,ρ,k}(μ)` with `μ = T^(i−1)`, `λ = T^(i)` and `ρ`
//! the cells currently holding values below `i`. Every cell of `ν/(λ∪ρ)`
//! receives `i`; a value it held before goes back into the insertion set.

use crate::error::{validation, Error, Result};
use crate::interlacing::PositionMultiset;
use crate::partition::{is_strip, Partition};
use crate::rules::{apply_rule, unapply_rule, RuleId};
use crate::tableau::{StepKind, TableauChain};

/// Inserts the values of `values` (each in `1..=n`) into `t`, whose steps
/// must be horizontal. The result has horizontal steps as well and shares
/// the inner shape of `t`.
pub fn insert(rule: RuleId, t: &TableauChain, values: &PositionMultiset) -> Result<TableauChain> {
    let n = t.n();
    if t.steps() != StepKind::Horizontal {
        return validation("insertion works on tableaux with horizontal steps");
    }
    if let Some(v) = values.max() {
        if v > n || values.min() == Some(0) {
            return validation(format!("insertion values must lie in 1..={n}, got {v}"));
        }
    }
    if rule.is_dual() && !values.is_set() {
        return validation("dual insertion takes a set of values");
    }
    let mut rows = t.rows();
    let mut pending = values.clone();
    for i in 1..=n {
        let k = pending.take_all(i);
        let mu = t.level(i - 1);
        let lambda = t.level(i);
        let rho = shape_below(&rows, i);
        let nu = apply_rule(rule, lambda, &rho, k, mu)?;
        for cell in nu.skew_cells(&lambda.join(&rho)) {
            let (r, c) = (cell.row - 1, cell.column - 1);
            if r == rows.len() {
                rows.push(Vec::new());
            }
            if c < rows[r].len() {
                let old = rows[r][c];
                if old <= i {
                    return Err(Error::Invariant(format!(
                        "insertion of {i} would overwrite {old} at ({}, {})",
                        cell.column, cell.row
                    )));
                }
                pending.add(old, 1);
                rows[r][c] = i;
            } else if c == rows[r].len() {
                rows[r].push(i);
            } else {
                return Err(Error::Invariant(format!(
                    "insertion of {i} leaves a gap before ({}, {})",
                    cell.column, cell.row
                )));
            }
        }
        if shape_below(&rows, i + 1) != nu {
            return Err(Error::Invariant(format!(
                "after inserting {i} the entries up to {i} do not form {nu}"
            )));
        }
    }
    if !pending.is_empty() {
        return Err(Error::Invariant(format!("values {pending} were never placed")));
    }
    TableauChain::from_rows(&rows, n, StepKind::Horizontal)
}

/// Shape formed by the cells holding values below `bound` (inner cells hold 0).
fn shape_below(rows: &[Vec<usize>], bound: usize) -> Partition {
    Partition::from_sorted(
        rows.iter()
            .map(|r| r.iter().take_while(|&&v| v < bound).count())
            .collect(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertionOrder {
    Ascending,
    Descending,
}

/// True iff inserting the elements of `values` one at a time, in the given
/// order, gives the same tableau as inserting them all at once.
pub fn check_traceable(
    rule: RuleId,
    t: &TableauChain,
    values: &PositionMultiset,
    order: InsertionOrder,
) -> Result<bool> {
    let batch = insert(rule, t, values)?;
    let mut elems = values.elems();
    if order == InsertionOrder::Descending {
        elems.reverse();
    }
    let mut seq = t.clone();
    for e in elems {
        seq = insert(rule, &seq, &PositionMultiset::from_elems([e]))?;
    }
    Ok(seq == batch)
}

/// Pieri bijection: inserts `{1^(a_1), …, n^(a_n)}` into `t`. The new shape
/// differs from the old one by a horizontal strip (vertical for dual rules)
/// of size `Σ a_i`.
pub fn pieri(rule: RuleId, t: &TableauChain, a: &[usize]) -> Result<TableauChain> {
    if a.len() != t.n() {
        return validation(format!("weight has {} entries, tableau has n = {}", a.len(), t.n()));
    }
    if rule.is_dual() && a.iter().any(|&x| x > 1) {
        return validation("dual Pieri needs a 0/1 weight");
    }
    let mut values = PositionMultiset::new();
    for (i, &ai) in a.iter().enumerate() {
        values.add(i + 1, ai);
    }
    insert(rule, t, &values)
}

/// Inverse of [`pieri`]: given the output and the shape `λ` of the original
/// tableau, recovers the tableau and the weight.
pub fn pieri_inverse(rule: RuleId, t_hat: &TableauChain, lambda: &Partition) -> Result<(TableauChain, Vec<usize>)> {
    let n = t_hat.n();
    if !is_strip(lambda, t_hat.shape(), rule.is_dual()) {
        return validation(format!(
            "{} is not a {} strip extension of {lambda}",
            t_hat.shape(),
            if rule.is_dual() { "vertical" } else { "horizontal" }
        ));
    }
    let mut chain = vec![Partition::empty(); n + 1];
    chain[n] = lambda.clone();
    let mut a = vec![0; n];
    for i in (1..=n).rev() {
        let (mu, entry) = unapply_rule(rule, &chain[i], t_hat.level(i - 1), t_hat.level(i))?;
        chain[i - 1] = mu;
        a[i - 1] = entry;
    }
    if &chain[0] != t_hat.inner() {
        return validation("the recovered tableau does not share the inner shape");
    }
    Ok((TableauChain::new(chain, StepKind::Horizontal)?, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::{build_growth, IntMatrix};
    use crate::partition::p;
    use crate::tableau::all_tableaux;
    use std::collections::BTreeSet;

    fn ssyt(rows: &[&[usize]], n: usize) -> TableauChain {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        TableauChain::from_rows(&rows, n, StepKind::Horizontal).unwrap()
    }

    #[test]
    fn insert_into_empty() {
        let empty = TableauChain::constant(Partition::empty(), 3, StepKind::Horizontal);
        let t = insert(RuleId::Row, &empty, &PositionMultiset::from_elems([2])).unwrap();
        assert_eq!(t, ssyt(&[&[2]], 3));
        let same = insert(RuleId::Row, &t, &PositionMultiset::new()).unwrap();
        assert_eq!(same, t);
    }

    #[test]
    fn stepwise_insertion_of_biword() {
        let mut t = TableauChain::constant(Partition::empty(), 3, StepKind::Horizontal);
        let expected: Vec<Vec<Vec<usize>>> = vec![
            vec![vec![2]],
            vec![vec![2, 3]],
            vec![vec![2, 3, 3]],
            vec![vec![1, 3, 3], vec![2]],
            vec![vec![1, 1, 3], vec![2, 3]],
            vec![vec![1, 1, 2], vec![2, 3, 3]],
            vec![vec![1, 1, 1], vec![2, 2, 3], vec![3]],
        ];
        for (value, want) in [2, 3, 3, 1, 1, 2, 1].into_iter().zip(expected) {
            t = insert(RuleId::Row, &t, &PositionMultiset::from_elems([value])).unwrap();
            assert_eq!(t.rows(), want);
        }
    }

    fn columns(a: &IntMatrix, j: usize) -> PositionMultiset {
        let mut m = PositionMultiset::new();
        for i in 1..=a.rows() {
            m.add(i, a.get(i, j));
        }
        m
    }

    #[test]
    fn insertion_matches_growth_columns() {
        let mut corpus = Vec::new();
        for code in 0..729usize {
            let e: Vec<usize> = (0..6).map(|t| code / 3usize.pow(t) % 3).collect();
            corpus.push(IntMatrix::new(vec![e[0..2].to_vec(), e[2..4].to_vec(), e[4..6].to_vec()]).unwrap());
        }
        for a in corpus {
            for rule in RuleId::ALL {
                if rule.is_dual() && !a.is_binary() {
                    continue;
                }
                let g = build_growth(rule, &a, None).unwrap();
                let mut t = TableauChain::constant(Partition::empty(), a.rows(), StepKind::Horizontal);
                for j in 1..=a.cols() {
                    t = insert(rule, &t, &columns(&a, j)).unwrap();
                    let col: Vec<Partition> = (0..=a.rows()).map(|i| g.get(i, j).clone()).collect();
                    assert_eq!(t.chain(), &col[..], "{rule} {a:?} column {j}");
                }
            }
        }
    }

    #[test]
    fn traceability() {
        for shape in crate::partition::enumerate_partitions(4, None) {
            for t in all_tableaux(&Partition::empty(), &shape, 3, StepKind::Horizontal) {
                for mask in 1..8usize {
                    let set = PositionMultiset::from_elems((1..=3).filter(|i| mask >> (i - 1) & 1 == 1));
                    use InsertionOrder::*;
                    assert!(check_traceable(RuleId::Row, &t, &set, Ascending).unwrap());
                    assert!(check_traceable(RuleId::DualCol, &t, &set, Ascending).unwrap());
                    assert!(check_traceable(RuleId::Col, &t, &set, Descending).unwrap());
                    assert!(check_traceable(RuleId::DualRow, &t, &set, Descending).unwrap());
                }
            }
        }
    }

    #[test]
    fn pieri_examples() {
        let t = ssyt(&[&[1, 2], &[2]], 2);
        assert_eq!(pieri(RuleId::Row, &t, &[0, 0]).unwrap(), t);
        assert!(pieri(RuleId::DualRow, &t, &[2, 0]).is_err());
        assert!(pieri(RuleId::Row, &t, &[1]).is_err());
    }

    /// Pieri maps SSYT_λ(n) × {weights of size k} bijectively onto the SSYT
    /// of all shapes ν with ν/λ a strip of size k.
    fn check_pieri(rule: RuleId, lambda: &Partition, n: usize, k: usize) -> usize {
        let dual = rule.is_dual();
        let mut weights = Vec::new();
        let mut w = vec![0; n];
        fn gen(i: usize, left: usize, max: usize, w: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == w.len() {
                if left == 0 {
                    out.push(w.clone());
                }
                return;
            }
            for x in 0..=left.min(max) {
                w[i] = x;
                gen(i + 1, left - x, max, w, out);
            }
        }
        gen(0, k, if dual { 1 } else { k }, &mut w, &mut weights);
        let mut images = BTreeSet::new();
        for t in all_tableaux(&Partition::empty(), lambda, n, StepKind::Horizontal) {
            for a in &weights {
                let t_hat = pieri(rule, &t, a).unwrap();
                assert!(is_strip(lambda, t_hat.shape(), dual));
                assert_eq!(t_hat.shape().size(), lambda.size() + k);
                assert_eq!(pieri_inverse(rule, &t_hat, lambda).unwrap(), (t.clone(), a.clone()));
                assert!(images.insert(t_hat));
            }
        }
        let targets: usize = crate::partition::strips_added(lambda, k, dual, None)
            .iter()
            .filter(|nu| nu.size() == lambda.size() + k)
            .map(|nu| all_tableaux(&Partition::empty(), nu, n, StepKind::Horizontal).len())
            .sum();
        assert_eq!(images.len(), targets);
        targets
    }

    #[test]
    fn pieri_counts() {
        // h_1 s_(1) in two variables: 2·2 = 3 + 1
        assert_eq!(check_pieri(RuleId::Row, &p(&[1]), 2, 1), 4);
        // e_2 s_(1) in two variables: 2 tableaux times one weight
        assert_eq!(check_pieri(RuleId::DualRow, &p(&[1]), 2, 2), 2);
        for rule in RuleId::ALL {
            for k in 0..=3 {
                check_pieri(rule, &p(&[2, 1]), 3, k);
            }
        }
    }
}
