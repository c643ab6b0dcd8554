//! Skew growth diagrams: prescribed border chains give skew tableaux.

use growth_core::growth::{build_growth, extract_pq, rsk_inverse, Borders, IntMatrix};
use growth_core::rules::RuleId;
use growth_core::tableau::{StepKind, TableauChain};
use growth_core::Partition;

fn chain(levels: &[&[usize]]) -> growth_core::Result<TableauChain> {
    let parts = levels.iter().map(|l| Partition::new(l.to_vec())).collect::<Result<_, _>>()?;
    TableauChain::new(parts, StepKind::Horizontal)
}

fn main() -> growth_core::Result<()> {
    let a = IntMatrix::new(vec![vec![1, 0, 0], vec![0, 0, 2], vec![0, 1, 0]])?;
    let borders = Borders {
        left: chain(&[&[2], &[2], &[3, 1], &[3, 2]])?,
        top: chain(&[&[2], &[3], &[3, 1], &[4, 1]])?,
    };
    let g = build_growth(RuleId::Row, &a, Some(&borders))?;
    println!("{g}\n");
    let (p, q) = extract_pq(&g);
    println!("P (inner cells shown as ·) =\n{p}\n\nQ =\n{q}");
    let (back, recovered) = rsk_inverse(RuleId::Row, &p, &q)?;
    assert_eq!((back, recovered), (a, borders));
    Ok(())
}
