//! Insertion without a grid, and the Pieri bijections built on it.

use growth_core::insertion::{insert, pieri, pieri_inverse};
use growth_core::interlacing::PositionMultiset;
use growth_core::rules::RuleId;
use growth_core::tableau::{StepKind, TableauChain};

fn main() -> growth_core::Result<()> {
    let t = TableauChain::from_rows(&[vec![1, 1, 2], vec![2, 3]], 3, StepKind::Horizontal)?;
    println!("T =\n{t}\n");

    let values = PositionMultiset::from_elems([1, 2, 2]);
    for rule in [RuleId::Row, RuleId::Col] {
        println!("{rule} insertion of {values}:\n{}\n", insert(rule, &t, &values)?);
    }

    // h_2 · s_(3,2): weight (1, 0, 1)
    let grown = pieri(RuleId::Row, &t, &[1, 0, 1])?;
    println!("Pieri with weight (1,0,1):\n{grown}\n");
    let (back, weight) = pieri_inverse(RuleId::Row, &grown, t.shape())?;
    assert_eq!((back, weight), (t.clone(), vec![1, 0, 1]));

    // e_2 · s_(3,2): a 0/1 weight and a vertical strip
    let grown = pieri(RuleId::DualRow, &t, &[1, 1, 0])?;
    println!("dual Pieri with weight (1,1,0):\n{grown}");
    Ok(())
}
