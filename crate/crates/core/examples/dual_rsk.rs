//! Dual RSK on 0/1 matrices: Q becomes a dual tableau (strict rows).

use growth_core::growth::{rsk, rsk_inverse, IntMatrix};
use growth_core::rules::RuleId;

fn main() -> growth_core::Result<()> {
    let b = IntMatrix::new(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]])?;
    for rule in [RuleId::DualRow, RuleId::DualCol] {
        let (p, q) = rsk(rule, &b, None)?;
        println!("{rule}\nP =\n{p}\nQ (dual) =\n{q}\n");
        assert_eq!(rsk_inverse(rule, &p, &q)?.0, b);
    }
    // entries above 1 have no dual growth
    let bad = IntMatrix::new(vec![vec![2]])?;
    println!("dual-row on [[2]]: {}", rsk(RuleId::DualRow, &bad, None).unwrap_err());
    Ok(())
}
