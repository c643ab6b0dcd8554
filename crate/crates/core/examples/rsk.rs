//! RSK through a growth diagram: the tableaux P and Q of a matrix and back.

use growth_core::growth::{build_growth, enumerate_growths, extract_pq, rsk_inverse, IntMatrix};
use growth_core::rules::RuleId;

fn main() -> growth_core::Result<()> {
    let a = IntMatrix::new(vec![vec![0, 2, 1], vec![1, 1, 0], vec![2, 0, 0]])?;
    for rule in [RuleId::Row, RuleId::Col] {
        let g = build_growth(rule, &a, None)?;
        println!("{rule} growth diagram:\n{g}\n");
        let (p, q) = extract_pq(&g);
        println!("P =\n{p}\n\nQ =\n{q}\n");
        let (back, _) = rsk_inverse(rule, &p, &q)?;
        assert_eq!(back, a);
    }

    let small = IntMatrix::new(vec![vec![0, 1], vec![1, 0], vec![1, 1]])?;
    println!(
        "{:?} has {} growths and {} dual growths",
        small.entries(),
        enumerate_growths(&small, false).len(),
        enumerate_growths(&small, true).len()
    );
    Ok(())
}
