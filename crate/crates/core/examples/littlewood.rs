//! Littlewood bijections: triangular arrays to tableaux with shapes in a
//! family, and back.

use growth_core::tableau::{StepKind, TableauChain};
use growth_core::triangular::{build_triangular, extract_p, littlewood_inverse, LittlewoodVariant, TriangularArray};
use growth_core::projection::ProjVariant;
use growth_core::rules::RuleId;
use growth_core::{Family, Partition};

fn main() -> growth_core::Result<()> {
    let arrays = [
        (Family::EvenColumns, vec![vec![0, 1, 1], vec![0, 1], vec![0]]),
        (Family::All, vec![vec![1, 0, 2], vec![0, 1], vec![1]]),
        (Family::EvenRows, vec![vec![2, 0, 1], vec![0, 1], vec![2]]),
        (Family::AsymPlus, vec![vec![0, 1, 1], vec![0, 1], vec![0]]),
        (Family::AsymMinus, vec![vec![2, 1, 0], vec![0, 1], vec![2]]),
    ];
    for (family, rows) in arrays {
        let v = LittlewoodVariant::canonical(family);
        let c = TriangularArray::new(rows, family)?;
        let g = build_triangular(&v, &c, None)?;
        let p = extract_p(&g);
        println!("{family} ({} + {:?}):\n{g}\nP =\n{p}\n", v.base_rule, v.proj.variant);
        assert_eq!(littlewood_inverse(&v, &p)?, (c, None));
    }

    // a skew diagram with a dual tableau as first row
    let v = LittlewoodVariant::with_rules(Family::AsymMinus, RuleId::DualRow, ProjVariant::RowStar)?;
    let c = TriangularArray::new(vec![vec![0, 1, 0, 0], vec![0, 0, 0], vec![2, 0], vec![0]], Family::AsymMinus)?;
    let levels: [&[usize]; 5] = [&[3, 1], &[3, 2], &[3, 3, 1], &[4, 4, 1], &[5, 4, 1]];
    let border = TableauChain::new(
        levels.iter().map(|l| Partition::new(l.to_vec())).collect::<Result<_, _>>()?,
        StepKind::Vertical,
    )?;
    let g = build_triangular(&v, &c, Some(&border))?;
    println!("skew asym-1:\n{g}\nP =\n{}", extract_p(&g));
    Ok(())
}
