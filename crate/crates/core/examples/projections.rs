//! Projection maps: the diagonal squares of triangular diagrams. λ is the
//! off-diagonal corner, μ and ν lie in the family.

use growth_core::projection::{asym_indices, proj_apply, proj_sets, proj_unapply, AsymSign, ProjFamily, ProjVariant};
use growth_core::rules::RuleId;
use growth_core::{Family, FrobeniusCoords, Partition};

fn main() -> growth_core::Result<()> {
    let k = 2;
    let choices = [
        (Family::EvenColumns, ProjVariant::Inherit(RuleId::Row), vec![3, 1]),
        (Family::All, ProjVariant::Inherit(RuleId::Row), vec![3, 1]),
        (Family::EvenRows, ProjVariant::Inherit(RuleId::Col), vec![2]),
        (Family::AsymPlus, ProjVariant::RowStar, vec![2, 1, 1]),
        (Family::AsymMinus, ProjVariant::RowStar, vec![3, 1]),
    ];
    for (family, variant, parts) in choices {
        let lambda = Partition::new(parts)?;
        let pf = ProjFamily::new(family, variant)?;
        let (down, up) = proj_sets(family, &lambda, k);
        println!("{family} at λ = {lambda}: {} down, {} up", down.len(), up.len());
        for mu in &down {
            let nu = proj_apply(pf, &lambda, k, mu)?;
            assert_eq!(&proj_unapply(pf, &lambda, &nu)?.0, mu);
            println!("  {mu:<6} ↦ {nu}");
        }
    }

    let frob = FrobeniusCoords::new(vec![7, 5, 3, 2, 0], vec![10, 7, 4, 2, 1])?;
    let shape = Partition::from_frobenius(&frob)?;
    let sets = asym_indices(&shape, AsymSign::Plus);
    println!("{frob} = {shape}: R = {:?}, S = {:?}", sets.r_indices, sets.s_indices);
    Ok(())
}
