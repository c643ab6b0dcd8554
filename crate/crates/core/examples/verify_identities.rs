//! Coefficient-wise checks of the Cauchy, Littlewood and Pieri identities.

use growth_core::schur::{verify_identity, IdentityKind, IdentityParams};
use growth_core::{Family, Partition};

fn main() -> growth_core::Result<()> {
    let shape = |parts: &[usize]| Partition::new(parts.to_vec());
    let mut checks = vec![
        (IdentityKind::Cauchy, IdentityParams::new(3, 3, 6)),
        (IdentityKind::DualCauchy, IdentityParams::new(3, 3, 6)),
        (IdentityKind::SkewCauchy, IdentityParams::new(2, 2, 6).with_lambda(shape(&[2, 1])?).with_rho(shape(&[1, 1])?)),
        (IdentityKind::Pieri, IdentityParams::new(3, 0, 0).with_lambda(shape(&[2, 1])?).with_k(2)),
        (IdentityKind::Squarefree, IdentityParams::new(6, 0, 0)),
    ];
    for family in Family::ALL {
        checks.push((IdentityKind::Littlewood(family), IdentityParams::new(3, 0, 8)));
        checks.push((IdentityKind::SkewLittlewood(family), IdentityParams::new(2, 0, 6).with_lambda(shape(&[2, 1])?)));
    }
    for (kind, params) in checks {
        let report = verify_identity(kind, &params)?;
        println!(
            "{:<28} equal = {:<5} terms = {:<4} sums = {} / {}",
            kind.to_string(),
            report.equal,
            report.checked_terms,
            report.lhs_sum,
            report.rhs_sum
        );
    }
    Ok(())
}
