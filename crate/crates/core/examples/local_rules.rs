//! The four local growth rules on one square of a growth diagram.

use growth_core::interlacing::{down_set, profile, up_set, ProfileKind};
use growth_core::rules::{apply_rule, unapply_rule, RuleId};
use growth_core::Partition;

fn main() -> growth_core::Result<()> {
    let lambda = Partition::new(vec![3, 2])?;
    let rho = Partition::new(vec![3, 1, 1])?;
    println!("λ = {lambda}, ρ = {rho}");
    for kind in [ProfileKind::Removable, ProfileKind::Addable] {
        let prof = profile(&lambda, &rho, kind);
        let ribbons: Vec<String> = prof
            .entries
            .iter()
            .map(|e| format!("#{} row {} cap {}", e.position, e.row, e.capacity))
            .collect();
        println!("{kind:?}: {}", ribbons.join(", "));
    }

    let k = 2;
    for rule in [RuleId::Row, RuleId::Col] {
        println!("{rule}, k = {k}:");
        for i in 0..=k {
            for mu in down_set(&lambda, &rho, i, false) {
                let nu = apply_rule(rule, &lambda, &rho, k, &mu)?;
                let (back, a) = unapply_rule(rule, &lambda, &rho, &nu)?;
                assert_eq!(back, mu);
                println!("  μ = {mu:<8} ↦ ν = {nu:<10} (entry {a})");
            }
        }
        assert_eq!(up_set(&lambda, &rho, k, false).len(), (0..=k).map(|i| down_set(&lambda, &rho, i, false).len()).sum::<usize>());
    }

    let (lambda, rho) = (Partition::new(vec![2, 1])?, Partition::new(vec![1, 1])?);
    for rule in [RuleId::DualRow, RuleId::DualCol] {
        println!("{rule} on λ = {lambda}, ρ = {rho}, k = 1:");
        for mu in down_set(&lambda, &rho, 1, true).into_iter().chain(down_set(&lambda, &rho, 0, true)) {
            println!("  μ = {mu:<6} ↦ ν = {}", apply_rule(rule, &lambda, &rho, 1, &mu)?);
        }
    }
    Ok(())
}
