//! Partitions: conjugates, Frobenius coordinates, families and strips.

use growth_core::partition::{enumerate_partitions, is_horizontal_strip, is_vertical_strip, member, strips_added};
use growth_core::{Family, Partition};

fn main() -> growth_core::Result<()> {
    let lambda = Partition::new(vec![6, 5, 3, 3, 1])?;
    println!("λ = {lambda}, |λ| = {}", lambda.size());
    println!("conjugate      {}", lambda.conjugate());
    println!("Frobenius      {}", lambda.frobenius());
    println!("Durfee square  {}", lambda.durfee());

    let mu = Partition::new(vec![5, 3, 3, 1])?;
    println!("{mu} ≺ {lambda}: {}", is_horizontal_strip(&mu, &lambda));
    println!("{mu} ≺′ {lambda}: {}", is_vertical_strip(&mu, &lambda));

    println!("horizontal strips of size ≤ 2 on (2,1):");
    for nu in strips_added(&Partition::new(vec![2, 1])?, 2, false, None) {
        println!("  {nu}");
    }

    for family in Family::ALL {
        let names: Vec<String> = enumerate_partitions(6, None)
            .iter()
            .filter(|p| member(p, family))
            .map(|p| p.to_string())
            .collect();
        println!("{family:>9}: {}", names.join(" "));
    }
    Ok(())
}
