//! Schur polynomials from chains of strips, and standard tableaux counts.

use growth_core::schur::{count_syt, schur, SchurMode};
use growth_core::Partition;

fn main() -> growth_core::Result<()> {
    let empty = Partition::empty();
    let lambda = Partition::new(vec![2, 1])?;
    println!("s_(2,1)(x1,x2,x3) = {}", schur(&lambda, &empty, 3, 10, SchurMode::Up)?);

    let outer = Partition::new(vec![3, 2])?;
    let inner = Partition::new(vec![1])?;
    let up = schur(&outer, &inner, 2, 10, SchurMode::Up)?;
    let down = schur(&outer, &inner, 2, 10, SchurMode::Down)?;
    assert_eq!(up, down);
    println!("s_(3,2)/(1)(x1,x2) = {up}");
    println!("s_(2,2,1)/(1)(x1,x2) from vertical strips of (3,2)/(1) = {}", schur(&outer, &inner, 2, 10, SchurMode::DualDown)?);

    for parts in [vec![2, 1], vec![3, 2, 1], vec![4, 4, 2]] {
        let shape = Partition::new(parts)?;
        println!("f_{shape} = {}", count_syt(&shape));
    }
    Ok(())
}
