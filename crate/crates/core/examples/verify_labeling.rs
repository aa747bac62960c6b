//! Check a hand-made labeling and its complement.
use kmagic::graph::{generate, Family};
use kmagic::labeling::{complement_on, verify, vertex_sums, EdgeLabeling};

fn main() -> kmagic::Result<()> {
    let c4 = generate(&Family::Cycle { n: 4 }, None)?;
    // alternate 1 and 2 around C_4: every vertex sees 1 + 2
    let l = EdgeLabeling::new(5, vec![1, 2, 1, 2])?;
    println!("vertex sums {:?}, magic sum {:?}", vertex_sums(&c4, &l)?, verify(&c4, &l)?);

    let (comp, c) = complement_on(&c4, &l)?;
    println!("complement {:?} has magic sum {c}", comp.labels());

    let broken = EdgeLabeling::new(5, vec![1, 2, 3, 4])?;
    println!("{:?} is magic: {}", broken.labels(), verify(&c4, &broken)?.is_some());

    // zero labels are rejected outright
    println!("{}", EdgeLabeling::new(5, vec![1, 0, 1, 0]).unwrap_err());
    Ok(())
}
// $ cargo run --example verify_labeling
// vertex sums [3, 3, 3, 3], magic sum Some(3)
// complement [4, 3, 4, 3] has magic sum 2
// [1, 2, 3, 4] is magic: false
// edge 1 carries a zero label
