//! Bounded null sets: the moduli k for which 0 is a magic sum.
use kmagic::graph::{generate, Family};
use kmagic::spectrum::{null_set, SpectrumOptions};

fn main() -> kmagic::Result<()> {
    let opts = SpectrumOptions::default();
    for (name, family) in [
        ("K_4", Family::Complete { n: 4 }),
        ("K_5", Family::Complete { n: 5 }),
        ("C_6", Family::Cycle { n: 6 }),
    ] {
        let g = generate(&family, None)?;
        let ns = null_set(&g, 8, &opts)?;
        println!("{name}: {:?} undecided {:?}", ns.null_set, ns.undecided);
    }
    Ok(())
}
// $ cargo run --example null_set
// K_4: [1, 3, 4, 5, 6, 7, 8] undecided []
// K_5: [1, 2, 3, 4, 5, 6, 7, 8] undecided []
// C_6: [1, 2, 3, 4, 5, 6, 7, 8] undecided []
