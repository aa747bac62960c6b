//! Nonzero integer labelings (k = 1), where spectra are infinite sets.
use kmagic::graph::{generate, Family};
use kmagic::labeling::{construct, verify};
use kmagic::spectrum::predict_spectrum;

fn main() -> kmagic::Result<()> {
    for (name, family) in
        [("Petersen", Family::Petersen), ("K_5", Family::Complete { n: 5 }), ("C_5", Family::Cycle { n: 5 })]
    {
        let g = generate(&family, None)?;
        let s = predict_spectrum(&g, 1)?;
        println!("{name}: spectrum {}", s.report().symbolic.unwrap_or_default());
        for c in [-3, 0, 4] {
            let res = construct(&g, 1, c)?;
            match res.labeling {
                Some(l) => {
                    assert_eq!(verify(&g, &l)?, Some(c));
                    println!("  c = {c}: {:?}", l.labels());
                }
                None => println!("  c = {c}: {:?}", res.status),
            }
        }
    }
    Ok(())
}
// $ cargo run --example integer_labeling
// Petersen: spectrum Z
//   c = -3: [...]
// ...
// C_5: spectrum 2Z\{0}
//   c = -3: Excluded
