//! Predicted sum spectra with the reasons behind them.
use kmagic::graph::{generate, Family};
use kmagic::spectrum::predict_spectrum;

fn main() -> kmagic::Result<()> {
    let cases = [
        ("K_5", Family::Complete { n: 5 }, 6),
        ("K_5", Family::Complete { n: 5 }, 4),
        ("Petersen", Family::Petersen, 5),
        ("Petersen", Family::Petersen, 1),
        ("C_3", Family::Cycle { n: 3 }, 3),
        (
            "C_3 + C_4",
            Family::DisjointUnion { parts: vec![Family::Cycle { n: 3 }, Family::Cycle { n: 4 }] },
            6,
        ),
    ];
    for (name, family, k) in cases {
        let g = generate(&family, None)?;
        let s = predict_spectrum(&g, k)?;
        println!("{name}, k = {k}:");
        print!("{}", s.to_json());
    }
    Ok(())
}
// $ cargo run --example predict_spectrum
// K_5, k = 6:
// {
//   "complete": false,
//   "k": 6,
//   "provenance": [...],
//   "spectrum": [0, 2, 4],
//   "undecided": []
// }
