//! Compare predicted spectra with exhaustive search.
use kmagic::graph::{generate, Family};
use kmagic::spectrum::{brute_force_spectrum, predict_spectrum, SolverBudget};

fn main() -> kmagic::Result<()> {
    let budget = SolverBudget::default();
    let corpus = [
        ("K_4", Family::Complete { n: 4 }),
        ("K_3,3", Family::CompleteBipartite { a: 3, b: 3 }),
        ("Q_3", Family::Prism { n: 4 }),
        ("circulant(8,{1,2})", Family::Circulant { n: 8, jumps: vec![1, 2] }),
    ];
    for (name, family) in corpus {
        let g = generate(&family, None)?;
        for k in 3..=6 {
            let p = predict_spectrum(&g, k)?;
            let o = brute_force_spectrum(&g, k, &budget)?;
            let verdict = if p.members() == o.members() { "agree" } else { "DIFFER" };
            println!("{name:<20} k={k} predict {:?} oracle {:?} {verdict}", p.members(), o.members());
        }
    }
    Ok(())
}
// $ cargo run --example oracle_compare
// K_4                  k=3 predict Some([0, 1, 2]) oracle Some([0, 1, 2]) agree
// ...
