//! Which graphs are completely k-magic, and which cubic graphs admit a
//! zero-sum labeling over Z_4.
use kmagic::graph::{generate, Family, MultiGraph};
use kmagic::spectrum::{is_completely_k_magic, zero_sum_4_magic};

fn main() -> kmagic::Result<()> {
    for (name, family, k) in [
        ("Petersen", Family::Petersen, 5),
        ("C_5", Family::Cycle { n: 5 }, 7),
        ("K_3,3", Family::CompleteBipartite { a: 3, b: 3 }, 3),
        ("K_5", Family::Complete { n: 5 }, 6),
    ] {
        let g = generate(&family, None)?;
        let verdict = is_completely_k_magic(&g, k)?;
        println!("{name}, k = {k}: complete = {}, condition {:?}", verdict.complete, verdict.condition);
        for reason in &verdict.reasons {
            println!("  {reason}");
        }
    }

    // a cubic graph whose centre meets three bridges
    let mut pairs = vec![(0, 1), (0, 6), (0, 11)];
    for base in [1, 6, 11] {
        // a K_4 with one edge subdivided by the attachment vertex
        let (a, b, c, d) = (base + 1, base + 2, base + 3, base + 4);
        pairs.extend([(base, a), (base, b), (a, c), (a, d), (b, c), (b, d), (c, d)]);
    }
    let g = MultiGraph::new(16, &pairs)?;
    println!("bridged cubic graph is zero-sum 4-magic: {}", zero_sum_4_magic(&g)?);
    println!("K_4 is zero-sum 4-magic: {}", zero_sum_4_magic(&generate(&Family::Complete { n: 4 }, None)?)?);
    Ok(())
}
// $ cargo run --example completeness
// Petersen, k = 5: complete = true, condition Some(OddDegree)
// ...
// bridged cubic graph is zero-sum 4-magic: false
// K_4 is zero-sum 4-magic: true
