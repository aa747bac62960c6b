//! Build graphs from the named families and round-trip the text format.
use kmagic::graph::{generate, text, Family};

fn main() -> kmagic::Result<()> {
    let families = [
        Family::Cycle { n: 5 },
        Family::Complete { n: 5 },
        Family::CompleteBipartite { a: 3, b: 3 },
        Family::Circulant { n: 8, jumps: vec![1, 2] },
        Family::Petersen,
        Family::Prism { n: 4 },
        Family::random_regular(10, 3),
        Family::DisjointUnion { parts: vec![Family::Cycle { n: 3 }, Family::Cycle { n: 4 }] },
    ];
    for family in &families {
        // random families need an explicit seed
        let g = generate(family, Some(7))?;
        println!(
            "{family:?}: n={} m={} r={:?} components={} edge connectivity={}",
            g.n(),
            g.m(),
            g.regularity(),
            g.components().len(),
            g.edge_connectivity()
        );
        assert_eq!(text::parse(&text::write(&g))?, g);
    }
    print!("{}", text::write(&generate(&Family::Cycle { n: 4 }, None)?));
    Ok(())
}
// $ cargo run --example generate_graphs
// Cycle { n: 5 }: n=5 m=5 r=Some(2) components=1 edge connectivity=2
// ...
// p 4 4
// 0 1
// ...
