//! Label the doubled graph, then fold back onto the original edges.
use kmagic::factor::{double_graph, extract_2h_factor};
use kmagic::graph::{generate, Family};
use kmagic::labeling::{fold, EdgeLabeling};

fn main() -> kmagic::Result<()> {
    let k6 = generate(&Family::Complete { n: 6 }, None)?;
    let d = double_graph(&k6);
    println!("K_6 has {} edges, its double has {}", k6.m(), d.doubled.m());

    // a 2-factor of the doubled graph labeled k - 4, everything else 1:
    // each vertex sees 2(k - 4) + 8 = 2k
    let k = 7;
    let h = &extract_2h_factor(&d.doubled, 1)?.parts[0];
    let mut raw = vec![1; d.doubled.m()];
    for &e in h {
        raw[e] = k as i64 - 4;
    }
    let (l, c) = fold(&d, &EdgeLabeling::new(k, raw)?, 1)?;
    println!("summed pairs give sum {c}: {:?}", l.labels());

    // over Z_8: a doubled 4-factor labeled 2, the rest 4, pair sums halved
    let h = &extract_2h_factor(&d.doubled, 2)?.parts[0];
    let mut raw = vec![4; d.doubled.m()];
    for &e in h {
        raw[e] = 2;
    }
    let (l, c) = fold(&d, &EdgeLabeling::new(8, raw)?, 2)?;
    println!("halved pairs give sum {c}: {:?}", l.labels());
    Ok(())
}
// $ cargo run --example doubling_and_fold
// K_6 has 15 edges, its double has 30
// summed pairs give sum 0: [...]
// halved pairs give sum 0: [...]
