//! Construct labelings for every sum and print how each one was derived.
use kmagic::graph::{generate, Family};
use kmagic::labeling::{construct, verify, Status};

fn main() -> kmagic::Result<()> {
    for (name, family, k) in [("K_6", Family::Complete { n: 6 }, 8), ("Petersen", Family::Petersen, 6)] {
        let g = generate(&family, None)?;
        for c in 0..k as i64 {
            let res = construct(&g, k, c)?;
            println!("{name}, k = {k}, c = {c}: {:?}", res.status);
            print!("{}", res.trace.summary());
            if res.status == Status::Built {
                let l = res.labeling.expect("built");
                assert_eq!(verify(&g, &l)?, Some(c));
                // the trace alone reproduces the labeling
                assert_eq!(res.trace.replay(k, g.m())?, l);
                println!("labels {:?}", l.labels());
            }
            println!();
        }
    }
    Ok(())
}
// $ cargo run --example construct_labeling
// K_6, k = 8, c = 0: Built
// 5-regular zero-sum, k = 8: doubled 4-factor labeled 2, rest 4, halved (divisor=2, doubled_sum=0)
// labels [...]
//
// K_6, k = 8, c = 1: Built
// constant label y = c / r (gcd(r, k) = 1) (y=5)
// ...
