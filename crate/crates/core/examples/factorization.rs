//! 2-factorizations, f-factors and factors with degrees 1 mod 3.
use kmagic::factor::{f_factor, mod3_factor, two_factorization};
use kmagic::graph::{generate, Family};

fn main() -> kmagic::Result<()> {
    let k5 = generate(&Family::Complete { n: 5 }, None)?;
    let dec = two_factorization(&k5)?;
    println!("K_5 splits into 2-factors {:?}", dec.parts);
    print!("{}", dec.to_json());

    let petersen = generate(&Family::Petersen, None)?;
    println!("Petersen perfect matching: {:?}", f_factor(&petersen, 1)?);
    println!("Petersen 2-factor: {:?}", f_factor(&petersen, 2)?);
    // odd order: no perfect matching
    println!("K_5 perfect matching: {:?}", f_factor(&k5, 1)?);

    let k33 = generate(&Family::CompleteBipartite { a: 3, b: 3 }, None)?;
    println!("K_3,3 factor with degrees 1 mod 3: {:?}", mod3_factor(&k33)?);
    Ok(())
}
// $ cargo run --example factorization
// K_5 splits into 2-factors [[...], [...]]
// ...
// K_5 perfect matching: None
