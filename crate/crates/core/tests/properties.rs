use proptest::prelude::*;

use kmagic::factor::{double_graph, extract_2h_factor, f_factor, two_factorization};
use kmagic::graph::{generate, text, Family, MultiGraph};
use kmagic::labeling::{construct, extend_by_factor, fold, verify, vertex_sums, EdgeLabeling, Status};
use kmagic::spectrum::{brute_force_spectrum, predict_spectrum, SolverBudget};

/// Seeded random regular graphs with `n <= 10`, `r <= 5`.
fn regular_graph() -> impl Strategy<Value = MultiGraph> {
    (4usize..=10, 1usize..=5, any::<u64>())
        .prop_filter("simple r-regular graph exists", |&(n, r, _)| r < n && n * r % 2 == 0)
        .prop_map(|(n, r, seed)| generate(&Family::random_regular(n, r), Some(seed)).unwrap())
}

fn labels_for(g: &MultiGraph, k: u64, seed: u64) -> EdgeLabeling {
    let labels = (0..g.m() as u64).map(|i| 1 + ((seed.wrapping_mul(31) + i * 7) % (k - 1)) as i64).collect();
    EdgeLabeling::new(k, labels).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 120, ..ProptestConfig::default() })]

    #[test]
    fn text_round_trip(g in regular_graph()) {
        prop_assert_eq!(text::parse(&text::write(&g)).unwrap(), g);
    }

    #[test]
    fn verify_matches_vertex_sums(g in regular_graph(), k in 2u64..=9, seed in any::<u64>()) {
        let l = labels_for(&g, k, seed);
        let sums = vertex_sums(&g, &l).unwrap();
        let magic = sums.iter().all(|&s| s == sums[0]);
        prop_assert_eq!(verify(&g, &l).unwrap(), magic.then_some(sums[0]));
    }

    #[test]
    fn complement_maps_c_to_k_minus_c(g in regular_graph(), k in 3u64..=9, c in 0i64..9) {
        let c = c % k as i64;
        if let Some(l) = construct(&g, k, c).unwrap().labeling {
            let comp = l.complement().unwrap();
            prop_assert_eq!(verify(&g, &comp).unwrap(), Some((k as i64 - c) % k as i64));
            prop_assert_eq!(comp.complement().unwrap(), l);
        }
    }

    #[test]
    fn fold_of_a_repeated_labeling(g in regular_graph(), k in 3u64..=9, c in 0i64..9) {
        let c = c % k as i64;
        let Some(l) = construct(&g, k, c).unwrap().labeling else { return Ok(()) };
        let d = double_graph(&g);
        let twice: Vec<i64> = l.labels().iter().chain(l.labels()).copied().collect();
        let doubled = EdgeLabeling::new(k, twice).unwrap();
        // halving the pair sum returns the original labels
        let (back, sum) = fold(&d, &doubled, 2).unwrap();
        prop_assert_eq!((back, sum), (l.clone(), c));
        // summing doubles every label, when that stays nonzero
        if let Ok((sumfold, s)) = fold(&d, &doubled, 1) {
            prop_assert_eq!(s, (2 * c).rem_euclid(k as i64));
            prop_assert!(sumfold.labels().iter().zip(l.labels()).all(|(a, b)| *a == (2 * b) % k as i64));
        }
    }

    #[test]
    fn doubled_two_factorization_partitions(g in regular_graph()) {
        let d = double_graph(&g);
        let dec = two_factorization(&d.doubled).unwrap();
        prop_assert!(dec.validate(&d.doubled, true).is_ok());
        prop_assert_eq!(dec.parts.len(), g.regularity().unwrap());
        let r = g.regularity().unwrap();
        for h in 1..=r {
            let split = extract_2h_factor(&d.doubled, h).unwrap();
            prop_assert!(split.validate(&d.doubled, true).is_ok());
        }
    }

    #[test]
    fn extend_reaches_c(g in regular_graph(), k in 3u64..=8, c in 0i64..8) {
        let c = c % k as i64;
        let r = g.regularity().unwrap();
        for h in 1..r {
            let Some(f) = f_factor(&g, h).unwrap() else { continue };
            let sub = g.edge_subgraph(&f);
            let alpha = (c - (r - h) as i64).rem_euclid(k as i64);
            if let Some(lh) = construct(&sub.graph, k, alpha).unwrap().labeling {
                let l = extend_by_factor(&g, &f, &lh, c).unwrap();
                prop_assert_eq!(verify(&g, &l).unwrap(), Some(c));
            }
        }
    }

    #[test]
    fn prediction_matches_oracle(g in regular_graph(), k in 3u64..=6) {
        let p = predict_spectrum(&g, k).unwrap();
        prop_assume!(p.is_decided());
        let o = brute_force_spectrum(&g, k, &SolverBudget::default()).unwrap();
        prop_assert_eq!(p.members(), o.members());
    }

    #[test]
    fn construction_follows_prediction(g in regular_graph(), k in 2u64..=9) {
        let p = predict_spectrum(&g, k).unwrap();
        for c in 0..k as i64 {
            let res = construct(&g, k, c).unwrap();
            match p.contains(c) {
                Some(true) => {
                    prop_assert_eq!(res.status, Status::Built);
                    let l = res.labeling.unwrap();
                    prop_assert_eq!(verify(&g, &l).unwrap(), Some(c));
                    prop_assert_eq!(res.trace.replay(k, g.m()).unwrap(), l);
                }
                Some(false) => prop_assert_eq!(res.status, Status::Excluded),
                // undecided predictions leave the outcome to the solver
                None => {}
            }
        }
    }
}
