use eisenspec::census::{cospectral_mates, CensusTask, GraphSource};
use eisenspec::classify::{classify_lambda2_negative, classify_rank2, classify_rank3};
use eisenspec::sachs::char_poly_sachs;
use eisenspec::spectra::char_poly;
use eisenspec::switching::{apply_switch, SwitchingFunction};
use eisenspec::{SignedDigraph, Unit};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> SignedDigraph {
    loop {
        let mut g = SignedDigraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.set_gain(u, v, Unit::new(rng.gen_range(0..6)));
                }
            }
        }
        if g.is_connected() {
            return g;
        }
    }
}

fn scrambled(rng: &mut impl Rng, g: &SignedDigraph) -> SignedDigraph {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let x = SwitchingFunction { x: (0..n).map(|_| Unit::new(rng.gen_range(0..6))).collect() };
    apply_switch(&g.relabel(&perm), &x).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pruning_does_not_change_the_census(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(3..=5);
        let phi = random_connected(&mut rng, n, 0.6);
        let target = char_poly(&phi).unwrap();
        let pruned = cospectral_mates(&CensusTask::new(target.clone(), GraphSource::BuiltIn)).unwrap();
        let mut task = CensusTask::new(target, GraphSource::BuiltIn);
        task.unpruned = true;
        let full = cospectral_mates(&task).unwrap();
        prop_assert_eq!(pruned.classes, full.classes);
        prop_assert_eq!(pruned.des_verdict, full.des_verdict);
        prop_assert!(full.scanned.pruned == 0);
    }

    #[test]
    fn sachs_matches_char_poly(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=7);
        let phi = random_connected(&mut rng, n, 0.5);
        prop_assert_eq!(char_poly(&phi).unwrap(), char_poly_sachs(&phi).unwrap());
    }

    #[test]
    fn classification_is_a_class_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=7);
        let phi = random_connected(&mut rng, n, 0.7);
        let psi = scrambled(&mut rng, &phi);
        for f in [classify_rank2, classify_rank3, classify_lambda2_negative] {
            let (a, b) = (f(&phi).unwrap(), f(&psi).unwrap());
            prop_assert!(a.verify(&phi) && b.verify(&psi));
            prop_assert_eq!(a.family, b.family);
        }
    }
}
