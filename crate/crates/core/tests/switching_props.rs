use eisenspec::canonical::canonical_form;
use eisenspec::iso::graph_isomorphisms;
use eisenspec::spectra::{char_poly, cycle_gain};
use eisenspec::switching::{
    apply_switch, normalize_tree, switching_equivalent_labeled, switching_isomorphic, SwitchingFunction,
};
use eisenspec::{SignedDigraph, UnderlyingGraph, Unit, VertexCycle};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_sdg(rng: &mut impl Rng, n: usize, p: f64) -> SignedDigraph {
    let mut g = SignedDigraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.set_gain(u, v, Unit::new(rng.gen_range(0..6)));
            }
        }
    }
    g
}

fn random_switch(rng: &mut impl Rng, n: usize) -> SwitchingFunction {
    SwitchingFunction { x: (0..n).map(|_| Unit::new(rng.gen_range(0..6))).collect() }
}

fn random_orbit_element(rng: &mut impl Rng, g: &SignedDigraph) -> SignedDigraph {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let h = apply_switch(&g.relabel(&perm), &random_switch(rng, n)).unwrap();
    if rng.gen_bool(0.5) {
        h.converse()
    } else {
        h
    }
}

fn brute_force_equivalent(a: &SignedDigraph, b: &SignedDigraph) -> bool {
    let (ga, gb) = (a.underlying(), b.underlying());
    graph_isomorphisms(&ga, &gb).any(|m| {
        let r = a.relabel(&m);
        switching_equivalent_labeled(&r, b).is_some() || switching_equivalent_labeled(&r.converse(), b).is_some()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cycle_gain_is_switch_invariant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(3..8);
        let g = SignedDigraph::from_graph(&UnderlyingGraph::complete(n));
        let g = apply_switch(&g, &random_switch(&mut rng, n)).unwrap();
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(&mut rng);
        let len = rng.gen_range(3..=n);
        let c = VertexCycle::new(vs[..len].to_vec()).unwrap();
        let h = apply_switch(&g, &random_switch(&mut rng, n)).unwrap();
        prop_assert_eq!(cycle_gain(&g, &c).unwrap(), cycle_gain(&h, &c).unwrap());
    }

    #[test]
    fn orbit_is_cospectral(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = { let n = rng.gen_range(1..9); random_sdg(&mut rng, n, 0.5) };
        let h = random_orbit_element(&mut rng, &g);
        prop_assert_eq!(char_poly(&g).unwrap(), char_poly(&h).unwrap());
    }

    #[test]
    fn normalization_is_idempotent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = { let n = rng.gen_range(1..9); random_sdg(&mut rng, n, 0.5) };
        let nf = normalize_tree(&g, None).unwrap();
        let again = normalize_tree(&nf.base, Some(&nf.tree)).unwrap();
        prop_assert_eq!(&again.base, &nf.base);
        prop_assert!(again.applied.is_identity());
        for &(u, v) in &nf.tree {
            prop_assert_eq!(nf.base.gain(u, v), Some(Unit::ONE));
        }
    }

    #[test]
    fn witnesses_reproduce_the_target(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = { let n = rng.gen_range(1..9); random_sdg(&mut rng, n, 0.6) };
        let h = random_orbit_element(&mut rng, &g);
        let w = switching_isomorphic(&g, &h).unwrap();
        prop_assert_eq!(w.apply(&g).unwrap(), h);
    }

    #[test]
    fn canonical_form_agrees_with_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..7);
        let a = random_sdg(&mut rng, n, 0.7);
        // a mate on the same graph with a few gains changed
        let mut b = a.clone();
        for (u, v, _) in a.edges() {
            if rng.gen_bool(0.3) {
                b.set_gain(u, v, Unit::new(rng.gen_range(0..6)));
            }
        }
        let b = random_orbit_element(&mut rng, &b);
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same, brute_force_equivalent(&a, &b));
    }
}

#[test]
fn canonical_form_is_constant_on_orbits() {
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = { let n = rng.gen_range(1..=10); random_sdg(&mut rng, n, 0.5) };
        let c = canonical_form(&g).unwrap();
        for _ in 0..50 {
            assert_eq!(canonical_form(&random_orbit_element(&mut rng, &g)).unwrap(), c, "seed {seed}");
        }
    }
}

/// Every signed digraph on every connected 4-vertex graph, tree-normalized.
#[test]
fn exhaustive_order_four() {
    let graphs: Vec<UnderlyingGraph> = (0u32..64)
        .map(|mask| {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let e: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            UnderlyingGraph::from_edges(4, &e).unwrap()
        })
        .filter(|g| g.is_connected())
        .collect();
    let mut reps: Vec<(Vec<u8>, SignedDigraph)> = Vec::new();
    for g in &graphs {
        let tree = g.bfs_forest();
        let free: Vec<(usize, usize)> =
            g.edges().into_iter().filter(|&(u, v)| !tree.contains(&(u, v)) && !tree.contains(&(v, u))).collect();
        for code in 0..6usize.pow(free.len() as u32) {
            let mut phi = SignedDigraph::from_graph(g);
            let mut c = code;
            for &(u, v) in &free {
                phi.set_gain(u, v, Unit::new((c % 6) as i64));
                c /= 6;
            }
            reps.push((canonical_form(&phi).unwrap(), phi));
        }
    }
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    for w in reps.windows(2) {
        if w[0].0 == w[1].0 {
            assert_eq!(char_poly(&w[0].1).unwrap(), char_poly(&w[1].1).unwrap());
            assert!(switching_isomorphic(&w[0].1, &w[1].1).is_some());
        }
    }
    reps.dedup_by(|a, b| a.0 == b.0);
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            assert!(!brute_force_equivalent(&a.1, &b.1));
        }
    }
}
