//! Gain switching, tree normalization and switching isomorphism.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::canonical::canonical_labeling;
use crate::eis::Unit;
use crate::error::{Error, Result};
use crate::iso::graph_isomorphisms;
use crate::sdg::SignedDigraph;
use crate::spectra::triangle_census;

/// Diagonal switching matrix `X`, one unit per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwitchingFunction {
    pub x: Vec<Unit>,
}

impl SwitchingFunction {
    pub fn identity(n: usize) -> Self {
        SwitchingFunction { x: vec![Unit::ONE; n] }
    }

    /// `X` with `ω^k` on `subset` and `1` elsewhere.
    pub fn on_subset(n: usize, subset: &[usize], k: i64) -> Self {
        let mut x = vec![Unit::ONE; n];
        for &v in subset {
            x[v] = Unit::new(k);
        }
        SwitchingFunction { x }
    }

    /// The switch equal to applying `self` and then `after`.
    pub fn then(&self, after: &SwitchingFunction) -> SwitchingFunction {
        SwitchingFunction { x: self.x.iter().zip(&after.x).map(|(&a, &b)| a * b).collect() }
    }

    pub fn inverse(&self) -> SwitchingFunction {
        SwitchingFunction { x: self.x.iter().map(|u| u.inv()).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().all(|&u| u == Unit::ONE)
    }
}

/// `gain(u,v) ↦ x_u · gain(u,v) · x_v⁻¹`.
pub fn apply_switch(phi: &SignedDigraph, x: &SwitchingFunction) -> Result<SignedDigraph> {
    if x.x.len() != phi.n() {
        return Err(Error::LengthMismatch { expected: phi.n(), got: x.x.len() });
    }
    let mut out = phi.clone();
    for (u, v, g) in phi.edges() {
        out.set_gain(u, v, x.x[u] * g * x.x[v].inv());
    }
    Ok(out)
}

/// A switching-equivalent representative with unit gains on a spanning forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNormalForm {
    pub tree: Vec<(usize, usize)>,
    pub base: SignedDigraph,
    pub applied: SwitchingFunction,
}

fn check_forest(phi: &SignedDigraph, tree: &[(usize, usize)]) -> Result<Vec<Vec<usize>>> {
    let n = phi.n();
    let mut adj = vec![Vec::new(); n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for &(u, v) in tree {
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        if !phi.is_adjacent(u, v) {
            return Err(Error::NotSpanningForest(format!("({u}, {v}) is not an edge")));
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return Err(Error::NotSpanningForest(format!("({u}, {v}) closes a cycle")));
        }
        parent[a] = b;
        adj[u].push(v);
        adj[v].push(u);
    }
    let components = phi.underlying().components().len();
    if tree.len() != n - components {
        return Err(Error::NotSpanningForest(format!("{} edges, a spanning forest needs {}", tree.len(), n - components)));
    }
    Ok(adj)
}

/// Switches `phi` so every edge of `tree` (default: BFS forest) has gain 1.
pub fn normalize_tree(phi: &SignedDigraph, tree: Option<&[(usize, usize)]>) -> Result<TreeNormalForm> {
    let n = phi.n();
    let tree: Vec<(usize, usize)> = match tree {
        Some(t) => t.to_vec(),
        None => phi.underlying().bfs_forest(),
    };
    let adj = check_forest(phi, &tree)?;
    let mut x = vec![Unit::ONE; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    x[v] = x[u] * phi.gain(u, v).expect("tree edges are edges");
                    queue.push_back(v);
                }
            }
        }
    }
    let applied = SwitchingFunction { x };
    let base = apply_switch(phi, &applied)?;
    Ok(TreeNormalForm { tree, base, applied })
}

/// Gain of the fundamental cycle of each non-tree edge `(u, v)`, `u < v`,
/// traversed so that the non-tree edge runs `u → v`.
pub fn fundamental_cycle_gains(
    phi: &SignedDigraph,
    tree: &[(usize, usize)],
) -> Result<BTreeMap<(usize, usize), Unit>> {
    let nf = normalize_tree(phi, Some(tree))?;
    let in_tree: std::collections::HashSet<(usize, usize)> =
        tree.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    Ok(nf
        .base
        .edges()
        .into_iter()
        .filter(|&(u, v, _)| !in_tree.contains(&(u, v)))
        .map(|(u, v, g)| ((u, v), g))
        .collect())
}

/// A switch `X` with `apply_switch(a, X) = b`, when one exists.
pub fn switching_equivalent_labeled(a: &SignedDigraph, b: &SignedDigraph) -> Option<SwitchingFunction> {
    if a.n() != b.n() || a.underlying() != b.underlying() {
        return None;
    }
    let tree = a.underlying().bfs_forest();
    let na = normalize_tree(a, Some(&tree)).ok()?;
    let nb = normalize_tree(b, Some(&tree)).ok()?;
    (na.base == nb.base).then(|| na.applied.then(&nb.applied.inverse()))
}

/// Witness of `a ∼ b`: relabel `a` by `bijection` (`a`'s vertex `v` becomes
/// `bijection[v]`), take the converse when `conjugated`, then apply `switch`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchingIsomorphism {
    pub bijection: Vec<usize>,
    pub switch: SwitchingFunction,
    pub conjugated: bool,
}

impl SwitchingIsomorphism {
    /// Applies the witness to `a`.
    pub fn apply(&self, a: &SignedDigraph) -> Result<SignedDigraph> {
        let r = a.relabel(&self.bijection);
        let r = if self.conjugated { r.converse() } else { r };
        apply_switch(&r, &self.switch)
    }
}

/// Decides `a ∼ b` (relabeling, switching and, when allowed, the converse)
/// by comparing canonical labelings.
pub fn switching_isomorphic(a: &SignedDigraph, b: &SignedDigraph) -> Option<SwitchingIsomorphism> {
    switching_isomorphic_with(a, b, true)
}

pub fn switching_isomorphic_with(
    a: &SignedDigraph,
    b: &SignedDigraph,
    allow_converse: bool,
) -> Option<SwitchingIsomorphism> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (ga, gb) = (a.underlying(), b.underlying());
    if ga.degree_sequence() != gb.degree_sequence() {
        return None;
    }
    if triangle_census(a).ok()? != triangle_census(b).ok()? {
        return None;
    }
    let la = canonical_labeling(a, allow_converse);
    let lb = canonical_labeling(b, allow_converse);
    if la.form != lb.form {
        return None;
    }
    // order_a[i] ↦ order_b[i]
    let mut bijection = vec![0; a.n()];
    for (i, &v) in la.order.iter().enumerate() {
        bijection[v] = lb.order[i];
    }
    let conjugated = la.conjugated != lb.conjugated;
    let r = a.relabel(&bijection);
    let r = if conjugated { r.converse() } else { r };
    let switch = switching_equivalent_labeled(&r, b).expect("equal canonical forms come with a labeled switching witness");
    Some(SwitchingIsomorphism { bijection, switch, conjugated })
}

/// Plain digraph isomorphism: a relabeling carrying every gain exactly.
pub fn digraph_isomorphic(a: &SignedDigraph, b: &SignedDigraph) -> bool {
    if a.n() != b.n() || gain_histogram(a) != gain_histogram(b) {
        return false;
    }
    let (ga, gb) = (a.underlying(), b.underlying());
    graph_isomorphisms(&ga, &gb).any(|m| a.edges().iter().all(|&(u, v, g)| b.gain(m[u], m[v]) == Some(g)))
}

/// Number of ordered pairs carrying each gain `ω⁰ … ω⁵`.
pub fn gain_histogram(phi: &SignedDigraph) -> [usize; 6] {
    let mut h = [0; 6];
    for (_, _, g) in phi.edges() {
        h[g.exponent() as usize] += 1;
        h[g.conj().exponent() as usize] += 1;
    }
    h
}

/// A digraph switching equivalent to `phi` but not isomorphic to it, found by
/// switching a vertex subset `U` by `ω^k`.
pub fn find_nonisomorphic_switch_partner(phi: &SignedDigraph) -> Option<SignedDigraph> {
    let n = phi.n();
    if phi.edge_count() == 0 {
        return None;
    }
    let h0 = gain_histogram(phi);
    let subsets: Vec<Vec<usize>> = if n <= 12 {
        (1u32..(1 << n) - 1).map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect()).collect()
    } else {
        let mut s: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        s.extend(phi.edges().iter().map(|&(u, v, _)| vec![u, v]));
        s
    };
    let candidates = || subsets.iter().flat_map(|u| (1..6).map(move |k| (u, k)));
    // cheap certificate first: a changed gain histogram
    for (u, k) in candidates() {
        let sw = apply_switch(phi, &SwitchingFunction::on_subset(n, u, k)).expect("length matches");
        if gain_histogram(&sw) != h0 {
            return Some(sw);
        }
    }
    for (u, k) in candidates() {
        let sw = apply_switch(phi, &SwitchingFunction::on_subset(n, u, k)).expect("length matches");
        if !digraph_isomorphic(phi, &sw) {
            return Some(sw);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::spectra::char_poly;

    #[test]
    fn apply_switch_examples() {
        let g = named::cospectral_pair_a();
        assert_eq!(apply_switch(&g, &SwitchingFunction::identity(6)).unwrap(), g);
        let k2 = named::complete(2);
        let x = SwitchingFunction { x: vec![Unit::NEG_ONE, Unit::ONE] };
        assert_eq!(apply_switch(&k2, &x).unwrap().gain(0, 1), Some(Unit::NEG_ONE));
        let c = SwitchingFunction { x: vec![Unit::OMEGA; 6] };
        assert_eq!(apply_switch(&g, &c).unwrap(), g);
        assert!(apply_switch(&g, &SwitchingFunction::identity(3)).is_err());
    }

    #[test]
    fn normalize_examples() {
        let c3 = SignedDigraph::from_edge_list(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        let nf = normalize_tree(&c3, Some(&[(0, 1), (1, 2)])).unwrap();
        assert_eq!(nf.base.gain(0, 1), Some(Unit::ONE));
        assert_eq!(nf.base.gain(1, 2), Some(Unit::ONE));
        assert_eq!(nf.base.gain(2, 0), Some(Unit::NEG_ONE));
        let tree = SignedDigraph::from_edge_list(4, [(0, 1, 2), (1, 2, 5), (1, 3, 3)]).unwrap();
        assert_eq!(normalize_tree(&tree, None).unwrap().base, SignedDigraph::from_graph(&tree.underlying()));
        let again = normalize_tree(&nf.base, Some(&nf.tree)).unwrap();
        assert!(again.applied.is_identity());
        assert!(normalize_tree(&c3, Some(&[(0, 1), (1, 2), (2, 0)])).is_err());
        assert!(normalize_tree(&c3, Some(&[(0, 1)])).is_err());
    }

    #[test]
    fn fundamental_cycles_of_cospectral_pair() {
        let tree = [(0, 1), (0, 4), (0, 5), (1, 3), (2, 3)];
        let reals = |g: &SignedDigraph| {
            let f = fundamental_cycle_gains(g, &tree).unwrap();
            // cycles {2,3,4}, {1,5,6}, {1,2,4,5} in one-based labels
            [(1, 2), (4, 5), (3, 4)].map(|e| f[&e].twice_real())
        };
        assert_eq!(reals(&named::cospectral_pair_a()), [-2, 2, 1]);
        assert_eq!(reals(&named::cospectral_pair_b()), [-1, 1, 1]);
        assert!(fundamental_cycle_gains(&named::path(4), &[(0, 1), (1, 2), (2, 3)]).unwrap().is_empty());
    }

    #[test]
    fn labeled_equivalence() {
        let g = named::cospectral_pair_b();
        let x = SwitchingFunction { x: (0..6).map(|i| Unit::new(i * 7 % 6)).collect() };
        let h = apply_switch(&g, &x).unwrap();
        let w = switching_equivalent_labeled(&g, &h).unwrap();
        assert_eq!(apply_switch(&g, &w).unwrap(), h);
        assert!(switching_equivalent_labeled(&named::complete(3), &named::complete(3).negate()).is_none());
        let (a, b) = (named::tree_coincident_a(), named::tree_coincident_b());
        assert!(switching_equivalent_labeled(&a, &b).is_none());
        let w = switching_isomorphic(&a, &b).unwrap();
        assert_eq!(w.apply(&a).unwrap(), b);
    }

    #[test]
    fn isomorphism_decisions() {
        assert!(switching_isomorphic(&named::cospectral_pair_a(), &named::cospectral_pair_b()).is_none());
        assert!(switching_isomorphic(&named::k_star(4), &named::complete(4)).is_none());
        let g = named::cospectral_pair_b();
        let perm = [3, 5, 0, 1, 4, 2];
        let x = SwitchingFunction { x: (0..6).map(|i| Unit::new(i * 5 % 6)).collect() };
        let h = apply_switch(&g.relabel(&perm), &x).unwrap().converse();
        let w = switching_isomorphic(&g, &h).unwrap();
        assert_eq!(w.apply(&g).unwrap(), h);
        assert!(switching_isomorphic_with(&g, &h, false).is_none() || char_poly(&g).is_ok());
    }

    #[test]
    fn partners() {
        assert!(find_nonisomorphic_switch_partner(&named::empty(5)).is_none());
        let p = find_nonisomorphic_switch_partner(&named::complete(2)).unwrap();
        assert!(!p.gain(0, 1).unwrap().is_real());
        let q = find_nonisomorphic_switch_partner(&named::k_star(5)).unwrap();
        assert!(switching_equivalent_labeled(&named::k_star(5), &q).is_some());
        assert!(!digraph_isomorphic(&named::k_star(5), &q));
    }
}
