//! Decision procedures for low rank and few nonnegative eigenvalues.

use serde::{Deserialize, Serialize};

use crate::eis::Unit;
use crate::error::{Error, Result};
use crate::expansions::{twin_classes, twin_expand};
use crate::iso::graph_isomorphisms;
use crate::named::{self, C5Type};
use crate::poly::RootCensus;
use crate::sdg::{SignedDigraph, UnderlyingGraph};
use crate::spectra::{cycle_gain, inertia, rank_exact};
use crate::switching::{switching_isomorphic, SwitchingIsomorphism};
use crate::VertexCycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    Rank2CompleteBipartite,
    Rank3Triangle,
    Rank3T4Pos,
    Rank3T4Neg,
    #[serde(rename = "LAMBDA2NEG_K")]
    Lambda2NegK,
    #[serde(rename = "LAMBDA2NEG_KSTAR")]
    Lambda2NegKStar,
    #[serde(rename = "C5_TYPE_A")]
    C5TypeA,
    #[serde(rename = "C5_TYPE_B")]
    C5TypeB,
    #[serde(rename = "C5_TYPE_C")]
    C5TypeC,
    #[serde(rename = "C5_TYPE_D")]
    C5TypeD,
    SemicompleteG,
    SemicompleteTilde,
    SemicompleteHat,
    None,
}

impl Family {
    fn of_c5(ty: C5Type) -> Family {
        match ty {
            C5Type::A => Family::C5TypeA,
            C5Type::B => Family::C5TypeB,
            C5Type::C => Family::C5TypeC,
            C5Type::D => Family::C5TypeD,
        }
    }
}

/// `isomorphism.apply(Φ) == target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub target: SignedDigraph,
    pub isomorphism: SwitchingIsomorphism,
    pub parameters: Vec<usize>,
    /// Name of the reduced class, when the family has several.
    pub class: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationVerdict {
    pub family: Family,
    pub witness: Option<Witness>,
}

impl ClassificationVerdict {
    pub fn none() -> Self {
        ClassificationVerdict { family: Family::None, witness: None }
    }

    pub fn is_none(&self) -> bool {
        self.family == Family::None
    }

    /// Re-applies the witness.
    pub fn verify(&self, phi: &SignedDigraph) -> bool {
        match (&self.witness, self.family) {
            (None, Family::None) => true,
            (Some(w), f) if f != Family::None => w.isomorphism.apply(phi).is_ok_and(|t| t == w.target),
            _ => false,
        }
    }

    fn found(family: Family, phi: &SignedDigraph, target: SignedDigraph, parameters: Vec<usize>, class: Option<&str>) -> Self {
        match switching_isomorphic(phi, &target) {
            Some(isomorphism) => ClassificationVerdict {
                family,
                witness: Some(Witness { target, isomorphism, parameters, class: class.map(str::to_string) }),
            },
            None => ClassificationVerdict::none(),
        }
    }
}

fn require_connected(phi: &SignedDigraph) -> Result<()> {
    if phi.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Rank 2 exactly when `Φ ∼ K_{p,q}`.
pub fn classify_rank2(phi: &SignedDigraph) -> Result<ClassificationVerdict> {
    require_connected(phi)?;
    if rank_exact(phi)? != 2 {
        return Ok(ClassificationVerdict::none());
    }
    let g = phi.underlying();
    let Some((p, q)) = bipartition_sizes(&g) else {
        return Ok(ClassificationVerdict::none());
    };
    let (p, q) = (p.min(q), p.max(q));
    Ok(ClassificationVerdict::found(Family::Rank2CompleteBipartite, phi, named::complete_bipartite(p, q), vec![p, q], None))
}

fn bipartition_sizes(g: &UnderlyingGraph) -> Option<(usize, usize)> {
    let n = g.n();
    let mut side = vec![None; n];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            match side[v] {
                None => {
                    side[v] = Some(!side[u].unwrap());
                    stack.push(v);
                }
                Some(s) if s == side[u].unwrap() => return None,
                _ => {}
            }
        }
    }
    let p = side.iter().filter(|s| **s == Some(false)).count();
    Some((p, n - p))
}

/// The rank-3 reduced classes: four triangles and the two signed transitive tournaments.
pub fn rank3_bases() -> Vec<(&'static str, Family, SignedDigraph)> {
    let k3 = named::complete(3);
    let k3s = named::k_star(3);
    vec![
        ("K3", Family::Rank3Triangle, k3.clone()),
        ("K3*", Family::Rank3Triangle, k3s.clone()),
        ("(K3*,-)", Family::Rank3Triangle, k3s.negate()),
        ("(K3,-)", Family::Rank3Triangle, k3.negate()),
        ("T4+", Family::Rank3T4Pos, named::t4(true)),
        ("T4-", Family::Rank3T4Neg, named::t4(false)),
    ]
}

/// Rank 3 exactly when `Φ ∼ TE((K₃,ϕ), τ)` or `Φ ∼ TE((T₄,±), τ)`.
pub fn classify_rank3(phi: &SignedDigraph) -> Result<ClassificationVerdict> {
    require_connected(phi)?;
    if rank_exact(phi)? != 3 {
        return Ok(ClassificationVerdict::none());
    }
    let classes = twin_classes(phi);
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let reduced = phi.induced(&reps);
    for (name, family, base) in rank3_bases() {
        if base.n() != reduced.n() {
            continue;
        }
        if let Some(w) = switching_isomorphic(&reduced, &base) {
            let mut tau = vec![0; base.n()];
            for (i, c) in classes.iter().enumerate() {
                tau[w.bijection[i]] = c.len();
            }
            let target = twin_expand(&base, &tau)?;
            return Ok(ClassificationVerdict::found(family, phi, target, tau, Some(name)));
        }
    }
    Ok(ClassificationVerdict::none())
}

/// Whether a complete signed digraph is `∼ Kₘ` or `∼ Kₘ*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CliqueClass {
    K,
    KStar,
}

pub fn clique_class(phi: &SignedDigraph) -> Option<CliqueClass> {
    let m = phi.n();
    if phi.edge_count() != m * m.saturating_sub(1) / 2 {
        return None;
    }
    if switching_isomorphic(phi, &named::complete(m)).is_some() {
        Some(CliqueClass::K)
    } else if m >= 3 && switching_isomorphic(phi, &named::k_star(m)).is_some() {
        Some(CliqueClass::KStar)
    } else {
        None
    }
}

/// `λ₂ < 0` exactly when `Φ ∼ Kₙ` or `Φ ∼ Kₙ*`.
pub fn classify_lambda2_negative(phi: &SignedDigraph) -> Result<ClassificationVerdict> {
    let n = phi.n();
    if phi.edge_count() == 0 || inertia(phi)? != RootCensus::new(1, 0, n - 1) {
        return Ok(ClassificationVerdict::none());
    }
    Ok(match clique_class(phi) {
        Some(CliqueClass::K) => ClassificationVerdict::found(Family::Lambda2NegK, phi, named::complete(n), vec![n], None),
        Some(CliqueClass::KStar) => {
            ClassificationVerdict::found(Family::Lambda2NegKStar, phi, named::k_star(n), vec![n], None)
        }
        None => ClassificationVerdict::none(),
    })
}

/// One failed necessary condition for `λ₂ > 0 > λ₃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// 1: a `K₄` without positive triangle, 2: a `C₄` of gain 1, 3: a `C₅` with `Re ≥ 0`.
    pub condition: u8,
    pub subset: Vec<usize>,
}

/// Scans induced `K₄`, `C₄` and `C₅` subdigraphs; an empty report means every necessary condition holds.
pub fn check_two_nonneg_necessary(phi: &SignedDigraph) -> Result<Vec<Violation>> {
    require_connected(phi)?;
    let n = phi.n();
    let g = phi.underlying();
    let mut out = Vec::new();
    let mut subset = Vec::with_capacity(5);
    subsets(n, 4, 0, &mut subset, &mut |s| {
        let h = g.induced(s);
        if h.edge_count() == 6 {
            let positive = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]].iter().any(|t| {
                let c = VertexCycle::new(t.iter().map(|&i| s[i]).collect()).unwrap();
                cycle_gain(phi, &c).unwrap().twice_real() > 0
            });
            if !positive {
                out.push(Violation { condition: 1, subset: s.to_vec() });
            }
        } else if let Some(c) = induced_cycle(&h, s) {
            if cycle_gain(phi, &c).unwrap() == Unit::ONE {
                out.push(Violation { condition: 2, subset: s.to_vec() });
            }
        }
    });
    subsets(n, 5, 0, &mut subset, &mut |s| {
        if let Some(c) = induced_cycle(&g.induced(s), s) {
            if cycle_gain(phi, &c).unwrap().twice_real() >= 0 {
                out.push(Violation { condition: 3, subset: s.to_vec() });
            }
        }
    });
    Ok(out)
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for v in start..n {
        if n - v < k - cur.len() {
            break;
        }
        cur.push(v);
        subsets(n, k, v + 1, cur, f);
        cur.pop();
    }
}

/// When `h` is a cycle through all of its vertices, that cycle in the labels of `s`.
fn induced_cycle(h: &UnderlyingGraph, s: &[usize]) -> Option<VertexCycle> {
    let k = h.n();
    if h.edge_count() != k || (0..k).any(|v| h.degree(v) != 2) || !h.is_connected() {
        return None;
    }
    let mut walk = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    while walk.len() < k {
        let next = h.neighbors(cur).find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
        walk.push(cur);
    }
    VertexCycle::new(walk.into_iter().map(|i| s[i]).collect()).ok()
}

/// Closed-neighbourhood classes in order of least vertex.
fn clique_blocks(g: &UnderlyingGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let closed = |v: usize| {
        let mut c: Vec<usize> = g.neighbors(v).collect();
        c.push(v);
        c.sort_unstable();
        c
    };
    let keys: Vec<Vec<usize>> = (0..n).map(closed).collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; n];
    for u in 0..n {
        if seen[u] {
            continue;
        }
        let b: Vec<usize> = (u..n).filter(|&v| keys[v] == keys[u]).collect();
        for &v in &b {
            seen[v] = true;
        }
        blocks.push(b);
    }
    blocks
}

/// Blocks of a clique expansion of `Cₖ` listed around the cycle.
fn cycle_blocks(g: &UnderlyingGraph, k: usize) -> Option<Vec<Vec<usize>>> {
    let blocks = clique_blocks(g);
    if blocks.len() != k {
        return None;
    }
    let quotient = UnderlyingGraph::from_edges(
        k,
        &(0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| g.is_adjacent(blocks[i][0], blocks[j][0]))
            .collect::<Vec<_>>(),
    )
    .ok()?;
    let order = induced_cycle(&quotient, &(0..k).collect::<Vec<_>>())?;
    Some(order.vertices().iter().map(|&i| blocks[i].clone()).collect())
}

/// Detects the signature type of a signed digraph on a clique expansion of `C₅`.
pub fn c5_signature_type(phi: &SignedDigraph) -> Result<ClassificationVerdict> {
    let blocks = cycle_blocks(&phi.underlying(), 5)
        .ok_or_else(|| Error::WrongShape("underlying graph is not a clique expansion of C5".into()))?;
    let block_class: Vec<Option<CliqueClass>> = blocks.iter().map(|b| clique_class(&phi.induced(b))).collect();
    let union_class: Vec<Option<CliqueClass>> = (0..5)
        .map(|i| {
            let mut u = blocks[i].clone();
            u.extend(&blocks[(i + 1) % 5]);
            clique_class(&phi.induced(&u))
        })
        .collect();
    if block_class.iter().chain(&union_class).any(Option::is_none) {
        return Ok(ClassificationVerdict::none());
    }
    let star_blocks: Vec<usize> = (0..5).filter(|&i| block_class[i] == Some(CliqueClass::KStar)).collect();
    let star_unions: Vec<usize> = (0..5).filter(|&i| union_class[i] == Some(CliqueClass::KStar)).collect();
    // real parts (doubled) of the transversal 5-cycles
    let mut reals = std::collections::BTreeSet::new();
    transversals(&blocks, 0, &mut Vec::new(), &mut |t| {
        reals.insert(cycle_gain(phi, &VertexCycle::new(t.to_vec()).unwrap()).unwrap().twice_real());
    });
    let reals: Vec<i8> = reals.into_iter().collect();
    // (type, index placed at position 4 with the cycle direction kept)
    let (ty, anchor) = match (star_blocks.as_slice(), star_unions.as_slice(), reals.as_slice()) {
        ([], [], [-2]) => (C5Type::A, 4),
        ([], [], [-1]) => (C5Type::C, 4),
        ([b], _, [-2]) => (C5Type::B, *b),
        ([], [u], _) if reals.iter().all(|&r| r < 0) => (C5Type::D, *u),
        _ => return Ok(ClassificationVerdict::none()),
    };
    let order: Vec<usize> = (0..5).map(|j| (anchor + 1 + j) % 5).collect();
    let tau: Vec<usize> = order.iter().map(|&i| blocks[i].len()).collect();
    if ty == C5Type::B && tau[4] < 2 {
        return Ok(ClassificationVerdict::none());
    }
    let target = named::c5_type(ty, &tau)?;
    Ok(ClassificationVerdict::found(Family::of_c5(ty), phi, target, tau, None))
}

fn transversals(blocks: &[Vec<usize>], i: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if i == blocks.len() {
        f(cur);
        return;
    }
    for &v in &blocks[i] {
        cur.push(v);
        transversals(blocks, i + 1, cur, f);
        cur.pop();
    }
}

/// Columns `τ¹ … τ¹⁴` of the maximal expansion table; `None` is a free entry.
pub const C5_TABLE: [[Option<usize>; 5]; 14] = {
    const F: Option<usize> = None;
    const fn c(a: [usize; 5]) -> [Option<usize>; 5] {
        [Some(a[0]), Some(a[1]), Some(a[2]), Some(a[3]), Some(a[4])]
    }
    [
        c([3, 3, 3, 2, 1]),
        c([3, 3, 2, 2, 2]),
        c([3, 4, 2, 2, 1]),
        c([3, 2, 4, 2, 1]),
        c([4, 2, 2, 2, 2]),
        c([5, 3, 1, 2, 1]),
        c([5, 2, 2, 2, 1]),
        c([5, 1, 3, 2, 1]),
        c([3, 1, 5, 2, 1]),
        [F, Some(1), Some(2), Some(2), Some(1)],
        [F, F, Some(2), Some(1), Some(2)],
        [F, F, Some(1), Some(1), F],
        [F, Some(1), Some(1), F, F],
        [F, Some(1), Some(1), Some(1), Some(1)],
    ]
};

/// Column indices (zero-based) allowed for a type.
pub fn c5_columns(ty: C5Type) -> std::ops::Range<usize> {
    match ty {
        C5Type::A => 0..13,
        C5Type::B | C5Type::D => 11..13,
        C5Type::C => 13..14,
    }
}

/// Position maps `σ` with `τ'[i] = τ[σ[i]]` that preserve the type's distinguished position.
pub fn c5_symmetries(ty: C5Type) -> Vec<[usize; 5]> {
    match ty {
        C5Type::A | C5Type::C => (0..5)
            .flat_map(|r| [false, true].map(move |flip| {
                let mut s = [0; 5];
                for (i, x) in s.iter_mut().enumerate() {
                    *x = if flip { (5 + r - i) % 5 } else { (r + i) % 5 };
                }
                s
            }))
            .collect(),
        C5Type::B => vec![[0, 1, 2, 3, 4], [3, 2, 1, 0, 4]],
        C5Type::D => vec![[0, 1, 2, 3, 4], [4, 3, 2, 1, 0]],
    }
}

/// Whether `τ` fits under an allowed column of the table, up to the type's symmetries.
pub fn check_c5_table(tau: &[usize], ty: C5Type) -> Result<bool> {
    if tau.len() != 5 {
        return Err(Error::LengthMismatch { expected: 5, got: tau.len() });
    }
    Ok(c5_symmetries(ty).iter().any(|s| {
        c5_columns(ty).any(|j| (0..5).all(|i| C5_TABLE[j][i].is_none_or(|m| tau[s[i]] <= m)))
    }))
}

/// `λ₂ > 0 > λ₃` as exact inertia.
pub fn has_two_positive_no_zero(phi: &SignedDigraph) -> Result<bool> {
    let n = phi.n();
    Ok(n >= 2 && inertia(phi)? == RootCensus::new(2, 0, n - 2))
}

/// Spectral test on an `(n−1,1)`- or `(n−2,2)`-kite, cross-checked against
/// the clique away from the pendant vertex being `∼ K` or `∼ K*`.
pub fn kite_condition(phi: &SignedDigraph) -> Result<bool> {
    let n = phi.n();
    let g = phi.underlying();
    let shape = [1, 2].into_iter().find(|&b| {
        n > b + 1 && named::kite(n - b, b).is_ok_and(|k| graph_isomorphisms(&g, &k.underlying()).next().is_some())
    });
    if shape.is_none() {
        return Err(Error::WrongShape(format!("not an (n-1,1)- or (n-2,2)-kite on {n} vertices")));
    }
    let spectral = has_two_positive_no_zero(phi)?;
    if n >= 5 {
        let pendant = (0..n).find(|&v| g.degree(v) == 1).expect("kites have a pendant vertex");
        let away: Vec<usize> = (0..n).filter(|&v| v != pendant && !g.is_adjacent(v, pendant)).collect();
        let structural = clique_class(&phi.induced(&away)).is_some();
        if structural != spectral {
            log::warn!("kite: spectral verdict {spectral} disagrees with the clique criterion {structural}");
        }
    }
    Ok(spectral)
}

/// Classes with `λ₂ > 0 > λ₃` on `CE(P₄, [p,1,1,q])`, reported with `p ≥ q`.
pub fn semicomplete_bridge_classify(phi: &SignedDigraph) -> Result<ClassificationVerdict> {
    let g = phi.underlying();
    let wrong = || Error::WrongShape("underlying graph is not CE(P4, [p,1,1,q]) with p, q >= 2".into());
    let blocks = clique_blocks(&g);
    if blocks.len() != 4 {
        return Err(wrong());
    }
    let singles: Vec<usize> = (0..4).filter(|&i| blocks[i].len() == 1).collect();
    let ends: Vec<usize> = (0..4).filter(|&i| blocks[i].len() >= 2).collect();
    if singles.len() != 2 || ends.len() != 2 {
        return Err(wrong());
    }
    let adj = |i: usize, j: usize| g.is_adjacent(blocks[i][0], blocks[j][0]);
    let (s0, s1) = (singles[0], singles[1]);
    let (e0, e1) = if adj(ends[0], s0) { (ends[0], ends[1]) } else { (ends[1], ends[0]) };
    if !(adj(s0, s1) && adj(e0, s0) && adj(e1, s1) && !adj(e0, s1) && !adj(e1, s0) && !adj(e0, e1)) {
        return Err(wrong());
    }
    // larger block first, so tilde and hat name distinct classes
    let (p, q) = (blocks[e0].len().max(blocks[e1].len()), blocks[e0].len().min(blocks[e1].len()));
    if !has_two_positive_no_zero(phi)? {
        return Ok(ClassificationVerdict::none());
    }
    let candidates = [
        (Family::SemicompleteG, named::semicomplete(p, q)?),
        (Family::SemicompleteTilde, named::semicomplete_tilde(p, q)?),
        (Family::SemicompleteHat, named::semicomplete_hat(p, q)?),
    ];
    for (family, target) in candidates {
        let v = ClassificationVerdict::found(family, phi, target, vec![p, q], None);
        if !v.is_none() {
            return Ok(v);
        }
    }
    Ok(ClassificationVerdict::none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansions::clique_expand;
    use crate::switching::{apply_switch, SwitchingFunction};

    fn scramble(g: &SignedDigraph, seed: usize) -> SignedDigraph {
        let n = g.n();
        let perm: Vec<usize> = (0..n).map(|i| (2 * n - 1 - i + seed) % n).collect();
        let x = SwitchingFunction { x: (0..n).map(|i| Unit::new((i * i + seed) as i64)).collect() };
        apply_switch(&g.relabel(&perm), &x).unwrap()
    }

    #[test]
    fn rank2() {
        let v = classify_rank2(&scramble(&named::complete_bipartite(2, 3), 2)).unwrap();
        assert_eq!(v.family, Family::Rank2CompleteBipartite);
        assert_eq!(v.witness.as_ref().unwrap().parameters, vec![2, 3]);
        assert!(v.verify(&scramble(&named::complete_bipartite(2, 3), 2)));
        assert!(classify_rank2(&named::cycle(4, Unit::OMEGA).unwrap()).unwrap().is_none());
        assert!(classify_rank2(&named::complete(3)).unwrap().is_none());
        assert!(classify_rank2(&named::empty(2)).is_err());
    }

    #[test]
    fn rank3() {
        let g = twin_expand(&named::k_star(3), &[3, 5, 16]).unwrap();
        let v = classify_rank3(&g).unwrap();
        assert_eq!(v.family, Family::Rank3Triangle);
        let w = v.witness.as_ref().unwrap();
        assert_eq!(w.class.as_deref(), Some("K3*"));
        let mut tau = w.parameters.clone();
        tau.sort();
        assert_eq!(tau, vec![3, 5, 16]);
        assert!(v.verify(&g));
        let t = twin_expand(&named::t4(true), &[1, 1, 6, 6]).unwrap();
        assert_eq!(classify_rank3(&t).unwrap().family, Family::Rank3T4Pos);
        assert!(classify_rank3(&named::path(4)).unwrap().is_none());
    }

    #[test]
    fn lambda2() {
        assert_eq!(classify_lambda2_negative(&scramble(&named::k_star(6), 1)).unwrap().family, Family::Lambda2NegKStar);
        assert_eq!(classify_lambda2_negative(&named::complete(4)).unwrap().family, Family::Lambda2NegK);
        assert!(classify_lambda2_negative(&named::k_double_star()).unwrap().is_none());
        assert!(classify_lambda2_negative(&named::complete(4).negate()).unwrap().is_none());
    }

    #[test]
    fn necessary_conditions() {
        let c4 = named::cycle(4, Unit::ONE).unwrap();
        assert!(check_two_nonneg_necessary(&c4).unwrap().iter().any(|v| v.condition == 2));
        let g = clique_expand(&named::cycle(4, Unit::NEG_OMEGA).unwrap(), &[3, 1, 1, 1]).unwrap();
        assert!(check_two_nonneg_necessary(&g).unwrap().is_empty());
        let k4 = named::complete(4).negate();
        assert!(check_two_nonneg_necessary(&k4).unwrap().iter().any(|v| v.condition == 1));
        let c5 = named::cycle(5, Unit::ONE).unwrap();
        assert!(check_two_nonneg_necessary(&c5).unwrap().iter().any(|v| v.condition == 3));
    }

    #[test]
    fn c5_types() {
        for (ty, tau) in [
            (C5Type::A, [2, 1, 1, 1, 1]),
            (C5Type::B, [1, 1, 1, 1, 3]),
            (C5Type::C, [3, 1, 1, 1, 1]),
            (C5Type::D, [2, 1, 1, 1, 2]),
        ] {
            let g = named::c5_type(ty, &tau).unwrap();
            let v = c5_signature_type(&scramble(&g, 3)).unwrap();
            assert_eq!(v.family, Family::of_c5(ty), "{ty:?}");
            assert!(v.verify(&scramble(&g, 3)));
        }
        let c = named::cycle(5, Unit::NEG_OMEGA).unwrap();
        assert_eq!(c5_signature_type(&c).unwrap().family, Family::C5TypeC);
        let c = named::cycle(5, Unit::ONE).unwrap();
        assert!(c5_signature_type(&c).unwrap().is_none());
        assert!(c5_signature_type(&named::path(5)).is_err());
    }

    #[test]
    fn table() {
        assert!(check_c5_table(&[3, 3, 3, 2, 1], C5Type::A).unwrap());
        assert!(check_c5_table(&[1, 2, 3, 3, 3], C5Type::A).unwrap());
        assert!(!check_c5_table(&[4, 3, 3, 2, 2], C5Type::A).unwrap());
        assert!(check_c5_table(&[9, 1, 1, 1, 1], C5Type::C).unwrap());
        assert!(!check_c5_table(&[9, 2, 1, 1, 1], C5Type::C).unwrap());
        assert!(check_c5_table(&[7, 1, 1, 4, 5], C5Type::D).unwrap());
        assert!(check_c5_table(&[3, 3], C5Type::A).is_err());
    }

    #[test]
    fn kites() {
        assert!(kite_condition(&named::kite(5, 2).unwrap()).unwrap());
        let mut g = named::kite(5, 2).unwrap();
        g.set_gain(0, 1, Unit::OMEGA);
        g.set_gain(2, 3, Unit::OMEGA);
        assert!(!kite_condition(&g).unwrap());
        let mut g = named::kite(4, 1).unwrap();
        g.set_gain(0, 1, Unit::OMEGA);
        assert!(kite_condition(&g).unwrap());
        assert!(kite_condition(&named::path(5)).is_err());
    }

    #[test]
    fn semicomplete() {
        let v = semicomplete_bridge_classify(&named::semicomplete(2, 2).unwrap()).unwrap();
        assert_eq!(v.family, Family::SemicompleteG);
        let t = named::semicomplete_tilde(3, 2).unwrap();
        assert_eq!(inertia(&t).unwrap(), RootCensus::new(2, 0, 5));
        assert_eq!(semicomplete_bridge_classify(&scramble(&t, 2)).unwrap().family, Family::SemicompleteTilde);
        let h = named::semicomplete_tilde(2, 3).unwrap();
        assert_eq!(semicomplete_bridge_classify(&h).unwrap().family, Family::SemicompleteHat);
        assert!(semicomplete_bridge_classify(&named::lambda3_zero_a()).is_err() || {
            semicomplete_bridge_classify(&named::lambda3_zero_a()).unwrap().is_none()
        });
        assert!(semicomplete_bridge_classify(&named::path(4)).is_err());
    }

    #[test]
    fn verdict_json() {
        let v = classify_lambda2_negative(&named::k_star(4)).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.contains("LAMBDA2NEG_KSTAR"));
        let back: ClassificationVerdict = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
