//! Twin and clique expansions, and their inverse reductions.

use crate::eis::Unit;
use crate::error::{Error, Result};
use crate::sdg::SignedDigraph;

fn check_tau(phi: &SignedDigraph, tau: &[usize]) -> Result<()> {
    if tau.len() != phi.n() {
        return Err(Error::LengthMismatch { expected: phi.n(), got: tau.len() });
    }
    if let Some(j) = tau.iter().position(|&t| t == 0) {
        return Err(Error::InvalidParameters {
            name: "expansion vector".into(),
            reason: format!("entry {j} is zero"),
        });
    }
    Ok(())
}

/// First vertex of each block followed by the total order.
pub fn block_offsets(tau: &[usize]) -> Vec<usize> {
    let mut off = Vec::with_capacity(tau.len() + 1);
    let mut acc = 0;
    off.push(0);
    for &t in tau {
        acc += t;
        off.push(acc);
    }
    off
}

fn expand(phi: &SignedDigraph, tau: &[usize], clique: bool) -> Result<SignedDigraph> {
    check_tau(phi, tau)?;
    let off = block_offsets(tau);
    let mut out = SignedDigraph::empty(off[tau.len()]);
    for i in 0..phi.n() {
        if clique {
            for a in off[i]..off[i + 1] {
                for b in a + 1..off[i + 1] {
                    out.set_gain(a, b, Unit::ONE);
                }
            }
        }
        for j in i + 1..phi.n() {
            if let Some(g) = phi.gain(i, j) {
                for a in off[i]..off[i + 1] {
                    for b in off[j]..off[j + 1] {
                        out.set_gain(a, b, g);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Replaces vertex `j` by an independent set of `τ_j` copies.
pub fn twin_expand(phi: &SignedDigraph, tau: &[usize]) -> Result<SignedDigraph> {
    expand(phi, tau, false)
}

/// Replaces vertex `j` by a positive clique of `τ_j` copies.
pub fn clique_expand(phi: &SignedDigraph, tau: &[usize]) -> Result<SignedDigraph> {
    expand(phi, tau, true)
}

/// The unit `c` with `E_uz = c·E_vz` for all `z` outside `{u, v}`, if one exists.
fn row_ratio(phi: &SignedDigraph, u: usize, v: usize) -> Option<Unit> {
    let mut c: Option<Unit> = None;
    for z in 0..phi.n() {
        if z == u || z == v {
            continue;
        }
        match (phi.gain(u, z), phi.gain(v, z)) {
            (None, None) => {}
            (Some(a), Some(b)) => {
                let r = a * b.conj();
                match c {
                    None => c = Some(r),
                    Some(c0) if c0 != r => return None,
                    _ => {}
                }
            }
            _ => return None,
        }
    }
    Some(c.unwrap_or(Unit::ONE))
}

pub fn are_twins(phi: &SignedDigraph, u: usize, v: usize) -> bool {
    u != v && !phi.is_adjacent(u, v) && row_ratio(phi, u, v).is_some()
}

pub fn are_pseudotwins(phi: &SignedDigraph, u: usize, v: usize) -> bool {
    if u == v {
        return false;
    }
    match phi.gain(u, v) {
        None => false,
        Some(c) => {
            (0..phi.n()).filter(|&z| z != u && z != v).all(|z| match (phi.gain(u, z), phi.gain(v, z)) {
                (None, None) => true,
                (Some(a), Some(b)) => a == c * b,
                _ => false,
            })
        }
    }
}

/// Pairs `(u, v)`, `u < v`, of switching twins.
pub fn find_twins(phi: &SignedDigraph) -> Vec<(usize, usize)> {
    pairs(phi, are_twins)
}

/// Pairs `(u, v)`, `u < v`, of pseudotwins.
pub fn find_pseudotwins(phi: &SignedDigraph) -> Vec<(usize, usize)> {
    pairs(phi, are_pseudotwins)
}

fn pairs(phi: &SignedDigraph, f: fn(&SignedDigraph, usize, usize) -> bool) -> Vec<(usize, usize)> {
    let n = phi.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if f(phi, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

fn classes(phi: &SignedDigraph, f: fn(&SignedDigraph, usize, usize) -> bool) -> Vec<Vec<usize>> {
    let n = phi.n();
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for u in 0..n {
        if assigned[u] {
            continue;
        }
        assigned[u] = true;
        let mut cls = vec![u];
        for v in u + 1..n {
            if !assigned[v] && f(phi, u, v) {
                assigned[v] = true;
                cls.push(v);
            }
        }
        out.push(cls);
    }
    out
}

/// Twin classes (the relation is an equivalence), ordered by least vertex.
pub fn twin_classes(phi: &SignedDigraph) -> Vec<Vec<usize>> {
    classes(phi, are_twins)
}

/// Pseudotwin classes, ordered by least vertex.
pub fn pseudotwin_classes(phi: &SignedDigraph) -> Vec<Vec<usize>> {
    classes(phi, are_pseudotwins)
}

fn reduce_with(
    phi: &SignedDigraph,
    f: fn(&SignedDigraph, usize, usize) -> bool,
    mut pick: impl FnMut(&[(usize, usize)]) -> usize,
) -> SignedDigraph {
    let mut cur = phi.clone();
    loop {
        let ps = pairs(&cur, f);
        if ps.is_empty() {
            return cur;
        }
        let (_, v) = ps[pick(&ps) % ps.len()];
        let keep: Vec<usize> = (0..cur.n()).filter(|&w| w != v).collect();
        cur = cur.induced(&keep);
    }
}

/// Deletes twins until none remain, keeping the least vertex of each class.
pub fn twin_reduce(phi: &SignedDigraph) -> SignedDigraph {
    reduce_by_classes(phi, twin_classes)
}

/// Deletes pseudotwins until none remain, keeping the least vertex of each class.
pub fn clique_reduce(phi: &SignedDigraph) -> SignedDigraph {
    reduce_by_classes(phi, pseudotwin_classes)
}

fn reduce_by_classes(phi: &SignedDigraph, cls: fn(&SignedDigraph) -> Vec<Vec<usize>>) -> SignedDigraph {
    let mut cur = phi.clone();
    loop {
        let c = cls(&cur);
        if c.len() == cur.n() {
            return cur;
        }
        let keep: Vec<usize> = c.iter().map(|k| k[0]).collect();
        cur = cur.induced(&keep);
    }
}

/// Twin reduction where `pick` chooses which detected pair to collapse next.
pub fn twin_reduce_by(phi: &SignedDigraph, pick: impl FnMut(&[(usize, usize)]) -> usize) -> SignedDigraph {
    reduce_with(phi, are_twins, pick)
}

/// Clique reduction where `pick` chooses which detected pair to collapse next.
pub fn clique_reduce_by(phi: &SignedDigraph, pick: impl FnMut(&[(usize, usize)]) -> usize) -> SignedDigraph {
    reduce_with(phi, are_pseudotwins, pick)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn expansion_shapes() {
        let k2 = named::complete(2);
        let kpq = twin_expand(&k2, &[2, 3]).unwrap();
        assert_eq!((kpq.n(), kpq.edge_count()), (5, 6));
        assert_eq!(clique_expand(&k2, &[2, 1]).unwrap(), named::complete(3));
        let phi = named::k_star(4);
        assert_eq!(twin_expand(&phi, &[1, 1, 1, 1]).unwrap(), phi);
        assert_eq!(clique_expand(&phi, &[1, 1, 1, 1]).unwrap(), phi);
        assert!(twin_expand(&phi, &[1, 1]).is_err());
        assert!(twin_expand(&phi, &[1, 0, 1, 1]).is_err());
    }

    #[test]
    fn twins_and_pseudotwins() {
        let k23 = twin_expand(&named::complete(2), &[2, 3]).unwrap();
        assert_eq!(find_twins(&k23).len(), 4);
        assert!(find_twins(&named::complete(3)).is_empty());
        assert_eq!(find_pseudotwins(&named::complete(3)).len(), 3);
        assert!(find_pseudotwins(&named::complete(3).negate()).is_empty());
        let p3 = named::path(3);
        let ce = clique_expand(&p3, &[1, 2, 1]).unwrap();
        assert_eq!(find_pseudotwins(&ce), vec![(1, 2)]);
    }

    #[test]
    fn twins_up_to_unit() {
        // expanded arc, then one copy switched by ω
        let arc = SignedDigraph::from_edge_list(2, [(0, 1, 1)]).unwrap();
        let mut te = twin_expand(&arc, &[1, 2]).unwrap();
        te.set_gain(0, 2, Unit::new(2));
        assert_eq!(find_twins(&te), vec![(1, 2)]);
    }

    #[test]
    fn reductions() {
        let k34 = twin_expand(&named::complete(2), &[3, 4]).unwrap();
        assert_eq!(twin_reduce(&k34), named::complete(2));
        assert_eq!(clique_reduce(&named::complete(6)).n(), 1);
        let t4 = named::t4(true);
        let te = twin_expand(&t4, &[2, 1, 3, 2]).unwrap();
        assert_eq!(twin_reduce(&te), t4);
        assert_eq!(twin_reduce_by(&te, |ps| ps.len() - 1).n(), 4);
    }
}
