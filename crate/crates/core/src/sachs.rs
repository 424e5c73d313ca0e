//! Characteristic polynomials from elementary subgraphs.
//!
//! `a_j = Σ_H (−1)^{p(H)+n(H)} 2^{c(H)−z(H)}` over elementary subgraphs on
//! `j` vertices, where a cycle is negative when its gain has negative real
//! part and non-real when its gain is not `±1`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::eis::Unit;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::sdg::{SignedDigraph, UnderlyingGraph, VertexCycle};
use crate::spectra::cycle_gain;

/// Orders above this are refused unless forced.
pub const SACHS_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Edge(usize, usize),
    Cycle(VertexCycle),
}

/// A vertex-disjoint union of edges and cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementarySubgraph {
    pub components: Vec<Component>,
}

/// `p(H)`, `c(H)`, `n(H)`, `z(H)` for a given signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementaryStats {
    pub components: usize,
    pub cycles: usize,
    pub negative: usize,
    pub non_real: usize,
}

impl ElementarySubgraph {
    pub fn vertex_count(&self) -> usize {
        self.components
            .iter()
            .map(|c| match c {
                Component::Edge(..) => 2,
                Component::Cycle(cy) => cy.len(),
            })
            .sum()
    }

    pub fn stats(&self, phi: &SignedDigraph) -> Result<ElementaryStats> {
        let mut s = ElementaryStats { components: self.components.len(), cycles: 0, negative: 0, non_real: 0 };
        for c in &self.components {
            if let Component::Cycle(cy) = c {
                let g = cycle_gain(phi, cy)?;
                s.cycles += 1;
                let tr = g.twice_real();
                assert_ne!(tr, 0, "T6 cycle gains never have zero real part");
                if tr < 0 {
                    s.negative += 1;
                }
                if !g.is_real() {
                    s.non_real += 1;
                }
            }
        }
        Ok(s)
    }

    /// The signed weight `(−1)^{p+n} 2^{c−z}`.
    pub fn weight(&self, phi: &SignedDigraph) -> Result<i64> {
        let s = self.stats(phi)?;
        let sign = if (s.components + s.negative) % 2 == 0 { 1 } else { -1 };
        Ok(sign << (s.cycles - s.non_real))
    }
}

/// Cycles of `g`, one traversal each: least vertex first, second vertex below the last.
pub fn enumerate_cycles(g: &UnderlyingGraph) -> Vec<VertexCycle> {
    let n = g.n();
    let mut out = Vec::new();
    for s in 0..n {
        let mut path = vec![s];
        let mut on = vec![false; n];
        on[s] = true;
        cycles_from(g, s, &mut path, &mut on, &mut out);
    }
    out
}

fn cycles_from(g: &UnderlyingGraph, s: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<VertexCycle>) {
    let last = *path.last().unwrap();
    for w in g.neighbors(last) {
        if w == s && path.len() >= 3 && path[1] < last {
            out.push(VertexCycle::new(path.clone()).expect("distinct vertices"));
        }
        if w > s && !on[w] {
            on[w] = true;
            path.push(w);
            cycles_from(g, s, path, on, out);
            path.pop();
            on[w] = false;
        }
    }
}

/// All elementary subgraphs of `g` on exactly `j` vertices.
pub fn enumerate_elementary(g: &UnderlyingGraph, j: usize) -> impl Iterator<Item = ElementarySubgraph> {
    let cycles = enumerate_cycles(g);
    let n = g.n();
    let mut by_min: Vec<Vec<(u64, VertexCycle)>> = vec![Vec::new(); n];
    for c in cycles {
        let mask = c.vertices().iter().fold(0u64, |m, &v| m | 1 << v);
        by_min[c.vertices()[0]].push((mask, c));
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    elementary_rec(g, &by_min, 0, 0, 0, j, &mut cur, &mut out);
    out.into_iter()
}

#[allow(clippy::too_many_arguments)]
fn elementary_rec(
    g: &UnderlyingGraph,
    by_min: &[Vec<(u64, VertexCycle)>],
    v: usize,
    used: u64,
    size: usize,
    target: usize,
    cur: &mut Vec<Component>,
    out: &mut Vec<ElementarySubgraph>,
) {
    if size == target {
        out.push(ElementarySubgraph { components: cur.clone() });
        return;
    }
    let n = g.n();
    if v >= n || size + (n - v) < target {
        return;
    }
    if used >> v & 1 == 1 {
        elementary_rec(g, by_min, v + 1, used, size, target, cur, out);
        return;
    }
    // v left uncovered
    elementary_rec(g, by_min, v + 1, used, size, target, cur, out);
    for w in v + 1..n {
        if g.is_adjacent(v, w) && used >> w & 1 == 0 && size + 2 <= target {
            cur.push(Component::Edge(v, w));
            elementary_rec(g, by_min, v + 1, used | 1 << v | 1 << w, size + 2, target, cur, out);
            cur.pop();
        }
    }
    for (mask, c) in &by_min[v] {
        if mask & used == 0 && size + c.len() <= target {
            cur.push(Component::Cycle(c.clone()));
            elementary_rec(g, by_min, v + 1, used | mask, size + c.len(), target, cur, out);
            cur.pop();
        }
    }
}

/// `χ(E(Φ))` by the elementary subgraph expansion; refuses orders above [`SACHS_LIMIT`].
pub fn char_poly_sachs(phi: &SignedDigraph) -> Result<IntPolynomial> {
    if phi.n() > SACHS_LIMIT {
        return Err(Error::SizeLimit { what: "elementary subgraph enumeration", n: phi.n(), limit: SACHS_LIMIT });
    }
    char_poly_sachs_forced(phi)
}

/// As [`char_poly_sachs`] without the order guard. Exponential time.
pub fn char_poly_sachs_forced(phi: &SignedDigraph) -> Result<IntPolynomial> {
    let n = phi.n();
    if n > 64 {
        return Err(Error::SizeLimit { what: "elementary subgraph bitmask", n, limit: 64 });
    }
    let g = phi.underlying();
    // (mask, size, sign flip, doubling) per cycle
    let mut by_min: Vec<Vec<(u64, usize, bool, bool)>> = vec![Vec::new(); n];
    for c in enumerate_cycles(&g) {
        let gain: Unit = cycle_gain(phi, &c)?;
        let tr = gain.twice_real();
        assert_ne!(tr, 0, "T6 cycle gains never have zero real part");
        let mask = c.vertices().iter().fold(0u64, |m, &v| m | 1 << v);
        by_min[c.vertices()[0]].push((mask, c.len(), tr < 0, gain.is_real()));
    }
    let mut a = vec![0i64; n + 1];
    sachs_rec(phi, &by_min, 0, 0, 0, 1, &mut a);
    Ok(IntPolynomial::new(a.into_iter().map(BigInt::from).collect()))
}

// `weight` carries (−1)^{p+n}·2^{c−z} of the partial subgraph.
fn sachs_rec(
    phi: &SignedDigraph,
    by_min: &[Vec<(u64, usize, bool, bool)>],
    v: usize,
    used: u64,
    size: usize,
    weight: i64,
    a: &mut [i64],
) {
    let n = phi.n();
    if v == n {
        a[size] += weight;
        return;
    }
    if used >> v & 1 == 1 {
        sachs_rec(phi, by_min, v + 1, used, size, weight, a);
        return;
    }
    sachs_rec(phi, by_min, v + 1, used, size, weight, a);
    for w in v + 1..n {
        if used >> w & 1 == 0 && phi.is_adjacent(v, w) {
            sachs_rec(phi, by_min, v + 1, used | 1 << v | 1 << w, size + 2, -weight, a);
        }
    }
    for &(mask, len, negative, real) in &by_min[v] {
        if mask & used == 0 {
            let mut w = -weight;
            if negative {
                w = -w;
            }
            if real {
                w *= 2;
            }
            sachs_rec(phi, by_min, v + 1, used | mask, size + len, w, a);
        }
    }
}

/// Sum of weights over `enumerate_elementary`, for cross-checking the recursive accumulator.
pub fn coefficient_by_listing(phi: &SignedDigraph, j: usize) -> Result<BigInt> {
    let mut s = BigInt::zero();
    for h in enumerate_elementary(&phi.underlying(), j) {
        s += h.weight(phi)?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::spectra::char_poly;

    fn cycle_graph(n: usize) -> UnderlyingGraph {
        named::cycle(n, Unit::ONE).unwrap().underlying()
    }

    #[test]
    fn elementary_counts() {
        let k3 = UnderlyingGraph::complete(3);
        assert_eq!(enumerate_elementary(&k3, 2).count(), 3);
        assert_eq!(enumerate_elementary(&k3, 3).count(), 1);
        assert_eq!(enumerate_elementary(&cycle_graph(4), 4).count(), 3);
        assert_eq!(enumerate_elementary(&k3, 0).count(), 1);
    }

    #[test]
    fn cycle_enumeration() {
        assert_eq!(enumerate_cycles(&UnderlyingGraph::complete(4)).len(), 7);
        assert_eq!(enumerate_cycles(&cycle_graph(6)).len(), 1);
    }

    #[test]
    fn sachs_examples() {
        assert_eq!(char_poly_sachs(&named::k_star(4)).unwrap(), IntPolynomial::from_i64(&[1, 0, -6, -6, -1]));
        let c4 = named::cycle(4, Unit::NEG_OMEGA).unwrap();
        assert_eq!(char_poly_sachs(&c4).unwrap(), IntPolynomial::from_i64(&[1, 0, -4, 0, 3]));
        assert_eq!(char_poly_sachs(&named::path(4)).unwrap(), IntPolynomial::from_i64(&[1, 0, -3, 0, 1]));
    }

    #[test]
    fn listing_agrees_with_accumulator() {
        let g = named::cospectral_pair_b();
        let p = char_poly_sachs(&g).unwrap();
        for j in 0..=6 {
            assert_eq!(coefficient_by_listing(&g, j).unwrap(), p.coeff_of_power(6 - j));
        }
    }

    #[test]
    fn agrees_with_traces() {
        for g in [named::cospectral_pair_a(), named::k_double_star(), named::c5_lambda3_zero_a()] {
            assert_eq!(char_poly_sachs(&g).unwrap(), char_poly(&g).unwrap());
        }
    }

    #[test]
    fn size_guard() {
        assert!(matches!(char_poly_sachs(&named::path(13)), Err(Error::SizeLimit { .. })));
        assert!(char_poly_sachs_forced(&named::path(13)).is_ok());
    }
}
