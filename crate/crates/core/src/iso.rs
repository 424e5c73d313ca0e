//! Plain graph isomorphism by backtracking.

use crate::sdg::UnderlyingGraph;

/// Iterator over all isomorphisms `G → H`, each given as `map[g] = h`.
pub struct Isomorphisms<'a> {
    g: &'a UnderlyingGraph,
    h: &'a UnderlyingGraph,
    order: Vec<usize>,
    g_deg: Vec<usize>,
    h_deg: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    // next candidate to try at each depth
    next: Vec<usize>,
    depth: usize,
    done: bool,
}

/// Every vertex bijection mapping edges of `g` onto edges of `h`.
pub fn graph_isomorphisms<'a>(g: &'a UnderlyingGraph, h: &'a UnderlyingGraph) -> Isomorphisms<'a> {
    let n = g.n();
    let g_deg: Vec<usize> = (0..n).map(|u| g.degree(u)).collect();
    let h_deg: Vec<usize> = (0..h.n()).map(|u| h.degree(u)).collect();
    let done = n != h.n() || g.degree_sequence() != h.degree_sequence();
    Isomorphisms {
        g,
        h,
        order: search_order(g, &g_deg),
        g_deg,
        h_deg,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        next: vec![0; n + 1],
        depth: 0,
        done,
    }
}

// Highest degree first, then greedily the vertex with most already-placed neighbours.
fn search_order(g: &UnderlyingGraph, deg: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut links = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], deg[v], std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

impl Isomorphisms<'_> {
    fn consistent(&self, depth: usize, cand: usize) -> bool {
        let gv = self.order[depth];
        if self.used[cand] || self.g_deg[gv] != self.h_deg[cand] {
            return false;
        }
        self.order[..depth]
            .iter()
            .all(|&gu| self.g.is_adjacent(gu, gv) == self.h.is_adjacent(self.map[gu], cand))
    }
}

impl Iterator for Isomorphisms<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let n = self.order.len();
        if self.done {
            return None;
        }
        if n == 0 {
            self.done = true;
            return Some(vec![]);
        }
        loop {
            let d = self.depth;
            let mut found = None;
            while self.next[d] < n {
                let c = self.next[d];
                self.next[d] += 1;
                if self.consistent(d, c) {
                    found = Some(c);
                    break;
                }
            }
            match found {
                Some(c) => {
                    let gv = self.order[d];
                    self.map[gv] = c;
                    self.used[c] = true;
                    if d + 1 == n {
                        let out = self.map.clone();
                        self.used[c] = false;
                        return Some(out);
                    }
                    self.depth += 1;
                    self.next[self.depth] = 0;
                }
                None => {
                    if d == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                    let gv = self.order[self.depth];
                    self.used[self.map[gv]] = false;
                }
            }
        }
    }
}

/// True iff some three vertices are pairwise non-adjacent.
pub fn has_independent_triple(g: &UnderlyingGraph) -> bool {
    let n = g.n();
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            !g.is_adjacent(a, b) && (b + 1..n).any(|c| !g.is_adjacent(a, c) && !g.is_adjacent(b, c))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> UnderlyingGraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        UnderlyingGraph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn counts() {
        let k3 = UnderlyingGraph::complete(3);
        assert_eq!(graph_isomorphisms(&k3, &k3).count(), 6);
        let p3 = UnderlyingGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(graph_isomorphisms(&p3, &k3).count(), 0);
        let c5 = cycle(5);
        assert_eq!(graph_isomorphisms(&c5, &c5).count(), 10);
        let e = UnderlyingGraph::empty(0);
        assert_eq!(graph_isomorphisms(&e, &e).count(), 1);
    }

    #[test]
    fn maps_edges_to_edges() {
        let g = UnderlyingGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = UnderlyingGraph::from_edges(5, &[(4, 3), (3, 2), (2, 1), (3, 0)]).unwrap();
        let isos: Vec<_> = graph_isomorphisms(&g, &h).collect();
        assert_eq!(isos.len(), 2);
        for m in isos {
            for (u, v) in g.edges() {
                assert!(h.is_adjacent(m[u], m[v]));
            }
        }
    }

    #[test]
    fn independent_triples() {
        let star = UnderlyingGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(has_independent_triple(&star));
        assert!(!has_independent_triple(&cycle(5)));
        let gem = UnderlyingGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
            .unwrap();
        assert!(!has_independent_triple(&gem));
    }
}
