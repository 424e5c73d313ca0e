//! Canonical forms for switching isomorphism classes.
//!
//! A labeling is a connected vertex ordering: each new vertex is adjacent to
//! an earlier one whenever possible. Pinning gain 1 on the edge from each
//! vertex to its earliest neighbour makes the relabeled gain matrix a
//! switching invariant of `(Φ, order)`, so the lexicographically least row
//! sequence over all orderings is an invariant of the class. The search
//! branches only on candidates of least row key and skips all but one member
//! of each twin or pseudotwin class, which are exchanged by an automorphism.

use std::cmp::Ordering;

use crate::eis::Unit;
use crate::error::{Error, Result};
use crate::expansions::{pseudotwin_classes, twin_classes};
use crate::sdg::SignedDigraph;

/// Orders accepted by the public [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 12;

/// Result of the canonical search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLabeling {
    pub form: Vec<u8>,
    /// `order[i]` is the vertex placed at position `i`.
    pub order: Vec<usize>,
    /// The minimum was attained on the converse.
    pub conjugated: bool,
}

/// Canonical byte string of the switching isomorphism class of `phi`, converse included.
pub fn canonical_form(phi: &SignedDigraph) -> Result<Vec<u8>> {
    if phi.n() > CANONICAL_LIMIT {
        return Err(Error::SizeLimit { what: "canonical form", n: phi.n(), limit: CANONICAL_LIMIT });
    }
    Ok(canonical_labeling(phi, true).form)
}

/// Canonical search without the order guard.
pub fn canonical_labeling(phi: &SignedDigraph, allow_converse: bool) -> CanonicalLabeling {
    let colors = refine_colors(phi);
    let classes = symmetry_classes(phi);
    let (keys, order) = Search::run(phi, &colors, &classes);
    let mut best = (keys, order, false);
    if allow_converse {
        let conv = phi.converse();
        let (k2, o2) = Search::run(&conv, &colors, &classes);
        if k2 < best.0 {
            best = (k2, o2, true);
        }
    }
    let (keys, order, conjugated) = best;
    let n = phi.n();
    let mut form = Vec::with_capacity(2 + n * n / 2);
    form.extend_from_slice(&(n as u16).to_be_bytes());
    for row in &keys {
        form.extend(row[1..].iter().map(|&c| c as u8));
    }
    CanonicalLabeling { form, order, conjugated }
}

/// Colour refinement on the underlying graph, seeded with degree and the
/// real parts of incident triangle gains. Colour ids are ranks of sorted
/// signatures, hence labeling independent.
fn refine_colors(phi: &SignedDigraph) -> Vec<u32> {
    let n = phi.n();
    let g = phi.underlying();
    let mut seed: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (v, s) in seed.iter_mut().enumerate() {
        let mut tri = [0u32; 4];
        let nb: Vec<usize> = g.neighbors(v).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.is_adjacent(a, b) {
                    let gain = phi.gain(v, a).unwrap() * phi.gain(a, b).unwrap() * phi.gain(b, v).unwrap();
                    tri[match gain.twice_real() {
                        2 => 0,
                        1 => 1,
                        -1 => 2,
                        _ => 3,
                    }] += 1;
                }
            }
        }
        s.push(nb.len() as u32);
        s.extend(tri);
    }
    let mut colors = rank(&seed);
    loop {
        let sigs: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|w| colors[w]).collect();
                nb.sort_unstable();
                let mut s = vec![colors[v]];
                s.extend(nb);
                s
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[u32]| c.iter().copied().max().map_or(0, |m| m + 1);
        if classes(&next) == classes(&colors) {
            return next;
        }
        colors = next;
    }
}

fn rank(sigs: &[Vec<u32>]) -> Vec<u32> {
    let mut sorted: Vec<&Vec<u32>> = sigs.iter().collect();
    sorted.sort();
    sorted.dedup();
    sigs.iter().map(|s| sorted.binary_search(&s).unwrap() as u32).collect()
}

/// Class id per vertex; twins and pseudotwins of one another share an id.
fn symmetry_classes(phi: &SignedDigraph) -> Vec<usize> {
    let mut id: Vec<usize> = (0..phi.n()).collect();
    for class in twin_classes(phi).into_iter().chain(pseudotwin_classes(phi)).filter(|c| c.len() > 1) {
        let m = *class.iter().min().unwrap();
        for v in class {
            id[v] = m;
        }
    }
    id
}

type Key = Vec<u16>;

struct Search<'a> {
    phi: &'a SignedDigraph,
    colors: &'a [u32],
    classes: &'a [usize],
    order: Vec<usize>,
    pos: Vec<usize>,
    x: Vec<Unit>,
    keys: Vec<Key>,
    best: Option<(Vec<Key>, Vec<usize>)>,
}

const UNPLACED: usize = usize::MAX;

impl<'a> Search<'a> {
    fn run(phi: &SignedDigraph, colors: &[u32], classes: &[usize]) -> (Vec<Key>, Vec<usize>) {
        let n = phi.n();
        let mut s = Search {
            phi,
            colors,
            classes,
            order: Vec::with_capacity(n),
            pos: vec![UNPLACED; n],
            x: vec![Unit::ONE; n],
            keys: Vec::with_capacity(n),
            best: None,
        };
        s.descend(Ordering::Equal);
        s.best.unwrap_or_default()
    }

    /// Row key and potential of `c` placed next.
    fn key_of(&self, c: usize) -> (Key, Unit) {
        let i = self.order.len();
        let parent = self.order.iter().copied().find(|&u| self.phi.is_adjacent(u, c));
        let xc = match parent {
            Some(p) => self.x[p] * self.phi.gain(p, c).unwrap(),
            None => Unit::ONE,
        };
        let xinv = xc.inv();
        let mut key = Vec::with_capacity(i + 1);
        key.push(self.colors[c] as u16);
        for &u in &self.order {
            key.push(match self.phi.gain(u, c) {
                Some(g) => 1 + (self.x[u] * g * xinv).exponent() as u16,
                None => 0,
            });
        }
        (key, xc)
    }

    // `status` compares the current prefix with the best one found so far.
    fn descend(&mut self, status: Ordering) {
        let n = self.phi.n();
        let i = self.order.len();
        if i == n {
            if self.best.is_none() || status == Ordering::Less {
                self.best = Some((self.keys.clone(), self.order.clone()));
            }
            return;
        }
        let attached: Vec<usize> = (0..n)
            .filter(|&v| self.pos[v] == UNPLACED && self.order.iter().any(|&u| self.phi.is_adjacent(u, v)))
            .collect();
        let eligible: Vec<usize> =
            if attached.is_empty() { (0..n).filter(|&v| self.pos[v] == UNPLACED).collect() } else { attached };
        let mut min: Option<Key> = None;
        let mut cands: Vec<(usize, Unit)> = Vec::new();
        for v in eligible {
            let (k, xv) = self.key_of(v);
            match min.as_ref().map(|m| k.cmp(m)) {
                Some(Ordering::Greater) => {}
                Some(Ordering::Equal) => {
                    if !cands.iter().any(|&(w, _)| self.classes[w] == self.classes[v]) {
                        cands.push((v, xv));
                    }
                }
                _ => {
                    min = Some(k);
                    cands = vec![(v, xv)];
                }
            }
        }
        let key = min.expect("an unplaced vertex exists");
        let mut status = status;
        if status == Ordering::Equal {
            if let Some((best, _)) = &self.best {
                match key.cmp(&best[i]) {
                    Ordering::Greater => return,
                    Ordering::Less => status = Ordering::Less,
                    Ordering::Equal => {}
                }
            }
        }
        self.keys.push(key);
        for (v, xv) in cands {
            self.pos[v] = i;
            self.x[v] = xv;
            self.order.push(v);
            // after an improvement the prefix is compared against the new best
            let st = if status == Ordering::Less && self.improved_at(i) { Ordering::Equal } else { status };
            self.descend(st);
            self.order.pop();
            self.pos[v] = UNPLACED;
        }
        self.keys.pop();
    }

    /// Whether the best sequence was replaced by one sharing the current prefix.
    fn improved_at(&self, i: usize) -> bool {
        match &self.best {
            Some((best, _)) => best[..=i] == self.keys[..=i],
            None => false,
        }
    }
}
