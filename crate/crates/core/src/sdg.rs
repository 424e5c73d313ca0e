//! Signed digraphs as T6-gain graphs, their underlying graphs and text formats.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::eis::Unit;
use crate::error::{Error, Result};

const NONE: u8 = u8::MAX;

/// A signed digraph on vertices `0..n`.
///
/// Stored as a dense table of exponents; `(u, v)` holds `k` when `E_uv = ω^k`
/// and the reversed entry always holds the conjugate, so the Hermitian
/// constraint cannot be broken.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SdgRepr", try_from = "SdgRepr")]
pub struct SignedDigraph {
    n: usize,
    table: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct SdgRepr {
    n: usize,
    gains: Vec<(usize, usize, u8)>,
}

impl From<SignedDigraph> for SdgRepr {
    fn from(g: SignedDigraph) -> Self {
        SdgRepr { n: g.n, gains: g.edges().into_iter().map(|(u, v, k)| (u, v, k.exponent())).collect() }
    }
}

impl TryFrom<SdgRepr> for SignedDigraph {
    type Error = Error;
    fn try_from(r: SdgRepr) -> Result<Self> {
        SignedDigraph::from_edge_list(r.n, r.gains.iter().map(|&(u, v, k)| (u, v, k as i64)))
    }
}

impl std::fmt::Debug for SignedDigraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SignedDigraph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges().iter().map(|&(u, v, k)| (u, v, k.exponent()))).finish()?;
        write!(f, ")")
    }
}

impl SignedDigraph {
    /// The empty digraph `Oₙ`.
    pub fn empty(n: usize) -> Self {
        SignedDigraph { n, table: vec![NONE; n * n] }
    }

    /// Builds from `(u, v, k)` triples meaning `E_uv = ω^k`.
    pub fn from_edge_list<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut g = Self::empty(n);
        for (u, v, k) in entries {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let unit = Unit::new(k);
            match g.gain(u, v) {
                Some(old) if old != unit => return Err(Error::ConflictingGains(u.min(v), u.max(v))),
                _ => g.set_gain(u, v, unit),
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Gain on the ordered pair `(u, v)`, or `None` for a non-edge.
    #[inline]
    pub fn gain(&self, u: usize, v: usize) -> Option<Unit> {
        let k = self.table[u * self.n + v];
        (k != NONE).then(|| Unit::new(k as i64))
    }

    #[inline]
    pub(crate) fn code(&self, u: usize, v: usize) -> u8 {
        self.table[u * self.n + v]
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.table[u * self.n + v] != NONE
    }

    /// Sets `E_uv = g` and `E_vu = conj(g)`.
    pub fn set_gain(&mut self, u: usize, v: usize, g: Unit) {
        assert!(u != v && u < self.n && v < self.n, "invalid pair ({u}, {v})");
        self.table[u * self.n + v] = g.exponent();
        self.table[v * self.n + u] = g.conj().exponent();
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.table[u * self.n + v] = NONE;
        self.table[v * self.n + u] = NONE;
    }

    /// All edges as `(u, v, E_uv)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, Unit)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if let Some(g) = self.gain(u, v) {
                    out.push((u, v, g));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.table.iter().filter(|&&k| k != NONE).count() / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.is_adjacent(u, v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    pub fn underlying(&self) -> UnderlyingGraph {
        UnderlyingGraph { n: self.n, adj: self.table.iter().map(|&k| k != NONE).collect() }
    }

    /// Subdigraph induced by `vertices`, relabeled in increasing original order.
    pub fn induced(&self, vertices: &[usize]) -> SignedDigraph {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        self.induced_ordered(&vs)
    }

    /// Subdigraph induced by `order`, with `order[i]` becoming vertex `i`.
    pub fn induced_ordered(&self, order: &[usize]) -> SignedDigraph {
        let m = order.len();
        let mut g = Self::empty(m);
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate() {
                g.table[i * m + j] = self.table[a * self.n + b];
            }
        }
        g
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SignedDigraph {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.table[perm[u] * self.n + perm[v]] = self.table[u * self.n + v];
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &SignedDigraph) -> SignedDigraph {
        let n = self.n + other.n;
        let mut g = Self::empty(n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.table[u * n + v] = self.table[u * self.n + v];
            }
        }
        for u in 0..other.n {
            for v in 0..other.n {
                g.table[(u + self.n) * n + v + self.n] = other.table[u * other.n + v];
            }
        }
        g
    }

    /// Entrywise conjugate (transpose) of the Eisenstein matrix.
    pub fn converse(&self) -> SignedDigraph {
        self.map_gains(|g| g.conj())
    }

    /// Every gain multiplied by `−1`.
    pub fn negate(&self) -> SignedDigraph {
        self.map_gains(|g| g * Unit::NEG_ONE)
    }

    fn map_gains(&self, f: impl Fn(Unit) -> Unit) -> SignedDigraph {
        SignedDigraph {
            n: self.n,
            table: self
                .table
                .iter()
                .map(|&k| if k == NONE { NONE } else { f(Unit::new(k as i64)).exponent() })
                .collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.underlying().is_connected()
    }

    /// Serializes to the `.sdg` text format.
    pub fn to_sdg(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v, g) in self.edges() {
            let _ = writeln!(s, "{u} {v} {}", g.exponent());
        }
        s
    }

    /// Parses the `.sdg` text format.
    pub fn parse_sdg(text: &str) -> Result<SignedDigraph> {
        let mut n = None;
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |reason: String| Error::Parse { line: i + 1, reason };
            let toks: Vec<&str> = line.split_whitespace().collect();
            if n.is_none() {
                match toks.as_slice() {
                    ["n", v] => {
                        n = Some(v.parse::<usize>().map_err(|e| parse_err(e.to_string()))?);
                    }
                    _ => return Err(parse_err("expected header `n <N>`".into())),
                }
                continue;
            }
            if toks.len() != 3 {
                return Err(parse_err(format!("expected `<u> <v> <k>`, got `{line}`")));
            }
            let u = toks[0].parse::<usize>().map_err(|e| parse_err(e.to_string()))?;
            let v = toks[1].parse::<usize>().map_err(|e| parse_err(e.to_string()))?;
            let k = toks[2].parse::<i64>().map_err(|e| parse_err(e.to_string()))?;
            entries.push((u, v, k));
        }
        let n = n.ok_or(Error::Parse { line: 0, reason: "missing header".into() })?;
        SignedDigraph::from_edge_list(n, entries)
    }

    /// The all-positive signed digraph on `g`.
    pub fn from_graph(g: &UnderlyingGraph) -> SignedDigraph {
        let mut s = Self::empty(g.n);
        for (u, v) in g.edges() {
            s.set_gain(u, v, Unit::ONE);
        }
        s
    }
}

/// A simple loop-free undirected graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnderlyingGraph {
    n: usize,
    adj: Vec<bool>,
}

impl UnderlyingGraph {
    pub fn empty(n: usize) -> Self {
        UnderlyingGraph { n, adj: vec![false; n * n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.is_adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.is_adjacent(u, v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).count()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        d.sort_unstable();
        d
    }

    pub fn complement(&self) -> UnderlyingGraph {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.is_adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn induced(&self, vertices: &[usize]) -> UnderlyingGraph {
        let m = vertices.len();
        let mut g = Self::empty(m);
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate() {
                g.adj[i * m + j] = self.adj[a * self.n + b];
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS spanning forest from the lowest vertex of each component, as `(parent, child)` pairs.
    pub fn bfs_forest(&self) -> Vec<(usize, usize)> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        out.push((u, v));
                        queue.push_back(v);
                    }
                }
            }
        }
        out
    }

    /// Number of triangles.
    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.is_adjacent(a, b) {
                    continue;
                }
                for c in b + 1..self.n {
                    if self.is_adjacent(a, c) && self.is_adjacent(b, c) {
                        t += 1;
                    }
                }
            }
        }
        t
    }

    /// Decodes one graph6 line.
    pub fn from_graph6(line: &str) -> Result<UnderlyingGraph> {
        let err = |reason: &str| Error::Parse { line: 0, reason: reason.to_string() };
        let line = line.trim();
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        let bytes: Vec<u8> = line.bytes().collect();
        if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(err("invalid graph6 character"));
        }
        let (n, rest) = match bytes.first() {
            None => return Err(err("empty graph6 line")),
            Some(&126) => {
                if bytes.get(1) == Some(&126) {
                    if bytes.len() < 8 {
                        return Err(err("truncated graph6 size"));
                    }
                    let n = bytes[2..8].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
                    (n, &bytes[8..])
                } else {
                    if bytes.len() < 4 {
                        return Err(err("truncated graph6 size"));
                    }
                    let n = bytes[1..4].iter().fold(0usize, |a, &b| (a << 6) | (b - 63) as usize);
                    (n, &bytes[4..])
                }
            }
            Some(&b) => ((b - 63) as usize, &bytes[1..]),
        };
        let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
        if rest.len() < needed {
            return Err(err("truncated graph6 adjacency data"));
        }
        let mut g = Self::empty(n);
        let mut bit = 0usize;
        for v in 1..n {
            for u in 0..v {
                let byte = rest[bit / 6] - 63;
                if (byte >> (5 - bit % 6)) & 1 == 1 {
                    g.add_edge(u, v);
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out: Vec<u8> = Vec::new();
        if n < 63 {
            out.push(n as u8 + 63);
        } else if n < 258048 {
            out.push(126);
            for s in [12, 6, 0] {
                out.push(((n >> s) & 63) as u8 + 63);
            }
        } else {
            out.extend([126, 126]);
            for s in [30, 24, 18, 12, 6, 0] {
                out.push(((n >> s) & 63) as u8 + 63);
            }
        }
        let mut cur = 0u8;
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                cur = (cur << 1) | self.is_adjacent(u, v) as u8;
                k += 1;
                if k == 6 {
                    out.push(cur + 63);
                    cur = 0;
                    k = 0;
                }
            }
        }
        if k > 0 {
            out.push((cur << (6 - k)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }

    /// Parses a multi-line graph6 list, skipping blank lines.
    pub fn parse_graph6_list(text: &str) -> Result<Vec<UnderlyingGraph>> {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                Self::from_graph6(l).map_err(|e| match e {
                    Error::Parse { reason, .. } => Error::Parse { line: i + 1, reason },
                    other => other,
                })
            })
            .collect()
    }
}

/// A cycle given by its vertices in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexCycle {
    vertices: Vec<usize>,
}

impl VertexCycle {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCycle(format!("length {} < 3", vertices.len())));
        }
        let mut s = vertices.clone();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        Ok(VertexCycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reversed(&self) -> VertexCycle {
        VertexCycle { vertices: self.vertices.iter().rev().copied().collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_normalization() {
        let g = SignedDigraph::from_edge_list(2, [(1, 0, 1)]).unwrap();
        assert_eq!(g.gain(0, 1), Some(Unit::new(5)));
        assert_eq!(g.gain(1, 0), Some(Unit::OMEGA));
        let d = SignedDigraph::from_edge_list(2, [(0, 1, 0)]).unwrap();
        assert_eq!(d.gain(0, 1), Some(Unit::ONE));
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            SignedDigraph::from_edge_list(3, [(0, 1, 0), (0, 1, 3)]),
            Err(Error::ConflictingGains(0, 1))
        );
        assert_eq!(SignedDigraph::from_edge_list(3, [(0, 0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            SignedDigraph::from_edge_list(3, [(0, 3, 0)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        // consistent duplicates are accepted
        assert!(SignedDigraph::from_edge_list(3, [(0, 1, 1), (1, 0, 5)]).is_ok());
    }

    #[test]
    fn sdg_round_trip() {
        let g = SignedDigraph::from_edge_list(4, [(0, 1, 1), (2, 1, 3), (3, 0, 4)]).unwrap();
        let text = g.to_sdg();
        assert_eq!(SignedDigraph::parse_sdg(&text).unwrap(), g);
        let commented = format!("# header\n{text}\n# trailing\n");
        assert_eq!(SignedDigraph::parse_sdg(&commented).unwrap(), g);
        assert!(SignedDigraph::parse_sdg("0 1 0\n").is_err());
    }

    #[test]
    fn serde_round_trip() {
        let g = SignedDigraph::from_edge_list(3, [(0, 1, 1), (1, 2, 3)]).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<SignedDigraph>(&json).unwrap(), g);
    }

    #[test]
    fn induced_and_union() {
        let empty = SignedDigraph::empty(3);
        assert_eq!(empty.induced(&[]).n(), 0);
        let k2 = SignedDigraph::from_edge_list(2, [(0, 1, 0)]).unwrap();
        let u = k2.disjoint_union(&SignedDigraph::empty(1));
        assert_eq!((u.n(), u.edge_count()), (3, 1));
        assert_eq!(SignedDigraph::empty(0).disjoint_union(&k2), k2);
    }

    #[test]
    fn converse_negate() {
        let g = SignedDigraph::from_edge_list(2, [(0, 1, 1)]).unwrap();
        assert_eq!(g.converse().gain(0, 1), Some(Unit::new(5)));
        assert_eq!(g.converse().converse(), g);
        assert_eq!(g.negate().negate(), g);
        let d = SignedDigraph::from_edge_list(2, [(0, 1, 0)]).unwrap();
        assert_eq!(d.converse(), d);
    }

    #[test]
    fn graph6_round_trip() {
        // Petersen graph
        let p = UnderlyingGraph::from_graph6("IheA@GUAo").unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.degree_sequence().iter().all(|&d| d == 3));
        assert_eq!(p.to_graph6(), "IheA@GUAo");
        let k4 = UnderlyingGraph::complete(4);
        assert_eq!(k4.to_graph6(), "C~");
        assert_eq!(UnderlyingGraph::from_graph6("C~").unwrap(), k4);
        let big = UnderlyingGraph::complete(70);
        assert_eq!(UnderlyingGraph::from_graph6(&big.to_graph6()).unwrap(), big);
    }

    #[test]
    fn components_and_forest() {
        let g = UnderlyingGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert_eq!(g.bfs_forest(), vec![(0, 1), (1, 2), (3, 4)]);
        assert!(!g.is_connected());
    }

    #[test]
    fn cycle_validation() {
        assert!(VertexCycle::new(vec![0, 1]).is_err());
        assert!(VertexCycle::new(vec![0, 1, 0]).is_err());
        assert_eq!(VertexCycle::new(vec![0, 1, 2]).unwrap().reversed().vertices(), &[2, 1, 0]);
    }
}
