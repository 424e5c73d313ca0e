//! Cospectral-mate census over tree-normalized signatures.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::canonical_labeling;
use crate::eis::Unit;
use crate::error::{Error, Result};
use crate::expansions::twin_expand;
use crate::named;
use crate::poly::IntPolynomial;
use crate::sdg::{SignedDigraph, UnderlyingGraph};
use crate::spectra::{char_poly, trace_cubed};

/// Largest order served by the built-in graph enumerator.
pub const BUILTIN_GRAPH_LIMIT: usize = 8;

/// Signatures per graph above which a graph is skipped and the report marked scope limited.
pub const DEFAULT_SIGNATURE_BUDGET: u64 = 6u64.pow(9);

/// Every signature on `g` with gain 1 on its BFS forest.
pub fn enumerate_signatures(g: &UnderlyingGraph) -> Signatures {
    let tree = g.bfs_forest();
    let free = free_edges(g, &tree);
    let total = 6u64.checked_pow(free.len() as u32).unwrap_or(u64::MAX);
    Signatures { base: SignedDigraph::from_graph(g), free, next: 0, total }
}

fn free_edges(g: &UnderlyingGraph, tree: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let in_tree: std::collections::HashSet<(usize, usize)> =
        tree.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    g.edges().into_iter().filter(|e| !in_tree.contains(e)).collect()
}

pub struct Signatures {
    base: SignedDigraph,
    free: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl Signatures {
    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }
}

fn assign(base: &mut SignedDigraph, free: &[(usize, usize)], mut code: u64) {
    for &(u, v) in free {
        base.set_gain(u, v, Unit::new((code % 6) as i64));
        code /= 6;
    }
}

impl Iterator for Signatures {
    type Item = SignedDigraph;
    fn next(&mut self) -> Option<SignedDigraph> {
        if self.next >= self.total {
            return None;
        }
        assign(&mut self.base, &self.free, self.next);
        self.next += 1;
        Some(self.base.clone())
    }
}

/// Non-isomorphic graphs on `n ≤ 8` vertices, built by vertex augmentation.
pub fn all_graphs(n: usize) -> Result<&'static [UnderlyingGraph]> {
    static CACHE: [OnceLock<Vec<UnderlyingGraph>>; BUILTIN_GRAPH_LIMIT + 1] = [const { OnceLock::new() }; BUILTIN_GRAPH_LIMIT + 1];
    if n > BUILTIN_GRAPH_LIMIT {
        return Err(Error::SizeLimit { what: "built-in graph enumeration", n, limit: BUILTIN_GRAPH_LIMIT });
    }
    if n == 0 {
        return Ok(CACHE[0].get_or_init(|| vec![UnderlyingGraph::empty(0)]));
    }
    let smaller = all_graphs(n - 1)?;
    Ok(CACHE[n].get_or_init(|| {
        let mut seen: BTreeMap<Vec<u8>, UnderlyingGraph> = BTreeMap::new();
        for g in smaller {
            for mask in 0u32..1 << (n - 1) {
                let mut h = UnderlyingGraph::empty(n);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..n - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, n - 1);
                    }
                }
                let key = canonical_labeling(&SignedDigraph::from_graph(&h), false).form;
                seen.entry(key).or_insert(h);
            }
        }
        let mut out: Vec<UnderlyingGraph> = seen.into_values().collect();
        out.sort_by_key(|g| g.edge_count());
        out
    }))
}

/// Where candidate digraphs come from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GraphSource {
    /// Every graph on `n` vertices.
    BuiltIn,
    /// Signatures on the listed graphs only.
    Graphs(Vec<UnderlyingGraph>),
    /// The listed digraphs themselves.
    Digraphs(Vec<SignedDigraph>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTask {
    pub n: usize,
    pub target: IntPolynomial,
    pub graph_source: GraphSource,
    pub allow_disconnected: bool,
    pub signature_budget: u64,
    /// Disables the edge-count and triangle-trace filters.
    pub unpruned: bool,
}

impl CensusTask {
    pub fn new(target: IntPolynomial, graph_source: GraphSource) -> Self {
        CensusTask {
            n: target.degree(),
            target,
            graph_source,
            allow_disconnected: true,
            signature_budget: DEFAULT_SIGNATURE_BUDGET,
            unpruned: false,
        }
    }

    /// Edge count `−a₂`.
    pub fn edge_count(&self) -> i64 {
        -coeff_i64(&self.target, self.n.wrapping_sub(2))
    }

    /// `tr(E³) = −3a₃`.
    pub fn triangle_trace(&self) -> i64 {
        -3 * coeff_i64(&self.target, self.n.wrapping_sub(3))
    }
}

fn coeff_i64(p: &IntPolynomial, power: usize) -> i64 {
    if power > p.degree() {
        return 0;
    }
    i64::try_from(p.coeff_of_power(power)).unwrap_or(i64::MAX)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DesVerdict {
    Des,
    NotDes,
    ScopeLimited,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub graphs: u64,
    pub graphs_skipped: u64,
    pub signatures: u64,
    pub pruned: u64,
    pub matches: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusClass {
    /// Hex-encoded canonical form.
    pub canonical_form: String,
    pub representative: SignedDigraph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub classes: Vec<CensusClass>,
    pub des_verdict: DesVerdict,
    pub scanned: Counters,
    /// The source covered every candidate.
    pub complete: bool,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

struct WorkUnit {
    graph: usize,
    prefix: u64,
    prefix_len: usize,
}

/// All switching classes on `task.n` vertices with characteristic polynomial `task.target`.
pub fn cospectral_mates(task: &CensusTask) -> Result<CensusReport> {
    let mut counters = Counters::default();
    let mut complete = true;
    let mut found: Vec<(Vec<u8>, SignedDigraph)> = Vec::new();
    let graphs: Vec<UnderlyingGraph> = match &task.graph_source {
        GraphSource::BuiltIn => {
            if task.n > BUILTIN_GRAPH_LIMIT {
                return Err(Error::Scope(format!(
                    "no built-in graph list beyond {BUILTIN_GRAPH_LIMIT} vertices; supply a graph6 list"
                )));
            }
            all_graphs(task.n)?.to_vec()
        }
        GraphSource::Graphs(list) => {
            complete = false;
            list.clone()
        }
        GraphSource::Digraphs(list) => {
            complete = false;
            for d in list {
                counters.signatures += 1;
                if d.n() == task.n && char_poly(d)? == task.target {
                    counters.matches += 1;
                    found.push((canonical_labeling(d, true).form, d.clone()));
                }
            }
            Vec::new()
        }
    };
    let m = task.edge_count();
    let t = task.triangle_trace();
    let mut candidates: Vec<(UnderlyingGraph, Vec<(usize, usize)>)> = Vec::new();
    for g in graphs {
        counters.graphs += 1;
        let feasible = g.n() == task.n
            && (task.allow_disconnected || g.is_connected())
            && (task.unpruned || {
                let tri = 6 * g.triangle_count() as i64;
                g.edge_count() as i64 == m && t.abs() <= tri && t % 3 == 0
            });
        if !feasible {
            counters.graphs_skipped += 1;
            continue;
        }
        let free = free_edges(&g, &g.bfs_forest());
        if 6u64.checked_pow(free.len() as u32).is_none_or(|s| s > task.signature_budget) {
            log::warn!("census: graph {} exceeds the signature budget", g.to_graph6());
            counters.graphs_skipped += 1;
            complete = false;
            continue;
        }
        candidates.push((g, free));
    }
    let units: Vec<WorkUnit> = candidates
        .iter()
        .enumerate()
        .flat_map(|(i, (_, free))| {
            let prefix_len = free.len().min(3);
            (0..6u64.pow(prefix_len as u32)).map(move |prefix| WorkUnit { graph: i, prefix, prefix_len })
        })
        .collect();
    let results: Vec<Result<(Vec<(Vec<u8>, SignedDigraph)>, Counters)>> = units
        .par_iter()
        .map(|u| {
            let (g, free) = &candidates[u.graph];
            let mut c = Counters::default();
            let mut hits = Vec::new();
            let mut phi = SignedDigraph::from_graph(g);
            assign(&mut phi, &free[..u.prefix_len], u.prefix);
            let rest = &free[u.prefix_len..];
            for code in 0..6u64.pow(rest.len() as u32) {
                assign(&mut phi, rest, code);
                c.signatures += 1;
                if !task.unpruned && trace_cubed(&phi) != t {
                    c.pruned += 1;
                    continue;
                }
                if char_poly(&phi)? == task.target {
                    c.matches += 1;
                    hits.push((canonical_labeling(&phi, true).form, phi.clone()));
                }
            }
            Ok((hits, c))
        })
        .collect();
    for r in results {
        let (hits, c) = r?;
        counters.signatures += c.signatures;
        counters.pruned += c.pruned;
        counters.matches += c.matches;
        found.extend(hits);
    }
    let mut classes: BTreeMap<Vec<u8>, SignedDigraph> = BTreeMap::new();
    for (form, d) in found {
        classes.entry(form).or_insert(d);
    }
    for d in classes.values() {
        if char_poly(d)? != task.target {
            return Err(Error::Inconsistent("a census representative is not cospectral to the target".into()));
        }
    }
    let classes: Vec<CensusClass> =
        classes.into_iter().map(|(f, d)| CensusClass { canonical_form: hex(&f), representative: d }).collect();
    let des_verdict = match (classes.len(), complete) {
        (0 | 1, true) => DesVerdict::Des,
        (0 | 1, false) => DesVerdict::ScopeLimited,
        _ => DesVerdict::NotDes,
    };
    Ok(CensusReport { classes, des_verdict, scanned: counters, complete })
}

/// Whether every digraph cospectral to `phi` within `scope` is switching isomorphic to it.
pub fn is_des(phi: &SignedDigraph, scope: GraphSource) -> Result<CensusReport> {
    let target = char_poly(phi)?;
    let scope = match scope {
        GraphSource::Digraphs(mut list) => {
            list.insert(0, phi.clone());
            GraphSource::Digraphs(list)
        }
        s => s,
    };
    let report = cospectral_mates(&CensusTask::new(target, scope))?;
    let own = hex(&canonical_labeling(phi, true).form);
    if report.complete && !report.classes.iter().any(|c| c.canonical_form == own) {
        return Err(Error::Inconsistent("the census missed the input's own class".into()));
    }
    Ok(report)
}

/// All `(p, q, r)` with `pq = fg`, `p ≤ q` and `p + q + r = f + g`: the
/// mates `K_{p,q} ∪ O_r` of `K_{f,g}`.
pub fn rank2_mate_solver(f: u64, g: u64) -> Result<Vec<(u64, u64, u64)>> {
    if f == 0 || g == 0 {
        return Err(Error::InvalidParameters { name: "K_{f,g}".into(), reason: "f, g must be ≥ 1".into() });
    }
    let prod = f * g;
    Ok((1..)
        .take_while(|p| p * p <= prod)
        .filter(|p| prod % p == 0)
        .map(|p| (p, prod / p))
        .filter(|&(p, q)| p + q <= f + g)
        .map(|(p, q)| (p, q, f + g - p - q))
        .collect())
}

/// Published cospectral pairs of rank-3 twin expansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KnownFamily {
    SmallK3K3Star,
    SmallK3StarT4,
    SmallK3T4,
    Family65(u64),
    Family66(u64),
}

impl std::str::FromStr for KnownFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let param = |prefix: &str| -> Option<Result<u64>> {
            let rest = t.strip_prefix(prefix)?;
            let inner = rest.trim().trim_start_matches('(').trim_end_matches(')').trim();
            Some(inner.parse::<u64>().map_err(|e| Error::UnknownConstructor(format!("{s}: {e}"))))
        };
        match t.as_str() {
            "SMALL_K3_K3STAR" => return Ok(KnownFamily::SmallK3K3Star),
            "SMALL_K3STAR_T4" => return Ok(KnownFamily::SmallK3StarT4),
            "SMALL_K3_T4" => return Ok(KnownFamily::SmallK3T4),
            _ => {}
        }
        if let Some(i) = param("FAMILY_65") {
            return Ok(KnownFamily::Family65(i?));
        }
        if let Some(i) = param("FAMILY_66") {
            return Ok(KnownFamily::Family66(i?));
        }
        Err(Error::UnknownConstructor(s.to_string()))
    }
}

/// Twin expansion where a zero entry deletes the vertex.
fn te(base: &SignedDigraph, tau: &[u64]) -> Result<SignedDigraph> {
    let keep: Vec<usize> = (0..tau.len()).filter(|&i| tau[i] > 0).collect();
    let sizes: Vec<usize> = keep.iter().map(|&i| tau[i] as usize).collect();
    twin_expand(&base.induced(&keep), &sizes)
}

/// Expansion vectors `(reduced, τ)` of both members.
pub fn known_family_vectors(id: KnownFamily) -> Result<[(&'static str, Vec<u64>); 2]> {
    Ok(match id {
        KnownFamily::SmallK3K3Star => [("K3", vec![1, 8, 15]), ("K3*", vec![3, 5, 16])],
        KnownFamily::SmallK3StarT4 => [("K3*", vec![3, 4, 7]), ("T4", vec![1, 1, 6, 6])],
        KnownFamily::SmallK3T4 => [("K3", vec![3, 20, 25]), ("T4", vec![3, 5, 10, 30])],
        KnownFamily::Family65(i) | KnownFamily::Family66(i) if i == 0 => {
            return Err(Error::InvalidParameters { name: "family parameter".into(), reason: "must be ≥ 1".into() })
        }
        KnownFamily::Family65(i) => [
            ("K3*", vec![2 * i + 1, i * (3 * i + 2), 2 * (3 * i + 1) * (i + 1)]),
            ("K3", vec![i, (3 * i + 1) * (i + 1), 2 * (3 * i + 1) * (i + 1) - 1]),
        ],
        KnownFamily::Family66(i) => [
            ("K3*", vec![i * (i + 1) / 2, i * (i + 1) / 2 + 1, i * (i + 1) + 1]),
            ("T4", vec![1, i * (i - 1) / 2, (i + 1) * (i + 2) / 2, i * (i + 1)]),
        ],
    })
}

/// The stated cospectral pair.
pub fn known_family(id: KnownFamily) -> Result<(SignedDigraph, SignedDigraph)> {
    let [a, b] = known_family_vectors(id)?;
    let build = |(name, tau): &(&str, Vec<u64>)| -> Result<SignedDigraph> {
        let base = match *name {
            "K3" => named::complete(3),
            "K3*" => named::k_star(3),
            _ => named::t4(true),
        };
        te(&base, tau)
    };
    Ok((build(&a)?, build(&b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::triangle_census;

    #[test]
    fn signature_counts() {
        assert_eq!(enumerate_signatures(&named::path(5).underlying()).count(), 1);
        assert_eq!(enumerate_signatures(&named::cycle(4, Unit::ONE).unwrap().underlying()).count(), 6);
        assert_eq!(enumerate_signatures(&UnderlyingGraph::complete(4)).len(), 216);
    }

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        assert!(all_graphs(9).is_err());
    }

    #[test]
    fn saltire() {
        let k14 = named::complete_bipartite(1, 4);
        let r = is_des(&k14, GraphSource::BuiltIn).unwrap();
        assert_eq!(r.classes.len(), 2);
        assert_eq!(r.des_verdict, DesVerdict::NotDes);
        assert_eq!(rank2_mate_solver(1, 4).unwrap(), vec![(1, 4, 0), (2, 2, 1)]);
        assert_eq!(rank2_mate_solver(2, 3).unwrap(), vec![(2, 3, 0)]);
        assert_eq!(rank2_mate_solver(5, 7).unwrap(), vec![(5, 7, 0)]);
    }

    #[test]
    fn small_des() {
        assert_eq!(is_des(&named::complete(4), GraphSource::BuiltIn).unwrap().des_verdict, DesVerdict::Des);
        assert_eq!(is_des(&named::complete_bipartite(2, 2), GraphSource::BuiltIn).unwrap().des_verdict, DesVerdict::Des);
        let a = named::cospectral_pair_a();
        let task = CensusTask::new(char_poly(&a).unwrap(), GraphSource::Graphs(vec![a.underlying()]));
        let r = cospectral_mates(&task).unwrap();
        assert!(r.classes.len() >= 2);
        assert_eq!(r.des_verdict, DesVerdict::NotDes);
    }

    #[test]
    fn families() {
        let (a, b) = known_family(KnownFamily::SmallK3K3Star).unwrap();
        assert_eq!(char_poly(&a).unwrap(), char_poly(&b).unwrap());
        assert_ne!(triangle_census(&a).unwrap(), triangle_census(&b).unwrap());
        assert_eq!(known_family_vectors(KnownFamily::Family65(1)).unwrap()[1].1, vec![1, 8, 15]);
        assert_eq!(known_family_vectors(KnownFamily::Family66(2)).unwrap()[0].1, vec![3, 4, 7]);
        assert_eq!(known_family_vectors(KnownFamily::Family66(2)).unwrap()[1].1, vec![1, 1, 6, 6]);
        assert_eq!("family_65(3)".parse::<KnownFamily>().unwrap(), KnownFamily::Family65(3));
        assert!("FAMILY_7".parse::<KnownFamily>().is_err());
        let r = is_des(&a, GraphSource::Digraphs(vec![b])).unwrap();
        assert_eq!(r.des_verdict, DesVerdict::NotDes);
    }

    #[test]
    fn task_constraints() {
        let t = CensusTask::new(char_poly(&named::complete(3)).unwrap(), GraphSource::BuiltIn);
        assert_eq!((t.edge_count(), t.triangle_trace()), (3, 6));
        assert!(cospectral_mates(&CensusTask::new(char_poly(&named::path(9)).unwrap(), GraphSource::BuiltIn)).is_err());
    }
}
