//! Named signed digraphs with fixed labelings.
//!
//! Paths and cycles are labeled `0-1-…-(n−1)`, cycles closing on `(n−1, 0)`.
//! Expansion blocks are consecutive in base-vertex order.

use serde::{Deserialize, Serialize};

use crate::eis::Unit;
use crate::error::{Error, Result};
use crate::expansions::clique_expand;
use crate::sdg::SignedDigraph;

fn build(n: usize, entries: &[(usize, usize, i64)]) -> SignedDigraph {
    SignedDigraph::from_edge_list(n, entries.iter().copied()).expect("static edge list is valid")
}

fn positive(n: usize, edges: &[(usize, usize)]) -> SignedDigraph {
    build(n, &edges.iter().map(|&(u, v)| (u, v, 0)).collect::<Vec<_>>())
}

fn one_based(n: usize, entries: &[(usize, usize, i64)]) -> SignedDigraph {
    build(n, &entries.iter().map(|&(u, v, k)| (u - 1, v - 1, k)).collect::<Vec<_>>())
}

pub fn empty(n: usize) -> SignedDigraph {
    SignedDigraph::empty(n)
}

pub fn complete(n: usize) -> SignedDigraph {
    let mut g = SignedDigraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.set_gain(u, v, Unit::ONE);
        }
    }
    g
}

/// `Kₙ` with the pair `(0, 1)` turned into a gain-ω arc.
pub fn k_star(n: usize) -> SignedDigraph {
    let mut g = complete(n);
    if n >= 2 {
        g.set_gain(0, 1, Unit::OMEGA);
    }
    g
}

/// `K₅` with arcs `0→1` and `0→2`.
pub fn k_double_star() -> SignedDigraph {
    let mut g = complete(5);
    g.set_gain(0, 1, Unit::OMEGA);
    g.set_gain(0, 2, Unit::OMEGA);
    g
}

pub fn complete_bipartite(p: usize, q: usize) -> SignedDigraph {
    let mut g = SignedDigraph::empty(p + q);
    for u in 0..p {
        for v in p..p + q {
            g.set_gain(u, v, Unit::ONE);
        }
    }
    g
}

pub fn path(n: usize) -> SignedDigraph {
    let mut g = SignedDigraph::empty(n);
    for u in 1..n {
        g.set_gain(u - 1, u, Unit::ONE);
    }
    g
}

/// `Cₙ` with positive path edges and `E_{n−1,0} = gain`, so the cycle
/// `0→1→…→n−1→0` has gain `gain`.
pub fn cycle(n: usize, gain: Unit) -> Result<SignedDigraph> {
    if n < 3 {
        return Err(Error::InvalidParameters { name: "C".into(), reason: format!("order {n} < 3") });
    }
    let mut g = path(n);
    g.set_gain(n - 1, 0, gain);
    Ok(g)
}

/// Transitive tournament on four vertices, every arc `u→v` (`u < v`) of gain ω, or −ω when negative.
pub fn t4(positive_sign: bool) -> SignedDigraph {
    let g = if positive_sign { Unit::OMEGA } else { Unit::NEG_OMEGA };
    let mut t = SignedDigraph::empty(4);
    for u in 0..4 {
        for v in u + 1..4 {
            t.set_gain(u, v, g);
        }
    }
    t
}

pub fn gem() -> SignedDigraph {
    positive(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)])
}

pub fn three_pan() -> SignedDigraph {
    positive(4, &[(0, 1), (0, 2), (1, 2), (2, 3)])
}

/// The exceptional graphs `G₁ … G₆`, all positive.
pub fn exceptional(i: usize) -> Result<SignedDigraph> {
    let complement_of = |n: usize, edges: &[(usize, usize)]| {
        let g = positive(n, edges).underlying().complement();
        SignedDigraph::from_graph(&g)
    };
    Ok(match i {
        1 => complement_of(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]),
        2 => complement_of(7, &[(0, 1), (0, 2), (0, 3), (4, 1), (4, 2)]),
        3 => complement_of(6, &[(2, 1), (4, 1), (4, 5), (2, 5)]),
        4 => complement_of(6, &[(0, 1), (1, 2), (2, 5), (5, 4)]),
        5 => positive(6, &[(0, 1), (0, 5), (1, 5), (1, 2), (2, 3), (2, 4), (3, 4), (5, 4)]),
        6 => positive(
            7,
            &[
                (0, 1),
                (0, 5),
                (0, 6),
                (1, 2),
                (1, 5),
                (1, 6),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4),
                (4, 5),
                (5, 6),
            ],
        ),
        _ => {
            return Err(Error::InvalidParameters { name: "G".into(), reason: format!("index {i} not in 1..=6") })
        }
    })
}

/// Signature types on clique expansions of `C₅`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum C5Type {
    A,
    B,
    C,
    D,
}

impl std::str::FromStr for C5Type {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(C5Type::A),
            "B" => Ok(C5Type::B),
            "C" => Ok(C5Type::C),
            "D" => Ok(C5Type::D),
            other => Err(Error::InvalidParameters { name: "C5 type".into(), reason: format!("unknown type {other}") }),
        }
    }
}

/// `CE(C₅, τ)` carrying the given signature type.
///
/// All edges are positive digons except between blocks 4 and 0:
/// type A makes them negative digons, type B additionally turns the first
/// two vertices of block 4 into a gain-ω arc, type C makes every one a
/// negative arc from block 4 to block 0, and type D is type A with the
/// first vertex pair turned into a negative arc.
pub fn c5_type(ty: C5Type, tau: &[usize]) -> Result<SignedDigraph> {
    let bad = |reason: String| Error::InvalidParameters { name: "C5_type".into(), reason };
    if tau.len() != 5 {
        return Err(bad(format!("expansion vector has length {}", tau.len())));
    }
    if ty == C5Type::B && tau[4] < 2 {
        return Err(bad("type B needs at least two vertices in block 4".into()));
    }
    let mut g = clique_expand(&cycle(5, Unit::ONE)?, tau)?;
    let off = crate::expansions::block_offsets(tau);
    let cross = match ty {
        C5Type::C => Unit::NEG_OMEGA,
        _ => Unit::NEG_ONE,
    };
    for a in off[4]..off[5] {
        for b in off[0]..off[1] {
            g.set_gain(a, b, cross);
        }
    }
    match ty {
        C5Type::B => g.set_gain(off[4], off[4] + 1, Unit::OMEGA),
        C5Type::D => g.set_gain(off[4], off[0], Unit::NEG_OMEGA),
        _ => {}
    }
    Ok(g)
}

fn semicomplete_base(p: usize, q: usize) -> Result<SignedDigraph> {
    if p < 2 || q < 2 {
        return Err(Error::InvalidParameters { name: "SemiComplete".into(), reason: "p, q must be ≥ 2".into() });
    }
    clique_expand(&path(4), &[p, 1, 1, q])
}

/// `CE(P₄, [p,1,1,q])`, all positive.
pub fn semicomplete(p: usize, q: usize) -> Result<SignedDigraph> {
    semicomplete_base(p, q)
}

/// `CE(P₄, [p,1,1,q])` with one gain-ω arc inside the `p`-block.
pub fn semicomplete_tilde(p: usize, q: usize) -> Result<SignedDigraph> {
    let mut g = semicomplete_base(p, q)?;
    g.set_gain(0, 1, Unit::OMEGA);
    Ok(g)
}

/// `CE(P₄, [p,1,1,q])` with one gain-ω arc inside the `q`-block.
pub fn semicomplete_hat(p: usize, q: usize) -> Result<SignedDigraph> {
    let mut g = semicomplete_base(p, q)?;
    g.set_gain(p + 2, p + 3, Unit::OMEGA);
    Ok(g)
}

/// The `(a, b)`-kite: positive clique `0..a`, with vertex `a−1` joined to the
/// end of the path `a..a+b`.
pub fn kite(a: usize, b: usize) -> Result<SignedDigraph> {
    if a < 1 {
        return Err(Error::InvalidParameters { name: "Kite".into(), reason: "clique order must be ≥ 1".into() });
    }
    let mut g = complete(a).disjoint_union(&path(b));
    if b > 0 {
        g.set_gain(a - 1, a, Unit::ONE);
    }
    Ok(g)
}

/// A cospectral pair on a common underlying graph that is not switching isomorphic.
pub fn cospectral_pair_a() -> SignedDigraph {
    one_based(6, &[(1, 2, 0), (1, 5, 0), (1, 6, 0), (2, 3, 3), (2, 4, 0), (3, 4, 0), (5, 4, 1), (5, 6, 0)])
}

pub fn cospectral_pair_b() -> SignedDigraph {
    one_based(6, &[(1, 2, 0), (1, 5, 0), (1, 6, 1), (2, 4, 0), (3, 2, 4), (3, 4, 0), (5, 4, 1), (5, 6, 0)])
}

/// Two switching isomorphic digraphs that agree on the spanning path.
pub fn tree_coincident_a() -> SignedDigraph {
    let mut g = path(6);
    g.set_gain(1, 4, Unit::ONE);
    g.set_gain(0, 5, Unit::NEG_ONE);
    g
}

pub fn tree_coincident_b() -> SignedDigraph {
    let mut g = path(6);
    g.set_gain(1, 4, Unit::NEG_ONE);
    g.set_gain(0, 5, Unit::NEG_ONE);
    g
}

/// A non-bipartite digraph on 11 vertices with symmetric spectrum.
pub fn symmetric_non_bipartite() -> SignedDigraph {
    one_based(
        11,
        &[
            (1, 3, 4),
            (1, 2, 0),
            (2, 3, 0),
            (3, 4, 0),
            (4, 5, 0),
            (3, 5, 0),
            (7, 5, 4),
            (6, 7, 0),
            (5, 6, 0),
            (7, 8, 0),
            (7, 9, 0),
            (7, 10, 0),
            (7, 11, 0),
        ],
    )
}

/// `K₄` with one arc, a triangle, and a bridge between them.
pub fn lambda3_zero_a() -> SignedDigraph {
    one_based(
        7,
        &[(1, 2, 0), (1, 3, 0), (1, 4, 0), (2, 3, 1), (2, 4, 0), (3, 4, 0), (5, 6, 0), (5, 7, 0), (6, 7, 0), (3, 7, 0)],
    )
}

/// Two `K₃*` joined by a bridge.
pub fn lambda3_zero_b() -> SignedDigraph {
    build(6, &[(0, 1, 1), (0, 2, 0), (1, 2, 0), (3, 4, 1), (3, 5, 0), (4, 5, 0), (2, 5, 0)])
}

/// `CE(C₅, [1,2,1,2,1])` with a negative digon between blocks 4 and 0 and an arc in blocks 1 and 3.
pub fn c5_lambda3_zero_a() -> SignedDigraph {
    let mut g = clique_expand(&cycle(5, Unit::NEG_ONE).unwrap(), &[1, 2, 1, 2, 1]).unwrap();
    g.set_gain(1, 2, Unit::OMEGA);
    g.set_gain(4, 5, Unit::OMEGA);
    g
}

/// `CE(C₅, [1,1,1,2,1])` with a negative arc from block 4 to block 0 and an arc in block 3.
pub fn c5_lambda3_zero_b() -> SignedDigraph {
    let mut g = clique_expand(&cycle(5, Unit::NEG_OMEGA).unwrap(), &[1, 1, 1, 2, 1]).unwrap();
    g.set_gain(3, 4, Unit::OMEGA);
    g
}

/// Clique expansion of a triangle with a pendant: `K₃` and `K₄` blocks joined,
/// arcs from the `K₃` block into a hub, which carries a pendant vertex.
pub fn clique_cospectral_a() -> SignedDigraph {
    let base = build(4, &[(0, 1, 0), (0, 2, 1), (1, 2, 0), (2, 3, 0)]);
    clique_expand(&base, &[3, 4, 1, 1]).unwrap()
}

/// `CE(C₄, [6,1,1,1])` with arcs from the `K₆` block to its first neighbour.
pub fn clique_cospectral_b() -> SignedDigraph {
    let base = build(4, &[(0, 1, 1), (1, 2, 0), (2, 3, 0), (3, 0, 0)]);
    clique_expand(&base, &[6, 1, 1, 1]).unwrap()
}

fn split_args(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '[' | '(' => {
                depth += 1;
                cur.push(ch);
            }
            ']' | ')' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' | ' ' | '\t' if depth == 0 => {
                if !cur.trim().is_empty() {
                    out.push(cur.trim().to_string());
                }
                cur.clear();
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn parse_usize(name: &str, s: &str) -> Result<usize> {
    s.parse::<usize>()
        .map_err(|_| Error::InvalidParameters { name: name.into(), reason: format!("expected a count, got `{s}`") })
}

/// Parses a comma separated list such as `1,8,15` or `[1 8 15]`.
pub fn parse_vector(s: &str) -> Result<Vec<usize>> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_usize("vector", t))
        .collect()
}

fn parse_unit(s: &str) -> Result<Unit> {
    let t = s.trim();
    let t = t.strip_prefix("w^").or_else(|| t.strip_prefix("ω^")).unwrap_or(t);
    t.parse::<i64>()
        .map(Unit::new)
        .map_err(|_| Error::InvalidParameters { name: "gain".into(), reason: format!("expected an exponent, got `{s}`") })
}

/// Builds a named digraph from text such as `K_star(5)`, `C(4, 4)`,
/// `C5_type(A, [2,1,1,1,1])` or `T4(-)`.
pub fn named(spec: &str) -> Result<SignedDigraph> {
    let spec = spec.trim();
    let (name, rest) = match spec.find(|c: char| c == '(' || c.is_whitespace()) {
        Some(i) => (&spec[..i], spec[i..].trim()),
        None => (spec, ""),
    };
    let rest = if rest.starts_with('(') && rest.ends_with(')') { &rest[1..rest.len() - 1] } else { rest };
    let args = split_args(rest);
    let want = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidParameters { name: name.into(), reason: format!("expected {k} parameters, got {}", args.len()) })
        }
    };
    let num = |i: usize| parse_usize(name, &args[i]);
    match name {
        "K" => {
            want(1)?;
            Ok(complete(num(0)?))
        }
        "K_star" => {
            want(1)?;
            Ok(k_star(num(0)?))
        }
        "K_double_star" => {
            if !args.is_empty() {
                want(1)?;
                if num(0)? != 5 {
                    return Err(Error::InvalidParameters { name: name.into(), reason: "only order 5 is defined".into() });
                }
            }
            Ok(k_double_star())
        }
        "K_bipartite" => {
            want(2)?;
            Ok(complete_bipartite(num(0)?, num(1)?))
        }
        "O" => {
            want(1)?;
            Ok(empty(num(0)?))
        }
        "P" => {
            want(1)?;
            Ok(path(num(0)?))
        }
        "C" => {
            if args.len() == 1 {
                return cycle(num(0)?, Unit::ONE);
            }
            want(2)?;
            cycle(num(0)?, parse_unit(&args[1])?)
        }
        "T4" => {
            want(1)?;
            match args[0].as_str() {
                "+" | "pos" | "1" => Ok(t4(true)),
                "-" | "neg" | "-1" => Ok(t4(false)),
                s => Err(Error::InvalidParameters { name: name.into(), reason: format!("sign `{s}`") }),
            }
        }
        "Gem" => Ok(gem()),
        "ThreePan" => Ok(three_pan()),
        "G1" | "G2" | "G3" | "G4" | "G5" | "G6" => exceptional(name[1..].parse().unwrap()),
        "C5_type" => {
            want(2)?;
            c5_type(args[0].parse()?, &parse_vector(&args[1])?)
        }
        "SemiComplete" => {
            want(2)?;
            semicomplete(num(0)?, num(1)?)
        }
        "SemiCompleteTilde" => {
            want(2)?;
            semicomplete_tilde(num(0)?, num(1)?)
        }
        "SemiCompleteHat" => {
            want(2)?;
            semicomplete_hat(num(0)?, num(1)?)
        }
        "Kite" => {
            want(2)?;
            kite(num(0)?, num(1)?)
        }
        "CospectralPairA" => Ok(cospectral_pair_a()),
        "CospectralPairB" => Ok(cospectral_pair_b()),
        "TreeCoincidentA" => Ok(tree_coincident_a()),
        "TreeCoincidentB" => Ok(tree_coincident_b()),
        "SymmetricNonBipartite" => Ok(symmetric_non_bipartite()),
        "Lambda3ZeroA" => Ok(lambda3_zero_a()),
        "Lambda3ZeroB" => Ok(lambda3_zero_b()),
        "C5Lambda3ZeroA" => Ok(c5_lambda3_zero_a()),
        "C5Lambda3ZeroB" => Ok(c5_lambda3_zero_b()),
        "CliqueCospectralA" => Ok(clique_cospectral_a()),
        "CliqueCospectralB" => Ok(clique_cospectral_b()),
        _ => Err(Error::UnknownConstructor(name.to_string())),
    }
}

/// Names accepted by [`named`].
pub const CONSTRUCTORS: &[&str] = &[
    "K(n)",
    "K_star(n)",
    "K_double_star(5)",
    "K_bipartite(p,q)",
    "O(n)",
    "P(n)",
    "C(n,k)",
    "T4(+|-)",
    "Gem",
    "ThreePan",
    "G1..G6",
    "C5_type(A|B|C|D,[t1,..,t5])",
    "SemiComplete(p,q)",
    "SemiCompleteTilde(p,q)",
    "SemiCompleteHat(p,q)",
    "Kite(a,b)",
    "CospectralPairA",
    "CospectralPairB",
    "TreeCoincidentA",
    "TreeCoincidentB",
    "SymmetricNonBipartite",
    "Lambda3ZeroA",
    "Lambda3ZeroB",
    "C5Lambda3ZeroA",
    "C5Lambda3ZeroB",
    "CliqueCospectralA",
    "CliqueCospectralB",
];
