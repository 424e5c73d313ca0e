//! Self-checking reproductions of published claims, one report per claim.

use serde::{Deserialize, Serialize};

use crate::census::{
    all_graphs, enumerate_signatures, is_des, known_family, known_family_vectors, rank2_mate_solver, DesVerdict,
    GraphSource, KnownFamily,
};
use crate::canonical::canonical_labeling;
use crate::classify::{check_c5_table, has_two_positive_no_zero, C5_TABLE};
use crate::eis::Unit;
use crate::error::{Error, Result};
use crate::expansions::clique_expand;
use crate::named::{self, C5Type};
use crate::poly::{IntPolynomial, RootCensus};
use crate::sdg::SignedDigraph;
use crate::spectra::{char_poly, inertia, triangle_census};
use crate::switching::{fundamental_cycle_gains, switching_isomorphic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Claim {
    Table2,
    Example31,
    Lemma52,
    Thm53,
    Table3,
    Thm610,
    Saltire,
    Families,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::Table2,
        Claim::Example31,
        Claim::Lemma52,
        Claim::Thm53,
        Claim::Table3,
        Claim::Thm610,
        Claim::Saltire,
        Claim::Families,
    ];
}

impl std::str::FromStr for Claim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "table2" => Claim::Table2,
            "example31" => Claim::Example31,
            "lemma52" => Claim::Lemma52,
            "thm53" => Claim::Thm53,
            "table3" => Claim::Table3,
            "thm610" => Claim::Thm610,
            "saltire" => Claim::Saltire,
            "families" => Claim::Families,
            other => return Err(Error::UnknownConstructor(format!("unknown claim {other}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: Claim,
    pub pass: bool,
    pub checks: Vec<Check>,
}

struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), pass, detail: detail.into() });
    }
}

pub fn reproduce(claim: Claim) -> Result<ClaimReport> {
    let mut c = Checks(Vec::new());
    match claim {
        Claim::Table2 => cycle_gain_table(&mut c)?,
        Claim::Example31 => cospectral_pair(&mut c)?,
        Claim::Lemma52 => k_star_polynomials(&mut c)?,
        Claim::Thm53 => one_positive_eigenvalue(&mut c)?,
        Claim::Table3 => c5_table_boundary(&mut c)?,
        Claim::Thm610 => c4_expansion_des(&mut c)?,
        Claim::Saltire => saltire(&mut c)?,
        Claim::Families => families(&mut c, 4)?,
    }
    let pass = c.0.iter().all(|k| k.pass);
    Ok(ClaimReport { claim, pass, checks: c.0 })
}

/// Real parts, doubled, of the fundamental cycles `{2,3,4}`, `{1,5,6}`, `{1,2,4,5}` (one-based).
pub fn cospectral_pair_cycle_reals(phi: &SignedDigraph) -> Result<[i8; 3]> {
    let tree = [(0, 1), (0, 4), (0, 5), (1, 3), (2, 3)];
    let f = fundamental_cycle_gains(phi, &tree)?;
    Ok([(1, 2), (4, 5), (3, 4)].map(|e| f[&e].twice_real()))
}

fn cycle_gain_table(c: &mut Checks) -> Result<()> {
    let a = cospectral_pair_cycle_reals(&named::cospectral_pair_a())?;
    let b = cospectral_pair_cycle_reals(&named::cospectral_pair_b())?;
    c.push("first digraph (-1, 1, 1/2)", a == [-2, 2, 1], format!("doubled real parts {a:?}"));
    c.push("second digraph (-1/2, 1/2, 1/2)", b == [-1, 1, 1], format!("doubled real parts {b:?}"));
    Ok(())
}

fn cospectral_pair(c: &mut Checks) -> Result<()> {
    let (a, b) = (named::cospectral_pair_a(), named::cospectral_pair_b());
    let want = IntPolynomial::from_i64(&[1, 0, -8, 0, 13, 0, -5]);
    let (pa, pb) = (char_poly(&a)?, char_poly(&b)?);
    c.push("first polynomial", pa == want, pa.to_string());
    c.push("second polynomial", pb == want, pb.to_string());
    c.push("not switching isomorphic", switching_isomorphic(&a, &b).is_none(), "");
    Ok(())
}

/// `(λ+1)^{n−3}(λ³ − (n−3)λ² − (2n−3)λ − 1)`.
pub fn k_star_formula(n: usize) -> IntPolynomial {
    let n = n as i64;
    IntPolynomial::from_i64(&[1, 1]).pow((n - 3) as usize).mul(&IntPolynomial::from_i64(&[1, -(n - 3), -(2 * n - 3), -1]))
}

fn k_star_polynomials(c: &mut Checks) -> Result<()> {
    for n in 3..=10 {
        let p = char_poly(&named::k_star(n))?;
        c.push(format!("n = {n}"), p == k_star_formula(n), p.to_string());
    }
    Ok(())
}

/// Canonical forms of the classes on `n` vertices with one positive and no zero eigenvalue.
pub fn one_positive_classes(n: usize) -> Result<Vec<Vec<u8>>> {
    let mut forms = std::collections::BTreeSet::new();
    for g in all_graphs(n)? {
        if g.edge_count() == 0 {
            continue;
        }
        for phi in enumerate_signatures(g) {
            if inertia(&phi)? == RootCensus::new(1, 0, n - 1) {
                forms.insert(canonical_labeling(&phi, true).form);
            }
        }
    }
    Ok(forms.into_iter().collect())
}

fn one_positive_eigenvalue(c: &mut Checks) -> Result<()> {
    for n in [4, 5] {
        let got = one_positive_classes(n)?;
        let mut want = vec![
            canonical_labeling(&named::complete(n), true).form,
            canonical_labeling(&named::k_star(n), true).form,
        ];
        want.sort();
        c.push(format!("n = {n}: exactly K and K*"), got == want, format!("{} classes", got.len()));
    }
    let i = inertia(&named::k_double_star())?;
    c.push("double-arc K5 has inertia (1,1,3)", i == RootCensus::new(1, 1, 3), format!("{:?}", i.as_tuple()));
    Ok(())
}

/// Table columns with every free entry set to `free`.
pub fn c5_column(j: usize, free: usize) -> [usize; 5] {
    C5_TABLE[j].map(|e| e.unwrap_or(free))
}

/// Each boundary check: `(τ, expected to satisfy λ₂ > 0 > λ₃, observed)`.
pub fn c5_boundary_checks(ty: C5Type, tau: [usize; 5], free_positions: &[usize]) -> Result<Vec<([usize; 5], bool, bool)>> {
    let mut out = Vec::new();
    let g = named::c5_type(ty, &tau)?;
    out.push((tau, true, has_two_positive_no_zero(&g)?));
    for i in 0..5 {
        if free_positions.contains(&i) {
            continue;
        }
        let mut t = tau;
        t[i] += 1;
        if check_c5_table(&t, ty)? {
            continue;
        }
        let g = named::c5_type(ty, &t)?;
        out.push((t, false, has_two_positive_no_zero(&g)?));
    }
    Ok(out)
}

fn c5_table_boundary(c: &mut Checks) -> Result<()> {
    let mut report = |ty: C5Type, tau: [usize; 5], free: &[usize]| -> Result<()> {
        for (t, want, got) in c5_boundary_checks(ty, tau, free)? {
            c.push(format!("{ty:?} {t:?}"), want == got, if got { "two positive, no zero" } else { "fails" });
        }
        Ok(())
    };
    for j in 0..9 {
        report(C5Type::A, c5_column(j, 0), &[])?;
    }
    for t1 in [1, 5, 9] {
        report(C5Type::C, c5_column(13, t1), &[0])?;
    }
    Ok(())
}

fn c4_expansion_des(c: &mut Checks) -> Result<()> {
    for n in [5, 6] {
        let g = clique_expand(&named::cycle(4, Unit::NEG_OMEGA)?, &[n - 3, 1, 1, 1])?;
        let r = is_des(&g, GraphSource::BuiltIn)?;
        c.push(format!("n = {n}"), r.des_verdict == DesVerdict::Des, format!("{:?}, {} classes", r.des_verdict, r.classes.len()));
    }
    Ok(())
}

fn saltire(c: &mut Checks) -> Result<()> {
    let star = named::complete_bipartite(1, 4);
    let square = named::complete_bipartite(2, 2).disjoint_union(&named::empty(1));
    c.push("equal polynomials", char_poly(&star)? == char_poly(&square)?, char_poly(&star)?.to_string());
    let r = is_des(&star, GraphSource::BuiltIn)?;
    let forms: Vec<&str> = r.classes.iter().map(|k| k.canonical_form.as_str()).collect();
    let hex = |g: &SignedDigraph| canonical_labeling(g, true).form.iter().map(|b| format!("{b:02x}")).collect::<String>();
    let ok = forms.len() == 2 && forms.contains(&hex(&star).as_str()) && forms.contains(&hex(&square).as_str());
    c.push("census finds exactly the two", ok, format!("{} classes", forms.len()));
    let m = rank2_mate_solver(1, 4)?;
    c.push("solver lists both", m == vec![(1, 4, 0), (2, 2, 1)], format!("{m:?}"));
    Ok(())
}

/// Outcome for one published pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCheck {
    pub family: KnownFamily,
    pub orders: (usize, usize),
    pub cospectral: bool,
    pub distinct: bool,
}

pub fn check_family(id: KnownFamily) -> Result<FamilyCheck> {
    let (a, b) = known_family(id)?;
    let cospectral = a.n() == b.n() && char_poly(&a)? == char_poly(&b)?;
    let distinct = a.n() != b.n()
        || triangle_census(&a)? != triangle_census(&b)?
        || switching_isomorphic(&a, &b).is_none();
    Ok(FamilyCheck { family: id, orders: (a.n(), b.n()), cospectral, distinct })
}

/// The listed pairs and both infinite families for parameters `1..=max_param`.
pub fn family_ids(max_param: u64) -> Vec<KnownFamily> {
    let mut ids = vec![KnownFamily::SmallK3K3Star, KnownFamily::SmallK3StarT4, KnownFamily::SmallK3T4];
    ids.extend((1..=max_param).map(KnownFamily::Family65));
    ids.extend((1..=max_param).map(KnownFamily::Family66));
    ids
}

fn families(c: &mut Checks, max_param: u64) -> Result<()> {
    for id in family_ids(max_param) {
        let f = check_family(id)?;
        let [(na, ta), (nb, tb)] = known_family_vectors(id)?;
        c.push(
            format!("{id:?}"),
            f.cospectral && f.distinct,
            format!(
                "TE({na},{ta:?}) vs TE({nb},{tb:?}): orders {:?}, cospectral {}, distinct {}",
                f.orders, f.cospectral, f.distinct
            ),
        );
    }
    Ok(())
}

/// The first infinite family with the third entry of its second member replaced;
/// true when both members have the same order and polynomial.
pub fn family65_with_third_entry(i: u64, third: u64) -> Result<bool> {
    let a = crate::expansions::twin_expand(
        &named::k_star(3),
        &[2 * i + 1, i * (3 * i + 2), 2 * (3 * i + 1) * (i + 1)].map(|x| x as usize),
    )?;
    let b = crate::expansions::twin_expand(&named::complete(3), &[i, (3 * i + 1) * (i + 1), third].map(|x| x as usize))?;
    Ok(a.n() == b.n() && char_poly(&a)? == char_poly(&b)?)
}
