//! Eisenstein matrices, exact characteristic polynomials and derived spectral data.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::eis::{BigEis, EisensteinRational, Unit};
use crate::error::{Error, Result};
use crate::modular::char_poly_modular;
use crate::poly::{poly_real_root_counts, IntPolynomial, RootCensus};
use crate::sdg::{SignedDigraph, VertexCycle};

/// Above this order the trace recursion gives way to the multi-modular method.
pub const TRACE_RECURSION_LIMIT: usize = 64;

/// Dense Hermitian matrix over `Q(ω)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EisensteinMatrix {
    n: usize,
    entries: Vec<EisensteinRational>,
}

impl EisensteinMatrix {
    /// Builds from row-major entries, checking the Hermitian property.
    pub fn new(n: usize, entries: Vec<EisensteinRational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::LengthMismatch { expected: n * n, got: entries.len() });
        }
        let m = EisensteinMatrix { n, entries };
        for u in 0..n {
            for v in u..n {
                if m.get(u, v).conj() != *m.get(v, u) {
                    return Err(Error::NotHermitian(u, v));
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> &EisensteinRational {
        &self.entries[u * self.n + v]
    }

    /// The entries as a signed digraph, when every entry is zero or a unit off the diagonal.
    pub fn as_digraph(&self) -> Option<SignedDigraph> {
        let n = self.n;
        let mut g = SignedDigraph::empty(n);
        for u in 0..n {
            for v in 0..n {
                let e = self.get(u, v);
                if e.is_zero() {
                    continue;
                }
                if u == v {
                    return None;
                }
                let unit = Unit::ALL.into_iter().find(|k| k.to_eis() == *e)?;
                if v > u {
                    g.set_gain(u, v, unit);
                }
            }
        }
        Some(g)
    }
}

/// The unit Eisenstein matrix of `phi`.
pub fn eisenstein_matrix(phi: &SignedDigraph) -> EisensteinMatrix {
    let n = phi.n();
    let mut entries = vec![EisensteinRational::zero(); n * n];
    for u in 0..n {
        for v in 0..n {
            if let Some(g) = phi.gain(u, v) {
                entries[u * n + v] = g.to_eis();
            }
        }
    }
    EisensteinMatrix { n, entries }
}

/// Exact characteristic polynomial `det(λI − M)`.
pub fn char_poly_exact(m: &EisensteinMatrix) -> Result<IntPolynomial> {
    match m.as_digraph() {
        Some(g) => char_poly(&g),
        None => char_poly_rational(m),
    }
}

/// Exact `χ(E(Φ))`: trace recursion up to [`TRACE_RECURSION_LIMIT`], multi-modular beyond.
pub fn char_poly(phi: &SignedDigraph) -> Result<IntPolynomial> {
    if phi.n() > TRACE_RECURSION_LIMIT {
        return Ok(char_poly_modular(phi));
    }
    char_poly_traces(phi)
}

/// Exact `χ(E(Φ))` by the trace recursion at any order.
pub fn char_poly_traces(phi: &SignedDigraph) -> Result<IntPolynomial> {
    if let Some(c) = small::char_poly(phi) {
        return c;
    }
    let traces = big_power_traces(phi)?;
    newton(&traces)
}

#[inline]
fn rot_small(a: i64, b: i64, k: u8) -> (i64, i64) {
    // (a + bω)·ω = −b + (a+b)ω
    match k {
        0 => (a, b),
        1 => (-b, a + b),
        2 => (-a - b, a),
        3 => (-a, -b),
        4 => (b, -a - b),
        _ => (a + b, -a),
    }
}

mod small {
    //! Machine-word trace recursion; `None` signals overflow.

    use super::*;

    pub(super) fn char_poly(phi: &SignedDigraph) -> Option<Result<IntPolynomial>> {
        let traces = power_traces(phi)?;
        let n = phi.n();
        let mut c = vec![0i128; n + 1];
        c[0] = 1;
        for k in 1..=n {
            let mut s: i128 = 0;
            for j in 1..=k {
                s = s.checked_add(traces[j].checked_mul(c[k - j])?)?;
            }
            if s % k as i128 != 0 {
                return Some(Err(Error::NonIntegerCoefficient { index: k, value: format!("{}/{}", -s, k) }));
            }
            c[k] = -s / k as i128;
        }
        Some(Ok(IntPolynomial::new(c.into_iter().map(BigInt::from).collect())))
    }

    /// `tr(E^j)` for `j = 0..=n`, with the ω-component checked to vanish.
    pub(super) fn power_traces(phi: &SignedDigraph) -> Option<Vec<i128>> {
        let n = phi.n();
        let nbrs: Vec<Vec<(usize, u8)>> =
            (0..n).map(|j| (0..n).filter(|&l| phi.is_adjacent(l, j)).map(|l| (l, phi.code(l, j))).collect()).collect();
        let h = n.div_ceil(2).max(1);
        let mut powers: Vec<Vec<(i64, i64)>> = Vec::with_capacity(h + 1);
        powers.push((0..n * n).map(|i| if i / n == i % n { (1, 0) } else { (0, 0) }).collect());
        for k in 1..=h {
            let prev = &powers[k - 1];
            let mut next = vec![(0i64, 0i64); n * n];
            for i in 0..n {
                let row = &prev[i * n..(i + 1) * n];
                for j in 0..n {
                    let (mut a, mut b) = (0i64, 0i64);
                    for &(l, code) in &nbrs[j] {
                        let (x, y) = row[l];
                        if x == 0 && y == 0 {
                            continue;
                        }
                        let (x, y) = rot_small(x, y, code);
                        a = a.checked_add(x)?;
                        b = b.checked_add(y)?;
                    }
                    // rotation can overflow only via the sums above, but guard the a+b inside rot
                    if a.checked_add(b).is_none() {
                        return None;
                    }
                    next[i * n + j] = (a, b);
                }
            }
            powers.push(next);
        }
        let mut traces = vec![0i128; n + 1];
        traces[0] = n as i128;
        for (k, slot) in traces.iter_mut().enumerate().skip(1) {
            let (ia, ib) = if k <= h { (k, 0) } else { (h, k - h) };
            let (pa, pb) = (&powers[ia], &powers[ib]);
            let (mut re, mut om) = (0i128, 0i128);
            for i in 0..n {
                for j in 0..n {
                    let (x1, y1) = pa[i * n + j];
                    let (x2, y2) = if ib == 0 {
                        if i == j {
                            (1, 0)
                        } else {
                            (0, 0)
                        }
                    } else {
                        pb[j * n + i]
                    };
                    let (x1, y1, x2, y2) = (x1 as i128, y1 as i128, x2 as i128, y2 as i128);
                    let bd = y1.checked_mul(y2)?;
                    re = re.checked_add(x1.checked_mul(x2)?.checked_sub(bd)?)?;
                    om = om.checked_add(x1.checked_mul(y2)?.checked_add(y1.checked_mul(x2)?)?.checked_add(bd)?)?;
                }
            }
            debug_assert_eq!(om, 0, "trace of a Hermitian power must be rational");
            if om != 0 {
                return None;
            }
            *slot = re;
        }
        Some(traces)
    }
}

fn big_power_traces(phi: &SignedDigraph) -> Result<Vec<BigInt>> {
    let n = phi.n();
    let h = n.div_ceil(2).max(1);
    let unit: Vec<BigEis> = Unit::ALL.iter().map(|&u| BigEis::from_unit(u)).collect();
    let nbrs: Vec<Vec<(usize, u8)>> =
        (0..n).map(|j| (0..n).filter(|&l| phi.is_adjacent(l, j)).map(|l| (l, phi.code(l, j))).collect()).collect();
    let mut powers: Vec<Vec<BigEis>> = Vec::with_capacity(h + 1);
    let mut id = vec![BigEis::default(); n * n];
    for i in 0..n {
        id[i * n + i] = BigEis::from_unit(Unit::ONE);
    }
    powers.push(id);
    for k in 1..=h {
        let prev = &powers[k - 1];
        let mut next = vec![BigEis::default(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigEis::default();
                for &(l, code) in &nbrs[j] {
                    acc.mul_add_assign(&prev[i * n + l], &unit[code as usize]);
                }
                next[i * n + j] = acc;
            }
        }
        powers.push(next);
    }
    let mut traces = vec![BigInt::zero(); n + 1];
    traces[0] = BigInt::from(n);
    for (k, slot) in traces.iter_mut().enumerate().skip(1) {
        let (ia, ib) = if k <= h { (k, 0) } else { (h, k - h) };
        let mut acc = BigEis::default();
        for i in 0..n {
            for j in 0..n {
                let y = &powers[ib][j * n + i];
                acc.mul_add_assign(&powers[ia][i * n + j], y);
            }
        }
        if !acc.b.is_zero() {
            return Err(Error::Inconsistent(format!("tr(E^{k}) has nonzero ω-component")));
        }
        *slot = acc.a;
    }
    Ok(traces)
}

/// Newton's identities: `k·c_k = −Σ_{j=1..k} p_j c_{k−j}`.
fn newton(traces: &[BigInt]) -> Result<IntPolynomial> {
    let n = traces.len() - 1;
    let mut c = vec![BigInt::zero(); n + 1];
    c[0] = BigInt::one();
    for k in 1..=n {
        let mut s = BigInt::zero();
        for j in 1..=k {
            s += &traces[j] * &c[k - j];
        }
        let kk = BigInt::from(k);
        if !(&s % &kk).is_zero() {
            return Err(Error::NonIntegerCoefficient { index: k, value: format!("{}/{}", -s, k) });
        }
        c[k] = -s / kk;
    }
    Ok(IntPolynomial::new(c))
}

/// Trace recursion over `Q(ω)` for matrices with non-unit entries.
fn char_poly_rational(m: &EisensteinMatrix) -> Result<IntPolynomial> {
    let n = m.n;
    let mul = |a: &[EisensteinRational], b: &[EisensteinRational]| {
        let mut out = vec![EisensteinRational::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let x = &a[i * n + l];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = &out[i * n + j] + &(x * &b[l * n + j]);
                }
            }
        }
        out
    };
    let mut power = m.entries.clone();
    let mut coeffs = vec![EisensteinRational::one()];
    let mut traces = vec![EisensteinRational::from_ints(n as i64, 0)];
    for k in 1..=n {
        if k > 1 {
            power = mul(&power, &m.entries);
        }
        let tr = (0..n).fold(EisensteinRational::zero(), |acc, i| &acc + &power[i * n + i]);
        traces.push(tr);
        let mut s = EisensteinRational::zero();
        for j in 1..=k {
            s = &s + &(&traces[j] * &coeffs[k - j]);
        }
        coeffs.push(-(s * EisensteinRational::from_rational(BigRational::new(BigInt::one(), BigInt::from(k)))));
    }
    let mut out = Vec::with_capacity(n + 1);
    for (i, c) in coeffs.into_iter().enumerate() {
        if !c.b().is_zero() || !c.a().is_integer() {
            return Err(Error::NonIntegerCoefficient { index: i, value: c.to_string() });
        }
        out.push(c.a().to_integer());
    }
    Ok(IntPolynomial::new(out))
}

/// `tr(Mᵖ)` for `p ∈ {2, 3}`.
pub fn trace_power(m: &EisensteinMatrix, p: u32) -> Result<BigInt> {
    let n = m.n;
    let mut acc = EisensteinRational::zero();
    match p {
        2 => {
            for i in 0..n {
                for j in 0..n {
                    acc = &acc + &(m.get(i, j) * m.get(j, i));
                }
            }
        }
        3 => {
            for i in 0..n {
                for j in 0..n {
                    if m.get(i, j).is_zero() {
                        continue;
                    }
                    let ij = m.get(i, j);
                    for k in 0..n {
                        if m.get(j, k).is_zero() || m.get(k, i).is_zero() {
                            continue;
                        }
                        acc = &acc + &(&(ij * m.get(j, k)) * m.get(k, i));
                    }
                }
            }
        }
        _ => {
            return Err(Error::InvalidParameters { name: "trace_power".into(), reason: format!("power {p} not in {{2,3}}") })
        }
    }
    if !acc.b().is_zero() || !acc.a().is_integer() {
        return Err(Error::Inconsistent(format!("tr(M^{p}) = {acc} is not an integer")));
    }
    Ok(acc.a().to_integer())
}

/// `tr(E³)` on unit coordinates, used by the census prefilter.
pub(crate) fn trace_cubed(phi: &SignedDigraph) -> i64 {
    let n = phi.n();
    let mut twice = 0i64;
    for a in 0..n {
        for b in a + 1..n {
            let Some(gab) = phi.gain(a, b) else { continue };
            for c in b + 1..n {
                if let (Some(gbc), Some(gca)) = (phi.gain(b, c), phi.gain(c, a)) {
                    twice += (gab * gbc * gca).twice_real() as i64;
                }
            }
        }
    }
    // each triangle contributes 3 rotations × 2 directions × Re = 6·Re = 3·(2Re)
    3 * twice
}

/// Triangle counts by the real part of their gain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct TriangleCensus {
    pub s_one: usize,
    pub s_half: usize,
    pub s_neg_half: usize,
    pub s_neg_one: usize,
}

impl TriangleCensus {
    pub fn as_tuple(self) -> (usize, usize, usize, usize) {
        (self.s_one, self.s_half, self.s_neg_half, self.s_neg_one)
    }

    /// `6s₁ + 3s_½ − 3s_{−½} − 6s_{−1}`.
    pub fn weighted(self) -> i64 {
        6 * self.s_one as i64 + 3 * self.s_half as i64 - 3 * self.s_neg_half as i64 - 6 * self.s_neg_one as i64
    }
}

/// Counts triangles by real part of gain; cross-checked against `tr(E³)`.
pub fn triangle_census(phi: &SignedDigraph) -> Result<TriangleCensus> {
    let n = phi.n();
    let mut t = TriangleCensus::default();
    for a in 0..n {
        for b in a + 1..n {
            let Some(gab) = phi.gain(a, b) else { continue };
            for c in b + 1..n {
                if let (Some(gbc), Some(gca)) = (phi.gain(b, c), phi.gain(c, a)) {
                    match (gab * gbc * gca).twice_real() {
                        2 => t.s_one += 1,
                        1 => t.s_half += 1,
                        -1 => t.s_neg_half += 1,
                        _ => t.s_neg_one += 1,
                    }
                }
            }
        }
    }
    let tr3 = trace_power(&eisenstein_matrix(phi), 3)?;
    if tr3 != BigInt::from(t.weighted()) {
        return Err(Error::Inconsistent(format!("triangle census {t:?} disagrees with tr(E³) = {tr3}")));
    }
    Ok(t)
}

/// `n` minus the multiplicity of the root 0.
pub fn rank_exact(phi: &SignedDigraph) -> Result<usize> {
    Ok(phi.n() - char_poly(phi)?.zero_root_multiplicity())
}

/// Exact `(n₊, n₀, n₋)`.
pub fn inertia(phi: &SignedDigraph) -> Result<RootCensus> {
    poly_real_root_counts(&char_poly(phi)?)
}

/// Gain of `cycle` traversed in its stated direction.
pub fn cycle_gain(phi: &SignedDigraph, cycle: &VertexCycle) -> Result<Unit> {
    let vs = cycle.vertices();
    let mut g = Unit::ONE;
    for i in 0..vs.len() {
        let (u, v) = (vs[i], vs[(i + 1) % vs.len()]);
        if u >= phi.n() || v >= phi.n() {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n: phi.n() });
        }
        g = g * phi.gain(u, v).ok_or(Error::NotAdjacent(u, v))?;
    }
    Ok(g)
}

/// True iff `χ(−λ) = ±χ(λ)`.
pub fn spectrum_is_symmetric(phi: &SignedDigraph) -> Result<bool> {
    Ok(char_poly(phi)?.has_symmetric_roots())
}

/// Eigenvalues in descending order, from cyclic Jacobi on the real symmetric
/// `2n × 2n` embedding `[[Re, −Im], [Im, Re]]`.
pub fn eigenvalues_numeric(m: &EisensteinMatrix) -> Vec<f64> {
    let n = m.n;
    let dim = 2 * n;
    let mut a = vec![0.0f64; dim * dim];
    for i in 0..n {
        for j in 0..n {
            let (re, im) = m.get(i, j).to_complex();
            a[i * dim + j] = re;
            a[(i + n) * dim + j + n] = re;
            a[i * dim + j + n] = -im;
            a[(i + n) * dim + j] = im;
        }
    }
    let mut eig = jacobi_eigenvalues(&mut a, dim);
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    eig.into_iter().step_by(2).collect()
}

pub fn eigenvalues_of(phi: &SignedDigraph) -> Vec<f64> {
    eigenvalues_numeric(&eisenstein_matrix(phi))
}

fn jacobi_eigenvalues(a: &mut [f64], dim: usize) -> Vec<f64> {
    let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-12 * norm.max(1e-300);
    for _sweep in 0..100 {
        let off: f64 = (0..dim)
            .flat_map(|i| (0..dim).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * dim + j] * a[i * dim + j])
            .sum::<f64>()
            .sqrt();
        if off <= tol {
            break;
        }
        for p in 0..dim {
            for q in p + 1..dim {
                let apq = a[p * dim + q];
                if apq.abs() < 1e-300 {
                    continue;
                }
                let app = a[p * dim + p];
                let aqq = a[q * dim + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..dim {
                    let akp = a[k * dim + p];
                    let akq = a[k * dim + q];
                    a[k * dim + p] = c * akp - s * akq;
                    a[k * dim + q] = s * akp + c * akq;
                }
                for k in 0..dim {
                    let apk = a[p * dim + k];
                    let aqk = a[q * dim + k];
                    a[p * dim + k] = c * apk - s * aqk;
                    a[q * dim + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..dim).map(|i| a[i * dim + i]).collect()
}

/// Numerical check of Cauchy interlacing for the principal submatrix on `subset`.
pub fn verify_interlacing(phi: &SignedDigraph, subset: &[usize]) -> bool {
    const TOL: f64 = 1e-8;
    let lam = eigenvalues_of(phi);
    let mu = eigenvalues_of(&phi.induced(subset));
    let (n, m) = (lam.len(), mu.len());
    (0..m).all(|i| lam[i] >= mu[i] - TOL && mu[i] >= lam[n - m + i] - TOL)
}

/// Exact and numeric spectral summary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub charpoly: IntPolynomial,
    pub inertia: RootCensus,
    pub numeric_eigenvalues: Vec<f64>,
}

pub fn spectrum(phi: &SignedDigraph) -> Result<Spectrum> {
    let charpoly = char_poly(phi)?;
    let inertia = poly_real_root_counts(&charpoly)?;
    Ok(Spectrum { charpoly, inertia, numeric_eigenvalues: eigenvalues_of(phi) })
}

/// Largest `|χ(λᵢ)|` over the numeric eigenvalues, scaled by the largest coefficient.
pub fn relative_residual(s: &Spectrum) -> f64 {
    let scale = s.charpoly.coeffs().iter().map(|c| c.abs().to_f64().unwrap_or(f64::MAX)).fold(1.0, f64::max);
    s.numeric_eigenvalues.iter().map(|&x| s.charpoly.eval_f64(x).abs()).fold(0.0, f64::max) / scale
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn matrix_examples() {
        let d = named::complete(2);
        let m = eisenstein_matrix(&d);
        assert!(m.get(0, 1).is_one() && m.get(1, 0).is_one() && m.get(0, 0).is_zero());
        let arc = SignedDigraph::from_edge_list(2, [(0, 1, 1)]).unwrap();
        let m = eisenstein_matrix(&arc);
        assert_eq!(*m.get(1, 0), EisensteinRational::omega().conj());
        assert!(eisenstein_matrix(&named::empty(3)).entries.iter().all(|e| e.is_zero()));
    }

    #[test]
    fn non_hermitian_rejected() {
        let e = vec![
            EisensteinRational::zero(),
            EisensteinRational::omega(),
            EisensteinRational::omega(),
            EisensteinRational::zero(),
        ];
        assert_eq!(EisensteinMatrix::new(2, e), Err(Error::NotHermitian(0, 1)));
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(char_poly(&named::complete(3)).unwrap(), poly(&[1, 0, -3, -2]));
        let k5 = poly(&[1, 1]).pow(2).mul(&poly(&[1, -2, -7, -1]));
        assert_eq!(char_poly(&named::k_star(5)).unwrap(), k5);
        assert_eq!(char_poly(&named::cospectral_pair_a()).unwrap(), poly(&[1, 0, -8, 0, 13, 0, -5]));
        assert_eq!(char_poly(&named::empty(0)).unwrap(), IntPolynomial::one());
    }

    #[test]
    fn rational_path_agrees() {
        let g = named::cospectral_pair_b();
        let mut m = eisenstein_matrix(&g);
        assert_eq!(char_poly_exact(&m).unwrap(), char_poly(&g).unwrap());
        // scaled entries force the rational path: χ(2E)(λ) = 2ⁿ χ(E)(λ/2)
        for e in m.entries.iter_mut() {
            *e = &*e + &*e;
        }
        let p = char_poly_exact(&m).unwrap();
        let base = char_poly(&g).unwrap();
        for k in 0..=6 {
            assert_eq!(p.coeff_of_power(k), base.coeff_of_power(k) * BigInt::from(1 << (6 - k)));
        }
    }

    #[test]
    fn big_path_agrees_with_small() {
        let g = named::symmetric_non_bipartite();
        let traces = big_power_traces(&g).unwrap();
        assert_eq!(newton(&traces).unwrap(), char_poly(&g).unwrap());
    }

    #[test]
    fn trace_examples() {
        let k3 = eisenstein_matrix(&named::complete(3));
        assert_eq!(trace_power(&k3, 2).unwrap(), BigInt::from(6));
        assert_eq!(trace_power(&k3, 3).unwrap(), BigInt::from(6));
        let mut t = named::complete(3);
        t.set_gain(0, 1, Unit::OMEGA);
        assert_eq!(trace_power(&eisenstein_matrix(&t), 3).unwrap(), BigInt::from(3));
        assert_eq!(trace_cubed(&t), 3);
    }

    #[test]
    fn triangle_census_examples() {
        assert_eq!(triangle_census(&named::complete(4)).unwrap().as_tuple(), (4, 0, 0, 0));
        assert_eq!(triangle_census(&named::k_star(4)).unwrap().as_tuple(), (2, 2, 0, 0));
        assert_eq!(triangle_census(&named::complete(3).negate()).unwrap().as_tuple(), (0, 0, 0, 1));
    }

    #[test]
    fn rank_and_inertia() {
        assert_eq!(rank_exact(&named::path(5)).unwrap(), 4);
        assert_eq!(rank_exact(&named::cycle(5, Unit::OMEGA).unwrap()).unwrap(), 5);
        assert_eq!(rank_exact(&named::empty(4)).unwrap(), 0);
        assert_eq!(inertia(&named::k_star(6)).unwrap().as_tuple(), (1, 0, 5));
        assert_eq!(inertia(&named::k_double_star()).unwrap().as_tuple(), (1, 1, 3));
        let c4 = named::cycle(4, Unit::NEG_OMEGA).unwrap();
        let ce = crate::expansions::clique_expand(&c4, &[2, 1, 1, 1]).unwrap();
        assert_eq!(inertia(&ce).unwrap().as_tuple(), (2, 0, 3));
    }

    #[test]
    fn numeric_eigenvalues() {
        let close = |a: &[f64], b: &[f64]| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9);
        assert!(close(&eigenvalues_of(&named::complete(3)), &[2.0, -1.0, -1.0]));
        assert!(close(&eigenvalues_of(&named::complete(2)), &[1.0, -1.0]));
        let s3 = 3f64.sqrt();
        assert!(close(&eigenvalues_of(&named::cycle(4, Unit::NEG_OMEGA).unwrap()), &[s3, 1.0, -1.0, -s3]));
        let s = spectrum(&named::k_star(5)).unwrap();
        assert!(relative_residual(&s) < 1e-8);
    }

    #[test]
    fn cycle_gains() {
        let tri = named::complete(3);
        let c = VertexCycle::new(vec![0, 1, 2]).unwrap();
        assert_eq!(cycle_gain(&tri, &c).unwrap(), Unit::ONE);
        let a = named::cospectral_pair_a();
        let c = VertexCycle::new(vec![1, 2, 3]).unwrap();
        assert_eq!(cycle_gain(&a, &c).unwrap().twice_real(), -2);
        let mut t = named::complete(3);
        t.set_gain(0, 1, Unit::OMEGA);
        let c = VertexCycle::new(vec![0, 1, 2]).unwrap();
        assert_eq!(cycle_gain(&t, &c.reversed()).unwrap(), cycle_gain(&t, &c).unwrap().conj());
        let p = named::path(3);
        assert_eq!(cycle_gain(&p, &c), Err(Error::NotAdjacent(2, 0)));
    }

    #[test]
    fn symmetric_spectra() {
        assert!(spectrum_is_symmetric(&named::complete_bipartite(2, 3)).unwrap());
        assert!(!spectrum_is_symmetric(&named::complete(3)).unwrap());
        assert!(spectrum_is_symmetric(&named::symmetric_non_bipartite()).unwrap());
    }

    #[test]
    fn interlacing() {
        assert!(verify_interlacing(&named::complete(4), &[0, 2, 3]));
        let g = named::cospectral_pair_a();
        assert!(verify_interlacing(&g, &[0, 1, 2, 3, 4, 5]));
        assert!(verify_interlacing(&g, &[1, 4]));
    }

    #[test]
    fn modular_matches_traces_at_moderate_order() {
        let g = crate::expansions::twin_expand(&named::k_star(3), &[3, 5, 16]).unwrap();
        assert_eq!(char_poly_modular(&g), char_poly_traces(&g).unwrap());
    }
}
