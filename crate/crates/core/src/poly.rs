//! Integer polynomials and exact real-root sign census.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer polynomial stored leading coefficient first: `c₀λⁿ + c₁λⁿ⁻¹ + … + cₙ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Counts of positive, zero and negative roots, with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootCensus {
    pub n_pos: usize,
    pub n_zero: usize,
    pub n_neg: usize,
}

impl RootCensus {
    pub fn new(n_pos: usize, n_zero: usize, n_neg: usize) -> Self {
        RootCensus { n_pos, n_zero, n_neg }
    }

    pub fn as_tuple(self) -> (usize, usize, usize) {
        (self.n_pos, self.n_zero, self.n_neg)
    }
}

impl IntPolynomial {
    /// Builds from coefficients, leading first. Leading zeros are stripped.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let start = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        IntPolynomial { coeffs: coeffs[start..].to_vec() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `Π (λ − rᵢ)` for integer roots.
    pub fn from_integer_roots(roots: &[i64]) -> Self {
        roots.iter().fold(Self::one(), |acc, &r| acc.mul(&Self::from_i64(&[1, -r])))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of `λ^power`.
    pub fn coeff_of_power(&self, power: usize) -> BigInt {
        let d = self.degree();
        if self.is_zero() || power > d {
            BigInt::zero()
        } else {
            self.coeffs[d - power].clone()
        }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.is_one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial { coeffs: vec![] };
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs.iter().fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Multiplicity of the integer root `r`, by repeated exact synthetic division.
    pub fn root_multiplicity(&self, r: i64) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let r = BigInt::from(r);
        let mut cur = self.coeffs.clone();
        let mut mult = 0;
        while cur.len() > 1 {
            let mut q = Vec::with_capacity(cur.len() - 1);
            let mut acc = BigInt::zero();
            for c in &cur[..cur.len() - 1] {
                acc = acc * &r + c;
                q.push(acc.clone());
            }
            let rem = acc * &r + &cur[cur.len() - 1];
            if !rem.is_zero() {
                break;
            }
            mult += 1;
            cur = q;
        }
        mult
    }

    /// Number of trailing zero coefficients, i.e. the multiplicity of the root 0.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().rev().take_while(|c| c.is_zero()).count()
    }

    /// True when `p(−λ) = ±p(λ)`, i.e. every other coefficient vanishes.
    pub fn has_symmetric_roots(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = d - i;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || p == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match p {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{p}")?,
            }
        }
        Ok(())
    }
}

/// Sign census of a real-rooted integer polynomial by Descartes' rule of signs.
///
/// Exact only when every root is real, which holds for characteristic
/// polynomials of Hermitian matrices.
pub fn poly_real_root_counts(p: &IntPolynomial) -> Result<RootCensus> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n_zero = p.zero_root_multiplicity();
    let n_pos = sign_variations(p.coeffs.iter());
    Ok(RootCensus { n_pos, n_zero, n_neg: p.degree() - n_pos - n_zero })
}

fn sign_variations<'a>(coeffs: impl Iterator<Item = &'a BigInt>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for c in coeffs {
        let s = if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

type QPoly = Vec<BigRational>; // lowest degree first

fn q_trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn q_from(p: &IntPolynomial) -> QPoly {
    p.coeffs.iter().rev().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn q_derivative(p: &QPoly) -> QPoly {
    q_trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

fn q_divrem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let b = q_trim(b.clone());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = q_trim(a.clone());
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &f * c;
        }
        q[shift] = f;
        r = q_trim(r);
    }
    (q_trim(q), r)
}

fn q_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let mut a = q_trim(a.clone());
    let mut b = q_trim(b.clone());
    while !b.is_empty() {
        let (_, r) = q_divrem(&a, &b);
        a = b;
        b = r;
    }
    // make monic
    if let Some(l) = a.last().cloned() {
        a.iter_mut().for_each(|c| *c /= &l);
    }
    a
}

fn q_sign_at(p: &QPoly, x: &BigRational) -> i8 {
    let v = p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c);
    sign_of(&v)
}

fn sign_of(v: &BigRational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), q_derivative(p)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let (_, r) = q_divrem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn variations_at(chain: &[QPoly], x: Option<&BigRational>, plus_inf: bool) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| match x {
            Some(x) => q_sign_at(p, x),
            None => {
                let lead = sign_of(p.last().unwrap());
                let odd = (p.len() - 1) % 2 == 1;
                if plus_inf || !odd {
                    lead
                } else {
                    -lead
                }
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Root census through square-free decomposition and Sturm sequences.
///
/// Independent of Descartes' rule; used to cross-check [`poly_real_root_counts`].
/// Only real roots are counted, so for a real-rooted input the three counts sum
/// to the degree.
pub fn sturm_root_counts(p: &IntPolynomial) -> Result<RootCensus> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n_zero = p.zero_root_multiplicity();
    let mut rest = q_from(p);
    rest.drain(..n_zero);
    let mut census = RootCensus { n_pos: 0, n_zero, n_neg: 0 };
    // Yun's square-free factorisation: rest = Π a_i^i
    let mut mult = 1;
    let d = q_derivative(&rest);
    let g = q_gcd(&rest, &d);
    let mut b = q_divrem(&rest, &g).0;
    let mut c = q_divrem(&d, &g).0;
    while b.len() > 1 {
        let bd = q_derivative(&b);
        let len = c.len().max(bd.len());
        let diff: QPoly = q_trim(
            (0..len)
                .map(|i| {
                    c.get(i).cloned().unwrap_or_else(BigRational::zero)
                        - bd.get(i).cloned().unwrap_or_else(BigRational::zero)
                })
                .collect(),
        );
        let a = q_gcd(&b, &diff);
        if a.len() > 1 {
            let chain = sturm_chain(&a);
            let zero = BigRational::zero();
            let v0 = variations_at(&chain, Some(&zero), true);
            let vpos = variations_at(&chain, None, true);
            let vneg = variations_at(&chain, None, false);
            census.n_pos += mult * (v0 - vpos);
            census.n_neg += mult * (vneg - v0);
        }
        b = q_divrem(&b, &a).0;
        c = q_divrem(&diff, &a).0;
        mult += 1;
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descartes_examples() {
        let k3 = IntPolynomial::from_i64(&[1, 0, -3, -2]);
        assert_eq!(poly_real_root_counts(&k3).unwrap().as_tuple(), (1, 0, 2));
        let k4_star = IntPolynomial::from_i64(&[1, 0, -6, -6, -1]);
        assert_eq!(poly_real_root_counts(&k4_star).unwrap().as_tuple(), (1, 0, 3));
        let sq = IntPolynomial::from_i64(&[1, 0, 0]);
        assert_eq!(poly_real_root_counts(&sq).unwrap().as_tuple(), (0, 2, 0));
        assert_eq!(
            poly_real_root_counts(&IntPolynomial::new(vec![])),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn k4_star_formula_expands() {
        // (λ+1)^{n−3}(λ³ − (n−3)λ² − (2n−3)λ − 1) at n = 4
        let p = IntPolynomial::from_i64(&[1, 1]).mul(&IntPolynomial::from_i64(&[1, -1, -5, -1]));
        assert_eq!(p, IntPolynomial::from_i64(&[1, 0, -6, -6, -1]));
    }

    #[test]
    fn sturm_agrees_with_descartes_on_examples() {
        for coeffs in [
            vec![1, 0, -3, -2],
            vec![1, 0, -6, -6, -1],
            vec![1, 0, 0],
            vec![1, 0, -8, 0, 13, 0, -5],
        ] {
            let p = IntPolynomial::from_i64(&coeffs);
            assert_eq!(sturm_root_counts(&p).unwrap(), poly_real_root_counts(&p).unwrap());
        }
    }

    #[test]
    fn multiplicities() {
        let p = IntPolynomial::from_integer_roots(&[2, -1, -1, 0, 0, 0]);
        assert_eq!(p.root_multiplicity(-1), 2);
        assert_eq!(p.root_multiplicity(0), 3);
        assert_eq!(p.zero_root_multiplicity(), 3);
        assert_eq!(p.root_multiplicity(5), 0);
    }

    #[test]
    fn display() {
        let p = IntPolynomial::from_i64(&[1, 0, -3, -2]);
        assert_eq!(p.to_string(), "x^3 - 3x - 2");
    }
}
