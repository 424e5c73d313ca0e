//! Multi-modular characteristic polynomials for large orders.
//!
//! `Z[ω] → F_p` sends ω to a root of `x² − x + 1` for primes `p ≡ 1 (mod 6)`;
//! the Hessenberg method gives `χ mod p` in `O(n³)` and the integer
//! coefficients are recovered by CRT against a spectral-radius bound.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPolynomial;
use crate::sdg::SignedDigraph;

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Descending primes `p ≡ 1 (mod 6)` below `2⁶²`.
fn primes() -> impl Iterator<Item = u64> {
    let start = (1u64 << 62) - ((1u64 << 62) % 6) + 1;
    (0u64..).map(move |i| start - 6 * (i + 1)).filter(|&p| is_prime(p))
}

/// A root of `x² − x + 1` modulo `p`.
fn sixth_root(p: u64) -> u64 {
    for g in 2u64.. {
        let r = powmod(g, (p - 1) / 6, p);
        // r has order dividing 6; need exactly 6
        if (mulmod(r, r, p) + 1 + p - r) % p == 0 {
            return r;
        }
    }
    unreachable!()
}

/// `χ(E) mod p` by reduction to upper Hessenberg form, coefficients lowest first.
fn charpoly_mod(phi: &SignedDigraph, p: u64) -> Vec<u64> {
    let n = phi.n();
    let r = sixth_root(p);
    let mut pw = [1u64; 6];
    for k in 1..6 {
        pw[k] = mulmod(pw[k - 1], r, p);
    }
    let mut a = vec![0u64; n * n];
    for u in 0..n {
        for v in 0..n {
            if let Some(g) = phi.gain(u, v) {
                a[u * n + v] = pw[g.exponent() as usize];
            }
        }
    }
    let inv = |x: u64| powmod(x, p - 2, p);
    // Hessenberg reduction by elementary similarity transforms.
    for m in 1..n.saturating_sub(1) {
        let piv = (m..n).find(|&i| a[i * n + m - 1] != 0);
        let Some(i) = piv else { continue };
        if i != m {
            for j in 0..n {
                a.swap(i * n + j, m * n + j);
            }
            for k in 0..n {
                a.swap(k * n + i, k * n + m);
            }
        }
        let pinv = inv(a[m * n + m - 1]);
        for i in m + 1..n {
            let f = mulmod(a[i * n + m - 1], pinv, p);
            if f == 0 {
                continue;
            }
            // row_i -= f row_m
            for j in 0..n {
                let t = mulmod(f, a[m * n + j], p);
                a[i * n + j] = (a[i * n + j] + p - t) % p;
            }
            // col_m += f col_i
            for k in 0..n {
                let t = mulmod(f, a[k * n + i], p);
                a[k * n + m] = (a[k * n + m] + t) % p;
            }
        }
    }
    // p_k(λ) = (λ − h_kk) p_{k−1} − Σ_{i<k} h_ik (Π_{j=i+1..k} h_{j,j−1}) p_{i−1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - mulmod(a[k * n + k], c, p)) % p;
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mulmod(prod, a[(i + 1) * n + i], p);
            if prod == 0 {
                break;
            }
            let f = mulmod(prod, a[i * n + k], p);
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = (next[d] + p - mulmod(f, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Bits needed to hold every coefficient of `χ`, using `|c_k| ≤ C(n,k)·Δᵏ ≤ (1+Δ)ⁿ`.
fn coefficient_bits(phi: &SignedDigraph) -> u64 {
    let n = phi.n();
    let delta = (0..n).map(|u| phi.degree(u)).max().unwrap_or(0);
    (n as f64 * ((1 + delta) as f64).log2()).ceil() as u64 + 2
}

/// Exact `χ(E(Φ))` via CRT over word-size primes.
pub fn char_poly_modular(phi: &SignedDigraph) -> IntPolynomial {
    let n = phi.n();
    let bits = coefficient_bits(phi);
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    let mut used_bits = 0u64;
    // one prime beyond the bound as a stability check
    let mut spare = 1;
    for p in primes() {
        let res = charpoly_mod(phi, p);
        let pb = BigInt::from(p);
        if used_bits > bits {
            let stable = acc.iter().zip(&res).all(|(x, &r)| {
                let mut m = x % &pb;
                if m.is_negative() {
                    m += &pb;
                }
                m == BigInt::from(r)
            });
            assert!(stable, "modular characteristic polynomial failed the spare-prime check");
            spare -= 1;
            if spare == 0 {
                break;
            }
            continue;
        }
        // Garner step: acc ≡ old mod M, acc ≡ r mod p
        let m_mod_p = (&modulus % &pb).to_u64_digits().1.first().copied().unwrap_or(0);
        let m_inv = powmod(m_mod_p, p - 2, p);
        for (x, &r) in acc.iter_mut().zip(&res) {
            let mut xm = x.clone() % &pb;
            if xm.is_negative() {
                xm += &pb;
            }
            let xm = xm.to_u64_digits().1.first().copied().unwrap_or(0);
            let t = mulmod((r + p - xm) % p, m_inv, p);
            *x += &modulus * BigInt::from(t);
        }
        modulus *= &pb;
        used_bits += 61;
        let half = &modulus >> 1;
        for x in acc.iter_mut() {
            if *x > half {
                *x -= &modulus;
            }
        }
    }
    IntPolynomial::new(acc.into_iter().rev().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn primes_are_one_mod_six() {
        for p in primes().take(5) {
            assert_eq!(p % 6, 1);
            let r = sixth_root(p);
            assert_eq!(powmod(r, 6, p), 1);
            assert_ne!(powmod(r, 3, p), 1);
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(char_poly_modular(&named::complete(3)), IntPolynomial::from_i64(&[1, 0, -3, -2]));
        assert_eq!(
            char_poly_modular(&named::cospectral_pair_a()),
            IntPolynomial::from_i64(&[1, 0, -8, 0, 13, 0, -5])
        );
        assert_eq!(char_poly_modular(&named::empty(3)), IntPolynomial::from_i64(&[1, 0, 0, 0]));
        assert_eq!(char_poly_modular(&named::empty(0)), IntPolynomial::one());
    }
}
