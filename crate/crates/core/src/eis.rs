//! Arithmetic over the sixth roots of unity, the Eisenstein integers and the
//! field `Q(ω)`, with `ω = (1 + i√3)/2`.
//!
//! Elements of `Q(ω)` are kept on the basis `{1, ω}`. Since `ω² = ω − 1`,
//! products never leave that basis.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// An element `ω^k` of the unit group `T6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Unit(u8);

impl Unit {
    pub const ONE: Unit = Unit(0);
    pub const OMEGA: Unit = Unit(1);
    pub const NEG_ONE: Unit = Unit(3);
    pub const NEG_OMEGA: Unit = Unit(4);

    pub const ALL: [Unit; 6] = [Unit(0), Unit(1), Unit(2), Unit(3), Unit(4), Unit(5)];

    /// `ω^k`, with `k` reduced modulo 6.
    pub fn new(k: i64) -> Unit {
        Unit(k.rem_euclid(6) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn mul(self, other: Unit) -> Unit {
        Unit((self.0 + other.0) % 6)
    }

    /// Complex conjugate, which for a unit is also its inverse.
    pub fn conj(self) -> Unit {
        Unit((6 - self.0) % 6)
    }

    pub fn inv(self) -> Unit {
        self.conj()
    }

    pub fn pow(self, e: i64) -> Unit {
        Unit::new(self.0 as i64 * e)
    }

    /// Twice the real part: one of `2, 1, −1, −2`.
    pub fn twice_real(self) -> i8 {
        [2, 1, -1, -2, -1, 1][self.0 as usize]
    }

    pub fn real_part(self) -> BigRational {
        BigRational::new(BigInt::from(self.twice_real()), BigInt::from(2))
    }

    pub fn is_real(self) -> bool {
        self.0 == 0 || self.0 == 3
    }

    pub fn to_eis(self) -> EisensteinRational {
        let (a, b) = self.coords();
        EisensteinRational::from_ints(a, b)
    }

    /// Coordinates `(a, b)` of `ω^k = a + bω`.
    pub fn coords(self) -> (i64, i64) {
        match self.0 {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 1),
            3 => (-1, 0),
            4 => (0, -1),
            _ => (1, -1),
        }
    }

    pub fn to_complex(self) -> (f64, f64) {
        let t = std::f64::consts::FRAC_PI_3 * self.0 as f64;
        (t.cos(), t.sin())
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^{}", self.0)
    }
}

impl Mul for Unit {
    type Output = Unit;
    fn mul(self, rhs: Unit) -> Unit {
        Unit::mul(self, rhs)
    }
}

/// Group law of `T6`.
pub fn unit_mul(u: Unit, v: Unit) -> Unit {
    u.mul(v)
}

pub fn unit_conj(u: Unit) -> Unit {
    u.conj()
}

pub fn unit_to_eis(u: Unit) -> EisensteinRational {
    u.to_eis()
}

/// An element `a + bω` of `Q(ω)` with arbitrary-precision rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EisensteinRational {
    a: BigRational,
    b: BigRational,
}

impl EisensteinRational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        EisensteinRational { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        EisensteinRational {
            a: BigRational::from_integer(a.into()),
            b: BigRational::from_integer(b.into()),
        }
    }

    pub fn from_rational(a: BigRational) -> Self {
        EisensteinRational { a, b: BigRational::zero() }
    }

    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn conj(&self) -> Self {
        EisensteinRational { a: &self.a + &self.b, b: -&self.b }
    }

    /// `a + b/2`.
    pub fn real_part(&self) -> BigRational {
        &self.a + &self.b / BigRational::from_integer(2.into())
    }

    /// `a² + ab + b²`, the squared modulus.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(EisensteinRational { a: c.a / &n, b: c.b / n })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self * &inv)
    }

    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        (a + b / 2.0, b * 3f64.sqrt() / 2.0)
    }
}

/// Real part of an element of `Q(ω)`.
pub fn eis_real_part(x: &EisensteinRational) -> BigRational {
    x.real_part()
}

impl Zero for EisensteinRational {
    fn zero() -> Self {
        EisensteinRational { a: BigRational::zero(), b: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for EisensteinRational {
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
}

impl fmt::Display for EisensteinRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{} {} {}w", self.a, sign, self.b.abs())
    }
}

impl<'a> Add<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn add(self, rhs: &EisensteinRational) -> EisensteinRational {
        EisensteinRational { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn sub(self, rhs: &EisensteinRational) -> EisensteinRational {
        EisensteinRational { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn mul(self, rhs: &EisensteinRational) -> EisensteinRational {
        // (a + bω)(c + dω) = ac − bd + (ad + bc + bd)ω
        let bd = &self.b * &rhs.b;
        EisensteinRational {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bd,
        }
    }
}

impl<'a> Neg for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> EisensteinRational {
        EisensteinRational { a: -&self.a, b: -&self.b }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for EisensteinRational {
            type Output = EisensteinRational;
            fn $m(self, rhs: EisensteinRational) -> EisensteinRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> EisensteinRational {
        -&self
    }
}

impl Div for EisensteinRational {
    type Output = EisensteinRational;
    /// Panics on division by zero; use [`EisensteinRational::checked_div`] otherwise.
    fn div(self, rhs: EisensteinRational) -> EisensteinRational {
        self.checked_div(&rhs).expect("division by zero in Q(w)")
    }
}

/// Eisenstein integer with big-integer coordinates, used when machine words overflow.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct BigEis {
    pub a: BigInt,
    pub b: BigInt,
}

impl BigEis {
    pub fn from_unit(u: Unit) -> Self {
        let (a, b) = u.coords();
        BigEis { a: a.into(), b: b.into() }
    }

    pub fn mul_add_assign(&mut self, x: &BigEis, y: &BigEis) {
        if x.a.is_zero() && x.b.is_zero() {
            return;
        }
        let bd = &x.b * &y.b;
        self.a += &x.a * &y.a - &bd;
        self.b += &x.a * &y.b + &x.b * &y.a + bd;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn unit_group_law() {
        assert_eq!(unit_mul(Unit::new(2), Unit::new(5)), Unit::new(1));
        assert_eq!(unit_mul(Unit::new(0), Unit::new(4)), Unit::new(4));
        assert_eq!(unit_mul(Unit::new(3), Unit::new(3)), Unit::new(0));
        assert_eq!(Unit::new(-1), Unit::new(5));
    }

    #[test]
    fn unit_conjugation() {
        assert_eq!(unit_conj(Unit::new(2)), Unit::new(4));
        assert_eq!(unit_conj(Unit::ONE), Unit::ONE);
        assert_eq!(unit_conj(Unit::NEG_ONE), Unit::NEG_ONE);
    }

    #[test]
    fn unit_coordinates() {
        assert_eq!(unit_to_eis(Unit::new(1)), EisensteinRational::from_ints(0, 1));
        assert_eq!(unit_to_eis(Unit::new(3)), EisensteinRational::from_ints(-1, 0));
        assert_eq!(unit_to_eis(Unit::new(2)), EisensteinRational::from_ints(-1, 1));
        // ω² = ω − 1 computed through the product
        let w = EisensteinRational::omega();
        assert_eq!(&w * &w, unit_to_eis(Unit::new(2)));
        for u in Unit::ALL {
            for v in Unit::ALL {
                assert_eq!(&u.to_eis() * &v.to_eis(), (u * v).to_eis());
            }
            assert_eq!(u.to_eis().conj(), u.conj().to_eis());
        }
    }

    #[test]
    fn real_parts() {
        assert_eq!(eis_real_part(&Unit::new(1).to_eis()), q(1, 2));
        assert_eq!(eis_real_part(&Unit::new(3).to_eis()), q(-1, 1));
        assert_eq!(eis_real_part(&EisensteinRational::from_ints(2, 3)), q(7, 2));
        for u in Unit::ALL {
            let re = eis_real_part(&u.to_eis());
            assert_eq!(re, u.real_part());
            assert!([q(1, 1), q(-1, 1), q(1, 2), q(-1, 2)].contains(&re));
        }
    }

    #[test]
    fn norm_and_inverse() {
        let x = EisensteinRational::new(q(3, 4), q(-5, 7));
        let inv = x.inverse().unwrap();
        assert_eq!(&x * &inv, EisensteinRational::one());
        assert_eq!(x.norm(), (&x * &x.conj()).a().clone());
        assert!((&x * &x.conj()).is_real());
        assert!(EisensteinRational::zero().inverse().is_none());
    }
}
