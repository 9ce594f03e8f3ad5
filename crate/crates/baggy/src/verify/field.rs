//! Arithmetic modulo the Mersenne prime 2^61 - 1, the evaluation domain for
//! identity testing. Random evaluation of two distinct polynomials of degree
//! at most |E(H)| disagrees with probability at least 1 - |E(H)|/p per trial.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Sub, SubAssign};

use rand::Rng;

pub const MODULUS: u64 = (1u64 << 61) - 1;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn new(value: u64) -> Self {
        FieldElement(value % MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = FieldElement::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base *= base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(MODULUS - 2))
        }
    }

    pub fn random(rng: &mut impl Rng) -> Self {
        FieldElement(rng.gen_range(0..MODULUS))
    }
}

/// Mersenne reduction of a 128-bit product.
fn reduce128(x: u128) -> u64 {
    let mask = MODULUS as u128;
    let folded = (x & mask) + (x >> 61);
    let folded = (folded & mask) + (folded >> 61);
    let mut r = folded as u64;
    if r >= MODULUS {
        r -= MODULUS;
    }
    r
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        let mut s = self.0 + rhs.0;
        if s >= MODULUS {
            s -= MODULUS;
        }
        FieldElement(s)
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        FieldElement(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + MODULUS - rhs.0
        })
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        FieldElement(reduce128(self.0 as u128 * rhs.0 as u128))
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl From<u64> for FieldElement {
    fn from(v: u64) -> Self {
        FieldElement::new(v)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_wraps_the_modulus() {
        assert_eq!(FieldElement::new(MODULUS), FieldElement::ZERO);
        assert_eq!(FieldElement::new(MODULUS + 5).value(), 5);
    }

    #[test]
    fn multiplication_matches_wide_arithmetic() {
        let a = FieldElement::new(0x1234_5678_9abc_def0);
        let b = FieldElement::new(0x0fed_cba9_8765_4321);
        let wide = (a.value() as u128 * b.value() as u128) % MODULUS as u128;
        assert_eq!((a * b).value(), wide as u64);
    }

    #[test]
    fn inverse_round_trips() {
        for v in [1u64, 2, 17, MODULUS - 1, 123_456_789] {
            let x = FieldElement::new(v);
            assert_eq!(x * x.inverse().unwrap(), FieldElement::ONE);
        }
        assert!(FieldElement::ZERO.inverse().is_none());
    }

    #[test]
    fn subtraction_wraps() {
        assert_eq!(
            FieldElement::new(3) - FieldElement::new(5),
            FieldElement::new(MODULUS - 2)
        );
    }
}
