//! Exact scalar fields: the rationals and a large prime field.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The default coefficient field.
pub type Rational = BigRational;

/// Exact field arithmetic used by the engine and the module code.
pub trait Scalar: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Whether the value is (the image of) an integer. Always true in a prime field.
    fn is_integer(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_integer(&self) -> bool {
        BigRational::is_integer(self)
    }
}

/// The Mersenne prime `2^61 - 1`.
pub const FP_MODULUS: u64 = (1u64 << 61) - 1;

/// Element of the prime field `F_p`, `p = 2^61 - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp(v % FP_MODULUS)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn mul_mod(a: u64, b: u64) -> u64 {
        let prod = (a as u128) * (b as u128);
        let lo = (prod as u64) & FP_MODULUS;
        let hi = (prod >> 61) as u64;
        let s = lo + hi;
        if s >= FP_MODULUS {
            s - FP_MODULUS
        } else {
            s
        }
    }

    fn pow(self, mut exp: u64) -> Fp {
        let mut base = self.0;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = Self::mul_mod(acc, base);
            }
            base = Self::mul_mod(base, base);
            exp >>= 1;
        }
        Fp(acc)
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(self) -> i128 {
        if self.0 > FP_MODULUS / 2 {
            self.0 as i128 - FP_MODULUS as i128
        } else {
            self.0 as i128
        }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fp({})", self.signed())
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

impl Scalar for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(v: i64) -> Self {
        let m = FP_MODULUS as i128;
        Fp(((v as i128 % m + m) % m) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= FP_MODULUS { s - FP_MODULUS } else { s })
    }
    fn sub(&self, other: &Self) -> Self {
        if self.0 >= other.0 {
            Fp(self.0 - other.0)
        } else {
            Fp(self.0 + FP_MODULUS - other.0)
        }
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(Self::mul_mod(self.0, other.0))
    }
    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(FP_MODULUS - self.0)
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(FP_MODULUS - 2))
        }
    }
    fn is_integer(&self) -> bool {
        true
    }
}

/// Render a rational as `p` or `p/q`.
pub fn rational_str(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-{}/{}", q.numer().abs(), q.denom())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse() {
        for v in [1i64, 2, 3, -7, 123456789] {
            let x = Fp::from_i64(v);
            assert_eq!(x.mul(&x.inv().unwrap()), Fp::one());
        }
        assert!(Fp::zero().inv().is_none());
    }

    #[test]
    fn fp_signed_roundtrip() {
        assert_eq!(Fp::from_i64(-5).signed(), -5);
        assert_eq!(Fp::from_i64(5).sub(&Fp::from_i64(9)).signed(), -4);
    }

    #[test]
    fn rational_integer_check() {
        let half = Rational::new(1.into(), 2.into());
        assert!(!Scalar::is_integer(&half));
        assert!(Scalar::is_integer(&half.add(&half)));
        assert_eq!(rational_str(&half.neg()), "-1/2");
    }
}
