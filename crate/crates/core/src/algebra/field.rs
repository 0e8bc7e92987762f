//! Prime fields `F_p` and their scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Deterministic primality test by trial division; moduli here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least `k >= 1` with `a^k = 1 (mod modulus)`.
pub fn mult_order(a: u64, modulus: u64) -> Result<u64> {
    if modulus == 0 || gcd(a % modulus, modulus) != 1 {
        return Err(Error::NotCoprime { a, modulus });
    }
    if modulus == 1 {
        return Ok(1);
    }
    let a = a % modulus;
    let mut x = a;
    let mut k = 1;
    while x != 1 {
        x = ((x as u128 * a as u128) % modulus as u128) as u64;
        k += 1;
    }
    Ok(k)
}

/// Units of `Z/nZ` in increasing order.
pub fn units_mod(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

/// The field `F_p` for a machine-word prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Largest supported modulus; keeps dot products of long vectors inside `u64`.
    pub const MAX_P: u32 = 1 << 24;

    pub fn new(p: u32) -> Result<Self> {
        if p >= Self::MAX_P {
            return Err(Error::OutOfRange(format!("modulus {p} exceeds {}", Self::MAX_P)));
        }
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    /// Number of elements as a `u64`.
    #[inline]
    pub fn size(self) -> u64 {
        self.p as u64
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u32) -> Option<u32> {
        if a % self.p == 0 {
            return None;
        }
        Some(self.pow(a, self.p as u64 - 2))
    }

    /// Multiplicative order of a non-zero element.
    pub fn order(self, a: u32) -> Result<u64> {
        mult_order(a as u64, self.p as u64)
    }

    /// Smallest generator of `F_p^x`.
    pub fn primitive_root(self) -> u32 {
        if self.p == 2 {
            return 1;
        }
        (1..self.p)
            .find(|&a| self.order(a).ok() == Some(self.p as u64 - 1))
            .expect("F_p^x is cyclic")
    }

    pub fn nonzero(self) -> impl Iterator<Item = u32> {
        1..self.p
    }

    pub fn scalar(self, value: i64) -> FpScalar {
        FpScalar {
            value: self.reduce(value),
            p: self.p,
        }
    }
}

/// An element of `F_p`, carrying its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpScalar {
    value: u32,
    p: u32,
}

impl FpScalar {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<FpScalar> {
        self.field().inv(self.value).map(|value| FpScalar { value, p: self.p })
    }

    pub fn pow(self, e: u64) -> FpScalar {
        FpScalar {
            value: self.field().pow(self.value, e),
            p: self.p,
        }
    }

    fn check(self, other: FpScalar) {
        assert_eq!(self.p, other.p, "scalars over different fields");
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        self.check(rhs);
        FpScalar {
            value: self.field().add(self.value, rhs.value),
            p: self.p,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        self.check(rhs);
        FpScalar {
            value: self.field().sub(self.value, rhs.value),
            p: self.p,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        self.check(rhs);
        FpScalar {
            value: self.field().mul(self.value, rhs.value),
            p: self.p,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar {
            value: self.field().neg(self.value),
            p: self.p,
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
