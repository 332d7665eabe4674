use std::fmt;

use crate::error::{Error, Result};

/// Largest modulus accepted. Products of two residues must fit in a `u64`.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// A validated prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub const TWO: Prime = Prime(2);

    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_MODULUS || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub(crate) fn reduce(self, x: u64) -> u64 {
        x % self.0
    }

    #[inline]
    pub(crate) fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub(crate) fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    #[inline]
    pub(crate) fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub(crate) fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue by Fermat's little theorem.
    pub(crate) fn inv(self, a: u64) -> Result<u64> {
        let a = a % self.0;
        if a == 0 {
            return Err(Error::DivisionByZero(self.0));
        }
        Ok(self.pow(a, self.0 - 2))
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Trial division; moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue in the prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    p: Prime,
    value: u64,
}

impl FpScalar {
    pub fn new(value: u64, p: Prime) -> Self {
        FpScalar {
            p,
            value: p.reduce(value),
        }
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn from_i64(value: i64, p: Prime) -> Self {
        let m = p.get() as i64;
        FpScalar {
            p,
            value: value.rem_euclid(m) as u64,
        }
    }

    pub fn zero(p: Prime) -> Self {
        FpScalar { p, value: 0 }
    }

    pub fn one(p: Prime) -> Self {
        FpScalar::new(1, p)
    }

    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn check(&self, other: &FpScalar) -> Result<()> {
        if self.p != other.p {
            return Err(Error::IncompatibleRings(format!(
                "F_{} versus F_{}",
                self.p, other.p
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &FpScalar) -> Result<FpScalar> {
        self.check(other)?;
        Ok(FpScalar {
            p: self.p,
            value: self.p.add(self.value, other.value),
        })
    }

    pub fn try_sub(&self, other: &FpScalar) -> Result<FpScalar> {
        self.check(other)?;
        Ok(FpScalar {
            p: self.p,
            value: self.p.sub(self.value, other.value),
        })
    }

    pub fn try_mul(&self, other: &FpScalar) -> Result<FpScalar> {
        self.check(other)?;
        Ok(FpScalar {
            p: self.p,
            value: self.p.mul(self.value, other.value),
        })
    }

    pub fn neg(&self) -> FpScalar {
        FpScalar {
            p: self.p,
            value: self.p.neg(self.value),
        }
    }

    pub fn pow(&self, exp: u64) -> FpScalar {
        FpScalar {
            p: self.p,
            value: self.p.pow(self.value, exp),
        }
    }

    pub fn inv(&self) -> Result<FpScalar> {
        fp_inv(*self)
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Multiplicative inverse in F_p.
pub fn fp_inv(a: FpScalar) -> Result<FpScalar> {
    Ok(FpScalar {
        p: a.p,
        value: a.p.inv(a.value)?,
    })
}

/// `C(n, r) mod p` by Lucas' theorem: the product of the binomials of the
/// base-p digits. Returns zero when `r > n`.
pub fn binom_mod_p(n: u64, r: u64, p: Prime) -> FpScalar {
    let base = p.get();
    let (mut n, mut r) = (n, r);
    let mut acc = 1 % base;
    while r > 0 || n > 0 {
        let (nd, rd) = (n % base, r % base);
        if rd > nd {
            return FpScalar::zero(p);
        }
        acc = p.mul(acc, small_binom(nd, rd, p));
        if acc == 0 {
            break;
        }
        n /= base;
        r /= base;
    }
    FpScalar { p, value: acc }
}

// C(n, r) mod p for n < p, where every factor below p is invertible.
fn small_binom(n: u64, r: u64, p: Prime) -> u64 {
    let r = r.min(n - r);
    let mut num = 1;
    let mut den = 1;
    for i in 0..r {
        num = p.mul(num, n - i);
        den = p.mul(den, i + 1);
    }
    p.mul(num, p.inv(den).expect("factorials below p are units"))
}
