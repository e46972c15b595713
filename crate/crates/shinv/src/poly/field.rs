//! Field contract and word-sized prime fields.

use crate::error::ParseError;

/// Abstract field operations over a context object, so moduli can be runtime
/// values. Polynomial code is generic over this contract; prime fields are
/// the provided instance.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add_ref(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub_ref(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul_ref(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv_ref(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn neg_ref(&self, a: &Self::Elem) -> Self::Elem {
        self.sub_ref(&self.zero(), a)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// `F_p` for prime `p < 2^61`, elements canonical in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Exclusive upper bound on the modulus.
    pub const MODULUS_LIMIT: u64 = 1 << 61;

    /// Panics unless `p` is a prime below `2^61`.
    pub fn new(p: u64) -> PrimeField {
        Self::try_new(p).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_new(p: u64) -> Result<PrimeField, ParseError> {
        if p >= Self::MODULUS_LIMIT {
            return Err(ParseError::OutOfRange(format!("modulus {p} exceeds 2^61")));
        }
        if !is_prime_u64(p) {
            return Err(ParseError::ModulusNotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    /// Inverse by extended Euclid; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert!(r0 == 1, "modulus is prime, gcd must be 1");
        Some(t0.rem_euclid(self.p as i128) as u64)
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn add_ref(&self, a: &u64, b: &u64) -> u64 {
        self.add(*a, *b)
    }

    fn sub_ref(&self, a: &u64, b: &u64) -> u64 {
        self.sub(*a, *b)
    }

    fn mul_ref(&self, a: &u64, b: &u64) -> u64 {
        self.mul(*a, *b)
    }

    fn inv_ref(&self, a: &u64) -> Option<u64> {
        self.inv(*a)
    }
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
