//! Base-`B` multiprecision natural numbers.
//!
//! Digits are stored little-endian (`digits[i]` is the coefficient of `B^i`)
//! with no high zero digit; zero is the empty vector. The base is a runtime
//! parameter, `2 <= B <= 2^32`: a word-sized power of two for production use,
//! small bases for tests and worked examples. Every operation is a pure
//! function over immutable values.

mod convert;
mod mult;

pub use mult::MultBackend;

use std::cmp::Ordering;
use std::fmt;

/// Largest supported base, inclusive.
pub const MAX_BASE: u64 = 1 << 32;

/// A base-`B` natural number: little-endian digit vector plus its base.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Natural {
    base: u64,
    digits: Vec<u64>,
}

fn check_base(base: u64) {
    assert!(
        (2..=MAX_BASE).contains(&base),
        "base {base} out of range (need 2 <= B <= 2^32)"
    );
}

/// Drop high zero digits in place.
fn trim(digits: &mut Vec<u64>) {
    while digits.last() == Some(&0) {
        digits.pop();
    }
}

impl Natural {
    pub fn zero(base: u64) -> Self {
        check_base(base);
        Natural { base, digits: Vec::new() }
    }

    pub fn one(base: u64) -> Self {
        Self::from_u64(base, 1)
    }

    pub fn from_u64(base: u64, value: u64) -> Self {
        Self::from_u128(base, value as u128)
    }

    pub fn from_u128(base: u64, mut value: u128) -> Self {
        check_base(base);
        let mut digits = Vec::new();
        while value > 0 {
            digits.push((value % base as u128) as u64);
            value /= base as u128;
        }
        Natural { base, digits }
    }

    /// Build from an explicit little-endian digit vector.
    ///
    /// Panics if any digit is out of range; high zeros are trimmed.
    pub fn from_digits(base: u64, mut digits: Vec<u64>) -> Self {
        check_base(base);
        assert!(
            digits.iter().all(|&d| d < base),
            "digit out of range for base {base}"
        );
        trim(&mut digits);
        Natural { base, digits }
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    /// Digit at position `i`, zero beyond the stored length.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    /// Number of base-`B` digits; zero for the value zero.
    pub fn prec(&self) -> usize {
        self.digits.len()
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.digits == [1]
    }

    /// `B^n` in this base.
    pub fn pow_of_base(base: u64, n: usize) -> Self {
        check_base(base);
        let mut digits = vec![0; n + 1];
        digits[n] = 1;
        Natural { base, digits }
    }

    /// True when the value is exactly `B^n` for some `n >= 0`.
    pub fn is_power_of_base(&self) -> bool {
        match self.digits.split_last() {
            Some((&top, rest)) => top == 1 && rest.iter().all(|&d| d == 0),
            None => false,
        }
    }

    /// Compare against `B^n` without materializing it.
    pub fn cmp_pow(&self, n: usize) -> Ordering {
        match self.prec().cmp(&(n + 1)) {
            Ordering::Equal => {
                if self.digits[n] > 1 || self.digits[..n].iter().any(|&d| d != 0) {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            }
            other => other,
        }
    }

    pub fn to_u128(&self) -> Option<u128> {
        let mut acc: u128 = 0;
        for &d in self.digits.iter().rev() {
            acc = acc.checked_mul(self.base as u128)?.checked_add(d as u128)?;
        }
        Some(acc)
    }

    /// Whole shift: multiply by `B^n`, flooring for negative `n`.
    pub fn shift(&self, n: i64) -> Natural {
        self.shift_sticky(n).0
    }

    /// Whole shift that also reports whether any nonzero digit was dropped.
    pub fn shift_sticky(&self, n: i64) -> (Natural, bool) {
        if self.is_zero() {
            return (self.clone(), false);
        }
        if n >= 0 {
            let n = n as usize;
            let mut digits = vec![0; n + self.digits.len()];
            digits[n..].copy_from_slice(&self.digits);
            (Natural { base: self.base, digits }, false)
        } else {
            let drop = (-n) as usize;
            if drop >= self.digits.len() {
                let sticky = !self.is_zero();
                (Natural::zero(self.base), sticky)
            } else {
                let sticky = self.digits[..drop].iter().any(|&d| d != 0);
                let digits = self.digits[drop..].to_vec();
                (Natural { base: self.base, digits }, sticky)
            }
        }
    }

    fn assert_same_base(&self, other: &Natural) {
        assert_eq!(self.base, other.base, "operands have different bases");
    }

    /// Total order on values of the same base.
    pub fn cmp(&self, other: &Natural) -> Ordering {
        self.assert_same_base(other);
        match self.digits.len().cmp(&other.digits.len()) {
            Ordering::Equal => {
                for (a, b) in self.digits.iter().rev().zip(other.digits.iter().rev()) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            ord => ord,
        }
    }

    pub fn add(&self, other: &Natural) -> Natural {
        self.assert_same_base(other);
        let digits = add_vec(self.base, &self.digits, &other.digits);
        Natural { base: self.base, digits }
    }

    /// Exact subtraction; panics if `self < other`.
    pub fn sub(&self, other: &Natural) -> Natural {
        self.assert_same_base(other);
        let digits = sub_vec(self.base, &self.digits, &other.digits);
        Natural { base: self.base, digits }
    }

    /// Full product using the given multiplication backend.
    pub fn mul(&self, other: &Natural, backend: MultBackend) -> Natural {
        self.assert_same_base(other);
        let digits = mult::mul(self.base, &self.digits, &other.digits, backend);
        Natural { base: self.base, digits }
    }

    /// Low digits of a product: `(self * other) rem B^e`, computed from the
    /// `e`-digit prefixes of the operands.
    pub fn mul_mod(&self, other: &Natural, e: usize, backend: MultBackend) -> Natural {
        self.assert_same_base(other);
        let digits = mult::mul_mod(self.base, &self.digits, &other.digits, e, backend);
        Natural { base: self.base, digits }
    }

    /// Multiply by a machine word (the word need not fit in one digit).
    pub fn mul_small(&self, m: u64) -> Natural {
        if m == 0 || self.is_zero() {
            return Natural::zero(self.base);
        }
        let base = self.base as u128;
        let mut digits = Vec::with_capacity(self.digits.len() + 2);
        let mut carry: u128 = 0;
        for &d in &self.digits {
            let acc = d as u128 * m as u128 + carry;
            digits.push((acc % base) as u64);
            carry = acc / base;
        }
        while carry > 0 {
            digits.push((carry % base) as u64);
            carry /= base;
        }
        trim(&mut digits);
        Natural { base: self.base, digits }
    }

    /// Short division by a machine word: returns `(self quo m, self rem m)`.
    pub fn div_small(&self, m: u64) -> (Natural, u64) {
        assert!(m != 0, "division by zero");
        let base = self.base as u128;
        let mut digits = vec![0u64; self.digits.len()];
        let mut rem: u128 = 0;
        for (i, &d) in self.digits.iter().enumerate().rev() {
            let cur = rem * base + d as u128;
            digits[i] = (cur / m as u128) as u64;
            rem = cur % m as u128;
        }
        trim(&mut digits);
        (Natural { base: self.base, digits }, rem as u64)
    }
}

impl fmt::Debug for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Natural(base {}: {})", self.base, self.to_decimal_string())
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

/// Digit-vector addition with carry; inputs little-endian, any lengths.
pub(crate) fn add_vec(base: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = Vec::with_capacity(long.len() + 1);
    let mut carry = 0u64;
    for i in 0..long.len() {
        let mut s = long[i] + carry;
        if i < short.len() {
            s += short[i];
        }
        if s >= base {
            out.push(s - base);
            carry = 1;
        } else {
            out.push(s);
            carry = 0;
        }
    }
    if carry > 0 {
        out.push(carry);
    }
    out
}

/// Digit-vector subtraction with borrow; panics when `a < b` as values.
/// Operands may carry high zero digits.
pub(crate) fn sub_vec(base: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    let mut borrow = 0u64;
    for i in 0..n {
        let ai = a.get(i).copied().unwrap_or(0);
        let sub = b.get(i).copied().unwrap_or(0) + borrow;
        if ai >= sub {
            out.push(ai - sub);
            borrow = 0;
        } else {
            out.push(ai + base - sub);
            borrow = 1;
        }
    }
    assert!(borrow == 0, "subtraction underflow");
    trim(&mut out);
    out
}
