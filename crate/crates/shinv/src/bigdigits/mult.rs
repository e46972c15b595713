//! Multiplication backends: schoolbook and Karatsuba.
//!
//! Both operate on raw little-endian digit slices and must agree bit-exactly;
//! the backend only trades time. `mul_mod` computes the low `e` digits of a
//! product at a cost proportional to multiplying `e`-digit prefixes.

use super::{add_vec, sub_vec, trim};

/// Default digit count below which Karatsuba falls back to schoolbook.
pub const DEFAULT_KARATSUBA_THRESHOLD: usize = 32;

/// Pluggable multiplication strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultBackend {
    Schoolbook,
    Karatsuba { threshold: usize },
}

impl MultBackend {
    /// Karatsuba with the default threshold.
    pub fn karatsuba() -> Self {
        MultBackend::Karatsuba { threshold: DEFAULT_KARATSUBA_THRESHOLD }
    }
}

impl Default for MultBackend {
    fn default() -> Self {
        MultBackend::karatsuba()
    }
}

pub(crate) fn mul(base: u64, a: &[u64], b: &[u64], backend: MultBackend) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = match backend {
        MultBackend::Schoolbook => schoolbook(base, a, b),
        MultBackend::Karatsuba { threshold } => karatsuba(base, a, b, threshold.max(2)),
    };
    trim(&mut out);
    out
}

pub(crate) fn mul_mod(base: u64, a: &[u64], b: &[u64], e: usize, backend: MultBackend) -> Vec<u64> {
    if e == 0 || a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let a = &a[..a.len().min(e)];
    let b = &b[..b.len().min(e)];
    let mut out = match backend {
        MultBackend::Schoolbook => schoolbook_low(base, a, b, e),
        MultBackend::Karatsuba { threshold } => {
            let mut full = karatsuba(base, a, b, threshold.max(2));
            full.truncate(e);
            full
        }
    };
    trim(&mut out);
    out
}

/// Classical quadratic product.
fn schoolbook(base: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let base = base as u128;
    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let ai = ai as u128;
        let mut carry: u128 = 0;
        for (j, &bj) in b.iter().enumerate() {
            let acc = ai * bj as u128 + out[i + j] as u128 + carry;
            out[i + j] = (acc % base) as u64;
            carry = acc / base;
        }
        let mut k = i + b.len();
        while carry > 0 {
            let acc = out[k] as u128 + carry;
            out[k] = (acc % base) as u64;
            carry = acc / base;
            k += 1;
        }
    }
    out
}

/// Schoolbook restricted to output columns below `e`.
fn schoolbook_low(base: u64, a: &[u64], b: &[u64], e: usize) -> Vec<u64> {
    let base = base as u128;
    let mut out = vec![0u64; e];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 || i >= e {
            continue;
        }
        let ai = ai as u128;
        let mut carry: u128 = 0;
        for (j, &bj) in b.iter().enumerate() {
            if i + j >= e {
                break;
            }
            let acc = ai * bj as u128 + out[i + j] as u128 + carry;
            out[i + j] = (acc % base) as u64;
            carry = acc / base;
        }
        let mut k = i + b.len();
        while carry > 0 && k < e {
            let acc = out[k] as u128 + carry;
            out[k] = (acc % base) as u64;
            carry = acc / base;
            k += 1;
        }
    }
    out
}

/// Karatsuba three-product recursion; falls back to schoolbook below the
/// threshold. Splitting is at half the longer operand, so unbalanced inputs
/// degrade gracefully.
fn karatsuba(base: u64, a: &[u64], b: &[u64], threshold: usize) -> Vec<u64> {
    if a.len().min(b.len()) <= threshold {
        return schoolbook(base, a, b);
    }
    let m = a.len().max(b.len()).div_ceil(2);
    let (a0, a1) = split(a, m);
    let (b0, b1) = split(b, m);

    let z0 = karatsuba(base, a0, b0, threshold);
    let z2 = if a1.is_empty() || b1.is_empty() {
        Vec::new()
    } else {
        karatsuba(base, a1, b1, threshold)
    };
    let sa = add_vec(base, a0, a1);
    let sb = add_vec(base, b0, b1);
    let mid = karatsuba(base, &sa, &sb, threshold);
    let mid = sub_vec(base, &sub_vec(base, &mid, &z0), &z2);

    // out = z0 + mid*B^m + z2*B^(2m)
    let mut out = vec![0u64; a.len() + b.len() + 1];
    accumulate(base, &mut out, &z0, 0);
    accumulate(base, &mut out, &mid, m);
    accumulate(base, &mut out, &z2, 2 * m);
    out
}

fn split(a: &[u64], m: usize) -> (&[u64], &[u64]) {
    if a.len() <= m {
        (a, &[])
    } else {
        (&a[..m], &a[m..])
    }
}

/// Add `src * B^offset` into `dst` (which must be long enough).
fn accumulate(base: u64, dst: &mut [u64], src: &[u64], offset: usize) {
    let mut carry = 0u64;
    let mut k = offset;
    for &d in src {
        let mut s = dst[k] + d + carry;
        carry = 0;
        while s >= base {
            s -= base;
            carry += 1;
        }
        dst[k] = s;
        k += 1;
    }
    while carry > 0 {
        let mut s = dst[k] + carry;
        carry = 0;
        while s >= base {
            s -= base;
            carry += 1;
        }
        dst[k] = s;
        k += 1;
    }
}
