//! Independent brute-force references used by the test suites.
//!
//! Nothing here touches the shifted-inverse machinery: integer division is
//! textbook digit-by-digit long division with trial digits found by binary
//! search, and the polynomial oracles are synthetic division plus the
//! classical reverse-polynomial Newton method. They are deliberately simple
//! and quadratic; equivalence tests against them are only meaningful because
//! they share no code with the implementations they check.

use crate::bigdigits::{MultBackend, Natural};
use crate::error::Error;
use crate::poly::{DensePoly, Field};
use std::cmp::Ordering;

/// Textbook base-`B` long division: `u = q*v + r`, `0 <= r < v`.
///
/// Each quotient digit is the largest `d` with `d*v` below the running
/// remainder, found by binary search over `[0, B)`. Every call checks the
/// multiply-back identity in debug builds.
pub fn school_divmod(u: &Natural, v: &Natural) -> Result<(Natural, Natural), Error> {
    if v.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let base = u.base();
    let mut rem = Natural::zero(base);
    let mut qdigits = vec![0u64; u.prec()];
    for i in (0..u.prec()).rev() {
        rem = rem.shift(1).add(&Natural::from_u64(base, u.digit(i)));
        if rem.cmp(v) != Ordering::Less {
            let mut lo = 1u64;
            let mut hi = base - 1;
            while lo < hi {
                let mid = lo + (hi - lo).div_ceil(2);
                if v.mul_small(mid).cmp(&rem) == Ordering::Greater {
                    hi = mid - 1;
                } else {
                    lo = mid;
                }
            }
            qdigits[i] = lo;
            rem = rem.sub(&v.mul_small(lo));
        }
    }
    let q = Natural::from_digits(base, qdigits);
    debug_assert!(rem.cmp(v) == Ordering::Less);
    debug_assert_eq!(q.mul(v, MultBackend::Schoolbook).add(&rem), *u, "multiply-back failed");
    Ok((q, rem))
}

/// Synthetic long division for polynomials: `u = q*v + r`, `deg r < deg v`.
pub fn poly_longdiv<F: Field>(
    u: &DensePoly<F>,
    v: &DensePoly<F>,
) -> Result<(DensePoly<F>, DensePoly<F>), Error> {
    if v.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let f = u.field().clone();
    let dv = v.deg().unwrap();
    let lead_inv = f.inv_ref(v.lc().unwrap()).ok_or(Error::NonInvertibleLeadingCoefficient)?;
    let mut rem: Vec<F::Elem> = u.coeffs().to_vec();
    let du = rem.len();
    if du < dv + 1 {
        return Ok((DensePoly::zero(f), u.clone()));
    }
    let mut q = vec![f.zero(); du - dv];
    for i in (0..q.len()).rev() {
        let c = f.mul_ref(&rem[i + dv], &lead_inv);
        if !f.is_zero(&c) {
            for (j, vc) in v.coeffs().iter().enumerate() {
                rem[i + j] = f.sub_ref(&rem[i + j], &f.mul_ref(&c, vc));
            }
        }
        q[i] = c;
    }
    let q = DensePoly::from_coeffs(f.clone(), q);
    let r = DensePoly::from_coeffs(f, rem[..dv].to_vec());
    debug_assert_eq!(q.mul(v).add(&r), *u, "multiply-back failed");
    Ok((q, r))
}

/// Classical fast polynomial division: invert the reversed divisor modulo
/// `x^{h-k+1}` by power-series Newton iteration, multiply by the reversed
/// dividend, and reverse back. A second oracle, independent of both the
/// direct iteration and synthetic division.
pub fn reverse_newton_divmod<F: Field>(
    u: &DensePoly<F>,
    v: &DensePoly<F>,
) -> Result<(DensePoly<F>, DensePoly<F>), Error> {
    if v.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let f = u.field().clone();
    if u.is_zero() || u.deg() < v.deg() {
        return Ok((DensePoly::zero(f), u.clone()));
    }
    let h = u.deg().unwrap();
    let k = v.deg().unwrap();
    let n = h - k + 1;

    let rv = reverse(v, k);
    let inv = series_inverse(&rv, n)?;
    let ru = reverse(u, h);
    let qstar = ru.mul_low(&inv, n);
    let q = reverse(&qstar, h - k);
    let r = u.sub(&q.mul(v));
    debug_assert!(r.is_zero() || r.deg() < v.deg());
    debug_assert_eq!(q.mul(v).add(&r), *u, "multiply-back failed");
    Ok((q, r))
}

/// `rev_n(p) = x^n * p(1/x)`; coefficients beyond `deg p` read as zero.
fn reverse<F: Field>(p: &DensePoly<F>, n: usize) -> DensePoly<F> {
    let f = p.field().clone();
    let coeffs = (0..=n).rev().map(|i| p.coeff(i)).collect();
    DensePoly::from_coeffs(f, coeffs)
}

/// Inverse of `p` modulo `x^n` by Newton iteration `i <- i*(2 - p*i)`,
/// doubling the correct length each round. Requires `p(0) != 0`.
fn series_inverse<F: Field>(p: &DensePoly<F>, n: usize) -> Result<DensePoly<F>, Error> {
    let f = p.field().clone();
    let c0 = p.coeff(0);
    let c0_inv = f.inv_ref(&c0).ok_or(Error::NonInvertibleLeadingCoefficient)?;
    let mut inv = DensePoly::constant(f.clone(), c0_inv);
    let mut len = 1;
    let two = DensePoly::constant(f.clone(), f.add_ref(&f.one(), &f.one()));
    while len < n {
        len = (2 * len).min(n);
        let t = two.sub(&p.mul_low(&inv, len));
        inv = inv.mul_low(&t, len);
    }
    Ok(inv)
}
