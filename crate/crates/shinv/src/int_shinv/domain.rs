//! Integer instantiation of the shift-domain contract.
//!
//! Carries make the integer case the delicate one: precision doubling falls
//! one digit short per step, two guard digits ride below the correct prefix,
//! and the final value needs an off-by-one repair. The close-product trick
//! lives here too: when `v*w` is known to be within `B^e` of `B^h`, only the
//! low `e+1` digits of the product are computed and the digit at position `e`
//! (0 or `B-1`) decides the sign.

use super::signed::SignedNatural;
use crate::bigdigits::{MultBackend, Natural};
use crate::generic_core::{RefineStats, ShiftDomain};
use std::cell::Cell;
use std::cmp::Ordering;

/// Guard digits carried by short iterates (Refine2/Refine3).
pub const GUARD_DIGITS: i64 = 2;

thread_local! {
    static SHADOW_CHECK: Cell<bool> = const { Cell::new(false) };
}

/// When enabled on the current thread, every close-product difference is
/// recomputed with a full multiplication and compared. Validation only; it
/// costs a full product per call.
pub fn set_shadow_check(on: bool) {
    SHADOW_CHECK.with(|c| c.set(on));
}

fn shadow_check_enabled() -> bool {
    SHADOW_CHECK.with(|c| c.get())
}

/// Integer domain descriptor: base-`B` naturals with a pluggable
/// multiplication backend.
#[derive(Clone, Copy, Debug)]
pub struct IntShiftDomain {
    pub backend: MultBackend,
}

impl IntShiftDomain {
    pub fn new(backend: MultBackend) -> Self {
        IntShiftDomain { backend }
    }
}

/// `B^h - v*w` by full multiplication and comparison against the power.
fn full_pow_diff(
    v: &Natural,
    w: &Natural,
    h: i64,
    backend: MultBackend,
    stats: &mut RefineStats,
) -> SignedNatural {
    let p = v.mul(w, backend);
    stats.mults += 1;
    let ph = Natural::pow_of_base(v.base(), h as usize);
    match p.cmp(&ph) {
        Ordering::Less => SignedNatural::positive(ph.sub(&p)),
        Ordering::Equal => SignedNatural::zero(v.base()),
        Ordering::Greater => SignedNatural::negative(p.sub(&ph)),
    }
}

/// `B^h - v*w` given the a-priori bound `|B^h - v*w| <= B^e`.
///
/// Computes the low `e+1` digits of `v*w`; the sentinel digit at position `e`
/// must be 0 (difference negative) or `B-1` (positive). Any other sentinel
/// means the closeness bound was violated and the full product is used
/// instead, which is never wrong, only slower. Likewise `e+1 >= h` offers no
/// savings and goes straight to the full product.
pub(super) fn pow_diff_bounded(
    v: &Natural,
    w: &Natural,
    h: i64,
    e: i64,
    backend: MultBackend,
    stats: &mut RefineStats,
) -> SignedNatural {
    let base = v.base();
    debug_assert!(h >= 0);
    let diff = if v.is_zero() || w.is_zero() {
        SignedNatural::positive(Natural::pow_of_base(base, h as usize))
    } else if e < 0 || e + 1 >= h {
        full_pow_diff(v, w, h, backend, stats)
    } else {
        let e = e as usize;
        let p = v.mul_mod(w, e + 1, backend);
        stats.mults += 1;
        let sentinel = p.digit(e);
        if p.is_zero() {
            SignedNatural::zero(base)
        } else if sentinel == 0 {
            SignedNatural::negative(p)
        } else if sentinel == base - 1 {
            SignedNatural::positive(Natural::pow_of_base(base, e + 1).sub(&p))
        } else {
            full_pow_diff(v, w, h, backend, stats)
        }
    };
    if shadow_check_enabled() {
        let mut scratch = RefineStats::default();
        assert_eq!(
            diff,
            full_pow_diff(v, w, h, backend, &mut scratch),
            "close-product difference disagrees with the full product"
        );
    }
    diff
}

/// `B^h - v*w` with the closeness exponent derived from the precision data:
/// `e = k + t - ell + g` for `k+1 = prec(v)`, `t+1 = prec(w)`.
pub(super) fn pow_diff_default(
    v: &Natural,
    w: &Natural,
    h: i64,
    ell: i64,
    g: i64,
    backend: MultBackend,
    stats: &mut RefineStats,
) -> SignedNatural {
    let k = v.prec() as i64 - 1;
    let t = w.prec() as i64 - 1;
    pow_diff_bounded(v, w, h, k + t - ell + g, backend, stats)
}

/// Walk `w` by single units until `B^h - v*w` lands in `[0, v)`.
pub(super) fn final_correction_impl(
    v: &Natural,
    h: i64,
    mut w: Natural,
    backend: MultBackend,
    stats: &mut RefineStats,
) -> Natural {
    let base = v.base();
    let k = v.prec() as i64 - 1;
    let one = Natural::one(base);
    // The caller guarantees w is within a few units of floor(B^h/v), so the
    // residue is at most a couple of multiples of v and k+3 digits bound it.
    let mut r = pow_diff_bounded(v, &w, h, k + 3, backend, stats);
    loop {
        if r.is_negative() {
            w = w.sub(&one);
            r = r.add_nat(v);
        } else if r.cmp_nat(v) != Ordering::Less {
            w = w.add(&one);
            r = r.sub_nat(v);
        } else {
            return w;
        }
    }
}

/// `floor(base^n / v)` in machine arithmetic; `base^n` may be exactly 2^128.
fn floor_base_pow_div(base: u64, n: u32, v: u128) -> u128 {
    debug_assert!(v >= 1);
    match (base as u128).checked_pow(n) {
        Some(p) => p / v,
        None => {
            // base^n = 2^128: divide u128::MAX + 1.
            let q = u128::MAX / v;
            let r = u128::MAX % v;
            if r + 1 == v {
                q + 1
            } else {
                q
            }
        }
    }
}

impl ShiftDomain for IntShiftDomain {
    type Elem = Natural;

    fn shift(&self, a: &Natural, n: i64) -> Natural {
        a.shift(n)
    }

    fn prec(&self, a: &Natural) -> i64 {
        a.prec() as i64
    }

    fn shortfall(&self) -> i64 {
        1
    }

    fn guards(&self) -> i64 {
        GUARD_DIGITS
    }

    fn place_bias(&self) -> i64 {
        0
    }

    fn step(
        &self,
        e: i64,
        v: &Natural,
        y: &Natural,
        m: i64,
        ell: i64,
        stats: &mut RefineStats,
    ) -> Natural {
        let ym = y.shift(m);
        let diff = pow_diff_default(v, &ym, e, ell, GUARD_DIGITS, self.backend, stats);
        if diff.is_zero() {
            return ym;
        }
        // Only y is shifted: y*diff*B^m = shift_m(y)*diff, so the product can
        // be taken on the unshifted iterate and floored afterwards.
        let t = y.mul(diff.magnitude(), self.backend);
        stats.mults += 1;
        if !diff.is_negative() {
            ym.add(&t.shift(m - e))
        } else {
            // floor of a negative quotient: round the magnitude up.
            let (q, sticky) = t.shift_sticky(m - e);
            let drop = if sticky { q.add(&Natural::one(y.base())) } else { q };
            ym.sub(&drop)
        }
    }

    fn initial_prefix(&self, v: &Natural) -> (Natural, i64, i64) {
        let base = v.base();
        let k = v.prec() as i64 - 1;
        debug_assert!(base >= 16, "initial prefix requires base >= 16");
        debug_assert!(k >= 1, "initial prefix requires v > B");
        let f = k.min(2);
        let prefix = v.shift(-(k - f));
        let top = prefix.to_u128().expect("divisor prefix fits machine words");
        let w0 = floor_base_pow_div(base, (f + 2) as u32, top);
        (Natural::from_u128(base, w0), 2, k + 2)
    }

    fn small_case(&self, v: &Natural, h: i64) -> Option<Natural> {
        let base = v.base();
        debug_assert!(!v.is_zero() && h >= 0);
        let hu = h as usize;
        if v.is_one() {
            return Some(Natural::pow_of_base(base, hu));
        }
        match v.cmp_pow(hu) {
            Ordering::Greater => return Some(Natural::zero(base)),
            Ordering::Equal => return Some(Natural::one(base)),
            Ordering::Less => {}
        }
        if v.add(v).cmp_pow(hu) == Ordering::Greater {
            return Some(Natural::one(base));
        }
        if v.prec() == 1 {
            // Single-digit divisor: short division of B^h.
            return Some(Natural::pow_of_base(base, hu).div_small(v.digit(0)).0);
        }
        if v.prec() == 2 && v.digit(1) == 1 && v.digit(0) == 0 {
            // v = B exactly.
            return Some(Natural::pow_of_base(base, hu - 1));
        }
        None
    }

    fn correct(
        &self,
        v: &Natural,
        h: i64,
        y: Natural,
        stats: &mut RefineStats,
    ) -> Natural {
        final_correction_impl(v, h, y, self.backend, stats)
    }

    fn mul(&self, a: &Natural, b: &Natural) -> Natural {
        a.mul(b, self.backend)
    }

    fn sub(&self, a: &Natural, b: &Natural) -> Natural {
        a.sub(b)
    }

    fn is_zero(&self, a: &Natural) -> bool {
        a.is_zero()
    }
}
