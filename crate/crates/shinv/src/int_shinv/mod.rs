//! Whole shifted inverse and exact division for base-`B` integers.
//!
//! `shinv(v, h)` computes `floor(B^h / v)` without ever leaving the natural
//! numbers: a modified Newton iteration doubles the number of correct digits
//! per step using only multiplications and digit shifts, and quotients follow
//! from one more multiplication:
//!
//! ```text
//! u quo v = shift_{-h}(u * shinv_h(v)) + delta,   delta in {0, 1}
//! ```
//!
//! Divisors at most one digit long, divisors exceeding `B^h`, and bases below
//! 16 (regrouped into a power of the base) are handled before the iteration.

mod domain;
mod signed;

pub use domain::{set_shadow_check, IntShiftDomain, GUARD_DIGITS};
pub use signed::SignedNatural;

use crate::bigdigits::{MultBackend, Natural};
use crate::error::Error;
use crate::generic_core::{generic_refine, RefineState, RefineStats, ShiftDomain};
pub use crate::generic_core::RefineVariant;
use std::cmp::Ordering;

/// Counters and the starting point of a shifted-inverse computation.
#[derive(Clone, Debug, Default)]
pub struct ShinvStats {
    pub refine: RefineStats,
    /// Initial short prefix and the shift taking it to the full length
    /// `h - k - 2`; `None` when a special case answered without iterating.
    pub initial: Option<(Natural, i64)>,
}

impl ShinvStats {
    pub fn iterations(&self) -> u32 {
        self.refine.iterations
    }

    pub fn mults(&self) -> u32 {
        self.refine.mults
    }

    /// The full-length initial value, when the iteration ran.
    pub fn initial_full(&self) -> Option<Natural> {
        self.initial.as_ref().map(|(w0, n)| w0.shift(*n))
    }
}

/// Statistics of a division, including the pre-correction defect `delta`.
#[derive(Clone, Debug, Default)]
pub struct DivStats {
    pub shinv: ShinvStats,
    /// Defect of `shift_{-h}(u * shinv_h(v))` against the true quotient.
    pub delta: u8,
}

/// Iteration state for the refinement entry points: the current full-length
/// iterate `w`, its correct leading digit count, the target exponent, the
/// divisor precision `k = prec(v) - 1`, and the guard digit count.
#[derive(Clone, Debug)]
pub struct ShinvState {
    pub w: Natural,
    pub ell: i64,
    pub h: i64,
    pub k: i64,
    pub g: i64,
}

impl ShinvState {
    /// State seeded by [`initial_value`].
    pub fn new(v: &Natural, h: i64) -> ShinvState {
        let (w0, ell0) = initial_value(v, h);
        ShinvState { w: w0, ell: ell0, h, k: v.prec() as i64 - 1, g: GUARD_DIGITS }
    }
}

/// Fast-converging initial value `floor(B^{f+2}/V) * B^{h-k-2}` built from the
/// leading `f+1` digits `V` of the divisor, with `f = min(k, 2)`.
///
/// For `h >= k+2` the result lies within a quarter of `B^h/v` on either
/// side, so two leading digits are correct. (For `h = k+1` the trailing
/// factor is fractional and floors; the refinement loop compensates with its
/// headroom digits.) Panics unless `B >= 16`, `v >= B`, and `2v <= B^h`;
/// callers regroup digits or take a special case first.
pub fn initial_value(v: &Natural, h: i64) -> (Natural, i64) {
    let base = v.base();
    assert!(base >= 16, "initial value requires base >= 16");
    assert!(v.prec() >= 2, "initial value requires v >= B");
    assert!(
        v.add(v).cmp_pow(h.max(0) as usize) != Ordering::Greater,
        "initial value requires 2v <= B^h"
    );
    let dom = IntShiftDomain::new(MultBackend::default());
    let (y0, ell0, e0) = dom.initial_prefix(v);
    (y0.shift(h - e0), ell0)
}

/// Naive refinement: full-length iterates from the first step.
pub fn refine1(state: &ShinvState, v: &Natural, backend: MultBackend) -> Natural {
    refine_with(RefineVariant::Refine1, state, v, backend)
}

/// Short-iterate refinement: each iterate carries only its correct digits
/// plus two guards, nearly doubling in length per step.
pub fn refine2(state: &ShinvState, v: &Natural, backend: MultBackend) -> Natural {
    refine_with(RefineVariant::Refine2, state, v, backend)
}

/// Short iterates plus truncated divisor prefixes; the variant to use.
pub fn refine3(state: &ShinvState, v: &Natural, backend: MultBackend) -> Natural {
    refine_with(RefineVariant::Refine3, state, v, backend)
}

fn refine_with(
    variant: RefineVariant,
    state: &ShinvState,
    v: &Natural,
    backend: MultBackend,
) -> Natural {
    let dom = IntShiftDomain::new(backend);
    let (y0, ell0, e0) = dom.initial_prefix(v);
    debug_assert!(
        state.h - e0 < 0 || y0.shift(state.h - e0) == state.w,
        "state does not match the divisor's initial value"
    );
    let mut stats = RefineStats::default();
    let st = RefineState { y: y0, ell: ell0.min(state.ell), exp: e0 };
    generic_refine(&dom, variant, v, state.h, st, &mut stats)
}

/// `floor(B^h / v)`, exactly.
pub fn shinv(
    v: &Natural,
    h: i64,
    variant: RefineVariant,
    backend: MultBackend,
) -> Result<Natural, Error> {
    shinv_with_stats(v, h, variant, backend).map(|(w, _)| w)
}

/// `floor(B^h / v)` along with iteration statistics.
pub fn shinv_with_stats(
    v: &Natural,
    h: i64,
    variant: RefineVariant,
    backend: MultBackend,
) -> Result<(Natural, ShinvStats), Error> {
    if v.is_zero() {
        return Err(Error::DivisionByZero);
    }
    assert!(h >= 0, "shinv requires a nonnegative shift exponent");
    let mut stats = ShinvStats::default();
    let w = shinv_impl(v, h, variant, backend, &mut stats);
    Ok((w, stats))
}

fn shinv_impl(
    v: &Natural,
    h: i64,
    variant: RefineVariant,
    backend: MultBackend,
    stats: &mut ShinvStats,
) -> Natural {
    let base = v.base();
    let dom = IntShiftDomain::new(backend);
    if let Some(w) = dom.small_case(v, h) {
        return w;
    }
    if base < 16 {
        // Regroup digits into base B^p >= 16 so the initial-value bound
        // applies, compute there, and expand back.
        let mut p: i64 = 1;
        let mut b = base;
        while b < 16 {
            p += 1;
            b *= base;
        }
        let vg = v.regroup(p as usize);
        let (q, rho) = (h.div_euclid(p), h.rem_euclid(p));
        let wg = if rho == 0 {
            shinv_impl(&vg, q, variant, backend, stats)
        } else {
            shinv_impl(&vg, q + 1, variant, backend, stats)
        };
        let w = wg.ungroup(base, p as usize);
        return if rho == 0 { w } else { w.shift(rho - p) };
    }
    let (y0, ell0, e0) = dom.initial_prefix(v);
    stats.initial = Some((y0.clone(), h - e0));
    let state = RefineState { y: y0, ell: ell0, exp: e0 };
    generic_refine(&dom, variant, v, h, state, &mut stats.refine)
}

/// Quotient and remainder: `u = q*v + r` with `0 <= r < v`.
pub fn divmod(
    u: &Natural,
    v: &Natural,
    variant: RefineVariant,
    backend: MultBackend,
) -> Result<(Natural, Natural), Error> {
    divmod_with_stats(u, v, variant, backend).map(|(q, r, _)| (q, r))
}

/// Quotient and remainder along with division statistics.
pub fn divmod_with_stats(
    u: &Natural,
    v: &Natural,
    variant: RefineVariant,
    backend: MultBackend,
) -> Result<(Natural, Natural, DivStats), Error> {
    if v.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let base = u.base();
    let mut ds = DivStats::default();
    if u.is_zero() {
        return Ok((Natural::zero(base), Natural::zero(base), ds));
    }
    if v.is_one() {
        return Ok((u.clone(), Natural::zero(base), ds));
    }
    // Smallest h with u <= B^h.
    let h = u.prec() as i64 - i64::from(u.is_power_of_base());
    let (w, stats) = shinv_with_stats(v, h, variant, backend)?;
    ds.shinv = stats;
    let q_hat = u.mul(&w, backend).shift(-h);
    let r_hat = u.sub(&q_hat.mul(v, backend));
    if r_hat.cmp(v) == Ordering::Less {
        Ok((q_hat, r_hat, ds))
    } else {
        ds.delta = 1;
        let q = q_hat.add(&Natural::one(base));
        let r = r_hat.sub(v);
        debug_assert!(r.cmp(v) == Ordering::Less, "quotient defect exceeded 1");
        Ok((q, r, ds))
    }
}

/// One iteration step `S(h, v, shift_m(w))` where `S(h, v, w) =
/// w + floor(w*(B^h - v*w)/B^h)`; `ell` is the correct leading digit count
/// of `w`, used to size the close-product window.
pub fn step(
    h: i64,
    v: &Natural,
    w: &Natural,
    m: i64,
    ell: i64,
    backend: MultBackend,
) -> Natural {
    let dom = IntShiftDomain::new(backend);
    let mut stats = RefineStats::default();
    dom.step(h, v, w, m, ell, &mut stats)
}

/// Close-product difference `B^h - v*w` (see [`IntShiftDomain`] docs), given
/// that `w` has `ell` correct leading digits and `g` guard digits.
pub fn pow_diff(
    v: &Natural,
    w: &Natural,
    h: i64,
    ell: i64,
    g: i64,
    backend: MultBackend,
) -> SignedNatural {
    let mut stats = RefineStats::default();
    domain::pow_diff_default(v, w, h, ell, g, backend, &mut stats)
}

/// Adjust `w` by single units until `B^h - v*w` lands in `[0, v)`, i.e.
/// until `w = floor(B^h / v)`. The input must already be within a few units.
pub fn final_correction(w: Natural, v: &Natural, h: i64) -> Natural {
    let mut stats = RefineStats::default();
    domain::final_correction_impl(v, h, w, MultBackend::default(), &mut stats)
}
