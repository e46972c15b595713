//! The shift-domain abstraction: one refinement loop for every ring with a
//! whole-shift operation.
//!
//! A [`ShiftDomain`] describes a ring `D` with a central element `b` such
//! that every element decomposes uniquely into base-`b` places. The whole
//! shifted inverse `shinv_h(v)` is computed by the shared [`generic_refine`]
//! loop, which owns all precision bookkeeping: how many leading places of the
//! current iterate are correct (`ell`), which exponent the iterate lives at,
//! how far the next step may extend it, and which divisor prefix suffices.
//! The domain supplies the arithmetic: the step function, the close-product
//! difference, the initial two correct places, and the final correction.
//!
//! Integers instantiate the loop with carries (`shortfall = 1`, two guard
//! places); polynomials and matrix polynomials instantiate it carry-free
//! (`shortfall = 0`, no guards) where precision doubles exactly.

pub mod matpoly;

use std::fmt::Debug;

/// Refinement strategy, in increasing order of sophistication.
///
/// All three produce identical results; they differ only in how much of each
/// intermediate value they compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefineVariant {
    /// Full-length iterates from the first step.
    Refine1,
    /// Short iterates that roughly double in length each step.
    Refine2,
    /// Short iterates and truncated divisor prefixes.
    Refine3,
}

impl RefineVariant {
    pub const ALL: [RefineVariant; 3] =
        [RefineVariant::Refine1, RefineVariant::Refine2, RefineVariant::Refine3];
}

/// Counters filled in by [`generic_refine`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RefineStats {
    /// Number of iteration steps taken.
    pub iterations: u32,
    /// Number of backend multiplications (full or low-digit) performed.
    pub mults: u32,
    /// Correct-place counts after each step, recorded when enabled.
    pub ell_trace: Option<Vec<i64>>,
}

impl RefineStats {
    /// Stats that also record the per-step correct-place counts.
    pub fn traced() -> Self {
        RefineStats { ell_trace: Some(Vec::new()), ..Default::default() }
    }

    pub(crate) fn record_ell(&mut self, ell: i64) {
        if let Some(t) = self.ell_trace.as_mut() {
            t.push(ell);
        }
    }
}

/// Iteration state threaded through refinement: the current iterate, how many
/// of its leading places are correct, and the shift exponent it approximates
/// the inverse at.
#[derive(Clone, Debug)]
pub struct RefineState<E> {
    pub y: E,
    pub ell: i64,
    pub exp: i64,
}

/// A ring with whole shift with respect to a central element, described by
/// the operations the refinement loop needs.
pub trait ShiftDomain {
    type Elem: Clone + PartialEq + Debug;

    /// Whole shift by `n` places: multiply by `b^n`, flooring toward minus
    /// infinity for `n < 0`.
    fn shift(&self, a: &Self::Elem, n: i64) -> Self::Elem;

    /// Number of base-`b` places of `a` (0 for zero).
    fn prec(&self, a: &Self::Elem) -> i64;

    /// Places lost per doubling step: 1 with carries, 0 without.
    fn shortfall(&self) -> i64;

    /// Guard places carried below the provably-correct prefix: 2 with
    /// carries, 0 without.
    fn guards(&self) -> i64;

    /// Places of `shinv_e(v)` minus `e - k` where `k = prec(v) - 1`:
    /// 0 with carries, 1 without.
    fn place_bias(&self) -> i64;

    /// One iteration step: `S(e, v, shift_m(y))`, evaluated so that only `y`
    /// is shifted and the close-product difference is computed cheaply.
    /// `ell` is the number of correct leading places of `y`.
    fn step(
        &self,
        e: i64,
        v: &Self::Elem,
        y: &Self::Elem,
        m: i64,
        ell: i64,
        stats: &mut RefineStats,
    ) -> Self::Elem;

    /// Initial iterate: a short prefix with two correct places, returned as
    /// `(y0, ell0, e0)` where `y0` approximates `shinv_{e0}(v)`.
    fn initial_prefix(&self, v: &Self::Elem) -> (Self::Elem, i64, i64);

    /// Exact answers that bypass iteration (tiny or degenerate divisors);
    /// `None` means the iteration must run.
    fn small_case(&self, v: &Self::Elem, h: i64) -> Option<Self::Elem>;

    /// Settle the final value exactly (off-by-one repair for carries; the
    /// identity for carry-free domains).
    fn correct(&self, v: &Self::Elem, h: i64, y: Self::Elem, stats: &mut RefineStats)
        -> Self::Elem;

    /// Ring product `a * b`, in that order (domains may be noncommutative).
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Ring difference `a - b`.
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// Shared refinement loop computing `shinv_h(v)` exactly from an initial
/// short prefix.
///
/// With carries, the result is protected by headroom places: the iteration
/// targets `h` plus one place (`Refine1`) or the guard count (`Refine2/3`),
/// shifts down at the end, and lets the domain's `correct` settle the final
/// unit. Carry-free domains iterate to `h` directly and need no correction.
pub fn generic_refine<D: ShiftDomain>(
    dom: &D,
    variant: RefineVariant,
    v: &D::Elem,
    h: i64,
    state: RefineState<D::Elem>,
    stats: &mut RefineStats,
) -> D::Elem {
    let d = dom.shortfall();
    let g = dom.guards();
    let c = dom.place_bias();
    let k = dom.prec(v) - 1;
    debug_assert!(k >= 0, "zero divisor reached the refinement loop");

    let headroom = if d == 0 {
        0
    } else if variant == RefineVariant::Refine1 {
        1
    } else {
        g
    };
    let h2 = h + headroom;
    let target = h2 - k + c;

    let RefineState { mut y, mut ell, exp } = state;
    let mut e = exp;
    if e > h2 {
        // The initial prefix already covers the whole result.
        y = dom.shift(&y, h2 - e);
        e = h2;
        ell = target;
    }
    ell = ell.min(target);

    while ell < target {
        let ell_next = (2 * ell - d).min(target);
        let e_next = if variant == RefineVariant::Refine1 {
            h2
        } else {
            h2.min(k + ell_next + g - c)
        };
        let s = if variant == RefineVariant::Refine3 {
            (k - (2 * ell + g) + 1).max(0)
        } else {
            0
        };
        let m = e_next - e;
        debug_assert!(m >= 0 && e_next - s > 0);

        let prev = (variant == RefineVariant::Refine1).then(|| dom.shift(&y, m));
        y = if s > 0 {
            let v_prefix = dom.shift(v, -s);
            dom.step(e_next - s, &v_prefix, &y, m, ell, stats)
        } else {
            dom.step(e_next, v, &y, m, ell, stats)
        };
        stats.iterations += 1;
        ell = ell_next.min(e_next - k + c);
        e = e_next;
        stats.record_ell(ell);

        // Full-length iterates stall once they hit a fixed point.
        if prev.is_some_and(|p| p == y) {
            break;
        }
    }
    debug_assert!(e == h2);

    if headroom > 0 {
        y = dom.shift(&y, -headroom);
    }
    dom.correct(v, h, y, stats)
}

/// Left quotient: `(q_L, r_L)` with `u = v*q_L + r_L` in a carry-free shift
/// domain, via `q_L = shift_{-h}(shinv_h(v) * u)`.
pub fn quo_left<D: ShiftDomain>(dom: &D, u: &D::Elem, v: &D::Elem) -> (D::Elem, D::Elem) {
    let (w, h) = whole_inverse_for_quo(dom, u, v);
    let q = dom.shift(&dom.mul(&w, u), -h);
    let r = dom.sub(u, &dom.mul(v, &q));
    (q, r)
}

/// Right quotient: `(q_R, r_R)` with `u = q_R*v + r_R` in a carry-free shift
/// domain, via `q_R = shift_{-h}(u * shinv_h(v))`.
pub fn quo_right<D: ShiftDomain>(dom: &D, u: &D::Elem, v: &D::Elem) -> (D::Elem, D::Elem) {
    let (w, h) = whole_inverse_for_quo(dom, u, v);
    let q = dom.shift(&dom.mul(u, &w), -h);
    let r = dom.sub(u, &dom.mul(&q, v));
    (q, r)
}

fn whole_inverse_for_quo<D: ShiftDomain>(dom: &D, u: &D::Elem, v: &D::Elem) -> (D::Elem, i64) {
    assert!(!dom.is_zero(v), "division by zero");
    assert!(dom.shortfall() == 0, "generic quotients require a carry-free domain");
    let h = (dom.prec(u) - 1).max(0);
    let mut stats = RefineStats::default();
    if let Some(w) = dom.small_case(v, h) {
        return (w, h);
    }
    let (y0, ell0, e0) = dom.initial_prefix(v);
    let state = RefineState { y: y0, ell: ell0, exp: e0 };
    (generic_refine(dom, RefineVariant::Refine3, v, h, state, &mut stats), h)
}
