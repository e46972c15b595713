//! Polynomial instantiation of the shift-domain contract.
//!
//! Carry-free: shortfall and guard counts are zero, the close-product window
//! needs no sentinel digit (coefficients above the known degree bound cancel
//! identically), and no final correction exists.

use super::{DensePoly, Field};
use crate::generic_core::{RefineStats, ShiftDomain};

#[derive(Clone, Debug)]
pub struct PolyShiftDomain<F: Field> {
    pub field: F,
}

impl<F: Field> PolyShiftDomain<F> {
    pub fn new(field: F) -> Self {
        PolyShiftDomain { field }
    }
}

impl<F: Field> ShiftDomain for PolyShiftDomain<F> {
    type Elem = DensePoly<F>;

    fn shift(&self, a: &DensePoly<F>, n: i64) -> DensePoly<F> {
        a.shift(n)
    }

    fn prec(&self, a: &DensePoly<F>) -> i64 {
        a.prec() as i64
    }

    fn shortfall(&self) -> i64 {
        0
    }

    fn guards(&self) -> i64 {
        0
    }

    fn place_bias(&self) -> i64 {
        1
    }

    fn step(
        &self,
        e: i64,
        v: &DensePoly<F>,
        y: &DensePoly<F>,
        m: i64,
        ell: i64,
        stats: &mut RefineStats,
    ) -> DensePoly<F> {
        let ym = y.shift(m);
        // With ell correct leading coefficients, deg(x^e - v*ym) <= e - ell,
        // so only that coefficient window of the product is computed. The
        // x^e term lies above the window and cancels by construction.
        let k = v.deg().expect("nonzero divisor") as i64;
        let t = ym.deg().expect("nonzero iterate") as i64;
        let window = k + t - ell + 1;
        let diff = if window >= e {
            super::ppow_diff(v, &ym, e)
        } else {
            v.mul_low(&ym, window.max(0) as usize).neg()
        };
        stats.mults += 1;
        if diff.is_zero() {
            return ym;
        }
        let prod = y.mul(&diff);
        stats.mults += 1;
        ym.add(&prod.shift(m - e))
    }

    fn initial_prefix(&self, v: &DensePoly<F>) -> (DensePoly<F>, i64, i64) {
        let f = &self.field;
        let k = v.deg().expect("nonzero divisor");
        debug_assert!(k >= 1, "constant divisors are a small case");
        let lead_inv = f.inv_ref(v.lc().unwrap()).expect("invertible leading coefficient");
        // Two quotient terms of x^{k+1} quo v.
        let c1 = lead_inv.clone();
        let c0 = f.neg_ref(&f.mul_ref(&f.mul_ref(&lead_inv, &v.coeff(k - 1)), &lead_inv));
        (DensePoly::from_coeffs(f.clone(), vec![c0, c1]), 2, k as i64 + 1)
    }

    fn small_case(&self, v: &DensePoly<F>, h: i64) -> Option<DensePoly<F>> {
        let k = v.deg().expect("nonzero divisor") as i64;
        if h < k {
            return Some(DensePoly::zero(self.field.clone()));
        }
        if k == 0 {
            let inv = self.field.inv_ref(v.lc().unwrap()).expect("invertible constant");
            return Some(DensePoly::constant(self.field.clone(), inv).shift(h));
        }
        None
    }

    fn correct(
        &self,
        _v: &DensePoly<F>,
        _h: i64,
        y: DensePoly<F>,
        _stats: &mut RefineStats,
    ) -> DensePoly<F> {
        y
    }

    fn mul(&self, a: &DensePoly<F>, b: &DensePoly<F>) -> DensePoly<F> {
        a.mul(b)
    }

    fn sub(&self, a: &DensePoly<F>, b: &DensePoly<F>) -> DensePoly<F> {
        a.sub(b)
    }

    fn is_zero(&self, a: &DensePoly<F>) -> bool {
        a.is_zero()
    }
}
