//! Dense univariate polynomials over a field, with whole shift, whole
//! shifted inverse, and quotient/remainder.
//!
//! The polynomial story mirrors the integer one but is simpler: coefficient
//! arithmetic has no carries, so precision doubles exactly each iteration,
//! no guard places are needed, and the quotient theorem has no off-by-one
//! correction:
//!
//! ```text
//! u quo v = shift_{-h}(u * pshinv_h(v)),   h = deg u.
//! ```

mod domain;
mod parse;
pub mod field;

pub use domain::PolyShiftDomain;
pub use field::{Field, PrimeField};
pub use parse::{format_coeff_list, format_poly, parse_coeff_list, parse_field, parse_poly};

use crate::error::Error;
use crate::generic_core::{generic_refine, RefineState, RefineStats, RefineVariant, ShiftDomain};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`, the
/// leading coefficient is nonzero, zero is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> DensePoly<F> {
    pub fn zero(field: F) -> Self {
        DensePoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let c = field.one();
        DensePoly::from_coeffs(field, vec![c])
    }

    /// Build from low-to-high coefficients, trimming high zeros.
    pub fn from_coeffs(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        DensePoly { field, coeffs }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        DensePoly::from_coeffs(field, vec![c])
    }

    /// `x^n`.
    pub fn monomial(field: F, n: usize) -> Self {
        let mut coeffs = vec![field.zero(); n + 1];
        coeffs[n] = field.one();
        DensePoly { field, coeffs }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of coefficients (degree + 1); zero for the zero polynomial.
    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn lc(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(self.field == other.field, "operands over different fields");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add_ref(&self.coeff(i), &other.coeff(i))).collect();
        DensePoly::from_coeffs(f.clone(), coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub_ref(&self.coeff(i), &other.coeff(i))).collect();
        DensePoly::from_coeffs(f.clone(), coeffs)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        let coeffs = self.coeffs.iter().map(|c| f.neg_ref(c)).collect();
        DensePoly::from_coeffs(f.clone(), coeffs)
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return DensePoly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add_ref(&out[i + j], &f.mul_ref(a, b));
            }
        }
        DensePoly::from_coeffs(f.clone(), out)
    }

    /// Product coefficients below index `e` only.
    pub fn mul_low(&self, other: &Self, e: usize) -> Self {
        self.assert_same_field(other);
        if e == 0 || self.is_zero() || other.is_zero() {
            return DensePoly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![f.zero(); e];
        for (i, a) in self.coeffs.iter().enumerate().take(e) {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(e - i) {
                out[i + j] = f.add_ref(&out[i + j], &f.mul_ref(a, b));
            }
        }
        DensePoly::from_coeffs(f.clone(), out)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let coeffs = self.coeffs.iter().map(|a| f.mul_ref(a, c)).collect();
        DensePoly::from_coeffs(f.clone(), coeffs)
    }

    /// Variable whole shift: multiply by `x^n`, discarding negative-exponent
    /// terms for `n < 0`.
    pub fn shift(&self, n: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if n >= 0 {
            let n = n as usize;
            let mut coeffs = vec![self.field.zero(); n + self.coeffs.len()];
            coeffs[n..].clone_from_slice(&self.coeffs);
            DensePoly { field: self.field.clone(), coeffs }
        } else {
            let drop = (-n) as usize;
            if drop >= self.coeffs.len() {
                DensePoly::zero(self.field.clone())
            } else {
                DensePoly {
                    field: self.field.clone(),
                    coeffs: self.coeffs[drop..].to_vec(),
                }
            }
        }
    }
}

/// Whole shift as a free function, matching the polynomial notation.
pub fn pshift<F: Field>(p: &DensePoly<F>, n: i64) -> DensePoly<F> {
    p.shift(n)
}

/// Whole shifted inverse `x^n quo v`, exactly.
///
/// Non-monic divisors are normalized once by the leading coefficient; the
/// iteration runs against the monic divisor and the result is scaled back.
pub fn pshinv<F: Field>(v: &DensePoly<F>, n: i64) -> Result<DensePoly<F>, Error> {
    pshinv_variant(v, n, RefineVariant::Refine3)
}

/// [`pshinv`] with an explicit refinement variant; all variants agree.
pub fn pshinv_variant<F: Field>(
    v: &DensePoly<F>,
    n: i64,
    variant: RefineVariant,
) -> Result<DensePoly<F>, Error> {
    if v.is_zero() {
        return Err(Error::DivisionByZero);
    }
    assert!(n >= 0, "pshinv requires a nonnegative shift exponent");
    let f = v.field().clone();
    let lead_inv = f.inv_ref(v.lc().unwrap()).ok_or(Error::NonInvertibleLeadingCoefficient)?;
    let monic = v.scale(&lead_inv);
    let dom = PolyShiftDomain::new(f);
    let mut stats = RefineStats::default();
    let w = if let Some(w) = dom.small_case(&monic, n) {
        w
    } else {
        let (y0, ell0, e0) = dom.initial_prefix(&monic);
        let state = RefineState { y: y0, ell: ell0, exp: e0 };
        generic_refine(&dom, variant, &monic, n, state, &mut stats)
    };
    Ok(w.scale(&lead_inv))
}

/// Quotient and remainder: `u = q*v + r` with `r = 0` or `deg r < deg v`.
/// No correction step exists or is needed for polynomials.
pub fn pdivmod<F: Field>(
    u: &DensePoly<F>,
    v: &DensePoly<F>,
) -> Result<(DensePoly<F>, DensePoly<F>), Error> {
    if v.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if u.is_zero() || u.deg() < v.deg() {
        return Ok((DensePoly::zero(u.field().clone()), u.clone()));
    }
    let h = u.deg().unwrap() as i64;
    let w = pshinv(v, h)?;
    let q = u.mul(&w).shift(-h);
    let r = u.sub(&q.mul(v));
    debug_assert!(r.is_zero() || r.deg() < v.deg(), "remainder degree out of range");
    Ok((q, r))
}

/// `x^h - v*w`, exactly.
pub fn ppow_diff<F: Field>(v: &DensePoly<F>, w: &DensePoly<F>, h: i64) -> DensePoly<F> {
    assert!(h >= 0);
    let xh = DensePoly::monomial(v.field().clone(), h as usize);
    xh.sub(&v.mul(w))
}
