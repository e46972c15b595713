//! Matrix polynomials: the noncommutative shift-domain fixture.
//!
//! Polynomials with 2x2 matrix coefficients over a prime field form a ring
//! where the variable is central but coefficients do not commute, so left
//! and right quotients differ. The whole shifted inverse still exists when
//! the divisor's leading coefficient is invertible, and the generic
//! refinement loop computes it unchanged.

use super::{RefineStats, ShiftDomain};
use crate::error::Error;
use crate::poly::field::PrimeField;

/// A 2x2 matrix over a prime field, row-major.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mat2(pub [u64; 4]);

impl Mat2 {
    pub const ZERO: Mat2 = Mat2([0; 4]);

    pub fn identity() -> Mat2 {
        Mat2([1, 0, 0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn add(&self, rhs: &Mat2, f: &PrimeField) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        Mat2([f.add(a[0], b[0]), f.add(a[1], b[1]), f.add(a[2], b[2]), f.add(a[3], b[3])])
    }

    pub fn sub(&self, rhs: &Mat2, f: &PrimeField) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        Mat2([f.sub(a[0], b[0]), f.sub(a[1], b[1]), f.sub(a[2], b[2]), f.sub(a[3], b[3])])
    }

    pub fn mul(&self, rhs: &Mat2, f: &PrimeField) -> Mat2 {
        let a = &self.0;
        let b = &rhs.0;
        Mat2([
            f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])),
            f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
            f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])),
            f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3])),
        ])
    }

    pub fn det(&self, f: &PrimeField) -> u64 {
        let a = &self.0;
        f.sub(f.mul(a[0], a[3]), f.mul(a[1], a[2]))
    }

    /// Inverse by adjugate over the field; `None` when the determinant
    /// vanishes.
    pub fn inv(&self, f: &PrimeField) -> Option<Mat2> {
        let d = self.det(f);
        let di = f.inv(d)?;
        let a = &self.0;
        Some(Mat2([
            f.mul(a[3], di),
            f.mul(f.neg(a[1]), di),
            f.mul(f.neg(a[2]), di),
            f.mul(a[0], di),
        ]))
    }
}

/// Dense polynomial with 2x2 matrix coefficients; `coeffs[i]` multiplies
/// `x^i`, the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatPoly {
    pub coeffs: Vec<Mat2>,
}

impl MatPoly {
    pub fn zero() -> MatPoly {
        MatPoly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Mat2>) -> MatPoly {
        while coeffs.last().is_some_and(Mat2::is_zero) {
            coeffs.pop();
        }
        MatPoly { coeffs }
    }

    pub fn constant(m: Mat2) -> MatPoly {
        MatPoly::from_coeffs(vec![m])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the central variable; zero polynomial gives `None`.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Mat2> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Mat2 {
        self.coeffs.get(i).copied().unwrap_or(Mat2::ZERO)
    }
}

/// Shift domain of 2x2 matrix polynomials over `F_p` with central element
/// `x`: shortfall and guards are zero since coefficient arithmetic has no
/// carries.
#[derive(Clone, Copy, Debug)]
pub struct MatPolyDomain {
    pub field: PrimeField,
}

impl MatPolyDomain {
    pub fn new(field: PrimeField) -> Self {
        MatPolyDomain { field }
    }

    fn mul_impl(&self, a: &MatPoly, b: &MatPoly) -> MatPoly {
        if a.is_zero() || b.is_zero() {
            return MatPoly::zero();
        }
        let f = &self.field;
        let mut out = vec![Mat2::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ai) in a.coeffs.iter().enumerate() {
            for (j, bj) in b.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&ai.mul(bj, f), f);
            }
        }
        MatPoly::from_coeffs(out)
    }

    /// `x^h - v*w`, exact (close products need no sentinel without carries:
    /// the coefficients above the known degree bound cancel identically).
    fn pow_diff(&self, v: &MatPoly, w: &MatPoly, h: i64) -> MatPoly {
        let f = &self.field;
        let prod = self.mul_impl(v, w);
        let h = h as usize;
        let mut out = vec![Mat2::ZERO; (h + 1).max(prod.coeffs.len())];
        out[h] = Mat2::identity();
        for (i, c) in prod.coeffs.iter().enumerate() {
            out[i] = out[i].sub(c, f);
        }
        MatPoly::from_coeffs(out)
    }

    /// Whole shifted inverse of `v`, requiring an invertible leading
    /// coefficient.
    pub fn shinv(&self, v: &MatPoly, h: i64) -> Result<MatPoly, Error> {
        if v.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if v.leading().unwrap().inv(&self.field).is_none() {
            return Err(Error::NonInvertibleLeadingCoefficient);
        }
        let mut stats = RefineStats::default();
        if let Some(w) = self.small_case(v, h) {
            return Ok(w);
        }
        let (y0, ell0, e0) = self.initial_prefix(v);
        let state = super::RefineState { y: y0, ell: ell0, exp: e0 };
        Ok(super::generic_refine(self, super::RefineVariant::Refine3, v, h, state, &mut stats))
    }

    /// Left and right quotient/remainder pairs `u = v*q_L + r_L = q_R*v + r_R`.
    pub fn divide_left(&self, u: &MatPoly, v: &MatPoly) -> Result<(MatPoly, MatPoly), Error> {
        self.check_divisor(v)?;
        Ok(super::quo_left(self, u, v))
    }

    pub fn divide_right(&self, u: &MatPoly, v: &MatPoly) -> Result<(MatPoly, MatPoly), Error> {
        self.check_divisor(v)?;
        Ok(super::quo_right(self, u, v))
    }

    fn check_divisor(&self, v: &MatPoly) -> Result<(), Error> {
        if v.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if v.leading().unwrap().inv(&self.field).is_none() {
            return Err(Error::NonInvertibleLeadingCoefficient);
        }
        Ok(())
    }
}

impl ShiftDomain for MatPolyDomain {
    type Elem = MatPoly;

    fn shift(&self, a: &MatPoly, n: i64) -> MatPoly {
        if a.is_zero() {
            return MatPoly::zero();
        }
        if n >= 0 {
            let n = n as usize;
            let mut coeffs = vec![Mat2::ZERO; n + a.coeffs.len()];
            coeffs[n..].copy_from_slice(&a.coeffs);
            MatPoly { coeffs }
        } else {
            let drop = (-n) as usize;
            if drop >= a.coeffs.len() {
                MatPoly::zero()
            } else {
                MatPoly { coeffs: a.coeffs[drop..].to_vec() }
            }
        }
    }

    fn prec(&self, a: &MatPoly) -> i64 {
        a.coeffs.len() as i64
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
        v: &MatPoly,
        y: &MatPoly,
        m: i64,
        _ell: i64,
        stats: &mut RefineStats,
    ) -> MatPoly {
        let ym = self.shift(y, m);
        let diff = self.pow_diff(v, &ym, e);
        stats.mults += 1;
        if diff.is_zero() {
            return ym;
        }
        // Multiply in the order y * diff: the iterate converges to the
        // polynomial part of v^{-1} x^e, which serves both quotients.
        let t = self.mul_impl(y, &diff);
        stats.mults += 1;
        let add = self.shift(&t, m - e);
        let f = &self.field;
        let mut coeffs = vec![Mat2::ZERO; ym.coeffs.len().max(add.coeffs.len())];
        for (i, c) in ym.coeffs.iter().enumerate() {
            coeffs[i] = *c;
        }
        for (i, c) in add.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].add(c, f);
        }
        MatPoly::from_coeffs(coeffs)
    }

    fn initial_prefix(&self, v: &MatPoly) -> (MatPoly, i64, i64) {
        let f = &self.field;
        let k = v.deg().expect("nonzero divisor") as i64;
        let lead_inv = v.leading().unwrap().inv(f).expect("invertible leading coefficient");
        if k == 0 {
            return (MatPoly::constant(lead_inv), 1, 0);
        }
        // Two quotient terms of x^{k+1} quo v: A_k^{-1} x - A_k^{-1} A_{k-1} A_k^{-1}.
        let c0 = lead_inv.mul(&v.coeff(k as usize - 1), f).mul(&lead_inv, f);
        let c0 = Mat2::ZERO.sub(&c0, f);
        (MatPoly::from_coeffs(vec![c0, lead_inv]), 2, k + 1)
    }

    fn small_case(&self, v: &MatPoly, h: i64) -> Option<MatPoly> {
        let k = v.deg().expect("nonzero divisor") as i64;
        if h < k {
            return Some(MatPoly::zero());
        }
        if k == 0 {
            let inv = v.leading().unwrap().inv(&self.field).expect("invertible");
            return Some(self.shift(&MatPoly::constant(inv), h));
        }
        None
    }

    fn correct(&self, _v: &MatPoly, _h: i64, y: MatPoly, _stats: &mut RefineStats) -> MatPoly {
        y
    }

    fn mul(&self, a: &MatPoly, b: &MatPoly) -> MatPoly {
        self.mul_impl(a, b)
    }

    fn sub(&self, a: &MatPoly, b: &MatPoly) -> MatPoly {
        let f = &self.field;
        let mut coeffs = vec![Mat2::ZERO; a.coeffs.len().max(b.coeffs.len())];
        for (i, c) in a.coeffs.iter().enumerate() {
            coeffs[i] = *c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].sub(c, f);
        }
        MatPoly::from_coeffs(coeffs)
    }

    fn is_zero(&self, a: &MatPoly) -> bool {
        a.is_zero()
    }
}
