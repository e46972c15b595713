//! Sign-magnitude values for close-product differences.
//!
//! The core [`Natural`] type is unsigned; the difference `B^h - v*w` is the
//! one place the integer algorithms need a sign. Zero is canonically
//! non-negative.

use crate::bigdigits::Natural;
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedNatural {
    negative: bool,
    mag: Natural,
}

impl SignedNatural {
    pub fn zero(base: u64) -> Self {
        SignedNatural { negative: false, mag: Natural::zero(base) }
    }

    pub fn positive(mag: Natural) -> Self {
        SignedNatural { negative: false, mag }
    }

    pub fn negative(mag: Natural) -> Self {
        let negative = !mag.is_zero();
        SignedNatural { negative, mag }
    }

    pub fn is_zero(&self) -> bool {
        self.mag.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn magnitude(&self) -> &Natural {
        &self.mag
    }

    pub fn into_magnitude(self) -> Natural {
        self.mag
    }

    /// `self + v` for non-negative `v`.
    pub fn add_nat(&self, v: &Natural) -> SignedNatural {
        if !self.negative {
            SignedNatural::positive(self.mag.add(v))
        } else {
            match self.mag.cmp(v) {
                Ordering::Greater => SignedNatural::negative(self.mag.sub(v)),
                _ => SignedNatural::positive(v.sub(&self.mag)),
            }
        }
    }

    /// `self - v` for non-negative `v`.
    pub fn sub_nat(&self, v: &Natural) -> SignedNatural {
        if self.negative {
            SignedNatural::negative(self.mag.add(v))
        } else {
            match self.mag.cmp(v) {
                Ordering::Less => SignedNatural::negative(v.sub(&self.mag)),
                _ => SignedNatural::positive(self.mag.sub(v)),
            }
        }
    }

    /// Order against a non-negative value.
    pub fn cmp_nat(&self, v: &Natural) -> Ordering {
        if self.negative {
            Ordering::Less
        } else {
            self.mag.cmp(v)
        }
    }
}

impl std::fmt::Display for SignedNatural {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        write!(f, "{}", self.mag)
    }
}
