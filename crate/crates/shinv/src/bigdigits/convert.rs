//! String conversion and digit regrouping for [`Natural`].

use super::{check_base, trim, Natural};
use crate::error::ParseError;

impl Natural {
    /// Parse a decimal digit string into base-`B` representation.
    pub fn from_decimal_str(base: u64, s: &str) -> Result<Natural, ParseError> {
        Self::from_radix_str(base, s, 10)
    }

    /// Parse a hexadecimal digit string (no `0x` prefix).
    pub fn from_hex_str(base: u64, s: &str) -> Result<Natural, ParseError> {
        Self::from_radix_str(base, s, 16)
    }

    /// Parse either decimal or, with a `0x`/`0X` prefix, hexadecimal.
    pub fn parse(base: u64, s: &str) -> Result<Natural, ParseError> {
        if let Some(hex) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
            Self::from_hex_str(base, hex)
        } else {
            Self::from_decimal_str(base, s)
        }
    }

    fn from_radix_str(base: u64, s: &str, radix: u64) -> Result<Natural, ParseError> {
        if !(2..=super::MAX_BASE).contains(&base) {
            return Err(ParseError::BaseOutOfRange(base));
        }
        if s.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut acc = Natural::zero(base);
        for c in s.chars() {
            let d = c.to_digit(radix as u32).ok_or(ParseError::InvalidDigit(c))?;
            acc = acc.mul_small(radix).add(&Natural::from_u64(base, d as u64));
        }
        Ok(acc)
    }

    /// Decimal rendering, independent of the internal base.
    pub fn to_decimal_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        // Peel nine decimal digits per short division.
        const CHUNK: u64 = 1_000_000_000;
        let mut chunks = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let (q, r) = cur.div_small(CHUNK);
            chunks.push(r);
            cur = q;
        }
        let mut out = chunks.last().unwrap().to_string();
        for c in chunks.iter().rev().skip(1) {
            out.push_str(&format!("{c:09}"));
        }
        out
    }

    /// Lowercase hexadecimal rendering, independent of the internal base.
    pub fn to_hex_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        const CHUNK: u64 = 1 << 60;
        let mut chunks = Vec::new();
        let mut cur = self.clone();
        while !cur.is_zero() {
            let (q, r) = cur.div_small(CHUNK);
            chunks.push(r);
            cur = q;
        }
        let mut out = format!("{:x}", chunks.last().unwrap());
        for c in chunks.iter().rev().skip(1) {
            out.push_str(&format!("{c:015x}"));
        }
        out
    }

    /// Reinterpret in base `B^p` by combining groups of `p` digits.
    /// The numeric value is unchanged.
    pub fn regroup(&self, p: usize) -> Natural {
        assert!(p >= 1);
        let new_base = self
            .base
            .checked_pow(p as u32)
            .filter(|&b| b <= super::MAX_BASE)
            .expect("regrouped base exceeds 2^32");
        check_base(new_base);
        let mut digits = Vec::with_capacity(self.digits.len().div_ceil(p));
        for chunk in self.digits.chunks(p) {
            let mut d = 0u64;
            for &c in chunk.iter().rev() {
                d = d * self.base + c;
            }
            digits.push(d);
        }
        trim(&mut digits);
        Natural { base: new_base, digits }
    }

    /// Inverse of [`Natural::regroup`]: expand each digit into `p` digits of
    /// base `b` where `b^p` is the current base.
    pub fn ungroup(&self, b: u64, p: usize) -> Natural {
        assert!(p >= 1);
        assert_eq!(b.checked_pow(p as u32), Some(self.base), "base mismatch in ungroup");
        let mut digits = Vec::with_capacity(self.digits.len() * p);
        for &d in &self.digits {
            let mut d = d;
            for _ in 0..p {
                digits.push(d % b);
                d /= b;
            }
        }
        trim(&mut digits);
        Natural { base: b, digits }
    }
}
