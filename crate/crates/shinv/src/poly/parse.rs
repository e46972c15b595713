//! Text format for polynomials over prime fields.
//!
//! Coefficients are written low-to-high, comma separated, with the field
//! after an `@`: `"1,2,0,1 @ F5"` is `1 + 2x + x^3` over `F_5`. Coefficient
//! literals may be negative or exceed the modulus; they are reduced.

use super::field::PrimeField;
use super::DensePoly;
use crate::error::ParseError;

/// Parse `"coeffs @ field"`.
pub fn parse_poly(s: &str) -> Result<DensePoly<PrimeField>, ParseError> {
    let (coeffs, field) = s
        .split_once('@')
        .ok_or_else(|| ParseError::BadFormat("expected \"coeffs @ Fp\"".into()))?;
    let field = parse_field(field)?;
    parse_coeff_list(coeffs, field)
}

/// Parse a field name: `"F5"`, `"f97"`, or a bare modulus.
pub fn parse_field(s: &str) -> Result<PrimeField, ParseError> {
    let s = s.trim();
    let digits = s.strip_prefix(['F', 'f']).unwrap_or(s);
    if digits.is_empty() {
        return Err(ParseError::Empty);
    }
    let p: u64 = digits
        .parse()
        .map_err(|_| ParseError::BadFormat(format!("bad field modulus {s:?}")))?;
    PrimeField::try_new(p)
}

/// Parse a comma-separated low-to-high coefficient list over a known field.
pub fn parse_coeff_list(s: &str, field: PrimeField) -> Result<DensePoly<PrimeField>, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut coeffs = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err(ParseError::BadFormat("empty coefficient".into()));
        }
        let raw: i128 = item
            .parse()
            .map_err(|_| ParseError::BadFormat(format!("bad coefficient {item:?}")))?;
        coeffs.push(raw.rem_euclid(field.modulus() as i128) as u64);
    }
    Ok(DensePoly::from_coeffs(field, coeffs))
}

/// Render in the same format: `"1,2,0,1 @ F5"`; the zero polynomial is
/// `"0 @ Fp"`.
pub fn format_poly(p: &DensePoly<PrimeField>) -> String {
    let coeffs = format_coeff_list(p);
    format!("{coeffs} @ F{}", p.field().modulus())
}

/// Render just the coefficient list, low-to-high.
pub fn format_coeff_list(p: &DensePoly<PrimeField>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.coeffs().iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}
