//! Exact quotients and remainders for integers and polynomials, computed
//! entirely inside the original ring.
//!
//! The key object is the *whole shifted inverse* `shinv_h(v) = floor(B^h / v)`
//! (or `x^h quo v` for polynomials). It is computed by a floor-discretized
//! Newton iteration that needs only multiplication and digit shifts, so
//! division inherits the complexity of whatever multiplication backend is
//! plugged in. Quotients then come from one multiplication by the shifted
//! inverse plus a bounded correction.
//!
//! Module map:
//!
//! * [`bigdigits`] — base-`B` natural numbers, shifts, schoolbook and
//!   Karatsuba multiplication, low-digit products.
//! * [`int_shinv`] — the integer shifted inverse and `divmod` built on it.
//! * [`poly`] — dense univariate polynomials over prime fields with the
//!   analogous `pshinv`/`pdivmod`.
//! * [`generic_core`] — the shift-domain abstraction: one refinement loop
//!   shared by integers, polynomials, and noncommutative coefficient rings
//!   such as matrix polynomials.
//! * [`dynamics`] — a small laboratory for the integer iteration map:
//!   fixed points, convergence regions, and census tables.
//! * [`oracle`] — independent brute-force references used by the test
//!   suites (long division, reverse-polynomial Newton division).

pub mod bigdigits;
pub mod dynamics;
pub mod error;
pub mod generic_core;
pub mod int_shinv;
pub mod oracle;
pub mod poly;

pub use bigdigits::{MultBackend, Natural};
pub use error::{Error, ParseError};
pub use generic_core::RefineVariant;
