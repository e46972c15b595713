//! Iteration-dynamics laboratory for the integer map behind the shifted
//! inverse.
//!
//! The maps under study, for fixed `1 < v < u`:
//!
//! ```text
//! S_R(x) = x*(2 - (v/u)*x)                 on the rationals
//! S_Z(w) = w + floor(w*(1 - (v/u)*w))      on the integers
//! ```
//!
//! `S_Z` is what division iterates (with `u = B^h`); its fixed points are
//! `0`, `1`, `floor(u/v)`, and — exactly when `u/v` lies in a characterized
//! union of intervals — the spurious neighbor `floor(u/v) - 1`. Everything
//! here is exact: integer arithmetic for the maps and censuses, arbitrary
//! precision rationals for the real map. Floating point appears only in the
//! census estimate's constant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Exact rational from an integer pair, reduced, positive denominator.
pub fn rational(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer map `S_Z(w) = w + floor(w*(u - v*w)/u)` for `1 < v < u`.
pub fn s_z_map(u: i128, v: i128, w: i128) -> i128 {
    debug_assert!(1 < v && v < u);
    w + (w * (u - v * w)).div_euclid(u)
}

/// The real map `S_R(x) = x*(2 - (v/u)*x)`, exactly on rationals.
pub fn s_r_map(u: i128, v: i128, x: &BigRational) -> BigRational {
    let two = BigRational::from(BigInt::from(2));
    x * (two - rational(v, u) * x)
}

/// Closed form for the `i`-fold iterate of `S_R`:
/// `(u/v) * (1 - (1 - (v/u)x)^(2^i))`.
pub fn s_r_iterate(u: i128, v: i128, x: &BigRational, i: u32) -> BigRational {
    assert!(i <= 20, "iterate exponent 2^{i} is unreasonably large");
    let uv = rational(u, v);
    let vu = rational(v, u);
    let base = BigRational::one() - vu * x;
    let mut pow = base;
    for _ in 0..i {
        pow = &pow * &pow;
    }
    uv * (BigRational::one() - pow)
}

/// Integer fixed points of `S_Z` on `[0, u/v]`, by direct scan.
pub fn fixed_points(u: i128, v: i128) -> Vec<i128> {
    debug_assert!(1 < v && v < u);
    let q = u / v;
    (0..=q).filter(|&w| s_z_map(u, v, w) == w).collect()
}

/// Whether `floor(u/v) - 1` is a fixed point of `S_Z`, by the exact interval
/// condition `u/v in (1,4) or u/v in [j, j + 1/(j-2))` for `j = floor(u/v)`,
/// evaluated with cross-multiplied integer comparisons.
pub fn is_floor_minus_one_fixed(u: i128, v: i128) -> bool {
    debug_assert!(1 < v && v < u);
    if u < 4 * v {
        // u/v in (1, 4); the left end is strict but v < u already.
        return true;
    }
    let q = u / v; // >= 4
    (u - q * v) * (q - 2) < v
}

/// Number of divisors `1 < v < u` for which `floor(u/v) - 1` is fixed.
pub fn census_floor_minus_one(u: i128) -> u64 {
    assert!(u > 2);
    (2..u).filter(|&v| is_floor_minus_one_fixed(u, v)).count() as u64
}

/// The closed-form estimate `(pi^2 - 5)/6 * u` for the census, truncated to
/// an integer. The only floating-point computation in this module.
pub fn census_estimate(u: i128) -> i128 {
    let c = (std::f64::consts::PI.powi(2) - 5.0) / 6.0;
    (c * u as f64).floor() as i128
}

/// One row of a census table.
#[derive(Clone, Debug, PartialEq)]
pub struct CensusRow {
    pub u: i128,
    pub actual: u64,
    pub estimate: i128,
    pub abs_err: i128,
    pub rel_err: f64,
}

/// Census rows for the given `u` values.
pub fn census_table(us: &[i128]) -> Vec<CensusRow> {
    us.iter()
        .map(|&u| {
            let actual = census_floor_minus_one(u);
            let estimate = census_estimate(u);
            let abs_err = (actual as i128 - estimate).abs();
            let rel_err = abs_err as f64 / actual as f64;
            CensusRow { u, actual, estimate, abs_err, rel_err }
        })
        .collect()
}

/// CSV rendering of a census table, one row per `u`.
pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("u,actual,estimate,abs_err,rel_err\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.3e}\n",
            r.u, r.actual, r.estimate, r.abs_err, r.rel_err
        ));
    }
    out
}

/// How a recorded iteration ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceOutcome {
    /// Reached `w` with `S_Z(w) = w`.
    FixedPoint(i128),
    /// Left `[0, floor(2u/v)]`, from where iterates grow negatively without
    /// bound.
    Diverged,
    /// Budget exhausted without either of the above (indicates a bug, not
    /// slow convergence).
    BudgetExceeded,
}

/// A recorded `S_Z` iteration: consecutive iterates from `w0` and the
/// outcome classification.
#[derive(Clone, Debug)]
pub struct IterationTrace {
    pub u: i128,
    pub v: i128,
    pub w0: i128,
    pub iterates: Vec<i128>,
    pub outcome: TraceOutcome,
}

impl IterationTrace {
    /// Steps taken until the outcome was decided.
    pub fn steps(&self) -> usize {
        self.iterates.len() - 1
    }
}

/// Default iteration budget: a generous multiple of the proven
/// `ceil(log2 log2(u/v))` bound.
pub fn default_budget(u: i128, v: i128) -> u32 {
    let q = (u / v).max(4);
    10 + 4 * ceil_log2(ceil_log2(q) as i128)
}

/// Iterate `S_Z` from `w0` until a fixed point, detected divergence, or
/// budget exhaustion (`None` uses [`default_budget`]).
pub fn steps_to_converge(u: i128, v: i128, w0: i128, budget: Option<u32>) -> IterationTrace {
    assert!(1 < v && v < u);
    let budget = budget.unwrap_or_else(|| default_budget(u, v));
    let bound = 2 * u / v;
    let mut iterates = vec![w0];
    let outcome = loop {
        let w = *iterates.last().unwrap();
        if w < 0 || w > bound {
            break TraceOutcome::Diverged;
        }
        let next = s_z_map(u, v, w);
        if next == w {
            break TraceOutcome::FixedPoint(w);
        }
        if iterates.len() > budget as usize {
            break TraceOutcome::BudgetExceeded;
        }
        iterates.push(next);
    };
    IterationTrace { u, v, w0, iterates, outcome }
}

/// Exact `ceil(log2 log2(u/v))` for `u/v >= 2`: the proven iteration bound
/// for starts within a quarter of `u/v`.
pub fn fast_iteration_bound(u: i128, v: i128) -> u32 {
    assert!(v >= 1 && u >= 2 * v, "bound requires u/v >= 2");
    // Smallest i with u/v <= 2^(2^i).
    let mut i = 0;
    while u > v << (1u32 << i) {
        i += 1;
        assert!(i < 7, "u/v out of supported range");
    }
    i
}

fn ceil_log2(x: i128) -> u32 {
    debug_assert!(x >= 1);
    if x <= 1 {
        0
    } else {
        128 - ((x - 1).leading_zeros())
    }
}

/// Render a trace the way the command line prints it.
pub fn format_trace(trace: &IterationTrace) -> String {
    let path =
        trace.iterates.iter().map(i128::to_string).collect::<Vec<_>>().join(" -> ");
    match &trace.outcome {
        TraceOutcome::FixedPoint(_) => format!("{path} (fixed)"),
        TraceOutcome::Diverged => format!("{path} diverged"),
        TraceOutcome::BudgetExceeded => format!("{path} (budget exceeded)"),
    }
}
