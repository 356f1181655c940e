//! Closed forms for rainbow Schur numbers `RS_m(n)` and weakened rainbow
//! Schur numbers `RS_{t,m}(n)`, together with the thresholds below which
//! they are undefined.
//!
//! All arithmetic is exact `u64` with overflow checks. Ceilings of positive
//! quotients are taken as `(a + b - 1) / b`.

use std::fmt;

use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{domain, Error, Result};

/// One rainbow-Schur instance: the equation `x_1 + ... + x_{m-1} = x_m`,
/// at least `t` colors required on a solution, integers `[1, n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ProblemParams {
    m: u64,
    t: u64,
    n: u64,
}

impl ProblemParams {
    pub fn new(m: u64, t: u64, n: u64) -> Result<Self> {
        if m < 3 {
            return domain(format!("m must be at least 3 (got {m})"));
        }
        if t < 2 || t > m {
            return domain(format!("t must lie in [2, m] = [2, {m}] (got {t})"));
        }
        if n < 1 {
            return domain("n must be at least 1");
        }
        Ok(Self { m, t, n })
    }

    /// Rainbow instance, `t = m`.
    pub fn rainbow(m: u64, n: u64) -> Result<Self> {
        Self::new(m, m, n)
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn is_rainbow(&self) -> bool {
        self.t == self.m
    }

    /// `t = m` and `[1, n]` holds a solution with pairwise distinct values.
    pub fn in_rainbow_domain(&self) -> bool {
        self.is_rainbow() && self.n >= self.m * (self.m - 1) / 2
    }

    /// `t < m` and `[1, n]` holds a solution that can carry `t` colors.
    pub fn in_weak_domain(&self) -> bool {
        !self.is_rainbow() && self.n >= self.t * (self.t - 1) / 2 + self.m - self.t
    }
}

impl fmt::Display for ProblemParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} t={} n={}", self.m, self.t, self.n)
    }
}

/// How a [`ComputedNumber`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    Formula,
    Search,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Search => "search",
        })
    }
}

/// A rainbow-Schur value with its provenance.
///
/// `value` is `None` when no solution in `[1, n]` can carry `t` colors at all,
/// so no number of colors forces one. A witness, when present, is an exact
/// `(value - 1)`-coloring without a qualifying solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputedNumber {
    pub value: Option<u64>,
    pub method: Method,
    pub witness: Option<Coloring>,
}

/// Which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaKind {
    /// `floor(log2 n) + 2`, for `m = 3`.
    Log2,
    /// `ceil(((m-3)n + m(m-1)/2) / (m-2))`, for `m >= 4`.
    Rainbow,
    /// The constant `2`, for `t = 2`.
    TwoColors,
    /// `ceil(((t-3)n + t(t-1)/2 + m - t) / (t-2))`, for `3 <= t <= m`, `m >= 4`.
    Weak,
}

impl FormulaKind {
    pub fn describe(&self) -> &'static str {
        match self {
            FormulaKind::Log2 => "floor(log2(n)) + 2",
            FormulaKind::Rainbow => "ceil(((m-3)*n + m*(m-1)/2) / (m-2))",
            FormulaKind::TwoColors => "2",
            FormulaKind::Weak => "ceil(((t-3)*n + t*(t-1)/2 + m - t) / (t-2))",
        }
    }
}

fn checked_mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

fn checked_add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

fn ceil_div(a: u64, b: u64, what: &'static str) -> Result<u64> {
    debug_assert!(b > 0);
    Ok(checked_add(a, b - 1, what)? / b)
}

fn triangular(k: u64, what: &'static str) -> Result<u64> {
    // k(k-1)/2; one of k, k-1 is even
    if k.is_multiple_of(2) {
        checked_mul(k / 2, k.saturating_sub(1), what)
    } else {
        checked_mul(k, k.saturating_sub(1) / 2, what)
    }
}

/// Least `n` such that `E_m` has a solution with pairwise distinct values in
/// `[1, n]`, namely `1 + 2 + ... + (m-1) = m(m-1)/2`.
pub fn min_n_rainbow(m: u64) -> Result<u64> {
    if m < 3 {
        return domain(format!("m must be at least 3 (got {m})"));
    }
    triangular(m, "m(m-1)/2")
}

/// Least `n` such that `E_m` has a solution using `t` colors: `m - t + 1` ones
/// followed by `2, 3, ..., t-1`, with total `t(t-1)/2 + m - t`.
pub fn min_n_weak(t: u64, m: u64) -> Result<u64> {
    if m < 3 {
        return domain(format!("m must be at least 3 (got {m})"));
    }
    if t < 2 || t > m {
        return domain(format!("t must lie in [2, {m}] (got {t})"));
    }
    checked_add(triangular(t, "t(t-1)/2")?, m - t, "t(t-1)/2 + m - t")
}

/// `RS_3(n) = floor(log2 n) + 2`, via the bit length of `n`.
pub fn rs3_formula(n: u64) -> Result<u64> {
    if n < 3 {
        return domain(format!("RS_3(n) needs n >= 3 (got {n})"));
    }
    Ok(u64::from(n.ilog2()) + 2)
}

/// `RS_m(n) = ceil(((m-3)n + m(m-1)/2) / (m-2))` for `m >= 4`,
/// `n >= m(m-1)/2`.
pub fn rs_formula(m: u64, n: u64) -> Result<u64> {
    if m == 3 {
        return Err(Error::UnsupportedM { m });
    }
    let min_n = min_n_rainbow(m)?;
    if n < min_n {
        return domain(format!("RS_{m}(n) needs n >= {min_n} (got {n})"));
    }
    let numerator = checked_add(
        checked_mul(m - 3, n, "(m-3)n")?,
        min_n,
        "(m-3)n + m(m-1)/2",
    )?;
    ceil_div(numerator, m - 2, "RS_m(n)")
}

/// Weakened rainbow Schur number `RS_{t,m}(n)`.
///
/// For `t = 2` the value is `2` once `n >= 2m - 4`; between the natural
/// threshold `m - 1` and `2m - 4` nothing is known in closed form and
/// [`Error::OutsideTheoremDomain`] is returned. For `3 <= t <= m` (with
/// `m >= 4`) the value is `ceil(((t-3)n + t(t-1)/2 + m - t) / (t-2))`.
pub fn rs_weak_formula(t: u64, m: u64, n: u64) -> Result<u64> {
    let min_n = min_n_weak(t, m)?;
    if t == 2 {
        if n < min_n {
            return domain(format!(
                "no solution of E_{m} in [1, {n}] carries 2 colors (needs n >= {min_n})"
            ));
        }
        let two_color_min = 2 * m - 4;
        if n < two_color_min {
            return Err(Error::OutsideTheoremDomain {
                t,
                m,
                n,
                min_n: two_color_min,
            });
        }
        return Ok(2);
    }
    if m < 4 {
        return domain(format!(
            "RS_{{t,m}}(n) with t >= 3 needs m >= 4 (got m = {m}); use the m = 3 formula"
        ));
    }
    if n < min_n {
        return domain(format!("RS_{{{t},{m}}}(n) needs n >= {min_n} (got {n})"));
    }
    let numerator = checked_add(
        checked_mul(t - 3, n, "(t-3)n")?,
        min_n,
        "(t-3)n + t(t-1)/2 + m - t",
    )?;
    ceil_div(numerator, t - 2, "RS_{t,m}(n)")
}

/// Dispatch `params` to whichever closed form covers it.
pub fn evaluate(params: &ProblemParams) -> Result<(u64, FormulaKind)> {
    let (m, t, n) = (params.m, params.t, params.n);
    if t == m {
        if m == 3 {
            return Ok((rs3_formula(n)?, FormulaKind::Log2));
        }
        return Ok((rs_formula(m, n)?, FormulaKind::Rainbow));
    }
    let kind = if t == 2 {
        FormulaKind::TwoColors
    } else {
        FormulaKind::Weak
    };
    Ok((rs_weak_formula(t, m, n)?, kind))
}

/// [`evaluate`] wrapped as a [`ComputedNumber`] with `Method::Formula`.
pub fn formula_number(params: &ProblemParams) -> Result<ComputedNumber> {
    let (value, _) = evaluate(params)?;
    Ok(ComputedNumber {
        value: Some(value),
        method: Method::Formula,
        witness: None,
    })
}
