use crate::error::{domain, Result};
use crate::numbers::{rs_formula, rs_weak_formula};

use super::Coloring;

/// `[1, k]` in one class, every integer of `[k + 1, n]` alone in its own.
/// Uses `n - k + 1` colors.
pub fn block_coloring(n: u32, k: u32) -> Result<Coloring> {
    if k == 0 || k > n {
        return domain(format!("block size {k} must lie in [1, {n}]"));
    }
    let colors = (1..=n).map(|x| if x <= k { 1 } else { x - k + 1 }).collect();
    Coloring::from_canonical(colors)
}

fn to_u32(n: u64) -> Result<u32> {
    u32::try_from(n).or_else(|_| domain(format!("n = {n} is too large to materialize a coloring")))
}

/// Exact `(RS_m(n) - 1)`-coloring of `[1, n]` without a rainbow solution:
/// with `k = n + 2 - RS_m(n)`, the block `[1, k]` plus singletons.
pub fn construct_rainbow_lower(m: u64, n: u64) -> Result<Coloring> {
    let value = rs_formula(m, n)?;
    let k = n + 2 - value;
    block_coloring(to_u32(n)?, to_u32(k)?)
}

/// Exact `(RS_{t,m}(n) - 1)`-coloring of `[1, n]` without a solution using
/// `t` colors: the block `[1, n + 2 - k]` plus singletons, `k = RS_{t,m}(n)`.
pub fn construct_weak_lower(t: u64, m: u64, n: u64) -> Result<Coloring> {
    if t < 3 {
        return domain(format!("the block construction needs t >= 3 (got {t})"));
    }
    let value = rs_weak_formula(t, m, n)?;
    let k = n + 2 - value;
    block_coloring(to_u32(n)?, to_u32(k)?)
}
