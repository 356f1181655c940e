//! Solutions of `x_1 + x_2 + ... + x_{m-1} = x_m` with every value in `[1, n]`.
//!
//! A solution is stored as its nondecreasing summands plus the total. In
//! multiset mode summands may repeat; in distinct mode they are strictly
//! increasing. Enumeration order is by total, then lexicographic summands.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{domain, Error, Result};

/// Default cap on how many solutions [`index_solutions_by_total`] will store.
pub const DEFAULT_SOLUTION_CAP: usize = 10_000_000;

/// One solution of `E_m`: `m - 1` nondecreasing summands and their total.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SchurSolution {
    pub total: u32,
    pub terms: Vec<u32>,
}

impl SchurSolution {
    /// Number of variables, `m`.
    pub fn arity(&self) -> usize {
        self.terms.len() + 1
    }

    /// All `m` values, summands first.
    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.iter().copied().chain(std::iter::once(self.total))
    }

    pub fn is_distinct(&self) -> bool {
        self.terms.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for SchurSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, " = {}", self.total)
    }
}

/// Streaming enumerator returned by [`enumerate_solutions`].
///
/// Holds only the current solution; cloning it restarts from the same point.
#[derive(Debug, Clone)]
pub struct Solutions {
    terms: Vec<u32>,
    step: u64,
    total: u64,
    n: u64,
    // `terms` holds a solution that has not been yielded yet
    pending: bool,
}

impl Solutions {
    fn new(m: usize, n: u32, distinct: bool) -> Self {
        let mut s = Solutions {
            terms: vec![0; m - 1],
            step: u64::from(distinct),
            total: 0,
            n: u64::from(n),
            pending: false,
        };
        s.advance_total();
        s
    }

    /// Set `terms[from..len-1]` to `start, start + step, ...` and the last
    /// summand to whatever completes `total`. Returns false if the last
    /// summand would break the ordering. Requires `from < len - 1`.
    fn fill_from(&mut self, from: usize, start: u64) -> bool {
        let len = self.terms.len();
        let mut sum: u64 = self.terms[..from].iter().map(|&x| u64::from(x)).sum();
        let mut prev = start;
        for k in 0..(len - 1 - from) as u64 {
            prev = start + k * self.step;
            sum += prev;
        }
        if sum >= self.total || self.total - sum < prev + self.step {
            return false;
        }
        for (k, slot) in self.terms[from..len - 1].iter_mut().enumerate() {
            *slot = (start + k as u64 * self.step) as u32;
        }
        self.terms[len - 1] = (self.total - sum) as u32;
        true
    }

    /// Move to the lexicographically least solution of the next feasible total.
    fn advance_total(&mut self) {
        self.pending = false;
        while self.total < self.n {
            self.total += 1;
            if self.fill_from(0, 1) {
                self.pending = true;
                return;
            }
        }
    }

    /// Lexicographic successor with the same total.
    fn advance_same_total(&mut self) -> bool {
        let len = self.terms.len();
        for i in (0..len - 1).rev() {
            let start = u64::from(self.terms[i]) + 1;
            if self.fill_from(i, start) {
                return true;
            }
        }
        false
    }
}

impl Iterator for Solutions {
    type Item = SchurSolution;

    fn next(&mut self) -> Option<SchurSolution> {
        if !self.pending {
            return None;
        }
        let out = SchurSolution {
            total: self.total as u32,
            terms: self.terms.clone(),
        };
        if !self.advance_same_total() {
            self.advance_total();
        }
        Some(out)
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 3 {
        return domain(format!("E_m needs m >= 3 (got {m})"));
    }
    Ok(())
}

/// Stream every solution of `E_m` in `[1, n]`, ordered by total and then
/// lexicographically. With `distinct`, only strictly increasing summands.
pub fn enumerate_solutions(m: usize, n: u32, distinct: bool) -> Result<Solutions> {
    check_m(m)?;
    Ok(Solutions::new(m, n, distinct))
}

pub fn count_solutions(m: usize, n: u32, distinct: bool) -> Result<u64> {
    Ok(enumerate_solutions(m, n, distinct)?.count() as u64)
}

/// All solutions of `E_m` in `[1, n]`, bucketed by total.
///
/// Summands are stored flat, `m - 1` per solution; bucket `x` is a contiguous
/// run so that looking up every solution with total `x` is a slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionIndex {
    m: usize,
    n: u32,
    distinct: bool,
    terms: Vec<u32>,
    // bucket x spans solutions offsets[x]..offsets[x + 1]
    offsets: Vec<usize>,
}

impl SolutionIndex {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn distinct(&self) -> bool {
        self.distinct
    }

    /// Total number of stored solutions.
    pub fn len(&self) -> usize {
        self.terms.len() / (self.m - 1)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Summand slices of every solution whose total is `x`.
    pub fn bucket(&self, x: u32) -> std::slice::ChunksExact<'_, u32> {
        let width = self.m - 1;
        let range = if x == 0 || x > self.n {
            0..0
        } else {
            let x = x as usize;
            self.offsets[x] * width..self.offsets[x + 1] * width
        };
        self.terms[range].chunks_exact(width)
    }

    pub fn bucket_len(&self, x: u32) -> usize {
        self.bucket(x).len()
    }

    /// Every `(total, summands)` pair with total at most `limit`, in
    /// enumeration order.
    pub fn iter_up_to(&self, limit: u32) -> impl Iterator<Item = (u32, &[u32])> + '_ {
        (1..=limit.min(self.n)).flat_map(move |x| self.bucket(x).map(move |terms| (x, terms)))
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &[u32])> + '_ {
        self.iter_up_to(self.n)
    }

    pub fn solutions_with_total(&self, x: u32) -> Vec<SchurSolution> {
        self.bucket(x)
            .map(|terms| SchurSolution {
                total: x,
                terms: terms.to_vec(),
            })
            .collect()
    }

    /// Non-empty buckets as an ordered map.
    pub fn to_map(&self) -> BTreeMap<u32, Vec<SchurSolution>> {
        (1..=self.n)
            .filter(|&x| self.bucket_len(x) > 0)
            .map(|x| (x, self.solutions_with_total(x)))
            .collect()
    }
}

/// [`SolutionIndex`] for `E_m` on `[1, n]`, refusing to store more than
/// [`DEFAULT_SOLUTION_CAP`] solutions.
pub fn index_solutions_by_total(m: usize, n: u32, distinct: bool) -> Result<SolutionIndex> {
    index_solutions_capped(m, n, distinct, DEFAULT_SOLUTION_CAP)
}

pub fn index_solutions_capped(
    m: usize,
    n: u32,
    distinct: bool,
    cap: usize,
) -> Result<SolutionIndex> {
    check_m(m)?;
    let mut terms = Vec::new();
    let mut offsets = vec![0usize; n as usize + 2];
    let mut count = 0usize;
    let mut current = 0u32;
    for sol in Solutions::new(m, n, distinct) {
        count += 1;
        if count > cap {
            return Err(Error::BudgetExceeded {
                reason: format!("more than {cap} solutions of E_{m} in [1, {n}]"),
                nodes: count as u64,
                deepest: sol.total as usize,
                elapsed: Default::default(),
            });
        }
        while current < sol.total {
            current += 1;
            offsets[current as usize] = count - 1;
        }
        terms.extend_from_slice(&sol.terms);
    }
    while (current as usize) < n as usize + 1 {
        current += 1;
        offsets[current as usize] = count;
    }
    Ok(SolutionIndex {
        m,
        n,
        distinct,
        terms,
        offsets,
    })
}
