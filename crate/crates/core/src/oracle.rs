//! Exhaustive search over exact `r`-colorings of `[1, n]`, up to renaming
//! of colors, for one without a solution of `E_m` carrying `t` colors.
//!
//! Colorings are generated as restricted growth strings, one position at a
//! time. When integer `x` receives its color, every solution with total `x`
//! is fully colored (all summands are smaller than `x`), so those are the only
//! solutions that need checking at that node. A branch dies as soon as one of
//! them reaches `t` colors, or when it can no longer end with exactly `r`
//! colors.
//!
//! With more than one thread, the tree is cut at a fixed prefix depth and
//! the subtrees are searched independently. The outcome does not depend on
//! the thread count; which counterexample is reported may.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::coloring::{distinct_colors, has_t_colored_solution_in, Coloring};
use crate::error::{domain, Error, Result};
use crate::numbers::{ComputedNumber, Method};
use crate::solutions::{index_solutions_by_total, SolutionIndex};

pub const DEFAULT_MAX_NODES: u64 = 100_000_000;
pub const DEFAULT_SPLIT_DEPTH: usize = 8;

// how many nodes a walker handles between budget and cancellation checks
const CHECK_EVERY: u64 = 1024;

/// Limits on one search. Node counts and time are shared by every radius `r`
/// visited during [`search_rs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
    pub threads: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: DEFAULT_MAX_NODES,
            time_limit: None,
            threads: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Every exact `r`-coloring has a qualifying solution.
    AllGood,
    /// Some exact `r`-coloring has none; see [`Verdict::witness`].
    Counterexample,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Option<Coloring>,
    /// Positions assigned a color, over the whole tree.
    pub nodes_explored: u64,
    /// Complete colorings with exactly `r` colors that were reached.
    pub leaves: u64,
    pub elapsed: Duration,
}

impl Verdict {
    pub fn is_all_good(&self) -> bool {
        self.outcome == Outcome::AllGood
    }
}

/// Result of [`ColoringSearch::min_colors`], with the statistics that
/// [`search_rs`] drops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsSearch {
    pub number: ComputedNumber,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// Counterexample found at each `r` below the answer, in increasing `r`.
    pub counterexamples: Vec<Coloring>,
}

enum Halt {
    Budget(String),
    Cancelled,
}

struct Limits<'a> {
    max_nodes: u64,
    deadline: Option<Instant>,
    // nodes spent before this run started (earlier radii)
    spent: u64,
    shared: &'a AtomicU64,
    stop: &'a AtomicBool,
}

struct Walker<'a> {
    index: &'a SolutionIndex,
    t: usize,
    r: u32,
    prune: bool,
    colors: Vec<u32>,
    // unflushed nodes
    local: u64,
    leaves: u64,
    deepest: usize,
    limits: &'a Limits<'a>,
    // when set, stop at this depth and record the prefix instead of descending
    split: Option<(usize, Vec<Prefix>)>,
}

/// Colors of a tree prefix and the number of colors it uses.
type Prefix = (Vec<u32>, u32);

/// Budget reason and deepest position reached.
type Halted = (String, usize);

impl<'a> Walker<'a> {
    fn new(search: &'a ColoringSearch, r: u32, limits: &'a Limits<'a>) -> Self {
        Walker {
            index: &search.index,
            t: search.t,
            r,
            prune: search.prune,
            colors: vec![0; search.n as usize],
            local: 0,
            leaves: 0,
            deepest: 0,
            limits,
            split: None,
        }
    }

    fn flush(&mut self) -> u64 {
        let total = self.limits.shared.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        total
    }

    fn tick(&mut self) -> Result<(), Halt> {
        self.local += 1;
        if self.local < CHECK_EVERY {
            return Ok(());
        }
        let total = self.flush();
        if self.limits.stop.load(Ordering::Relaxed) {
            return Err(Halt::Cancelled);
        }
        if self.limits.spent + total > self.limits.max_nodes {
            return Err(Halt::Budget(format!("node limit {}", self.limits.max_nodes)));
        }
        if let Some(deadline) = self.limits.deadline {
            if Instant::now() > deadline {
                return Err(Halt::Budget("time limit".into()));
            }
        }
        Ok(())
    }

    /// Does some solution with total `x` already carry `t` colors?
    fn bucket_qualifies(&self, x: u32) -> bool {
        self.index
            .bucket(x)
            .any(|terms| distinct_colors(&self.colors, terms.iter().copied().chain([x]), self.t) >= self.t)
    }

    fn walk(&mut self, pos: usize, used: u32) -> Result<bool, Halt> {
        let n = self.colors.len();
        if let Some((depth, prefixes)) = &mut self.split {
            if pos == *depth {
                prefixes.push((self.colors[..pos].to_vec(), used));
                return Ok(false);
            }
        }
        if pos == n {
            self.leaves += 1;
            if !self.prune && (1..=n as u32).any(|x| self.bucket_qualifies(x)) {
                return Ok(false);
            }
            return Ok(true);
        }
        self.deepest = self.deepest.max(pos + 1);
        let remaining_after = (n - pos - 1) as u32;
        let highest = (used + 1).min(self.r);
        for c in 1..=highest {
            let now_used = used.max(c);
            if now_used + remaining_after < self.r {
                continue;
            }
            self.tick()?;
            self.colors[pos] = c;
            if self.prune && self.bucket_qualifies(pos as u32 + 1) {
                continue;
            }
            if self.walk(pos + 1, now_used)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Search configuration for one `(m, t, n)`; the solution index is built
/// once and shared by every `r`.
#[derive(Debug, Clone)]
pub struct ColoringSearch {
    m: usize,
    t: usize,
    n: u32,
    index: SolutionIndex,
    prune: bool,
    split_depth: usize,
}

impl ColoringSearch {
    pub fn new(m: usize, t: usize, n: u32) -> Result<Self> {
        if m < 3 {
            return domain(format!("m must be at least 3 (got {m})"));
        }
        if t < 2 || t > m {
            return domain(format!("t must lie in [2, {m}] (got {t})"));
        }
        if n < 1 {
            return domain("n must be at least 1");
        }
        // a rainbow solution has pairwise distinct values
        let index = index_solutions_by_total(m, n, t == m)?;
        Ok(ColoringSearch {
            m,
            t,
            n,
            index,
            prune: true,
            split_depth: DEFAULT_SPLIT_DEPTH,
        })
    }

    /// Turn solution pruning off. Only the color-count bounds remain, so
    /// every exact `r`-coloring becomes a leaf; for testing.
    pub fn with_pruning(mut self, prune: bool) -> Self {
        self.prune = prune;
        self
    }

    /// Prefix depth at which the tree is split across threads.
    pub fn with_split_depth(mut self, depth: usize) -> Self {
        self.split_depth = depth.max(1);
        self
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn index(&self) -> &SolutionIndex {
        &self.index
    }

    /// Whether some solution in `[1, n]` can carry `t` colors at all, i.e.
    /// whether the all-singleton coloring qualifies.
    pub fn is_attainable(&self) -> bool {
        let singletons = Coloring::from_canonical((1..=self.n).collect()).expect("rgs");
        has_t_colored_solution_in(&singletons, &self.index, self.t).is_some()
    }

    /// Decide whether every exact `r`-coloring of `[1, n]` has a solution
    /// with at least `t` colors.
    pub fn all_colorings_good(&self, r: u32, budget: &SearchBudget) -> Result<Verdict> {
        self.run(r, budget, Instant::now(), 0)
    }

    fn run(&self, r: u32, budget: &SearchBudget, started: Instant, spent: u64) -> Result<Verdict> {
        if r < 1 || r > self.n {
            return domain(format!("r must lie in [1, {}] (got {r})", self.n));
        }
        let shared = AtomicU64::new(0);
        let stop = AtomicBool::new(false);
        let limits = Limits {
            max_nodes: budget.max_nodes,
            deadline: budget.time_limit.map(|d| started + d),
            spent,
            shared: &shared,
            stop: &stop,
        };
        let run_started = Instant::now();
        let fail = |reason: String, deepest: usize| Error::BudgetExceeded {
            reason,
            nodes: spent + shared.load(Ordering::Relaxed),
            deepest,
            elapsed: started.elapsed(),
        };

        let threads = budget.threads.max(1);
        let (found, leaves) = if threads == 1 || self.split_depth >= self.n as usize {
            let mut walker = Walker::new(self, r, &limits);
            let res = walker.walk(0, 0);
            walker.flush();
            match res {
                Ok(true) => (Some(walker.colors.clone()), walker.leaves),
                Ok(false) => (None, walker.leaves),
                Err(Halt::Budget(reason)) => return Err(fail(reason, walker.deepest)),
                Err(Halt::Cancelled) => unreachable!("nothing cancels a sequential search"),
            }
        } else {
            self.run_parallel(r, threads, &limits)
                .map_err(|(reason, deepest)| fail(reason, deepest))?
        };

        let witness = match found {
            Some(colors) => Some(Coloring::from_canonical(colors)?),
            None => None,
        };
        Ok(Verdict {
            outcome: if witness.is_some() {
                Outcome::Counterexample
            } else {
                Outcome::AllGood
            },
            witness,
            nodes_explored: shared.load(Ordering::Relaxed),
            leaves,
            elapsed: run_started.elapsed(),
        })
    }

    fn run_parallel(
        &self,
        r: u32,
        threads: usize,
        limits: &Limits<'_>,
    ) -> Result<(Option<Vec<u32>>, u64), Halted> {
        let mut splitter = Walker::new(self, r, limits);
        splitter.split = Some((self.split_depth, Vec::new()));
        let mut leaves = 0;
        let mut deepest;
        match splitter.walk(0, 0) {
            Ok(_) => {}
            Err(Halt::Budget(reason)) => return Err((reason, splitter.deepest)),
            Err(Halt::Cancelled) => unreachable!(),
        }
        splitter.flush();
        deepest = splitter.deepest;
        let prefixes = splitter.split.take().map(|(_, p)| p).unwrap_or_default();

        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| (format!("thread pool: {e}"), 0))?;
        let leaf_total = AtomicU64::new(0);
        let deepest_seen = AtomicU64::new(deepest as u64);
        let result = pool.install(|| {
            prefixes
                .par_iter()
                .map(|(prefix, used)| {
                    let mut walker = Walker::new(self, r, limits);
                    walker.colors[..prefix.len()].copy_from_slice(prefix);
                    let res = walker.walk(prefix.len(), *used);
                    walker.flush();
                    leaf_total.fetch_add(walker.leaves, Ordering::Relaxed);
                    deepest_seen.fetch_max(walker.deepest as u64, Ordering::Relaxed);
                    match res {
                        Ok(true) => {
                            limits.stop.store(true, Ordering::Relaxed);
                            Some(Ok(walker.colors))
                        }
                        Ok(false) | Err(Halt::Cancelled) => None,
                        Err(Halt::Budget(reason)) => {
                            limits.stop.store(true, Ordering::Relaxed);
                            Some(Err(reason))
                        }
                    }
                })
                .find_map_any(|x| x)
        });
        leaves += leaf_total.load(Ordering::Relaxed);
        deepest = deepest.max(deepest_seen.load(Ordering::Relaxed) as usize);
        match result {
            Some(Ok(colors)) => Ok((Some(colors), leaves)),
            Some(Err(reason)) => Err((reason, deepest)),
            None => Ok((None, leaves)),
        }
    }

    /// Least `r` such that every exact `r`-coloring is good, scanning
    /// `r = 2, 3, ...`. `None` when no solution can carry `t` colors.
    ///
    /// Stopping at the first good `r` is sound because merging two classes of
    /// a counterexample yields a counterexample with one color fewer.
    pub fn min_colors(&self, budget: &SearchBudget) -> Result<RsSearch> {
        let started = Instant::now();
        let mut nodes = 0;
        let mut counterexamples = Vec::new();
        if !self.is_attainable() {
            return Ok(RsSearch {
                number: ComputedNumber {
                    value: None,
                    method: Method::Search,
                    witness: None,
                },
                nodes_explored: 0,
                elapsed: started.elapsed(),
                counterexamples,
            });
        }
        // one color can never carry t >= 2 colors
        let mut witness = Coloring::from_canonical(vec![1; self.n as usize])?;
        counterexamples.push(witness.clone());
        for r in 2..=self.n {
            let verdict = self.run(r, budget, started, nodes)?;
            nodes += verdict.nodes_explored;
            match verdict.witness {
                None => {
                    return Ok(RsSearch {
                        number: ComputedNumber {
                            value: Some(u64::from(r)),
                            method: Method::Search,
                            witness: Some(witness),
                        },
                        nodes_explored: nodes,
                        elapsed: started.elapsed(),
                        counterexamples,
                    });
                }
                Some(w) => {
                    witness = w.clone();
                    counterexamples.push(w);
                }
            }
        }
        unreachable!("the all-singleton coloring qualifies, so r = n is good")
    }
}

/// Decide whether every exact `r`-coloring of `[1, n]` contains a solution
/// of `E_m` with at least `t` colors.
pub fn all_colorings_good(
    m: usize,
    t: usize,
    n: u32,
    r: u32,
    budget: &SearchBudget,
) -> Result<Verdict> {
    ColoringSearch::new(m, t, n)?.all_colorings_good(r, budget)
}

/// `RS_{t,m}(n)` by exhaustive search.
pub fn search_rs(m: usize, t: usize, n: u32, budget: &SearchBudget) -> Result<ComputedNumber> {
    Ok(ColoringSearch::new(m, t, n)?.min_colors(budget)?.number)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{construct_rainbow_lower, has_t_colored_solution};

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    // S(n, k) by the usual recurrence
    fn stirling2(n: u32, k: u32) -> u64 {
        let mut table = vec![vec![0u64; k as usize + 1]; n as usize + 1];
        table[0][0] = 1;
        for i in 1..=n as usize {
            for j in 1..=k as usize {
                table[i][j] = j as u64 * table[i - 1][j] + table[i - 1][j - 1];
            }
        }
        table[n as usize][k as usize]
    }

    #[test]
    fn single_partition_is_good() {
        let v = all_colorings_good(3, 3, 4, 4, &budget()).unwrap();
        assert_eq!(v.outcome, Outcome::AllGood);
        assert!(v.witness.is_none());
        // 1 + 3 = 4 is rainbow, so the only leaf is pruned at position 4
        assert_eq!(v.leaves, 0);
        let s = ColoringSearch::new(3, 3, 4).unwrap().with_pruning(false);
        assert_eq!(s.all_colorings_good(4, &budget()).unwrap().leaves, 1);
    }

    #[test]
    fn three_colors_on_four() {
        let v = all_colorings_good(3, 3, 4, 3, &budget()).unwrap();
        assert_eq!(v.outcome, Outcome::Counterexample);
        let w = v.witness.unwrap();
        assert_eq!(w.r(), 3);
        assert_eq!(has_t_colored_solution(&w, 3, 3).unwrap(), None);
        // classes {1,3} {2} {4}: the least restricted growth string without a
        // rainbow solution
        assert_eq!(w.colors(), &[1, 2, 1, 3]);
    }

    #[test]
    fn finds_the_block_construction() {
        let v = all_colorings_good(4, 4, 6, 5, &budget()).unwrap();
        assert_eq!(v.witness, Some(construct_rainbow_lower(4, 6).unwrap()));
    }

    #[test]
    fn small_values() {
        assert_eq!(search_rs(3, 3, 3, &budget()).unwrap().value, Some(3));
        assert_eq!(search_rs(4, 4, 6, &budget()).unwrap().value, Some(6));
        assert_eq!(search_rs(4, 3, 6, &budget()).unwrap().value, Some(4));
        let v = search_rs(6, 2, 6, &budget()).unwrap();
        assert!(v.value.unwrap() >= 4);
        let w = v.witness.unwrap();
        assert_eq!(u64::from(w.r()), v.value.unwrap() - 1);
        assert_eq!(has_t_colored_solution(&w, 6, 2).unwrap(), None);
    }

    #[test]
    fn unattainable_is_none() {
        let v = search_rs(4, 4, 5, &budget()).unwrap();
        assert_eq!(v.value, None);
        assert_eq!(v.method, Method::Search);
        assert_eq!(search_rs(5, 3, 4, &budget()).unwrap().value, None);
    }

    #[test]
    fn two_colors_witness_is_monochromatic() {
        let v = search_rs(4, 2, 6, &budget()).unwrap();
        assert_eq!(v.value, Some(2));
        assert_eq!(v.witness.unwrap().colors(), &[1; 6]);
    }

    #[test]
    fn unpruned_leaves_are_stirling_numbers() {
        for n in 1..=9 {
            for r in 1..=n {
                let s = ColoringSearch::new(3, 3, n).unwrap().with_pruning(false);
                let v = s.all_colorings_good(r, &budget()).unwrap();
                if v.is_all_good() {
                    assert_eq!(v.leaves, stirling2(n, r), "n={n} r={r}");
                }
                let pruned = ColoringSearch::new(3, 3, n).unwrap();
                let p = pruned.all_colorings_good(r, &budget()).unwrap();
                assert!(p.leaves <= stirling2(n, r));
                assert_eq!(p.outcome, v.outcome);
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let tight = SearchBudget {
            max_nodes: 100,
            ..SearchBudget::default()
        };
        let err = ColoringSearch::new(3, 3, 12)
            .unwrap()
            .all_colorings_good(5, &tight)
            .unwrap_err();
        match err {
            Error::BudgetExceeded { nodes, deepest, .. } => {
                assert!(nodes > 100);
                assert!(deepest > 0);
            }
            other => panic!("unexpected {other:?}"),
        }
        let timed = SearchBudget {
            time_limit: Some(Duration::ZERO),
            ..SearchBudget::default()
        };
        assert!(matches!(
            search_rs(3, 3, 24, &timed),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn parallel_outcome_matches_sequential() {
        let par = SearchBudget {
            threads: 4,
            ..SearchBudget::default()
        };
        for (m, t, n) in [(3, 3, 11), (4, 4, 10), (4, 3, 9), (5, 4, 9)] {
            let seq_search = ColoringSearch::new(m, t, n).unwrap();
            let par_search = seq_search.clone().with_split_depth(4);
            for r in 2..=n {
                let a = seq_search.all_colorings_good(r, &budget()).unwrap();
                let b = par_search.all_colorings_good(r, &par).unwrap();
                assert_eq!(a.outcome, b.outcome, "m={m} t={t} n={n} r={r}");
                if a.is_all_good() {
                    assert_eq!(a.leaves, b.leaves);
                }
                if let Some(w) = b.witness {
                    assert_eq!(w.r(), r);
                    assert!(has_t_colored_solution(&w, m, t).unwrap().is_none());
                }
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(ColoringSearch::new(2, 2, 5).is_err());
        assert!(ColoringSearch::new(4, 5, 5).is_err());
        assert!(ColoringSearch::new(4, 1, 5).is_err());
        assert!(ColoringSearch::new(4, 4, 0).is_err());
        let s = ColoringSearch::new(4, 4, 6).unwrap();
        assert!(s.all_colorings_good(0, &budget()).is_err());
        assert!(s.all_colorings_good(7, &budget()).is_err());
    }
}
