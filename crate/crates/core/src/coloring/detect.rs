use crate::error::Result;
use crate::solutions::{enumerate_solutions, SchurSolution, SolutionIndex};

use super::Coloring;

/// Result of scanning a coloring's solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionColors {
    /// Largest color count found (or, with a target, the first count that met it).
    pub colors: usize,
    /// First solution, in enumeration order, attaining `colors`.
    pub witness: Option<SchurSolution>,
}

/// Number of distinct colors among `values` under `colors` (indexed by
/// integer minus one), stopping once `cap` is reached.
pub fn distinct_colors(colors: &[u32], values: impl IntoIterator<Item = u32>, cap: usize) -> usize {
    let mut seen: [u32; 16] = [0; 16];
    let mut spill = Vec::new();
    let mut count = 0;
    for x in values {
        let c = colors[x as usize - 1];
        let fresh = if count < seen.len() {
            !seen[..count].contains(&c)
        } else {
            !seen.contains(&c) && !spill.contains(&c)
        };
        if fresh {
            if count < seen.len() {
                seen[count] = c;
            } else {
                spill.push(c);
            }
            count += 1;
            if count >= cap {
                break;
            }
        }
    }
    count
}

fn scan<'a>(
    coloring: &Coloring,
    solutions: impl Iterator<Item = (u32, &'a [u32])>,
    target: Option<usize>,
) -> SolutionColors {
    let colors = coloring.colors();
    let cap = target.unwrap_or(usize::MAX);
    let mut best = SolutionColors {
        colors: 0,
        witness: None,
    };
    for (total, terms) in solutions {
        let k = distinct_colors(colors, terms.iter().copied().chain([total]), cap);
        if k > best.colors {
            best = SolutionColors {
                colors: k,
                witness: Some(SchurSolution {
                    total,
                    terms: terms.to_vec(),
                }),
            };
            if k >= cap {
                break;
            }
        }
    }
    best
}

/// Maximum number of colors on any multiset solution of `E_m` in `[1, n]`.
///
/// With `t_target`, the scan stops at the first solution carrying at least
/// that many colors and reports it. Returns 0 colors when there are no
/// solutions.
pub fn max_solution_colors(
    coloring: &Coloring,
    m: usize,
    t_target: Option<usize>,
) -> Result<SolutionColors> {
    let solutions = enumerate_solutions(m, coloring.n(), false)?;
    let mut buf = Vec::new();
    let colors = coloring.colors();
    let cap = t_target.unwrap_or(usize::MAX);
    let mut best = SolutionColors {
        colors: 0,
        witness: None,
    };
    for sol in solutions {
        buf.clear();
        buf.extend(sol.values());
        let k = distinct_colors(colors, buf.iter().copied(), cap);
        if k > best.colors {
            best = SolutionColors {
                colors: k,
                witness: Some(sol),
            };
            if k >= cap {
                break;
            }
        }
    }
    Ok(best)
}

/// As [`max_solution_colors`], but over a prebuilt index. Only solutions with
/// total at most `coloring.n()` are considered, so one index built for a
/// large `n` serves every smaller coloring.
pub fn max_solution_colors_in(
    coloring: &Coloring,
    index: &SolutionIndex,
    t_target: Option<usize>,
) -> SolutionColors {
    scan(coloring, index.iter_up_to(coloring.n()), t_target)
}

/// First solution (in enumeration order) with at least `t` colors, if any.
///
/// For `t >= m` only solutions with pairwise distinct values can qualify, so
/// only those are enumerated.
pub fn has_t_colored_solution(
    coloring: &Coloring,
    m: usize,
    t: usize,
) -> Result<Option<SchurSolution>> {
    let distinct = t >= m;
    let mut buf = Vec::new();
    for sol in enumerate_solutions(m, coloring.n(), distinct)? {
        buf.clear();
        buf.extend(sol.values());
        if distinct_colors(coloring.colors(), buf.iter().copied(), t) >= t {
            return Ok(Some(sol));
        }
    }
    Ok(None)
}

/// As [`has_t_colored_solution`] over a prebuilt index. The index may be in
/// either mode; a multiset index gives the same answer as a distinct one.
pub fn has_t_colored_solution_in(
    coloring: &Coloring,
    index: &SolutionIndex,
    t: usize,
) -> Option<SchurSolution> {
    let found = scan(coloring, index.iter_up_to(coloring.n()), Some(t));
    if found.colors >= t {
        found.witness
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{construct_rainbow_lower, construct_weak_lower};
    use crate::solutions::index_solutions_by_total;

    fn six_coloring() -> Coloring {
        Coloring::from_classes(6, &[vec![1, 2, 5, 6], vec![3], vec![4]]).unwrap()
    }

    fn singletons(n: u32) -> Coloring {
        Coloring::from_canonical((1..=n).collect()).unwrap()
    }

    fn sol(terms: &[u32], total: u32) -> SchurSolution {
        SchurSolution {
            total,
            terms: terms.to_vec(),
        }
    }

    #[test]
    fn distinct_color_counting() {
        let colors = [1, 2, 1, 3];
        assert_eq!(distinct_colors(&colors, [1, 3], usize::MAX), 1);
        assert_eq!(distinct_colors(&colors, [1, 2, 3, 4], usize::MAX), 3);
        assert_eq!(distinct_colors(&colors, [1, 2, 3, 4], 2), 2);
        let many: Vec<u32> = (1..=40).collect();
        assert_eq!(distinct_colors(&many, 1..=40, usize::MAX), 40);
    }

    #[test]
    fn six_coloring_is_monochromatic_on_solutions() {
        let c = six_coloring();
        let found = max_solution_colors(&c, 6, None).unwrap();
        assert_eq!(found.colors, 1);
        assert_eq!(found.witness, Some(sol(&[1, 1, 1, 1, 1], 5)));
        assert_eq!(has_t_colored_solution(&c, 6, 2).unwrap(), None);
    }

    #[test]
    fn singletons_are_rainbow() {
        let c = singletons(6);
        let found = max_solution_colors(&c, 4, None).unwrap();
        assert_eq!(found.colors, 4);
        assert_eq!(found.witness, Some(sol(&[1, 2, 3], 6)));
        assert_eq!(has_t_colored_solution(&c, 4, 4).unwrap(), Some(sol(&[1, 2, 3], 6)));
    }

    #[test]
    fn target_stops_early() {
        let c = singletons(10);
        let found = max_solution_colors(&c, 4, Some(2)).unwrap();
        assert_eq!(found.colors, 2);
        assert_eq!(found.witness, Some(sol(&[1, 1, 1], 3)));
    }

    #[test]
    fn no_solutions_means_zero() {
        let c = singletons(2);
        let found = max_solution_colors(&c, 4, None).unwrap();
        assert_eq!(found.colors, 0);
        assert!(found.witness.is_none());
    }

    #[test]
    fn constructions_avoid_qualifying_solutions() {
        let c = construct_rainbow_lower(4, 10).unwrap();
        assert!(max_solution_colors(&c, 4, None).unwrap().colors <= 3);
        assert_eq!(has_t_colored_solution(&c, 4, 4).unwrap(), None);
        let c = construct_weak_lower(3, 4, 10).unwrap();
        assert_eq!(has_t_colored_solution(&c, 4, 3).unwrap(), None);
    }

    #[test]
    fn merged_six_coloring_stays_monochromatic() {
        let c = six_coloring();
        for a in 1..=c.r() {
            for b in a + 1..=c.r() {
                let merged = c.merge_classes(a, b).unwrap();
                assert_eq!(max_solution_colors(&merged, 6, None).unwrap().colors, 1);
            }
        }
    }

    #[test]
    fn index_and_stream_agree() {
        let idx = index_solutions_by_total(5, 20, false).unwrap();
        let didx = index_solutions_by_total(5, 20, true).unwrap();
        for n in [10, 14, 20] {
            for c in [singletons(n), construct_rainbow_lower(5, u64::from(n)).unwrap()] {
                assert_eq!(
                    max_solution_colors_in(&c, &idx, None),
                    max_solution_colors(&c, 5, None).unwrap()
                );
                for t in 2..=5 {
                    let streamed = has_t_colored_solution(&c, 5, t).unwrap();
                    assert_eq!(has_t_colored_solution_in(&c, &idx, t).is_some(), streamed.is_some());
                    if t == 5 {
                        assert_eq!(has_t_colored_solution_in(&c, &didx, t), streamed);
                    }
                }
            }
        }
    }
}
