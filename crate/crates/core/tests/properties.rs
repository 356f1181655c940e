use proptest::prelude::*;

use rainbow_schur::coloring::{
    has_t_colored_solution, max_solution_colors, max_solution_colors_in, Coloring,
};
use rainbow_schur::numbers::{min_n_rainbow, min_n_weak, rs_formula, rs_weak_formula};
use rainbow_schur::solutions::{enumerate_solutions, index_solutions_by_total};

fn labels() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..12, 1..24)
}

proptest! {
    #[test]
    fn canonical_form_is_a_restricted_growth_string(raw in labels()) {
        let c = Coloring::canonicalize(&raw).unwrap();
        let mut max = 0;
        for &x in c.colors() {
            prop_assert!(x >= 1 && x <= max + 1);
            max = max.max(x);
        }
        prop_assert_eq!(max, c.r());
        prop_assert_eq!(Coloring::canonicalize(c.colors()).unwrap(), c.clone());
        // same partition: positions share a label iff they share a color
        for i in 0..raw.len() {
            for j in 0..raw.len() {
                prop_assert_eq!(raw[i] == raw[j], c.colors()[i] == c.colors()[j]);
            }
        }
        prop_assert_eq!(c.surplus_count(), raw.len() - c.r() as usize);
    }

    #[test]
    fn renaming_colors_changes_nothing(raw in labels(), shift in 1u8..200, m in 3usize..7) {
        let renamed: Vec<u8> = raw.iter().map(|&x| x.wrapping_mul(7).wrapping_add(shift)).collect();
        let a = Coloring::canonicalize(&raw).unwrap();
        let b = Coloring::canonicalize(&renamed).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(
            max_solution_colors(&a, m, None).unwrap().colors,
            max_solution_colors(&b, m, None).unwrap().colors
        );
    }

    #[test]
    fn merging_drops_one_color_and_never_adds_any(raw in labels(), m in 3usize..7, a in 1u32..12, b in 1u32..12) {
        let c = Coloring::canonicalize(&raw).unwrap();
        prop_assume!(a != b && a <= c.r() && b <= c.r());
        let merged = c.merge_classes(a, b).unwrap();
        prop_assert_eq!(merged.r(), c.r() - 1);
        prop_assert_eq!(merged.surplus_count(), c.surplus_count() + 1);
        prop_assert!(
            max_solution_colors(&merged, m, None).unwrap().colors
                <= max_solution_colors(&c, m, None).unwrap().colors
        );
    }

    #[test]
    fn rainbow_detection_only_needs_distinct_solutions(raw in labels(), m in 3usize..7) {
        let c = Coloring::canonicalize(&raw).unwrap();
        let multiset = index_solutions_by_total(m, c.n(), false).unwrap();
        let full = max_solution_colors_in(&c, &multiset, None).colors >= m;
        let restricted = has_t_colored_solution(&c, m, m).unwrap();
        prop_assert_eq!(full, restricted.is_some());
        if let Some(sol) = restricted {
            prop_assert!(sol.is_distinct());
        }
    }

    #[test]
    fn detection_agrees_with_max(raw in labels(), m in 3usize..7, t in 2usize..7) {
        prop_assume!(t <= m);
        let c = Coloring::canonicalize(&raw).unwrap();
        let max = max_solution_colors(&c, m, None).unwrap().colors;
        prop_assert_eq!(has_t_colored_solution(&c, m, t).unwrap().is_some(), max >= t);
    }

    #[test]
    fn rainbow_formula_steps_by_zero_or_one(m in 4u64..60, offset in 0u64..100_000) {
        let n = min_n_rainbow(m).unwrap() + offset;
        let step = rs_formula(m, n + 1).unwrap() - rs_formula(m, n).unwrap();
        prop_assert!(step <= 1);
    }

    #[test]
    fn weak_formula_is_monotone_in_t(m in 4u64..30, a in 0u64..1000, b in 0u64..1000, extra in 0u64..10_000) {
        let (t1, t2) = (3 + a % (m - 2), 3 + b % (m - 2));
        let (t1, t2) = (t1.min(t2), t1.max(t2));
        let n = min_n_weak(t1, m).unwrap().max(min_n_weak(t2, m).unwrap()) + extra;
        prop_assert!(rs_weak_formula(t1, m, n).unwrap() <= rs_weak_formula(t2, m, n).unwrap());
        if n >= 2 * m - 4 {
            prop_assert!(rs_weak_formula(2, m, n).unwrap() <= rs_weak_formula(t1, m, n).unwrap());
        }
    }

    #[test]
    fn weak_formula_at_full_t_is_rainbow(m in 4u64..40, extra in 0u64..5_000) {
        let n = min_n_rainbow(m).unwrap() + extra;
        prop_assert_eq!(rs_weak_formula(m, m, n).unwrap(), rs_formula(m, n).unwrap());
    }

    #[test]
    fn three_colors_give_m(m in 4u64..40, extra in 0u64..5_000) {
        let n = min_n_weak(3, m).unwrap() + extra;
        prop_assert_eq!(rs_weak_formula(3, m, n).unwrap(), m);
    }

    #[test]
    fn formula_stays_in_range(m in 4u64..40, a in 0u64..1000, extra in 0u64..5_000) {
        let t = 3 + a % (m - 2);
        let n = min_n_weak(t, m).unwrap() + extra;
        let v = rs_weak_formula(t, m, n).unwrap();
        prop_assert!(v >= 2 && v <= n);
    }
}

#[test]
fn formula_equals_n_just_above_threshold() {
    for m in 4..=60u64 {
        let base = min_n_rainbow(m).unwrap();
        for i in 0..=m - 3 {
            assert_eq!(rs_formula(m, base + i).unwrap(), base + i, "m={m} i={i}");
        }
        assert!(rs_formula(m, base + m - 2).unwrap() < base + m - 2);
    }
}

#[test]
fn four_term_specialization() {
    for n in min_n_rainbow(4).unwrap()..2000 {
        assert_eq!(rs_formula(4, n).unwrap(), (n + 7) / 2);
    }
}

#[test]
fn solution_lists_nest_as_n_grows() {
    for m in 3..=6 {
        let big: Vec<_> = enumerate_solutions(m, 25, false).unwrap().collect();
        for n in 1..25 {
            let small: Vec<_> = enumerate_solutions(m, n, false).unwrap().collect();
            assert_eq!(&big[..small.len()], &small[..]);
            assert!(big[small.len()..].iter().all(|s| s.total > n));
        }
    }
}
