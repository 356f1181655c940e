//! Exact colorings of `[1, n]` in canonical (restricted growth) form.
//!
//! Whether a coloring contains a solution with at least `t` colors depends
//! only on the partition into color classes, so a [`Coloring`] is always
//! stored with colors relabeled by first occurrence: integer 1 has color 1 and
//! every new color is one more than the largest seen so far.

mod construct;
mod detect;
mod io;

use std::fmt;

use crate::error::{domain, Error, Result};

pub use construct::{block_coloring, construct_rainbow_lower, construct_weak_lower};
pub use detect::{
    distinct_colors, has_t_colored_solution, has_t_colored_solution_in, max_solution_colors,
    max_solution_colors_in, SolutionColors,
};
pub use io::{parse_coloring, ColoringDocument};

/// An exact `r`-coloring of `[1, n]`, canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    // colors[i] is the color of integer i + 1
    colors: Vec<u32>,
    r: u32,
}

impl Coloring {
    /// Relabel arbitrary labels by first occurrence.
    pub fn canonicalize<L: Copy + Eq + std::hash::Hash>(raw: &[L]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut seen = std::collections::HashMap::with_capacity(raw.len().min(1024));
        let mut colors = Vec::with_capacity(raw.len());
        for label in raw {
            let next = seen.len() as u32 + 1;
            colors.push(*seen.entry(*label).or_insert(next));
        }
        let r = seen.len() as u32;
        Ok(Coloring { colors, r })
    }

    /// Accept `colors` only if it already is a restricted growth string.
    pub fn from_canonical(colors: Vec<u32>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut r = 0;
        for (i, &c) in colors.iter().enumerate() {
            if c == 0 || c > r + 1 {
                return domain(format!(
                    "not a restricted growth string: position {} has color {c} after {r} colors",
                    i + 1
                ));
            }
            r = r.max(c);
        }
        Ok(Coloring { colors, r })
    }

    /// Build from color classes listed as sets of integers in `[1, n]`.
    /// The classes must partition `[1, n]`.
    pub fn from_classes<C: AsRef<[u32]>>(n: u32, classes: &[C]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let mut labels = vec![0u32; n as usize];
        for (label, class) in classes.iter().enumerate() {
            for &x in class.as_ref() {
                if x == 0 || x > n {
                    return domain(format!("class member {x} outside [1, {n}]"));
                }
                if labels[x as usize - 1] != 0 {
                    return domain(format!("{x} appears in more than one class"));
                }
                labels[x as usize - 1] = label as u32 + 1;
            }
        }
        if let Some(i) = labels.iter().position(|&l| l == 0) {
            return domain(format!("{} belongs to no class", i + 1));
        }
        Self::canonicalize(&labels)
    }

    pub fn n(&self) -> u32 {
        self.colors.len() as u32
    }

    /// Number of colors used.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Colors of `1, 2, ..., n` in order.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Color of the integer `x`, `1 <= x <= n`.
    pub fn color_of(&self, x: u32) -> u32 {
        self.colors[x as usize - 1]
    }

    /// Color classes, each sorted, listed by color.
    pub fn classes(&self) -> Vec<Vec<u32>> {
        let mut classes = vec![Vec::new(); self.r as usize];
        for (i, &c) in self.colors.iter().enumerate() {
            classes[c as usize - 1].push(i as u32 + 1);
        }
        classes
    }

    /// Integers whose color already occurs at a smaller integer.
    pub fn surplus_integers(&self) -> Vec<u32> {
        let mut seen = vec![false; self.r as usize + 1];
        let mut out = Vec::new();
        for (i, &c) in self.colors.iter().enumerate() {
            if std::mem::replace(&mut seen[c as usize], true) {
                out.push(i as u32 + 1);
            }
        }
        out
    }

    /// Counts surplus integers directly; always `n - r` for an exact coloring.
    pub fn surplus_count(&self) -> usize {
        self.surplus_integers().len()
    }

    /// Unify classes `c1` and `c2` and re-canonicalize.
    pub fn merge_classes(&self, c1: u32, c2: u32) -> Result<Self> {
        if c1 == c2 {
            return domain(format!("cannot merge color {c1} with itself"));
        }
        for c in [c1, c2] {
            if c == 0 || c > self.r {
                return domain(format!("color {c} not in [1, {}]", self.r));
            }
        }
        let merged: Vec<u32> = self
            .colors
            .iter()
            .map(|&c| if c == c2 { c1 } else { c })
            .collect();
        Self::canonicalize(&merged)
    }

    /// Compact class listing such as `{1..4} {5} {6}`.
    pub fn class_summary(&self) -> String {
        let mut out = String::new();
        for (i, class) in self.classes().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push('{');
            let mut first = true;
            let mut j = 0;
            while j < class.len() {
                let mut k = j;
                while k + 1 < class.len() && class[k + 1] == class[k] + 1 {
                    k += 1;
                }
                if !first {
                    out.push(',');
                }
                first = false;
                if k >= j + 2 {
                    out.push_str(&format!("{}..{}", class[j], class[k]));
                } else {
                    out.push_str(
                        &class[j..=k]
                            .iter()
                            .map(u32::to_string)
                            .collect::<Vec<_>>()
                            .join(","),
                    );
                }
                j = k + 1;
            }
            out.push('}');
        }
        out
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Free-function form of [`Coloring::canonicalize`].
pub fn canonicalize<L: Copy + Eq + std::hash::Hash>(raw: &[L]) -> Result<Coloring> {
    Coloring::canonicalize(raw)
}

pub fn surplus_count(c: &Coloring) -> usize {
    c.surplus_count()
}

pub fn merge_classes(c: &Coloring, c1: u32, c2: u32) -> Result<Coloring> {
    c.merge_classes(c1, c2)
}
