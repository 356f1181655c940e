//! Rainbow Schur numbers for the equation `x_1 + x_2 + ... + x_{m-1} = x_m`.
//!
//! `RS_m(n)` is the least `r` such that every exact `r`-coloring of
//! `[1, n]` (every color used) contains a solution whose `m` values all get
//! different colors. The weakened number `RS_{t,m}(n)` asks only for a
//! solution carrying at least `t` colors; `RS_{m,m} = RS_m`.
//!
//! The crate provides
//!
//! - closed forms for both numbers and their thresholds ([`numbers`]),
//! - enumeration of the equation's solutions ([`solutions`]),
//! - exact colorings, the extremal block colorings, and detection of
//!   qualifying solutions ([`coloring`]),
//! - an exhaustive search oracle that computes the numbers without using any
//!   formula ([`oracle`]),
//! - the `rschur` command-line front end ([`cli`]).
//!
//! ```
//! use rainbow_schur::{numbers, oracle};
//!
//! assert_eq!(numbers::rs_formula(4, 10).unwrap(), 8);
//! let found = oracle::search_rs(4, 4, 10, &oracle::SearchBudget::default()).unwrap();
//! assert_eq!(found.value, Some(8));
//! ```

pub mod cli;
pub mod coloring;
mod error;
pub mod numbers;
pub mod oracle;
pub mod solutions;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use numbers::{ComputedNumber, Method, ProblemParams};
pub use oracle::{SearchBudget, Verdict};
pub use solutions::SchurSolution;
