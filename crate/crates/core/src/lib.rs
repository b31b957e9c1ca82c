//! Exact treedepth solver.
//!
//! Computes the treedepth of an undirected graph together with an optimal
//! treedepth decomposition. The search branches on small minimal separators
//! behind a memoized decision procedure, after treedepth-preserving
//! preprocessing, with a chordal triangulation heuristic providing upper
//! bounds and several structural lower bounds pruning the recursion.

pub mod bounds;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod preprocess;
pub mod separators;
pub mod solver;
pub mod upper_bound;
pub mod vset;

pub use graph::{Component, Graph};
pub use io::{emit_tree, parse_gr, PaceInstance, ParseError};
pub use separators::{BudgetExceeded, Separator, SeparatorFamily, DEFAULT_SEPARATOR_BUDGET};
pub use solver::{
    solve, solve_with, verify, DecideResult, Decomposition, Mode, SolveConfig, SolveOutcome,
    SolveStats, Solver,
};
pub use vset::VertexSet;
