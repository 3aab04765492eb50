//! Fuzzy aggregation operators (t-norms, t-conorms, uninorms, nullnorms) and
//! exhaustive checkers for fuzzy submonoids, indistinguishability operators and
//! vague monoids on finite carriers and uniform grids of the unit interval.
//!
//! Exhaustive tuple searches run on rayon when the default `parallel` feature
//! is enabled and sequentially otherwise; either way the reported witness is
//! the lexicographically smallest failing tuple.

pub mod algebra;
pub mod connectives;
pub mod fuzzy_monoids;
pub mod numerics;
pub mod nullnorms;
pub mod operator;
pub mod par;
pub mod report;
pub mod sampling;
pub mod uninorms;
pub mod vague;
