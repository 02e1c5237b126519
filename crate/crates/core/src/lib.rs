//! Desk-scale workbench for resource-bounded universal induction.
//!
//! The crate is organized around a tiny prefix-free reference machine
//! (`refmachine`), a causal cost-graph model of its executions
//! (`costgraph`), exact-rational approximations of the universal prior
//! (`mixture`), Levin search with pluggable resource metrics (`search`),
//! sequence and operator induction (`induction`), and complexity /
//! physical-limit calculators (`complexity`).

pub mod bits;
pub mod complexity;
pub mod costgraph;
pub mod induction;
pub mod mixture;
pub mod rational;
pub mod refmachine;
pub mod search;
pub mod units;

pub use bits::Bits;
pub use rational::Rat;
