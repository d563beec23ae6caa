//! Model checking for Ramsey quantifiers over finite relational models:
//! threshold functions and their classification, homogeneous-set engines,
//! a strategy-dispatching evaluator and parameter-preserving reductions.

pub mod structures;
pub mod evaluator;
pub mod reductions;
pub mod solvers;
pub mod threshold;
