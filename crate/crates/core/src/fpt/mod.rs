//! Parameterized exact solvers: a search tree in solution size and maximum
//! degree, dynamic programming over nice tree decompositions, and an integer
//! program over signed neighborhood diversity classes.

pub mod dp;
pub mod ilp;
pub mod params;
pub mod search;
pub mod snd;
pub mod treedec;

pub use dp::{dp_treewidth_delta, dp_treewidth_delta_containing};
pub use ilp::{ilp_solve, IlpModel};
pub use params::{analyze_parameters, ParameterReport};
pub use search::solve_k_delta;
pub use snd::{ilp_build, snd_min_alliance, snd_partition, SndPartition};
pub use treedec::{nice_decomposition, NiceTreeDecomposition, TreeDecomposition};
