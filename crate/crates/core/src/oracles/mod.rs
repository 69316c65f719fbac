//! Brute-force counters used as ground truth for the recurrence and the
//! generating functions. Each one refuses inputs whose search space exceeds a
//! caller-supplied ceiling.

mod dyck;
mod free_group;
mod tree;

pub use dyck::{
    all_paths, decompose_irreducible, enumerate_dyck, path_weight_poids, LatticePath, Step,
};
pub use free_group::{free_group_count, free_group_distribution, reduced_words, GroupWord, Letter};
pub use tree::{tree_walk_count, tree_walk_counts, TruncatedTree};

use num_bigint::BigUint;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_STATES: u64 = 10_000_000;

pub(crate) fn guard(needed: &BigUint, ceiling: u64) -> Result<()> {
    if *needed > BigUint::from(ceiling) {
        Err(Error::Infeasible {
            needed: needed.to_string(),
            ceiling,
        })
    } else {
        Ok(())
    }
}
