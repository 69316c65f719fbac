//! Exact counts of walks on m-regular trees and of weighted Dyck paths.
//!
//! The same numbers are produced three ways: the recurrence table in
//! [`recurrence`], coefficients of algebraic generating functions in
//! [`series`], and brute-force enumeration in [`oracles`]. [`verify`] runs the
//! cross-checks between them.

pub mod error;
pub mod numeric;
pub mod oracles;
pub mod recurrence;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use numeric::{Nat, Rat};
pub use recurrence::{build_table, mass_check, tree_weights, walk_count, WalkTable, WeightConfig};
pub use series::PowerSeries;
