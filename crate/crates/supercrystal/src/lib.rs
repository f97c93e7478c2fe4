//! Combinatorics of graded-alphabet tableaux: hook semistandard tableaux,
//! matrix crystals with their biword codecs, symmetric-matrix RSK and
//! Burge-style insertion, two-rowed arrays with the doubling transform,
//! crystal operators in the three bracketing regimes, and the spinor-model
//! separation algorithm with its embedding into the matrix picture.
//!
//! The `examples/` directory carries one runnable example per capability;
//! the `supercrystal` binary exposes the same operations as subcommands.

pub mod alphabet;
pub mod array;
pub mod correspondence;
pub mod enumerate;
pub mod fixtures;
pub mod graph;
pub mod json;
pub mod matrix;
pub mod partition;
pub mod spinor;
pub mod tableau;
pub mod verify;
pub mod weight;
pub mod word;

pub use alphabet::{Alphabet, GType, Letter};
pub use partition::{hook_check, parity_family_check, Partition, SkewShape};
pub use tableau::{NormalTableau, Tableau};
pub use weight::{hook_weight, Weight};
