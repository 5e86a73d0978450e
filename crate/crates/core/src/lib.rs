//! Chiral partitions of `n`: those whose irreducible representation of the
//! symmetric group `S_n` has determinant equal to the sign character.
//!
//! The crate provides partition arithmetic on an abacus, 2-core towers,
//! the chirality predicates, closed-form counts, exhaustive enumeration and
//! exactly uniform sampling of chiral partitions, and the analogous
//! classification for the permutation representations `C[X_λ]`.
//!
//! ```
//! use chiral::{chirality, Partition};
//!
//! let lambda: Partition = "[5,4,2,2,1,1]".parse().unwrap();
//! assert_eq!(lambda.dimension(), 243243u32.into());
//! assert_eq!(chirality::count_chiral(9), 20u32.into());
//! let sample = chirality::sample_chiral_seeded(4097, None, 7).unwrap();
//! assert!(chirality::is_chiral(&sample));
//! ```
//!
//! Runnable tours of each capability live in the crate's `examples/`
//! directory (`cargo run -p chiral --example <name>`).

pub mod binary;
pub mod chirality;
pub mod cli;
mod error;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod tower;

pub use error::{Error, Result};
pub use partition::{FrobeniusCoords, Partition, Partitions};
pub use tower::{BinaryPath, CoreTower};
