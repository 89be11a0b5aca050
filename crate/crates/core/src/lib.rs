//! Plane partitions, `N`-matrices and dual Grothendieck polynomials.
//!
//! The centre of the crate is a bijection between plane partitions with at
//! most `n` rows and entries at most `m`, and `n × m` matrices of nonnegative
//! integers, built from descent level sets. Around it sit:
//!
//! * [`plane`], [`partition`], [`matrix`], [`word`]: the value types and the
//!   plane-partition statistics (volume, trace, descents, up-hook volume,
//!   corner volume, column counts).
//! * [`bijection`]: the map, its inverse, the word embedding into strict
//!   tableaux, and longest weakly increasing subsequences.
//! * [`enumerate`]: exhaustive generators and exact counters.
//! * [`poly`] and [`symfun`]: exact sparse polynomials, truncated product
//!   series, Schur and dual Grothendieck polynomials, Jacobi–Trudi
//!   determinants.
//! * [`verify`]: named identity checks that compare an enumeration against a
//!   closed form, exactly.

pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod matrix;
pub mod partition;
pub mod plane;
pub mod poly;
pub mod symfun;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use matrix::NMatrix;
pub use partition::Partition;
pub use plane::{Cell, PlanePartition};
pub use word::Word;
