//! Explicit bijections between unit-step walks and factor-avoiding words.
//!
//! Two correspondences are implemented, each as a pair of mutually recursive
//! maps with inverses:
//!
//! * [`p1`]: walks on the path 1..7 from 1 to 4 of length 2n+4 versus words
//!   over {1..4} of length n avoiding the factors 13 and 24 (OEIS A007070).
//! * [`p2`]: words over {1,2,3} of length n+3 from 1 to 3 avoiding 13 and 31
//!   versus words of length n avoiding 13 and 1*3 (OEIS A048739).
//!
//! [`family`] enumerates the word sets, [`counting`] counts them exactly with
//! transfer automata, and [`verify`] checks everything exhaustively.

pub mod counting;
pub mod error;
pub mod family;
pub mod p1;
pub mod p2;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use family::{FamilyId, FamilySpec};
pub use verify::{Bijections, MapId};
pub use word::{Pattern, Word};
