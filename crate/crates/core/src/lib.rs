//! Shortest and minimal absent subsequences of a word: enumeration with
//! constant or output-linear delay, counting, membership tests and a longest
//! minimal absent subsequence.

pub mod classify;
pub mod error;
pub mod index;
pub mod longest;
pub mod mas_direct;
pub mod mas_skeleton;
pub mod oracle;
pub mod range_max_set;
pub mod rmq;
pub mod sas;
pub mod script;
pub mod skeleton;
pub mod word;

pub use error::{Error, Result};
pub use index::{ArchFactorization, WordIndex};
pub use word::{AlphabetMode, Letter, Word};
