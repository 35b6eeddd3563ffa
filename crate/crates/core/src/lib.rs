//! Tope decompositions along the symmetric cycle of the hypercube, and
//! exact counts of topes and of pairs of disjoint subsets by their
//! decomposition sizes.
//!
//! Topes of the `t`-cube are stored as sign vectors in `{±1}^t`; the
//! symmetric cycle `R` has vertices `R^k` for `0 <= k < 2t`, where `R^s`
//! (`s <= t`) is negative exactly on `[s]`.
//!
//! ```
//! use symcycle::hypercube::{decompose, q_size, GroundSize, SubsetMask, tope_from_negative_set};
//!
//! let t = GroundSize::new(5).unwrap();
//! let tope = tope_from_negative_set(t, SubsetMask::from_elements([2, 4]).unwrap()).unwrap();
//! assert_eq!(decompose(&tope).coords(), &[1, -1, 1, -1, 1]);
//! assert_eq!(q_size(&tope), 5);
//! ```

pub mod arith;
pub mod error;
pub mod hypercube;
pub mod identities;
pub mod oracle;
pub mod smirnov;
pub mod statistics;
pub mod verify;

pub use error::{Error, Result};

// The book chapters run as doctests so their snippets stay in sync with the
// code.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/topes.md")]
    mod topes {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/smirnov.md")]
    mod smirnov {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    mod statistics {}
    #[doc = include_str!("../../../book/src/accuracy.md")]
    mod accuracy {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
