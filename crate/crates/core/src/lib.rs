//! Combinatorics of iterated localizations over a finite poset of primes.
//!
//! A tuple of subsets `(A1, .., Ak)` of a finite poset names the composite
//! of localizations at each `Ai`. This crate reduces tuples to a canonical
//! collapsed concatenated form, computes their thread-set families, combines
//! families with the composition product, and classifies tuples into normal
//! forms on the shapes where thread sets decide the composite.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod catalog;
pub mod classify;
mod error;
pub mod family;
mod poset;
mod subset;
pub mod tuple;

pub use catalog::{catalog, CatalogEntry};
pub use classify::{normal_form, shape_of, NormalForm, Shape};
pub use error::{Error, Result};
pub use family::{star, thread_set_family, w, ChainFamily, Thread};
pub use poset::{Chain, Chains, Poset};
pub use subset::{Subset, MAX_ELEMENTS};
pub use tuple::{beta, canonical, delta, gamma, tau, SubsetTuple};
