//! Exact enumeration of annular non-crossing matchings.
//!
//! A matching of type `(a, b)` joins `a` points on the outer circle of an
//! annulus and `b` points on the inner circle by disjoint arcs, up to
//! isotopy. [`counting`] holds the closed forms, [`enumeration`] the
//! brute-force oracles that check them, and [`bijections`] the maps to
//! necklaces, Dyck words and planar graphs. [`table`], [`refdata`],
//! [`render`] and [`verify`] back the `annular` command-line tool.

pub mod bijections;
pub mod counting;
pub mod enumeration;
pub mod error;
pub mod model;
pub mod numtheory;
pub mod refdata;
pub mod render;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use model::AnnularMatching;
pub use numtheory::ExactInt;
