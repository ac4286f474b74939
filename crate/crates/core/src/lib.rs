//! Exact computation of descent-generating polynomials of labeled posets.
//!
//! The crate is organised bottom-up:
//!
//! - [`poset`]: labeled partial orders on `{1, ..., p}` and the chain families.
//! - [`linext`]: linear-extension enumeration, descent tallies and an
//!   order-ideal counting oracle.
//! - [`closed`]: closed forms for disjoint chains, `P_{m,n}` and the
//!   Eulerian polynomials.
//! - [`realroots`]: Sturm sequences, squarefree decomposition, root
//!   isolation and a floating refiner for non-real roots.
//! - [`asymptotics`]: the scaled polynomials `f_{m,n}`, the entire function
//!   `F(z) = sum z^k / (k!)^2` and the order-zero Bessel series.
//! - [`search`]: grid scans over `(m, n)` for non-real-rooted `W(P_{m,n})`.

pub mod asymptotics;
pub mod closed;
mod error;
pub mod linext;
pub mod poly;
pub mod poset;
pub mod realroots;
pub mod search;

pub use error::{Error, Result};
pub use poly::{IntPolynomial, RatPolynomial};
pub use poset::{Permutation, Poset};
