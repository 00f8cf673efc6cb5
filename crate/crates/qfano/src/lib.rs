//! Exact arithmetic in the restricted small quantum cohomology ring of
//! Fano complete intersections in projective space.
//!
//! The library computes, over exact rationals:
//!
//! * scalar invariants of a complete intersection `X ⊂ P^{r+L}` of
//!   dimension `r ≥ 3` and degrees `m_1, …, m_L` ([`space`]);
//! * all genus-0 two-point hyperplane descendant Gromov–Witten
//!   invariants of `X`, by recursion from a hypergeometric base case
//!   ([`gw`]);
//! * the restricted quantum ring `QH^*(X)^res` in the `H^{⋆i}` basis
//!   and, on the index-1 boundary, in the shifted `(H + m!q)^{⋆i}`
//!   basis ([`qring`]);
//! * the quantum Euler class by closed formula and by the constructive
//!   diagonal route, cross-checked against each other ([`euler`]);
//! * virtual Tevelev degrees by direct ring arithmetic and by closed
//!   formula ([`tevelev`]).
//!
//! Every identity the computation relies on can be re-checked at
//! runtime through [`verify`]. The `qfano` binary exposes all of the
//! above as subcommands; the `examples/` directory has one runnable
//! program per capability.

pub mod cli;
pub mod euler;
pub mod gw;
pub mod qring;
pub mod rational;
pub mod series;
pub mod space;
pub mod tevelev;
pub mod verify;

mod error;

pub use error::Error;
pub use rational::Rat;

pub type Result<T> = std::result::Result<T, Error>;
