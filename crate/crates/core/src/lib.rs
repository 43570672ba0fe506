//! A finite-investor variant of the binomial asset-price model.
//!
//! The market holds `N` investors split into ordered groups. Each step picks
//! one investor uniformly at random; picking a member of group `h` multiplies
//! the price by that group's factor and permanently retires the investor,
//! while picking an already-inactive investor leaves the price unchanged.
//! This crate computes the moments of the terminal logarithmic return
//! `log(p(t)/p(0))` four independent ways and fits model parameters to
//! target moments:
//!
//! - [`moments`] — closed-form moments for finite `N`, the infinite-investor
//!   limit, and the classical binomial model, generic over an exact rational
//!   or floating-point backend.
//! - [`oracle`] — brute-force ground truth: exhaustive path enumeration with
//!   exact rational weights, direct binomial expectations, and compound
//!   Poisson moments.
//! - [`simulate`] — reproducible Monte Carlo sampling of the process.
//! - [`fit`] — maps target sample moments onto model parameters through a
//!   cumulant Hankel pencil (roots become log price factors, Poisson weights
//!   become group sizes).
//!
//! The `bullbear` binary exposes all of this as batch subcommands; see
//! [`cli`].

pub mod cli;
pub mod fit;
pub mod model;
pub mod moments;
pub mod numerics;
pub mod oracle;
pub mod simulate;
