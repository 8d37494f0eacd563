//! Deterministic generation of parametric homework question pools.
//!
//! The crate is `no_std` (it needs `alloc`) and contains everything that is a
//! pure function of its inputs:
//!
//! * [`exactmath`]: reduced rationals, radical sums, small integer
//!   polynomials and the accepted-answer spellings built from them.
//! * [`stats_sim`]: seeded per-question random streams, bivariate normal
//!   sampling and the small statistical helpers the generators rely on.
//! * [`templates`]: the question families, the family registry and pool
//!   assembly.
//! * [`render`]: SVG figures (scatterplots, lattice trapezoids, histograms and
//!   typeset radical expressions).
//! * [`emit`]: the FMB text dialect (emitter and strict parser) and the HTML
//!   pool document.
//! * [`assess`]: least-squares fits over homework/course grade pairs.
//!
//! File IO, CSV ingestion and the command line live in the `qbank` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod assess;
pub mod emit;
mod error;
pub mod exactmath;
pub mod render;
pub mod stats_sim;
pub mod templates;

pub use error::{Error, ParseError, Result};
