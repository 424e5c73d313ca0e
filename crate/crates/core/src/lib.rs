//! Exact spectral analysis, switching classification and cospectral search
//! for signed directed graphs, viewed as gain graphs over the sixth roots of unity.

pub mod canonical;
pub mod census;
pub mod classify;
pub mod eis;
pub mod error;
pub mod expansions;
pub mod iso;
mod modular;
pub mod named;
pub mod poly;
pub mod reproduce;
pub mod sachs;
pub mod sdg;
pub mod spectra;
pub mod switching;

pub use eis::{EisensteinRational, Unit};
pub use error::{Error, Result};
pub use modular::char_poly_modular;
pub use poly::{IntPolynomial, RootCensus};
pub use sdg::{SignedDigraph, UnderlyingGraph, VertexCycle};
