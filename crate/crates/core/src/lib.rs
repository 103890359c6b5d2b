//! Computational toolkit for graph Ramsey theory at desk scale.
//!
//! * [`graph`], [`spec`], [`canon`], [`graph6`]: small immutable graphs,
//!   the `S5+S2` / `122K2` notation, canonical forms and graph6 I/O.
//! * [`arrow`]: deciding `F → (G, H)` and Ramsey-minimality.
//! * [`density`]: exact `ρ`, `m₂` and the asymmetric `m₂(G, H)`.
//! * [`classify`]: Ramsey-finite / Ramsey-infinite verdicts with a rule trail.
//! * [`enumerate`]: isomorph-free generation and catalogues of minimal graphs.
//! * [`random`]: coupled `G(n, p)` experiments along `p = c·n^{-1/m₂(G,H)}`.

pub mod arrow;
pub mod canon;
pub mod classify;
pub mod density;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod random;
pub mod spec;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
