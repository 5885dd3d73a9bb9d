//! Clebsch-Gordan coefficients of the osp(1|2) superalgebra, computed three
//! independent ways and verified against each other at the level of exact
//! polynomial coefficients:
//!
//! - [`cgc`]: closed forms built from dual −1 Hahn polynomials,
//! - [`osp`]: a numerical oracle that diagonalizes the twisted tensor product
//!   with ladder operators (no closed form anywhere in the construction),
//! - [`wavefun`]: the position realization through Dunkl operators, where the
//!   coefficients appear in the expansion of polar-separated oscillator
//!   wavefunctions over Cartesian-separated ones.
//!
//! The coefficients of the coupling (μ₁,ε₁)⊗(μ₂,ε₂) are encoded by dual −1
//! Hahn polynomials ([`orthopoly`]), and their generating functions come in
//! four parity cases handled by [`genfun`], plus the su(1,1)/dual Hahn
//! analogue in [`su11`]. The [`verify`] module runs the full cross-check
//! sweeps and collects an erratum ledger of closed-form constants that
//! disagree with unitarity or with the oracle.
//!
//! Exact rational arithmetic ([`arith`], [`hyper`], [`poly`]) is used wherever
//! the quantities are rational; floating point enters only through square
//! roots and Γ-function normalizations at module boundaries.
//!
//! See the crate examples for runnable entry points into each capability:
//!
//! ```bash
//! cargo run --example cgc_table
//! cargo run --example dual_hahn
//! cargo run --example generating_functions
//! cargo run --example su11_dual_hahn
//! cargo run --example wavefunctions
//! cargo run --example dunkl_ladder
//! cargo run --example erratum_ledger
//! ```
//!
//! The `parabose` binary exposes the same functionality as the `cgc`,
//! `verify`, `genfun` and `wavefun` subcommands with JSON/CSV reports.

pub mod arith;
pub mod cgc;
pub mod commands;
pub mod genfun;
pub mod hyper;
pub mod orthopoly;
pub mod osp;
pub mod poly;
pub mod report;
pub mod su11;
pub mod verify;
pub mod wavefun;

pub use arith::Rational;
pub use osp::{CgcTable, Generator, RepLabel, RepPair, TensorState};
