//! Spectra of comb graphs, finite and with an infinite tail.
//!
//! A comb graph grafts a copy of a finger path of order `k` into every
//! vertex of a backbone path of order `n`. This crate computes the complete
//! spectrum of the finite comb graph from the Chebyshev factorization of its
//! characteristic polynomial, the discrete spectrum of the comb graph with a
//! one-sided infinite tail from the associated root equation, and
//! cross-validates everything against an independent brute-force
//! eigensolver oracle.
//!
//! Module map:
//! - [`graphs`]: paths, comb products, bridge couplings, tail truncations.
//! - [`chebyshev`]: monic Chebyshev polynomials of the second kind, the
//!   rational function `v_k`, Green's function, hyperbolic ratios.
//! - [`blockmat`]: inflations and Schur-complement determinant identities.
//! - [`finite_spectrum`]: the finite comb spectrum by root isolation.
//! - [`tail_spectrum`]: the discrete spectrum off the band [-2, 2].
//! - [`arith`]: exact-arithmetic irrationality certificates for the count
//!   formulas.
//! - [`eig_oracle`]: Jacobi-rotation and Sturm-bisection eigensolvers.
//! - [`cli`]: report rendering for the `combspec` binary.

pub mod arith;
pub mod blockmat;
pub mod chebyshev;
pub mod cli;
pub mod eig_oracle;
pub mod error;
pub mod finite_spectrum;
pub mod graphs;
pub mod matrix;
pub mod tail_spectrum;

pub use error::{Error, Result};
pub use finite_spectrum::SpectrumReport;
pub use graphs::{CombSpec, Graph};
pub use tail_spectrum::TailSpectrumReport;
