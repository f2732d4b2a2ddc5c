//! Exact machinery for configuration results on extremal even unimodular
//! lattices of rank `40r`, `r = 1, 2, 3`.
//!
//! The crate never touches floating point. Scalars are arbitrary-precision
//! rationals, series are truncated `q`-expansions, and the linear systems
//! in the shell counts `N_j`, `M_j` carry polynomial entries in the norm
//! parameter `t` of a hypothetical minimal class representative.
//!
//! Module map:
//!
//! * [`exactmath`]: rationals, polynomials in `t`, truncated series,
//!   polynomial matrices with two determinant algorithms, rational roots.
//! * [`modforms`]: `E4`, `E6`, `Δ`, monomial bases of `M_k`, extremal theta
//!   series and the leading coefficients of the cusp forms `Δ^{2r}`,
//!   `E4·Δ^{2r}`.
//! * [`harmonics`]: Gegenbauer/zonal polynomials, sphere moments, and the
//!   translation of shell sums into rows over the unknowns.
//! * [`configsystem`]: the extended linear system, its determinant, factor
//!   matching and the theorem verdict.
//! * [`latoracle`]: explicit Gram lattices (E8, E8⊕E8, D16⁺) with exact
//!   short-vector enumeration, used as ground truth.

pub mod configsystem;
pub mod error;
pub mod exactmath;
pub mod harmonics;
pub mod latoracle;
pub mod modforms;

pub use error::{Error, Result};
pub use exactmath::{PolyMatrix, PolyT, QSeries, Rational};
