//! Generalized trigonometric and hyperbolic functions of the one-dimensional
//! p-Laplacian.
//!
//! The inverse functions `arcsin_p`, `arccos_p`, `arctan_p`, `arsinh_p` and
//! `artanh_p` are evaluated through Gauss hypergeometric series (with
//! expansions about the singular endpoint close to it); the forward
//! functions are recovered by safeguarded Newton inversion. [`ineq`] holds
//! a registry of inequalities and identities for these functions that can
//! be swept over parameter grids, and [`eigen`] checks the Dirichlet
//! eigenpairs of the p-Laplacian numerically.

pub mod constants;
pub mod eigen;
pub mod error;
pub mod forward;
pub mod ineq;
pub mod inverse;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
