//! Exact computation of shifted Bessel-Hankel determinants, their
//! differential-polynomial expansions in τ_k, the Taylor data of τ_k, and the
//! limiting joint-moment coefficients of CUE characteristic polynomials and
//! their derivatives.

pub mod error;
pub mod exactalg;

pub use error::{Error, Result};
pub mod young;
pub mod oracle;
pub mod shiftrec;
pub mod besselrec;
pub mod taylor;
pub mod moments;
pub mod suite;
