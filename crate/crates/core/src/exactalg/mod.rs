//! Exact coefficient rings and truncated half-power series.

pub mod bipoly;
pub mod interp;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod ring;
pub mod series;
pub mod tauexpr;

pub use bipoly::BiPoly;
pub use interp::rational_interpolate;
pub use poly::PolyK;
pub use ratfunc::{ratfunc_reduce, RatFuncK};
pub use rational::{q, Rational};
pub use ring::Ring;
pub use series::{series_ddx, series_mul, HalfSeries, QSeries, UNBOUNDED};
pub use tauexpr::TauExpr;
