//! Exact scalar, polynomial, series and polynomial-matrix arithmetic.

mod factor;
pub mod linalg;
mod matrix;
mod poly;
mod rational;
mod roots;
mod series;

pub use factor::{divisors, factorize};
pub use matrix::PolyMatrix;
pub use poly::PolyT;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use roots::rational_roots;
pub use series::QSeries;
