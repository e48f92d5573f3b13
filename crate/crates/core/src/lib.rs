//! Exact summation of divergent formal power series.
//!
//! The base summation 𝔄 sends a power series `X(σ)` to `X(1)` whenever that
//! makes sense for a polynomial. This crate extends it to algebraic series
//! through their scalar polynomials: an annihilator `P(T)` of `X` with
//! coefficients in K[σ] is mapped coefficient-wise to K[t], and a series
//! whose normalized image is `(t − ρ)^m` (and which passes the absolute
//! algebraicity test) sums to `ρ`.
//!
//! Everything is exact. K is either ℚ or a prime field `F_p`.
//!
//! ```
//! use sigmasum::{expr, Config};
//!
//! let grandi = expr::evaluate_str("rat(1-s; 1-s^2)", &Config::default()).unwrap();
//! let result = sigmasum::addsum::univalent_sum(&grandi);
//! assert_eq!(result.value.unwrap().to_string(), "1/2");
//! ```

pub mod addsum;
pub mod algseries;
pub mod annpoly;
pub mod certificate;
pub mod closure;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod guess;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod scalar;
pub mod series;

pub use algseries::{AlgebraicSeries, Minimality};
pub use annpoly::AnnPoly;
pub use error::{Error, Result};
pub use expr::Config;
pub use poly::{ScalarPolynomial, SigmaPoly};
pub use scalar::{Field, Scalar};
pub use series::Series;
