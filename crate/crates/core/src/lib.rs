//! Exact discriminants, certified real-root isolation and singularity-aware
//! quadrature for the non-Gaussian integral
//!
//! ```text
//!     I(f) = ∫_R |f(x)|^(-2/n) dx,      deg f = n,
//! ```
//!
//! together with the tooling needed to check its closed form for cubics,
//!
//! ```text
//!     I(f) = C₋ / (-D)^(1/6)   for D < 0,   C₋ = 2^(1/3) B(1/2, 1/6),
//!     I(f) = C₊ / D^(1/6)      for D > 0,   C₊ = 3 B(1/3, 1/3) = √3 C₋,
//! ```
//!
//! where `D` is the discriminant of `f`.
//!
//! Module map:
//!
//! * [`exact_poly`]: dense univariate polynomials over `BigRational`,
//!   Sylvester resultants, discriminants, power sums and the cubic identities.
//! * [`symbolic`]: sparse multivariate integer polynomials and the fully
//!   expanded general discriminant in the coefficients `a0..an`.
//! * [`roots`]: Sturm sequences, certified isolation and refinement.
//! * [`quadrature`]: tanh-sinh quadrature and the integral engine.
//! * [`specfun`]: Gamma, Beta and the constants `C₋`, `C₊`.
//! * [`verify`]: seeded verification sweeps and the orbit exploration harness.
//!
//! Coefficients are always ordered highest degree first, `a0, a1, ..., an`.

pub mod error;
pub mod exact_poly;
pub mod quadrature;
pub mod rational;
pub mod roots;
pub mod specfun;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
pub use exact_poly::{CubicData, Polynomial, RationalMatrix};
pub use quadrature::{IntegralResult, QuadratureOptions};
pub use roots::{Interval, IsolationResult};
pub use symbolic::{SymMatrix, SymPoly};
