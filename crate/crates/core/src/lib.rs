//! Exact local factors for the Asai cube representation of `GL(2)` over an
//! étale cubic algebra `E/F`, for a non-archimedean base field `F` and
//! unramified data.
//!
//! Everything is computed symbolically: values are rational functions in
//! `u = q^{-1/2}`, `T = q^{-s}`, and the Satake parameters `a1,b1,a2,b2,a3,b3`
//! with exact rational (or cyclotomic) coefficients. The two routes to the
//! γ-factor — the Weil–Deligne side assembled from Euler factors, and the
//! doubling-type zeta-integral side summed in closed form — are kept
//! independent so each can check the other.
//!
//! Module map:
//! - [`symbolic`]: multivariate Laurent polynomials and rational functions.
//! - [`cyclotomic`]: exact arithmetic in `Q(ζ_{p^k})` for additive-character values.
//! - [`padic`]: local field elements, additive/multiplicative character
//!   evaluation, Hilbert symbols, discriminant classes.
//! - [`schwartz`]: Schwartz–Bruhat functions on `F²` and the Weil representation.
//! - [`whittaker`]: Whittaker families, the spherical (Shintani) formula, and
//!   the uniform asymptotic-bound report.
//! - [`shapes`]: the four étale-cubic shapes and unramified representation data.
//! - [`factors`]: Weil–Deligne-side L/ε/γ-factors, transformation laws, and the
//!   correction factor.
//! - [`induced`]: monomial-matrix model of the 8-dimensional Asai
//!   representation, used as an independent L-factor oracle.
//! - [`zeta`]: the tame-cubic unramified zeta integral in exact closed form,
//!   its dual, γ via the functional-equation ratio, and a truncated numeric
//!   oracle.

pub mod cyclotomic;
pub mod factors;
pub mod induced;
pub mod padic;
pub mod schwartz;
pub mod shapes;
pub mod symbolic;
pub mod whittaker;
pub mod zeta;

pub use cyclotomic::Cyclotomic;
pub use padic::{DiscriminantClass, FieldTag, LocalFieldElement};
pub use shapes::{AsaiRepData, CubicShape, SatakeData, UnramChar};
pub use symbolic::{LaurentPoly, LaurentRational, Monomial, Var};
