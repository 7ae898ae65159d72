//! Exact-arithmetic construction of product Daniell integrals on concrete
//! Riesz spaces.
//!
//! Two elementary worlds are provided: exact rational vectors on finite index
//! sets ([`finite`]) and 1-D step functions on half-open rational intervals
//! ([`step`]). Tensor products of step spaces flatten to 2-D grid functions
//! ([`tensor`]), where the product integral and both iterated-integral orders
//! are evaluated exactly ([`product`]). The dominated-convergence closure is
//! handled by membership certificates — witness trees whose limits are
//! evaluated with error certificates ([`closure`]) — and every integral
//! instantiation can be run through the axiom harness ([`axioms`]).
//!
//! All scalars are arbitrary-precision rationals; identities like
//! `I(f⊗g) = J(f)·K(g)` and the equality of the two iterated integrals are
//! checked as exact equalities, never up to a tolerance.

pub mod axioms;
pub mod closure;
pub mod error;
pub mod feasibility;
pub mod finite;
pub mod product;
pub mod rat;
pub mod report;
pub mod riesz;
pub mod runner;
pub mod scenario;
pub mod step;
pub mod tensor;

pub use error::Error;
pub use rat::Rat;
