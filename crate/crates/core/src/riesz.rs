//! Riesz-space and integral contracts.
//!
//! A Riesz space here is a vector space of real-valued functions closed under
//! the pointwise absolute value, with sup/inf derived from `+`, scalar
//! multiplication and `|·|`. An integral on such a space is a linear,
//! monotone functional that is continuous along decreasing chains with
//! pointwise infimum zero; the axiom harness in [`crate::axioms`] checks all
//! four conditions on concrete instantiations instead of assuming them.

use num::One;

use crate::error::Error;
use crate::rat::{rat, Rat};

/// Element contract every concrete space implements.
///
/// `sup`/`inf` are not primitive: they derive from the three primitives via
/// the lattice identities, see [`derive_lattice_ops`].
pub trait RieszElement: Clone + PartialEq + std::fmt::Debug {
    /// Pointwise sum; fails when the elements live over different domains.
    fn try_add(&self, other: &Self) -> Result<Self, Error>;

    /// Pointwise scalar multiple.
    fn scale(&self, r: &Rat) -> Self;

    /// Pointwise absolute value.
    fn abs(&self) -> Self;

    /// Exact pointwise `self ≤ other` over the whole domain.
    fn try_pointwise_leq(&self, other: &Self) -> Result<bool, Error>;

    /// The zero element of the same space as `self`.
    fn zero_like(&self) -> Self;

    fn neg(&self) -> Self {
        self.scale(&-Rat::one())
    }

    fn try_sub(&self, other: &Self) -> Result<Self, Error> {
        self.try_add(&other.neg())
    }

    /// `self ≥ 0` pointwise.
    fn is_nonnegative(&self) -> bool {
        let z = self.zero_like();
        z.try_pointwise_leq(self).unwrap_or(false)
    }
}

/// A Daniell integral on one concrete space.
pub trait DaniellIntegral {
    type Element: RieszElement;

    /// Exact value of the integral; fails only on domain mismatch.
    fn integrate(&self, f: &Self::Element) -> Result<Rat, Error>;

    /// Opaque identity label, used in reports and error messages.
    fn descriptor(&self) -> String;
}

/// Pointwise evaluation, used by certificate evaluation and by test oracles.
pub trait PointwiseEval {
    type Point: Clone + std::fmt::Debug;

    /// Exact value at a point; fails only for out-of-domain points on finite
    /// index sets (unbounded carriers evaluate to 0 outside support).
    fn value_at(&self, p: &Self::Point) -> Result<Rat, Error>;
}

/// Elements that support pointwise application of a scalar map, as needed by
/// the √-polynomial certificates. Maps applied to bounded-support carriers
/// must fix 0 so the result stays in the space.
pub trait AlgebraElement: RieszElement + PointwiseEval {
    fn map_values(&self, f: &dyn Fn(&Rat) -> Rat) -> Self;

    /// Indicator of the support, scaled by `lambda`.
    fn scaled_support_unit(&self, lambda: &Rat) -> Self {
        let lambda = lambda.clone();
        self.map_values(&move |v| {
            if v == &Rat::from_integer(0.into()) {
                Rat::from_integer(0.into())
            } else {
                lambda.clone()
            }
        })
    }
}

/// sup and inf from the lattice identities
/// `sup = (f+g+|f−g|)/2`, `inf = (f+g−|f−g|)/2`.
pub fn derive_lattice_ops<E: RieszElement>(f: &E, g: &E) -> Result<(E, E), Error> {
    let diff_abs = f.try_sub(g)?.abs();
    let sum = f.try_add(g)?;
    let half = rat(1, 2);
    let sup = sum.try_add(&diff_abs)?.scale(&half);
    let inf = sum.try_sub(&diff_abs)?.scale(&half);
    Ok((sup, inf))
}
