//! Gröbner bases over `Q`: membership, quotient bases, and graded slices.

mod gpoly;
mod ideal;
mod order;
mod slice;

use thiserror::Error;

pub use ideal::IdealHandle;
pub use order::MonomialOrder;
pub use slice::{graded_slice, grid_level, slice_equal, GradedSlice};

use std::sync::Arc;

use crate::polyring::{Monomial, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("quotient ring is infinite-dimensional")]
    InfiniteQuotient,
    #[error("generator is not weighted homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("slice degrees differ ({left} vs {right})")]
    DegreeMismatch { left: String, right: String },
    #[error("slices live in different rings or weight gradings")]
    RingMismatch,
    #[error("polynomial has a monomial outside the slice degree")]
    NotInSlice,
}

/// Reduced monic Gröbner basis of the ideal generated by `generators`.
/// An empty generator list gives the zero ideal.
pub fn buchberger(ring: &Arc<Ring>, generators: Vec<Polynomial>, order: MonomialOrder) -> IdealHandle {
    let ideal = IdealHandle::new(ring, generators, order);
    ideal.basis();
    ideal
}

pub fn normal_form(g: &Polynomial, ideal: &IdealHandle) -> Polynomial {
    ideal.normal_form(g)
}

pub fn standard_monomials(ideal: &IdealHandle, bound: Option<u32>) -> Result<Vec<Monomial>, GroebnerError> {
    ideal.standard_monomials(bound)
}

pub fn quotient_dim(ideal: &IdealHandle) -> Result<usize, GroebnerError> {
    ideal.quotient_dim()
}

pub fn ideal_sum(i: &IdealHandle, j: &IdealHandle) -> IdealHandle {
    i.sum(j)
}

pub fn ideal_power_times(i: &IdealHandle, k: u32) -> IdealHandle {
    i.power(k)
}
