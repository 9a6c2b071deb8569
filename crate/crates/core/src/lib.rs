//! Exact computation of microlocal V-filtration ideals, spectra, log canonical
//! thresholds and Hodge ideals of weighted homogeneous isolated hypersurface
//! singularities, with verifiers comparing Hodge ideals against the
//! filtration degree by degree.

pub mod groebner;
pub mod linalg;
pub mod polyring;

pub use groebner::{GradedSlice, GroebnerError, IdealHandle, MonomialOrder};
pub use polyring::{Monomial, Polynomial, Rational, Ring, WeightSystem};
pub mod milnor;
pub mod oracles;
pub mod vfilt;
pub mod hodge;
