//! Exact polynomials over a [`FieldCtx`](crate::field::FieldCtx): dense univariate
//! [`UPoly`] and sparse bivariate [`BPoly`].

mod bivariate;
mod univariate;

pub use bivariate::{BPoly, HomTop, LinearFactor};
pub use univariate::UPoly;

/// Degree of a polynomial. The zero polynomial has degree `NegInf`, which sorts
/// below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }
}
