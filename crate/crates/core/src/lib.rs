//! Lower bounds for restricted sumsets `{a + b : a in A, b in B, P(a, b) != 0}`
//! over prime fields, extension fields and the rationals, together with the
//! exhaustive machinery to check them.
//!
//! * [`field`]: exact arithmetic in GF(p), GF(p^n) and Q.
//! * [`poly`]: univariate and bivariate polynomials, homogeneous tops.
//! * [`multiplicity`]: closure-root multiplicity profiles from squarefree structure.
//! * [`bounds`]: the general bound, its corollaries and classical comparisons.
//! * [`sumset`]: brute-force sumsets, instance verification and sweeps.

pub mod bounds;
pub mod error;
pub mod field;
pub mod multiplicity;
pub mod poly;
pub mod sumset;

pub use error::{Error, Result};
pub use field::{Char, Fe, FieldCtx};
pub use poly::{BPoly, Degree, UPoly};
