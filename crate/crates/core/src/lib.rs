//! Exact enumeration of two-rowed set-valued standard tableaux.
//!
//! The crate is organised in layers that are meant to be checked against
//! each other:
//!
//! * [`shapes`]: tableaux of shape `(e+t, e)/(f, 0)` and a brute-force
//!   enumerator,
//! * [`motzkin`]: two-coloured Motzkin paths with the colour constraints
//!   that make them correspond to tableaux, and their brute-force enumerator,
//! * [`bijection`]: the scan map between the two,
//! * [`polyseries`]: truncated power series over sparse integer polynomials
//!   in `x`, `y`, `alpha`,
//! * [`genfun`]: the assembled generating functions,
//! * [`formulas`]: closed-form counts,
//! * [`verify`]: the cross-verification harness and the coefficient
//!   identity registry.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod bijection;
pub mod error;
pub mod formulas;
pub mod genfun;
pub mod motzkin;
pub mod polyseries;
pub mod shapes;
pub mod verify;

pub use error::{Error, Result};
pub use motzkin::{ColouredPath, ColouredStep};
pub use polyseries::{MultiPoly, ZSeries};
pub use shapes::{SetValuedTableau, TwoRowShape};
