//! Exact arithmetic for bi-periodic Fibonacci octonions.
//!
//! The crate builds the bi-periodic Fibonacci and Lucas sequences over
//! user-chosen rational parameters `(a, b)`, lifts them to octonions, and
//! checks their closed forms (Binet forms, Catalan-type products, partial
//! sums, generating functions) with exact rational arithmetic. Irrational
//! quantities live in the quadratic field Q(sqrt D), `D = a^2 b^2 + 4ab`.

pub mod context;
pub mod error;
pub mod fib_octonion;
pub mod number;
pub mod octonion;
pub mod sequence;
pub mod series;
pub mod verify;

pub use context::{make_context, SeqParams};
pub use error::{Error, Result};
pub use fib_octonion::{BinetConstants, CatalanForm, RatOctonion};
pub use number::{QuadraticElement, QuadraticField, Rational, Scalar};
pub use octonion::{Octonion, Quaternion};
pub use sequence::SeqCache;
