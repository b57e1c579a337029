//! Sinc-collocation and Sinc-Nystrom solvers for Fredholm integral
//! equations of the second kind on a finite interval,
//!
//! ```text
//! u(t) - int_a^b k(t, s) u(s) ds = g(t),   a <= t <= b,
//! ```
//!
//! together with a benchmark harness for convergence and cost
//! comparisons between the methods.
//!
//! Six methods are available (see [`collocation::MethodKind`]):
//! collocation with endpoint-augmented points, collocation with
//! consistent points, and the plain Nystrom evaluation, each in a
//! single-exponential (SE) and a double-exponential (DE) variant.
//!
//! The numerical core is generic over the scalar type through
//! [`Real`]; `f64` aliases are provided at the crate root.

pub mod bench;
pub mod collocation;
pub mod error;
pub mod linalg;
pub mod problems;
pub mod quadrature;
pub mod sinc_basis;
pub mod transform;

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

pub use error::Error;

/// Scalar type the numerical core is generic over.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Lossy conversion for diagnostics (error messages, CSV).
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Convert an `f64` constant into `T`, panicking only for scalar types
/// that cannot represent ordinary doubles.
pub(crate) fn cast<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("scalar type must convert from f64")
}

pub type Interval64 = transform::Interval<f64>;
pub type VariableTransform64 = transform::VariableTransform<f64>;
pub type DiscretizationPlan64 = transform::DiscretizationPlan<f64>;
pub type SampleVector64 = sinc_basis::SampleVector<f64>;
pub type DenseMatrix64 = linalg::DenseMatrix<f64>;
pub type Problem64 = problems::Problem<f64>;
pub type SincSolution64<'p> = collocation::SincSolution<'p, f64>;
