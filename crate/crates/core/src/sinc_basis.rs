//! The sinc kernel, translated Sinc basis S(j,h), boundary auxiliary
//! functions and the generalized Sinc interpolation operator applied to
//! sample vectors.

use crate::transform::{DiscretizationPlan, Interval};
use crate::{cast, Real};

/// `sin(pi x)/(pi x)` with the removable singularity filled.
pub fn sinc<T: Real>(x: T) -> T {
    let px = cast::<T>(std::f64::consts::PI) * x;
    // below this threshold the second-order term is < 1e-16
    if px.abs() < cast::<T>(1e-8) {
        T::one()
    } else {
        px.sin() / px
    }
}

/// Translated Sinc basis `S(j,h)(x) = sinc((x - jh)/h)`.
pub fn sinc_basis<T: Real>(j: isize, h: T, x: T) -> T {
    sinc((x - cast::<T>(j as f64) * h) / h)
}

/// Left boundary auxiliary function `(b - t)/(b - a)`.
pub fn omega_a<T: Real>(iv: &Interval<T>, t: T) -> T {
    (iv.b - t) / (iv.b - iv.a)
}

/// Right boundary auxiliary function `(t - a)/(b - a)`.
pub fn omega_b<T: Real>(iv: &Interval<T>, t: T) -> T {
    (t - iv.a) / (iv.b - iv.a)
}

/// Generalized Sinc interpolation of node values over a plan:
/// Sinc interpolation plus the omega_a/omega_b boundary correction, so
/// non-vanishing endpoint values are representable.
///
/// `values[j + N]` holds the sample at `psi(jh)`. Points within
/// `1e-14 (b-a)` of an endpoint short-circuit to the boundary sample;
/// the inverse transform diverges there and the limit is exact.
pub fn interpolate_values<T: Real>(plan: &DiscretizationPlan<T>, values: &[T], t: T) -> T {
    let iv = &plan.transform.interval;
    let eps = cast::<T>(1e-14) * iv.length();
    let last = values.len() - 1;
    if (t - iv.a).abs() <= eps {
        return values[0];
    }
    if (iv.b - t).abs() <= eps {
        return values[last];
    }
    let x = plan
        .transform
        .inverse(t)
        .expect("t checked to lie inside (a, b)");
    let fa = values[0];
    let fb = values[last];
    let mut acc = fa * omega_a(iv, t) + fb * omega_b(iv, t);
    let ni = plan.n as isize;
    for j in -ni..=ni {
        let node = plan.node(j);
        let idx = (j + ni) as usize;
        let corr = values[idx] - fa * omega_a(iv, node) - fb * omega_b(iv, node);
        acc = acc + corr * sinc_basis(j, plan.h, x);
    }
    acc
}

/// Samples `f(psi(jh))`, j = -N..N, bound to their plan.
#[derive(Debug, Clone)]
pub struct SampleVector<T> {
    values: Vec<T>,
    plan: DiscretizationPlan<T>,
}

impl<T: Real> SampleVector<T> {
    pub fn new(values: Vec<T>, plan: DiscretizationPlan<T>) -> Self {
        assert_eq!(values.len(), plan.size(), "need 2N+1 samples");
        SampleVector { values, plan }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn plan(&self) -> &DiscretizationPlan<T> {
        &self.plan
    }

    /// Evaluate the generalized Sinc interpolant at `t` in `[a, b]`.
    pub fn interpolate(&self, t: T) -> T {
        interpolate_values(&self.plan, &self.values, t)
    }
}

/// `sum_{j=-N}^{N} |S(j,h)(x)|`, bounded by `(2/pi)(3 + log N)`.
pub fn lebesgue_sum<T: Real>(h: T, n: usize, x: T) -> T {
    let ni = n as isize;
    let mut acc = T::zero();
    for j in -ni..=ni {
        acc = acc + sinc_basis(j, h, x).abs();
    }
    acc
}
