//! SE and DE variable transformations from the real line onto a finite
//! interval, with derivatives, inverses and the mesh-size formulas.

use crate::error::Error;
use crate::{cast, Real};

/// Which change of variables maps the real line onto `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    /// Single-exponential: `psi(x) = ((b-a)/2) tanh(x/2) + (b+a)/2`.
    Se,
    /// Double-exponential: `psi(x) = ((b-a)/2) tanh((pi/2) sinh x) + (b+a)/2`.
    De,
}

/// A finite interval `[a, b]` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval<T> {
    pub a: T,
    pub b: T,
}

impl<T: Real> Interval<T> {
    pub fn new(a: T, b: T) -> Result<Self, Error> {
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(Error::Domain(format!(
                "interval needs finite a < b, got [{a}, {b}]"
            )));
        }
        Ok(Interval { a, b })
    }

    pub fn length(&self) -> T {
        self.b - self.a
    }

    pub fn midpoint(&self) -> T {
        (self.a + self.b) / cast::<T>(2.0)
    }
}

/// An SE or DE transformation bound to an interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariableTransform<T> {
    pub kind: TransformKind,
    pub interval: Interval<T>,
}

impl<T: Real> VariableTransform<T> {
    pub fn new(kind: TransformKind, interval: Interval<T>) -> Self {
        VariableTransform { kind, interval }
    }

    /// psi(x). When tanh saturates in floating point the exact endpoint
    /// is returned, so the result always lies in `[a, b]`.
    pub fn forward(&self, x: T) -> T {
        let Interval { a, b } = self.interval;
        let y = match self.kind {
            TransformKind::Se => (x / cast::<T>(2.0)).tanh(),
            TransformKind::De => (cast::<T>(std::f64::consts::FRAC_PI_2) * x.sinh()).tanh(),
        };
        if y == T::one() {
            b
        } else if y == -T::one() {
            a
        } else {
            (b - a) / cast::<T>(2.0) * y + (a + b) / cast::<T>(2.0)
        }
    }

    /// psi'(x) > 0; underflows to 0 for large |x|.
    pub fn derivative(&self, x: T) -> T {
        let len = self.interval.length();
        match self.kind {
            TransformKind::Se => {
                let c = (x / cast::<T>(2.0)).cosh();
                len / cast::<T>(4.0) / (c * c)
            }
            TransformKind::De => {
                let c = (cast::<T>(std::f64::consts::FRAC_PI_2) * x.sinh()).cosh();
                let sech2 = (T::one() / c) * (T::one() / c);
                if sech2 == T::zero() {
                    // avoid inf * 0 when cosh(x) overflows as well
                    return T::zero();
                }
                len * cast::<T>(std::f64::consts::FRAC_PI_4) * x.cosh() * sech2
            }
        }
    }

    /// psi^{-1}(t), defined strictly inside (a, b).
    pub fn inverse(&self, t: T) -> Result<T, Error> {
        let Interval { a, b } = self.interval;
        if !(t > a && t < b) {
            return Err(Error::OutsideInterval {
                t: t.as_f64(),
                a: a.as_f64(),
                b: b.as_f64(),
            });
        }
        // log((t-a)/(b-t)) is stabler near the endpoints than atanh of
        // the affine map
        let r = ((t - a) / (b - t)).ln();
        Ok(match self.kind {
            TransformKind::Se => r,
            TransformKind::De => (r / cast::<T>(std::f64::consts::PI)).asinh(),
        })
    }
}

/// Mesh size for the approximation formulas:
/// SE `h = sqrt(pi d / (alpha N))`, DE `h = log(2dN/alpha)/N`.
pub fn mesh_size<T: Real>(kind: TransformKind, alpha: T, d: T, n: usize) -> Result<T, Error> {
    if !(alpha > T::zero() && alpha <= T::one()) || !(d > T::zero()) || n == 0 {
        return Err(Error::Domain(format!(
            "mesh size needs 0 < alpha <= 1, d > 0, N >= 1; got alpha={alpha}, d={d}, N={n}"
        )));
    }
    let nf = cast::<T>(n as f64);
    match kind {
        TransformKind::Se => Ok((cast::<T>(std::f64::consts::PI) * d / (alpha * nf)).sqrt()),
        TransformKind::De => {
            let ratio = cast::<T>(2.0) * d * nf / alpha;
            if ratio <= T::one() {
                return Err(Error::MeshSize {
                    ratio: ratio.as_f64(),
                });
            }
            Ok(ratio.ln() / nf)
        }
    }
}

/// A transform, its mesh size and the 2N+1 interior nodes `psi(jh)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizationPlan<T> {
    pub transform: VariableTransform<T>,
    /// Half the node count: nodes run over j = -N..N.
    pub n: usize,
    pub alpha: T,
    pub d: T,
    pub h: T,
    /// `nodes[j + N] = psi(jh)`.
    pub nodes: Vec<T>,
}

impl<T: Real> DiscretizationPlan<T> {
    /// Number of interior nodes, 2N+1.
    pub fn size(&self) -> usize {
        2 * self.n + 1
    }

    /// Node `psi(jh)` for `j` in `-N..=N`.
    pub fn node(&self, j: isize) -> T {
        self.nodes[(j + self.n as isize) as usize]
    }

    /// Quadrature weight `psi'(jh)`.
    pub fn weight(&self, j: isize) -> T {
        self.transform.derivative(cast::<T>(j as f64) * self.h)
    }
}

/// Bundle the mesh size and nodes for a transform and parameters.
pub fn build_plan<T: Real>(
    transform: VariableTransform<T>,
    alpha: T,
    d: T,
    n: usize,
) -> Result<DiscretizationPlan<T>, Error> {
    let h = mesh_size(transform.kind, alpha, d, n)?;
    let ni = n as isize;
    let nodes = (-ni..=ni)
        .map(|j| transform.forward(cast::<T>(j as f64) * h))
        .collect();
    Ok(DiscretizationPlan {
        transform,
        n,
        alpha,
        d,
        h,
        nodes,
    })
}
