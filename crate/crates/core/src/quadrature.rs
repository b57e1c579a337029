//! SE- and DE-Sinc quadrature over a finite interval:
//! `int_a^b f(t) dt ~= h sum_j f(psi(jh)) psi'(jh)`.

use crate::transform::DiscretizationPlan;
use crate::Real;

/// Sinc quadrature of `f` with the plan's transform, mesh and nodes.
///
/// The mesh size is shared with the approximation formulas rather than
/// taking the quadrature-optimal value. Summation is plain sequential,
/// left to right in j.
pub fn sinc_quadrature<T: Real, F: Fn(T) -> T>(f: F, plan: &DiscretizationPlan<T>) -> T {
    let ni = plan.n as isize;
    let mut acc = T::zero();
    for j in -ni..=ni {
        acc = acc + f(plan.node(j)) * plan.weight(j);
    }
    plan.h * acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::{build_plan, Interval, TransformKind, VariableTransform};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn plan(kind: TransformKind, a: f64, b: f64, alpha: f64, d: f64, n: usize) -> DiscretizationPlan<f64> {
        let tr = VariableTransform::new(kind, Interval::new(a, b).unwrap());
        build_plan(tr, alpha, d, n).unwrap()
    }

    #[test]
    fn zero_function() {
        let p = plan(TransformKind::De, 0.0, 1.0, 1.0, FRAC_PI_2, 20);
        assert_eq!(sinc_quadrature(|_| 0.0, &p), 0.0);
    }

    #[test]
    fn unit_function_on_unit_interval() {
        let p = plan(TransformKind::De, 0.0, 1.0, 1.0, FRAC_PI_2, 50);
        assert!((sinc_quadrature(|_| 1.0, &p) - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn sqrt_with_endpoint_singularity() {
        // int_0^{pi/2} sqrt(t) dt = (2/3)(pi/2)^{3/2}
        let p = plan(TransformKind::De, 0.0, FRAC_PI_2, 0.5, FRAC_PI_2, 60);
        let exact = 2.0 / 3.0 * FRAC_PI_2.powf(1.5);
        assert!((sinc_quadrature(|t: f64| t.sqrt(), &p) - exact).abs() <= 1e-10);
    }

    #[test]
    fn non_finite_values_propagate() {
        let p = plan(TransformKind::Se, 0.0, 1.0, 1.0, FRAC_PI_2, 5);
        assert!(sinc_quadrature(|t| 1.0 / (t - p.node(0)), &p).is_nan() ||
                sinc_quadrature(|t| 1.0 / (t - p.node(0)), &p).is_infinite());
    }

    #[test]
    fn linearity() {
        let p = plan(TransformKind::Se, 0.0, 2.0, 1.0, 1.0, 30);
        let f = |t: f64| (t * 1.3).sin();
        let g = |t: f64| t * t - 0.4;
        let lhs = sinc_quadrature(|t| 2.5 * f(t) - 0.7 * g(t), &p);
        let rhs = 2.5 * sinc_quadrature(f, &p) - 0.7 * sinc_quadrature(g, &p);
        assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()));
    }

    #[test]
    fn se_convergence_order() {
        // f(t) = sqrt(t(1-t)) on [0,1], alpha = 1/2, d = pi:
        // log(err) vs sqrt(N) should fall at least as fast as
        // -sqrt(pi d alpha) * 0.8
        let exact = PI / 8.0; // quarter-circle area scaled
        let mut prev = f64::INFINITY;
        let mut pts = Vec::new();
        for n in [10, 20, 40, 80] {
            let p = plan(TransformKind::Se, 0.0, 1.0, 0.5, PI, n);
            let q = sinc_quadrature(|t: f64| (t * (1.0 - t)).sqrt(), &p);
            let err = (q - exact).abs();
            assert!(err < prev, "errors must decrease, N={n}");
            prev = err;
            pts.push(((n as f64).sqrt(), err.ln()));
        }
        let slope = (pts[3].1 - pts[0].1) / (pts[3].0 - pts[0].0);
        assert!(slope <= -(PI * PI * 0.5).sqrt() * 0.8, "slope {slope}");
    }

    #[test]
    fn de_convergence_reaches_floor() {
        let exact = PI / 8.0;
        let p = plan(TransformKind::De, 0.0, 1.0, 0.5, FRAC_PI_2, 80);
        let q = sinc_quadrature(|t: f64| (t * (1.0 - t)).sqrt(), &p);
        assert!((q - exact).abs() <= 1e-12);
    }
}
