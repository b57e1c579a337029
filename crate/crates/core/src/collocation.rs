//! Assembly and solution of the collocation and Nystrom linear systems,
//! plus evaluation of the resulting approximate solutions.
//!
//! Three formulations share the same quadrature discretization of the
//! integral operator:
//!
//! * `Original*` collocates at 2N+3 points (the 2N+1 transformed nodes
//!   plus both endpoints) and solves `(E_n - K_n) u = g` for the basis
//!   coefficients directly.
//! * `New*` collocates at the 2N+1 consistent points `psi(ih)` only,
//!   solves `(I_m - K~_m) u~ = g~` for the node values, and evaluates
//!   through the generalized Sinc interpolant.
//! * `Nystrom*` solves the same system as `New*` but evaluates through
//!   the quadrature sum `g(t) + h sum_j k(t, psi(jh)) u~_j psi'(jh)`,
//!   which re-touches `k` and `g` at every evaluation point.

use crate::error::Error;
use crate::linalg::{solve_dense, DenseMatrix};
use crate::problems::{KernelCounter, Problem};
use crate::sinc_basis::{interpolate_values, omega_a, omega_b, sinc_basis};
use crate::transform::{build_plan, DiscretizationPlan, TransformKind, VariableTransform};
use crate::{cast, Real};

/// Solver / evaluator pairing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MethodKind {
    OriginalSe,
    OriginalDe,
    NewSe,
    NewDe,
    NystromSe,
    NystromDe,
}

impl MethodKind {
    pub const ALL: [MethodKind; 6] = [
        MethodKind::OriginalSe,
        MethodKind::OriginalDe,
        MethodKind::NewSe,
        MethodKind::NewDe,
        MethodKind::NystromSe,
        MethodKind::NystromDe,
    ];

    pub fn transform_kind(self) -> TransformKind {
        match self {
            MethodKind::OriginalSe | MethodKind::NewSe | MethodKind::NystromSe => {
                TransformKind::Se
            }
            MethodKind::OriginalDe | MethodKind::NewDe | MethodKind::NystromDe => {
                TransformKind::De
            }
        }
    }

    pub fn is_original(self) -> bool {
        matches!(self, MethodKind::OriginalSe | MethodKind::OriginalDe)
    }

    pub fn is_nystrom(self) -> bool {
        matches!(self, MethodKind::NystromSe | MethodKind::NystromDe)
    }

    /// Stable token used by the CLI and the CSV output.
    pub fn token(self) -> &'static str {
        match self {
            MethodKind::OriginalSe => "orig-se",
            MethodKind::OriginalDe => "orig-de",
            MethodKind::NewSe => "new-se",
            MethodKind::NewDe => "new-de",
            MethodKind::NystromSe => "nystrom-se",
            MethodKind::NystromDe => "nystrom-de",
        }
    }
}

impl std::fmt::Display for MethodKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

impl std::str::FromStr for MethodKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MethodKind::ALL
            .into_iter()
            .find(|m| m.token() == s)
            .ok_or_else(|| format!("unknown method '{s}' (expected one of orig-se, orig-de, new-se, new-de, nystrom-se, nystrom-de)"))
    }
}

/// Build the discretization plan a method uses for a problem: the
/// problem's (alpha, d) pair matching the method's transform kind.
pub fn plan_for<T: Real>(
    problem: &Problem<T>,
    method: MethodKind,
    n: usize,
) -> Result<DiscretizationPlan<T>, Error> {
    let kind = method.transform_kind();
    let (alpha, d) = match kind {
        TransformKind::Se => (problem.alpha_se, problem.d_se),
        TransformKind::De => (problem.alpha_de, problem.d_de),
    };
    build_plan(VariableTransform::new(kind, problem.interval), alpha, d, n)
}

/// The 2N+3 collocation points of the original methods:
/// `a`, the 2N+1 transformed nodes, `b`.
pub fn collocation_points_original<T: Real>(plan: &DiscretizationPlan<T>) -> Vec<T> {
    let mut pts = Vec::with_capacity(plan.size() + 2);
    pts.push(plan.transform.interval.a);
    pts.extend_from_slice(&plan.nodes);
    pts.push(plan.transform.interval.b);
    pts
}

fn check_finite<T: Real>(a: &DenseMatrix<T>, rhs: &[T]) -> Result<(), Error> {
    if let Some((row, col)) = a.first_non_finite() {
        return Err(Error::NonFinite { row, col });
    }
    if let Some(row) = rhs.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { row, col: usize::MAX });
    }
    Ok(())
}

/// Assemble `(E_n - K_n, g_n)` for the original methods, n = 2N+3.
///
/// Column 0 and column n-1 of `K_n` hold the quadrature-discretized
/// integral operator applied to the boundary functions omega_a/omega_b;
/// each of the three column groups evaluates the kernel afresh, so an
/// instrumented run counts exactly `3 (2N+3)(2N+1)` kernel evaluations.
pub fn assemble_original<T: Real>(
    problem: &Problem<T>,
    plan: &DiscretizationPlan<T>,
    counter: Option<&KernelCounter>,
) -> Result<(DenseMatrix<T>, Vec<T>), Error> {
    let m = plan.size();
    let n = m + 2;
    let iv = &plan.transform.interval;
    let pts = collocation_points_original(plan);
    let ni = plan.n as isize;
    // psi'(jh) once per j, reused across rows
    let weights: Vec<T> = (-ni..=ni).map(|j| plan.weight(j)).collect();
    let wa_nodes: Vec<T> = plan.nodes.iter().map(|&s| omega_a(iv, s)).collect();
    let wb_nodes: Vec<T> = plan.nodes.iter().map(|&s| omega_b(iv, s)).collect();

    let mut a = DenseMatrix::zeros(n, n);
    // E_n: identity core with omega border columns, unit corner rows
    a.set(0, 0, T::one());
    a.set(n - 1, n - 1, T::one());
    for i in 1..n - 1 {
        a.set(i, 0, omega_a(iv, pts[i]));
        a.set(i, i, T::one());
        a.set(i, n - 1, omega_b(iv, pts[i]));
    }
    // subtract K_n
    for i in 0..n {
        let ti = pts[i];
        let mut border_a = T::zero();
        for j in 0..m {
            border_a =
                border_a + problem.kernel_counted(ti, plan.nodes[j], counter) * wa_nodes[j] * weights[j];
        }
        a.add_to(i, 0, -plan.h * border_a);
        for j in 0..m {
            a.add_to(
                i,
                j + 1,
                -plan.h * problem.kernel_counted(ti, plan.nodes[j], counter) * weights[j],
            );
        }
        let mut border_b = T::zero();
        for j in 0..m {
            border_b =
                border_b + problem.kernel_counted(ti, plan.nodes[j], counter) * wb_nodes[j] * weights[j];
        }
        a.add_to(i, n - 1, -plan.h * border_b);
    }

    let rhs: Vec<T> = pts.iter().map(|&t| problem.rhs(t)).collect();
    check_finite(&a, &rhs)?;
    Ok((a, rhs))
}

/// Assemble `(I_m - K~_m, g~_m)` for the new / Nystrom methods,
/// m = 2N+1 with consistent collocation points `psi(ih)`.
///
/// One kernel evaluation per entry: `(2N+1)^2` in total.
pub fn assemble_new<T: Real>(
    problem: &Problem<T>,
    plan: &DiscretizationPlan<T>,
    counter: Option<&KernelCounter>,
) -> Result<(DenseMatrix<T>, Vec<T>), Error> {
    let m = plan.size();
    let ni = plan.n as isize;
    let weights: Vec<T> = (-ni..=ni).map(|j| plan.weight(j)).collect();
    let mut a = DenseMatrix::zeros(m, m);
    for i in 0..m {
        let ti = plan.nodes[i];
        for j in 0..m {
            let mut v = -plan.h * problem.kernel_counted(ti, plan.nodes[j], counter) * weights[j];
            if i == j {
                v = v + T::one();
            }
            a.set(i, j, v);
        }
    }
    let rhs: Vec<T> = plan.nodes.iter().map(|&t| problem.rhs(t)).collect();
    check_finite(&a, &rhs)?;
    Ok((a, rhs))
}

/// An evaluable approximate solution.
///
/// Coefficient layout: 2N+3 basis coefficients for `Original*`
/// (endpoint coefficients first and last); 2N+1 node values for `New*`
/// and `Nystrom*`.
#[derive(Debug)]
pub struct SincSolution<'p, T> {
    pub method: MethodKind,
    pub plan: DiscretizationPlan<T>,
    pub coeffs: Vec<T>,
    pub problem: &'p Problem<T>,
}

impl<'p, T: Real> SincSolution<'p, T> {
    /// Evaluate the approximate solution at `t` in `[a, b]`.
    pub fn evaluate(&self, t: T) -> T {
        let plan = &self.plan;
        let iv = &plan.transform.interval;
        match self.method {
            MethodKind::NewSe | MethodKind::NewDe => interpolate_values(plan, &self.coeffs, t),
            MethodKind::NystromSe | MethodKind::NystromDe => {
                let ni = plan.n as isize;
                let mut acc = T::zero();
                for j in -ni..=ni {
                    let idx = (j + ni) as usize;
                    acc = acc
                        + self.problem.kernel(t, plan.node(j)) * self.coeffs[idx] * plan.weight(j);
                }
                self.problem.rhs(t) + plan.h * acc
            }
            MethodKind::OriginalSe | MethodKind::OriginalDe => {
                // endpoints short-circuit: every Sinc term vanishes in
                // the limit and omega picks the endpoint coefficient
                let eps = cast::<T>(1e-14) * iv.length();
                let last = self.coeffs.len() - 1;
                if (t - iv.a).abs() <= eps {
                    return self.coeffs[0];
                }
                if (iv.b - t).abs() <= eps {
                    return self.coeffs[last];
                }
                let x = plan.transform.inverse(t).expect("t inside (a, b)");
                let ni = plan.n as isize;
                let mut acc = self.coeffs[0] * omega_a(iv, t) + self.coeffs[last] * omega_b(iv, t);
                for j in -ni..=ni {
                    let idx = (j + ni + 1) as usize;
                    acc = acc + self.coeffs[idx] * sinc_basis(j, plan.h, x);
                }
                acc
            }
        }
    }
}

/// Build the plan, assemble and solve the method's linear system, and
/// wrap the coefficients in an evaluable solution.
pub fn solve<'p, T: Real>(
    problem: &'p Problem<T>,
    method: MethodKind,
    n: usize,
    counter: Option<&KernelCounter>,
) -> Result<SincSolution<'p, T>, Error> {
    let plan = plan_for(problem, method, n)?;
    let (a, rhs) = if method.is_original() {
        assemble_original(problem, &plan, counter)?
    } else {
        assemble_new(problem, &plan, counter)?
    };
    let coeffs = solve_dense(&a, &rhs)
        .map_err(|e| e.with_context(format!(" ({} at N={n})", method.token())))?;
    Ok(SincSolution {
        method,
        plan,
        coeffs,
        problem,
    })
}
