//! Benchmark harness: convergence vs N, wall-time split per phase,
//! kernel-evaluation counts and CSV output.

use std::time::Instant;

use crate::collocation::{
    assemble_new, assemble_original, plan_for, MethodKind, SincSolution,
};
use crate::linalg::solve_dense;
use crate::problems::{KernelCounter, Problem};

/// CSV header; the column set is frozen for external plotting.
pub const CSV_HEADER: &str = "method,example,N,h,max_error,assemble_ms,solve_ms,eval_ms,kernel_evals";

/// One benchmark row.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRecord {
    pub method: MethodKind,
    pub example: String,
    pub n: usize,
    pub h: f64,
    /// Sup over the evaluation grid of |u - approx|; `+inf` marks a
    /// singular solve.
    pub max_error: f64,
    pub assemble_ms: f64,
    pub solve_ms: f64,
    pub eval_ms: f64,
    pub kernel_evals: u64,
}

impl ConvergenceRecord {
    /// One CSV row. Floats in shortest round-trip decimal, timings with
    /// three decimals.
    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3},{:.3},{:.3},{}",
            self.method,
            self.example,
            self.n,
            self.h,
            self.max_error,
            self.assemble_ms,
            self.solve_ms,
            self.eval_ms,
            self.kernel_evals
        )
    }

    pub fn from_csv_row(row: &str) -> Option<Self> {
        let mut it = row.split(',');
        let method = it.next()?.parse().ok()?;
        let example = it.next()?.to_string();
        let n = it.next()?.parse().ok()?;
        let h = it.next()?.parse().ok()?;
        let max_error = it.next()?.parse().ok()?;
        let assemble_ms = it.next()?.parse().ok()?;
        let solve_ms = it.next()?.parse().ok()?;
        let eval_ms = it.next()?.parse().ok()?;
        let kernel_evals = it.next()?.parse().ok()?;
        if it.next().is_some() {
            return None;
        }
        Some(ConvergenceRecord {
            method,
            example,
            n,
            h,
            max_error,
            assemble_ms,
            solve_ms,
            eval_ms,
            kernel_evals,
        })
    }
}

/// Sup over `grid_size` equispaced points on `[a, b]` (endpoints
/// included) of `|exact(t) - evaluate(sol, t)|`.
pub fn max_error<F: Fn(f64) -> f64>(
    sol: &SincSolution<'_, f64>,
    exact: F,
    grid_size: usize,
) -> f64 {
    assert!(grid_size >= 2);
    let iv = &sol.plan.transform.interval;
    let (a, b) = (iv.a, iv.b);
    let mut worst = 0.0_f64;
    for i in 0..grid_size {
        let t = a + (b - a) * i as f64 / (grid_size - 1) as f64;
        worst = worst.max((exact(t) - sol.evaluate(t)).abs());
    }
    worst
}

/// Run every (method, N) pair in input order, producing one record
/// each. A singular solve yields a `+inf` sentinel and a warning on
/// stderr instead of aborting the sweep.
pub fn run_convergence(
    problem: &Problem<f64>,
    methods: &[MethodKind],
    n_list: &[usize],
    grid_size: usize,
    count_kernel_evals: bool,
) -> Vec<ConvergenceRecord> {
    let mut records = Vec::with_capacity(methods.len() * n_list.len());
    for &method in methods {
        for &n in n_list {
            records.push(run_one(problem, method, n, grid_size, count_kernel_evals));
        }
    }
    records
}

fn run_one(
    problem: &Problem<f64>,
    method: MethodKind,
    n: usize,
    grid_size: usize,
    count_kernel_evals: bool,
) -> ConvergenceRecord {
    let counter = count_kernel_evals.then(KernelCounter::new);

    let t0 = Instant::now();
    let plan = match plan_for(problem, method, n) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("warning: {} N={n} on {}: {e}", method, problem.name);
            return ConvergenceRecord {
                method,
                example: problem.name.to_string(),
                n,
                h: f64::NAN,
                max_error: f64::INFINITY,
                assemble_ms: 0.0,
                solve_ms: 0.0,
                eval_ms: 0.0,
                kernel_evals: 0,
            };
        }
    };
    let assembled = if method.is_original() {
        assemble_original(problem, &plan, counter.as_ref())
    } else {
        assemble_new(problem, &plan, counter.as_ref())
    };
    let assemble_ms = ms_since(t0);

    let mut record = ConvergenceRecord {
        method,
        example: problem.name.to_string(),
        n,
        h: plan.h,
        max_error: f64::INFINITY,
        assemble_ms,
        solve_ms: 0.0,
        eval_ms: 0.0,
        kernel_evals: counter.as_ref().map_or(0, |c| c.count()),
    };

    let (a, rhs) = match assembled {
        Ok(v) => v,
        Err(e) => {
            eprintln!("warning: {} N={n} on {}: {e}", method, problem.name);
            return record;
        }
    };

    let t1 = Instant::now();
    let coeffs = match solve_dense(&a, &rhs) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("warning: {} N={n} on {}: {e}", method, problem.name);
            record.solve_ms = ms_since(t1);
            return record;
        }
    };
    record.solve_ms = ms_since(t1);

    let sol = SincSolution {
        method,
        plan,
        coeffs,
        problem,
    };
    let t2 = Instant::now();
    record.max_error = match &problem.exact {
        Some(u) => max_error(&sol, u, grid_size),
        None => f64::NAN,
    };
    record.eval_ms = ms_since(t2);
    record
}

fn ms_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Least-squares line fit; returns `(slope, intercept, r_squared)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    (slope, intercept, r2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collocation::solve;
    use crate::problems::{example1, example3};

    #[test]
    fn max_error_of_exact_evaluator_is_zero() {
        let p = example1::<f64>();
        let sol = solve(&p, MethodKind::NewDe, 8, None).unwrap();
        assert_eq!(max_error(&sol, |t| sol.evaluate(t), 101), 0.0);
    }

    #[test]
    fn one_record_per_pair_in_input_order() {
        let p = example1::<f64>();
        let recs = run_convergence(&p, &[MethodKind::NewSe], &[2], 51, false);
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].n, 2);

        let recs = run_convergence(
            &p,
            &[MethodKind::NewDe, MethodKind::OriginalSe],
            &[2, 4],
            51,
            false,
        );
        assert_eq!(recs.len(), 4);
        assert_eq!(
            recs.iter().map(|r| (r.method, r.n)).collect::<Vec<_>>(),
            vec![
                (MethodKind::NewDe, 2),
                (MethodKind::NewDe, 4),
                (MethodKind::OriginalSe, 2),
                (MethodKind::OriginalSe, 4),
            ]
        );
    }

    #[test]
    fn csv_rows_round_trip() {
        let p = example1::<f64>();
        let recs = run_convergence(&p, &[MethodKind::NewDe, MethodKind::OriginalSe], &[4, 8], 101, true);
        for r in &recs {
            let row = r.to_csv_row();
            let back = ConvergenceRecord::from_csv_row(&row).unwrap();
            assert_eq!(back.to_csv_row(), row);
        }
        assert!(ConvergenceRecord::from_csv_row("not,a,row").is_none());
    }

    #[test]
    fn kernel_eval_count_appears_in_records() {
        let p = example1::<f64>();
        let recs = run_convergence(&p, &[MethodKind::OriginalSe], &[10], 51, true);
        assert_eq!(recs[0].kernel_evals, 3 * 23 * 21); // 1449
    }

    #[test]
    fn cost_ordering_on_heavy_kernel() {
        let p = example3::<f64>();
        for n in [20_usize, 40] {
            let recs = run_convergence(
                &p,
                &[MethodKind::OriginalSe, MethodKind::NewSe],
                &[n],
                51,
                true,
            );
            let orig = recs[0].kernel_evals as f64;
            let new = recs[1].kernel_evals as f64;
            assert!(orig > 2.5 * new, "N={n}: {orig} vs {new}");
        }
    }

    #[test]
    fn rate_parity_between_original_and_new() {
        for idx in [1_u32, 2] {
            let p = crate::problems::by_index::<f64>(idx).unwrap();
            for (orig, new) in [
                (MethodKind::OriginalSe, MethodKind::NewSe),
                (MethodKind::OriginalDe, MethodKind::NewDe),
            ] {
                for n in [20_usize, 40, 80] {
                    let recs = run_convergence(&p, &[orig, new], &[n], 201, false);
                    let (eo, en) = (recs[0].max_error, recs[1].max_error);
                    // both may sit at the rounding floor
                    if eo < 1e-13 && en < 1e-13 {
                        continue;
                    }
                    let ratio = eo.max(en) / eo.min(en).max(1e-300);
                    assert!(ratio < 100.0, "{idx} {orig} N={n}: {eo:e} vs {en:e}");
                }
            }
        }
    }

    #[test]
    fn linear_fit_recovers_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys: Vec<f64> = xs.iter().map(|x| -2.0 * x + 0.5).collect();
        let (slope, intercept, r2) = linear_fit(&xs, &ys);
        assert!((slope + 2.0).abs() < 1e-12);
        assert!((intercept - 0.5).abs() < 1e-12);
        assert!((r2 - 1.0).abs() < 1e-12);
    }
}
