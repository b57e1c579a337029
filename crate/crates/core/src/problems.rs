//! Problem definitions, the four benchmark equations, and the special
//! functions (log-gamma, beta) the benchmark right-hand sides require.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::Error;
use crate::transform::Interval;
use crate::{cast, Real};

/// Value Table 1 uses in place of pi, "a bit smaller" so that d stays
/// strictly inside the admissible strip.
pub const PI_M: f64 = 3.14;

pub type RealFn<T> = Box<dyn Fn(T) -> T + Send + Sync>;
pub type KernelFn<T> = Box<dyn Fn(T, T) -> T + Send + Sync>;

/// Counts kernel evaluations during an instrumented solve.
///
/// Counts are exact for a single-threaded solve; independent solves may
/// each carry their own counter and merge afterwards.
#[derive(Debug, Default)]
pub struct KernelCounter(AtomicU64);

impl KernelCounter {
    pub fn new() -> Self {
        KernelCounter(AtomicU64::new(0))
    }

    pub fn bump(&self) {
        self.0.fetch_add(1, Ordering::Relaxed);
    }

    pub fn count(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }
}

/// A Fredholm equation of the second kind plus the smoothness
/// parameters that set the mesh, and (for benchmarking) the exact
/// solution when one is known.
pub struct Problem<T> {
    pub name: &'static str,
    pub interval: Interval<T>,
    pub kernel: KernelFn<T>,
    pub rhs: RealFn<T>,
    pub alpha_se: T,
    pub d_se: T,
    pub alpha_de: T,
    pub d_de: T,
    pub exact: Option<RealFn<T>>,
}

impl<T: Real> Problem<T> {
    pub fn kernel(&self, t: T, s: T) -> T {
        (self.kernel)(t, s)
    }

    /// Kernel evaluation bumping the counter when instrumentation is on.
    pub fn kernel_counted(&self, t: T, s: T, counter: Option<&KernelCounter>) -> T {
        if let Some(c) = counter {
            c.bump();
        }
        (self.kernel)(t, s)
    }

    pub fn rhs(&self, t: T) -> T {
        (self.rhs)(t)
    }

    pub fn exact(&self, t: T) -> Option<T> {
        self.exact.as_ref().map(|u| u(t))
    }
}

impl<T> std::fmt::Debug for Problem<T>
where
    T: std::fmt::Debug,
{
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("interval", &self.interval)
            .finish_non_exhaustive()
    }
}

// Lanczos approximation, g = 7, 9 terms; ~15 significant digits for
// positive arguments.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Natural log of the gamma function for `x > 0`.
pub fn log_gamma<T: Real>(x: T) -> Result<T, Error> {
    if !(x > T::zero()) {
        return Err(Error::Domain(format!("log_gamma needs x > 0, got {x}")));
    }
    let half = cast::<T>(0.5);
    // shift small arguments through Gamma(x) = Gamma(x+1)/x
    if x < half {
        return Ok(log_gamma(x + T::one())? - x.ln());
    }
    let mut series = cast::<T>(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series = series + cast::<T>(c) / (x - T::one() + cast::<T>(i as f64));
    }
    let t = x - half + cast::<T>(LANCZOS_G);
    let ln_sqrt_2pi = cast::<T>(0.918_938_533_204_672_8); // ln(sqrt(2 pi))
    Ok(ln_sqrt_2pi + (x - half) * t.ln() - t + series.ln())
}

/// Beta function `B(p, q) = Gamma(p)Gamma(q)/Gamma(p+q)` for `p, q > 0`.
pub fn beta<T: Real>(p: T, q: T) -> Result<T, Error> {
    Ok((log_gamma(p)? + log_gamma(q)? - log_gamma(p + q)?).exp())
}

/// Example with kernel `t s` on `[0, 1]`; the exact solution is the
/// Runge-style bump `r / ((t - 1/2)^2 + r^2)` with `r = 1/2`.
pub fn example1<T: Real>() -> Problem<T> {
    let r = cast::<T>(0.5);
    let half = cast::<T>(0.5);
    let bump = move |t: T| r / ((t - half) * (t - half) + r * r);
    // arctan(1/(2r))
    let atan_term = (T::one() / (cast::<T>(2.0) * r)).atan();
    Problem {
        name: "example1",
        interval: Interval::new(T::zero(), T::one()).unwrap(),
        kernel: Box::new(|t, s| t * s),
        rhs: Box::new(move |t| bump(t) - t * atan_term),
        alpha_se: T::one(),
        d_se: cast::<T>(PI_M / 2.0),
        alpha_de: T::one(),
        d_de: cast::<T>(PI_M / 6.0),
        exact: Some(Box::new(bump)),
    }
}

/// Example with kernel `(t s)^{3/4}` on `[0, pi/2]`; the exact solution
/// `sqrt(t)` has a derivative singularity at the left endpoint.
pub fn example2<T: Real>() -> Problem<T> {
    let pi = cast::<T>(std::f64::consts::PI);
    let c = pi * pi / cast::<T>(9.0);
    let quarter = cast::<T>(0.25);
    Problem {
        name: "example2",
        interval: Interval::new(T::zero(), cast::<T>(std::f64::consts::FRAC_PI_2)).unwrap(),
        kernel: Box::new(|t, s| (t * s).powf(cast::<T>(0.75))),
        rhs: Box::new(move |t| t.sqrt() * (T::one() - c * (pi * t / cast::<T>(2.0)).powf(quarter))),
        alpha_se: cast::<T>(0.5),
        d_se: cast::<T>(PI_M),
        alpha_de: cast::<T>(0.5),
        d_de: cast::<T>(PI_M / 2.0),
        exact: Some(Box::new(|t: T| t.sqrt())),
    }
}

/// Example with the 100-term separable kernel
/// `t^{sqrt(3)-1} sum_l s^{a_l} (1-s)^{1-b_l}` on `[0, 1]`,
/// `a_l = (3/pi)^l`, `b_l = (2 sqrt 2 / 3)^l`; exact solution `sqrt(t)`.
///
/// The 100-term sum makes every kernel evaluation deliberately heavy;
/// the beta-function constant in the right-hand side is precomputed at
/// construction.
pub fn example3<T: Real>() -> Problem<T> {
    let base_a = cast::<T>(3.0 / std::f64::consts::PI);
    let base_b = cast::<T>(2.0 * std::f64::consts::SQRT_2 / 3.0);
    let mut a = T::one();
    let mut b = T::one();
    let mut terms = Vec::with_capacity(100);
    let mut g_const = T::zero();
    for _ in 0..100 {
        a = a * base_a;
        b = b * base_b;
        terms.push((a, T::one() - b));
        g_const = g_const + beta(a + cast::<T>(1.5), cast::<T>(2.0) - b).unwrap();
    }
    let exponent = cast::<T>(3.0_f64.sqrt() - 1.0);
    Problem {
        name: "example3",
        interval: Interval::new(T::zero(), T::one()).unwrap(),
        kernel: Box::new(move |t, s| {
            let mut sum = T::zero();
            for &(al, one_minus_bl) in &terms {
                // (1-s)^{1-b_l} via log1p for s near 1
                sum = sum + s.powf(al) * (one_minus_bl * (-s).ln_1p()).exp();
            }
            t.powf(exponent) * sum
        }),
        rhs: Box::new(move |t| t.sqrt() - t.powf(exponent) * g_const),
        alpha_se: cast::<T>(0.5),
        d_se: cast::<T>(PI_M),
        alpha_de: cast::<T>(0.5),
        d_de: cast::<T>(PI_M / 2.0),
        exact: Some(Box::new(|t: T| t.sqrt())),
    }
}

/// Example on `[-1, 1]` with a kernel whose exponent depends on `t`;
/// exact solution `2t/(1 + t^20)`, odd and nearly flat away from the
/// endpoints.
pub fn example4<T: Real>() -> Problem<T> {
    let two = cast::<T>(2.0);
    let exact = move |t: T| two * t / (T::one() + t.powi(20));
    Problem {
        name: "example4",
        interval: Interval::new(-T::one(), T::one()).unwrap(),
        kernel: Box::new(move |t, s| {
            let t2 = t * t;
            let e = (two - t2) / (two + t2);
            let s2 = s * s;
            let s18 = s.powi(18);
            let s20 = s18 * s2;
            let brace = cast::<T>(5.0) * (two + t2) * s18 * (T::one() - s2)
                + (s20 + T::one()) * (s20 * s + s + two);
            two * (T::one() - s2).powf(e) / ((two + t2) * (T::one() + s20)) * brace
        }),
        rhs: Box::new(move |t| {
            let t2 = t * t;
            exact(t)
                - cast::<T>(4.0) / (two + t2)
                    * beta(cast::<T>(1.5), cast::<T>(4.0) / (two + t2)).unwrap()
        }),
        alpha_se: T::one(),
        d_se: cast::<T>(PI_M / 2.0),
        alpha_de: T::one(),
        d_de: cast::<T>(0.125),
        exact: Some(Box::new(exact)),
    }
}

/// Benchmark problem by its 1-based index.
pub fn by_index<T: Real>(index: u32) -> Option<Problem<T>> {
    match index {
        1 => Some(example1()),
        2 => Some(example2()),
        3 => Some(example3()),
        4 => Some(example4()),
        _ => None,
    }
}
