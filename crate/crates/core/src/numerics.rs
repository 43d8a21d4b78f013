//! Quadrature, complete elliptic integrals, finite differences and peak finding.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Default number of Simpson intervals on `[0, pi]`.
pub const DEFAULT_MOMENTUM_INTERVALS: usize = 1000;

/// Composite Simpson weights for `n` intervals (`n + 1` nodes) on `[a, b]`.
pub fn simpson_weights(n: usize, a: f64, b: f64) -> Result<Vec<f64>> {
    check_intervals(n)?;
    let h = (b - a) / n as f64;
    Ok((0..=n)
        .map(|i| {
            let w = if i == 0 || i == n {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            w * h / 3.0
        })
        .collect())
}

fn check_intervals(n: usize) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "Simpson's rule needs an even number of intervals >= 2, got {n}"
        )));
    }
    Ok(())
}

/// Composite Simpson integral of `f` over `[a, b]` with `n` intervals.
///
/// Fails with [`Error::NonFinite`] naming the first offending node.
pub fn simpson_integrate<F>(f: F, a: f64, b: f64, n: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    try_simpson_integrate(|x| Ok(f(x)), a, b, n)
}

/// Like [`simpson_integrate`] for an integrand that can fail.
pub fn try_simpson_integrate<F>(f: F, a: f64, b: f64, n: usize) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    check_intervals(n)?;
    let h = (b - a) / n as f64;
    let mut ends = 0.0;
    let mut odd = 0.0;
    let mut even = 0.0;
    for i in 0..=n {
        let x = if i == n { b } else { a + i as f64 * h };
        let v = f(x)?;
        if !v.is_finite() {
            return Err(Error::NonFinite {
                index: i,
                x,
                value: v,
            });
        }
        if i == 0 || i == n {
            ends += v;
        } else if i % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    Ok(h / 3.0 * (ends + 4.0 * odd + 2.0 * even))
}

/// Simpson integral of samples `values` on a uniform grid with spacing `h`.
pub fn simpson_from_values(values: &[f64], h: f64) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::InvalidParameter("no samples to integrate".into()));
    }
    let n = values.len() - 1;
    check_intervals(n)?;
    let mut acc = [0.0; 3];
    for (i, &v) in values.iter().enumerate() {
        if !v.is_finite() {
            return Err(Error::NonFinite {
                index: i,
                x: i as f64 * h,
                value: v,
            });
        }
        let slot = if i == 0 || i == n {
            0
        } else if i % 2 == 1 {
            1
        } else {
            2
        };
        acc[slot] += v;
    }
    Ok(h / 3.0 * (acc[0] + 4.0 * acc[1] + 2.0 * acc[2]))
}

/// Uniform Simpson grid on `[0, pi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MomentumGrid {
    intervals: usize,
}

impl Default for MomentumGrid {
    fn default() -> Self {
        MomentumGrid {
            intervals: DEFAULT_MOMENTUM_INTERVALS,
        }
    }
}

impl MomentumGrid {
    pub fn new(intervals: usize) -> Result<Self> {
        check_intervals(intervals)?;
        Ok(MomentumGrid { intervals })
    }

    pub fn intervals(&self) -> usize {
        self.intervals
    }

    pub fn step(&self) -> f64 {
        PI / self.intervals as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        if i == self.intervals {
            PI
        } else {
            i as f64 * self.step()
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..=self.intervals).map(|i| self.node(i)).collect()
    }

    pub fn weights(&self) -> Vec<f64> {
        simpson_weights(self.intervals, 0.0, PI).expect("grid holds a valid interval count")
    }

    /// `int_0^pi f(k) dk`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> Result<f64> {
        simpson_integrate(f, 0.0, PI, self.intervals)
    }

    pub fn try_integrate<F: Fn(f64) -> Result<f64>>(&self, f: F) -> Result<f64> {
        try_simpson_integrate(f, 0.0, PI, self.intervals)
    }
}

/// `n_cycles` times the Simpson integral of `f` over one period `[0, period]`.
pub fn integrate_time_periodic<F>(f: F, period: f64, n_cycles: u32, steps: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if period.is_nan() || period <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "period must be positive, got {period}"
        )));
    }
    Ok(n_cycles as f64 * simpson_integrate(f, 0.0, period, steps)?)
}

const ELLIPTIC_M_MAX: f64 = 1.0 - 1e-12;

/// Arithmetic-geometric mean iteration; returns `(agm, sum_{n>=1} 2^{n-1} c_n^2)`.
fn agm_with_sum(m: f64) -> (f64, f64) {
    let mut a = 1.0;
    let mut b = (1.0 - m).sqrt();
    let mut sum = 0.0;
    let mut pow = 1.0;
    for _ in 0..64 {
        let c = 0.5 * (a - b);
        sum += pow * c * c;
        if c.abs() <= f64::EPSILON * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
        pow *= 2.0;
    }
    (a, sum)
}

fn check_parameter(m: f64) -> Result<()> {
    if !m.is_finite() || !(0.0..=1.0).contains(&m) {
        return Err(Error::Domain(format!(
            "elliptic parameter must lie in [0, 1), got {m}"
        )));
    }
    Ok(())
}

/// Complete elliptic integral of the first kind, `K(m) = int_0^{pi/2} (1 - m sin^2)^{-1/2}`.
///
/// Parameter convention (`m = k^2`); defined for `0 <= m < 1`.
pub fn elliptic_k(m: f64) -> Result<f64> {
    check_parameter(m)?;
    if m >= ELLIPTIC_M_MAX {
        return Err(Error::Domain(format!(
            "K(m) diverges as m -> 1, got m = {m}"
        )));
    }
    let (a, _) = agm_with_sum(m);
    Ok(FRAC_PI_2 / a)
}

/// Complete elliptic integral of the second kind, `E(m) = int_0^{pi/2} (1 - m sin^2)^{1/2}`.
pub fn elliptic_e(m: f64) -> Result<f64> {
    check_parameter(m)?;
    if m >= ELLIPTIC_M_MAX {
        return Ok(1.0);
    }
    let (a, sum) = agm_with_sum(m);
    let k = FRAC_PI_2 / a;
    Ok(k * (1.0 - 0.5 * m - sum))
}

/// First derivative of uniformly sampled values: central differences inside,
/// second-order one-sided differences at the ends.
pub fn centered_derivative(values: &[f64], step: f64) -> Vec<f64> {
    let n = values.len();
    match n {
        0 => Vec::new(),
        1 => vec![0.0],
        2 => {
            let d = (values[1] - values[0]) / step;
            vec![d, d]
        }
        _ => {
            let mut out = Vec::with_capacity(n);
            out.push((-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * step));
            for i in 1..n - 1 {
                out.push((values[i + 1] - values[i - 1]) / (2.0 * step));
            }
            out.push((3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * step));
            out
        }
    }
}

/// `|y[i+1] - 2 y[i] + y[i-1]|`, zero at the ends.
pub fn abs_second_difference(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    (0..n)
        .map(|i| {
            if i == 0 || i + 1 >= n {
                0.0
            } else {
                (values[i + 1] - 2.0 * values[i] + values[i - 1]).abs()
            }
        })
        .collect()
}

/// Prominence of the sample at `peak`, computed the same way as
/// `scipy.signal.peak_prominences` with an unbounded window.
pub fn prominence(values: &[f64], peak: usize) -> f64 {
    let p = values[peak];
    let mut left_min = p;
    for &v in values[..peak].iter().rev() {
        if v > p {
            break;
        }
        left_min = left_min.min(v);
    }
    let mut right_min = p;
    for &v in &values[peak + 1..] {
        if v > p {
            break;
        }
        right_min = right_min.min(v);
    }
    p - left_min.max(right_min)
}

/// Interior local maxima with prominence at least `min_prominence`.
///
/// Flat tops count once, at their middle sample.
pub fn find_peaks(values: &[f64], min_prominence: f64) -> Vec<usize> {
    let n = values.len();
    let mut peaks = Vec::new();
    let mut i = 1;
    while i + 1 < n {
        if values[i - 1] < values[i] {
            let mut j = i;
            while j + 1 < n && values[j + 1] == values[i] {
                j += 1;
            }
            if j + 1 < n && values[j + 1] < values[i] {
                let mid = (i + j) / 2;
                if prominence(values, mid) >= min_prominence {
                    peaks.push(mid);
                }
            }
            i = j + 1;
        } else {
            i += 1;
        }
    }
    peaks
}

/// Merge peaks closer than `radius` samples, keeping the largest of each group.
pub fn cluster_peaks(peaks: &[usize], values: &[f64], radius: usize) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for &p in peaks {
        match out.last_mut() {
            Some(last) if p - *last <= radius => {
                if values[p] > values[*last] {
                    *last = p;
                }
            }
            _ => out.push(p),
        }
    }
    out
}

/// Which sampled signal a peak search runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeakSignal {
    Value,
    AbsDerivative,
    AbsCurvature,
}

/// An observable sampled along one parameter axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub axis: String,
    pub xs: Vec<f64>,
    pub values: Vec<f64>,
    pub derivative: Vec<f64>,
}

impl SweepResult {
    /// Build a sweep from samples on a uniform axis; the derivative is filled in.
    pub fn new(axis: impl Into<String>, xs: Vec<f64>, values: Vec<f64>) -> Self {
        let step = if xs.len() > 1 { xs[1] - xs[0] } else { 1.0 };
        let derivative = centered_derivative(&values, step);
        SweepResult {
            axis: axis.into(),
            xs,
            values,
            derivative,
        }
    }

    pub fn step(&self) -> f64 {
        if self.xs.len() > 1 {
            self.xs[1] - self.xs[0]
        } else {
            0.0
        }
    }

    pub fn signal(&self, which: PeakSignal) -> Vec<f64> {
        match which {
            PeakSignal::Value => self.values.clone(),
            PeakSignal::AbsDerivative => self.derivative.iter().map(|d| d.abs()).collect(),
            PeakSignal::AbsCurvature => abs_second_difference(&self.values),
        }
    }

    /// Axis positions of peaks whose prominence reaches `relative_prominence`
    /// times the signal's maximum.
    pub fn peaks(&self, which: PeakSignal, relative_prominence: f64) -> Vec<f64> {
        let signal = self.signal(which);
        let max = signal.iter().cloned().fold(0.0, f64::max);
        find_peaks(&signal, relative_prominence * max)
            .into_iter()
            .map(|i| self.xs[i])
            .collect()
    }
}

/// `n + 1` evenly spaced points from `start` to `stop` inclusive.
pub fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    if n == 0 {
        return vec![start];
    }
    let h = (stop - start) / n as f64;
    (0..=n)
        .map(|i| if i == n { stop } else { start + i as f64 * h })
        .collect()
}
