//! Mean and variance of the work done in a sudden quench from the ground state.
//!
//! Per mode the characteristic function of work is the conjugated return
//! amplitude, so its first two cumulants are the Lanczos coefficients of the
//! final Hamiltonian seeded with the initial ground state: `<W> = a0`,
//! `<(dW)^2> = b1^2`. Integrated over momenta these become
//!
//! ```text
//! <W>      = s (1/2pi) int (R3f R3i + R2f R2i) / Ri dk
//! <(dW)^2> =   (1/2pi) int (R2f R3i - R3f R2i)^2 / Ri^2 dk
//! ```
//!
//! with `s = +1` for the spin chains and `s = -1` for SSH. `R2` keeps its sign.

pub mod krylov;

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mode::BlochComponents;
use crate::models::{Model, ModelParams, SSHParams};
use crate::numerics::{
    elliptic_e, elliptic_k, linspace, simpson_from_values, MomentumGrid, SweepResult,
};

pub use krylov::{
    krylov_chain_amplitudes, krylov_chain_complexity, lanczos_oracle, KrylovChain, LanczosData,
    LanczosRun,
};

/// Initial gaps below this make a mode's ground state ill defined.
pub const DEGENERATE_GAP: f64 = 1e-12;

/// Nodes whose initial gap falls below this are interpolated in sweeps.
pub const SWEEP_DEGENERATE_GAP: f64 = 1e-9;

const WORK_PREFACTOR: f64 = 0.5 / PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorkStats {
    pub mean: f64,
    pub variance: f64,
}

/// `(a0, b1)` of the final mode Hamiltonian seeded with the initial ground state:
/// `a0 = -(R3f R3i + R2f R2i)/Ri`, `b1 = |R2f R3i - R3f R2i|/Ri`.
pub fn per_mode_lanczos(initial: &BlochComponents, fin: &BlochComponents) -> Result<(f64, f64)> {
    if initial.r < DEGENERATE_GAP {
        return Err(Error::DegenerateMode {
            k: None,
            gap: initial.r,
        });
    }
    let a0 = -(fin.r3 * initial.r3 + fin.r2 * initial.r2) / initial.r;
    let b1 = (fin.r2 * initial.r3 - fin.r3 * initial.r2).abs() / initial.r;
    Ok((a0, b1))
}

/// Sign in front of the mean-work integral.
pub fn mean_sign(model: Model) -> f64 {
    match model {
        Model::ThreeSpin | Model::Xy => 1.0,
        Model::Ssh => -1.0,
    }
}

fn mean_integrand(i: &BlochComponents, f: &BlochComponents) -> f64 {
    (f.r3 * i.r3 + f.r2 * i.r2) / i.r
}

fn variance_integrand(i: &BlochComponents, f: &BlochComponents) -> f64 {
    (f.r2 * i.r3 - f.r3 * i.r2).powi(2) / (i.r * i.r)
}

fn check_pair(initial: &ModelParams, fin: &ModelParams) -> Result<()> {
    if initial.model() != fin.model() {
        return Err(Error::InvalidParameter(format!(
            "initial model {} differs from final model {}",
            initial.model(),
            fin.model()
        )));
    }
    initial.validate()?;
    fin.validate()
}

fn strict_integral<F>(
    initial: &ModelParams,
    fin: &ModelParams,
    grid: &MomentumGrid,
    integrand: F,
) -> Result<f64>
where
    F: Fn(&BlochComponents, &BlochComponents) -> f64,
{
    check_pair(initial, fin)?;
    grid.try_integrate(|k| {
        let (bi, bf) = (initial.components(k), fin.components(k));
        if bi.r < DEGENERATE_GAP {
            return Err(Error::DegenerateMode {
                k: Some(k),
                gap: bi.r,
            });
        }
        Ok(integrand(&bi, &bf))
    })
}

/// Mean work per site. Fails if the initial gap closes on a grid node.
pub fn work_mean(initial: &ModelParams, fin: &ModelParams, grid: &MomentumGrid) -> Result<f64> {
    let integral = strict_integral(initial, fin, grid, mean_integrand)?;
    Ok(mean_sign(initial.model()) * WORK_PREFACTOR * integral)
}

/// Work variance per site. Fails if the initial gap closes on a grid node.
pub fn work_variance(initial: &ModelParams, fin: &ModelParams, grid: &MomentumGrid) -> Result<f64> {
    Ok(WORK_PREFACTOR * strict_integral(initial, fin, grid, variance_integrand)?)
}

pub fn work_stats(
    initial: &ModelParams,
    fin: &ModelParams,
    grid: &MomentumGrid,
) -> Result<WorkStats> {
    Ok(WorkStats {
        mean: work_mean(initial, fin, grid)?,
        variance: work_variance(initial, fin, grid)?,
    })
}

/// Work statistics where nodes with a closing initial gap take the average of
/// their neighbours (linear extrapolation at the ends).
pub fn work_stats_tolerant(
    initial: &ModelParams,
    fin: &ModelParams,
    grid: &MomentumGrid,
) -> Result<WorkStats> {
    check_pair(initial, fin)?;
    let nodes = grid.nodes();
    let mut mean = Vec::with_capacity(nodes.len());
    let mut var = Vec::with_capacity(nodes.len());
    let mut bad = Vec::new();
    for (idx, &k) in nodes.iter().enumerate() {
        let (bi, bf) = (initial.components(k), fin.components(k));
        if bi.r < SWEEP_DEGENERATE_GAP {
            bad.push(idx);
            mean.push(f64::NAN);
            var.push(f64::NAN);
        } else {
            mean.push(mean_integrand(&bi, &bf));
            var.push(variance_integrand(&bi, &bf));
        }
    }
    for values in [&mut mean, &mut var] {
        fill_degenerate(values, &bad)?;
    }
    Ok(WorkStats {
        mean: mean_sign(initial.model())
            * WORK_PREFACTOR
            * simpson_from_values(&mean, grid.step())?,
        variance: WORK_PREFACTOR * simpson_from_values(&var, grid.step())?,
    })
}

fn fill_degenerate(values: &mut [f64], bad: &[usize]) -> Result<()> {
    let n = values.len();
    let ok = |v: f64| v.is_finite();
    for &i in bad {
        let filled = if i > 0 && i + 1 < n && ok(values[i - 1]) && ok(values[i + 1]) {
            0.5 * (values[i - 1] + values[i + 1])
        } else if i + 2 < n && ok(values[i + 1]) && ok(values[i + 2]) {
            2.0 * values[i + 1] - values[i + 2]
        } else if i >= 2 && ok(values[i - 1]) && ok(values[i - 2]) {
            2.0 * values[i - 1] - values[i - 2]
        } else {
            return Err(Error::DegenerateMode { k: None, gap: 0.0 });
        };
        values[i] = filled;
    }
    Ok(())
}

/// Elliptic closed form of the SSH mean work.
///
/// With `m = 4 t1i t2i / (t1i + t2i)^2`, the two base integrals are
/// `int_0^pi dk / Ri = 2 K(m) / (t1i + t2i)` and
/// `int_0^pi cos k dk / Ri = (2 / (t1i + t2i)) (2 (K(m) - E(m)) / m - K(m))`, which give
///
/// ```text
/// <W> = -(1/2pi) (1/(t1i t2i)) [ (t1i + t2i)(t1i t2f + t1f t2i) E(m)
///                              - (t1i - t2i)(t1i t2f - t1f t2i) K(m) ]
/// ```
///
/// `E` and `K` are complete integrals in the parameter convention.
pub fn ssh_work_mean_closed_form(initial: &SSHParams, fin: &SSHParams) -> Result<f64> {
    let (t1i, t2i, t1f, t2f) = (initial.t1, initial.t2, fin.t1, fin.t2);
    if !(t1i > 0.0 && t2i > 0.0) {
        return Err(Error::Domain(format!(
            "closed form needs positive initial hoppings, got t1 = {t1i}, t2 = {t2i}"
        )));
    }
    if (t1i - t2i).abs() < 1e-12 {
        return Err(Error::Domain(format!(
            "closed form is undefined on the critical line t1 = t2 = {t1i}"
        )));
    }
    let m = 4.0 * t1i * t2i / (t1i + t2i).powi(2);
    let (k, e) = (elliptic_k(m)?, elliptic_e(m)?);
    let bracket =
        (t1i + t2i) * (t1i * t2f + t1f * t2i) * e - (t1i - t2i) * (t1i * t2f - t1f * t2i) * k;
    Ok(-WORK_PREFACTOR * bracket / (t1i * t2i))
}

/// Piecewise closed form of the SSH work variance,
/// `(t1i t2f - t1f t2i)^2 / (4 max(t1i, t2i)^2)`.
pub fn ssh_work_variance_closed_form(initial: &SSHParams, fin: &SSHParams) -> Result<f64> {
    let big = initial.t1.max(initial.t2);
    if big.is_nan() || big <= 0.0 {
        return Err(Error::Domain(
            "closed form needs a non-zero initial hopping".into(),
        ));
    }
    Ok((initial.t1 * fin.t2 - fin.t1 * initial.t2).powi(2) / (4.0 * big * big))
}

/// Mean and variance along one axis of the initial parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct WorkSweep {
    pub mean: SweepResult,
    pub variance: SweepResult,
}

/// Work statistics as the initial parameter `axis` runs from `start` to `stop`
/// in `steps` intervals, with derivatives.
pub fn work_stats_derivative_sweep(
    initial: &ModelParams,
    fin: &ModelParams,
    axis: &str,
    start: f64,
    stop: f64,
    steps: usize,
    grid: &MomentumGrid,
) -> Result<WorkSweep> {
    initial.get(axis)?;
    if steps < 2 {
        return Err(Error::InvalidParameter(format!(
            "a sweep needs at least 3 points, got {}",
            steps + 1
        )));
    }
    let xs = linspace(start, stop, steps);
    let stats = xs
        .par_iter()
        .map(|&x| {
            let point = initial.with(axis, x)?;
            work_stats_tolerant(&point, fin, grid).map_err(|e| e.at(point))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WorkSweep {
        mean: SweepResult::new(axis, xs.clone(), stats.iter().map(|s| s.mean).collect()),
        variance: SweepResult::new(axis, xs, stats.iter().map(|s| s.variance).collect()),
    })
}
