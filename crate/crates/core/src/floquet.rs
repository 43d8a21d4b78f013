//! Periodically driven chains at stroboscopic times.
//!
//! The drive is `v(t) = delta cos(omega t)` (see [`crate::models::driven_params`]).
//! Each mode is followed through the invariant-based solution: the state keeps
//! the angle `gamma(t)` of the instantaneous Hamiltonian and picks up the
//! dynamical phase `epsilon(t) = rate * int_0^t r(k, t') dt'`. At `t = nT` the
//! angle is back at `gamma(0)`, which makes the stroboscopic return amplitude
//!
//! ```text
//! S = cos(epsilon(nT)/2) - i cos(gamma(0) - phi_i) sin(epsilon(nT)/2)
//! ```
//!
//! where `phi_i` is the angle of the undriven parameters.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mode::{ground_state, overlap, Mat2, ModeHamiltonian};
use crate::models::ModelParams;
use crate::numerics::{
    integrate_time_periodic, linspace, simpson_from_values, simpson_integrate, MomentumGrid,
    SweepResult,
};

/// Default Simpson steps per drive period for the dynamical phase.
pub const DEFAULT_STEPS_PER_PERIOD: usize = 256;

const MIN_STEPS_PER_PERIOD: usize = 64;

/// Periodic drive of `base` with amplitude `delta` and period `period`,
/// observed after `n_cycles` periods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriveSpec {
    pub base: ModelParams,
    pub delta: f64,
    pub period: f64,
    pub n_cycles: u32,
}

impl DriveSpec {
    pub fn new(base: ModelParams, delta: f64, period: f64, n_cycles: u32) -> Result<Self> {
        base.validate()?;
        if !(delta.is_finite() && delta >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "drive amplitude must be non-negative, got {delta}"
            )));
        }
        if !(period.is_finite() && period > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "drive period must be positive, got {period}"
            )));
        }
        let spec = DriveSpec {
            base,
            delta,
            period,
            n_cycles,
        };
        // the drive extremes sit at t = 0 and t = T/2
        spec.params_at(0.0)?;
        spec.params_at(0.5 * period)?;
        Ok(spec)
    }

    pub fn omega(&self) -> f64 {
        2.0 * PI / self.period
    }

    pub fn with_cycles(&self, n_cycles: u32) -> Self {
        DriveSpec { n_cycles, ..*self }
    }

    pub fn params_at(&self, t: f64) -> Result<ModelParams> {
        self.base.driven(self.delta, self.omega(), t)
    }
}

/// Angles and phase that fix a mode's stroboscopic evolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloquetAngles {
    /// Angle of the driven Hamiltonian at `t = 0`, and at every `t = nT`.
    pub gamma0: f64,
    /// Angle of the undriven base parameters.
    pub phi_i: f64,
    /// Dynamical phase accumulated over one period.
    pub epsilon_t: f64,
}

/// Angle of the driven Hamiltonian at momentum `k` and time `t`.
pub fn gamma_of_t(base: &ModelParams, delta: f64, omega: f64, k: f64, t: f64) -> Result<f64> {
    Ok(base.driven(delta, omega, t)?.components(k).phi)
}

fn check_steps(steps_per_period: usize) -> Result<()> {
    if steps_per_period < MIN_STEPS_PER_PERIOD || !steps_per_period.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "steps per period must be even and at least {MIN_STEPS_PER_PERIOD}, got {steps_per_period}"
        )));
    }
    Ok(())
}

/// Dynamical phase over one drive period at momentum `k`.
pub fn epsilon_cycle(
    base: &ModelParams,
    delta: f64,
    omega: f64,
    k: f64,
    steps_per_period: usize,
) -> Result<f64> {
    check_steps(steps_per_period)?;
    let period = 2.0 * PI / omega;
    // validates the drive once; inside the cycle only `h`/hoppings move
    base.driven(delta, omega, 0.0)?;
    base.driven(delta, omega, 0.5 * period)?;
    let rate = base.model().dynamical_phase_rate();
    let gap = |t: f64| {
        base.driven(delta, omega, t)
            .map(|p| p.components(k).r)
            .unwrap_or(f64::NAN)
    };
    Ok(rate * integrate_time_periodic(gap, period, 1, steps_per_period)?)
}

/// Dynamical phase accumulated over `[0, t_end]` by direct quadrature (no use
/// of periodicity); `steps` must be even.
pub fn epsilon_direct(
    base: &ModelParams,
    delta: f64,
    omega: f64,
    k: f64,
    t_end: f64,
    steps: usize,
) -> Result<f64> {
    let rate = base.model().dynamical_phase_rate();
    let gap = |t: f64| {
        base.driven(delta, omega, t)
            .map(|p| p.components(k).r)
            .unwrap_or(f64::NAN)
    };
    Ok(rate * simpson_integrate(gap, 0.0, t_end, steps)?)
}

pub fn floquet_angles(spec: &DriveSpec, k: f64, steps_per_period: usize) -> Result<FloquetAngles> {
    Ok(FloquetAngles {
        gamma0: spec.params_at(0.0)?.components(k).phi,
        phi_i: spec.base.components(k).phi,
        epsilon_t: epsilon_cycle(&spec.base, spec.delta, spec.omega(), k, steps_per_period)?,
    })
}

/// Return amplitude after `n` full periods.
pub fn stroboscopic_return_amplitude(angles: &FloquetAngles, n: u32) -> Complex64 {
    let half = 0.5 * n as f64 * angles.epsilon_t;
    Complex64::new(
        half.cos(),
        -(angles.gamma0 - angles.phi_i).cos() * half.sin(),
    )
}

/// `sin^2(epsilon(nT)/2) sin^2(gamma0 - phi_i)`.
pub fn stroboscopic_mode_complexity(angles: &FloquetAngles, n: u32) -> f64 {
    let half = 0.5 * n as f64 * angles.epsilon_t;
    half.sin().powi(2) * (angles.gamma0 - angles.phi_i).sin().powi(2)
}

fn angles_on_grid(
    spec: &DriveSpec,
    grid: &MomentumGrid,
    steps_per_period: usize,
) -> Result<Vec<FloquetAngles>> {
    check_steps(steps_per_period)?;
    grid.nodes()
        .into_iter()
        .map(|k| floquet_angles(spec, k, steps_per_period))
        .collect()
}

fn complexity_from_angles(
    spec: &DriveSpec,
    angles: &[FloquetAngles],
    grid: &MomentumGrid,
    n: u32,
) -> Result<f64> {
    let loss: Vec<f64> = angles
        .iter()
        .map(|a| stroboscopic_mode_complexity(a, n))
        .collect();
    Ok(spec.base.complexity_prefactor() * simpson_from_values(&loss, grid.step())?)
}

/// Complexity at `t = n_cycles * period`.
pub fn floquet_complexity(
    spec: &DriveSpec,
    grid: &MomentumGrid,
    steps_per_period: usize,
) -> Result<f64> {
    let angles = angles_on_grid(spec, grid, steps_per_period)?;
    complexity_from_angles(spec, &angles, grid, spec.n_cycles)
}

/// Complexity at each cycle count in `cycles`; the drive's own `n_cycles` is ignored.
pub fn floquet_complexity_vs_n(
    spec: &DriveSpec,
    cycles: &[u32],
    grid: &MomentumGrid,
    steps_per_period: usize,
) -> Result<Vec<f64>> {
    let angles = angles_on_grid(spec, grid, steps_per_period)?;
    cycles
        .par_iter()
        .map(|&n| complexity_from_angles(spec, &angles, grid, n))
        .collect()
}

/// Stroboscopic complexity along one axis of the base parameters.
pub fn floquet_sweep(
    spec: &DriveSpec,
    axis: &str,
    start: f64,
    stop: f64,
    steps: usize,
    grid: &MomentumGrid,
    steps_per_period: usize,
) -> Result<SweepResult> {
    spec.base.get(axis)?;
    if steps < 2 {
        return Err(Error::InvalidParameter(format!(
            "a sweep needs at least 3 points, got {}",
            steps + 1
        )));
    }
    let xs = linspace(start, stop, steps);
    let values = xs
        .par_iter()
        .map(|&x| {
            let base = spec.base.with(axis, x)?;
            let point = DriveSpec::new(base, spec.delta, spec.period, spec.n_cycles)
                .map_err(|e| e.at(base))?;
            floquet_complexity(&point, grid, steps_per_period).map_err(|e| e.at(base))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult::new(axis, xs, values))
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Return amplitude of the spin-`j` representation, `two_j = 2j`.
///
/// Evaluates
///
/// ```text
/// S = A sum_{n=0}^{2j} (-z_i)^n C(2j, n) w^n
/// z0 = -i tan(gamma0/2), zt = i tan(gamma_t/2), zi = -i cot(phi_i/2)
/// alpha = z0 + zi sec^2(gamma0/2) / (1 + zi z0)
/// w = zt + alpha sec^2(gamma_t/2) e^{-i eps} / (1 + alpha zt e^{-i eps})
/// A = cos^{2j}(gamma0/2) sin^{4j}(phi_i/2) cos^{2j}(gamma_t/2) e^{-i j eps}
///     (1 + zi z0)^{2j} (1 + zt alpha e^{-i eps})^{2j}
/// ```
///
/// The sum carries the reference phase `e^{-2ij eps}` relative to the
/// symmetric spin-1/2 amplitude: for `gamma_t = gamma0`,
/// `e^{2ij eps} S_j = S_{1/2}^{2j}` with `S_{1/2}` from
/// [`stroboscopic_return_amplitude`].
pub fn general_j_return_amplitude(
    two_j: u32,
    gamma0: f64,
    gamma_t: f64,
    phi_i: f64,
    epsilon: f64,
) -> Result<Complex64> {
    if two_j == 0 || two_j > 7 {
        return Err(Error::InvalidParameter(format!(
            "2j must lie in 1..=7, got {two_j}"
        )));
    }
    let half_sin = (0.5 * phi_i).sin();
    if half_sin.abs() < 1e-12 {
        return Err(Error::Domain(format!(
            "cot(phi_i/2) has a pole at phi_i = {phi_i}"
        )));
    }
    let (c0, ct) = ((0.5 * gamma0).cos(), (0.5 * gamma_t).cos());
    if c0.abs() < 1e-12 || ct.abs() < 1e-12 {
        return Err(Error::Domain(format!(
            "tan(gamma/2) has a pole (gamma0 = {gamma0}, gamma_t = {gamma_t})"
        )));
    }
    let i = Complex64::i();
    let one = Complex64::new(1.0, 0.0);
    let z0 = -i * (0.5 * gamma0).tan();
    let zt = i * (0.5 * gamma_t).tan();
    let zi = -i * ((0.5 * phi_i).cos() / half_sin);
    let alpha = z0 + zi / (c0 * c0) / (one + zi * z0);
    let rot = Complex64::from_polar(1.0, -epsilon);
    let w = zt + alpha * rot / (ct * ct) / (one + alpha * zt * rot);
    let m = two_j as i32;
    let prefactor = c0.powi(m)
        * half_sin.powi(2 * m)
        * ct.powi(m)
        * Complex64::from_polar(1.0, -0.5 * two_j as f64 * epsilon)
        * (one + zi * z0).powi(m)
        * (one + zt * alpha * rot).powi(m);
    let sum: Complex64 = (0..=two_j)
        .map(|n| (-zi).powu(n) * binomial(two_j, n) * w.powu(n))
        .sum();
    Ok(sum * prefactor)
}

/// Time-ordered reference evolution for one mode.
///
/// The mode is driven by `(rate/2) (R2(t) sigma_2 + R3(t) sigma_3)` so that its
/// instantaneous level splitting is `d(epsilon)/dt`, and propagated with
/// midpoint exponentials. Returns `1 - |S(nT)|^2`.
pub fn brute_force_mode_complexity(
    spec: &DriveSpec,
    k: f64,
    steps_per_period: usize,
) -> Result<f64> {
    if steps_per_period == 0 {
        return Err(Error::InvalidParameter(
            "steps per period must be positive".into(),
        ));
    }
    let scale = 0.5 * spec.base.model().dynamical_phase_rate();
    let dt = spec.period / steps_per_period as f64;
    let mut u_period = Mat2::identity();
    for s in 0..steps_per_period {
        let t_mid = (s as f64 + 0.5) * dt;
        let b = spec.params_at(t_mid)?.components(k).scaled(scale);
        u_period = ModeHamiltonian::oriented(b, 0.0).unitary(dt) * u_period;
    }
    let psi0 = ground_state(spec.base.components(k).signed_angle());
    let mut psi = psi0;
    for _ in 0..spec.n_cycles {
        psi = psi.apply(&u_period);
    }
    Ok(1.0 - overlap(&psi0, &psi).norm_sqr())
}
