//! Spread complexity of ground states and of sudden-quench dynamics.
//!
//! For a product of independent modes the complexity density is the momentum
//! average of the per-mode loss `1 - |S_k(t)|^2`, where `S_k` is the return
//! amplitude of the initial mode ground state.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mode::{ground_state, overlap, BlochComponents, ModeHamiltonian};
use crate::models::{Model, ModelParams};
use crate::numerics::{linspace, MomentumGrid, SweepResult};

/// Default number of time samples in a complexity curve.
pub const DEFAULT_TIME_SAMPLES: usize = 500;

/// Per-mode ground-state integrand: `cos^2(phi/2)` for the spin chains,
/// `sin^2(phi/2)` for SSH.
pub fn ground_state_integrand(model: Model, b: &BlochComponents) -> f64 {
    match model {
        Model::ThreeSpin | Model::Xy => (0.5 * b.phi).cos().powi(2),
        Model::Ssh => (0.5 * b.phi).sin().powi(2),
    }
}

/// Spread complexity of the ground state.
pub fn ground_state_complexity(params: &ModelParams, grid: &MomentumGrid) -> Result<f64> {
    let model = params.model();
    let integral = grid.integrate(|k| ground_state_integrand(model, &params.components(k)))?;
    Ok(model.complexity_prefactor() * integral)
}

/// Ground-state complexity along one parameter axis, `steps + 1` points from
/// `start` to `stop`, with its centered derivative.
pub fn complexity_derivative_sweep(
    base: &ModelParams,
    axis: &str,
    start: f64,
    stop: f64,
    steps: usize,
    grid: &MomentumGrid,
) -> Result<SweepResult> {
    base.get(axis)?;
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
            let point = base.with(axis, x)?;
            ground_state_complexity(&point, grid).map_err(|e| e.at(point))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult::new(axis, xs, values))
}

/// Evolution under fixed parameters for a given duration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub params: ModelParams,
    pub duration: f64,
}

/// State preparation in the ground state of `initial`, followed by sudden
/// switches through `segments` in order.
#[derive(Debug, Clone, PartialEq)]
pub struct QuenchSchedule {
    initial: ModelParams,
    segments: Vec<Segment>,
}

impl QuenchSchedule {
    pub fn new(initial: ModelParams, segments: Vec<Segment>) -> Result<Self> {
        initial.validate()?;
        if segments.is_empty() {
            return Err(Error::InvalidParameter(
                "a quench schedule needs at least one segment".into(),
            ));
        }
        for (i, s) in segments.iter().enumerate() {
            if s.params.model() != initial.model() {
                return Err(Error::InvalidParameter(format!(
                    "segment {i} uses model {} but the initial state is {}",
                    s.params.model(),
                    initial.model()
                )));
            }
            s.params.validate()?;
            if !(s.duration.is_finite() && s.duration > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "segment {i} duration must be positive and finite, got {}",
                    s.duration
                )));
            }
        }
        Ok(QuenchSchedule { initial, segments })
    }

    /// A single sudden quench `initial -> final` observed for `duration`.
    pub fn single(initial: ModelParams, final_params: ModelParams, duration: f64) -> Result<Self> {
        QuenchSchedule::new(
            initial,
            vec![Segment {
                params: final_params,
                duration,
            }],
        )
    }

    pub fn initial(&self) -> &ModelParams {
        &self.initial
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn model(&self) -> Model {
        self.initial.model()
    }

    pub fn total_duration(&self) -> f64 {
        self.segments.iter().map(|s| s.duration).sum()
    }

    /// Times at which the Hamiltonian switches, excluding `t = 0`.
    pub fn switch_times(&self) -> Vec<f64> {
        let mut acc = 0.0;
        let mut out: Vec<f64> = self
            .segments
            .iter()
            .map(|s| {
                acc += s.duration;
                acc
            })
            .collect();
        out.pop();
        out
    }

    fn check_time(&self, t: f64) -> Result<()> {
        let total = self.total_duration();
        if !(t >= 0.0 && t <= total * (1.0 + 1e-12)) {
            return Err(Error::TimeOutOfRange { t, total });
        }
        Ok(())
    }

    /// Per-mode loss `1 - |S_k(t)|^2` from composed mode unitaries.
    pub fn mode_loss(&self, k: f64, t: f64) -> Result<f64> {
        self.check_time(t)?;
        Ok(self.mode_loss_unchecked(k, t))
    }

    fn mode_loss_unchecked(&self, k: f64, t: f64) -> f64 {
        if t == 0.0 {
            return 0.0;
        }
        let psi0 = ground_state(self.initial.components(k).phi);
        let mut psi = psi0;
        let mut elapsed = 0.0;
        for s in &self.segments {
            let dt = (t - elapsed).min(s.duration);
            if dt <= 0.0 {
                break;
            }
            let h = ModeHamiltonian::new(s.params.components(k), 0.0);
            psi = psi.apply(&h.unitary(dt));
            elapsed += s.duration;
        }
        1.0 - overlap(&psi0, &psi).norm_sqr()
    }

    /// Complexity at a single time.
    pub fn complexity_at(&self, t: f64, grid: &MomentumGrid) -> Result<f64> {
        self.check_time(t)?;
        let integral = grid.integrate(|k| self.mode_loss_unchecked(k, t))?;
        Ok(self.model().complexity_prefactor() * integral)
    }
}

/// Complexity sampled in time.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityCurve {
    pub times: Vec<f64>,
    pub complexity: Vec<f64>,
}

impl ComplexityCurve {
    /// Trapezoidal time average over the samples inside `[t0, t1]`.
    pub fn time_average(&self, t0: f64, t1: f64) -> Option<f64> {
        let pts: Vec<(f64, f64)> = self
            .times
            .iter()
            .zip(&self.complexity)
            .filter(|(t, _)| **t >= t0 && **t <= t1)
            .map(|(t, c)| (*t, *c))
            .collect();
        match pts.len() {
            0 => None,
            1 => Some(pts[0].1),
            _ => {
                let area: f64 = pts
                    .windows(2)
                    .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[1].1 + w[0].1))
                    .sum();
                Some(area / (pts[pts.len() - 1].0 - pts[0].0))
            }
        }
    }

    pub fn max(&self) -> f64 {
        self.complexity
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Complexity curve of a schedule at the given sample times.
pub fn quench_complexity(
    schedule: &QuenchSchedule,
    times: &[f64],
    grid: &MomentumGrid,
) -> Result<ComplexityCurve> {
    let complexity = times
        .par_iter()
        .map(|&t| schedule.complexity_at(t, grid))
        .collect::<Result<Vec<_>>>()?;
    Ok(ComplexityCurve {
        times: times.to_vec(),
        complexity,
    })
}

/// `samples` evenly spaced times covering `[0, total_duration]`.
pub fn sample_times(schedule: &QuenchSchedule, samples: usize) -> Vec<f64> {
    linspace(
        0.0,
        schedule.total_duration(),
        samples.saturating_sub(1).max(1),
    )
}

/// Closed-form per-mode loss after a single quench,
/// `sin^2(phi_f - phi_i) sin^2(R_f t)`.
pub fn single_quench_mode_loss(initial: &BlochComponents, fin: &BlochComponents, t: f64) -> f64 {
    (fin.phi - initial.phi).sin().powi(2) * (fin.r * t).sin().powi(2)
}

/// Closed-form single-quench complexity.
pub fn single_quench_complexity(
    initial: &ModelParams,
    final_params: &ModelParams,
    t: f64,
    grid: &MomentumGrid,
) -> Result<f64> {
    let integral = grid.integrate(|k| {
        single_quench_mode_loss(&initial.components(k), &final_params.components(k), t)
    })?;
    Ok(initial.complexity_prefactor() * integral)
}

/// Late-time average of a single quench: `(prefactor / 2) int sin^2(phi_f - phi_i) dk`.
pub fn plateau_prediction(
    initial: &ModelParams,
    final_params: &ModelParams,
    grid: &MomentumGrid,
) -> Result<f64> {
    let integral = grid.integrate(|k| {
        (final_params.components(k).phi - initial.components(k).phi)
            .sin()
            .powi(2)
    })?;
    Ok(0.5 * initial.complexity_prefactor() * integral)
}
