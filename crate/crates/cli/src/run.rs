//! Evaluate a scenario into a table.

use anyhow::{Context, Result};
use spread_core::floquet::{floquet_complexity_vs_n, floquet_sweep};
use spread_core::spread::{
    complexity_derivative_sweep, quench_complexity, sample_times, QuenchSchedule,
};
use spread_core::workstats::work_stats_derivative_sweep;
use spread_core::{numerics::linspace, ModelParams};

use crate::output::Table;
use crate::scenario::{self, Scenario, SweepSpec};

fn sweep_context(base: &ModelParams, s: &SweepSpec) -> String {
    format!(
        "sweeping {} over [{}, {}] from {base}",
        s.axis, s.start, s.stop
    )
}

pub fn evaluate(sc: &Scenario) -> Result<Table> {
    let grid = sc.grid()?;
    let model = sc.model();
    let mut table = Table::new();
    match sc {
        Scenario::GroundSweep(s) => {
            let base = scenario::params(model, &s.params, "params")?;
            let r = complexity_derivative_sweep(
                &base,
                &s.sweep.axis,
                s.sweep.start,
                s.sweep.stop,
                s.sweep.steps,
                &grid,
            )
            .with_context(|| sweep_context(&base, &s.sweep))?;
            table.push(r.axis.clone(), r.xs);
            table.push("complexity", r.values);
            table.push(format!("d_complexity_d_{}", r.axis), r.derivative);
        }
        Scenario::Quench(s) => {
            let times = linspace(0.0, s.time.end, s.time.samples - 1);
            table.push("t", times.clone());
            for (i, c) in s.cases.iter().enumerate() {
                let ini = scenario::params(model, &c.initial, &format!("cases[{i}].initial"))?;
                let fin = scenario::params(model, &c.final_params, &format!("cases[{i}].final"))?;
                let schedule = QuenchSchedule::single(ini, fin, s.time.end)?;
                let curve = quench_complexity(&schedule, &times, &grid)
                    .with_context(|| format!("case `{}`: quench {ini} -> {fin}", c.label))?;
                table.push(c.label.clone(), curve.complexity);
            }
        }
        Scenario::Multiquench(s) => {
            let mut columns = Vec::new();
            for (i, c) in s.cases.iter().enumerate() {
                let schedule = scenario::schedule(model, c, i)?;
                let times = sample_times(&schedule, s.samples);
                let curve = quench_complexity(&schedule, &times, &grid).with_context(|| {
                    format!("case `{}`: schedule from {}", c.label, schedule.initial())
                })?;
                if table.columns.is_empty() {
                    table.push("t", curve.times);
                }
                columns.push((c.label.clone(), curve.complexity));
            }
            for (label, values) in columns {
                table.push(label, values);
            }
        }
        Scenario::FloquetVsN(s) => {
            let cycles: Vec<u32> = (s.cycles.start..=s.cycles.stop).collect();
            table.push("n", cycles.iter().map(|&n| n as f64).collect());
            for (i, c) in s.cases.iter().enumerate() {
                let base = scenario::params(model, &c.base, &format!("cases[{i}].base"))?;
                let spec = scenario::drive(&base, &s.drive, 0)?;
                let values =
                    floquet_complexity_vs_n(&spec, &cycles, &grid, s.drive.steps_per_period)
                        .with_context(|| format!("case `{}`: drive around {base}", c.label))?;
                table.push(c.label.clone(), values);
            }
        }
        Scenario::FloquetSweep(s) => {
            let base = scenario::params(model, &s.base, "base")?;
            let spec = scenario::drive(&base, &s.drive, s.n_cycles)?;
            let r = floquet_sweep(
                &spec,
                &s.sweep.axis,
                s.sweep.start,
                s.sweep.stop,
                s.sweep.steps,
                &grid,
                s.drive.steps_per_period,
            )
            .with_context(|| sweep_context(&base, &s.sweep))?;
            table.push(r.axis.clone(), r.xs);
            table.push("complexity", r.values);
            table.push(format!("d_complexity_d_{}", r.axis), r.derivative);
        }
        Scenario::WorkSweep(s) => {
            let ini = scenario::params(model, &s.initial, "initial")?;
            let fin = scenario::params(model, &s.final_params, "final")?;
            let w = work_stats_derivative_sweep(
                &ini,
                &fin,
                &s.sweep.axis,
                s.sweep.start,
                s.sweep.stop,
                s.sweep.steps,
                &grid,
            )
            .with_context(|| format!("{} quenching to {fin}", sweep_context(&ini, &s.sweep)))?;
            table.push(w.mean.axis.clone(), w.mean.xs);
            table.push("mean", w.mean.values);
            table.push("variance", w.variance.values);
            table.push("d_mean", w.mean.derivative);
            table.push("d_variance", w.variance.derivative);
        }
    }
    Ok(table)
}
