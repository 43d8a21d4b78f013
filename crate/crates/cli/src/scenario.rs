//! Scenario files: one TOML document per run, tagged by `kind`.

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use spread_core::models::{Model, ModelParams};
use spread_core::numerics::{MomentumGrid, DEFAULT_MOMENTUM_INTERVALS};

/// Parameter values keyed by field name (`h`, `j3`, `gamma`, `t1`, `t2`).
pub type ParamTable = BTreeMap<String, f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelName {
    ThreeSpin,
    Xy,
    Ssh,
}

impl From<ModelName> for Model {
    fn from(m: ModelName) -> Model {
        match m {
            ModelName::ThreeSpin => Model::ThreeSpin,
            ModelName::Xy => Model::Xy,
            ModelName::Ssh => Model::Ssh,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSettings {
    #[serde(default = "default_intervals")]
    pub intervals: usize,
}

impl Default for GridSettings {
    fn default() -> Self {
        GridSettings {
            intervals: DEFAULT_MOMENTUM_INTERVALS,
        }
    }
}

fn default_intervals() -> usize {
    DEFAULT_MOMENTUM_INTERVALS
}

fn default_samples() -> usize {
    spread_core::spread::DEFAULT_TIME_SAMPLES
}

fn default_steps_per_period() -> usize {
    spread_core::floquet::DEFAULT_STEPS_PER_PERIOD
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub axis: String,
    pub start: f64,
    pub stop: f64,
    /// Number of intervals; the sweep has `steps + 1` points.
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeSpec {
    pub end: f64,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DriveSettings {
    pub delta: f64,
    pub period: f64,
    #[serde(default = "default_steps_per_period")]
    pub steps_per_period: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroundSweep {
    pub name: String,
    pub model: ModelName,
    #[serde(default)]
    pub grid: GridSettings,
    pub params: ParamTable,
    pub sweep: SweepSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuenchCase {
    pub label: String,
    pub initial: ParamTable,
    #[serde(rename = "final")]
    pub final_params: ParamTable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuenchCurves {
    pub name: String,
    pub model: ModelName,
    #[serde(default)]
    pub grid: GridSettings,
    pub time: TimeSpec,
    pub cases: Vec<QuenchCase>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentSpec {
    pub params: ParamTable,
    pub duration: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiQuenchCase {
    pub label: String,
    pub initial: ParamTable,
    pub segments: Vec<SegmentSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiQuench {
    pub name: String,
    pub model: ModelName,
    #[serde(default)]
    pub grid: GridSettings,
    #[serde(default = "default_samples")]
    pub samples: usize,
    pub cases: Vec<MultiQuenchCase>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleRange {
    pub start: u32,
    pub stop: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FloquetCase {
    pub label: String,
    pub base: ParamTable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FloquetVsN {
    pub name: String,
    pub model: ModelName,
    #[serde(default)]
    pub grid: GridSettings,
    pub drive: DriveSettings,
    pub cycles: CycleRange,
    pub cases: Vec<FloquetCase>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FloquetSweep {
    pub name: String,
    pub model: ModelName,
    #[serde(default)]
    pub grid: GridSettings,
    pub drive: DriveSettings,
    pub n_cycles: u32,
    pub base: ParamTable,
    pub sweep: SweepSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkSweep {
    pub name: String,
    pub model: ModelName,
    #[serde(default)]
    pub grid: GridSettings,
    /// Initial parameters; the sweep axis runs over one of these.
    pub initial: ParamTable,
    #[serde(rename = "final")]
    pub final_params: ParamTable,
    pub sweep: SweepSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Scenario {
    GroundSweep(GroundSweep),
    Quench(QuenchCurves),
    Multiquench(MultiQuench),
    FloquetVsN(FloquetVsN),
    FloquetSweep(FloquetSweep),
    WorkSweep(WorkSweep),
}

pub const KINDS: [&str; 6] = [
    "ground-sweep",
    "quench",
    "multiquench",
    "floquet-vs-n",
    "floquet-sweep",
    "work-sweep",
];

fn typed<T: serde::de::DeserializeOwned>(doc: toml::Value) -> Result<T> {
    serde_path_to_error::deserialize(doc).map_err(|e| {
        let path = e.path().to_string();
        anyhow::anyhow!("{path}: {}", e.into_inner().to_string().trim_end())
    })
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Self> {
        let mut doc: toml::Table = text.parse().context("scenario is not valid TOML")?;
        let kind = match doc.remove("kind") {
            Some(toml::Value::String(k)) => k,
            Some(other) => bail!("kind: expected a string, got {}", other.type_str()),
            None => bail!("kind: missing; expected one of {}", KINDS.join(", ")),
        };
        let doc = toml::Value::Table(doc);
        let scenario = match kind.as_str() {
            "ground-sweep" => Scenario::GroundSweep(typed(doc)?),
            "quench" => Scenario::Quench(typed(doc)?),
            "multiquench" => Scenario::Multiquench(typed(doc)?),
            "floquet-vs-n" => Scenario::FloquetVsN(typed(doc)?),
            "floquet-sweep" => Scenario::FloquetSweep(typed(doc)?),
            "work-sweep" => Scenario::WorkSweep(typed(doc)?),
            other => bail!(
                "kind: unknown scenario kind `{other}`; expected one of {}",
                KINDS.join(", ")
            ),
        };
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scenarios serialize to TOML")
    }

    pub fn kind(&self) -> &'static str {
        let i = match self {
            Scenario::GroundSweep(_) => 0,
            Scenario::Quench(_) => 1,
            Scenario::Multiquench(_) => 2,
            Scenario::FloquetVsN(_) => 3,
            Scenario::FloquetSweep(_) => 4,
            Scenario::WorkSweep(_) => 5,
        };
        KINDS[i]
    }

    pub fn name(&self) -> &str {
        match self {
            Scenario::GroundSweep(s) => &s.name,
            Scenario::Quench(s) => &s.name,
            Scenario::Multiquench(s) => &s.name,
            Scenario::FloquetVsN(s) => &s.name,
            Scenario::FloquetSweep(s) => &s.name,
            Scenario::WorkSweep(s) => &s.name,
        }
    }

    pub fn model(&self) -> Model {
        let m = match self {
            Scenario::GroundSweep(s) => s.model,
            Scenario::Quench(s) => s.model,
            Scenario::Multiquench(s) => s.model,
            Scenario::FloquetVsN(s) => s.model,
            Scenario::FloquetSweep(s) => s.model,
            Scenario::WorkSweep(s) => s.model,
        };
        m.into()
    }

    pub fn grid_mut(&mut self) -> &mut GridSettings {
        match self {
            Scenario::GroundSweep(s) => &mut s.grid,
            Scenario::Quench(s) => &mut s.grid,
            Scenario::Multiquench(s) => &mut s.grid,
            Scenario::FloquetVsN(s) => &mut s.grid,
            Scenario::FloquetSweep(s) => &mut s.grid,
            Scenario::WorkSweep(s) => &mut s.grid,
        }
    }

    pub fn grid(&self) -> Result<MomentumGrid> {
        let intervals = match self {
            Scenario::GroundSweep(s) => s.grid.intervals,
            Scenario::Quench(s) => s.grid.intervals,
            Scenario::Multiquench(s) => s.grid.intervals,
            Scenario::FloquetVsN(s) => s.grid.intervals,
            Scenario::FloquetSweep(s) => s.grid.intervals,
            Scenario::WorkSweep(s) => s.grid.intervals,
        };
        MomentumGrid::new(intervals).context("grid.intervals")
    }

    /// Check every parameter table and numeric setting against the model.
    pub fn validate(&self) -> Result<()> {
        check_name(self.name())?;
        self.grid()?;
        let model = self.model();
        match self {
            Scenario::GroundSweep(s) => {
                let base = params(model, &s.params, "params")?;
                check_sweep(&base, &s.sweep)?;
            }
            Scenario::Quench(s) => {
                check_cases(s.cases.iter().map(|c| c.label.as_str()))?;
                if !(s.time.end.is_finite() && s.time.end > 0.0) {
                    bail!("time.end: must be positive, got {}", s.time.end);
                }
                if s.time.samples < 2 {
                    bail!("time.samples: need at least 2, got {}", s.time.samples);
                }
                for (i, c) in s.cases.iter().enumerate() {
                    params(model, &c.initial, &format!("cases[{i}].initial"))?;
                    params(model, &c.final_params, &format!("cases[{i}].final"))?;
                }
            }
            Scenario::Multiquench(s) => {
                check_cases(s.cases.iter().map(|c| c.label.as_str()))?;
                if s.samples < 2 {
                    bail!("samples: need at least 2, got {}", s.samples);
                }
                let mut total = None;
                for (i, c) in s.cases.iter().enumerate() {
                    let schedule = schedule(model, c, i)?;
                    let t = schedule.total_duration();
                    match total {
                        None => total = Some(t),
                        Some(prev) if (prev - t).abs() > 1e-12 * prev.max(1.0) => bail!(
                            "cases[{i}].segments: total duration {t} differs from the first case ({prev})"
                        ),
                        _ => {}
                    }
                }
            }
            Scenario::FloquetVsN(s) => {
                check_cases(s.cases.iter().map(|c| c.label.as_str()))?;
                if s.cycles.stop < s.cycles.start {
                    bail!(
                        "cycles: stop ({}) is below start ({})",
                        s.cycles.stop,
                        s.cycles.start
                    );
                }
                for (i, c) in s.cases.iter().enumerate() {
                    let base = params(model, &c.base, &format!("cases[{i}].base"))?;
                    drive(&base, &s.drive, 0).with_context(|| format!("cases[{i}]"))?;
                }
            }
            Scenario::FloquetSweep(s) => {
                let base = params(model, &s.base, "base")?;
                check_sweep(&base, &s.sweep)?;
                drive(&base, &s.drive, s.n_cycles)?;
                for x in [s.sweep.start, s.sweep.stop] {
                    let point = base.with(&s.sweep.axis, x)?;
                    drive(&point, &s.drive, s.n_cycles).with_context(|| {
                        format!("sweep: drive invalid at {} = {x}", s.sweep.axis)
                    })?;
                }
            }
            Scenario::WorkSweep(s) => {
                let initial = params(model, &s.initial, "initial")?;
                params(model, &s.final_params, "final")?;
                check_sweep(&initial, &s.sweep)?;
            }
        }
        Ok(())
    }
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty()
        || !name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == '.')
    {
        bail!("name: `{name}` must be non-empty and use only letters, digits, '-', '_' or '.'");
    }
    Ok(())
}

fn check_cases<'a>(labels: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = Vec::new();
    for (i, label) in labels.enumerate() {
        if label.is_empty() || label.contains(',') || label.contains('\n') {
            bail!("cases[{i}].label: `{label}` must be non-empty without commas or newlines");
        }
        if seen.contains(&label) {
            bail!("cases[{i}].label: duplicate label `{label}`");
        }
        seen.push(label);
    }
    if seen.is_empty() {
        bail!("cases: at least one case is required");
    }
    Ok(())
}

fn check_sweep(base: &ModelParams, sweep: &SweepSpec) -> Result<()> {
    base.get(&sweep.axis).context("sweep.axis")?;
    if sweep.steps < 2 {
        bail!(
            "sweep.steps: need at least 2 intervals, got {}",
            sweep.steps
        );
    }
    if !(sweep.start.is_finite() && sweep.stop.is_finite() && sweep.start < sweep.stop) {
        bail!(
            "sweep: need finite start < stop, got [{}, {}]",
            sweep.start,
            sweep.stop
        );
    }
    base.with(&sweep.axis, sweep.start)?
        .validate()
        .context("sweep.start")?;
    base.with(&sweep.axis, sweep.stop)?
        .validate()
        .context("sweep.stop")?;
    Ok(())
}

/// Build model parameters from a table, naming `path` in errors.
pub fn params(model: Model, table: &ParamTable, path: &str) -> Result<ModelParams> {
    ModelParams::from_fields(model, table.iter().map(|(k, v)| (k.as_str(), *v)))
        .with_context(|| format!("{path}: invalid parameters"))
}

pub fn schedule(
    model: Model,
    case: &MultiQuenchCase,
    index: usize,
) -> Result<spread_core::QuenchSchedule> {
    let initial = params(model, &case.initial, &format!("cases[{index}].initial"))?;
    let segments = case
        .segments
        .iter()
        .enumerate()
        .map(|(j, s)| {
            Ok(spread_core::Segment {
                params: params(
                    model,
                    &s.params,
                    &format!("cases[{index}].segments[{j}].params"),
                )?,
                duration: s.duration,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    spread_core::QuenchSchedule::new(initial, segments)
        .with_context(|| format!("cases[{index}].segments"))
}

pub fn drive(
    base: &ModelParams,
    d: &DriveSettings,
    n_cycles: u32,
) -> Result<spread_core::DriveSpec> {
    if d.steps_per_period < 64 || !d.steps_per_period.is_multiple_of(2) {
        bail!(
            "drive.steps_per_period: must be even and at least 64, got {}",
            d.steps_per_period
        );
    }
    spread_core::DriveSpec::new(*base, d.delta, d.period, n_cycles).context("drive")
}
