//! The three chains as maps `k -> (R2, R3)`.
//!
//! All models are written with `J_x = 1`. Momenta live in `[0, pi]`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mode::BlochComponents;

const NEGATIVE_HOPPING_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    ThreeSpin,
    Xy,
    Ssh,
}

impl Model {
    pub const ALL: [Model; 3] = [Model::ThreeSpin, Model::Xy, Model::Ssh];

    pub fn name(self) -> &'static str {
        match self {
            Model::ThreeSpin => "three-spin",
            Model::Xy => "xy",
            Model::Ssh => "ssh",
        }
    }

    pub fn fields(self) -> &'static [&'static str] {
        match self {
            Model::ThreeSpin => &["h", "j3"],
            Model::Xy => &["h", "gamma"],
            Model::Ssh => &["t1", "t2"],
        }
    }

    /// Measure in front of `int_0^pi dk` for spread complexity:
    /// `1/2pi` for the spin chains, `1/pi` for SSH.
    pub fn complexity_prefactor(self) -> f64 {
        match self {
            Model::ThreeSpin | Model::Xy => 0.5 / std::f64::consts::PI,
            Model::Ssh => 1.0 / std::f64::consts::PI,
        }
    }

    /// Rate of the driven dynamical phase in units of the instantaneous gap,
    /// `d(epsilon)/dt = rate * r(k, t)`. SSH carries an extra factor 2.
    pub fn dynamical_phase_rate(self) -> f64 {
        match self {
            Model::ThreeSpin | Model::Xy => 1.0,
            Model::Ssh => 2.0,
        }
    }

    pub fn critical_lines(self) -> &'static [CriticalLine] {
        critical_lines(self)
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "three-spin" | "three_spin" | "3spin" => Ok(Model::ThreeSpin),
            "xy" => Ok(Model::Xy),
            "ssh" => Ok(Model::Ssh),
            other => Err(Error::InvalidParameter(format!(
                "unknown model `{other}` (expected three-spin, xy or ssh)"
            ))),
        }
    }
}

/// Transverse Ising chain with three-spin coupling `j3` in field `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeSpinParams {
    pub h: f64,
    pub j3: f64,
}

/// XY chain with anisotropy `gamma` in field `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XYParams {
    pub h: f64,
    pub gamma: f64,
}

/// SSH chain with intra-cell hopping `t1` and inter-cell hopping `t2`; no staggered potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SSHParams {
    pub t1: f64,
    pub t2: f64,
}

/// `R2 = J3 sin 2k - sin k`, `R3 = h + cos k - J3 cos 2k`.
pub fn components_three_spin(p: &ThreeSpinParams, k: f64) -> BlochComponents {
    BlochComponents::new(
        p.j3 * (2.0 * k).sin() - k.sin(),
        p.h + k.cos() - p.j3 * (2.0 * k).cos(),
    )
}

/// `R2 = gamma sin k`, `R3 = h + cos k`.
pub fn components_xy(p: &XYParams, k: f64) -> BlochComponents {
    BlochComponents::new(p.gamma * k.sin(), p.h + k.cos())
}

/// `R2 = t1 - t2 cos k`, `R3 = t2 sin k`, so that `R^2 = t1^2 + t2^2 - 2 t1 t2 cos k`.
pub fn components_ssh(p: &SSHParams, k: f64) -> BlochComponents {
    BlochComponents::new(p.t1 - p.t2 * k.cos(), p.t2 * k.sin())
}

/// Parameters of one of the three models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelParams {
    ThreeSpin(ThreeSpinParams),
    Xy(XYParams),
    Ssh(SSHParams),
}

impl ModelParams {
    pub fn three_spin(h: f64, j3: f64) -> Self {
        ModelParams::ThreeSpin(ThreeSpinParams { h, j3 })
    }

    pub fn xy(h: f64, gamma: f64) -> Self {
        ModelParams::Xy(XYParams { h, gamma })
    }

    pub fn ssh(t1: f64, t2: f64) -> Self {
        ModelParams::Ssh(SSHParams { t1, t2 })
    }

    pub fn model(&self) -> Model {
        match self {
            ModelParams::ThreeSpin(_) => Model::ThreeSpin,
            ModelParams::Xy(_) => Model::Xy,
            ModelParams::Ssh(_) => Model::Ssh,
        }
    }

    pub fn complexity_prefactor(&self) -> f64 {
        self.model().complexity_prefactor()
    }

    pub fn components(&self, k: f64) -> BlochComponents {
        match self {
            ModelParams::ThreeSpin(p) => components_three_spin(p, k),
            ModelParams::Xy(p) => components_xy(p, k),
            ModelParams::Ssh(p) => components_ssh(p, k),
        }
    }

    /// Build parameters from `(field, value)` pairs; every field of the model
    /// must be given exactly once.
    pub fn from_fields<'a, I>(model: Model, fields: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, f64)>,
    {
        let names = model.fields();
        let mut values = [None::<f64>; 2];
        for (name, value) in fields {
            let slot = names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| unknown_field(model, name))?;
            if values[slot].replace(value).is_some() {
                return Err(Error::InvalidParameter(format!(
                    "field `{name}` given twice for model {model}"
                )));
            }
        }
        let get = |i: usize| {
            values[i].ok_or_else(|| {
                Error::InvalidParameter(format!("missing field `{}` for model {model}", names[i]))
            })
        };
        let params = match model {
            Model::ThreeSpin => ModelParams::three_spin(get(0)?, get(1)?),
            Model::Xy => ModelParams::xy(get(0)?, get(1)?),
            Model::Ssh => ModelParams::ssh(get(0)?, get(1)?),
        };
        params.validate()?;
        Ok(params)
    }

    pub fn get(&self, field: &str) -> Result<f64> {
        let v = match (self, field) {
            (ModelParams::ThreeSpin(p), "h") => p.h,
            (ModelParams::ThreeSpin(p), "j3") => p.j3,
            (ModelParams::Xy(p), "h") => p.h,
            (ModelParams::Xy(p), "gamma") => p.gamma,
            (ModelParams::Ssh(p), "t1") => p.t1,
            (ModelParams::Ssh(p), "t2") => p.t2,
            _ => return Err(unknown_field(self.model(), field)),
        };
        Ok(v)
    }

    /// Copy with one field replaced.
    pub fn with(&self, field: &str, value: f64) -> Result<Self> {
        let mut out = *self;
        match (&mut out, field) {
            (ModelParams::ThreeSpin(p), "h") => p.h = value,
            (ModelParams::ThreeSpin(p), "j3") => p.j3 = value,
            (ModelParams::Xy(p), "h") => p.h = value,
            (ModelParams::Xy(p), "gamma") => p.gamma = value,
            (ModelParams::Ssh(p), "t1") => p.t1 = value,
            (ModelParams::Ssh(p), "t2") => p.t2 = value,
            _ => return Err(unknown_field(self.model(), field)),
        }
        Ok(out)
    }

    pub fn values(&self) -> [f64; 2] {
        match self {
            ModelParams::ThreeSpin(p) => [p.h, p.j3],
            ModelParams::Xy(p) => [p.h, p.gamma],
            ModelParams::Ssh(p) => [p.t1, p.t2],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let model = self.model();
        for (name, v) in model.fields().iter().zip(self.values()) {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{model}.{name} must be finite, got {v}"
                )));
            }
        }
        if let ModelParams::Ssh(p) = self {
            for (name, v) in [("t1", p.t1), ("t2", p.t2)] {
                if v < -NEGATIVE_HOPPING_TOL {
                    return Err(Error::InvalidParameter(format!(
                        "ssh.{name} must be non-negative, got {v}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether the parameters sit on one of the model's gap-closing lines.
    pub fn is_critical(&self, tol: f64) -> bool {
        self.model()
            .critical_lines()
            .iter()
            .any(|line| line.contains(self, tol))
    }

    /// Parameters of the periodically driven chain at time `t`.
    pub fn driven(&self, delta: f64, omega: f64, t: f64) -> Result<Self> {
        driven_params(self, delta, omega, t)
    }
}

impl fmt::Display for ModelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let model = self.model();
        write!(f, "{model}(")?;
        for (i, (name, v)) in model.fields().iter().zip(self.values()).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}={v}")?;
        }
        f.write_str(")")
    }
}

fn unknown_field(model: Model, field: &str) -> Error {
    Error::UnknownField {
        model: model.name(),
        field: field.to_string(),
        expected: model.fields().join(", "),
    }
}

/// A manifold in parameter space on which the gap `r(k)` closes for some `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalLine {
    /// `h = J3 + 1`, gap closes at `k = pi`.
    ThreeSpinUpper,
    /// `h = J3 - 1`, gap closes at `k = 0`.
    ThreeSpinLower,
    /// `h = -J3` for `|J3| >= 1/2`, gap closes at `cos k0 = 1/(2 J3)`.
    ThreeSpinAnisotropic,
    /// `h = 1`, gap closes at `k = pi`.
    XyFieldUpper,
    /// `h = -1`, gap closes at `k = 0`.
    XyFieldLower,
    /// `gamma = 0` with `|h| <= 1`.
    XyIsotropic,
    /// `t1 = t2`, gap closes at `k = 0`.
    SshDimerization,
}

impl CriticalLine {
    pub fn description(self) -> &'static str {
        match self {
            CriticalLine::ThreeSpinUpper => "h = J3 + 1",
            CriticalLine::ThreeSpinLower => "h = J3 - 1",
            CriticalLine::ThreeSpinAnisotropic => "h = -J3 (|J3| >= 1/2)",
            CriticalLine::XyFieldUpper => "h = 1",
            CriticalLine::XyFieldLower => "h = -1",
            CriticalLine::XyIsotropic => "gamma = 0, |h| <= 1",
            CriticalLine::SshDimerization => "t1 = t2",
        }
    }

    pub fn contains(self, params: &ModelParams, tol: f64) -> bool {
        match (self, params) {
            (CriticalLine::ThreeSpinUpper, ModelParams::ThreeSpin(p)) => {
                (p.h - (p.j3 + 1.0)).abs() <= tol
            }
            (CriticalLine::ThreeSpinLower, ModelParams::ThreeSpin(p)) => {
                (p.h - (p.j3 - 1.0)).abs() <= tol
            }
            (CriticalLine::ThreeSpinAnisotropic, ModelParams::ThreeSpin(p)) => {
                p.j3.abs() >= 0.5 && (p.h + p.j3).abs() <= tol
            }
            (CriticalLine::XyFieldUpper, ModelParams::Xy(p)) => (p.h - 1.0).abs() <= tol,
            (CriticalLine::XyFieldLower, ModelParams::Xy(p)) => (p.h + 1.0).abs() <= tol,
            (CriticalLine::XyIsotropic, ModelParams::Xy(p)) => {
                p.gamma.abs() <= tol && p.h.abs() <= 1.0 + tol
            }
            (CriticalLine::SshDimerization, ModelParams::Ssh(p)) => (p.t1 - p.t2).abs() <= tol,
            _ => false,
        }
    }
}

pub fn critical_lines(model: Model) -> &'static [CriticalLine] {
    match model {
        Model::ThreeSpin => &[
            CriticalLine::ThreeSpinUpper,
            CriticalLine::ThreeSpinLower,
            CriticalLine::ThreeSpinAnisotropic,
        ],
        Model::Xy => &[
            CriticalLine::XyFieldUpper,
            CriticalLine::XyFieldLower,
            CriticalLine::XyIsotropic,
        ],
        Model::Ssh => &[CriticalLine::SshDimerization],
    }
}

/// Instantaneous parameters under the drive `v(t) = delta cos(omega t)`.
///
/// Spin chains drive the field, `h(t) = h + v(t)`. SSH drives both hoppings,
/// `t1(t) = t1 - v(t)`, `t2(t) = t2 + v(t)`, and rejects drives that make a
/// hopping negative.
pub fn driven_params(base: &ModelParams, delta: f64, omega: f64, t: f64) -> Result<ModelParams> {
    if omega.is_nan() || omega <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "drive frequency must be positive, got {omega}"
        )));
    }
    let v = delta * (omega * t).cos();
    let out = match *base {
        ModelParams::ThreeSpin(p) => ModelParams::three_spin(p.h + v, p.j3),
        ModelParams::Xy(p) => ModelParams::xy(p.h + v, p.gamma),
        ModelParams::Ssh(p) => ModelParams::ssh(p.t1 - v, p.t2 + v),
    };
    out.validate()?;
    Ok(out)
}
