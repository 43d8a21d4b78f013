//! Spread complexity, quench and Floquet dynamics, and work statistics for
//! free-fermion chains that decouple into two-level momentum modes.
//!
//! Supported chains are the transverse Ising chain with three-spin
//! interaction, the anisotropic XY chain and the SSH chain.

pub mod error;
pub mod floquet;
pub mod mode;
pub mod models;
pub mod numerics;
pub mod spread;
pub mod workstats;

pub use error::{Error, Result};
pub use floquet::{DriveSpec, FloquetAngles};
pub use mode::{BlochComponents, ModeHamiltonian, ModeState};
pub use models::{CriticalLine, Model, ModelParams, SSHParams, ThreeSpinParams, XYParams};
pub use numerics::{MomentumGrid, PeakSignal, SweepResult};
pub use spread::{ComplexityCurve, QuenchSchedule, Segment};
pub use workstats::{LanczosData, WorkStats};
