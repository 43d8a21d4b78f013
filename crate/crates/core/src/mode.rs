//! Per-momentum-mode SU(2) algebra.
//!
//! Every model in this crate decouples into independent pairs `(k, -k)` whose
//! dynamics stays inside the two-dimensional space spanned by `|1,1>` (both
//! modes occupied, spin `+1/2`) and `|0,0>` (vacuum, spin `-1/2`). In the
//! ordered basis `(|1,1>, |0,0>)` the traceless part of a mode Hamiltonian is
//!
//! ```text
//! H = -r (cos(phi) sigma_3 + sin(phi) sigma_2)
//! ```
//!
//! with eigenvalues `-r` (ground state) and `+r`. The ground state is
//! `sin(phi/2)|0,0> - i cos(phi/2)|1,1>`.

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;

/// 2x2 complex matrix acting on a mode state.
pub type Mat2 = Matrix2<Complex64>;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The per-mode vector `(R2, R3)` with magnitude `r` and folded angle `phi`.
///
/// `phi = atan2(|r2|, r3)` lies in `[0, pi]`. The sign of `r2` is kept in the
/// raw component for callers that need the oriented angle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochComponents {
    pub r2: f64,
    pub r3: f64,
    pub r: f64,
    pub phi: f64,
}

impl BlochComponents {
    pub fn new(r2: f64, r3: f64) -> Self {
        let r = r2.hypot(r3);
        // r = 0 is a gap-closing mode; phi is pinned to 0 there.
        let phi = if r == 0.0 { 0.0 } else { r2.abs().atan2(r3) };
        BlochComponents { r2, r3, r, phi }
    }

    pub fn is_degenerate(&self) -> bool {
        self.r == 0.0
    }

    /// Angle of `(r2, r3)` measured from the 3-axis, keeping the sign of `r2`;
    /// lies in `(-pi, pi]`.
    pub fn signed_angle(&self) -> f64 {
        if self.r == 0.0 {
            0.0
        } else {
            self.r2.atan2(self.r3)
        }
    }

    /// Multiply both components by a positive factor (angle unchanged).
    pub fn scaled(&self, factor: f64) -> Self {
        BlochComponents::new(self.r2 * factor, self.r3 * factor)
    }
}

pub fn bloch_from_components(r2: f64, r3: f64) -> BlochComponents {
    BlochComponents::new(r2, r3)
}

/// Normalized state in the ordered basis `(|1,1>, |0,0>)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeState {
    pub amp_up: Complex64,
    pub amp_down: Complex64,
}

impl ModeState {
    pub fn new(amp_up: Complex64, amp_down: Complex64) -> Self {
        ModeState { amp_up, amp_down }
    }

    pub fn up() -> Self {
        ModeState::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn down() -> Self {
        ModeState::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amp_up.norm_sqr() + self.amp_down.norm_sqr()
    }

    pub fn to_vector(self) -> Vector2<Complex64> {
        Vector2::new(self.amp_up, self.amp_down)
    }

    pub fn from_vector(v: Vector2<Complex64>) -> Self {
        ModeState::new(v[0], v[1])
    }

    pub fn apply(&self, u: &Mat2) -> ModeState {
        ModeState::from_vector(u * self.to_vector())
    }
}

/// Ground state of the mode Hamiltonian at angle `phi`:
/// `amp_up = -i cos(phi/2)`, `amp_down = sin(phi/2)`.
///
/// The formula is valid for any real angle; callers using the folded angle
/// pass `phi` in `[0, pi]`.
pub fn ground_state(phi: f64) -> ModeState {
    let (s, c) = (0.5 * phi).sin_cos();
    ModeState::new(Complex64::new(0.0, -c), Complex64::new(s, 0.0))
}

/// `<a|b>`.
pub fn overlap(a: &ModeState, b: &ModeState) -> Complex64 {
    a.amp_up.conj() * b.amp_up + a.amp_down.conj() * b.amp_down
}

/// A single mode Hamiltonian `identity_shift * I - r (cos(angle) sigma_3 + sin(angle) sigma_2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeHamiltonian {
    pub bloch: BlochComponents,
    pub identity_shift: f64,
    angle: f64,
}

impl ModeHamiltonian {
    /// Hamiltonian at the folded angle `bloch.phi`.
    pub fn new(bloch: BlochComponents, identity_shift: f64) -> Self {
        ModeHamiltonian {
            bloch,
            identity_shift,
            angle: bloch.phi,
        }
    }

    /// Hamiltonian at the oriented angle `atan2(r2, r3)`, i.e. the mode matrix
    /// `-(r3 sigma_3 + r2 sigma_2)` with the sign of `r2` intact.
    pub fn oriented(bloch: BlochComponents, identity_shift: f64) -> Self {
        ModeHamiltonian {
            bloch,
            identity_shift,
            angle: bloch.signed_angle(),
        }
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn gap(&self) -> f64 {
        self.bloch.r
    }

    pub fn ground_state(&self) -> ModeState {
        ground_state(self.angle)
    }

    pub fn matrix(&self) -> Mat2 {
        let r = self.bloch.r;
        let (s, c) = self.angle.sin_cos();
        let shift = Complex64::new(self.identity_shift, 0.0);
        Mat2::new(shift - r * c, I * (r * s), -I * (r * s), shift + r * c)
    }

    pub fn unitary(&self, t: f64) -> Mat2 {
        mode_unitary(self, t)
    }
}

/// `exp(-i H t)` in closed form.
///
/// With `H = shift + v.sigma`, `|v| = r`, the exponential is
/// `e^{-i shift t} (cos(rt) - i sin(rt) v.sigma / r)`, which stays finite at
/// `r = 0`.
pub fn mode_unitary(h: &ModeHamiltonian, t: f64) -> Mat2 {
    let r = h.bloch.r;
    let (sa, ca) = h.angle.sin_cos();
    let (srt, crt) = (r * t).sin_cos();
    let phase = Complex64::from_polar(1.0, -h.identity_shift * t);
    let off = Complex64::new(srt * sa, 0.0);
    Mat2::new(
        Complex64::new(crt, srt * ca),
        off,
        -off,
        Complex64::new(crt, -srt * ca),
    ) * phase
}
