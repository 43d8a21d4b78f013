use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An integrand produced NaN or infinity at a quadrature node.
    #[error("non-finite integrand value {value} at node {index} (x = {x})")]
    NonFinite { index: usize, x: f64, value: f64 },

    /// The initial-state gap vanishes, so the mode's ground state is undefined.
    #[error("degenerate mode{}: initial gap R = {gap:e}", fmt_k(*.k))]
    DegenerateMode { k: Option<f64>, gap: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown field `{field}` for model {model} (expected one of: {expected})")]
    UnknownField {
        model: &'static str,
        field: String,
        expected: String,
    },

    #[error("time {t} lies outside the schedule [0, {total}]")]
    TimeOutOfRange { t: f64, total: f64 },

    #[error("matrix is not Hermitian (max |H - H^dagger| = {0:e})")]
    NotHermitian(f64),

    /// Failure at one point of a parameter sweep.
    #[error("at {params}: {cause}")]
    AtPoint { params: String, cause: Box<Error> },
}

impl Error {
    pub fn at(self, params: impl std::fmt::Display) -> Error {
        Error::AtPoint {
            params: params.to_string(),
            cause: Box::new(self),
        }
    }
}

fn fmt_k(k: Option<f64>) -> String {
    match k {
        Some(k) => format!(" at k = {k}"),
        None => String::new(),
    }
}
