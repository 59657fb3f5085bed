use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown space `{name}`; available: {}", available.join(", "))]
    UnknownSpace { name: String, available: Vec<String> },

    #[error("invalid root system: {0}")]
    InvalidRootSystem(String),

    #[error("malformed description{}: {message}", location.as_ref().map(|l| format!(" ({l})")).unwrap_or_default())]
    Description {
        location: Option<String>,
        message: String,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("quadrature did not reach target {target:e} (achieved {achieved:e} with {nodes} nodes)")]
    Quadrature {
        target: f64,
        achieved: f64,
        nodes: usize,
    },

    #[error("representation model error: {0}")]
    Model(String),

    #[error("ratio sequence did not converge (last change {0:e})")]
    NotConverged(f64),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
