use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty graph")]
    EmptyGraph,

    #[error("node {node} out of range (network has {node_count} nodes)")]
    NodeOutOfRange { node: usize, node_count: usize },

    #[error("unknown node token {0:?}")]
    UnknownNode(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("degree distribution cannot be normalized: {0}")]
    Unnormalizable(String),

    #[error("degree sequence has odd sum {0}")]
    OddDegreeSum(usize),

    #[error("node {node} requests degree {degree} but the network has only {node_count} nodes")]
    DegreeTooLarge {
        node: usize,
        degree: usize,
        node_count: usize,
    },

    #[error("community network generation failed after {attempts} attempts: {reason}")]
    GenerationFailed { attempts: usize, reason: String },

    #[error("prevalence quota {quota} exceeds node count {node_count}")]
    QuotaExceedsNodes { quota: usize, node_count: usize },

    #[error("protocol {0} requires a community partition")]
    MissingPartition(&'static str),

    #[error("empty pool: no node is eligible as a seed under the {0} strategy")]
    EmptySeedPool(&'static str),

    #[error("empty sample")]
    EmptySample,

    #[error("participant with zero degree at sample position {0}")]
    ZeroDegree(usize),

    #[error("empty estimate list")]
    EmptyEstimates,

    #[error("true prevalence must be positive")]
    ZeroPrevalence,

    #[error("sample size {size} exceeds population {node_count}")]
    SampleTooLarge { size: usize, node_count: usize },

    #[error("design effect needs at least two estimates on each side (got {rds} RDS, {srs} SRS)")]
    TooFewEstimates { rds: usize, srs: usize },

    #[error("simple random sample variance is zero")]
    ZeroSrsVariance,

    #[error("network is disconnected ({} components, sizes {:?})", .sizes.len(), .sizes)]
    Disconnected { sizes: Vec<usize> },

    #[error("eigen-solver did not converge in {iterations} iterations (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("mixing time requires a positive spectral gap, got {0}")]
    NonPositiveGap(f64),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("config: {0}")]
    Config(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl ToString, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.to_string(),
            line,
            message: message.into(),
        }
    }
}
