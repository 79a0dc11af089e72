//! Replicated experiments over a grid of response rates, CSV output and
//! aggregation of finished runs.

pub mod config;
pub mod experiment;
pub mod summary;

pub use config::{default_output_dir, NetworkModel, NetworkSource, ScenarioConfig, OUTPUT_DIR_ENV};
pub use experiment::{
    prepare_networks, run_experiment, simulate_experiment, simulate_on, CellResult, OutputFiles,
    PreparedNetwork, SimRecord,
};
pub use summary::{summarize, SummaryRow, SummaryTable};
