//! Respondent-driven sampling on synthetic and empirical social networks.
//!
//! The crate generates networks with tunable triangle density and community
//! structure, places a binary trait on a fixed share of nodes, simulates
//! chain-referral recruitment with coupons and response rates, and measures
//! how the inverse-degree (RDS-II) prevalence estimator behaves: its mean,
//! spread, bias and design effect, how it converges with sample size, and
//! how the random-walk spectral gap reflects community bottlenecks.
//!
//! | module | contents |
//! |---|---|
//! | [`graph`] | [`Network`], [`CommunityPartition`], clustering, components |
//! | [`io`] | edge-list, community-label and infection-label files |
//! | [`netgen`] | configuration model, triangle-rich and community generators |
//! | [`infection`] | RI / PI / PRI / SI / BI / SRI / BRI trait placement |
//! | [`rds`] | event-driven recruitment simulation and tree statistics |
//! | [`estimators`] | RDS-II, θ, σ, δ, Δ, design effect, convergence curves |
//! | [`spectral`] | λ₂ of the walk Laplacian, mixing time, response-rate bound |
//! | [`harness`] | scenario configs, replicated experiments, CSV summaries |

pub mod error;
pub mod estimators;
pub mod graph;
pub mod harness;
pub mod infection;
pub mod io;
pub mod netgen;
pub mod rds;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{CommunityPartition, Network, NodeId};
pub use infection::{InfectionAssignment, Protocol, ProtocolSpec};
pub use rds::{RdsConfig, RdsOutcome, SeedStrategy};
