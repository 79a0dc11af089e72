//! RDS-II prevalence estimation and ensemble statistics.

use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Network;
use crate::infection::InfectionAssignment;
use crate::rds::RdsOutcome;

/// Degrees and trait flags of a sample, in recruitment order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleView {
    pub degrees: Vec<usize>,
    pub infected: Vec<bool>,
}

impl SampleView {
    pub fn new(degrees: Vec<usize>, infected: Vec<bool>) -> Self {
        assert_eq!(degrees.len(), infected.len(), "one degree per flag");
        Self { degrees, infected }
    }

    /// The first `limit` participants of an outcome (all when `None`),
    /// optionally leaving out the seeds. Degrees are true network degrees.
    pub fn from_outcome(
        net: &Network,
        inf: &InfectionAssignment,
        out: &RdsOutcome,
        limit: Option<usize>,
        include_seeds: bool,
    ) -> Self {
        let (degrees, infected) = out
            .participants
            .iter()
            .take(limit.unwrap_or(usize::MAX))
            .filter(|p| include_seeds || p.recruiter.is_some())
            .map(|p| (net.neighbors(p.node).len(), inf.is_infected(p.node)))
            .unzip();
        Self { degrees, infected }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// Inverse-degree weighted share of infected participants.
pub fn rds2_estimate(s: &SampleView) -> Result<f64> {
    if s.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut infected = 0.0;
    let mut total = 0.0;
    for (i, (&k, &a)) in s.degrees.iter().zip(&s.infected).enumerate() {
        if k == 0 {
            return Err(Error::ZeroDegree(i));
        }
        let w = 1.0 / k as f64;
        total += w;
        if a {
            infected += w;
        }
    }
    Ok(infected / total)
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Divide-by-m variance.
fn population_variance(xs: &[f64]) -> f64 {
    let m = mean(xs);
    xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / xs.len() as f64
}

/// Mean θ and population standard deviation σ of an ensemble of estimates.
pub fn aggregate_theta(estimates: &[f64]) -> Result<(f64, f64)> {
    if estimates.is_empty() {
        return Err(Error::EmptyEstimates);
    }
    Ok((mean(estimates), population_variance(estimates).sqrt()))
}

/// Mean absolute error δ and the relative bias δ / P_A.
pub fn average_bias(estimates: &[f64], true_p: f64) -> Result<(f64, f64)> {
    if estimates.is_empty() {
        return Err(Error::EmptyEstimates);
    }
    if true_p <= 0.0 {
        return Err(Error::ZeroPrevalence);
    }
    let delta = estimates.iter().map(|e| (e - true_p).abs()).sum::<f64>() / estimates.len() as f64;
    Ok((delta, delta / true_p))
}

/// One uniform without-replacement sample per requested size; returns each
/// sample's infected fraction.
pub fn srs_baseline<R: Rng + ?Sized>(
    net: &Network,
    inf: &InfectionAssignment,
    sizes: &[usize],
    rng: &mut R,
) -> Result<Vec<f64>> {
    let n = net.node_count();
    sizes
        .iter()
        .map(|&size| {
            if size > n {
                return Err(Error::SampleTooLarge {
                    size,
                    node_count: n,
                });
            }
            if size == 0 {
                return Err(Error::EmptySample);
            }
            let hits = index::sample(rng, n, size)
                .into_iter()
                .filter(|&v| inf.is_infected(v))
                .count();
            Ok(hits as f64 / size as f64)
        })
        .collect()
}

/// Ratio of the RDS estimator's variance to the SRS estimator's variance.
pub fn design_effect(rds_estimates: &[f64], srs_estimates: &[f64]) -> Result<f64> {
    if rds_estimates.len() < 2 || srs_estimates.len() < 2 {
        return Err(Error::TooFewEstimates {
            rds: rds_estimates.len(),
            srs: srs_estimates.len(),
        });
    }
    let srs = population_variance(srs_estimates);
    if srs == 0.0 {
        return Err(Error::ZeroSrsVariance);
    }
    Ok(population_variance(rds_estimates) / srs)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleStats {
    pub theta: f64,
    pub sigma: f64,
    pub delta: f64,
    pub relative_bias: f64,
    /// NaN when the SRS variance vanishes or fewer than two runs exist.
    pub design_effect: f64,
    pub m: usize,
}

impl EnsembleStats {
    pub fn compute(estimates: &[f64], srs_estimates: &[f64], true_p: f64) -> Result<Self> {
        let (theta, sigma) = aggregate_theta(estimates)?;
        let (delta, relative_bias) = average_bias(estimates, true_p)?;
        let design_effect = match design_effect(estimates, srs_estimates) {
            Ok(d) => d,
            Err(Error::TooFewEstimates { .. } | Error::ZeroSrsVariance) => f64::NAN,
            Err(e) => return Err(e),
        };
        Ok(Self {
            theta,
            sigma,
            delta,
            relative_bias,
            design_effect,
            m: estimates.len(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergencePoint {
    pub size: usize,
    pub theta: f64,
    pub sigma: f64,
    /// Outcomes that reached this size.
    pub count: usize,
}

/// Estimates from the first `S` participants of every outcome that reached
/// `S`, for each requested `S`. Empty strata report NaN with count zero.
pub fn convergence_curve(
    outcomes: &[RdsOutcome],
    net: &Network,
    inf: &InfectionAssignment,
    sizes: &[usize],
) -> Result<Vec<ConvergencePoint>> {
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::invalid("sizes", "must be ascending"));
    }
    sizes
        .iter()
        .map(|&size| {
            let estimates = outcomes
                .iter()
                .filter(|o| size > 0 && o.omega() >= size)
                .map(|o| rds2_estimate(&SampleView::from_outcome(net, inf, o, Some(size), true)))
                .collect::<Result<Vec<f64>>>()?;
            let (theta, sigma) = aggregate_theta(&estimates).unwrap_or((f64::NAN, f64::NAN));
            Ok(ConvergencePoint {
                size,
                theta,
                sigma,
                count: estimates.len(),
            })
        })
        .collect()
}
