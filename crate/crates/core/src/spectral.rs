//! Spectral gap of the random-walk Laplacian `L = I - A D^-1`.
//!
//! `A D^-1` is similar to the symmetric `M = D^-1/2 A D^-1/2`, so both share
//! a spectrum. The leading eigenvector of `M` is `D^1/2 · 1` with eigenvalue
//! one; deflating it leaves the second eigenvalue `μ₂` as the largest, and
//! `λ₂ = 1 - μ₂`. `μ₂` is found by Lanczos iteration with full
//! reorthogonalization, restarted from the current Ritz vector whenever the
//! Krylov basis reaches its size limit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Network;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 100_000;

/// Largest Krylov basis kept before restarting.
const MAX_BASIS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralReport {
    pub lambda2: f64,
    pub mixing_time: f64,
    /// `clamp(1 - λ₂, 0, 1)`; a single-coupon, with-replacement heuristic.
    pub p_min_bound: f64,
    /// Operator applications used.
    pub iterations: usize,
    /// `‖M y - μ₂ y‖` for the unit Ritz vector `y`.
    pub residual: f64,
}

pub fn mixing_time(lambda2: f64) -> Result<f64> {
    if lambda2 > 0.0 {
        Ok(1.0 / lambda2)
    } else {
        Err(Error::NonPositiveGap(lambda2))
    }
}

pub fn min_response_rate_bound(lambda2: f64) -> f64 {
    (1.0 - lambda2).clamp(0.0, 1.0)
}

/// Symmetrized walk operator.
struct WalkOperator<'a> {
    net: &'a Network,
    inv_sqrt_degree: Vec<f64>,
}

impl WalkOperator<'_> {
    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            let s: f64 = self
                .net
                .neighbors(i)
                .iter()
                .map(|&j| x[j] * self.inv_sqrt_degree[j])
                .sum();
            *yi = s * self.inv_sqrt_degree[i];
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

/// Removes the components of `w` along each (orthonormal) basis vector.
fn orthogonalize(w: &mut [f64], basis: &[Vec<f64>], fixed: &[f64]) {
    // Two passes keep the basis orthogonal to working precision.
    for _ in 0..2 {
        let c = dot(w, fixed);
        axpy(-c, fixed, w);
        for v in basis {
            let c = dot(w, v);
            axpy(-c, v, w);
        }
    }
}

pub fn walk_laplacian_lambda2(net: &Network, tol: f64, max_iter: usize) -> Result<SpectralReport> {
    let n = net.node_count();
    if n < 2 {
        return Err(Error::invalid("network", "need at least two nodes"));
    }
    let components = net.connected_components();
    if components.len() > 1 {
        let mut sizes: Vec<usize> = components.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        return Err(Error::Disconnected { sizes });
    }
    let degrees = net.degrees();
    let op = WalkOperator {
        net,
        inv_sqrt_degree: degrees.iter().map(|&k| 1.0 / (k as f64).sqrt()).collect(),
    };
    let mut stationary: Vec<f64> = degrees.iter().map(|&k| (k as f64).sqrt()).collect();
    let s = norm(&stationary);
    stationary.iter_mut().for_each(|x| *x /= s);

    let mut rng = ChaCha8Rng::seed_from_u64(0x1a2b_3c4d);
    let mut start: Vec<f64> = (0..n).map(|_| rng.random::<f64>() - 0.5).collect();
    let basis_limit = MAX_BASIS.min(n - 1);

    let mut iterations = 0;
    let mut best = (f64::NAN, f64::INFINITY);
    while iterations < max_iter {
        orthogonalize(&mut start, &[], &stationary);
        let s = norm(&start);
        start.iter_mut().for_each(|x| *x /= s);

        let mut basis: Vec<Vec<f64>> = vec![start.clone()];
        let mut alpha: Vec<f64> = Vec::new();
        let mut beta: Vec<f64> = Vec::new();
        let mut w = vec![0.0; n];
        let (theta, coeffs) = loop {
            let j = basis.len() - 1;
            op.apply(&basis[j], &mut w);
            iterations += 1;
            alpha.push(dot(&w, &basis[j]));
            orthogonalize(&mut w, &basis, &stationary);
            let b = norm(&w);
            let invariant = b <= 1e-13;
            let full = basis.len() >= basis_limit || iterations >= max_iter;
            let check = invariant || full || basis.len().is_multiple_of(8);
            if check {
                let (theta, vector) = top_ritz_pair(&alpha, &beta);
                let estimate = if invariant { 0.0 } else { b * vector[j].abs() };
                if estimate < tol * 0.5 || invariant || full {
                    break (theta, vector);
                }
            }
            beta.push(b);
            w.iter_mut().for_each(|x| *x /= b);
            basis.push(std::mem::replace(&mut w, vec![0.0; n]));
        };
        let mut y = vec![0.0; n];
        for (c, v) in coeffs.iter().zip(&basis) {
            axpy(*c, v, &mut y);
        }
        let s = norm(&y);
        y.iter_mut().for_each(|x| *x /= s);
        let mut my = vec![0.0; n];
        op.apply(&y, &mut my);
        iterations += 1;
        axpy(-theta, &y, &mut my);
        let residual = norm(&my);
        best = (theta, residual);
        if residual < tol {
            break;
        }
        start = y;
    }

    let (mu2, residual) = best;
    if !(residual < tol) {
        return Err(Error::NotConverged {
            iterations,
            residual,
        });
    }
    let lambda2 = 1.0 - mu2;
    Ok(SpectralReport {
        lambda2,
        mixing_time: mixing_time(lambda2)?,
        p_min_bound: min_response_rate_bound(lambda2),
        iterations,
        residual,
    })
}

/// Number of eigenvalues of the symmetric tridiagonal matrix below `x`.
fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..diag.len() {
        let b2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        q = diag[i] - x - if i == 0 { 0.0 } else { b2 / q };
        if q == 0.0 {
            q = f64::EPSILON * (diag[i].abs() + x.abs() + 1e-300);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Largest eigenvalue of a symmetric tridiagonal matrix by bisection.
fn largest_eigenvalue(diag: &[f64], off: &[f64]) -> f64 {
    let n = diag.len();
    let radius = |i: usize| {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off[i].abs() } else { 0.0 };
        left + right
    };
    let mut lo = (0..n)
        .map(|i| diag[i] - radius(i))
        .fold(f64::INFINITY, f64::min);
    let mut hi = (0..n)
        .map(|i| diag[i] + radius(i))
        .fold(f64::NEG_INFINITY, f64::max);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(diag, off, mid) == n {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Solves a general tridiagonal system with partial pivoting. `sub`,
/// `diag`, `sup` and `rhs` are overwritten.
fn solve_tridiagonal(sub: &mut [f64], diag: &mut [f64], sup: &mut [f64], rhs: &mut [f64]) {
    let n = diag.len();
    let tiny = 1e-300;
    if n == 1 {
        rhs[0] /= if diag[0] == 0.0 { tiny } else { diag[0] };
        return;
    }
    // sub[i] is reused to hold the second superdiagonal after elimination.
    for i in 0..n - 1 {
        if diag[i].abs() >= sub[i].abs() {
            if diag[i] == 0.0 {
                diag[i] = tiny;
            }
            let fact = sub[i] / diag[i];
            diag[i + 1] -= fact * sup[i];
            rhs[i + 1] -= fact * rhs[i];
            sub[i] = 0.0;
        } else {
            let fact = diag[i] / sub[i];
            diag[i] = sub[i];
            let temp = diag[i + 1];
            diag[i + 1] = sup[i] - fact * temp;
            if i + 2 < n {
                sub[i] = sup[i + 1];
                sup[i + 1] = -fact * sub[i];
            } else {
                sub[i] = 0.0;
            }
            sup[i] = temp;
            let b = rhs[i];
            rhs[i] = rhs[i + 1];
            rhs[i + 1] = b - fact * rhs[i + 1];
        }
    }
    if diag[n - 1] == 0.0 {
        diag[n - 1] = tiny;
    }
    rhs[n - 1] /= diag[n - 1];
    rhs[n - 2] = (rhs[n - 2] - sup[n - 2] * rhs[n - 1]) / diag[n - 2];
    for i in (0..n.saturating_sub(2)).rev() {
        rhs[i] = (rhs[i] - sup[i] * rhs[i + 1] - sub[i] * rhs[i + 2]) / diag[i];
    }
}

/// Largest eigenvalue of the Lanczos matrix and its unit eigenvector.
fn top_ritz_pair(alpha: &[f64], beta: &[f64]) -> (f64, Vec<f64>) {
    let n = alpha.len();
    let off = &beta[..n - 1];
    let theta = largest_eigenvalue(alpha, off);
    if n == 1 {
        return (theta, vec![1.0]);
    }
    let shift = theta + f64::EPSILON * theta.abs().max(1.0) * 4.0;
    let mut x = vec![1.0; n];
    for _ in 0..4 {
        let mut sub = off.to_vec();
        let mut sup = off.to_vec();
        let mut diag: Vec<f64> = alpha.iter().map(|a| a - shift).collect();
        solve_tridiagonal(&mut sub, &mut diag, &mut sup, &mut x);
        let s = norm(&x);
        x.iter_mut().for_each(|v| *v /= s);
    }
    (theta, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: u64) -> Network {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Network::build(&edges).unwrap()
    }

    #[test]
    fn complete_graph_gap() {
        let r = walk_laplacian_lambda2(&complete(4), DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert!((r.lambda2 - 4.0 / 3.0).abs() < 1e-12, "{}", r.lambda2);
        assert!((r.mixing_time - 0.75).abs() < 1e-12);
        assert_eq!(r.p_min_bound, 0.0);
        assert!(r.residual < DEFAULT_TOL);
    }

    #[test]
    fn single_edge_and_path() {
        let r = walk_laplacian_lambda2(&complete(2), DEFAULT_TOL, 100).unwrap();
        assert!((r.lambda2 - 2.0).abs() < 1e-12);
        // path 0-1-2: walk spectrum {1, 0, -1} -> lambda2 = 1
        let p = Network::build(&[(0, 1), (1, 2)]).unwrap();
        let r = walk_laplacian_lambda2(&p, DEFAULT_TOL, 100).unwrap();
        assert!((r.lambda2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = Network::build(&[(0, 1), (2, 3), (3, 4)]).unwrap();
        match walk_laplacian_lambda2(&g, DEFAULT_TOL, 100) {
            Err(Error::Disconnected { sizes }) => assert_eq!(sizes, vec![3, 2]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn scalar_helpers() {
        assert_eq!(mixing_time(0.5).unwrap(), 2.0);
        assert_eq!(mixing_time(1.0).unwrap(), 1.0);
        assert!(mixing_time(0.0).is_err());
        assert_eq!(min_response_rate_bound(1.2), 0.0);
        assert!((min_response_rate_bound(0.6) - 0.4).abs() < 1e-15);
        assert_eq!(min_response_rate_bound(0.0), 1.0);
    }

    #[test]
    fn tridiagonal_solver_matches_dense() {
        // pivoting is needed on the first row (|diag| < |sub|)
        let (sub, diag, sup) = (
            vec![3.0, 1.0, 2.0],
            vec![0.5, 4.0, -1.0, 2.0],
            vec![1.0, -2.0, 0.5],
        );
        let x_true = [1.0, -2.0, 0.5, 3.0];
        let mut rhs: Vec<f64> = (0..4)
            .map(|i| {
                let mut s = diag[i] * x_true[i];
                if i > 0 {
                    s += sub[i - 1] * x_true[i - 1];
                }
                if i < 3 {
                    s += sup[i] * x_true[i + 1];
                }
                s
            })
            .collect();
        let (mut a, mut b, mut c) = (sub.clone(), diag.clone(), sup.clone());
        solve_tridiagonal(&mut a, &mut b, &mut c, &mut rhs);
        for (x, t) in rhs.iter().zip(x_true) {
            assert!((x - t).abs() < 1e-12, "{rhs:?}");
        }
    }

    #[test]
    fn bisection_on_known_tridiagonal() {
        // tridiag(-1, 2, -1) of size 5: eigenvalues 2 - 2cos(kπ/6)
        let top = largest_eigenvalue(&[2.0; 5], &[-1.0; 4]);
        let expected = 2.0 - 2.0 * (5.0 * std::f64::consts::PI / 6.0).cos();
        assert!((top - expected).abs() < 1e-13);
    }
}
