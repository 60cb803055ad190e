// SPDX-License-Identifier: Apache-2.0

use alloc::vec;
use alloc::vec::Vec;

use super::{CheegerError, Window};

pub const MAX_OUTER_ITERATIONS: usize = 20_000;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub lambda1: f64,
    /// `‖Lx − λx‖` for the returned unit eigenvector.
    pub residual: f64,
    pub iterations: usize,
    /// Unit eigenvector, indexed like the window members.
    pub eigenvector: Vec<f64>,
}

/// Local sparse form of the Dirichlet Laplacian: ambient degree on the
/// diagonal, `-1` for each edge inside the window.
struct Dirichlet {
    diag: Vec<f64>,
    inner: Vec<Vec<usize>>,
}

impl Dirichlet {
    fn apply(&self, x: &[f64], out: &mut [f64]) {
        for (i, o) in out.iter_mut().enumerate() {
            let mut s = self.diag[i] * x[i];
            for &j in &self.inner[i] {
                s -= x[j];
            }
            *o = s;
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// Conjugate gradients for `L y = b`; `L` is symmetric positive definite.
fn solve(op: &Dirichlet, b: &[f64], y: &mut [f64], tol: f64) {
    let m = b.len();
    let mut r = b.to_vec();
    let mut ly = vec![0.0; m];
    op.apply(y, &mut ly);
    for i in 0..m {
        r[i] -= ly[i];
    }
    let mut p = r.clone();
    let mut rr = dot(&r, &r);
    let target = tol * tol * dot(b, b);
    let mut lp = vec![0.0; m];
    for _ in 0..(10 * m + 100) {
        if rr <= target {
            break;
        }
        op.apply(&p, &mut lp);
        let alpha = rr / dot(&p, &lp);
        for i in 0..m {
            y[i] += alpha * p[i];
            r[i] -= alpha * lp[i];
        }
        let rr_new = dot(&r, &r);
        let beta = rr_new / rr;
        rr = rr_new;
        for i in 0..m {
            p[i] = r[i] + beta * p[i];
        }
    }
}

/// Bottom eigenvalue of the Dirichlet Laplacian on a window, by inverse
/// power iteration with conjugate-gradient solves.
///
/// Stops once `‖Lx − λx‖ ≤ tol` for the Rayleigh quotient `λ` of the unit
/// iterate `x`. The window must have a nonempty ambient boundary, otherwise
/// the operator is singular.
pub fn dirichlet_lambda1(window: &Window<'_>, tol: f64) -> Result<SpectralReport, CheegerError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(CheegerError::BadTolerance);
    }
    let graph = window.graph();
    let members = window.members();
    let m = members.len();
    let mut inner = Vec::with_capacity(m);
    let mut leaks = false;
    for &v in members {
        let mut list = Vec::new();
        for &w in graph.neighbors(v) {
            match members.binary_search(&w) {
                Ok(j) => list.push(j),
                Err(_) => leaks = true,
            }
        }
        inner.push(list);
    }
    if !leaks {
        return Err(CheegerError::EmptyBoundary);
    }
    let op = Dirichlet {
        diag: members.iter().map(|&v| graph.degree(v) as f64).collect(),
        inner,
    };

    let mut x = vec![1.0 / libm::sqrt(m as f64); m];
    let mut lx = vec![0.0; m];
    let mut y = vec![0.0; m];
    let mut residual = f64::INFINITY;
    for iteration in 1..=MAX_OUTER_ITERATIONS {
        op.apply(&x, &mut lx);
        let lambda = dot(&x, &lx);
        residual = libm::sqrt(
            lx.iter().zip(&x).map(|(a, b)| (a - lambda * b) * (a - lambda * b)).sum(),
        );
        if residual <= tol {
            return Ok(SpectralReport {
                lambda1: lambda,
                residual,
                iterations: iteration,
                eigenvector: x,
            });
        }
        // warm start from the previous direction scaled by 1/λ
        for i in 0..m {
            y[i] = x[i] / lambda;
        }
        solve(&op, &x, &mut y, (tol * 1e-3).max(1e-14));
        let len = norm(&y);
        for i in 0..m {
            x[i] = y[i] / len;
        }
    }
    Err(CheegerError::NoConvergence { iterations: MAX_OUTER_ITERATIONS, residual })
}
