//! Simultaneous polynomial root finding (Aberth–Ehrlich) with Newton polish.

use num_complex::Complex64;

use super::TrackError;

pub(crate) const RESIDUAL_TOL: f64 = 1e-10;
const MAX_ITER: usize = 500;

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// `sum |c_k| |z|^k`, the natural scale for the residual at `z`.
fn scale(c: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    c.iter().rev().fold(0.0, |acc, a| acc * r + a.norm())
}

fn converged(c: &[Complex64], z: &[Complex64], tol: f64) -> bool {
    z.iter().all(|&zi| horner(c, zi).0.norm() <= tol * scale(c, zi))
}

/// Starting points on a circle of Cauchy-bound radius, rotated off the axes.
fn initial_guesses(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n].norm();
    let bound = 1.0 + c[..n].iter().map(|a| a.norm() / lead).fold(0.0, f64::max);
    let r = bound.min(1e6) * 0.5 + 0.5;
    (0..n)
        .map(|k| Complex64::from_polar(r, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect()
}

/// All roots of `sum c_k y^k` (lowest degree first), refining `start` when
/// given. The output keeps the order of `start`.
pub(crate) fn solve(c: &[Complex64], start: Option<&[Complex64]>) -> Result<Vec<Complex64>, TrackError> {
    let n = c.len().saturating_sub(1);
    if n == 0 {
        return Ok(Vec::new());
    }
    let lead = c[n].norm();
    let total: f64 = c.iter().map(|a| a.norm()).sum();
    if lead <= 1e-13 * total {
        return Err(TrackError::LeadingCoefficientVanishes);
    }
    let mut z: Vec<Complex64> = match start {
        Some(s) if s.len() == n => s.to_vec(),
        _ => initial_guesses(c),
    };
    for _ in 0..MAX_ITER {
        if converged(c, &z, RESIDUAL_TOL * 1e-3) {
            break;
        }
        let mut moved = false;
        for k in 0..n {
            let (p, dp) = horner(c, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[k] -= w;
                moved |= w.norm() > 0.0;
            } else {
                // Coincident iterates: nudge apart.
                z[k] += Complex64::new(1e-7, 1e-7 * (k as f64 + 1.0));
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    for zk in z.iter_mut() {
        for _ in 0..2 {
            let (p, dp) = horner(c, *zk);
            let step = p / dp;
            if step.is_finite() {
                *zk -= step;
            }
        }
    }
    if !converged(c, &z, RESIDUAL_TOL) {
        return Err(TrackError::NoConvergence);
    }
    Ok(z)
}
