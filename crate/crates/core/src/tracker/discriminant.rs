//! Singular x-values: roots of the y-discriminant and of the leading coefficient.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{CurvePoly, QPoly};
use super::roots::solve;
use super::TrackError;

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        let p = m[col][col].clone();
        d *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    d
}

/// Sylvester matrix of `f` and `g` (coefficients lowest degree first, with
/// formal degrees `f.len() - 1` and `g.len() - 1`).
fn sylvester(f: &[BigRational], g: &[BigRational]) -> Vec<Vec<BigRational>> {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, count) in [(f, n), (g, m)] {
        for shift in 0..count {
            let mut row = vec![BigRational::zero(); size];
            for (k, c) in coeffs.iter().rev().enumerate() {
                row[shift + k] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res_y(p, dp/dy)` as an exact polynomial in `x`, by evaluation at
/// integer points and interpolation.
pub fn discriminant(p: &CurvePoly) -> QPoly {
    let n = p.degy();
    if n == 0 {
        return QPoly::new(vec![BigRational::one()]);
    }
    let dp = p.derivative_y();
    let bound = (2 * n - 1) * p.degx();
    let pts: Vec<(BigRational, BigRational)> = (0..=bound as i64)
        .map(|k| {
            let x = BigRational::from_integer(k.into());
            let mut f = p.coeffs_at_rational(&x);
            let mut g = dp.coeffs_at_rational(&x);
            // Keep formal degrees even where the leading coefficient vanishes.
            f.resize(n + 1, BigRational::zero());
            g.resize(n, BigRational::zero());
            (x.clone(), det(sylvester(&f, &g)))
        })
        .collect();
    QPoly::interpolate(&pts)
}

/// Approximate x-values over which the fiber is singular or drops degree.
pub fn singular_values(p: &CurvePoly) -> Result<Vec<Complex64>, TrackError> {
    let d = discriminant(p);
    if d.is_zero() {
        return Err(TrackError::NotSquareFree);
    }
    let lead = p.leading();
    let prod = {
        let a = d.coeffs();
        let b = lead.coeffs();
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, u) in a.iter().enumerate() {
            for (j, v) in b.iter().enumerate() {
                out[i + j] += u * v;
            }
        }
        QPoly::new(out).squarefree_part()
    };
    let c: Vec<Complex64> = prod.coeffs().iter().map(|v| Complex64::new(super::poly::to_f64(v), 0.0)).collect();
    solve(&c, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn discriminant_of_branch_point() {
        // Res_y(y^2 - x, 2y) = -4x up to sign convention; the root is x = 0.
        let d = discriminant(&CurvePoly::parse("y^2 - x").unwrap());
        assert_eq!(d.degree(), Some(1));
        assert!(d.coeffs()[0].is_zero());
    }

    #[test]
    fn tangency_is_singular_only_at_origin() {
        let v = singular_values(&CurvePoly::parse("(y+x^2)*(y-x^2)").unwrap()).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].norm() < 1e-9);
    }

    #[test]
    fn repeated_factor_is_rejected() {
        assert_eq!(singular_values(&CurvePoly::parse("(y-x)^2").unwrap()), Err(TrackError::NotSquareFree));
    }

    #[test]
    fn lines_through_two_points() {
        // y(y - x + 2): lines meet at x = 2.
        let v = singular_values(&CurvePoly::parse("y*(y-x+2)").unwrap()).unwrap();
        assert_eq!(v.len(), 1);
        assert!((v[0] - Complex64::new(2.0, 0.0)).norm() < 1e-9);
        let d = discriminant(&CurvePoly::parse("y*(y-x+2)").unwrap());
        assert!(d.eval(&q(2)).is_zero());
    }
}
