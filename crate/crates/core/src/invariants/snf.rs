//! Integer matrices and Smith normal form with transforms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    out.data[i][j] += &self.data[i][k] * &o.data[k][j];
                }
            }
        }
        out
    }

    /// Determinant by fraction-free elimination (square matrices only).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                m.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        if n == 0 {
            BigInt::one()
        } else {
            sign * &m[n - 1][n - 1]
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.data {
            r.swap(a, b);
        }
    }

    /// row[a] += k * row[b]
    fn add_row(&mut self, a: usize, b: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = k * &self.data[b][j];
            self.data[a][j] += v;
        }
    }

    /// col[a] += k * col[b]
    fn add_col(&mut self, a: usize, b: usize, k: &BigInt) {
        for r in &mut self.data {
            let v = k * &r[b];
            r[a] += v;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for v in &mut self.data[a] {
            *v = -v.clone();
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.data {
            let s: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", s.join(" "))?;
        }
        Ok(())
    }
}

/// `p * m * q = d` with `p`, `q` unimodular and `d` diagonal, each diagonal
/// entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snf {
    pub diagonal: Vec<BigInt>,
    pub p: IntMatrix,
    pub q: IntMatrix,
}

impl Snf {
    /// The full diagonal matrix `d`, shaped like the input.
    pub fn d(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.p.rows, self.q.cols);
        for (i, v) in self.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }

    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|v| !v.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut p = IntMatrix::identity(r);
    let mut q = IntMatrix::identity(c);
    for t in 0..r.min(c) {
        loop {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if !a.data[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| a.data[i][j].abs() < a.data[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap_rows(t, bi);
            p.swap_rows(t, bi);
            a.swap_cols(t, bj);
            q.swap_cols(t, bj);
            let mut clean = true;
            for i in t + 1..r {
                let k = -a.data[i][t].div_floor(&a.data[t][t]);
                if !k.is_zero() {
                    a.add_row(i, t, &k);
                    p.add_row(i, t, &k);
                }
                clean &= a.data[i][t].is_zero();
            }
            for j in t + 1..c {
                let k = -a.data[t][j].div_floor(&a.data[t][t]);
                if !k.is_zero() {
                    a.add_col(j, t, &k);
                    q.add_col(j, t, &k);
                }
                clean &= a.data[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            let piv = a.data[t][t].clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a.data[i][j].is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row(t, i, &one);
                    p.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if a.data[t][t].is_negative() {
            a.negate_row(t);
            p.negate_row(t);
        }
    }
    let diagonal = (0..r.min(c)).map(|i| a.data[i][i].clone()).collect();
    Snf { diagonal, p, q }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: Vec<Vec<i64>>) -> Vec<i64> {
        let s = smith_normal_form(&IntMatrix::from_rows(m.clone()));
        let mm = IntMatrix::from_rows(m);
        assert_eq!(s.p.mul(&mm).mul(&s.q), s.d());
        assert!(s.p.det().abs().is_one() && s.q.det().abs().is_one());
        s.diagonal.iter().map(|v| i64::try_from(v).unwrap()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(diag(vec![vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(diag(vec![vec![2, 2], vec![2, 2]]), vec![2, 0]);
        assert_eq!(diag(vec![vec![0, 0, 0], vec![0, 0, 0]]), vec![0, 0]);
        assert_eq!(diag(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(diag(vec![vec![4, 6], vec![6, 4]]), vec![2, 10]);
    }
}
