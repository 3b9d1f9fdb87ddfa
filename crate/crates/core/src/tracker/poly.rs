//! Exact bivariate polynomials over Q and a small expression parser.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::TrackError;

/// Univariate polynomial over Q, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly(Vec<BigRational>);

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        QPoly(c)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_c64(&self, x: Complex64) -> Complex64 {
        self.0.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + to_f64(c))
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(self.0.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(k.into())).collect())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.0.len() - 1;
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (QPoly::default(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.0.iter().enumerate() {
                    r[k - dd + j] -= &c * dj;
                }
            }
            q[k - dd] = c;
        }
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> QPoly {
        match self.0.last() {
            None => self.clone(),
            Some(l) => QPoly(self.0.iter().map(|c| c / l).collect()),
        }
    }

    /// The product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> QPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Lagrange interpolation through `(x_k, y_k)`.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> QPoly {
        let mut acc = vec![BigRational::zero(); points.len()];
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (k, c) in basis.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (k, c) in basis.iter().enumerate() {
                acc[k] += c * &scale;
            }
        }
        QPoly::new(acc)
    }
}

pub(crate) fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `p(x, y) = sum_k c_k(x) y^k` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoly {
    /// `coeffs[k]` is the coefficient of `y^k`, a polynomial in `x`.
    coeffs: Vec<QPoly>,
}

impl CurvePoly {
    pub fn from_coeffs(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CurvePoly { coeffs }
    }

    pub fn constant(c: BigRational) -> Self {
        CurvePoly::from_coeffs(vec![QPoly::new(vec![c])])
    }

    pub fn x() -> Self {
        CurvePoly::from_coeffs(vec![QPoly::new(vec![BigRational::zero(), BigRational::one()])])
    }

    pub fn y() -> Self {
        CurvePoly::from_coeffs(vec![QPoly::default(), QPoly::new(vec![BigRational::one()])])
    }

    pub fn parse(s: &str) -> Result<Self, TrackError> {
        let mut p = ExprParser { src: s.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    /// Degree in `y`.
    pub fn degy(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn degx(&self) -> usize {
        self.coeffs.iter().filter_map(|c| c.degree()).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> QPoly {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// The `y`-coefficients evaluated at `x`.
    pub fn coeffs_at(&self, x: Complex64) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| c.eval_c64(x)).collect()
    }

    /// The `y`-coefficients evaluated at a rational `x`.
    pub fn coeffs_at_rational(&self, x: &BigRational) -> Vec<BigRational> {
        self.coeffs.iter().map(|c| c.eval(x)).collect()
    }

    pub fn derivative_y(&self) -> CurvePoly {
        CurvePoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| QPoly::new(c.0.iter().map(|v| v * BigRational::from_integer(k.into())).collect()))
                .collect(),
        )
    }

    pub fn add(&self, o: &CurvePoly) -> CurvePoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).map(|c| c.0.clone()).unwrap_or_default();
            let b = o.coeffs.get(k).map(|c| c.0.clone()).unwrap_or_default();
            let m = a.len().max(b.len());
            let z = BigRational::zero();
            out.push(QPoly::new((0..m).map(|j| a.get(j).unwrap_or(&z) + b.get(j).unwrap_or(&z)).collect()));
        }
        CurvePoly::from_coeffs(out)
    }

    pub fn neg(&self) -> CurvePoly {
        CurvePoly::from_coeffs(self.coeffs.iter().map(|c| QPoly(c.0.iter().map(|v| -v).collect())).collect())
    }

    pub fn mul(&self, o: &CurvePoly) -> CurvePoly {
        if self.is_zero() || o.is_zero() {
            return CurvePoly::from_coeffs(Vec::new());
        }
        let mut out: Vec<Vec<BigRational>> = vec![Vec::new(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                let slot = &mut out[i + j];
                for (p, u) in a.0.iter().enumerate() {
                    for (q, v) in b.0.iter().enumerate() {
                        if slot.len() <= p + q {
                            slot.resize(p + q + 1, BigRational::zero());
                        }
                        slot[p + q] += u * v;
                    }
                }
            }
        }
        CurvePoly::from_coeffs(out.into_iter().map(QPoly::new).collect())
    }

    pub fn pow(&self, k: u32) -> CurvePoly {
        let mut out = CurvePoly::constant(BigRational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

impl fmt::Display for CurvePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            for (j, v) in c.0.iter().enumerate().rev() {
                if v.is_zero() {
                    continue;
                }
                let mono: Vec<String> = [(j, "x"), (k, "y")]
                    .iter()
                    .filter(|(e, _)| *e > 0)
                    .map(|(e, v)| if *e == 1 { v.to_string() } else { format!("{}^{}", v, e) })
                    .collect();
                let mag = v.abs();
                let coef = if mag.is_one() && !mono.is_empty() { String::new() } else { mag.to_string() };
                let body = match (coef.is_empty(), mono.is_empty()) {
                    (true, _) => mono.join("*"),
                    (false, true) => coef,
                    (false, false) => format!("{}*{}", coef, mono.join("*")),
                };
                terms.push((v.is_negative(), body));
            }
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (neg, body)) in terms.iter().enumerate() {
            match (i, neg) {
                (0, true) => write!(f, "-{}", body)?,
                (0, false) => write!(f, "{}", body)?,
                (_, true) => write!(f, " - {}", body)?,
                (_, false) => write!(f, " + {}", body)?,
            }
        }
        Ok(())
    }
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn err(&self, msg: &str) -> TrackError {
        TrackError::Parse(format!("{} at byte {} of {:?}", msg, self.pos, String::from_utf8_lossy(self.src)))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<CurvePoly, TrackError> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.term()?.neg()
        } else {
            if self.peek() == Some(b'+') {
                self.pos += 1;
            }
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CurvePoly, TrackError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.mul(&CurvePoly::constant(BigRational::new(BigInt::one(), d)));
                }
                // Implicit multiplication: `2x`, `x(y+1)`.
                Some(c) if c == b'(' || c == b'x' || c == b'y' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<CurvePoly, TrackError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let k = self.integer()?;
            let k = k.to_u32().ok_or_else(|| self.err("exponent must be a small non-negative integer"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, TrackError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse::<BigInt>().map_err(|_| self.err("expected integer"))
    }

    fn atom(&mut self) -> Result<CurvePoly, TrackError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(CurvePoly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(CurvePoly::y())
            }
            Some(c) if c.is_ascii_digit() => Ok(CurvePoly::constant(BigRational::from_integer(self.integer()?))),
            _ => Err(self.err("unexpected character")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn parse_and_expand() {
        let p = CurvePoly::parse("(y+x^2)*(y-x^2)").unwrap();
        assert_eq!(p, CurvePoly::parse("y^2 - x^4").unwrap());
        assert_eq!(p.degy(), 2);
        assert_eq!(p.degx(), 4);
        let r = CurvePoly::parse("y(2x+y)").unwrap();
        assert_eq!(r, CurvePoly::parse("y^2 + 2*x*y").unwrap());
        assert_eq!(CurvePoly::parse("x/2").unwrap(), CurvePoly::constant(BigRational::new(1.into(), 2.into())).mul(&CurvePoly::x()));
        assert!(CurvePoly::parse("y +").is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["(y+x^2)*(y-x^2)", "y*(y^2+x)*(y^2-x)", "3/2 - x*y", "-y"] {
            let p = CurvePoly::parse(s).unwrap();
            assert_eq!(CurvePoly::parse(&p.to_string()).unwrap(), p, "{}", p);
        }
    }

    #[test]
    fn univariate_gcd_and_interpolation() {
        // (x-1)^2 (x+2)
        let p = QPoly::new(vec![q(2), q(-3), q(0), q(1)]);
        assert_eq!(p.squarefree_part(), QPoly::new(vec![q(-2), q(1), q(1)]));
        let pts: Vec<_> = (0..4).map(|k| (q(k), p.eval(&q(k)))).collect();
        assert_eq!(QPoly::interpolate(&pts), p);
    }
}
