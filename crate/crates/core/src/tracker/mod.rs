//! Numerical braid monodromy: follow the roots in `y` of `p(x, y)` while `x`
//! runs along a circle, and record how they braid.
//!
//! Strands are ordered lexicographically by (real part, imaginary part). A
//! crossing is an exchange of two strands adjacent in that order; it is
//! emitted as `σ_i` when the strand coming from the right passes with the
//! larger imaginary part and as `σ_i^-1` otherwise. With this choice the
//! branch point `y^2 = x` gives `σ_1` for the counterclockwise loop.

mod discriminant;
mod poly;
mod roots;

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::braid::{braid_permutation, BraidWord, Permutation, Sigma};

pub use discriminant::{discriminant, singular_values};
pub use poly::{CurvePoly, QPoly};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TrackError {
    #[error("leading y-coefficient vanishes")]
    LeadingCoefficientVanishes,
    #[error("root iteration did not converge")]
    NoConvergence,
    #[error("polynomial is not square-free in y")]
    NotSquareFree,
    #[error("loop passes within {distance:.3e} of the singular value {value}")]
    SingularOnLoop { value: String, distance: f64 },
    #[error("roots collide near t = {0}")]
    CollisionOnLoop(f64),
    #[error("root matching stayed ambiguous near t = {0}")]
    AmbiguousMatching(f64),
    #[error("invalid loop: {0}")]
    BadLoop(String),
    #[error("polynomial parse error: {0}")]
    Parse(String),
}

/// Tilt of the ordering functional `re + ETA * im`, which breaks real-part ties.
const ETA: f64 = 1e-6;
const SAFETY: f64 = 5.0;
const COLLISION_TOL: f64 = 1e-9;
/// Minimum distance from the loop to a singular value, relative to the radius.
const LOOP_CLEARANCE: f64 = 1e-6;

/// Exact complex rational `re + im i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl ComplexRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ComplexRational { re, im }
    }

    pub fn real(re: i64) -> Self {
        ComplexRational { re: BigRational::from_integer(re.into()), im: BigRational::zero() }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(poly::to_f64(&self.re), poly::to_f64(&self.im))
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, TrackError> {
    let s = s.trim();
    let bad = || TrackError::Parse(format!("bad rational {:?}", s));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for ComplexRational {
    type Err = TrackError;

    /// Accepts `a`, `bi`, `a+bi`, `a-bi`, `i`, with rational `a`, `b`.
    fn from_str(s: &str) -> Result<Self, TrackError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if !t.ends_with('i') {
            return Ok(ComplexRational::new(parse_rational(&t)?, BigRational::zero()));
        }
        let body = &t[..t.len() - 1];
        // The split point is the last sign that is not leading.
        let split = body.char_indices().filter(|&(k, c)| k > 0 && (c == '+' || c == '-')).map(|(k, _)| k).last();
        let (re, im) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.trim_start_matches('+'))?,
        };
        Ok(ComplexRational::new(parse_rational(re)?, im))
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

/// The loop `x(t) = center + radius * e^{2 pi i t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopSpec {
    pub center: ComplexRational,
    pub radius: BigRational,
    pub samples: usize,
    pub max_refine: u32,
}

impl LoopSpec {
    pub fn new(center: ComplexRational, radius: BigRational) -> Result<Self, TrackError> {
        LoopSpec { center, radius, samples: 64, max_refine: 20 }.validated()
    }

    /// The unit circle about the origin.
    pub fn unit() -> Self {
        LoopSpec::new(ComplexRational::real(0), BigRational::one()).unwrap()
    }

    pub fn with_samples(mut self, samples: usize) -> Result<Self, TrackError> {
        self.samples = samples;
        self.validated()
    }

    fn validated(self) -> Result<Self, TrackError> {
        if !self.radius.is_positive() {
            return Err(TrackError::BadLoop("radius must be positive".into()));
        }
        if self.samples < 8 {
            return Err(TrackError::BadLoop("at least 8 samples are required".into()));
        }
        Ok(self)
    }

    pub fn point(&self, t: f64) -> Complex64 {
        self.center.to_c64() + Complex64::from_polar(poly::to_f64(&self.radius), TAU * t)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrackedBraid {
    pub braid: BraidWord,
    pub permutation: Permutation,
    /// Smallest distance between two roots of one fiber seen along the way.
    pub min_gap: f64,
    /// Number of step halvings performed.
    pub refinements: usize,
    /// Roots over `x(t0)`, in strand order.
    pub basepoint_fiber: Vec<Complex64>,
    /// Roots over `x(t1)`, in strand order.
    pub end_fiber: Vec<Complex64>,
}

fn key(z: Complex64) -> f64 {
    z.re + ETA * z.im
}

fn height(z: Complex64) -> f64 {
    z.im - ETA * z.re
}

fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
    v.sort_by(|a, b| key(*a).total_cmp(&key(*b)));
    v
}

fn min_separation(z: &[Complex64]) -> f64 {
    let mut m = f64::INFINITY;
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            m = m.min((z[i] - z[j]).norm());
        }
    }
    m
}

/// The roots over `x`, sorted in strand order.
pub fn roots_at(p: &CurvePoly, x: Complex64) -> Result<Vec<Complex64>, TrackError> {
    Ok(sorted(roots::solve(&p.coeffs_at(x), None)?))
}

/// Fails if any singular value of `p` lies on (or too near) the loop.
pub fn check_loop(p: &CurvePoly, lp: &LoopSpec) -> Result<(), TrackError> {
    let c = lp.center.to_c64();
    let r = poly::to_f64(&lp.radius);
    for s in singular_values(p)? {
        let distance = ((s - c).norm() - r).abs();
        if distance < LOOP_CLEARANCE * r.max(1.0) {
            return Err(TrackError::SingularOnLoop { value: format!("{:.6}", s), distance });
        }
    }
    Ok(())
}

enum Step {
    Accept { roots: Vec<Complex64>, order: Vec<usize>, letters: Vec<Sigma> },
    Refine,
}

struct Tracker<'a> {
    p: &'a CurvePoly,
    path: &'a dyn Fn(f64) -> Complex64,
}

impl Tracker<'_> {
    /// Advances from `roots` (indexed by strand id) at `t` to `t + h`.
    /// `order[pos]` is the strand at position `pos`.
    fn step(&self, roots: &[Complex64], order: &[usize], t: f64, h: f64, last_chance: bool) -> Result<Step, TrackError> {
        let n = roots.len();
        let x1 = (self.path)(t + h);
        let next = roots::solve(&self.p.coeffs_at(x1), Some(roots))?;
        // Nearest-neighbor matching, accepted only when it is unambiguous.
        let sep0 = min_separation(roots);
        let mut matched = vec![Complex64::new(0.0, 0.0); n];
        let mut used = vec![false; n];
        let mut max_move: f64 = 0.0;
        for (i, &z) in roots.iter().enumerate() {
            let (j, d) = next
                .iter()
                .enumerate()
                .map(|(j, w)| (j, (w - z).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if used[j] {
                return Ok(Step::Refine);
            }
            used[j] = true;
            matched[i] = next[j];
            max_move = max_move.max(d);
        }
        if max_move * SAFETY >= sep0 {
            return Ok(Step::Refine);
        }
        // Pairs whose order flips during the step, with interpolated crossing times.
        let mut events: Vec<(f64, usize, usize)> = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let d0 = key(roots[a]) - key(roots[b]);
                let d1 = key(matched[a]) - key(matched[b]);
                if (d0 < 0.0) != (d1 < 0.0) {
                    events.push((d0 / (d0 - d1), a, b));
                }
            }
        }
        events.sort_by(|x, y| x.0.total_cmp(&y.0));
        // Crossings sharing a strand are separated by refining. At the
        // smallest step they are simultaneous up to rounding, and any order
        // that keeps each exchanged pair adjacent gives the same braid.
        if !last_chance {
            for (k, e) in events.iter().enumerate() {
                for f in &events[k + 1..] {
                    if e.1 == f.1 || e.1 == f.2 || e.2 == f.1 || e.2 == f.2 {
                        return Ok(Step::Refine);
                    }
                }
            }
        }
        let mut order = order.to_vec();
        let mut letters = Vec::new();
        while !events.is_empty() {
            let pos_of = |order: &[usize], k: usize| order.iter().position(|&o| o == k).unwrap();
            let Some(idx) = events.iter().position(|&(_, a, b)| pos_of(&order, a).abs_diff(pos_of(&order, b)) == 1) else {
                return Ok(Step::Refine);
            };
            if idx > 0 && !last_chance {
                return Ok(Step::Refine);
            }
            let (s, a, b) = events.remove(idx);
            let (pa, pb) = (pos_of(&order, a), pos_of(&order, b));
            let (left, right) = if pa < pb { (a, b) } else { (b, a) };
            let pos = pa.min(pb);
            let at = |k: usize| roots[k] + (matched[k] - roots[k]) * s;
            let positive = height(at(right)) > height(at(left));
            letters.push(Sigma { index: pos + 1, positive });
            order.swap(pos, pos + 1);
        }
        let mut check: Vec<usize> = (0..n).collect();
        check.sort_by(|&a, &b| key(matched[a]).total_cmp(&key(matched[b])));
        if check != order {
            return Ok(Step::Refine);
        }
        Ok(Step::Accept { roots: matched, order, letters })
    }
}

/// Tracks the roots of `p` along `lp` for `t` in `[t0, t1]`.
pub fn track(p: &CurvePoly, lp: &LoopSpec, range: (f64, f64)) -> Result<TrackedBraid, TrackError> {
    let (t0, t1) = range;
    if !(t0 < t1) {
        return Err(TrackError::BadLoop(format!("empty range {}:{}", t0, t1)));
    }
    check_loop(p, lp)?;
    let path = |t: f64| lp.point(t);
    track_along(p, &path, t0, t1, lp.samples, lp.max_refine)
}

/// Tracks the roots of `p` along the polyline through `vertices`, using
/// `samples` initial steps per edge. Edges must stay clear of singular values.
pub fn track_polyline(p: &CurvePoly, vertices: &[Complex64], samples: usize) -> Result<TrackedBraid, TrackError> {
    if vertices.len() < 2 || samples < 1 {
        return Err(TrackError::BadLoop("a polyline needs two vertices and a positive sample count".into()));
    }
    let sing = singular_values(p)?;
    for w in vertices.windows(2) {
        let (a, b) = (w[0], w[1]);
        for &s in &sing {
            let d = b - a;
            let u = (((s - a) * d.conj()).re / d.norm_sqr()).clamp(0.0, 1.0);
            let distance = (a + d * u - s).norm();
            if distance < LOOP_CLEARANCE * d.norm().max(1.0) {
                return Err(TrackError::SingularOnLoop { value: format!("{:.6}", s), distance });
            }
        }
    }
    let edges = (vertices.len() - 1) as f64;
    let path = |t: f64| {
        let s = (t * edges).clamp(0.0, edges);
        let k = (s.floor() as usize).min(vertices.len() - 2);
        vertices[k] + (vertices[k + 1] - vertices[k]) * (s - k as f64)
    };
    track_along(p, &path, 0.0, 1.0, samples * (vertices.len() - 1), 20)
}

fn track_along(
    p: &CurvePoly,
    path: &dyn Fn(f64) -> Complex64,
    t0: f64,
    t1: f64,
    samples: usize,
    max_refine: u32,
) -> Result<TrackedBraid, TrackError> {
    let start = roots_at(p, path(t0))?;
    let n = start.len();
    let tr = Tracker { p, path };
    let mut roots = start.clone();
    let mut order: Vec<usize> = (0..n).collect();
    let mut letters = Vec::new();
    let mut min_gap = min_separation(&roots);
    let mut refinements = 0;
    let h0 = (t1 - t0) / samples as f64;
    let mut t = t0;
    let mut h = h0;
    let h_min = h0 / f64::powi(2.0, max_refine as i32);
    while t < t1 {
        let mut refined = false;
        loop {
            let hh = h.min(t1 - t);
            let last_chance = h <= h_min;
            match tr.step(&roots, &order, t, hh, last_chance)? {
                Step::Accept { roots: r, order: o, letters: l } => {
                    roots = r;
                    order = o;
                    letters.extend(l);
                    t = if hh == t1 - t { t1 } else { t + hh };
                    break;
                }
                Step::Refine if last_chance => {
                    let gap = min_separation(&roots);
                    return Err(if gap < COLLISION_TOL { TrackError::CollisionOnLoop(t) } else { TrackError::AmbiguousMatching(t) });
                }
                Step::Refine => {
                    h /= 2.0;
                    refined = true;
                    refinements += 1;
                }
            }
        }
        let gap = min_separation(&roots);
        if gap < COLLISION_TOL {
            return Err(TrackError::CollisionOnLoop(t));
        }
        min_gap = min_gap.min(gap);
        if !refined {
            h = (h * 2.0).min(h0);
        }
    }
    let braid = BraidWord::new(n.max(1), letters).expect("crossing indices are in range");
    let permutation = braid_permutation(&braid);
    let end_fiber = order.iter().map(|&k| roots[k]).collect();
    Ok(TrackedBraid { braid, permutation, min_gap, refinements, basepoint_fiber: start, end_fiber })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{full_twist, same_action};

    fn cp(s: &str) -> CurvePoly {
        CurvePoly::parse(s).unwrap()
    }

    fn close(a: &[Complex64], b: &[(f64, f64)]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(z, &(re, im))| (z - Complex64::new(re, im)).norm() < 1e-9)
    }

    #[test]
    fn fibers_over_one() {
        let one = Complex64::new(1.0, 0.0);
        assert!(close(&roots_at(&cp("(y+x^2)*(y-x^2)"), one).unwrap(), &[(-1.0, 0.0), (1.0, 0.0)]));
        assert!(close(&roots_at(&cp("y^2 - x"), one).unwrap(), &[(-1.0, 0.0), (1.0, 0.0)]));
        let five = roots_at(&cp("y*(y^2+x)*(y^2-x)"), one).unwrap();
        assert!(close(&five, &[(-1.0, 0.0), (0.0, -1.0), (0.0, 0.0), (0.0, 1.0), (1.0, 0.0)]));
    }

    #[test]
    fn branch_point_gives_sigma_one() {
        let tb = track(&cp("y^2 - x"), &LoopSpec::unit(), (0.0, 1.0)).unwrap();
        assert_eq!(tb.braid, BraidWord::parse(2, "s1").unwrap());
    }

    #[test]
    fn tangency_full_and_half_loops() {
        let p = cp("(y+x^2)*(y-x^2)");
        let full = track(&p, &LoopSpec::unit(), (0.0, 1.0)).unwrap();
        assert!(same_action(&full.braid, &BraidWord::parse(2, "s1^4").unwrap()));
        let half = track(&p, &LoopSpec::unit(), (0.5, 1.0)).unwrap();
        assert!(same_action(&half.braid, &BraidWord::parse(2, "s1^2").unwrap()));
    }

    #[test]
    fn concurrent_lines_give_full_twist() {
        for (n, s) in [(2, "y*(y-x)"), (3, "y*(y-x)*(y+x)")] {
            let tb = track(&cp(s), &LoopSpec::unit(), (0.0, 1.0)).unwrap();
            assert!(same_action(&tb.braid, &full_twist(n, 1, n).unwrap()), "{}: {}", s, tb.braid);
        }
    }

    #[test]
    fn loop_through_singular_value_is_rejected() {
        let lp = LoopSpec::new("1".parse().unwrap(), BigRational::one()).unwrap();
        assert!(matches!(track(&cp("y^2 - x"), &lp, (0.0, 1.0)), Err(TrackError::SingularOnLoop { .. })));
    }

    #[test]
    fn complex_rational_parsing() {
        let z: ComplexRational = "1/2-3i".parse().unwrap();
        assert_eq!(z.to_string(), "1/2-3i");
        let w: ComplexRational = "-i".parse().unwrap();
        assert_eq!(w.to_c64(), Complex64::new(0.0, -1.0));
        let r: ComplexRational = "-2".parse().unwrap();
        assert_eq!(r.to_c64(), Complex64::new(-2.0, 0.0));
    }
}
