//! Exact count sequences and the ratio machinery built on top of them.
//!
//! Counts are arbitrary-precision integers and ratios exact rationals.
//! Floating point only appears in trend estimates and at the presentation
//! layer ([`decimal`]).

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    Ball,
    Sphere,
    ConjugacyBall,
    ConjugacySphere,
    /// Any other per-length count (language sizes, test inputs).
    Other,
}

impl SequenceKind {
    fn is_ball_like(self) -> bool {
        matches!(self, SequenceKind::Ball | SequenceKind::ConjugacyBall)
    }
}

/// Exact nonnegative counts indexed by radius, starting at `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSequence {
    pub kind: SequenceKind,
    pub values: Vec<BigUint>,
}

impl CountSequence {
    pub fn new(kind: SequenceKind, values: Vec<BigUint>) -> Self {
        Self { kind, values }
    }

    pub fn from_u64s(kind: SequenceKind, values: &[u64]) -> Self {
        Self::new(kind, values.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn from_fn(kind: SequenceKind, len: usize, f: impl Fn(usize) -> BigUint) -> Self {
        Self::new(kind, (0..len).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.values.get(n)
    }

    pub fn truncated(&self, len: usize) -> Self {
        Self::new(self.kind, self.values.iter().take(len).cloned().collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.to_f64().unwrap_or(f64::INFINITY)).collect()
    }

    /// First differences, with `out[0] = self[0]`.
    ///
    /// Fails when the sequence decreases somewhere.
    pub fn increments(&self) -> Result<Self> {
        let mut out = Vec::with_capacity(self.len());
        for (n, v) in self.values.iter().enumerate() {
            if n == 0 {
                out.push(v.clone());
            } else {
                let prev = &self.values[n - 1];
                if v < prev {
                    return Err(Error::HypothesisViolation {
                        n,
                        reason: "sequence decreases".into(),
                    });
                }
                out.push(v - prev);
            }
        }
        let kind = match self.kind {
            SequenceKind::Ball => SequenceKind::Sphere,
            SequenceKind::ConjugacyBall => SequenceKind::ConjugacySphere,
            k => k,
        };
        Ok(Self::new(kind, out))
    }

    /// Partial sums.
    pub fn cumulative(&self) -> Self {
        let mut acc = BigUint::zero();
        let values = self
            .values
            .iter()
            .map(|v| {
                acc += v;
                acc.clone()
            })
            .collect();
        let kind = match self.kind {
            SequenceKind::Sphere => SequenceKind::Ball,
            SequenceKind::ConjugacySphere => SequenceKind::ConjugacyBall,
            k => k,
        };
        Self::new(kind, values)
    }

    /// Checks the structural invariants for ball-kind sequences.
    pub fn check_invariants(&self) -> Result<()> {
        if self.kind.is_ball_like() {
            if let Some(first) = self.values.first() {
                if first.is_zero() {
                    return Err(Error::HypothesisViolation {
                        n: 0,
                        reason: "ball sequence must contain the identity".into(),
                    });
                }
            }
            self.increments().map(|_| ())
        } else {
            Ok(())
        }
    }

    /// CSV with header `n,value`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            let _ = writeln!(s, "{n},{v}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        json_array(self.values.iter().map(|v| v.to_string()))
    }

    /// Parses either a bare column of integers or `n,value` rows (header optional).
    pub fn parse_column(kind: SequenceKind, text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') || line == "n,value" {
                continue;
            }
            let field = line.rsplit(',').next().unwrap_or(line).trim();
            let v: BigUint = field.parse().map_err(|_| {
                Error::Config(format!("line {}: not a nonnegative integer: {field:?}", lineno + 1))
            })?;
            values.push(v);
        }
        Ok(Self::new(kind, values))
    }
}

fn json_array(items: impl Iterator<Item = String>) -> String {
    let mut s = String::from("[");
    for (i, item) in items.enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&item);
    }
    s.push(']');
    s
}

/// Exact rationals indexed from `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioSequence {
    pub values: Vec<BigRational>,
}

impl RatioSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(rational_to_f64).collect()
    }

    pub fn last_f64(&self) -> Option<f64> {
        self.values.last().map(rational_to_f64)
    }

    pub fn to_csv(&self, digits: usize) -> String {
        let mut s = String::from("n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            let _ = writeln!(s, "{n},{}", decimal(v, digits));
        }
        s
    }

    pub fn to_json(&self, digits: usize) -> String {
        json_array(self.values.iter().map(|v| format!("\"{}\"", decimal(v, digits))))
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // Direct to_f64 on huge numer/denom can overflow; scale via bit lengths.
    r.to_f64().unwrap_or_else(|| {
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000) as i32;
        let n = (r.numer() >> shift as usize).to_f64().unwrap_or(0.0);
        let d = (r.denom() >> shift as usize).to_f64().unwrap_or(1.0);
        n / d
    })
}

fn big(v: &BigUint) -> BigInt {
    BigInt::from(v.clone())
}

fn check_len(a: &CountSequence, b: &CountSequence) -> Result<()> {
    if a.len() != b.len() {
        Err(Error::LengthMismatch { left: a.len(), right: b.len() })
    } else {
        Ok(())
    }
}

/// `classes[n] / elements[n]` as exact rationals.
pub fn ratio(classes: &CountSequence, elements: &CountSequence) -> Result<RatioSequence> {
    check_len(classes, elements)?;
    let values = classes
        .values
        .iter()
        .zip(&elements.values)
        .enumerate()
        .map(|(n, (c, e))| {
            if e.is_zero() {
                Err(Error::ZeroDenominator { n })
            } else {
                Ok(BigRational::new(big(c), big(e)))
            }
        })
        .collect::<Result<_>>()?;
    Ok(RatioSequence { values })
}

/// The Stolz–Cesàro difference quotients `(a[n+1]-a[n]) / (b[n+1]-b[n])`.
pub fn stolz_cesaro(a: &CountSequence, b: &CountSequence) -> Result<RatioSequence> {
    check_len(a, b)?;
    let mut values = Vec::with_capacity(a.len().saturating_sub(1));
    for n in 0..a.len().saturating_sub(1) {
        if b.values[n + 1] <= b.values[n] {
            return Err(Error::NotStrictlyIncreasing { n });
        }
        let num = big(&a.values[n + 1]) - big(&a.values[n]);
        let den = big(&b.values[n + 1]) - big(&b.values[n]);
        values.push(BigRational::new(num, den));
    }
    Ok(RatioSequence { values })
}

/// `out[n] = Σ_{i=0}^{n} a[i] · c_incr[n-i]`.
///
/// With `a` a ball sequence of `H` and `c_incr` a sphere sequence of `K` this
/// is the ball sequence of `H × K` under the union of the generating sets.
pub fn convolve(a: &CountSequence, c_incr: &CountSequence) -> Result<CountSequence> {
    check_len(a, c_incr)?;
    let n = a.len();
    let mut out = vec![BigUint::zero(); n];
    for (i, ai) in a.values.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, cj) in c_incr.values.iter().take(n - i).enumerate() {
            out[i + j] += ai * cj;
        }
    }
    let kind = match (a.kind, c_incr.kind) {
        (SequenceKind::Ball, SequenceKind::Sphere) | (SequenceKind::Sphere, SequenceKind::Ball) => {
            SequenceKind::Ball
        }
        (SequenceKind::Sphere, SequenceKind::Sphere) => SequenceKind::Sphere,
        _ => SequenceKind::Other,
    };
    Ok(CountSequence::new(kind, out))
}

/// Windowed stand-in for a limsup: the maximum and the least-squares slope
/// over the last `window` values. Never a claim about the limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindowEstimate {
    pub window: usize,
    pub max: f64,
    pub slope: f64,
}

pub fn windowed_estimate(values: &RatioSequence, window: usize) -> Option<WindowEstimate> {
    let xs = values.to_f64();
    if xs.is_empty() || window == 0 {
        return None;
    }
    let start = xs.len().saturating_sub(window);
    let tail = &xs[start..];
    let max = tail.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let points: Vec<(f64, f64)> =
        tail.iter().enumerate().map(|(i, &y)| ((start + i) as f64, y)).collect();
    let slope = least_squares(&points).map(|(_, s)| s).unwrap_or(0.0);
    Some(WindowEstimate { window: tail.len(), max, slope })
}

/// Returns `(intercept, slope)`; `None` for fewer than two points.
fn least_squares(points: &[(f64, f64)]) -> Option<(f64, f64)> {
    if points.len() < 2 {
        return None;
    }
    let m = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let det = m * sxx - sx * sx;
    if det == 0.0 {
        return None;
    }
    let slope = (m * sxy - sx * sy) / det;
    Some(((sy - slope * sx) / m, slope))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VanishingMode {
    /// Monotone sequences, incremented kernels: `Σ a_i ĉ_{n-i} / Σ b_i d̂_{n-i}`.
    Incremented,
    /// Geometric domination of `d` by `b`: `Σ a_i c_{n-i} / Σ b_i d_{n-i}`.
    GeometricDomination,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Hypothesis {
    pub clause: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VanishingReport {
    pub mode: VanishingMode,
    pub hypotheses: Vec<Hypothesis>,
    /// Least-squares estimate of the geometric rate of `d_n / b_n` (geometric domination only).
    pub fitted_delta: Option<f64>,
    /// The rate actually used in the domination test, halfway between the fit and 1.
    pub test_delta: Option<f64>,
    pub ratios: RatioSequence,
    pub trending_to_zero: bool,
}

impl VanishingReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds)
    }

    pub fn violated(&self) -> impl Iterator<Item = &Hypothesis> {
        self.hypotheses.iter().filter(|h| !h.holds)
    }

    pub fn final_ratio(&self) -> Option<f64> {
        self.ratios.last_f64()
    }
}

fn quotients(num: &CountSequence, den: &CountSequence) -> Vec<f64> {
    num.values
        .iter()
        .zip(&den.values)
        .map(|(x, y)| rational_to_f64(&BigRational::new(big(x), big(y))))
        .collect()
}

/// Finite-window test for "tends to 0": over the last half of the data the
/// values never increase and end strictly below where they started.
fn trends_to_zero(xs: &[f64]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let tail = &xs[xs.len() / 2..];
    let tail = if tail.len() < 2 { &xs[xs.len() - 2..] } else { tail };
    tail.windows(2).all(|w| w[1] <= w[0]) && tail[tail.len() - 1] < tail[0]
}

fn is_monotone(s: &CountSequence) -> bool {
    s.values.windows(2).all(|w| w[0] <= w[1])
}

fn all_positive(s: &CountSequence) -> bool {
    s.values.iter().all(|v| !v.is_zero())
}

fn dominated(small: &CountSequence, large: &CountSequence) -> bool {
    small.values.iter().zip(&large.values).all(|(x, y)| x <= y)
}

/// Checks the hypotheses under which `Σ a_i c_{n-i} / Σ b_i d_{n-i}` tends to
/// zero on the given finite data, and evaluates that quotient.
///
/// Hypothesis failures are part of the report, not errors; only malformed
/// input (length mismatch, fewer than two terms) is an `Err`.
pub fn check_ratio_vanishes(
    a: &CountSequence,
    b: &CountSequence,
    c: &CountSequence,
    d: &CountSequence,
    mode: VanishingMode,
) -> Result<VanishingReport> {
    check_len(a, b)?;
    check_len(a, c)?;
    check_len(a, d)?;
    if a.len() < 2 {
        return Err(Error::LengthMismatch { left: a.len(), right: 2 });
    }
    let positive = [a, b, c, d].iter().all(|s| all_positive(s));
    let mut hypotheses = vec![Hypothesis {
        clause: "positive",
        holds: positive,
        detail: "all terms are positive integers".into(),
    }];
    let ab = quotients(a, b);
    let ab_vanishes = positive && trends_to_zero(&ab);
    let mut fitted_delta = None;
    let mut test_delta = None;

    let (num_kernel, den_kernel) = match mode {
        VanishingMode::Incremented => {
            let monotone = [a, b, c, d].iter().all(|s| is_monotone(s));
            hypotheses.push(Hypothesis {
                clause: "monotone",
                holds: monotone,
                detail: "a, b, c, d are monotonically increasing".into(),
            });
            let (c_hat, d_hat) = match (c.increments(), d.increments()) {
                (Ok(ch), Ok(dh)) => (ch, dh),
                _ => (c.clone(), d.clone()),
            };
            hypotheses.push(Hypothesis {
                clause: "(i)",
                holds: dominated(a, b) && dominated(&c_hat, &d_hat),
                detail: "a_n <= b_n and c^_n <= d^_n for all n".into(),
            });
            let cd = quotients(c, d);
            let cd_vanishes = positive && trends_to_zero(&cd);
            hypotheses.push(Hypothesis {
                clause: "(ii)",
                holds: ab_vanishes && cd_vanishes,
                detail: format!(
                    "a_n/b_n -> 0 ({}) and c_n/d_n -> 0 ({})",
                    verdict(ab_vanishes),
                    verdict(cd_vanishes)
                ),
            });
            (c_hat, d_hat)
        }
        VanishingMode::GeometricDomination => {
            hypotheses.push(Hypothesis {
                clause: "(i)",
                holds: is_monotone(a) && is_monotone(b),
                detail: "a, b are monotone".into(),
            });
            hypotheses.push(Hypothesis {
                clause: "(ii)",
                holds: dominated(a, b) && dominated(c, d),
                detail: "a_n <= b_n and c_n <= d_n for all n".into(),
            });
            hypotheses.push(Hypothesis {
                clause: "(iii)",
                holds: ab_vanishes,
                detail: "a_n/b_n -> 0".into(),
            });
            let db = quotients(d, b);
            let half = db.len() / 2;
            let points: Vec<(f64, f64)> = db
                .iter()
                .enumerate()
                .skip(half)
                .filter(|(_, &x)| x > 0.0)
                .map(|(n, &x)| (n as f64, x.ln()))
                .collect();
            let fit = least_squares(&points).map(|(_, slope)| slope.exp());
            fitted_delta = fit;
            let holds = match fit {
                Some(delta) if delta < 1.0 => {
                    let t = (1.0 + delta) / 2.0;
                    test_delta = Some(t);
                    db.iter()
                        .enumerate()
                        .skip(half)
                        .all(|(n, &x)| x <= t.powi(n as i32))
                }
                _ => false,
            };
            hypotheses.push(Hypothesis {
                clause: "(iv)",
                holds,
                detail: match fit {
                    Some(delta) => format!("d_n/b_n <= delta^n on the last half (fitted rate {delta:.6})"),
                    None => "d_n/b_n <= delta^n: no fit possible".into(),
                },
            });
            (c.clone(), d.clone())
        }
    };

    let ratios = convolution_quotients(a, b, &num_kernel, &den_kernel)?;
    let trending_to_zero = trends_to_zero(&ratios.to_f64());
    Ok(VanishingReport { mode, hypotheses, fitted_delta, test_delta, ratios, trending_to_zero })
}

fn verdict(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

fn convolution_quotients(
    a: &CountSequence,
    b: &CountSequence,
    c: &CountSequence,
    d: &CountSequence,
) -> Result<RatioSequence> {
    let num = convolve(a, c)?;
    let den = convolve(b, d)?;
    ratio(&num, &den)
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthEstimate {
    /// `b[N]^(1/N)` for the largest available `N`.
    pub rate: f64,
    /// `roots[i] = b[i+1]^(1/(i+1))`.
    pub roots: Vec<f64>,
}

fn nth_root(v: &BigUint, n: usize) -> f64 {
    let approx = (v.bits() as f64).max(1.0);
    let root = if approx < 1000.0 {
        v.to_f64().unwrap_or(f64::INFINITY).powf(1.0 / n as f64)
    } else {
        // log2 via leading bits
        let shift = v.bits() - 64;
        let lead = (v >> shift as usize).to_f64().unwrap_or(1.0);
        ((lead.log2() + shift as f64) / n as f64).exp2()
    };
    // Snap to an exact integer root when there is one.
    let rounded = root.round();
    if rounded >= 1.0 && (root - rounded).abs() < 1e-9 {
        let r = BigUint::from(rounded as u64);
        if num_traits::pow(r, n) == *v {
            return rounded;
        }
    }
    root
}

pub fn growth_rate_estimate(b: &CountSequence) -> GrowthEstimate {
    let roots: Vec<f64> = b.values.iter().enumerate().skip(1).map(|(n, v)| nth_root(v, n)).collect();
    let rate = roots.last().copied().unwrap_or(1.0);
    GrowthEstimate { rate, roots }
}

/// Decimal rendering with `digits` fractional digits, rounding half to even.
pub fn decimal(r: &BigRational, digits: usize) -> String {
    let negative = r.is_negative();
    let abs = r.abs();
    let scale = num_traits::pow(BigInt::from(10u32), digits);
    let scaled = abs.numer() * &scale;
    let (mut q, rem) = scaled.div_rem(abs.denom());
    let twice = rem * 2u32;
    match twice.cmp(abs.denom()) {
        std::cmp::Ordering::Greater => q += 1u32,
        std::cmp::Ordering::Equal if q.is_odd() => q += 1u32,
        _ => {}
    }
    let (int, frac) = q.div_rem(&scale);
    let mut s = String::new();
    if negative && !q.is_zero() {
        s.push('-');
    }
    let _ = write!(s, "{int}");
    if digits > 0 {
        let _ = write!(s, ".{:0>width$}", frac.to_string(), width = digits);
    }
    s
}

/// The four count sequences reported for a group, all of equal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthCounts {
    pub ball: CountSequence,
    pub sphere: CountSequence,
    pub conj_ball: CountSequence,
    pub conj_sphere: CountSequence,
}

impl GrowthCounts {
    /// Builds all four sequences from sphere sizes and conjugacy-sphere sizes.
    pub fn from_spheres(sphere: &[u64], conj_sphere: &[u64]) -> Self {
        let sphere = CountSequence::from_u64s(SequenceKind::Sphere, sphere);
        let conj_sphere = CountSequence::from_u64s(SequenceKind::ConjugacySphere, conj_sphere);
        Self { ball: sphere.cumulative(), sphere, conj_ball: conj_sphere.cumulative(), conj_sphere }
    }

    pub fn len(&self) -> usize {
        self.ball.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ball.is_empty()
    }

    pub fn truncated(&self, len: usize) -> Self {
        Self {
            ball: self.ball.truncated(len),
            sphere: self.sphere.truncated(len),
            conj_ball: self.conj_ball.truncated(len),
            conj_sphere: self.conj_sphere.truncated(len),
        }
    }

    /// `C(n) / |B(n)|`.
    pub fn conjugacy_ratio(&self) -> RatioSequence {
        ratio(&self.conj_ball, &self.ball).expect("ball counts are positive")
    }

    /// `n · |C^s(n)| / |S(n)|`.
    pub fn scaled_spherical_ratio(&self) -> RatioSequence {
        let values = self
            .conj_sphere
            .values
            .iter()
            .zip(&self.sphere.values)
            .enumerate()
            .map(|(n, (c, s))| {
                if s.is_zero() {
                    BigRational::zero()
                } else {
                    BigRational::new(big(c) * BigInt::from(n), big(s))
                }
            })
            .collect();
        RatioSequence { values }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn seq(values: &[u64]) -> CountSequence {
        CountSequence::from_u64s(SequenceKind::Other, values)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn ratio_examples() {
        let r = ratio(&seq(&[1, 3, 5]), &seq(&[1, 3, 5])).unwrap();
        assert!(r.values.iter().all(|v| v.is_one()));
        let r = ratio(&seq(&[1, 1, 1]), &seq(&[1, 5, 13])).unwrap();
        assert_eq!(r.values, vec![q(1, 1), q(1, 5), q(1, 13)]);
    }

    #[test]
    fn ratio_errors() {
        assert_eq!(
            ratio(&seq(&[1, 2]), &seq(&[1])),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        );
        assert_eq!(ratio(&seq(&[1, 2]), &seq(&[1, 0])), Err(Error::ZeroDenominator { n: 1 }));
    }

    #[test]
    fn stolz_cesaro_examples() {
        let r = stolz_cesaro(&seq(&[0, 1, 4, 9, 16]), &seq(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(r.values, vec![q(1, 1), q(3, 1), q(5, 1), q(7, 1)]);
        let r = stolz_cesaro(&seq(&[1, 2, 4, 8]), &seq(&[1, 3, 9, 27])).unwrap();
        assert_eq!(r.values, vec![q(1, 2), q(1, 3), q(2, 9)]);
        assert_eq!(
            stolz_cesaro(&seq(&[1, 2, 3]), &seq(&[1, 2, 2])),
            Err(Error::NotStrictlyIncreasing { n: 1 })
        );
    }

    #[test]
    fn convolve_examples() {
        assert_eq!(convolve(&seq(&[1, 1, 1]), &seq(&[1, 0, 0])).unwrap().values, seq(&[1, 1, 1]).values);
        assert_eq!(convolve(&seq(&[1, 2]), &seq(&[1, 1])).unwrap().values, seq(&[1, 3]).values);
        let ball_z = CountSequence::from_u64s(SequenceKind::Ball, &[1, 3, 5, 7]);
        let sphere_z = CountSequence::from_u64s(SequenceKind::Sphere, &[1, 2, 2, 2]);
        let z2 = convolve(&ball_z, &sphere_z).unwrap();
        assert_eq!(z2.kind, SequenceKind::Ball);
        assert_eq!(z2.values, seq(&[1, 5, 13, 25]).values);
        assert!(convolve(&seq(&[1]), &seq(&[1, 2])).is_err());
    }

    #[test]
    fn increments_and_cumulative_invert() {
        let ball = CountSequence::from_u64s(SequenceKind::Ball, &[1, 5, 13, 25]);
        let sphere = ball.increments().unwrap();
        assert_eq!(sphere.kind, SequenceKind::Sphere);
        assert_eq!(sphere.values, seq(&[1, 4, 8, 12]).values);
        assert_eq!(sphere.cumulative(), ball);
        assert!(seq(&[3, 2]).increments().is_err());
    }

    #[test]
    fn invariants_of_ball_sequences() {
        assert!(CountSequence::from_u64s(SequenceKind::Ball, &[1, 3, 5]).check_invariants().is_ok());
        assert!(CountSequence::from_u64s(SequenceKind::Ball, &[0, 3]).check_invariants().is_err());
        assert!(CountSequence::from_u64s(SequenceKind::Ball, &[1, 3, 2]).check_invariants().is_err());
    }

    #[test]
    fn growth_rate_examples() {
        let g = growth_rate_estimate(&seq(&[1, 3, 9, 27]));
        assert_eq!(g.rate, 3.0);
        assert_eq!(g.roots.len(), 3);
        let z = CountSequence::from_fn(SequenceKind::Ball, 1000, |n| BigUint::from(2 * n as u64 + 1));
        let g = growth_rate_estimate(&z);
        assert!(g.rate > 1.0 && g.rate < 1.01, "{}", g.rate);
        assert!(g.roots.windows(2).skip(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn decimal_rounds_half_even() {
        assert_eq!(decimal(&q(1, 3), 12), "0.333333333333");
        assert_eq!(decimal(&q(2, 3), 12), "0.666666666667");
        assert_eq!(decimal(&q(1, 1), 12), "1.000000000000");
        assert_eq!(decimal(&q(1, 8), 2), "0.12");
        assert_eq!(decimal(&q(3, 8), 2), "0.38");
        assert_eq!(decimal(&q(5, 2), 0), "2");
        assert_eq!(decimal(&q(7, 2), 0), "4");
        assert_eq!(decimal(&q(-1, 4), 1), "-0.2");
    }

    #[test]
    fn windowed_estimate_reports_max_and_slope() {
        let r = RatioSequence { values: (1..=10).map(|n| q(1, n)).collect() };
        let w = windowed_estimate(&r, 5).unwrap();
        assert_eq!(w.window, 5);
        assert!((w.max - 1.0 / 6.0).abs() < 1e-12);
        assert!(w.slope < 0.0);
    }

    #[test]
    fn vanishing_incremented_constant_ratio_fails() {
        let ones = CountSequence::from_fn(SequenceKind::Other, 20, |_| BigUint::one());
        let report = check_ratio_vanishes(&ones, &ones, &ones, &ones, VanishingMode::Incremented).unwrap();
        assert!(!report.hypotheses_hold());
        assert!(report.violated().any(|h| h.clause == "(ii)"));
    }

    #[test]
    fn vanishing_geometric_geometric_input() {
        let n = 21;
        let a = CountSequence::from_fn(SequenceKind::Other, n, |_| BigUint::one());
        let b = CountSequence::from_fn(SequenceKind::Other, n, |i| BigUint::one() << i);
        let c = CountSequence::from_fn(SequenceKind::Other, n, |i| BigUint::from(i + 1));
        let report = check_ratio_vanishes(&a, &b, &c, &c, VanishingMode::GeometricDomination).unwrap();
        assert!(report.hypotheses_hold(), "{:?}", report.hypotheses);
        let delta = report.fitted_delta.unwrap();
        assert!(delta > 0.45 && delta < 0.6, "{delta}");
        assert!(report.trending_to_zero);
        assert!(report.final_ratio().unwrap() < 0.01);
    }

    #[test]
    fn conjugacy_ratio_never_exceeds_one() {
        use crate::budget::Budget;
        use crate::cayley_oracle::{ball_enumerate, conjugacy_classes, counts_from_key, Heisenberg, InfiniteDihedral};
        use crate::raag::{GraphSpec, Raag};
        let b = Budget::default();
        let mut all = vec![
            crate::free_group::FreeGroup::new(1).counts(10, b).unwrap(),
            crate::free_group::FreeGroup::new(3).counts(6, b).unwrap(),
            crate::lamplighter::Lamplighter::counts(10, b).unwrap(),
            conjugacy_classes(&InfiniteDihedral, 12, 12, b).unwrap().growth_counts(),
            counts_from_key(&ball_enumerate(&Heisenberg, 8, b).unwrap(), Heisenberg::conj_key),
        ];
        for g in [GraphSpec::path(3), GraphSpec::cycle(4), GraphSpec::complete(3)] {
            all.push(Raag::new(g).counts(5, b).unwrap().growth);
        }
        for counts in all {
            assert!(counts.conjugacy_ratio().values.iter().all(|r| *r <= BigRational::one()));
        }
    }

    fn sequence(max_len: usize) -> impl proptest::strategy::Strategy<Value = Vec<u64>> {
        proptest::collection::vec(0u64..50, 1..max_len)
    }

    proptest::proptest! {
        #[test]
        fn convolution_commutes_with_increments(s1 in sequence(12), s2 in sequence(12)) {
            let n = s1.len().min(s2.len());
            let sphere_h = CountSequence::from_u64s(SequenceKind::Sphere, &s1[..n]);
            let sphere_k = CountSequence::from_u64s(SequenceKind::Sphere, &s2[..n]);
            let ball = convolve(&sphere_h.cumulative(), &sphere_k).unwrap();
            proptest::prop_assert_eq!(ball.increments().unwrap().values, convolve(&sphere_h, &sphere_k).unwrap().values);
        }

        /// Finite Stolz-Cesaro: once the increment quotients stay in
        /// `[lo, hi]`, the plain quotients stay between `a_m/b_m` and that band.
        #[test]
        fn ratios_follow_increment_quotients(
            da in proptest::collection::vec(0u64..100, 2..20),
            db in proptest::collection::vec(1u64..100, 2..20),
            start in 0usize..5,
        ) {
            let n = da.len().min(db.len());
            let a = CountSequence::from_u64s(SequenceKind::Other, &da[..n]).cumulative();
            let b = CountSequence::from_u64s(SequenceKind::Other, &db[..n]).cumulative();
            let sc = stolz_cesaro(&a, &b).unwrap().values;
            let plain = ratio(&a, &b).unwrap().values;
            let m = start.min(n - 1);
            let band = &sc[m.min(sc.len())..];
            if let (Some(lo), Some(hi)) = (band.iter().min(), band.iter().max()) {
                let lower = lo.min(&plain[m]).clone();
                let upper = hi.max(&plain[m]).clone();
                for r in &plain[m..] {
                    proptest::prop_assert!(lower <= *r && *r <= upper);
                }
            }
        }
    }

    #[test]
    fn csv_and_json_forms() {
        let s = seq(&[1, 4, 12]);
        assert_eq!(s.to_csv(), "n,value\n0,1\n1,4\n2,12\n");
        assert_eq!(s.to_json(), "[1,4,12]");
        let back = CountSequence::parse_column(SequenceKind::Other, &s.to_csv()).unwrap();
        assert_eq!(back.values, s.values);
        let r = RatioSequence { values: vec![q(1, 2)] };
        assert_eq!(r.to_json(3), "[\"0.500\"]");
    }
}
