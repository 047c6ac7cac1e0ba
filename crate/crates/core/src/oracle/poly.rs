//! Exact univariate polynomials over the rationals: arithmetic, Yun
//! squarefree decomposition, and Sturm-sequence isolation of positive
//! roots.  Everything is exact; no floating point enters root counting.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::ratio_fmt;

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Negative,
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "+")]
    Positive,
}

impl Sign {
    pub fn of(x: &BigRational) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

/// A univariate polynomial with rational coefficients, stored densely in
/// ascending degree with no trailing zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> UniPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> UniPoly {
        UniPoly::new(vec![c])
    }

    pub fn from_integers(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `c * x^d`.
    pub fn monomial(c: BigRational, d: usize) -> UniPoly {
        let mut coeffs = vec![BigRational::zero(); d];
        coeffs.push(c);
        UniPoly::new(coeffs)
    }

    /// `prod (x - r)^m` — handy for building test polynomials with known
    /// roots.
    pub fn from_roots<I>(roots: I) -> UniPoly
    where
        I: IntoIterator<Item = (BigRational, usize)>,
    {
        let mut p = UniPoly::one();
        for (r, m) in roots {
            let linear = UniPoly::new(vec![-r, BigRational::one()]);
            for _ in 0..m {
                p = p.mul(&linear);
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn is_root(&self, x: &BigRational) -> bool {
        self.eval(x).is_zero()
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn scaled(&self, c: &BigRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![
            BigRational::zero();
            self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1
        ];
        while rem.len() >= divisor.coeffs.len() && !rem.is_empty() {
            let r_deg = rem.len() - 1;
            let c = rem.last().unwrap() / &lead;
            let shift = r_deg - d;
            quo[shift] = c.clone();
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let idx = shift + i;
                let sub = dc * &c;
                rem[idx] -= sub;
            }
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UniPoly::new(quo), UniPoly::new(rem))
    }

    /// Division known to be exact; panics if a remainder survives.
    pub fn divide_exact(&self, divisor: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Scales by the inverse absolute value of the leading coefficient — a
    /// positive factor, so signs (and Sturm counts) are preserved while
    /// coefficient growth stays bounded.
    fn normalized_positive(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => {
                let scale = lc.abs().recip();
                self.scaled(&scale)
            }
        }
    }

    /// Monic scalar multiple (zero stays zero).
    pub fn monic(&self) -> UniPoly {
        match self.leading_coeff() {
            None => UniPoly::zero(),
            Some(lc) => self.scaled(&lc.clone().recip()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.normalized_positive();
        }
        a.monic()
    }

    /// The monic squarefree part `self / gcd(self, self')`.
    pub fn squarefree_part(&self) -> UniPoly {
        assert!(!self.is_zero(), "zero polynomial has no squarefree part");
        if self.degree() == Some(0) {
            return UniPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.divide_exact(&g).monic()
    }

    /// Yun squarefree decomposition: pairwise-coprime monic factors with
    /// their multiplicities, so `self = lc * prod f_i^{m_i}`.
    pub fn yun_decomposition(&self) -> Vec<(UniPoly, usize)> {
        assert!(!self.is_zero(), "zero polynomial has no decomposition");
        if self.degree() == Some(0) {
            return vec![];
        }
        let fp = self.derivative();
        let a0 = self.gcd(&fp);
        if a0.degree() == Some(0) {
            return vec![(self.monic(), 1)];
        }
        let mut b = self.divide_exact(&a0);
        let mut c = fp.divide_exact(&a0);
        let mut d = c.sub(&b.derivative());
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree().is_some_and(|dg| dg > 0) {
            let p = b.gcd(&d);
            if p.degree().is_some_and(|dg| dg > 0) {
                out.push((p.monic(), i));
            }
            b = b.divide_exact(&p);
            c = d.divide_exact(&p);
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Splits off the root at the origin: `(q, k)` with `self = x^k q`,
    /// `q(0) != 0`.
    pub fn strip_zero_roots(&self) -> (UniPoly, usize) {
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (UniPoly::new(self.coeffs[k..].to_vec()), k)
    }

    /// Strict upper bound on the absolute value of every real root.
    pub fn cauchy_root_bound(&self) -> BigRational {
        let lc = self
            .leading_coeff()
            .expect("zero polynomial has no root bound")
            .abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(BigRational::zero);
        max + BigRational::one()
    }

    /// Sturm sequence (self should be squarefree for exact counting).
    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.normalized_positive()];
        let d = self.derivative();
        if d.is_zero() {
            return seq;
        }
        seq.push(d.normalized_positive());
        loop {
            let last = &seq[seq.len() - 1];
            if last.degree() == Some(0) {
                break;
            }
            let (_, r) = seq[seq.len() - 2].div_rem(last);
            if r.is_zero() {
                break;
            }
            seq.push(r.neg().normalized_positive());
        }
        seq
    }
}

/// Sign variations of a Sturm sequence at `x` (zeros skipped).
fn sign_variations(seq: &[UniPoly], x: &BigRational) -> usize {
    let mut last = Sign::Zero;
    let mut flips = 0;
    for p in seq {
        let s = Sign::of(&p.eval(x));
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            flips += 1;
        }
        last = s;
    }
    flips
}

/// Distinct roots of the squarefree polynomial behind `seq` in `(lo, hi]`.
fn sturm_count(seq: &[UniPoly], lo: &BigRational, hi: &BigRational) -> usize {
    sign_variations(seq, lo) - sign_variations(seq, hi)
}

/// One isolated positive root of a polynomial: the unique root of the
/// polynomial in `(lower, upper]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsolatedRoot {
    #[serde(with = "ratio_fmt::serde_rational")]
    pub lower: BigRational,
    #[serde(with = "ratio_fmt::serde_rational")]
    pub upper: BigRational,
    /// The root itself when it is rational and was pinned exactly.
    #[serde(with = "ratio_fmt::serde_rational_opt")]
    pub exact: Option<BigRational>,
    /// Multiplicity of the root in the original polynomial.
    pub multiplicity: usize,
    /// Sign of the original polynomial's derivative at the root (`0` for
    /// multiple roots).
    pub derivative_sign: Sign,
}

/// Number of distinct positive roots, by one Sturm count over `(0, bound]`.
/// Cheapest query; use it in exhaustive sweeps.
pub fn count_distinct_positive_roots(f: &UniPoly) -> usize {
    assert!(!f.is_zero(), "the zero polynomial vanishes identically");
    let (stripped, _) = f.strip_zero_roots();
    if stripped.degree() == Some(0) {
        return 0;
    }
    let g = stripped.squarefree_part();
    let seq = g.sturm_sequence();
    let bound = g.cauchy_root_bound();
    sturm_count(&seq, &BigRational::zero(), &bound)
}

/// Isolates every distinct positive root of `f` (which must not be the zero
/// polynomial) into disjoint intervals, with multiplicities and derivative
/// signs.  Rational roots are reported exactly only when stumbled upon
/// during bisection; use [`isolate_positive_roots_pinned`] to also try the
/// rational-root theorem.
pub fn isolate_positive_roots(f: &UniPoly) -> Vec<IsolatedRoot> {
    isolate(f, false)
}

/// Like [`isolate_positive_roots`], additionally pinning rational roots
/// exactly via the rational-root theorem (attempted only while the integer
/// coefficients involved stay small enough to factor cheaply).
pub fn isolate_positive_roots_pinned(f: &UniPoly) -> Vec<IsolatedRoot> {
    isolate(f, true)
}

fn isolate(f: &UniPoly, pin: bool) -> Vec<IsolatedRoot> {
    assert!(!f.is_zero(), "the zero polynomial vanishes identically");
    let (stripped, _) = f.strip_zero_roots();
    if stripped.degree() == Some(0) {
        return vec![];
    }
    let g = stripped.squarefree_part();
    let seq = g.sturm_sequence();
    let bound = g.cauchy_root_bound();
    let zero = BigRational::zero();
    let total = sturm_count(&seq, &zero, &bound);

    // Bisect until every interval holds exactly one distinct root.
    let mut work = vec![(zero, bound, total)];
    let mut brackets: Vec<(BigRational, BigRational)> = Vec::new();
    while let Some((lo, hi, count)) = work.pop() {
        match count {
            0 => {}
            1 => brackets.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / rat(2);
                let left = sturm_count(&seq, &lo, &mid);
                work.push((mid.clone(), hi, count - left));
                work.push((lo, mid, left));
            }
        }
    }
    brackets.sort_by(|a, b| a.0.cmp(&b.0));

    let factors: Vec<(Vec<UniPoly>, usize)> = stripped
        .yun_decomposition()
        .into_iter()
        .map(|(factor, m)| (factor.sturm_sequence(), m))
        .collect();
    let width_target = BigRational::new(BigInt::one(), BigInt::from(64));

    brackets
        .into_iter()
        .map(|(mut lo, mut hi)| {
            // Shrink the bracket; an exact hit at an endpoint or midpoint
            // ends early.
            let mut exact: Option<BigRational> = None;
            if g.is_root(&hi) {
                exact = Some(hi.clone());
            } else {
                while &hi - &lo > width_target {
                    let mid = (&lo + &hi) / rat(2);
                    if g.is_root(&mid) {
                        exact = Some(mid.clone());
                        hi = mid;
                        break;
                    }
                    if sturm_count(&seq, &mid, &hi) == 1 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                if exact.is_none() && pin {
                    exact = rational_root_in(&g, &lo, &hi);
                    if let Some(r) = &exact {
                        hi = r.clone();
                    }
                }
            }
            let multiplicity = factors
                .iter()
                .find(|(fseq, _)| sturm_count(fseq, &lo, &hi) == 1)
                .map(|(_, m)| *m)
                .expect("every isolated root belongs to a squarefree factor");
            let derivative_sign = if multiplicity > 1 {
                Sign::Zero
            } else if let Some(r) = &exact {
                Sign::of(&stripped.derivative().eval(r))
            } else {
                // Sample just below the root: the bracket holds a single
                // simple root, so the sign of the crossing is the sign of
                // the derivative there.  `lo` works unless it is itself a
                // (previous) root of `g`; then descend toward it.
                let mut probe = lo.clone();
                if g.is_root(&probe) {
                    probe = (&lo + &hi) / rat(2);
                    while g.is_root(&probe) || sturm_count(&seq, &probe, &hi) == 0 {
                        probe = (&lo + &probe) / rat(2);
                    }
                }
                match Sign::of(&stripped.eval(&probe)) {
                    Sign::Negative => Sign::Positive,
                    Sign::Positive => Sign::Negative,
                    Sign::Zero => unreachable!("probe avoids roots"),
                }
            };
            IsolatedRoot { lower: lo, upper: hi, exact, multiplicity, derivative_sign }
        })
        .collect()
}

/// Rational-root-theorem search restricted to `(lo, hi]`.  Gives up (returns
/// `None`) when the constant or leading integer coefficient is too large to
/// factor by trial division.
fn rational_root_in(g: &UniPoly, lo: &BigRational, hi: &BigRational) -> Option<BigRational> {
    const FACTOR_LIMIT: u64 = 1_000_000;
    // Clear denominators to an integer polynomial.
    let denom_lcm = g
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = g.coeffs().iter().map(|c| c.numer() * &denom_lcm / c.denom()).collect();
    let c0 = ints.first()?.magnitude().to_u64().filter(|&v| v != 0 && v <= FACTOR_LIMIT)?;
    let cn = ints.last()?.magnitude().to_u64().filter(|&v| v != 0 && v <= FACTOR_LIMIT)?;
    for p in u64_divisors(c0) {
        for q in u64_divisors(cn) {
            let r = BigRational::new(BigInt::from(p), BigInt::from(q));
            if &r > lo && &r <= hi && g.is_root(&r) {
                return Some(r);
            }
        }
    }
    None
}

fn u64_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i * i != n {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out
}
