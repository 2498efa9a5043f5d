//! Continued fractions of square roots, the Pell equation `x² − d·y² = 1`,
//! and the generalized equation `c² − (4l−5)·a² = (2l−3)²` whose solutions
//! with `a ≥ 3` give equal-degree pairs in type `C_l`.

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Exact integer square root (floor).
pub fn isqrt(n: &BigUint) -> BigUint {
    n.sqrt()
}

pub fn is_square(n: &BigUint) -> Option<BigUint> {
    let r = isqrt(n);
    (&r * &r == *n).then_some(r)
}

/// Periodic expansion `√d = [a0; period, period, ...]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    d: u64,
    a0: u64,
    period: Vec<u64>,
}

impl ContinuedFraction {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn a0(&self) -> u64 {
        self.a0
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    pub fn period_len(&self) -> usize {
        self.period.len()
    }

    /// Partial quotient `a_k`.
    pub fn term(&self, k: usize) -> u64 {
        if k == 0 {
            self.a0
        } else {
            self.period[(k - 1) % self.period.len()]
        }
    }
}

/// Expands `√d` with the usual recurrence on `(m, q, a)` until the partial
/// quotient `2·a0` closes the period.
pub fn cf_sqrt(d: u64) -> Result<ContinuedFraction> {
    let a0 = d.sqrt();
    if a0 * a0 == d {
        return Err(Error::PerfectSquare(d));
    }
    let (mut m, mut q, mut a) = (0u64, 1u64, a0);
    let mut period = Vec::new();
    loop {
        m = q * a - m;
        q = (d - m * m) / q;
        a = (a0 + m) / q;
        period.push(a);
        if a == 2 * a0 {
            break;
        }
    }
    Ok(ContinuedFraction { d, a0, period })
}

/// The `m`-th convergent `p/q` (index 0 is `a0/1`).
pub fn convergent(cf: &ContinuedFraction, m: usize) -> (BigUint, BigUint) {
    let (mut p_prev, mut p) = (BigUint::one(), BigUint::from(cf.a0));
    let (mut q_prev, mut q) = (BigUint::zero(), BigUint::one());
    for k in 1..=m {
        let a = cf.term(k);
        let p_next = &p * a + &p_prev;
        let q_next = &q * a + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
    (p, q)
}

/// A positive solution of `x² − d·y² = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellSolution {
    d: u64,
    x: BigUint,
    y: BigUint,
}

impl PellSolution {
    pub fn new(d: u64, x: BigUint, y: BigUint) -> Result<PellSolution> {
        if y.is_zero() || &x * &x != &y * &y * d + 1u32 {
            return Err(Error::Invariant(format!(
                "({x}, {y}) does not solve x² − {d}y² = 1"
            )));
        }
        Ok(PellSolution { d, x, y })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn x(&self) -> &BigUint {
        &self.x
    }

    pub fn y(&self) -> &BigUint {
        &self.y
    }

    /// `(x + y√d)·(x1 + y1√d)`.
    fn times(&self, fund: &PellSolution) -> Result<PellSolution> {
        let x = &fund.x * &self.x + &fund.y * &self.y * self.d;
        let y = &fund.x * &self.y + &fund.y * &self.x;
        PellSolution::new(self.d, x, y)
    }
}

/// Smallest positive solution, read off the convergent of index `r−1`
/// (period length `r` even) or `2r−1` (`r` odd).
pub fn fundamental_pell(d: u64) -> Result<PellSolution> {
    let cf = cf_sqrt(d)?;
    let r = cf.period_len();
    let m = if r % 2 == 0 { r - 1 } else { 2 * r - 1 };
    let (x, y) = convergent(&cf, m);
    PellSolution::new(d, x, y)
}

/// `(x1 + y1√d)^k = x_k + y_k√d`.
pub fn pell_power(fund: &PellSolution, k: u64) -> Result<PellSolution> {
    if k == 0 {
        return Err(Error::Precondition("Pell power index must be ≥ 1".into()));
    }
    let mut sol = fund.clone();
    for _ in 1..k {
        sol = sol.times(fund)?;
    }
    Ok(sol)
}

/// A solution `(c, a)` of `c² − (4l−5)·a² = (2l−3)²` with `a ≥ 3`, together
/// with `b = (c + 1 − a − 2l)/2`. Then `V(aω1 + bω2)` and
/// `V((a−2)ω1 + (b+1)ω2)` have equal degree in type `C_l`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarSolution {
    l: u64,
    c: BigUint,
    a: BigUint,
    b: BigUint,
}

/// `4l − 5`.
pub fn star_discriminant(l: u64) -> u64 {
    4 * l - 5
}

fn check_rank(l: u64) -> Result<()> {
    if l < 3 {
        return Err(Error::Precondition(format!("rank l = {l} must be ≥ 3")));
    }
    // keeps 4l−5 and (2l−3)² comfortably inside u64 arithmetic
    if l > u32::MAX as u64 {
        return Err(Error::Precondition(format!("rank l = {l} is too large")));
    }
    Ok(())
}

impl StarSolution {
    /// Validates the equation, the parity of `c + a`, and derives `b`.
    pub fn new(l: u64, c: BigUint, a: BigUint) -> Result<StarSolution> {
        check_rank(l)?;
        if a < BigUint::from(3u32) {
            return Err(Error::Precondition(format!("a = {a} must be ≥ 3")));
        }
        let rhs = BigUint::from(2 * l - 3).pow(2);
        if &c * &c != &a * &a * star_discriminant(l) + &rhs {
            return Err(Error::Invariant(format!(
                "({c}, {a}) does not solve c² − {}a² = {rhs}",
                star_discriminant(l)
            )));
        }
        if (&c + &a).is_even() {
            return Err(Error::Invariant(format!("c = {c} and a = {a} have equal parity")));
        }
        // c + 1 − a − 2l ≥ 0 follows from a ≥ 3, l ≥ 3; checked regardless
        let twice_b = (BigInt::from(c.clone()) + 1u32) - BigInt::from(a.clone()) - 2 * l;
        let b = twice_b
            .to_biguint()
            .ok_or_else(|| Error::Invariant(format!("negative b for (c, a, l) = ({c}, {a}, {l})")))?;
        debug_assert!(b.is_even());
        Ok(StarSolution {
            l,
            c,
            a,
            b: b >> 1,
        })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn c(&self) -> &BigUint {
        &self.c
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    /// `4b² + 4(a+2l−1)b + 2((3−2l)a² + (2l−1)a + 4l−4)`, which vanishes
    /// exactly when the degree ratio of the pair is 1.
    pub fn b_quadratic(&self) -> BigInt {
        let a = BigInt::from(self.a.clone());
        let b = BigInt::from(self.b.clone());
        let l = BigInt::from(self.l);
        let four_b2 = &b * &b * 4;
        let lin = (&a + &l * 2 - 1) * &b * 4;
        let cst = ((BigInt::from(3) - &l * 2) * &a * &a + (&l * 2 - 1) * &a + (&l * 4 - 4)) * 2;
        four_b2 + lin + cst
    }
}

/// Lazily yields `((2l−3)·x_k, (2l−3)·y_k)` for `k = 1, 2, ...`, skipping
/// any with `a < 3`.
#[derive(Debug, Clone)]
pub struct StarStream {
    l: u64,
    fund: PellSolution,
    current: Option<PellSolution>,
}

impl StarStream {
    pub fn new(l: u64) -> Result<StarStream> {
        check_rank(l)?;
        let fund = fundamental_pell(star_discriminant(l))?;
        Ok(StarStream {
            l,
            fund,
            current: None,
        })
    }

    pub fn fundamental(&self) -> &PellSolution {
        &self.fund
    }
}

impl Iterator for StarStream {
    type Item = Result<StarSolution>;

    fn next(&mut self) -> Option<Self::Item> {
        let scale = 2 * self.l - 3;
        loop {
            let next = match &self.current {
                None => Ok(self.fund.clone()),
                Some(s) => s.times(&self.fund),
            };
            let sol = match next {
                Ok(s) => s,
                Err(e) => return Some(Err(e)),
            };
            self.current = Some(sol.clone());
            let a = sol.y() * scale;
            if a < BigUint::from(3u32) {
                continue;
            }
            return Some(StarSolution::new(self.l, sol.x() * scale, a));
        }
    }
}

/// First `count` solutions of the scaled Pell family, increasing in `a`.
pub fn star_solutions(l: u64, count: usize) -> Result<Vec<StarSolution>> {
    if count == 0 {
        return Err(Error::Precondition("count must be ≥ 1".into()));
    }
    StarStream::new(l)?.take(count).collect()
}

/// Every `a` in `3..=a_max` for which `(4l−5)a² + (2l−3)²` is a perfect
/// square. Unlike [`star_solutions`] this also finds solutions outside the
/// scaled Pell family.
pub fn brute_force_star(l: u64, a_max: u64) -> Result<Vec<StarSolution>> {
    check_rank(l)?;
    if a_max == 0 {
        return Err(Error::Precondition("a_max must be ≥ 1".into()));
    }
    let d = star_discriminant(l) as u128;
    let rhs = ((2 * l - 3) as u128).pow(2);
    let hit = |a: u64| -> Option<BigUint> {
        let a = a as u128;
        match a.checked_mul(a).and_then(|a2| a2.checked_mul(d)).and_then(|v| v.checked_add(rhs)) {
            Some(v) => {
                let r = v.sqrt();
                (r * r == v).then(|| BigUint::from(r))
            }
            None => is_square(&(BigUint::from(a) * a * d + rhs)),
        }
    };
    const CHUNK: u64 = 1 << 14;
    let chunks: Vec<(u64, u64)> = (3..=a_max)
        .step_by(CHUNK as usize)
        .map(|lo| (lo, lo.saturating_add(CHUNK - 1).min(a_max)))
        .collect();
    let found: Vec<Vec<(u64, BigUint)>> = chunks
        .into_par_iter()
        .map(|(lo, hi)| (lo..=hi).filter_map(|a| hit(a).map(|c| (a, c))).collect())
        .collect();
    found
        .into_iter()
        .flatten()
        .map(|(a, c)| StarSolution::new(l, c, a.into()))
        .collect()
}

/// Convenience for reports: `value` as `u64` if it fits.
pub fn small(value: &BigUint) -> Option<u64> {
    value.to_u64()
}
