//! Exact evaluation of the Weyl dimension formula
//!
//! `dim V(λ) = Π <λ+ρ, α^∨> / Π <ρ, α^∨>`, both products over the positive
//! coroots. With `λ = Σ a_i ω_i` and `α^∨ = Σ b_i α_i^∨` the pairing is
//! `Σ (a_i + 1) b_i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{Component, CorootVector, RootDatum};

/// Coordinates of a dominant weight in the basis of fundamental weights,
/// concatenated across the components of a datum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    coords: Vec<BigUint>,
}

impl DominantWeight {
    pub fn new(coords: Vec<BigUint>) -> DominantWeight {
        DominantWeight { coords }
    }

    pub fn from_u64s(coords: &[u64]) -> DominantWeight {
        DominantWeight {
            coords: coords.iter().map(|&a| BigUint::from(a)).collect(),
        }
    }

    pub fn zero(rank: usize) -> DominantWeight {
        DominantWeight {
            coords: vec![BigUint::zero(); rank],
        }
    }

    /// `a·ω_1 + b·ω_2` padded with zeros to `rank`.
    pub fn first_two(a: BigUint, b: BigUint, rank: usize) -> DominantWeight {
        let mut coords = vec![BigUint::zero(); rank];
        coords[0] = a;
        coords[1] = b;
        DominantWeight { coords }
    }

    pub fn coords(&self) -> &[BigUint] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Parses comma-separated decimal coordinates, e.g. `1,0,2`.
    pub fn parse(s: &str) -> Result<DominantWeight> {
        s.parse()
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.len() != rank {
            return Err(Error::LengthMismatch {
                expected: rank,
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<DominantWeight> {
        let invalid = |why: &str| Error::InvalidWeight(s.to_string(), why.to_string());
        if s.trim().is_empty() {
            return Err(invalid("no coordinates"));
        }
        let coords = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(invalid("coordinates must be non-negative decimal integers"));
                }
                BigUint::parse_bytes(part.as_bytes(), 10)
                    .ok_or_else(|| invalid("unparsable coordinate"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DominantWeight { coords })
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// Degree (dimension) of an irreducible module; always ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Degree(BigUint);

impl Degree {
    pub fn new(value: BigUint) -> Result<Degree> {
        if value.is_zero() {
            return Err(Error::Precondition("a degree is at least 1".into()));
        }
        Ok(Degree(value))
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl From<u64> for Degree {
    fn from(v: u64) -> Degree {
        assert!(v >= 1, "a degree is at least 1");
        Degree(BigUint::from(v))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Number of decimal digits.
pub fn digit_count(d: &Degree) -> usize {
    d.0.to_str_radix(10).len()
}

/// Product of many factors, multiplied as a balanced tree so that the
/// big operands stay similar in size.
pub fn product(mut factors: Vec<BigUint>) -> BigUint {
    if factors.is_empty() {
        return BigUint::one();
    }
    while factors.len() > 1 {
        let mut next = Vec::with_capacity(factors.len().div_ceil(2));
        let mut it = factors.into_iter();
        while let Some(x) = it.next() {
            match it.next() {
                Some(y) => next.push(x * y),
                None => next.push(x),
            }
        }
        factors = next;
    }
    factors.pop().unwrap()
}

/// `<λ+ρ, α^∨> = Σ (a_i + 1) b_i`.
pub fn pairing_plus_rho(lambda: &[BigUint], coroot: &CorootVector) -> Result<BigUint> {
    if lambda.len() != coroot.rank() {
        return Err(Error::LengthMismatch {
            expected: coroot.rank(),
            got: lambda.len(),
        });
    }
    Ok(pairing_unchecked(lambda, coroot))
}

fn pairing_unchecked(lambda: &[BigUint], coroot: &CorootVector) -> BigUint {
    let mut sum = BigUint::from(coroot.height());
    for (a, &b) in lambda.iter().zip(coroot.coords()) {
        if b != 0 && !a.is_zero() {
            sum += a * b as u32;
        }
    }
    sum
}

impl Component {
    /// `Π <ρ, α^∨>`, the product of coroot heights. Computed once.
    pub fn rho_denominator(&self) -> &BigUint {
        self.rho_denominator
            .get_or_init(|| product(self.coroots.iter().map(|c| c.height().into()).collect()))
    }

    /// Weyl dimension of the component's slice of a weight.
    pub fn dim(&self, lambda: &[BigUint]) -> Result<BigUint> {
        if lambda.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: lambda.len(),
            });
        }
        let numerator = if lambda.iter().all(Zero::is_zero) {
            self.rho_denominator().clone()
        } else {
            product(
                self.coroots
                    .iter()
                    .map(|c| pairing_unchecked(lambda, c))
                    .collect(),
            )
        };
        let (q, r) = numerator.div_rem(self.rho_denominator());
        if !r.is_zero() {
            return Err(Error::Invariant(format!(
                "Weyl numerator not divisible by denominator for {}; coroot table corrupted",
                self.lie_type()
            )));
        }
        Ok(q)
    }
}

/// Exact degree of `V(λ)`; for a product datum, the product over components.
pub fn weyl_dim(datum: &RootDatum, lambda: &DominantWeight) -> Result<Degree> {
    lambda.check_rank(datum.total_rank())?;
    let mut d = BigUint::one();
    for c in datum.components() {
        d *= c.dim(&lambda.coords()[c.range()])?;
    }
    Degree::new(d)
}

/// `k(λ+ρ) − ρ`, i.e. coordinates `k·a_i + k − 1`. Its degree is `d·k^N`.
pub fn scaled_weight(lambda: &DominantWeight, k: u64) -> Result<DominantWeight> {
    if k == 0 {
        return Err(Error::ZeroScale);
    }
    Ok(DominantWeight {
        coords: lambda.coords.iter().map(|a| a * k + (k - 1)).collect(),
    })
}

/// `(scaled_weight(λ,k), scaled_weight(μ,k), d·k^N)` for `k = 1..=k_max`,
/// from one pair of equal degree `d`.
pub fn scaled_pair_family(
    datum: &RootDatum,
    lambda: &DominantWeight,
    mu: &DominantWeight,
    k_max: u64,
) -> Result<Vec<(DominantWeight, DominantWeight, Degree)>> {
    let d_lambda = weyl_dim(datum, lambda)?;
    let d_mu = weyl_dim(datum, mu)?;
    if d_lambda != d_mu {
        return Err(Error::UnequalDegrees(d_lambda.to_string(), d_mu.to_string()));
    }
    let n = datum.num_positive_coroots() as u32;
    (1..=k_max)
        .map(|k| {
            let degree = Degree::new(d_lambda.value() * BigUint::from(k).pow(n))?;
            Ok((scaled_weight(lambda, k)?, scaled_weight(mu, k)?, degree))
        })
        .collect()
}
