//! Infinite families of equal-degree pairs in the classical types, all of
//! the form `aω1 + bω2`.
//!
//! * `A_l`, `l ≥ 3`: `(l−1)ω2` and `ω1 + (l−2)ω2`.
//! * `B_l`, `l ≥ 3`: `(2l−2)ω2` and `ω1 + (2l−3)ω2`.
//! * `D_l`, `l ≥ 4`: `(2l−3)ω2` and `ω1 + (2l−4)ω2`.
//! * `C_l`, `l ≥ 3`: `aω1 + bω2` and `(a−2)ω1 + (b+1)ω2` whenever
//!   `(4l−5)a² + (2l−3)²` is a square `c²` and `b = (c+1−a−2l)/2`.
//!
//! Each closed form is evaluated exactly and checked against the Weyl
//! dimension formula before a witness is handed out.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dimension::{product, weyl_dim, Degree, DominantWeight};
use crate::error::{Error, Result};
use crate::pell::{StarSolution, StarStream};
use crate::rootdata::{build_datum, Family, LieType, RootDatum};
use crate::search::canonical_form;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWitness {
    pub lie_type: LieType,
    pub lambda: DominantWeight,
    pub mu: DominantWeight,
    pub degree: Degree,
}

fn range_product(from: u64, to: u64) -> BigUint {
    if from > to {
        return BigUint::one();
    }
    product((from..=to).map(BigUint::from).collect())
}

fn factorial(n: u64) -> BigUint {
    range_product(2, n)
}

fn exact_div(num: BigUint, den: &BigUint, what: &str) -> Result<BigUint> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Invariant(format!("{what}: closed form is not an integer")));
    }
    Ok(q)
}

fn weight_ab(a: u64, b: u64, rank: usize) -> DominantWeight {
    DominantWeight::first_two(a.into(), b.into(), rank)
}

/// `(2l−1)·Π_{k=l+1}^{2l−2} k² / ((l−1)!)²`.
pub fn degree_a(l: u64) -> Result<BigUint> {
    let p = range_product(l + 1, 2 * l - 2);
    exact_div((2 * l - 1) * &p * &p, &factorial(l - 1).pow(2), "A_l degree")
}

/// `3(4l−5)(6l−5)(6l−7)·Π_{k=2l}^{4l−6} k² / ((2l−3)!)²`.
pub fn degree_b(l: u64) -> Result<BigUint> {
    let p = range_product(2 * l, 4 * l - 6);
    let lead = BigUint::from(3 * (4 * l - 5)) * (6 * l - 5) * (6 * l - 7);
    exact_div(lead * &p * &p, &factorial(2 * l - 3).pow(2), "B_l degree")
}

/// `3(3l−4)(3l−5)(4l−7)·Π_{k=2l−1}^{4l−8} k² / ((l−2)²·((2l−5)!)²)`.
pub fn degree_d(l: u64) -> Result<BigUint> {
    let p = range_product(2 * l - 1, 4 * l - 8);
    let lead = BigUint::from(3 * (3 * l - 4)) * (3 * l - 5) * (4 * l - 7);
    let den = BigUint::from((l - 2) * (l - 2)) * factorial(2 * l - 5).pow(2);
    exact_div(lead * &p * &p, &den, "D_l degree")
}

/// Checks both weights against the Weyl formula and against each other's
/// orbit, then packages the witness.
fn certify(
    datum: &RootDatum,
    lie_type: LieType,
    lambda: DominantWeight,
    mu: DominantWeight,
    closed_form: BigUint,
) -> Result<FamilyWitness> {
    let degree = Degree::new(closed_form)?;
    for w in [&lambda, &mu] {
        let d = weyl_dim(datum, w)?;
        if d != degree {
            return Err(Error::Invariant(format!(
                "{lie_type}: closed form {degree} but Weyl formula gives {d} for ({w})"
            )));
        }
    }
    if canonical_form(datum, &lambda)? == canonical_form(datum, &mu)? {
        return Err(Error::Invariant(format!(
            "{lie_type}: ({lambda}) and ({mu}) lie in one automorphism orbit"
        )));
    }
    Ok(FamilyWitness {
        lie_type,
        lambda,
        mu,
        degree,
    })
}

fn simple(family: Family, l: u64) -> Result<(LieType, RootDatum)> {
    let t = LieType::new(family, l as usize)?;
    Ok((t, build_datum(&[t])?))
}

pub fn family_a(l: u64) -> Result<FamilyWitness> {
    if l < 3 {
        return Err(Error::Precondition(format!(
            "A{l}: need l ≥ 3; for l = 2 the two weights are swapped by the graph automorphism"
        )));
    }
    let (t, datum) = simple(Family::A, l)?;
    let r = l as usize;
    certify(&datum, t, weight_ab(0, l - 1, r), weight_ab(1, l - 2, r), degree_a(l)?)
}

pub fn family_b(l: u64) -> Result<FamilyWitness> {
    if l < 3 {
        return Err(Error::Precondition(format!("B{l}: need l ≥ 3")));
    }
    let (t, datum) = simple(Family::B, l)?;
    let r = l as usize;
    certify(&datum, t, weight_ab(0, 2 * l - 2, r), weight_ab(1, 2 * l - 3, r), degree_b(l)?)
}

pub fn family_d(l: u64) -> Result<FamilyWitness> {
    if l < 4 {
        return Err(Error::Precondition(format!("D{l}: need l ≥ 4")));
    }
    let (t, datum) = simple(Family::D, l)?;
    let r = l as usize;
    certify(&datum, t, weight_ab(0, 2 * l - 3, r), weight_ab(1, 2 * l - 4, r), degree_d(l)?)
}

fn check_c(l: u64) -> Result<()> {
    if l < 3 {
        return Err(Error::Precondition(format!("C{l}: need l ≥ 3")));
    }
    Ok(())
}

/// `dim V(aω1+bω2) / dim V((a−2)ω1+(b+1)ω2)` in type `C_l`, which reduces to
/// `(a+1)(b+1)(a+b+2l−2) / ((a−1)(a+b+1)(b+2l−2))`.
pub fn ratio_c(a: &BigUint, b: &BigUint, l: u64) -> Result<BigRational> {
    check_c(l)?;
    if a < &BigUint::from(3u32) {
        return Err(Error::Precondition(format!("ratio needs a ≥ 3, got {a}")));
    }
    let a = BigInt::from(a.clone());
    let b = BigInt::from(b.clone());
    let l2 = BigInt::from(2 * l);
    let num = (&a + 1) * (&b + 1) * (&a + &b + &l2 - 2);
    let den = (&a - 1) * (&a + &b + 1) * (&b + &l2 - 2);
    Ok(BigRational::new(num, den))
}

/// Degree of `V(aω1 + bω2)` in type `C_l`:
/// `(a+1)(a+2b+2l−1)·Π_{k=a+b+2}^{a+b+2l−2} k·Π_{k=b+1}^{b+2l−3} k / ((2l−1)!(2l−3)!)`.
pub fn degree_c(a: &BigUint, b: &BigUint, l: u64) -> Result<Degree> {
    check_c(l)?;
    let s = a + b;
    let first: Vec<BigUint> = (0..2 * l - 3).map(|i| &s + 2u32 + i).collect();
    let second: Vec<BigUint> = (0..2 * l - 3).map(|i| b + 1u32 + i).collect();
    let lead = (a + 1u32) * (a + 2u32 * b + (2 * l - 1));
    let num = lead * product(first) * product(second);
    let den = factorial(2 * l - 1) * factorial(2 * l - 3);
    Degree::new(exact_div(num, &den, "C_l degree")?)
}

/// Witness for one solution of the generalized Pell equation.
pub fn witness_c(datum: &RootDatum, sol: &StarSolution) -> Result<FamilyWitness> {
    let l = sol.l();
    let (a, b) = (sol.a(), sol.b());
    if !ratio_c(a, b, l)?.is_one() {
        return Err(Error::Invariant(format!("C{l}: ratio at (a, b) = ({a}, {b}) is not 1")));
    }
    let degree = degree_c(a, b, l)?;
    let (a2, b1) = (a - 2u32, b + 1u32);
    let other = degree_c(&a2, &b1, l)?;
    if other != degree {
        return Err(Error::Invariant(format!("C{l}: closed-form degrees {degree} and {other} differ")));
    }
    let r = l as usize;
    let t = LieType::new(Family::C, r)?;
    certify(
        datum,
        t,
        DominantWeight::first_two(a.clone(), b.clone(), r),
        DominantWeight::first_two(a2, b1, r),
        degree.into_inner(),
    )
}

/// The first `count` pairs from the scaled Pell family for `C_l`.
pub fn family_c(l: u64, count: usize) -> Result<Vec<FamilyWitness>> {
    check_c(l)?;
    if count == 0 {
        return Err(Error::Precondition("count must be ≥ 1".into()));
    }
    let (_, datum) = simple(Family::C, l)?;
    StarStream::new(l)?
        .take(count)
        .map(|sol| witness_c(&datum, &sol?))
        .collect()
}

/// Dispatch by family letter; `count` only matters for `C`.
pub fn family(family: Family, l: u64, count: usize) -> Result<Vec<FamilyWitness>> {
    match family {
        Family::A => Ok(vec![family_a(l)?]),
        Family::B => Ok(vec![family_b(l)?]),
        Family::C => family_c(l, count),
        Family::D => Ok(vec![family_d(l)?]),
        f => Err(Error::Precondition(format!(
            "no equal-degree family for type {}",
            f.letter()
        ))),
    }
}
