//! Independent oracles shared by the integration tests. Nothing here uses the
//! crate's root generation, continued fractions or enumeration.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Roots;

/// Degree of the classical representation with highest weight `coords`
/// (fundamental-weight basis), from the product formula in
/// epsilon-coordinates. `family` is one of 'A', 'B', 'C', 'D'.
pub fn classical_dim(family: char, coords: &[BigInt]) -> BigInt {
    let l = coords.len();
    // Work with doubled coordinates so B's half-integers stay integral.
    let (lam2, rho2): (Vec<BigInt>, Vec<BigInt>) = match family {
        'A' => {
            // gl_{l+1}: lambda_i = sum_{j >= i} a_j, rho_i = l + 1 - i
            let mut lam = vec![BigInt::from(0); l + 1];
            for i in (0..l).rev() {
                lam[i] = &lam[i + 1] + &coords[i];
            }
            let rho = (0..=l).map(|i| BigInt::from(2 * (l - i))).collect();
            (lam.into_iter().map(|x| x * 2).collect(), rho)
        }
        'B' | 'C' | 'D' => {
            let n = coords.len();
            let mut lam = vec![BigInt::from(0); n];
            // omega_i = e_1 + ... + e_i, except spin weights
            let spin_from = match family {
                'B' => n - 1,
                'D' => n - 2,
                _ => n,
            };
            for i in 0..n {
                let mut s = BigInt::from(0);
                for j in i..spin_from {
                    s += &coords[j] * 2;
                }
                for j in spin_from.max(i)..n {
                    s += &coords[j];
                }
                if family == 'D' && i == n - 1 {
                    // omega_{l-1} = (e_1+...+e_{l-1} - e_l)/2
                    s = &coords[n - 1] - &coords[n - 2];
                }
                lam[i] = s;
            }
            let rho = (0..n)
                .map(|i| match family {
                    'B' => BigInt::from(2 * (n - i) - 1),
                    'C' => BigInt::from(2 * (n - i)),
                    _ => BigInt::from(2 * (n - 1 - i)),
                })
                .collect();
            (lam, rho)
        }
        _ => panic!("not classical: {family}"),
    };
    let x: Vec<BigInt> = lam2.iter().zip(&rho2).map(|(a, b)| a + b).collect();
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    let n = x.len();
    for i in 0..n {
        if family == 'B' || family == 'C' {
            num *= &x[i];
            den *= &rho2[i];
        }
        for j in i + 1..n {
            num *= &x[i] - &x[j];
            den *= &rho2[i] - &rho2[j];
            if family != 'A' {
                num *= &x[i] + &x[j];
                den *= &rho2[i] + &rho2[j];
            }
        }
    }
    assert!((&num % &den) == BigInt::from(0), "inexact classical product");
    num / den
}

fn is_square_u128(n: u128) -> Option<u128> {
    // quadratic residues mod 64, 63, 65 reject most non-squares
    const fn table(m: u32) -> [bool; 128] {
        let mut t = [false; 128];
        let mut i = 0;
        while i < m {
            t[((i * i) % m) as usize] = true;
            i += 1;
        }
        t
    }
    const Q64: [bool; 128] = table(64);
    const Q63: [bool; 128] = table(63);
    const Q65: [bool; 128] = table(65);
    if !Q64[(n % 64) as usize] || !Q63[(n % 63) as usize] || !Q65[(n % 65) as usize] {
        return None;
    }
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

fn squarefree_split(d: u64) -> (u64, u64) {
    // d = d0 * f^2 with d0 squarefree
    let (mut d0, mut f) = (d, 1);
    let mut p = 2;
    while p * p <= d0 {
        while d0 % (p * p) == 0 {
            d0 /= p * p;
            f *= p;
        }
        p += 1;
    }
    (d0, f)
}

/// Smallest `y ≥ 1` (with its `x`) solving `x^2 - d y^2 = 1` among all
/// solutions with `y ≤ y_max`, by exhaustive search.
///
/// Writes `x - 1 = gP`, `x + 1 = gQ` with `g = gcd ∈ {1, 2}` and `P, Q`
/// coprime, so `P = s m^2`, `Q = t n^2` with `st` the squarefree part `d0`
/// of `d = d0 f^2` and `y = g m n / f`. Then `min(m, n) ≤ sqrt(y_max f / g)`,
/// and every candidate is enumerated through its smaller factor.
pub fn pell_min_bruteforce(d: u64, y_max: u128) -> Option<(u128, u128)> {
    let (d0, f) = squarefree_split(d);
    let divisors: Vec<u64> = (1..=d0).filter(|s| d0 % s == 0).collect();
    let mut best: Option<(u128, u128)> = None;
    for g in [1u128, 2] {
        let delta = 2 / g;
        let kmax = (y_max * f as u128 / g).sqrt();
        for &s in &divisors {
            let (s, t) = (s as u128, (d0 / s) as u128);
            let mut consider = |m: u128, n: u128| {
                let p = s * m * m;
                let x = g * p + 1;
                let mn = g * m * n;
                if m == 0 || n == 0 || mn % f as u128 != 0 {
                    return;
                }
                let y = mn / f as u128;
                if y == 0 || y > y_max || x * x != d as u128 * y * y + 1 {
                    return;
                }
                if best.map_or(true, |(_, by)| y < by) {
                    best = Some((x, y));
                }
            };
            for k in 1..=kmax {
                // m = k: t n^2 = s k^2 + delta
                let rhs = s * k * k + delta;
                if rhs % t == 0 {
                    if let Some(n) = is_square_u128(rhs / t) {
                        consider(k, n);
                    }
                }
                // n = k: s m^2 = t k^2 - delta
                let lhs = t * k * k;
                if lhs > delta && (lhs - delta) % s == 0 {
                    if let Some(m) = is_square_u128((lhs - delta) / s) {
                        consider(m, k);
                    }
                }
            }
        }
    }
    best
}
