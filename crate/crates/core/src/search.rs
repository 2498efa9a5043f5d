//! Enumeration of dominant weights below a degree bound and detection of
//! distinct automorphism orbits sharing a degree.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::dimension::{product, weyl_dim, Degree, DominantWeight};
use crate::error::{Error, Result};
use crate::rootdata::{datum_from_str, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_degree: BigUint,
    /// Collapse weights related by a diagram automorphism (or a swap of
    /// identical factors) before grouping.
    pub modulo_automorphisms: bool,
}

impl SearchConfig {
    pub fn new(max_degree: impl Into<BigUint>) -> SearchConfig {
        SearchConfig {
            max_degree: max_degree.into(),
            modulo_automorphisms: true,
        }
    }

    pub fn raw(mut self) -> SearchConfig {
        self.modulo_automorphisms = false;
        self
    }
}

/// Weights of pairwise distinct orbits with one common degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoincidenceGroup {
    pub degree: Degree,
    pub weights: Vec<DominantWeight>,
}

/// Sparse coroots of one component, as (coordinate, coefficient) lists with
/// coordinates relative to the whole datum.
struct FastComponent {
    coroots: Vec<Vec<(usize, u64)>>,
    heights: Vec<u64>,
    denominator: BigUint,
}

/// Evaluates degrees of weights with `u64` coordinates.
struct Evaluator {
    components: Vec<FastComponent>,
}

impl Evaluator {
    fn new(datum: &RootDatum) -> Evaluator {
        let components = datum
            .components()
            .iter()
            .map(|c| FastComponent {
                coroots: c
                    .coroots()
                    .iter()
                    .map(|r| {
                        r.coords()
                            .iter()
                            .enumerate()
                            .filter(|(_, &b)| b != 0)
                            .map(|(i, &b)| (c.offset() + i, b as u64))
                            .collect()
                    })
                    .collect(),
                heights: c.coroots().iter().map(|r| r.height()).collect(),
                denominator: c.rho_denominator().clone(),
            })
            .collect();
        Evaluator { components }
    }

    fn degree(&self, coords: &[u64]) -> BigUint {
        let mut total = BigUint::one();
        for c in &self.components {
            let factors: Vec<BigUint> = c
                .coroots
                .iter()
                .zip(&c.heights)
                .map(|(r, &h)| {
                    let s: u128 = r.iter().map(|&(i, b)| coords[i] as u128 * b as u128).sum();
                    BigUint::from(s + h as u128)
                })
                .collect();
            let (q, rem) = product(factors).div_rem(&c.denominator);
            debug_assert!(rem.is_zero());
            total *= q;
        }
        total
    }
}

/// Depth-first walk over all weights of degree ≤ `max`: coordinate `pos`
/// grows until the weight (with later coordinates zero) exceeds the bound,
/// which is valid because the degree strictly increases in every coordinate.
fn walk(
    eval: &Evaluator,
    max: &BigUint,
    pos: usize,
    coords: &mut Vec<u64>,
    mut current: BigUint,
    out: &mut Vec<(Vec<u64>, BigUint)>,
) {
    let last = pos + 1 == coords.len();
    loop {
        if last {
            out.push((coords.clone(), current));
        } else {
            walk(eval, max, pos + 1, coords, current, out);
        }
        coords[pos] += 1;
        current = eval.degree(coords);
        if &current > max {
            break;
        }
    }
    coords[pos] = 0;
}

/// All dominant weights with degree at most `max_degree`, in lexicographic
/// order of coordinates.
pub fn enumerate_dominant(
    datum: &RootDatum,
    max_degree: &BigUint,
) -> Result<Vec<(DominantWeight, Degree)>> {
    enumerate_dominant_with_progress(datum, max_degree, |_, _| {})
}

/// Like [`enumerate_dominant`], reporting `(first coordinate done, weights
/// found so far in that slice)` after each top-level slice.
pub fn enumerate_dominant_with_progress<F>(
    datum: &RootDatum,
    max_degree: &BigUint,
    progress: F,
) -> Result<Vec<(DominantWeight, Degree)>>
where
    F: Fn(u64, usize) + Sync,
{
    if max_degree.is_zero() {
        return Err(Error::Precondition("max_degree must be ≥ 1".into()));
    }
    let eval = Evaluator::new(datum);
    let rank = datum.total_rank();

    // top-level slices a_1 = 0, 1, 2, ... explored independently
    let mut firsts = Vec::new();
    let mut probe = vec![0u64; rank];
    loop {
        if &eval.degree(&probe) > max_degree {
            break;
        }
        firsts.push(probe[0]);
        probe[0] += 1;
    }

    let slices: Vec<Vec<(Vec<u64>, BigUint)>> = firsts
        .into_par_iter()
        .map(|a1| {
            let mut coords = vec![0u64; rank];
            coords[0] = a1;
            let mut out = Vec::new();
            let start = eval.degree(&coords);
            if rank == 1 {
                out.push((coords, start));
            } else {
                walk(&eval, max_degree, 1, &mut coords, start, &mut out);
            }
            progress(a1, out.len());
            out
        })
        .collect();

    slices
        .into_iter()
        .flatten()
        .map(|(c, d)| Ok((DominantWeight::from_u64s(&c), Degree::new(d)?)))
        .collect()
}

/// Lexicographically smallest weight in the orbit of `lambda` under the
/// diagram automorphisms of each factor and the swaps of identical factors.
pub fn canonical_form(datum: &RootDatum, lambda: &DominantWeight) -> Result<DominantWeight> {
    lambda.check_rank(datum.total_rank())?;
    let blocks: Vec<Vec<BigUint>> = datum
        .components()
        .iter()
        .map(|c| {
            let block = &lambda.coords()[c.range()];
            c.automorphisms()
                .iter()
                .map(|sigma| sigma.apply(block))
                .min()
                .expect("identity is always present")
        })
        .collect();
    let mut placed = blocks.clone();
    for class in datum.identical_component_classes() {
        let mut sorted: Vec<&Vec<BigUint>> = class.iter().map(|&k| &blocks[k]).collect();
        sorted.sort();
        for (&k, block) in class.iter().zip(sorted) {
            placed[k] = block.clone();
        }
    }
    Ok(DominantWeight::new(placed.into_iter().flatten().collect()))
}

/// Groups of at least two weights (distinct orbits, unless
/// `modulo_automorphisms` is off) with equal degree ≤ the bound, sorted by
/// degree; weights inside a group are sorted.
pub fn find_coincidences(datum: &RootDatum, config: &SearchConfig) -> Result<Vec<CoincidenceGroup>> {
    let weights = enumerate_dominant(datum, &config.max_degree)?;
    group_by_degree(datum, weights, config.modulo_automorphisms)
}

pub fn group_by_degree(
    datum: &RootDatum,
    weights: Vec<(DominantWeight, Degree)>,
    modulo_automorphisms: bool,
) -> Result<Vec<CoincidenceGroup>> {
    let mut by_degree: HashMap<Degree, BTreeSet<DominantWeight>> = HashMap::new();
    for (w, d) in weights {
        let w = if modulo_automorphisms {
            canonical_form(datum, &w)?
        } else {
            w
        };
        by_degree.entry(d).or_default().insert(w);
    }
    let mut groups: Vec<CoincidenceGroup> = by_degree
        .into_iter()
        .filter(|(_, ws)| ws.len() >= 2)
        .map(|(degree, ws)| CoincidenceGroup {
            degree,
            weights: ws.into_iter().collect(),
        })
        .collect();
    groups.sort_by(|x, y| x.degree.cmp(&y.degree));
    Ok(groups)
}

/// One row of the table of smallest equal-degree pairs for the exceptional
/// types and for `A2`, `B2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub lie_type: &'static str,
    pub lambda: &'static [u64],
    pub mu: &'static [u64],
    pub degree: u64,
}

pub const SMALLEST_PAIRS: [TableRow; 7] = [
    TableRow { lie_type: "A2", lambda: &[1, 2], mu: &[0, 4], degree: 15 },
    TableRow { lie_type: "B2", lambda: &[1, 2], mu: &[0, 4], degree: 35 },
    TableRow { lie_type: "G2", lambda: &[2, 0], mu: &[0, 3], degree: 77 },
    TableRow { lie_type: "F4", lambda: &[1, 0, 0, 1], mu: &[2, 0, 0, 0], degree: 1053 },
    TableRow { lie_type: "E6", lambda: &[2, 0, 0, 0, 0, 0], mu: &[0, 0, 1, 0, 0, 0], degree: 351 },
    TableRow {
        lie_type: "E7",
        lambda: &[0, 0, 0, 1, 1, 0, 0],
        mu: &[0, 0, 0, 0, 0, 2, 3],
        degree: 1_903_725_824,
    },
    TableRow {
        lie_type: "E8",
        lambda: &[1, 0, 1, 0, 0, 0, 0, 0],
        mu: &[1, 0, 0, 0, 0, 0, 1, 1],
        degree: 8_634_368_000,
    },
];

/// Outcome of a single named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    /// `expected == actual`, with both printed in the detail.
    pub fn equal<T: PartialEq + std::fmt::Display>(name: impl Into<String>, expected: T, actual: T) -> Check {
        let passed = expected == actual;
        Check::new(name, passed, format!("expected {expected}, got {actual}"))
    }

    pub fn from_result(name: impl Into<String>, r: Result<Check>) -> Check {
        let name = name.into();
        match r {
            Ok(c) => c,
            Err(e) => Check::new(name, false, e.to_string()),
        }
    }
}

/// A list of checks; passes when all of them do.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Recomputes one table row: both degrees, distinct orbits, and with
/// `minimality` an exhaustive scan showing no equal-degree orbits below the
/// row's degree and exactly the row's pair at it.
pub fn verify_row(row: &TableRow, minimality: bool) -> Report {
    let mut report = Report::default();
    let t = row.lie_type;
    let datum = match datum_from_str(t) {
        Ok(d) => d,
        Err(e) => {
            report.push(Check::new(format!("{t} datum"), false, e.to_string()));
            return report;
        }
    };
    let lambda = DominantWeight::from_u64s(row.lambda);
    let mu = DominantWeight::from_u64s(row.mu);
    let expected = Degree::from(row.degree);
    for (label, w) in [("lambda", &lambda), ("mu", &mu)] {
        report.push(Check::from_result(
            format!("{t} dim {label}=({w})"),
            weyl_dim(&datum, w).map(|d| Check::equal(format!("{t} dim {label}=({w})"), &expected, &d)),
        ));
    }
    let orbits = canonical_form(&datum, &lambda).and_then(|cl| {
        let cm = canonical_form(&datum, &mu)?;
        Ok(Check::new(
            format!("{t} distinct orbits"),
            cl != cm,
            format!("canonical forms ({cl}) and ({cm})"),
        ))
    });
    report.push(Check::from_result(format!("{t} distinct orbits"), orbits));

    if minimality {
        let name = format!("{t} minimality below {}", row.degree);
        let scan = find_coincidences(&datum, &SearchConfig::new(row.degree)).and_then(|groups| {
            let smaller: Vec<_> = groups.iter().filter(|g| g.degree < expected).collect();
            let at: Vec<_> = groups.iter().filter(|g| g.degree == expected).collect();
            let mut want = vec![canonical_form(&datum, &lambda)?, canonical_form(&datum, &mu)?];
            want.sort();
            let exact = at.len() == 1 && at[0].weights == want;
            let detail = match smaller.first() {
                Some(g) => format!(
                    "smaller group at {}: {}",
                    g.degree,
                    g.weights.iter().map(|w| format!("({w})")).collect::<Vec<_>>().join(" ")
                ),
                None if exact => format!("no group below {}; pair is the only group at it", row.degree),
                None => format!("group at {} is {:?}", row.degree, at.iter().map(|g| &g.weights).collect::<Vec<_>>()),
            };
            Ok(Check::new(name.clone(), smaller.is_empty() && exact, detail))
        });
        report.push(Check::from_result(name, scan));
    }
    report
}

/// The graph automorphism of `E6` moves `2ω1` to `2ω6` and `ω3` to `ω5`,
/// so those have degree 351 too.
pub fn verify_e6_remark() -> Report {
    let mut report = Report::default();
    let e6 = datum_from_str("E6").expect("E6 is valid");
    let two_w6 = DominantWeight::from_u64s(&[0, 0, 0, 0, 0, 2]);
    let two_w1 = DominantWeight::from_u64s(&[2, 0, 0, 0, 0, 0]);
    let w5 = DominantWeight::from_u64s(&[0, 0, 0, 0, 1, 0]);
    let w3 = DominantWeight::from_u64s(&[0, 0, 1, 0, 0, 0]);
    for (label, w) in [("2w6", &two_w6), ("w5", &w5)] {
        let name = format!("E6 dim {label}");
        report.push(Check::from_result(
            name.clone(),
            weyl_dim(&e6, w).map(|d| Check::equal(name, &Degree::from(351), &d)),
        ));
    }
    for (a, b, label) in [(&two_w6, &two_w1, "2w6 ~ 2w1"), (&w5, &w3, "w5 ~ w3")] {
        let name = format!("E6 orbit {label}");
        report.push(Check::from_result(
            name.clone(),
            canonical_form(&e6, a).and_then(|ca| {
                let cb = canonical_form(&e6, b)?;
                Ok(Check::new(name, ca == cb, format!("canonical forms ({ca}) and ({cb})")))
            }),
        ));
    }
    report
}

/// All seven rows plus the `E6` remark. Minimality scans run for the rows
/// up to `E6`; `extended` adds the long `E7`/`E8` scans.
pub fn verify_prop2(minimality: bool, extended: bool) -> Report {
    let mut report = Report::default();
    for row in &SMALLEST_PAIRS {
        let long = matches!(row.lie_type, "E7" | "E8");
        report.extend(verify_row(row, minimality && (!long || extended)));
    }
    report.extend(verify_e6_remark());
    report
}
