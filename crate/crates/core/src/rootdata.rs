//! Root data of simply-connected semisimple groups, reduced to what the
//! degree computations need: for each simple component its Cartan matrix,
//! its positive coroots written in the basis of simple coroots, and the
//! permutations of the simple coroots induced by Dynkin diagram symmetries.
//!
//! Nodes are numbered as in Bourbaki's Planches, with one exception: in
//! type G2 node 1 is the long simple root, which is the ordering under which
//! `V(2ω1)` and `V(3ω2)` are the two 77-dimensional modules.
//!
//! Cartan matrices follow the convention `c[i][j] = <α_j, α_i^∨>`; under it,
//! the positive roots generated from `c` are the roots, and the positive roots
//! generated from the transpose are the coroots.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Largest rank accepted for a single simple component.
pub const MAX_RANK: usize = 256;

/// The seven Cartan–Killing families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A simple type such as `C3` or `E8`. Only valid (family, rank) pairs can
/// be constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            let need = match family {
                Family::A => "rank >= 1",
                Family::B | Family::C => "rank >= 2",
                Family::D => "rank >= 4",
                Family::E => "rank 6, 7 or 8",
                Family::F => "rank 4",
                Family::G => "rank 2",
            };
            return Err(Error::InvalidType(
                format!("{}{}", family.letter(), rank),
                format!("family {} requires {}", family.letter(), need),
            ));
        }
        if rank > MAX_RANK {
            return Err(Error::RankTooLarge {
                rank,
                max: MAX_RANK,
            });
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<LieType> {
        let invalid = |why: &str| Error::InvalidType(s.to_string(), why.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(|| invalid("empty type string"))?;
        let family =
            Family::from_letter(letter).ok_or_else(|| invalid("family must be one of A-G"))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid("rank must be a decimal number"));
        }
        let rank: usize = digits.parse().map_err(|_| invalid("rank out of range"))?;
        LieType::new(family, rank)
    }
}

/// Parses a `+`-joined product such as `A1+A1` or `E6+A2`.
pub fn parse_types(s: &str) -> Result<Vec<LieType>> {
    if s.trim().is_empty() {
        return Err(Error::EmptyDatum);
    }
    s.split('+').map(|part| part.trim().parse()).collect()
}

/// Square integer matrix with 2 on the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i32>>,
}

impl CartanMatrix {
    /// Checks the generalized Cartan matrix axioms and non-degeneracy.
    pub fn new(entries: Vec<Vec<i32>>) -> Result<CartanMatrix> {
        let n = entries.len();
        let bad = |why: String| Err(Error::Precondition(format!("not a Cartan matrix: {why}")));
        if n == 0 {
            return bad("empty".into());
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {} has length {}", i + 1, row.len()));
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j {
                    if v != 2 {
                        return bad(format!("diagonal entry ({0},{0}) is {v}", i + 1));
                    }
                } else {
                    if !(-3..=0).contains(&v) {
                        return bad(format!("entry ({},{}) is {v}", i + 1, j + 1));
                    }
                    if (v == 0) != (entries[j][i] == 0) {
                        return bad(format!("zero pattern not symmetric at ({},{})", i + 1, j + 1));
                    }
                }
            }
        }
        let m = CartanMatrix { entries };
        if m.determinant() == 0 {
            return bad("singular".into());
        }
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<i32>] {
        &self.entries
    }

    pub fn transpose(&self) -> CartanMatrix {
        let n = self.rank();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i]).collect())
            .collect();
        CartanMatrix { entries }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        let n = self.rank();
        let mut a: Vec<Vec<i128>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&v| v as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                }
            }
            prev = a[k][k];
        }
        sign * a[n - 1][n - 1]
    }
}

/// Cartan matrix of a simple type, `c[i][j] = <α_j, α_i^∨>`.
///
/// Row `i` carries the −2 (or −3) entry when node `i` is the short end of a
/// multiple bond.
pub fn cartan_matrix(t: LieType) -> CartanMatrix {
    let l = t.rank();
    let mut c = vec![vec![0i32; l]; l];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    match t.family() {
        Family::A | Family::B | Family::C => (1..l).for_each(|i| link(i, i + 1)),
        Family::D => {
            (1..l - 1).for_each(|i| link(i, i + 1));
            link(l - 2, l);
        }
        Family::E => {
            link(1, 3);
            link(2, 4);
            (3..l).for_each(|i| link(i, i + 1));
        }
        Family::F => (1..4).for_each(|i| link(i, i + 1)),
        Family::G => link(1, 2),
    }
    match t.family() {
        // α_l short
        Family::B => c[l - 1][l - 2] = -2,
        // α_l long
        Family::C => c[l - 2][l - 1] = -2,
        // α1, α2 long; α3, α4 short
        Family::F => c[2][1] = -2,
        // α1 long, α2 short
        Family::G => c[1][0] = -3,
        _ => {}
    }
    CartanMatrix { entries: c }
}

/// A positive coroot written in the basis of simple coroots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CorootVector {
    coords: Vec<u8>,
}

impl CorootVector {
    /// Rejects the zero vector.
    pub fn new(coords: Vec<u8>) -> Result<CorootVector> {
        if coords.iter().all(|&b| b == 0) {
            return Err(Error::Precondition("coroot vector must be nonzero".into()));
        }
        Ok(CorootVector { coords })
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn height(&self) -> u64 {
        self.coords.iter().map(|&b| b as u64).sum()
    }

    fn sort_key(&self) -> (u64, &[u8]) {
        (self.height(), &self.coords)
    }
}

// Positive root coefficients never exceed 6 (the highest root of E8).
const MAX_COEFFICIENT: u8 = 6;

/// All positive roots of the root system with Cartan matrix `c`
/// (`c[i][j] = <α_j, α_i^∨>`), in simple-root coordinates, sorted by height
/// and then lexicographically.
///
/// Roots are grown height by height: `β + α_i` is a root exactly when
/// `p − <β, α_i^∨> > 0`, `p` being the length of the `α_i`-string below `β`.
/// Fails when the matrix is not of finite type.
pub fn generate_positive_roots(c: &CartanMatrix) -> Result<Vec<CorootVector>> {
    let n = c.rank();
    // sparse rows: (j, c[i][j]) for nonzero entries
    let rows: Vec<Vec<(usize, i32)>> = c
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j, v))
                .collect()
        })
        .collect();

    let mut roots: Vec<Vec<u8>> = Vec::new();
    // string_below[r][i]: largest k with roots[r] - k α_i a positive root
    let mut string_below: Vec<Vec<u8>> = Vec::new();
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();

    let mut layer: Vec<usize> = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = vec![0u8; n];
        v[i] = 1;
        index.insert(v.clone(), roots.len());
        layer.push(roots.len());
        roots.push(v);
        string_below.push(vec![0u8; n]);
    }

    while !layer.is_empty() {
        let mut next = Vec::new();
        for &r in &layer {
            for i in 0..n {
                let pairing: i32 = rows[i]
                    .iter()
                    .map(|&(j, v)| v * roots[r][j] as i32)
                    .sum();
                if string_below[r][i] as i32 - pairing <= 0 {
                    continue;
                }
                let mut cand = roots[r].clone();
                if cand[i] >= MAX_COEFFICIENT {
                    return Err(Error::Invariant(
                        "root coefficients grow without bound; matrix is not of finite type"
                            .into(),
                    ));
                }
                cand[i] += 1;
                if index.contains_key(&cand) {
                    continue;
                }
                index.insert(cand.clone(), roots.len());
                next.push(roots.len());
                roots.push(cand);
                string_below.push(vec![0u8; n]);
            }
        }
        for &r in &next {
            for i in 0..n {
                if roots[r][i] == 0 {
                    continue;
                }
                let mut below = roots[r].clone();
                below[i] -= 1;
                if let Some(&s) = index.get(&below) {
                    string_below[r][i] = string_below[s][i] + 1;
                }
            }
        }
        layer = next;
    }

    let mut out: Vec<CorootVector> = roots
        .into_iter()
        .map(|coords| CorootVector { coords })
        .collect();
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    Ok(out)
}

/// Positive coroots of type `t`: the positive roots of the dual system,
/// whose Cartan matrix is the transpose.
pub fn positive_coroots(t: LieType) -> Vec<CorootVector> {
    generate_positive_roots(&cartan_matrix(t).transpose())
        .expect("Cartan matrices of simple types are of finite type")
}

/// Positive coroots of a classical type written out from the explicit
/// index formulas (independent of [`generate_positive_roots`]). Sorted like
/// [`positive_coroots`].
///
/// * `A_l`: `β_ij = Σ_{k=i..j} α_k^∨`, `1 ≤ i ≤ j ≤ l`.
/// * `B_l` (coroots of type C): `β_ij = Σ_{k=i..j−1} α_k^∨ + 2 Σ_{k=j..l−1} α_k^∨ + α_l^∨`
///   for `1 ≤ i ≤ j ≤ l`, and `γ_ij = Σ_{k=i..j} α_k^∨` for `1 ≤ i ≤ j ≤ l−1`.
/// * `C_l` (coroots of type B): `β_ij = Σ_{k=i..j} α_k^∨` for `1 ≤ i ≤ j ≤ l−1`,
///   `η_i = Σ_{k=i..l} α_k^∨` for `1 ≤ i ≤ l`, and
///   `γ_ij = Σ_{k=i..j−1} α_k^∨ + 2 Σ_{k=j..l} α_k^∨` for `1 ≤ i < j ≤ l`.
/// * `D_l`: `β_ij = Σ_{k=i..j} α_k^∨` for `1 ≤ i ≤ j ≤ l−1`,
///   `η_i = Σ_{k=i..l−2} α_k^∨ + α_l^∨` for `1 ≤ i ≤ l−1`, and
///   `γ_ij = Σ_{k=i..j−1} α_k^∨ + 2 Σ_{k=j..l−2} α_k^∨ + α_{l−1}^∨ + α_l^∨`
///   for `1 ≤ i < j ≤ l−1`.
pub fn classical_coroot_table(t: LieType) -> Result<Vec<CorootVector>> {
    let l = t.rank();
    // 1-based inclusive range sum with a multiplicity
    let add = |v: &mut Vec<u8>, from: usize, to: usize, mult: u8| {
        for k in from..=to {
            v[k - 1] += mult;
        }
    };
    let zero = || vec![0u8; l];
    let mut out = Vec::new();
    match t.family() {
        Family::A => {
            for i in 1..=l {
                for j in i..=l {
                    let mut v = zero();
                    add(&mut v, i, j, 1);
                    out.push(v);
                }
            }
        }
        Family::B => {
            for i in 1..=l {
                for j in i..=l {
                    let mut v = zero();
                    add(&mut v, i, j - 1, 1);
                    add(&mut v, j, l - 1, 2);
                    add(&mut v, l, l, 1);
                    out.push(v);
                }
            }
            for i in 1..l {
                for j in i..l {
                    let mut v = zero();
                    add(&mut v, i, j, 1);
                    out.push(v);
                }
            }
        }
        Family::C => {
            for i in 1..l {
                for j in i..l {
                    let mut v = zero();
                    add(&mut v, i, j, 1);
                    out.push(v);
                }
            }
            for i in 1..=l {
                let mut v = zero();
                add(&mut v, i, l, 1);
                out.push(v);
            }
            for i in 1..=l {
                for j in i + 1..=l {
                    let mut v = zero();
                    add(&mut v, i, j - 1, 1);
                    add(&mut v, j, l, 2);
                    out.push(v);
                }
            }
        }
        Family::D => {
            for i in 1..l {
                for j in i..l {
                    let mut v = zero();
                    add(&mut v, i, j, 1);
                    out.push(v);
                }
            }
            for i in 1..l {
                let mut v = zero();
                add(&mut v, i, l - 2, 1);
                add(&mut v, l, l, 1);
                out.push(v);
            }
            for i in 1..l {
                for j in i + 1..l {
                    let mut v = zero();
                    add(&mut v, i, j - 1, 1);
                    add(&mut v, j, l - 2, 2);
                    add(&mut v, l - 1, l, 1);
                    out.push(v);
                }
            }
        }
        _ => {
            return Err(Error::Precondition(format!(
                "{t} is not a classical type; no explicit coroot table"
            )))
        }
    }
    let mut out: Vec<CorootVector> = out
        .into_iter()
        .map(|coords| CorootVector { coords })
        .collect();
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    Ok(out)
}

/// A permutation of the simple nodes, `image[i]` being where node `i` goes
/// (0-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based cycles, e.g. `[[1, 6], [3, 5]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Permutation {
        let mut image: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &from) in cycle.iter().enumerate() {
                let to = cycle[(k + 1) % cycle.len()];
                image[from - 1] = to - 1;
            }
        }
        Permutation { image }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Moves the entry at position `i` to position `image[i]`.
    pub fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.image[i]] = x.clone();
        }
        out
    }
}

/// Permutations of the simple coroots induced by symmetries of the Dynkin
/// diagram; the identity comes first.
pub fn diagram_automorphisms(t: LieType) -> Vec<Permutation> {
    let l = t.rank();
    let id = Permutation::identity(l);
    match (t.family(), l) {
        (Family::A, l) if l >= 2 => {
            let flip = Permutation {
                image: (0..l).map(|i| l - 1 - i).collect(),
            };
            vec![id, flip]
        }
        (Family::D, 4) => vec![
            id,
            Permutation::from_cycles(4, &[&[1, 3]]),
            Permutation::from_cycles(4, &[&[1, 4]]),
            Permutation::from_cycles(4, &[&[3, 4]]),
            Permutation::from_cycles(4, &[&[1, 3, 4]]),
            Permutation::from_cycles(4, &[&[1, 4, 3]]),
        ],
        (Family::D, l) => vec![id, Permutation::from_cycles(l, &[&[l - 1, l]])],
        (Family::E, 6) => vec![id, Permutation::from_cycles(6, &[&[1, 6], &[3, 5]])],
        _ => vec![id],
    }
}

/// One simple factor of a [`RootDatum`].
#[derive(Debug)]
pub struct Component {
    pub(crate) lie_type: LieType,
    pub(crate) cartan: CartanMatrix,
    pub(crate) coroots: Vec<CorootVector>,
    pub(crate) automorphisms: Vec<Permutation>,
    pub(crate) offset: usize,
    pub(crate) rho_denominator: OnceLock<BigUint>,
}

impl Component {
    pub fn new(lie_type: LieType, offset: usize) -> Component {
        Component {
            lie_type,
            cartan: cartan_matrix(lie_type),
            coroots: positive_coroots(lie_type),
            automorphisms: diagram_automorphisms(lie_type),
            offset,
            rho_denominator: OnceLock::new(),
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn coroots(&self) -> &[CorootVector] {
        &self.coroots
    }

    pub fn automorphisms(&self) -> &[Permutation] {
        &self.automorphisms
    }

    /// Position of this component's first coordinate in a concatenated weight.
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn range(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.rank()
    }
}

/// Root datum of a product of simple simply-connected groups.
#[derive(Debug)]
pub struct RootDatum {
    components: Vec<Component>,
    total_rank: usize,
    num_positive: usize,
}

impl RootDatum {
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn total_rank(&self) -> usize {
        self.total_rank
    }

    /// The number `N` of positive coroots.
    pub fn num_positive_coroots(&self) -> usize {
        self.num_positive
    }

    pub fn types(&self) -> Vec<LieType> {
        self.components.iter().map(|c| c.lie_type).collect()
    }

    /// Groups of component indices sharing the same type, in order of first
    /// appearance. Only groups of size ≥ 2 admit factor swaps.
    pub fn identical_component_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<(LieType, Vec<usize>)> = Vec::new();
        for (k, c) in self.components.iter().enumerate() {
            match classes.iter_mut().find(|(t, _)| *t == c.lie_type) {
                Some((_, ks)) => ks.push(k),
                None => classes.push((c.lie_type, vec![k])),
            }
        }
        classes.into_iter().map(|(_, ks)| ks).collect()
    }
}

impl fmt::Display for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}", c.lie_type)?;
        }
        Ok(())
    }
}

pub fn build_datum(types: &[LieType]) -> Result<RootDatum> {
    if types.is_empty() {
        return Err(Error::EmptyDatum);
    }
    let mut offset = 0;
    let mut components = Vec::with_capacity(types.len());
    for &t in types {
        components.push(Component::new(t, offset));
        offset += t.rank();
    }
    let num_positive = components.iter().map(|c| c.coroots.len()).sum();
    Ok(RootDatum {
        components,
        total_rank: offset,
        num_positive,
    })
}

/// Convenience: parse a type string like `A1+A1` and build its datum.
pub fn datum_from_str(s: &str) -> Result<RootDatum> {
    build_datum(&parse_types(s)?)
}
