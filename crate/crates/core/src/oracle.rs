//! Brute-force ground truth for small `n`.
//!
//! Nothing here calls into [`crate::tabloid`], [`crate::pieri`],
//! [`crate::rep_ring`] or [`crate::qside`]. Characters come from explicit
//! permutation actions, irreducible characters are peeled off permutation
//! characters by orthogonality, tableaux are filled box by box, and
//! `GL_n(F_p)` is enumerated matrix by matrix.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::partitions::enumerate_partitions;
use crate::{Error, Partition, Result};

/// Default cap on the number of tabloids [`enumerate_tabloids`] may produce.
pub const DEFAULT_TABLOID_BOUND: usize = 1_000_000;
/// Largest `n` for character computations over `S_n`.
pub const MAX_CHARACTER_N: usize = 8;
/// Largest `n` for [`induced_character_decomposition`].
pub const MAX_INDUCTION_N: usize = 7;
/// Largest diagram for [`count_syt`].
pub const MAX_SYT_SIZE: usize = 16;
/// Cap on `|GL_n(F_p)|` for explicit enumeration.
pub const MAX_TINY_GROUP_ORDER: u64 = 10_000;

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k as u64).fold(BigUint::one(), |acc, i| acc * (n as u64 - i) / (i + 1))
}

fn bound_check(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        return Err(Error::BoundExceeded { what, value, bound });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Permutations and tabloids

/// All permutations of `{0..n}` in lexicographic one-line order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap_or(i);
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

fn check_permutation(g: &[usize]) -> Result<()> {
    let mut seen = vec![false; g.len()];
    for &x in g {
        if x >= g.len() || seen[x] {
            return Err(Error::Parse(alloc::format!("{g:?} is not a permutation")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Cycle lengths of `g`, as a partition.
pub fn cycle_type(g: &[usize]) -> Partition {
    let mut seen = vec![false; g.len()];
    let mut lengths = Vec::new();
    for start in 0..g.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = g[x];
            len += 1;
        }
        lengths.push(len);
    }
    Partition::from_unsorted(lengths)
}

/// `+1` for even permutations, `-1` for odd ones.
pub fn sign(g: &[usize]) -> i32 {
    let ct = cycle_type(g);
    if (ct.size() - ct.len()).is_multiple_of(2) { 1 } else { -1 }
}

/// An assignment of `{0..n}` to the rows of a diagram, rows taken as sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    row_of: Vec<usize>,
}

impl Tabloid {
    pub fn new(row_of: Vec<usize>, shape: &Partition) -> Result<Self> {
        if row_of.len() != shape.size() {
            return Err(Error::SizeMismatch { left: shape.size(), right: row_of.len() });
        }
        let mut counts = vec![0; shape.len()];
        for &r in &row_of {
            if r >= shape.len() {
                return Err(Error::Internal("tabloid row index out of range"));
            }
            counts[r] += 1;
        }
        if counts != shape.parts() {
            return Err(Error::Internal("tabloid row sizes differ from the shape"));
        }
        Ok(Self { row_of })
    }

    /// Row containing element `x`.
    pub fn row_of(&self, x: usize) -> usize {
        self.row_of[x]
    }

    /// `g · T`: element `x` in row `r` moves to `g(x)` in row `r`.
    pub fn act(&self, g: &[usize]) -> Self {
        let mut row_of = vec![0; self.row_of.len()];
        for (x, &r) in self.row_of.iter().enumerate() {
            row_of[g[x]] = r;
        }
        Self { row_of }
    }
}

/// All tabloids of shape `d`, ordered lexicographically by row assignment.
pub fn enumerate_tabloids(d: &Partition) -> Result<Vec<Tabloid>> {
    enumerate_tabloids_bounded(d, DEFAULT_TABLOID_BOUND)
}

pub fn enumerate_tabloids_bounded(d: &Partition, bound: usize) -> Result<Vec<Tabloid>> {
    let count = d.multinomial().to_usize().unwrap_or(usize::MAX);
    bound_check("tabloid count", count, bound)?;
    let mut out = Vec::with_capacity(count);
    let mut remaining = d.parts().to_vec();
    let mut row_of = Vec::with_capacity(d.size());
    fill_tabloids(d.size(), &mut remaining, &mut row_of, &mut out);
    Ok(out)
}

fn fill_tabloids(n: usize, remaining: &mut [usize], row_of: &mut Vec<usize>, out: &mut Vec<Tabloid>) {
    if row_of.len() == n {
        out.push(Tabloid { row_of: row_of.clone() });
        return;
    }
    for r in 0..remaining.len() {
        if remaining[r] > 0 {
            remaining[r] -= 1;
            row_of.push(r);
            fill_tabloids(n, remaining, row_of, out);
            row_of.pop();
            remaining[r] += 1;
        }
    }
}

/// Number of tabloids of shape `d` fixed by `g`: the value of the permutation
/// character of `Y_D` at `g`. A tabloid is fixed iff each of its rows is a
/// union of cycles of `g`, so this counts assignments of cycles to rows.
pub fn fixed_tabloids(d: &Partition, g: &[usize]) -> Result<BigUint> {
    if g.len() != d.size() {
        return Err(Error::SizeMismatch { left: d.size(), right: g.len() });
    }
    check_permutation(g)?;
    Ok(fixed_by_cycle_type(d, &cycle_type(g)))
}

/// Same count by acting on every tabloid explicitly.
pub fn fixed_tabloids_by_enumeration(d: &Partition, g: &[usize]) -> Result<usize> {
    if g.len() != d.size() {
        return Err(Error::SizeMismatch { left: d.size(), right: g.len() });
    }
    check_permutation(g)?;
    Ok(enumerate_tabloids(d)?.iter().filter(|t| &t.act(g) == *t).count())
}

fn fixed_by_cycle_type(d: &Partition, cycles: &Partition) -> BigUint {
    fn place(cycles: &[usize], capacity: &mut [usize]) -> BigUint {
        let Some((&len, rest)) = cycles.split_first() else {
            return BigUint::one();
        };
        let mut total = BigUint::zero();
        for r in 0..capacity.len() {
            if capacity[r] >= len {
                capacity[r] -= len;
                total += place(rest, capacity);
                capacity[r] += len;
            }
        }
        total
    }
    let mut capacity = d.parts().to_vec();
    place(cycles.parts(), &mut capacity)
}

// ---------------------------------------------------------------------------
// Class functions on S_n

/// A conjugacy class of `S_n`, labelled by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    /// `n! / z_λ`
    pub size: BigUint,
    pub sign: i32,
    pub representative: Vec<usize>,
}

/// `z_λ = Π_i i^{m_i} m_i!`
fn centralizer_order(cycle_type: &Partition) -> BigUint {
    let mut multiplicity: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in cycle_type.parts() {
        *multiplicity.entry(c).or_default() += 1;
    }
    multiplicity.iter().fold(BigUint::one(), |acc, (&i, &m)| {
        acc * BigUint::from(i).pow(m as u32) * factorial(m)
    })
}

/// Conjugacy classes of `S_n` in canonical cycle-type order.
pub fn conjugacy_classes(n: usize) -> Result<Vec<ConjugacyClass>> {
    let order = factorial(n);
    Ok(enumerate_partitions(n)?
        .into_iter()
        .map(|ct| {
            let mut representative = Vec::with_capacity(n);
            let mut start = 0;
            for &len in ct.parts() {
                for k in 0..len {
                    representative.push(start + (k + 1) % len);
                }
                start += len;
            }
            ConjugacyClass {
                size: &order / centralizer_order(&ct),
                sign: if (n - ct.len()).is_multiple_of(2) { 1 } else { -1 },
                cycle_type: ct,
                representative,
            }
        })
        .collect())
}

/// A class function on `S_n`, one value per conjugacy class in canonical order.
pub type ClassFunction = Vec<BigInt>;

/// The permutation character of `Y_D`.
pub fn permutation_character(d: &Partition, classes: &[ConjugacyClass]) -> ClassFunction {
    classes.iter().map(|c| BigInt::from(fixed_by_cycle_type(d, &c.cycle_type))).collect()
}

/// `(1/n!) Σ_g f(g) h(g)`, with the division checked to be exact.
pub fn class_inner_product(n: usize, classes: &[ConjugacyClass], f: &[BigInt], h: &[BigInt]) -> Result<BigInt> {
    let total: BigInt = classes
        .iter()
        .zip(f.iter().zip(h))
        .map(|(c, (x, y))| BigInt::from(c.size.clone()) * x * y)
        .sum();
    let (quotient, rest) = total.div_rem(&BigInt::from(factorial(n)));
    if !rest.is_zero() {
        return Err(Error::Internal("character inner product is not an integer"));
    }
    Ok(quotient)
}

/// `⟨Y_D, Y_E⟩`, or `⟨Y_E(sgn), Y_D⟩` when `signed`, from character orthogonality.
pub fn character_inner_product_young(d: &Partition, e: &Partition, signed: bool) -> Result<BigUint> {
    if d.size() != e.size() {
        return Err(Error::SizeMismatch { left: d.size(), right: e.size() });
    }
    let n = d.size();
    bound_check("symmetric group degree", n, MAX_CHARACTER_N)?;
    let classes = conjugacy_classes(n)?;
    let chi_d = permutation_character(d, &classes);
    let mut chi_e = permutation_character(e, &classes);
    if signed {
        for (value, class) in chi_e.iter_mut().zip(&classes) {
            *value *= class.sign;
        }
    }
    let value = class_inner_product(n, &classes, &chi_d, &chi_e)?;
    value.to_biguint().ok_or(Error::Internal("negative intertwining number"))
}

/// Irreducible characters of `S_n` derived from permutation characters alone.
///
/// Walking the partitions in canonical order, `χ_D` is what remains of the
/// permutation character of `Y_D` after removing every previously found
/// irreducible with its multiplicity. The removed multiplicities are the
/// Kostka numbers along this route.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<ConjugacyClass>,
    partitions: Vec<Partition>,
    characters: Vec<ClassFunction>,
    // kostka[e][d] = ⟨χ_{Y_D}, χ_E⟩
    kostka: Vec<Vec<BigUint>>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> Result<Self> {
        bound_check("symmetric group degree", n, MAX_CHARACTER_N)?;
        let classes = conjugacy_classes(n)?;
        let partitions = enumerate_partitions(n)?;
        let size = partitions.len();
        let mut characters: Vec<ClassFunction> = Vec::with_capacity(size);
        let mut kostka = vec![vec![BigUint::zero(); size]; size];
        for (j, d) in partitions.iter().enumerate() {
            let perm = permutation_character(d, &classes);
            let mut chi = perm.clone();
            for (i, prev) in characters.iter().enumerate() {
                let mult = class_inner_product(n, &classes, &perm, prev)?;
                if mult.is_negative() {
                    return Err(Error::Internal("negative multiplicity in a permutation character"));
                }
                for (x, y) in chi.iter_mut().zip(prev) {
                    *x -= &mult * y;
                }
                kostka[i][j] = mult.to_biguint().unwrap_or_default();
            }
            let norm = class_inner_product(n, &classes, &chi, &chi)?;
            if !norm.is_one() || !chi[size - 1].is_positive() {
                return Err(Error::Internal("residual character is not irreducible"));
            }
            kostka[j][j] = BigUint::one();
            characters.push(chi);
        }
        Ok(Self { n, classes, partitions, characters, kostka })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn character(&self, d: &Partition) -> Option<&ClassFunction> {
        self.partitions.iter().position(|p| p == d).map(|i| &self.characters[i])
    }

    /// Multiplicity of `σ_E` in `Y_D` along the character route.
    pub fn kostka(&self, e: &Partition, d: &Partition) -> BigUint {
        let find = |p: &Partition| self.partitions.iter().position(|q| q == p);
        match (find(e), find(d)) {
            (Some(i), Some(j)) => self.kostka[i][j].clone(),
            _ => BigUint::zero(),
        }
    }

    /// Multiplicity of every irreducible in a class function.
    pub fn decompose(&self, f: &[BigInt]) -> Result<Vec<(Partition, BigInt)>> {
        self.partitions
            .iter()
            .zip(&self.characters)
            .map(|(p, chi)| Ok((p.clone(), class_inner_product(self.n, &self.classes, f, chi)?)))
            .collect()
    }
}

/// Multiplicity of each `σ_E` in `Ind_{S_k × S_{n−k}}^{S_n}(σ_D ⊗ 1)`, by the
/// Frobenius induction formula on class functions. Zero entries are kept.
pub fn induced_character_decomposition(d: &Partition, n: usize) -> Result<BTreeMap<Partition, BigUint>> {
    let k = d.size();
    bound_check("symmetric group degree", n, MAX_INDUCTION_N)?;
    if k >= n {
        return Err(Error::BoundExceeded { what: "diagram size", value: k, bound: n.saturating_sub(1) });
    }
    let small = CharacterTable::compute(k)?;
    let chi_d = small.character(d).ok_or(Error::Internal("diagram missing from character table"))?;
    let small_index: BTreeMap<&Partition, usize> =
        small.classes().iter().enumerate().map(|(i, c)| (&c.cycle_type, i)).collect();

    let big = CharacterTable::compute(n)?;
    let induced: ClassFunction = big
        .classes()
        .iter()
        .map(|class| {
            // Ind f(μ) = Σ over splits μ = α ∪ β with |α| = k of f(α) Π_i C(m_i(μ), m_i(α))
            let mut total = BigInt::zero();
            for (alpha, weight) in cycle_splits(&class.cycle_type, k) {
                total += BigInt::from(weight) * &chi_d[small_index[&alpha]];
            }
            total
        })
        .collect();

    let mut out = BTreeMap::new();
    for (e, mult) in big.decompose(&induced)? {
        let mult = mult.to_biguint().ok_or(Error::Internal("negative multiplicity in induced character"))?;
        out.insert(e, mult);
    }
    Ok(out)
}

/// Sub-multisets `α` of the cycle lengths of `mu` with `|α| = k`, each with
/// weight `Π_i C(m_i(μ), m_i(α))`.
fn cycle_splits(mu: &Partition, k: usize) -> Vec<(Partition, BigUint)> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &c in mu.parts() {
        match groups.last_mut() {
            Some((len, m)) if *len == c => *m += 1,
            _ => groups.push((c, 1)),
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    split_groups(&groups, 0, k, &mut chosen, BigUint::one(), &mut out);
    out
}

fn split_groups(
    groups: &[(usize, usize)],
    i: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    weight: BigUint,
    out: &mut Vec<(Partition, BigUint)>,
) {
    if i == groups.len() {
        if remaining == 0 {
            out.push((Partition::from_unsorted(chosen.clone()), weight));
        }
        return;
    }
    let (len, m) = groups[i];
    for take in 0..=m {
        if take * len > remaining {
            break;
        }
        let before = chosen.len();
        chosen.extend(core::iter::repeat_n(len, take));
        split_groups(groups, i + 1, remaining - take * len, chosen, &weight * binomial(m, take), out);
        chosen.truncate(before);
    }
}

// ---------------------------------------------------------------------------
// Tableaux

/// Number of standard Young tableaux of shape `d`, by placing the largest
/// entry in each removable corner in turn.
pub fn count_syt(d: &Partition) -> Result<BigUint> {
    bound_check("diagram size", d.size(), MAX_SYT_SIZE)?;
    let mut memo = BTreeMap::new();
    Ok(syt_rec(d.parts().to_vec(), &mut memo))
}

fn syt_rec(shape: Vec<usize>, memo: &mut BTreeMap<Vec<usize>, BigUint>) -> BigUint {
    if shape.iter().sum::<usize>() <= 1 {
        return BigUint::one();
    }
    if let Some(hit) = memo.get(&shape) {
        return hit.clone();
    }
    let mut total = BigUint::zero();
    for i in 0..shape.len() {
        let is_corner = shape[i] > 0 && shape.get(i + 1).is_none_or(|&next| next < shape[i]);
        if is_corner {
            let mut smaller = shape.clone();
            smaller[i] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            total += syt_rec(smaller, memo);
        }
    }
    memo.insert(shape, total.clone());
    total
}

/// What entries a semistandard filling may use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Content {
    /// Exactly `c_i` copies of the value `i` (1-based).
    Exact(Partition),
    /// Any values in `1..=max_entry`.
    Wildcard { max_entry: usize },
}

/// Number of semistandard tableaux of shape `e` (rows weakly increasing,
/// columns strictly increasing), filled box by box in reading order.
pub fn count_ssyt(e: &Partition, content: &Content) -> Result<BigUint> {
    let (max_entry, mut remaining) = match content {
        Content::Exact(c) => {
            if c.size() != e.size() {
                return Err(Error::SizeMismatch { left: e.size(), right: c.size() });
            }
            (c.len(), Some(c.parts().to_vec()))
        }
        Content::Wildcard { max_entry } => (*max_entry, None),
    };
    let cells: Vec<(usize, usize)> = e
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = e.parts().iter().map(|&len| vec![0; len]).collect();
    let mut count = BigUint::zero();
    fill_ssyt(&cells, 0, max_entry, &mut remaining, &mut grid, &mut count);
    Ok(count)
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    at: usize,
    max_entry: usize,
    remaining: &mut Option<Vec<usize>>,
    grid: &mut Vec<Vec<usize>>,
    count: &mut BigUint,
) {
    let Some(&(r, c)) = cells.get(at) else {
        *count += 1u32;
        return;
    };
    let left = if c > 0 { grid[r][c - 1] } else { 1 };
    let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    for value in left.max(above)..=max_entry {
        if let Some(rem) = remaining.as_mut() {
            if rem[value - 1] == 0 {
                continue;
            }
            rem[value - 1] -= 1;
        }
        grid[r][c] = value;
        fill_ssyt(cells, at + 1, max_entry, remaining, grid, count);
        if let Some(rem) = remaining.as_mut() {
            rem[value - 1] += 1;
        }
    }
}

/// `Σ_{D ⊢ l, ≤ n rows} f^D · s_D(1^n) = n^l`.
pub fn schur_weyl_dimension_check(n: usize, l: usize) -> Result<bool> {
    bound_check("general linear rank", n, 5)?;
    bound_check("tensor power", l, 8)?;
    Ok(schur_weyl_total(n, l)? == BigUint::from(n).pow(l as u32))
}

/// Left-hand side of [`schur_weyl_dimension_check`].
pub fn schur_weyl_total(n: usize, l: usize) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for d in enumerate_partitions(l)?.into_iter().filter(|d| d.len() <= n) {
        total += count_syt(&d)? * count_ssyt(&d, &Content::Wildcard { max_entry: n })?;
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// GL_n over F_2 and F_3

/// An `n × n` matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TinyFieldMatrix {
    n: usize,
    p: u32,
    entries: Vec<u32>,
    invertible: bool,
}

impl TinyFieldMatrix {
    pub fn new(n: usize, p: u32, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != n * n || entries.iter().any(|&x| x >= p) {
            return Err(Error::Internal("matrix entries do not match size or field"));
        }
        let invertible = determinant_mod(n, p, &entries) != 0;
        Ok(Self { n, p, entries, invertible })
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn is_invertible(&self) -> bool {
        self.invertible
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[i * n + j] = (0..n).map(|k| self.entry(i, k) * other.entry(k, j)).sum::<u32>() % self.p;
            }
        }
        Self { n, p: self.p, entries, invertible: self.invertible && other.invertible }
    }

    /// Base-`p` code of the entries, used as a dense index.
    fn code(&self) -> usize {
        self.entries.iter().fold(0, |acc, &x| acc * self.p as usize + x as usize)
    }
}

fn determinant_mod(n: usize, p: u32, entries: &[u32]) -> u32 {
    // Gaussian elimination over F_p
    let mut m: Vec<Vec<u32>> = entries.chunks(n.max(1)).map(<[u32]>::to_vec).collect();
    if n == 0 {
        return 1;
    }
    let inverse = |a: u32| (1..p).find(|&b| a * b % p == 1).unwrap_or(0);
    let mut det = 1u32;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = (p - det) % p;
        }
        det = det * m[col][col] % p;
        let inv = inverse(m[col][col]);
        for r in col + 1..n {
            let factor = m[r][col] * inv % p;
            let pivot_row = m[col].clone();
            for (x, &y) in m[r].iter_mut().zip(&pivot_row).skip(col) {
                *x = (*x + p * p - factor * y % p) % p;
            }
        }
    }
    det
}

/// `Π_{i<n} (p^n − p^i)` computed numerically, to check bounds before enumerating.
fn gl_order_numeric(n: usize, p: u32) -> u64 {
    let pn = (p as u64).saturating_pow(n as u32);
    (0..n as u32).fold(1u64, |acc, i| acc.saturating_mul(pn - (p as u64).pow(i)))
}

fn check_tiny(n: usize, p: u32) -> Result<()> {
    if p != 2 && p != 3 {
        return Err(Error::BoundExceeded { what: "field size", value: p as usize, bound: 3 });
    }
    let order = gl_order_numeric(n, p);
    if order > MAX_TINY_GROUP_ORDER {
        return Err(Error::BoundExceeded {
            what: "group order",
            value: order.min(usize::MAX as u64) as usize,
            bound: MAX_TINY_GROUP_ORDER as usize,
        });
    }
    Ok(())
}

/// Every element of `GL_n(F_p)`, in row-major residue order.
pub fn gl_elements(n: usize, p: u32) -> Result<Vec<TinyFieldMatrix>> {
    check_tiny(n, p)?;
    let total = (p as usize).pow((n * n) as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut entries = vec![0; n * n];
        let mut rest = code;
        for slot in entries.iter_mut().rev() {
            *slot = (rest % p as usize) as u32;
            rest /= p as usize;
        }
        let m = TinyFieldMatrix::new(n, p, entries)?;
        if m.is_invertible() {
            out.push(m);
        }
    }
    Ok(out)
}

/// Block index of each coordinate for the standard flag of type `d`.
fn blocks(d: &Partition) -> Vec<usize> {
    d.parts().iter().enumerate().flat_map(|(b, &len)| core::iter::repeat_n(b, len)).collect()
}

/// Elements of the standard parabolic `P_D`: block upper-triangular matrices.
pub fn parabolic_elements(d: &Partition, p: u32) -> Result<Vec<TinyFieldMatrix>> {
    let n = d.size();
    let block = blocks(d);
    Ok(gl_elements(n, p)?
        .into_iter()
        .filter(|m| (0..n).all(|i| (0..n).all(|j| block[i] <= block[j] || m.entry(i, j) == 0)))
        .collect())
}

/// Number of double cosets `P_D \ GL_n(F_p) / P_E`, by explicit orbit walks.
pub fn gl_double_cosets_tiny(n: usize, p: u32, d: &Partition, e: &Partition) -> Result<usize> {
    if d.size() != n || e.size() != n {
        return Err(Error::SizeMismatch { left: n, right: if d.size() != n { d.size() } else { e.size() } });
    }
    let group = gl_elements(n, p)?;
    let left = parabolic_elements(d, p)?;
    let right = parabolic_elements(e, p)?;
    let mut seen = BTreeSet::new();
    let mut cosets = 0;
    for g in &group {
        if seen.contains(&g.code()) {
            continue;
        }
        cosets += 1;
        for a in &left {
            let ag = a.mul(g);
            for b in &right {
                seen.insert(ag.mul(b).code());
            }
        }
    }
    if seen.len() != group.len() {
        return Err(Error::Internal("double cosets do not cover the group"));
    }
    Ok(cosets)
}

/// Number of flags `0 ⊂ V_1 ⊂ … ⊂ V_r = F_p^n` with `dim V_i = d_1 + … + d_i`,
/// counted by listing every subspace of `F_p^n` as a set of vectors.
pub fn count_flags_tiny(d: &Partition, p: u32) -> Result<usize> {
    let n = d.size();
    let vectors = (p as usize).pow(n as u32);
    bound_check("vector count", vectors, 128)?;
    let subspaces = all_subspaces(n, p);
    let dims: Vec<usize> = d
        .parts()
        .iter()
        .scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    // chains[s] maps each subspace of dimension dims[s] to the number of chains ending there
    let mut chains: Vec<(u128, usize)> = vec![(1, 1)];
    for &dim in &dims {
        let size = (p as u128).pow(dim as u32);
        let mut next = Vec::new();
        for &(space, _) in subspaces.iter().filter(|(_, s)| *s as u128 == size) {
            let count: usize = chains.iter().filter(|(prev, _)| prev & space == *prev).map(|(_, c)| c).sum();
            if count > 0 {
                next.push((space, count));
            }
        }
        chains = next;
    }
    Ok(chains.iter().map(|(_, c)| c).sum())
}

/// Number of `k`-dimensional subspaces of `F_p^n`.
pub fn count_subspaces_tiny(n: usize, k: usize, p: u32) -> Result<usize> {
    let vectors = (p as usize).pow(n as u32);
    bound_check("vector count", vectors, 128)?;
    let size = (p as usize).pow(k as u32);
    Ok(all_subspaces(n, p).iter().filter(|(_, s)| *s == size).count())
}

/// Every subspace of `F_p^n` as a bitmask over vector codes, with its cardinality.
fn all_subspaces(n: usize, p: u32) -> Vec<(u128, usize)> {
    let total = (p as usize).pow(n as u32);
    let digits = |v: usize| -> Vec<usize> {
        let mut out = vec![0; n];
        let mut rest = v;
        for slot in out.iter_mut() {
            *slot = rest % p as usize;
            rest /= p as usize;
        }
        out
    };
    let encode = |ds: &[usize]| ds.iter().rev().fold(0, |acc, &x| acc * p as usize + x);
    let combine = |a: usize, b: usize, c: usize| -> usize {
        let (da, db) = (digits(a), digits(b));
        let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + c * y) % p as usize).collect();
        encode(&sum)
    };
    let members = |mask: u128| (0..total).filter(move |&v| mask >> v & 1 == 1);

    let mut found: BTreeSet<u128> = BTreeSet::new();
    let mut frontier = vec![1u128];
    found.insert(1);
    while let Some(space) = frontier.pop() {
        for v in 0..total {
            if space >> v & 1 == 1 {
                continue;
            }
            let mut grown = 0u128;
            for s in members(space) {
                for c in 0..p as usize {
                    grown |= 1u128 << combine(s, v, c);
                }
            }
            if found.insert(grown) {
                frontier.push(grown);
            }
        }
    }
    found.into_iter().map(|mask| (mask, mask.count_ones() as usize)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn u(x: BigUint) -> u64 {
        u64::try_from(x).unwrap()
    }

    #[test]
    fn permutations_in_lex_order() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms[0], vec![0, 1, 2]);
        assert_eq!(perms[5], vec![2, 1, 0]);
        assert!(perms.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn tabloid_counts() {
        assert_eq!(enumerate_tabloids(&p(&[2, 1])).unwrap().len(), 3);
        assert_eq!(enumerate_tabloids(&Partition::row(5)).unwrap().len(), 1);
        assert_eq!(enumerate_tabloids(&Partition::column(5)).unwrap().len(), 120);
        assert!(enumerate_tabloids_bounded(&Partition::column(5), 100).is_err());
    }

    #[test]
    fn fixed_tabloid_examples() {
        let id: Vec<usize> = (0..4).collect();
        assert_eq!(u(fixed_tabloids(&p(&[2, 1, 1]), &id).unwrap()), 12);
        assert_eq!(u(fixed_tabloids(&Partition::row(4), &[1, 2, 3, 0]).unwrap()), 1);
        assert_eq!(u(fixed_tabloids(&p(&[2, 1]), &[1, 2, 0]).unwrap()), 0);
        assert_eq!(fixed_tabloids_by_enumeration(&p(&[2, 1]), &[1, 2, 0]).unwrap(), 0);
        assert!(fixed_tabloids(&p(&[2, 1]), &[0, 1]).is_err());
        assert!(fixed_tabloids(&p(&[2, 1]), &[0, 0, 1]).is_err());
    }

    #[test]
    fn classes_partition_the_group() {
        for n in 0..=6 {
            let classes = conjugacy_classes(n).unwrap();
            let total: BigUint = classes.iter().map(|c| c.size.clone()).sum();
            assert_eq!(total, factorial(n));
            let mut counted: BTreeMap<Partition, u64> = BTreeMap::new();
            for g in permutations(n) {
                *counted.entry(cycle_type(&g)).or_default() += 1;
            }
            for c in &classes {
                assert_eq!(counted[&c.cycle_type], u(c.size.clone()));
                assert_eq!(cycle_type(&c.representative), c.cycle_type);
                assert_eq!(sign(&c.representative), c.sign);
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let d = p(&[4, 1]);
        assert_eq!(u(character_inner_product_young(&d, &d, false).unwrap()), 2);
        for d in enumerate_partitions(5).unwrap() {
            assert_eq!(u(character_inner_product_young(&d, &d.transpose(), true).unwrap()), 1);
        }
        assert!(character_inner_product_young(&Partition::row(9), &Partition::row(9), false).is_err());
    }

    #[test]
    fn character_table_small() {
        let t = CharacterTable::compute(3).unwrap();
        // χ_(2,1) on classes (3), (2,1), (1,1,1) = 3-cycle, transposition, identity
        let chi: Vec<i64> = t.character(&p(&[2, 1])).unwrap().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(chi, vec![-1, 0, 2]);
        assert_eq!(u(t.kostka(&p(&[2, 1]), &Partition::column(3))), 2);
    }

    #[test]
    fn syt_examples() {
        assert_eq!(u(count_syt(&Partition::row(7)).unwrap()), 1);
        assert_eq!(u(count_syt(&p(&[2, 1])).unwrap()), 2);
        assert_eq!(u(count_syt(&Partition::empty()).unwrap()), 1);
        assert!(count_syt(&Partition::row(17)).is_err());
    }

    #[test]
    fn ssyt_examples() {
        let e = p(&[2, 1]);
        assert_eq!(u(count_ssyt(&e, &Content::Exact(Partition::column(3))).unwrap()), 2);
        assert_eq!(u(count_ssyt(&e, &Content::Wildcard { max_entry: 2 }).unwrap()), 2);
        assert!(count_ssyt(&e, &Content::Exact(p(&[2]))).is_err());
    }

    #[test]
    fn schur_weyl_examples() {
        assert_eq!(u(schur_weyl_total(2, 2).unwrap()), 4);
        assert!(schur_weyl_dimension_check(1, 7).unwrap());
        assert_eq!(u(schur_weyl_total(3, 4).unwrap()), 81);
        assert!(schur_weyl_dimension_check(6, 2).is_err());
    }

    #[test]
    fn induced_examples() {
        let m = induced_character_decomposition(&p(&[1, 1]), 4).unwrap();
        let nonzero: Vec<(Partition, u64)> =
            m.into_iter().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k, u(v))).collect();
        assert_eq!(nonzero, vec![(p(&[3, 1]), 1), (p(&[2, 1, 1]), 1)]);
        let m = induced_character_decomposition(&p(&[2]), 3).unwrap();
        let nonzero: Vec<Partition> = m.into_iter().filter(|(_, v)| !v.is_zero()).map(|(k, _)| k).collect();
        assert_eq!(nonzero, vec![p(&[3]), p(&[2, 1])]);
        assert!(induced_character_decomposition(&p(&[2]), 2).is_err());
        assert!(induced_character_decomposition(&p(&[2]), 8).is_err());
    }

    #[test]
    fn tiny_groups() {
        assert_eq!(gl_elements(2, 2).unwrap().len(), 6);
        assert_eq!(gl_elements(3, 2).unwrap().len(), 168);
        assert_eq!(gl_elements(2, 3).unwrap().len(), 48);
        assert!(gl_elements(3, 3).is_err());
        assert!(gl_elements(2, 5).is_err());
        assert_eq!(parabolic_elements(&Partition::column(3), 2).unwrap().len(), 8);
    }

    #[test]
    fn tiny_double_cosets() {
        let ones = Partition::column(3);
        assert_eq!(gl_double_cosets_tiny(3, 2, &ones, &ones).unwrap(), 6);
        assert_eq!(gl_double_cosets_tiny(3, 2, &Partition::row(3), &ones).unwrap(), 1);
        let ones = Partition::column(2);
        assert_eq!(gl_double_cosets_tiny(2, 3, &ones, &ones).unwrap(), 2);
        assert!(gl_double_cosets_tiny(3, 2, &ones, &ones).is_err());
    }

    #[test]
    fn tiny_flags() {
        assert_eq!(count_flags_tiny(&Partition::column(2), 2).unwrap(), 3);
        assert_eq!(count_flags_tiny(&Partition::column(2), 3).unwrap(), 4);
        assert_eq!(count_subspaces_tiny(4, 3, 2).unwrap(), 15);
        assert_eq!(count_flags_tiny(&p(&[3, 1]), 2).unwrap(), 15);
        assert_eq!(count_flags_tiny(&Partition::column(3), 2).unwrap(), 21);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant_mod(2, 3, &[1, 2, 2, 1]), (1 + 9 - 4) % 3);
        assert_eq!(determinant_mod(2, 2, &[1, 1, 1, 1]), 0);
    }
}
