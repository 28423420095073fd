//! Pieri expansions and Kostka tables.
//!
//! Inducing `σ_D ⊗ 1` from `S_k × S_{n−k}` to `S_n` gives each `σ_E` with
//! `E − D` a horizontal `(n−k)`-strip exactly once. Iterating that over the
//! rows of `D` builds `Y_D`, so the multiplicity of `σ_E` in `Y_D` counts
//! chains `∅ = E_0 ⊂ E_1 ⊂ … ⊂ E_r = E` whose successive differences are
//! horizontal strips of lengths `d_1, …, d_r`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partitions::enumerate_partitions_bounded;
use crate::{Error, Partition, Result};

/// Default upper bound on `n` for [`KostkaTable::build`].
pub const DEFAULT_KOSTKA_BOUND: usize = 12;

/// Every `E` with `E ⊇ d`, `|E| = |d| + strip` and `E − d` a horizontal strip,
/// in canonical order. Built directly from interlacing:
/// `e_1 ≥ d_1 ≥ e_2 ≥ d_2 ≥ …`.
pub fn horizontal_strip_extensions(d: &Partition, strip: usize, max_rows: Option<usize>) -> Vec<Partition> {
    let rows = d.len() + 1;
    let rows = max_rows.map_or(rows, |m| rows.min(m));
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);
    extend_rows(d, 0, rows, strip, &mut current, &mut out);
    out.sort();
    out
}

fn extend_rows(
    d: &Partition,
    i: usize,
    rows: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if i == rows {
        if remaining == 0 {
            let mut parts = current.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition::from_sorted_unchecked(parts));
        }
        return;
    }
    let low = d.part(i);
    // row i may grow up to the length of row i-1 of d (unbounded for the first row)
    let high = if i == 0 { low + remaining } else { d.part(i - 1).min(low + remaining) };
    for e in low..=high {
        current.push(e);
        extend_rows(d, i + 1, rows, remaining - (e - low), current, out);
        current.pop();
    }
}

/// Constituents of `Ind_{S_k × S_{n−k}}^{S_n}(σ_D ⊗ 1)`, each with multiplicity one.
pub fn pieri_expand_sn(d: &Partition, n: usize) -> Result<Vec<Partition>> {
    if d.size() > n {
        return Err(Error::SizeMismatch { left: d.size(), right: n });
    }
    Ok(horizontal_strip_extensions(d, n - d.size(), None))
}

/// Highest weights `E` of the summands of `π^D ⊗ S^strip(C^n)` for the complex
/// general linear group, where `n = max_rows`.
pub fn pieri_expand_gl(d: &Partition, strip: usize, max_rows: usize) -> Result<Vec<Partition>> {
    if d.len() > max_rows {
        return Err(Error::TooManyRows { rows: d.len(), max_rows });
    }
    Ok(horizontal_strip_extensions(d, strip, Some(max_rows)))
}

/// Multiplicity of every `σ_E` in `Y_D`, by counting horizontal-strip chains.
/// Zero entries are omitted; iteration is in canonical order.
pub fn young_module_multiplicities(d: &Partition) -> BTreeMap<Partition, BigUint> {
    // layer s holds, for every shape reachable after s rows, its chain count;
    // shapes reached along different chains are merged, so work is shared.
    let mut layer = BTreeMap::new();
    layer.insert(Partition::empty(), BigUint::one());
    for &row in d.parts() {
        let mut next: BTreeMap<Partition, BigUint> = BTreeMap::new();
        for (shape, count) in &layer {
            for grown in horizontal_strip_extensions(shape, row, None) {
                *next.entry(grown).or_default() += count;
            }
        }
        layer = next;
    }
    layer
}

/// `K(E, D)` for all `E, D ⊢ n`: the multiplicity of `σ_E` in `Y_D`.
///
/// Rows and columns are indexed by the canonical (reverse-lexicographic)
/// enumeration, which refines dominance; in that order the matrix is upper
/// unitriangular (`K(E, D) ≠ 0` forces `E` to come no later than `D`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostkaTable {
    n: usize,
    partitions: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    // entries[e][d]
    entries: Vec<Vec<BigUint>>,
}

impl KostkaTable {
    pub fn build(n: usize) -> Result<Self> {
        Self::build_bounded(n, DEFAULT_KOSTKA_BOUND)
    }

    pub fn build_bounded(n: usize, bound: usize) -> Result<Self> {
        if n > bound {
            return Err(Error::BoundExceeded { what: "Kostka table size", value: n, bound });
        }
        let partitions = enumerate_partitions_bounded(n, bound)?;
        let index: BTreeMap<_, _> = partitions.iter().cloned().zip(0..).collect();
        let mut entries = alloc::vec![alloc::vec![BigUint::zero(); partitions.len()]; partitions.len()];
        for (col, d) in partitions.iter().enumerate() {
            for (e, mult) in young_module_multiplicities(d) {
                entries[index[&e]][col] = mult;
            }
        }
        Ok(Self { n, partitions, index, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical ordering of `𝒴_n` used for rows and columns.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `K(E, D)`; zero when either argument is not a partition of `n`.
    pub fn get(&self, e: &Partition, d: &Partition) -> BigUint {
        match (self.index_of(e), self.index_of(d)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => BigUint::zero(),
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigUint {
        &self.entries[row][col]
    }

    /// Non-zero entries `(E, D, K(E,D))`, ordered by `E` then `D`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&Partition, &Partition, &BigUint)> {
        self.entries.iter().enumerate().flat_map(move |(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, k)| !k.is_zero())
                .map(move |(j, k)| (&self.partitions[i], &self.partitions[j], k))
        })
    }

    /// Solves `Σ_E K(E,D) x_E = rhs_D` for every `D` (column equations).
    ///
    /// Used to go from the dimensions of Young/flag modules to the dimensions
    /// of the irreducibles.
    pub fn solve_columns<T: Coefficient>(&self, rhs: &[T]) -> Vec<T> {
        let size = self.partitions.len();
        assert_eq!(rhs.len(), size);
        let mut x: Vec<T> = Vec::with_capacity(size);
        for (j, r) in rhs.iter().enumerate() {
            let mut value = r.clone();
            for (i, xi) in x.iter().enumerate() {
                let k = &self.entries[i][j];
                if !k.is_zero() {
                    value.sub_scaled(k, xi);
                }
            }
            x.push(value);
        }
        x
    }

    /// Solves `Σ_D K(E,D) x_D = rhs_E` for every `E` (row equations): the
    /// coordinates in the Young basis of a vector given in the irreducible
    /// basis.
    pub fn solve_rows<T: Coefficient>(&self, rhs: &[T]) -> Vec<T> {
        let size = self.partitions.len();
        assert_eq!(rhs.len(), size);
        let mut x: Vec<T> = alloc::vec![T::zero(); size];
        for i in (0..size).rev() {
            let mut value = rhs[i].clone();
            for (j, xj) in x.iter().enumerate().skip(i + 1) {
                let k = &self.entries[i][j];
                if !k.is_zero() {
                    value.sub_scaled(k, xj);
                }
            }
            x[i] = value;
        }
        x
    }
}

/// Values the unitriangular solvers can work over: integers and
/// integer-coefficient polynomials.
pub trait Coefficient: Clone {
    fn zero() -> Self;
    /// `self -= k * other`
    fn sub_scaled(&mut self, k: &BigUint, other: &Self);
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }

    fn sub_scaled(&mut self, k: &BigUint, other: &Self) {
        *self -= BigInt::from(k.clone()) * other;
    }
}

impl Coefficient for crate::QPoly {
    fn zero() -> Self {
        crate::QPoly::zero()
    }

    fn sub_scaled(&mut self, k: &BigUint, other: &Self) {
        *self -= &other.scaled(&BigInt::from(k.clone()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn one_one_extended_to_four() {
        assert_eq!(pieri_expand_sn(&p(&[1, 1]), 4).unwrap(), vec![p(&[3, 1]), p(&[2, 1, 1])]);
        assert_eq!(pieri_expand_sn(&p(&[2, 1]), 3).unwrap(), vec![p(&[2, 1])]);
        assert_eq!(pieri_expand_sn(&Partition::empty(), 5).unwrap(), vec![Partition::row(5)]);
        assert!(pieri_expand_sn(&p(&[3]), 2).is_err());
    }

    #[test]
    fn gl_expansions() {
        assert_eq!(pieri_expand_gl(&p(&[1]), 1, 2).unwrap(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(pieri_expand_gl(&p(&[2, 1]), 0, 3).unwrap(), vec![p(&[2, 1])]);
        // (2,2) - (1,1) stacks two boxes in column 2, and (2,1,1) has too many rows
        assert_eq!(pieri_expand_gl(&p(&[1, 1]), 2, 2).unwrap(), vec![p(&[3, 1])]);
        assert_eq!(
            pieri_expand_gl(&p(&[1, 1, 1]), 1, 2),
            Err(Error::TooManyRows { rows: 3, max_rows: 2 })
        );
    }

    #[test]
    fn young_module_examples() {
        let m = young_module_multiplicities(&Partition::column(3));
        let got: Vec<(Partition, u32)> = m.into_iter().map(|(k, v)| (k, u32::try_from(v).unwrap())).collect();
        assert_eq!(got, vec![(p(&[3]), 1), (p(&[2, 1]), 2), (p(&[1, 1, 1]), 1)]);
        let m = young_module_multiplicities(&Partition::row(6));
        assert_eq!(m.len(), 1);
        assert_eq!(m[&Partition::row(6)], BigUint::one());
        assert_eq!(young_module_multiplicities(&Partition::empty()).len(), 1);
    }

    #[test]
    fn kostka_n2() {
        let t = KostkaTable::build(2).unwrap();
        let (two, ones) = (p(&[2]), p(&[1, 1]));
        assert_eq!(t.get(&two, &two), BigUint::one());
        assert_eq!(t.get(&two, &ones), BigUint::one());
        assert_eq!(t.get(&ones, &ones), BigUint::one());
        assert_eq!(t.get(&ones, &two), BigUint::zero());
        assert!(matches!(KostkaTable::build(13), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn solvers_invert_each_other() {
        let t = KostkaTable::build(5).unwrap();
        let size = t.partitions().len();
        let x: Vec<BigInt> = (0..size as i64).map(|i| BigInt::from(i * i - 3)).collect();
        // rhs_E = Σ_D K(E,D) x_D
        let rows: Vec<BigInt> = (0..size)
            .map(|i| (0..size).map(|j| BigInt::from(t.entry(i, j).clone()) * &x[j]).sum())
            .collect();
        assert_eq!(t.solve_rows(&rows), x);
        let cols: Vec<BigInt> = (0..size)
            .map(|j| (0..size).map(|i| BigInt::from(t.entry(i, j).clone()) * &x[i]).sum())
            .collect();
        assert_eq!(t.solve_columns(&cols), x);
    }
}
