//! Intertwining numbers of Young modules, counted as intersection matrices.
//!
//! The `S_n`-orbits on pairs of tabloids `(T_D, T_E)` are classified by the
//! matrix `r_ij = |row_i(T_D) ∩ row_j(T_E)|`, a non-negative integer matrix
//! with row sums `D` and column sums `E`. Counting those matrices gives
//! `⟨Y_D, Y_E⟩`, which is also the number of double cosets `S_D\S_n/S_E`.
//! Restricting to 0–1 matrices gives `⟨Y_E(sgn), Y_D⟩`, because a sign-twisted
//! invariant kernel vanishes on every orbit where two rows share two elements.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Partition, Result};

/// Default cap on `rows * cols` for [`enumerate_tables`].
pub const DEFAULT_MAX_CELLS: usize = 64;
/// Default cap on the number of tables [`enumerate_tables`] materializes.
pub const DEFAULT_MAX_TABLES: usize = 100_000;

/// A non-negative integer matrix with prescribed margins.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntersectionMatrix {
    entries: Vec<Vec<usize>>,
    row_margins: Partition,
    col_margins: Partition,
}

impl IntersectionMatrix {
    pub fn new(entries: Vec<Vec<usize>>, row_margins: Partition, col_margins: Partition) -> Result<Self> {
        if entries.len() != row_margins.len()
            || entries.iter().any(|row| row.len() != col_margins.len())
        {
            return Err(Error::Internal("intersection matrix has the wrong shape"));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.iter().sum::<usize>() != row_margins.part(i) {
                return Err(Error::Internal("row sum differs from row margin"));
            }
        }
        for j in 0..col_margins.len() {
            if entries.iter().map(|row| row[j]).sum::<usize>() != col_margins.part(j) {
                return Err(Error::Internal("column sum differs from column margin"));
            }
        }
        Ok(Self { entries, row_margins, col_margins })
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn row_margins(&self) -> &Partition {
        &self.row_margins
    }

    pub fn col_margins(&self) -> &Partition {
        &self.col_margins
    }

    pub fn is_zero_one(&self) -> bool {
        self.entries.iter().flatten().all(|&x| x <= 1)
    }
}

fn check_sizes(d: &Partition, e: &Partition) -> Result<()> {
    if d.size() != e.size() {
        return Err(Error::SizeMismatch { left: d.size(), right: e.size() });
    }
    Ok(())
}

/// Number of non-negative integer matrices with row sums `d` and column sums `e`.
pub fn count_contingency_tables(d: &Partition, e: &Partition) -> Result<BigUint> {
    check_sizes(d, e)?;
    let mut memo = BTreeMap::new();
    Ok(count_general(d.parts(), e.parts().to_vec(), &mut memo))
}

/// Same count, read as the number of double cosets `S_D\S_n/S_E` (and, via
/// the Bruhat decomposition, `P_D\GL_n/P_E`).
pub fn count_double_cosets(d: &Partition, e: &Partition) -> Result<BigUint> {
    count_contingency_tables(d, e)
}

// Memo key: rows still to place, and the remaining column capacities sorted.
// The count only depends on the multiset of capacities.
type Memo = BTreeMap<(usize, Vec<usize>), BigUint>;

fn canonical(cols: &[usize]) -> Vec<usize> {
    let mut key: Vec<usize> = cols.iter().copied().filter(|&c| c > 0).collect();
    key.sort_unstable_by(|a, b| b.cmp(a));
    key
}

fn count_general(rows: &[usize], cols: Vec<usize>, memo: &mut Memo) -> BigUint {
    // Any capacities with the right total can be filled by the remaining rows,
    // so the last row is forced.
    if rows.len() <= 1 {
        return BigUint::one();
    }
    let key = (rows.len(), canonical(&cols));
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut cols = key.1.clone();
    let suffix = suffix_sums(&cols);
    let mut total = BigUint::zero();
    distribute(rows[0], 0, &mut cols, &suffix, &mut |rest| {
        total += count_general(&rows[1..], rest.to_vec(), memo);
    });
    memo.insert(key, total.clone());
    total
}

fn suffix_sums(cols: &[usize]) -> Vec<usize> {
    let mut suffix = vec![0; cols.len() + 1];
    for j in (0..cols.len()).rev() {
        suffix[j] = suffix[j + 1] + cols[j];
    }
    suffix
}

/// Visits every way of taking `amount` units out of `cols[j..]` (at most
/// `cols[k]` from column `k`), passing the reduced capacities to `visit`.
fn distribute(
    amount: usize,
    j: usize,
    cols: &mut Vec<usize>,
    suffix: &[usize],
    visit: &mut dyn FnMut(&[usize]),
) {
    if amount == 0 {
        visit(cols);
        return;
    }
    if j == cols.len() || suffix[j] < amount {
        return;
    }
    let cap = cols[j].min(amount);
    // the rest of the columns can absorb at most suffix[j + 1]
    let low = amount.saturating_sub(suffix[j + 1]);
    for take in low..=cap {
        cols[j] -= take;
        distribute(amount - take, j + 1, cols, suffix, visit);
        cols[j] += take;
    }
}

/// Number of 0–1 matrices with row sums `d` and column sums `e`.
pub fn count_01_tables(d: &Partition, e: &Partition) -> Result<BigUint> {
    check_sizes(d, e)?;
    let mut memo = BTreeMap::new();
    Ok(count_binary(d.parts(), e.parts().to_vec(), &mut memo))
}

fn count_binary(rows: &[usize], cols: Vec<usize>, memo: &mut Memo) -> BigUint {
    if rows.is_empty() {
        return BigUint::one();
    }
    let key = (rows.len(), canonical(&cols));
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let mut cols = key.1.clone();
    let total = if binary_feasible(rows, &cols) {
        let mut total = BigUint::zero();
        choose_columns(rows[0], 0, &mut cols, &mut |rest| {
            total += count_binary(&rows[1..], rest.to_vec(), memo);
        });
        total
    } else {
        BigUint::zero()
    };
    memo.insert(key, total.clone());
    total
}

/// Gale–Ryser test: a 0–1 matrix with row sums `rows` and column sums `cols`
/// (equal totals) exists iff the sorted column sums are dominated by the
/// conjugate of the row sums.
fn binary_feasible(rows: &[usize], cols_desc: &[usize]) -> bool {
    let mut sorted_rows = rows.to_vec();
    sorted_rows.sort_unstable_by(|a, b| b.cmp(a));
    let conjugate = Partition::from_unsorted(sorted_rows).transpose();
    let (mut lhs, mut rhs) = (0, 0);
    for (i, &c) in cols_desc.iter().enumerate() {
        lhs += c;
        rhs += conjugate.part(i);
        if lhs > rhs {
            return false;
        }
    }
    true
}

fn choose_columns(amount: usize, j: usize, cols: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if amount == 0 {
        visit(cols);
        return;
    }
    let available = cols[j..].iter().filter(|&&c| c > 0).count();
    if available < amount {
        return;
    }
    if cols[j] > 0 {
        cols[j] -= 1;
        choose_columns(amount - 1, j + 1, cols, visit);
        cols[j] += 1;
    }
    choose_columns(amount, j + 1, cols, visit);
}

/// Limits for [`enumerate_tables`].
#[derive(Clone, Copy, Debug)]
pub struct TableBound {
    pub max_cells: usize,
    pub max_tables: usize,
}

impl Default for TableBound {
    fn default() -> Self {
        Self { max_cells: DEFAULT_MAX_CELLS, max_tables: DEFAULT_MAX_TABLES }
    }
}

/// Every table with margins `d` (rows) and `e` (columns), entries at most 1
/// when `zero_one`, in lexicographic order of the row-major entries.
pub fn enumerate_tables(
    d: &Partition,
    e: &Partition,
    zero_one: bool,
    bound: TableBound,
) -> Result<Vec<IntersectionMatrix>> {
    check_sizes(d, e)?;
    let cells = d.len() * e.len();
    if cells > bound.max_cells {
        return Err(Error::BoundExceeded { what: "table cells", value: cells, bound: bound.max_cells });
    }
    let mut walker = TableWalker {
        rows: d.parts(),
        zero_one,
        current: Vec::with_capacity(d.len()),
        found: Vec::new(),
        max_tables: bound.max_tables,
        overflow: false,
    };
    let mut cols = e.parts().to_vec();
    walker.row(&mut cols);
    if walker.overflow {
        return Err(Error::BoundExceeded {
            what: "table count",
            value: bound.max_tables + 1,
            bound: bound.max_tables,
        });
    }
    walker
        .found
        .into_iter()
        .map(|entries| IntersectionMatrix::new(entries, d.clone(), e.clone()))
        .collect()
}

struct TableWalker<'a> {
    rows: &'a [usize],
    zero_one: bool,
    current: Vec<Vec<usize>>,
    found: Vec<Vec<Vec<usize>>>,
    max_tables: usize,
    overflow: bool,
}

impl TableWalker<'_> {
    fn row(&mut self, cols: &mut Vec<usize>) {
        if self.overflow {
            return;
        }
        let i = self.current.len();
        if i == self.rows.len() {
            if cols.iter().all(|&c| c == 0) {
                if self.found.len() == self.max_tables {
                    self.overflow = true;
                } else {
                    self.found.push(self.current.clone());
                }
            }
            return;
        }
        let mut entries = vec![0; cols.len()];
        self.cell(0, self.rows[i], &mut entries, cols);
    }

    fn cell(&mut self, j: usize, amount: usize, entries: &mut Vec<usize>, cols: &mut Vec<usize>) {
        if j == cols.len() {
            if amount == 0 {
                self.current.push(entries.clone());
                self.row(cols);
                self.current.pop();
            }
            return;
        }
        let room: usize = cols[j..].iter().map(|&c| if self.zero_one { c.min(1) } else { c }).sum();
        if room < amount {
            return;
        }
        let mut cap = cols[j].min(amount);
        if self.zero_one {
            cap = cap.min(1);
        }
        for take in 0..=cap {
            entries[j] = take;
            cols[j] -= take;
            self.cell(j + 1, amount - take, entries, cols);
            cols[j] += take;
        }
        entries[j] = 0;
    }
}
