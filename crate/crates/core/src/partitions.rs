//! Young diagrams: construction, transpose, dominance order, containment and
//! horizontal strips.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Default upper bound for [`enumerate_partitions`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 40;

/// A Young diagram, stored as its weakly decreasing positive row lengths.
///
/// The empty partition is the unique partition of 0.
///
/// Partitions are ordered first by size and then reverse-lexicographically,
/// so within one size `(n)` comes first and `(1,...,1)` last. Reverse-lex
/// refines dominance, which is what makes every Kostka-type matrix indexed in
/// this order unitriangular.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from row lengths that must already be weakly
    /// decreasing. Trailing zeros are dropped; interior zeros are rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Parse(String::from("zero part before a positive part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {:?} are not weakly decreasing", parts)));
        }
        Ok(Self::from_sorted_unchecked(parts))
    }

    /// Sorts and strips zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted_unchecked(parts)
    }

    /// The one-row diagram `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted_unchecked(alloc::vec![n])
        }
    }

    /// The one-column diagram `(1,...,1)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted_unchecked(alloc::vec![1; n])
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().sum();
        Self { parts, size }
    }

    /// Parses the comma-separated text format.
    ///
    /// `lenient` accepts zero parts and parts in any order.
    pub fn parse(text: &str, lenient: bool) -> Result<Self> {
        let mut body = text.trim();
        for (open, close) in [('[', ']'), ('(', ')')] {
            if let Some(rest) = body.strip_prefix(open) {
                body = rest
                    .strip_suffix(close)
                    .ok_or_else(|| Error::Parse(format!("unbalanced bracket in {text:?}")))?
                    .trim();
                break;
            }
        }
        if body.is_empty() {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for field in body.split(',') {
            let field = field.trim();
            if field.starts_with('-') {
                return Err(Error::Parse(format!("negative part {field:?}")));
            }
            let value: usize = field
                .parse()
                .map_err(|_| Error::Parse(format!("malformed part {field:?} in {text:?}")))?;
            parts.push(value);
        }
        if lenient {
            return Ok(Self::from_unsorted(parts));
        }
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {text:?} (strict mode)")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts of {text:?} are not weakly decreasing")));
        }
        Ok(Self::from_sorted_unchecked(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Columns become rows.
    pub fn transpose(&self) -> Self {
        let width = self.part(0);
        let cols = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Self::from_sorted_unchecked(cols)
    }

    /// Whether `self` dominates `other`, i.e. `other ⪯ self`: every prefix sum of
    /// `other` is at most the corresponding prefix sum of `self`.
    pub fn dominates(&self, other: &Self) -> Result<bool> {
        check_same_size(self, other)?;
        let (mut mine, mut theirs) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            mine += self.part(i);
            theirs += other.part(i);
            if theirs > mine {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict dominance `other ⪵ self`.
    pub fn strictly_dominates(&self, other: &Self) -> Result<bool> {
        Ok(self != other && self.dominates(other)?)
    }

    /// Row-wise containment `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(d, e)| d <= e)
    }

    /// Whether `self − inner` is a horizontal strip (no two boxes in one column).
    pub fn is_horizontal_strip_over(&self, inner: &Self) -> Result<bool> {
        if !self.contains(inner) {
            return Err(Error::NotContained);
        }
        let (outer_cols, inner_cols) = (self.transpose(), inner.transpose());
        Ok((0..outer_cols.len()).all(|j| outer_cols.part(j) <= inner_cols.part(j) + 1))
    }

    /// Sum of `d_i * d_j` over pairs of rows `i < j`.
    pub fn pair_product_sum(&self) -> usize {
        let mut above = 0;
        let mut total = 0;
        for &d in &self.parts {
            total += above * d;
            above += d;
        }
        total
    }

    /// `n! / (d_1! ... d_r!)`, the number of tabloids of this shape.
    pub fn multinomial(&self) -> num_bigint::BigUint {
        let mut acc = num_bigint::BigUint::from(1u32);
        let mut placed = 0u64;
        for &d in &self.parts {
            for i in 1..=d as u64 {
                placed += 1;
                acc = acc * placed / i;
            }
        }
        acc
    }
}

fn check_same_size(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.size(), right: b.size() });
    }
    Ok(())
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size.cmp(&other.size).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, false)
    }
}

/// A skew diagram `outer − inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained);
        }
        Ok(Self { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn box_count(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_horizontal_strip(&self) -> bool {
        // containment is guaranteed by construction
        self.outer.is_horizontal_strip_over(&self.inner).unwrap_or(false)
    }
}

/// Parses with [`Partition::parse`].
pub fn parse_partition(text: &str, lenient: bool) -> Result<Partition> {
    Partition::parse(text, lenient)
}

/// `D ⪯ E`.
pub fn dominates(e: &Partition, d: &Partition) -> Result<bool> {
    e.dominates(d)
}

pub fn contains(e: &Partition, d: &Partition) -> bool {
    e.contains(d)
}

pub fn is_horizontal_strip(e: &Partition, d: &Partition) -> Result<bool> {
    e.is_horizontal_strip_over(d)
}

/// Decides `d ⪯ e` by generating the order directly: breadth-first search from
/// `e` over single moves of a box to a strictly lower row. Exponential; meant
/// as a reference for small sizes.
pub fn dominance_by_box_moves(e: &Partition, d: &Partition) -> Result<bool> {
    check_same_size(e, d)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(e.clone());
    queue.push_back(e.clone());
    while let Some(current) = queue.pop_front() {
        if &current == d {
            return Ok(true);
        }
        for next in single_box_moves(&current) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// All diagrams obtained by moving one box of `p` to a lower (possibly new) row.
pub fn single_box_moves(p: &Partition) -> Vec<Partition> {
    let rows = p.len();
    let mut out = Vec::new();
    for from in 0..rows {
        for to in from + 1..=rows {
            let mut parts = p.parts().to_vec();
            parts.push(0);
            parts[from] -= 1;
            parts[to] += 1;
            let valid = parts.windows(2).all(|w| w[0] >= w[1]);
            if valid {
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition::from_sorted_unchecked(parts));
            }
        }
    }
    out
}

/// All partitions of `n`, `(n)` first and `(1,...,1)` last.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    enumerate_partitions_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_partitions_bounded(n: usize, bound: usize) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::BoundExceeded { what: "partition size", value: n, bound });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill_partitions(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn fill_partitions(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted_unchecked(prefix.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        prefix.push(part);
        fill_partitions(remaining - part, part, prefix, out);
        prefix.pop();
    }
}
