//! Integer partitions, their orders, arithmetic, and the shape taxonomy.
//!
//! A [`Partition`] is stored canonically as a weakly decreasing sequence of
//! positive parts; the empty sequence is the unique partition of 0. Dominance
//! and lexicographic comparisons are only defined between partitions of equal
//! size, matching how the orders are used throughout the crate.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Shape classes used by the classification. Tags are not mutually exclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ShapeClass {
    Linear,
    TwoLine,
    Hook,
    FatHook,
    ProperFatHook,
    Rectangle,
    NearRectangle,
}

impl Partition {
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::Parse {
                input: format!("{parts:?}"),
                reason: "interior zero part".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                input: format!("{parts:?}"),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary nonnegative entries by sorting.
    pub fn from_unsorted(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn single_row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn single_column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn rectangle(width: u32, height: u32) -> Self {
        if width == 0 || height == 0 {
            Self::empty()
        } else {
            Partition {
                parts: vec![width; height as usize],
            }
        }
    }

    /// Accepts `"4,2,1"` and the exponent shorthand `"2^3,1"`; `"0"` is empty.
    pub fn parse(input: &str) -> Result<Self> {
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::Parse {
                input: input.into(),
                reason: "empty string".into(),
            });
        }
        if s == "0" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let (base, count) = match piece.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (piece, "1"),
            };
            let base: u32 = base.parse().map_err(|_| Error::Parse {
                input: input.into(),
                reason: format!("bad part {piece:?}"),
            })?;
            let count: u32 = count.parse().map_err(|_| Error::Parse {
                input: input.into(),
                reason: format!("bad exponent in {piece:?}"),
            })?;
            for _ in 0..count {
                parts.push(base);
            }
        }
        Partition::new(parts).map_err(|_| Error::Parse {
            input: input.into(),
            reason: "parts must be weakly decreasing and positive".into(),
        })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part in row `row` (1-based); 0 beyond the length.
    pub fn part(&self, row: usize) -> u32 {
        if row == 0 || row > self.parts.len() {
            0
        } else {
            self.parts[row - 1]
        }
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn width(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.width() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    fn check_equal_size(&self, other: &Partition) -> Result<()> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.to_string(),
                right: other.to_string(),
                left_size: self.size(),
                right_size: other.size(),
            });
        }
        Ok(())
    }

    /// Dominance order: every prefix sum of `self` at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        self.check_equal_size(other)?;
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.part(i + 1) as u64;
            b += other.part(i + 1) as u64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict dominance.
    pub fn strictly_dominates(&self, other: &Partition) -> Result<bool> {
        Ok(self != other && self.dominates(other)?)
    }

    /// Lexicographic comparison between partitions of equal size.
    pub fn lex_cmp(&self, other: &Partition) -> Result<Ordering> {
        self.check_equal_size(other)?;
        for i in 0..self.parts.len().max(other.parts.len()) {
            match self.part(i + 1).cmp(&other.part(i + 1)) {
                Ordering::Equal => continue,
                ord => return Ok(ord),
            }
        }
        Ok(Ordering::Equal)
    }

    /// Horizontal sum `λ + μ` (part-wise).
    pub fn add(&self, other: &Partition) -> Partition {
        let n = self.parts.len().max(other.parts.len());
        Partition {
            parts: (1..=n).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// Vertical union `λ ⊔ μ` (multiset union of parts).
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_unsorted(self.parts.iter().chain(other.parts.iter()).copied())
    }

    /// Part-wise difference, if it is a partition.
    pub fn checked_sub(&self, other: &Partition) -> Option<Partition> {
        if other.parts.len() > self.parts.len() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.parts.len());
        for i in 1..=self.parts.len() {
            let a = self.part(i);
            let b = other.part(i);
            if b > a {
                return None;
            }
            parts.push(a - b);
        }
        Partition::new(parts).ok()
    }

    /// 1-based rows carrying a removable node.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.parts.len())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .collect()
    }

    /// 1-based rows where a node can be added (including row `len + 1`).
    pub fn addable_rows(&self) -> Vec<usize> {
        if self.is_empty() {
            return vec![1];
        }
        let mut rows: Vec<usize> = (1..=self.parts.len())
            .filter(|&r| r == 1 || self.part(r) < self.part(r - 1))
            .collect();
        rows.push(self.parts.len() + 1);
        rows
    }

    /// Number of removable nodes, `rem(λ)`.
    pub fn rem(&self) -> usize {
        self.removable_rows().len()
    }

    /// `λ − ε_row`; errors when the node is not removable.
    pub fn remove_box(&self, row: usize) -> Result<Partition> {
        if row == 0 || row > self.parts.len() || self.part(row) <= self.part(row + 1) {
            return Err(Error::BadNode {
                partition: self.to_string(),
                row,
                action: "removable",
            });
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// `λ + ε_row`; errors when the node is not addable.
    pub fn add_box(&self, row: usize) -> Result<Partition> {
        if row == 0
            || row > self.parts.len() + 1
            || (row > 1 && self.part(row) >= self.part(row - 1))
        {
            return Err(Error::BadNode {
                partition: self.to_string(),
                row,
                action: "addable",
            });
        }
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// `λ_{>1}`: the partition with the first row removed.
    pub fn strip_first_row(&self) -> Partition {
        Partition {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Containment of Young diagrams: `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.parts.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn hook_length(&self, row: usize, col: usize) -> u32 {
        let conj = self.conjugate();
        self.part(row) - col as u32 + conj.part(col) - row as u32 + 1
    }

    pub fn is_rectangle(&self) -> bool {
        !self.is_empty() && self.parts.iter().all(|&p| p == self.parts[0])
    }

    pub fn is_linear(&self) -> bool {
        !self.is_empty() && (self.len() == 1 || self.width() == 1)
    }

    pub fn is_hook(&self) -> bool {
        !self.is_empty() && self.part(2) <= 1
    }

    pub fn is_two_line(&self) -> bool {
        self.len().min(self.width() as usize) == 2
    }

    pub fn is_fat_hook(&self) -> bool {
        !self.is_empty() && self.rem() <= 2
    }

    pub fn is_proper_fat_hook(&self) -> bool {
        self.rem() == 2 && !self.is_hook() && !self.is_two_line()
    }

    /// Obtained from a (nonempty) rectangle by adding a single row or column.
    pub fn is_near_rectangle(&self) -> bool {
        fn drop_one_part_leaves_rectangle(p: &Partition) -> bool {
            (0..p.parts.len()).any(|skip| {
                let mut rest = p.parts.iter().enumerate().filter(|&(i, _)| i != skip);
                match rest.next() {
                    None => false,
                    Some((_, first)) => rest.all(|(_, v)| v == first),
                }
            })
        }
        drop_one_part_leaves_rectangle(self) || drop_one_part_leaves_rectangle(&self.conjugate())
    }

    pub fn classify(&self) -> BTreeSet<ShapeClass> {
        let mut tags = BTreeSet::new();
        if self.is_empty() {
            return tags;
        }
        if self.is_linear() {
            tags.insert(ShapeClass::Linear);
        }
        if self.is_two_line() {
            tags.insert(ShapeClass::TwoLine);
        }
        if self.is_hook() {
            tags.insert(ShapeClass::Hook);
        }
        if self.is_fat_hook() {
            tags.insert(ShapeClass::FatHook);
        }
        if self.is_proper_fat_hook() {
            tags.insert(ShapeClass::ProperFatHook);
        }
        if self.is_rectangle() {
            tags.insert(ShapeClass::Rectangle);
        }
        if self.is_near_rectangle() {
            tags.insert(ShapeClass::NearRectangle);
        }
        tags
    }

    /// Shift-symmetric partition `ss[β]` of `2|β|`: i-th row `β_i + i`,
    /// diagonal hook lengths `2β_i`. Requires distinct parts.
    pub fn shift_symmetric(&self) -> Result<Partition> {
        if self.parts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!(
                "ss[{self}] needs pairwise distinct parts"
            )));
        }
        // Frobenius coordinates of ss[β] are (β_1, …, β_ℓ | β_1−1, …, β_ℓ−1):
        // arm β_i and leg β_i − 1 at the i-th diagonal box give hook 2β_i.
        let ell = self.parts.len();
        let mut rows: Vec<u32> = (1..=ell).map(|i| self.part(i) + i as u32).collect();
        for i in (ell + 1)..=(self.width() as usize) {
            let count = (1..=ell)
                .filter(|&j| self.part(j) + j as u32 > i as u32)
                .count() as u32;
            if count == 0 {
                break;
            }
            rows.push(count);
        }
        let result = Partition::new(rows)?;
        // Verify the defining properties instead of trusting the derivation.
        if result.size() != 2 * self.size() {
            return Err(Error::Internal(format!("ss[{self}] has wrong size")));
        }
        for i in 1..=ell {
            if result.part(i) != self.part(i) + i as u32 {
                return Err(Error::Internal(format!("ss[{self}] row {i} wrong")));
            }
            if result.hook_length(i, i) != 2 * self.part(i) {
                return Err(Error::Internal(format!("ss[{self}] hook {i} wrong")));
            }
        }
        if result.part(ell + 1) > ell as u32 {
            return Err(Error::Internal(format!("ss[{self}] exceeds diagonal")));
        }
        Ok(result)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions_in_box(n, n, n as usize)
}

/// All partitions of `n` with at most `max_len` parts, each at most
/// `max_part`, in decreasing lexicographic order.
pub fn partitions_in_box(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn rec(
        remaining: u32,
        max: u32,
        slots: usize,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        if slots == 0 || max == 0 {
            return;
        }
        let hi = remaining.min(max);
        for next in (1..=hi).rev() {
            if (next as u64) * (slots as u64) < remaining as u64 {
                break;
            }
            current.push(next);
            rec(remaining - next, next, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}
