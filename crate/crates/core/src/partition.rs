//! Integer partitions, conjugation and majorization.
//!
//! Majorization follows the Marshall–Olkin convention: both sequences are
//! zero-padded to a common length, every prefix sum of the smaller side must be
//! bounded by the matching prefix sum of the larger side, and the totals must
//! agree. Sequences with different totals are simply not comparable.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;
use core::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("part {index} is zero; partitions have positive parts")]
    ZeroPart { index: usize },
    #[error("parts are not weakly decreasing at index {index}")]
    NotDecreasing { index: usize },
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition (of zero) is valid.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for (index, w) in parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(PartitionError::NotDecreasing { index: index + 1 });
            }
        }
        if let Some(index) = parts.iter().position(|&x| x == 0) {
            return Err(PartitionError::ZeroPart { index });
        }
        Ok(Self(parts))
    }

    /// Sorts an arbitrary multiset of integers into a partition, dropping zeros.
    ///
    /// Degree sequences go through here; the dropped zeros are exactly the
    /// padding that majorization would add back.
    pub fn from_multiset<I: IntoIterator<Item = u32>>(values: I) -> Self {
        let mut parts: Vec<u32> = values.into_iter().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest part, or zero for the empty partition.
    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }

    /// The transposed Ferrers diagram: part `j` counts the parts that are
    /// at least `j + 1`.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest() as usize;
        let mut out = Vec::with_capacity(width);
        // parts are decreasing, so the count of parts >= j+1 only shrinks
        let mut rows = self.0.len();
        for j in 1..=self.largest() {
            while rows > 0 && self.0[rows - 1] < j {
                rows -= 1;
            }
            out.push(rows as u32);
        }
        Partition(out)
    }

    /// Merges two partitions into the descending sequence of all their parts.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_multiset(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn to_weak(&self) -> WeakSeq<u64> {
        WeakSeq(self.0.iter().map(|&x| u64::from(x)).collect())
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Parses comma-separated decreasing parts, e.g. `"3,3,2,1"`. The empty
/// string is the empty partition.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::default());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.into()))?;
        Partition::new(parts)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("value at index {index} is negative")]
    Negative { index: usize },
    #[error("values are not weakly decreasing at index {index}")]
    NotDecreasing { index: usize },
}

/// A weakly decreasing sequence of nonnegative values.
///
/// Exact scans use integers or rationals; only the spectral path stores floats.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeakSeq<T>(Vec<T>);

impl<T: PartialOrd + Zero> WeakSeq<T> {
    pub fn new(values: Vec<T>) -> Result<Self, SequenceError> {
        let zero = T::zero();
        // incomparable values (NaN) fail both checks
        let at_least = |a: &T, b: &T| matches!(a.partial_cmp(b), Some(Ordering::Greater | Ordering::Equal));
        for (index, v) in values.iter().enumerate() {
            if !at_least(v, &zero) {
                return Err(SequenceError::Negative { index });
            }
            if index > 0 && !at_least(&values[index - 1], v) {
                return Err(SequenceError::NotDecreasing { index });
            }
        }
        Ok(Self(values))
    }
}

impl<T> WeakSeq<T> {
    pub fn values(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }
}

/// `u ⪯ v` after zero-padding both sides to a common length.
pub fn majorized_by<T>(u: &WeakSeq<T>, v: &WeakSeq<T>) -> bool
where
    T: Clone + PartialOrd + Zero + Add<Output = T>,
{
    let len = u.len().max(v.len());
    let mut su = T::zero();
    let mut sv = T::zero();
    for i in 0..len {
        if let Some(x) = u.0.get(i) {
            su = su + x.clone();
        }
        if let Some(x) = v.0.get(i) {
            sv = sv + x.clone();
        }
        if su > sv {
            return false;
        }
    }
    su == sv
}

/// Gale–Ryser: some bipartite graph has one side's degrees `a` and the
/// other side's degrees `b` iff `a ⪯ b*`.
pub fn is_bigraphic(a: &Partition, b: &Partition) -> bool {
    majorized_by(&a.to_weak(), &b.conjugate().to_weak())
}

/// Partitions of `total` into exactly `exact_parts` parts, each at most
/// `max_part`, in lexicographically decreasing order.
pub fn enumerate_partitions(total: u32, exact_parts: usize, max_part: u32) -> Partitions {
    Partitions::new(total, exact_parts, max_part)
}

/// Every partition of `total`, grouped by number of parts.
pub fn all_partitions(total: u32) -> impl Iterator<Item = Partition> {
    (0..=total as usize)
        .filter(move |&k| (k == 0) == (total == 0))
        .flat_map(move |k| enumerate_partitions(total, k, total.max(1)))
}

#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
    total: u32,
}

impl Partitions {
    fn new(total: u32, parts: usize, max_part: u32) -> Self {
        let mut current = Vec::with_capacity(parts);
        let ok = fill_greedy(&mut current, u64::from(total), parts, max_part);
        Self { current: ok.then_some(current), total }
    }
}

/// Appends the lexicographically largest run of `slots` positive parts,
/// each at most `bound`, summing to `remaining`. Returns false if impossible.
fn fill_greedy(out: &mut Vec<u32>, mut remaining: u64, slots: usize, bound: u32) -> bool {
    let slots64 = slots as u64;
    if remaining < slots64 || remaining > slots64 * u64::from(bound) {
        return false;
    }
    for left in (0..slots as u64).rev() {
        let x = u64::from(bound).min(remaining - left);
        out.push(x as u32);
        remaining -= x;
    }
    true
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let k = current.len();
        let mut succ = None;
        // rightmost decrementable position whose suffix can be refilled
        let mut prefix: u64 = current.iter().map(|&x| u64::from(x)).sum();
        for i in (0..k.saturating_sub(1)).rev() {
            prefix -= u64::from(current[i + 1]);
            let head = prefix - u64::from(current[i]);
            let part = current[i] - 1;
            if part == 0 {
                continue;
            }
            let mut cand = Vec::with_capacity(k);
            cand.extend_from_slice(&current[..i]);
            cand.push(part);
            let remaining = u64::from(self.total) - head - u64::from(part);
            if fill_greedy(&mut cand, remaining, k - i - 1, part) {
                succ = Some(cand);
                break;
            }
        }
        self.current = succ;
        Some(Partition(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn w(values: &[u64]) -> WeakSeq<u64> {
        WeakSeq::new(values.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 3, 2, 1]).conjugate(), p(&[4, 3, 2]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[2, 1, 1]).conjugate(), p(&[3, 1]));
    }

    #[test]
    fn rejects_bad_parts() {
        assert_eq!(Partition::new(vec![1, 2]), Err(PartitionError::NotDecreasing { index: 1 }));
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart { index: 1 }));
        assert!(WeakSeq::new(vec![1u64, 2]).is_err());
        assert!(WeakSeq::new(vec![1.0f64, f64::NAN]).is_err());
        assert!(WeakSeq::new(vec![0.0f64, -1.0]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let x: Partition = "3,3,2,1".parse().unwrap();
        assert_eq!(x, p(&[3, 3, 2, 1]));
        assert_eq!(alloc::format!("{x}"), "3,3,2,1");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::default());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("1,3".parse::<Partition>().is_err());
    }

    #[test]
    fn majorization_examples() {
        assert!(majorized_by(&w(&[2, 2, 2, 1, 1]), &w(&[2, 2, 2, 2])));
        assert!(majorized_by(&w(&[2, 2, 2, 2]), &w(&[5, 3])));
        assert!(majorized_by(&w(&[3, 1]), &w(&[3, 1])));
        assert!(!majorized_by(&w(&[3, 1]), &w(&[2, 2])));
        // unequal totals are incomparable
        assert!(!majorized_by(&w(&[2, 1]), &w(&[2, 2])));
        assert!(!majorized_by(&w(&[2, 2]), &w(&[2, 1])));
    }

    #[test]
    fn gale_ryser_examples() {
        assert!(is_bigraphic(&p(&[2, 2]), &p(&[2, 1, 1])));
        assert!(is_bigraphic(&p(&[3, 3, 2, 1]), &p(&[4, 3, 2])));
        assert!(!is_bigraphic(&p(&[2, 2]), &p(&[4])));
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<_> = enumerate_partitions(4, 2, 3).collect();
        assert_eq!(got, vec![p(&[3, 1]), p(&[2, 2])]);
        let got: Vec<_> = enumerate_partitions(0, 0, 1).collect();
        assert_eq!(got, vec![p(&[])]);
        let got: Vec<_> = enumerate_partitions(3, 3, 1).collect();
        assert_eq!(got, vec![p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(3, 0, 5).count(), 0);
        assert_eq!(enumerate_partitions(0, 2, 5).count(), 0);
        assert_eq!(enumerate_partitions(7, 2, 3).count(), 0);
    }

    #[test]
    fn all_partitions_counts() {
        // p(m) for m = 0..=10
        let expect = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (m, &c) in expect.iter().enumerate() {
            assert_eq!(all_partitions(m as u32).count(), c, "m = {m}");
        }
    }
}
