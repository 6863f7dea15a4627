//! Partitions and pseudopartitions, stored as exponent maps `part -> multiplicity`.

use std::collections::BTreeMap;
use std::fmt;

use crate::lie::HalfInteger;

/// Non-decreasing sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pseudopartition {
    counts: BTreeMap<u64, u32>,
}

impl Pseudopartition {
    /// The empty pseudopartition `0̄`.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_parts(parts: impl IntoIterator<Item = u64>) -> Self {
        let mut p = Self::empty();
        for part in parts {
            p.push(part, 1);
        }
        p
    }

    pub fn push(&mut self, part: u64, times: u32) {
        if times > 0 {
            *self.counts.entry(part).or_insert(0) += times;
        }
    }

    /// Removes one copy of `part`; returns false if it was absent.
    pub fn remove_one(&mut self, part: u64) -> bool {
        match self.counts.get_mut(&part) {
            None => false,
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.counts.remove(&part);
                }
                true
            }
        }
    }

    /// `λ(k)`: how many times `k` occurs.
    pub fn multiplicity(&self, part: u64) -> u32 {
        self.counts.get(&part).copied().unwrap_or(0)
    }

    pub fn set_multiplicity(&mut self, part: u64, times: u32) {
        if times == 0 {
            self.counts.remove(&part);
        } else {
            self.counts.insert(part, times);
        }
    }

    /// `|λ̃|`
    pub fn size(&self) -> u64 {
        self.counts.iter().map(|(k, c)| k * u64::from(*c)).sum()
    }

    /// `#(λ̃)`
    pub fn count(&self) -> u64 {
        self.counts.values().map(|c| u64::from(*c)).sum()
    }

    /// `|1/2 + ν̃|`
    pub fn shifted_size(&self) -> HalfInteger {
        HalfInteger::from_doubled((2 * self.size() + self.count()) as i64)
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// True when no part is zero.
    pub fn is_partition(&self) -> bool {
        self.multiplicity(0) == 0
    }

    /// `(part, multiplicity)` pairs, parts ascending.
    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = (u64, u32)> + '_ {
        self.counts.iter().map(|(k, c)| (*k, *c))
    }

    /// Parts listed ascending with repetition.
    pub fn parts(&self) -> Vec<u64> {
        self.exponents().flat_map(|(k, c)| std::iter::repeat_n(k, c as usize)).collect()
    }

    /// The pseudopartition with all zero parts dropped.
    pub fn without_zeros(&self) -> Self {
        let mut p = self.clone();
        p.counts.remove(&0);
        p
    }
}

impl fmt::Display for Pseudopartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts().iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Non-decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Pseudopartition);

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `None` if any part is zero.
    pub fn new(p: Pseudopartition) -> Option<Self> {
        p.is_partition().then_some(Self(p))
    }

    pub fn from_parts(parts: impl IntoIterator<Item = u64>) -> Option<Self> {
        Self::new(Pseudopartition::from_parts(parts))
    }

    pub fn as_pseudo(&self) -> &Pseudopartition {
        &self.0
    }

    pub fn into_pseudo(self) -> Pseudopartition {
        self.0
    }

    pub fn push(&mut self, part: u64, times: u32) {
        assert!(part > 0, "partition parts are positive");
        self.0.push(part, times);
    }
}

impl std::ops::Deref for Partition {
    type Target = Pseudopartition;
    fn deref(&self) -> &Pseudopartition {
        &self.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All pseudopartitions (or partitions, with `min_part = 1`) whose parts lie
/// in `min_part..=max_part`, with `size + count * count_weight <= budget`.
/// The doubled-weight budget lets callers bound `|1/2+ν̃|` as well as `|λ̃|`.
pub fn enumerate(min_part: u64, max_part: u64, budget: u64, part_cost: impl Fn(u64) -> u64) -> Vec<Pseudopartition> {
    let mut out = Vec::new();
    let mut current = Pseudopartition::empty();
    fn rec(
        part: u64,
        max_part: u64,
        budget: u64,
        cost: &dyn Fn(u64) -> u64,
        current: &mut Pseudopartition,
        out: &mut Vec<Pseudopartition>,
    ) {
        if part > max_part {
            out.push(current.clone());
            return;
        }
        let c = cost(part);
        let mut times = 0u32;
        loop {
            current.set_multiplicity(part, times);
            rec(part + 1, max_part, budget - u64::from(times) * c, cost, current, out);
            if c == 0 || u64::from(times + 1) * c > budget {
                break;
            }
            times += 1;
        }
        current.set_multiplicity(part, 0);
    }
    rec(min_part, max_part, budget, &part_cost, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statistics() {
        let l = Pseudopartition::from_parts([0, 1, 1, 2]);
        assert_eq!(l.size(), 4);
        assert_eq!(l.count(), 4);
        assert_eq!(l.multiplicity(1), 2);
        let nu = Pseudopartition::from_parts([0, 2]);
        assert_eq!(nu.shifted_size(), HalfInteger::from_int(3));
        let e = Pseudopartition::empty();
        assert_eq!((e.size(), e.count(), e.shifted_size()), (0, 0, HalfInteger::ZERO));
        assert!(Partition::from_parts([0, 1]).is_none());
        assert_eq!(l.parts(), vec![0, 1, 1, 2]);
    }

    #[test]
    fn enumeration_counts_partitions() {
        // partitions with |μ| <= 4: 1 + 1 + 2 + 3 + 5
        let ps = enumerate(1, 4, 4, |k| k);
        assert_eq!(ps.len(), 12);
        assert!(ps.iter().all(|p| p.size() <= 4 && p.is_partition()));
    }
}
