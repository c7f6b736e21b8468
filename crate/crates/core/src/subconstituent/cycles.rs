use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Multiset of cycle lengths, written multiplicatively: `1 2^3` is one
/// fixed point and three transpositions.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleStructure {
    counts: BTreeMap<usize, usize>,
}

impl CycleStructure {
    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = BTreeMap::new();
        for len in lengths {
            assert!(len > 0, "cycles have positive length");
            *counts.entry(len).or_insert(0) += 1;
        }
        CycleStructure { counts }
    }

    /// Number of points moved or fixed, `Σ length · count`.
    pub fn degree(&self) -> usize {
        self.counts.iter().map(|(len, k)| len * k).sum()
    }

    /// `k`, the number of cycles including 1-cycles.
    pub fn cycle_count(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn count_of(&self, len: usize) -> usize {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    pub fn fixed_count(&self) -> usize {
        self.count_of(1)
    }

    /// `(length, count)` pairs, shortest first.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&l, &k)| (l, k))
    }

    /// Each cycle length, repeated by multiplicity.
    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.iter()
            .flat_map(|(len, k)| std::iter::repeat_n(len, k))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl fmt::Display for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(len, k)| {
                if k == 1 {
                    len.to_string()
                } else {
                    format!("{len}^{k}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for CycleStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleStructure({self})")
    }
}

impl FromStr for CycleStructure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(CycleStructure::default());
        }
        let bad = || Error::InvalidPermutation(format!("bad cycle structure {s:?}"));
        let mut counts = BTreeMap::new();
        for part in s.split_whitespace() {
            let (len, k) = match part.split_once('^') {
                Some((l, k)) => (l.parse::<usize>(), k.parse::<usize>()),
                None => (part.parse::<usize>(), Ok(1)),
            };
            let (len, k) = (len.map_err(|_| bad())?, k.map_err(|_| bad())?);
            if len == 0 || k == 0 {
                return Err(bad());
            }
            *counts.entry(len).or_insert(0) += k;
        }
        Ok(CycleStructure { counts })
    }
}

impl Serialize for CycleStructure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CycleStructure {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
