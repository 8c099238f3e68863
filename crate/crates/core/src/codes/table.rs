use std::collections::BTreeMap;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Best-known distance ranges shipped with the crate (`n <= 32`).
pub const BUNDLED_DISTANCE_TABLE: &str = include_str!("../../data/distance_table.txt");

/// `(n, k) → (d_lower, d_upper)` for binary linear codes.
#[derive(Clone, Debug, Default)]
pub struct DistanceTable {
    entries: BTreeMap<(usize, usize), (usize, usize)>,
}

impl DistanceTable {
    pub fn bundled() -> Self {
        BUNDLED_DISTANCE_TABLE.parse().expect("bundled distance table is well formed")
    }

    pub fn get(&self, n: usize, k: usize) -> Option<(usize, usize)> {
        self.entries.get(&(n, k)).copied()
    }

    pub fn d_upper(&self, n: usize, k: usize) -> Option<usize> {
        self.get(n, k).map(|(_, hi)| hi)
    }

    pub fn max_n(&self) -> usize {
        self.entries.keys().map(|&(n, _)| n).max().unwrap_or(0)
    }

    /// Every `k in 1..=n` is present for this `n`.
    pub fn covers(&self, n: usize) -> bool {
        (1..=n).all(|k| self.entries.contains_key(&(n, k)))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), (usize, usize))> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }
}

impl FromStr for DistanceTable {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<usize> = line
                .split_whitespace()
                .map(|f| {
                    f.parse().map_err(|_| {
                        Error::Parse(format!("distance table line {}: bad number {f:?}", lineno + 1))
                    })
                })
                .collect::<Result<_>>()?;
            let [n, k, lo, hi] = fields[..] else {
                return Err(Error::Parse(format!(
                    "distance table line {}: expected `n k d_lower d_upper`",
                    lineno + 1
                )));
            };
            if k == 0 || k > n || lo == 0 || lo > hi || hi > n {
                return Err(Error::Parse(format!(
                    "distance table line {}: inconsistent entry {n} {k} {lo} {hi}",
                    lineno + 1
                )));
            }
            entries.insert((n, k), (lo, hi));
        }
        Ok(Self { entries })
    }
}

/// Lower bound on the length of a code with distance `d` whose dual has
/// distance `d_perp`: the smallest `n` for which some `k` has both
/// `d_upper(n, k) >= d` and `d_upper(n, n - k) >= d_perp`.
pub fn n_min_bound(d: usize, d_perp: usize, table: &DistanceTable) -> Result<usize> {
    if d < 2 || d_perp < 2 {
        return Err(Error::InvalidParameter("n_min_bound needs d, d_perp >= 2".into()));
    }
    for n in 2.. {
        if !table.covers(n) {
            return Err(Error::TableCoverage { n });
        }
        let hit = (1..n).any(|k| {
            table.d_upper(n, k).is_some_and(|u| u >= d)
                && table.d_upper(n, n - k).is_some_and(|u| u >= d_perp)
        });
        if hit {
            return Ok(n);
        }
    }
    unreachable!()
}
