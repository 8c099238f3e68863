use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::BitWord;

/// Sparse state with unnormalized integer amplitudes, sorted by word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuantumState {
    n: usize,
    entries: Vec<(BitWord, i64)>,
}

impl QuantumState {
    /// Builds a state from `(word, amplitude)` pairs. Zero amplitudes are
    /// dropped; a repeated word is an error.
    pub fn from_entries(n: usize, mut entries: Vec<(BitWord, i64)>) -> Result<Self> {
        if let Some((w, _)) = entries.iter().find(|(w, _)| w.len() != n) {
            return Err(Error::LengthMismatch { left: n, right: w.len() });
        }
        entries.retain(|&(_, a)| a != 0);
        entries.sort_unstable_by_key(|&(w, _)| w);
        if entries.windows(2).any(|p| p[0].0 == p[1].0) {
            return Err(Error::Inconsistent("duplicate word in state".into()));
        }
        Ok(Self { n, entries })
    }

    /// Like [`QuantumState::from_entries`] but sums amplitudes of repeated words.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (BitWord, i64)>) -> Result<Self> {
        let mut entries: Vec<(BitWord, i64)> = terms.into_iter().collect();
        if let Some((w, _)) = entries.iter().find(|(w, _)| w.len() != n) {
            return Err(Error::LengthMismatch { left: n, right: w.len() });
        }
        entries.sort_unstable_by_key(|&(w, _)| w);
        let mut merged: Vec<(BitWord, i64)> = Vec::with_capacity(entries.len());
        for (w, a) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == w => last.1 += a,
                _ => merged.push((w, a)),
            }
        }
        merged.retain(|&(_, a)| a != 0);
        Ok(Self { n, entries: merged })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(BitWord, i64)] {
        &self.entries
    }

    pub fn support(&self) -> impl Iterator<Item = BitWord> + '_ {
        self.entries.iter().map(|&(w, _)| w)
    }

    pub fn amplitude(&self, word: &BitWord) -> i64 {
        self.entries.binary_search_by_key(word, |&(w, _)| w).map(|i| self.entries[i].1).unwrap_or(0)
    }

    pub fn apply(&self, op: &PauliOp) -> Result<Self> {
        if op.n() != self.n {
            return Err(Error::LengthMismatch { left: self.n, right: op.n() });
        }
        Ok(self.apply_unchecked(op))
    }

    pub(crate) fn apply_unchecked(&self, op: &PauliOp) -> Self {
        let x = op.x_mask.bits();
        let z = op.z_mask.bits();
        let len = self.n;
        let mut entries: Vec<(BitWord, i64)> = self
            .entries
            .iter()
            .map(|&(w, a)| {
                let u = w.bits();
                let sign = if (u & z).count_ones() % 2 == 1 { -a } else { a };
                (BitWord::from_bits(u ^ x, len).expect("same length"), sign)
            })
            .collect();
        if x != 0 {
            entries.sort_unstable_by_key(|&(w, _)| w);
        }
        Self { n: self.n, entries }
    }

    /// Exact inner product over the common support.
    pub fn inner(&self, other: &Self) -> Result<i64> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &Self) -> i64 {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j, mut acc) = (0, 0, 0i64);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += a[i].1 * b[j].1;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }
}

/// `apply_pauli(e, s)`: bit flips on `x_mask`, sign flips on `z_mask`.
pub fn apply_pauli(op: &PauliOp, state: &QuantumState) -> Result<QuantumState> {
    state.apply(op)
}

pub fn inner(a: &QuantumState, b: &QuantumState) -> Result<i64> {
    a.inner(b)
}

/// A Pauli error. Qubits in both masks carry `Y`, taken as `X·Z` up to phase.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOp {
    x_mask: BitWord,
    z_mask: BitWord,
}

impl PauliOp {
    pub fn new(x_mask: BitWord, z_mask: BitWord) -> Result<Self> {
        if x_mask.len() != z_mask.len() {
            return Err(Error::LengthMismatch { left: x_mask.len(), right: z_mask.len() });
        }
        Ok(Self { x_mask, z_mask })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let z = BitWord::zeros(n)?;
        Ok(Self { x_mask: z, z_mask: z })
    }

    pub fn x(n: usize, qubit: usize) -> Result<Self> {
        Ok(Self { x_mask: BitWord::unit(n, qubit)?, z_mask: BitWord::zeros(n)? })
    }

    pub fn z(n: usize, qubit: usize) -> Result<Self> {
        Ok(Self { x_mask: BitWord::zeros(n)?, z_mask: BitWord::unit(n, qubit)? })
    }

    pub fn y(n: usize, qubit: usize) -> Result<Self> {
        let u = BitWord::unit(n, qubit)?;
        Ok(Self { x_mask: u, z_mask: u })
    }

    pub fn n(&self) -> usize {
        self.x_mask.len()
    }

    pub fn x_mask(&self) -> BitWord {
        self.x_mask
    }

    pub fn z_mask(&self) -> BitWord {
        self.z_mask
    }

    pub fn weight(&self) -> usize {
        (self.x_mask.bits() | self.z_mask.bits()).count_ones() as usize
    }

    pub fn x_weight(&self) -> usize {
        self.x_mask.weight()
    }

    pub fn z_weight(&self) -> usize {
        self.z_mask.weight()
    }

    pub fn has_y(&self) -> bool {
        self.x_mask.bits() & self.z_mask.bits() != 0
    }

    fn letter(&self, i: usize) -> char {
        match (self.x_mask.get(i), self.z_mask.get(i)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (false, true) => 'Z',
            (true, true) => 'Y',
        }
    }
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        (0..self.n()).try_for_each(|i| write!(f, "{}", self.letter(i)))
    }
}

impl fmt::Debug for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliOp({self})")
    }
}

impl FromStr for PauliOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut op = Self::identity(s.chars().count())?;
        for (i, c) in s.chars().enumerate() {
            match c.to_ascii_uppercase() {
                'I' => {}
                'X' => op.x_mask.set(i, true),
                'Z' => op.z_mask.set(i, true),
                'Y' => {
                    op.x_mask.set(i, true);
                    op.z_mask.set(i, true);
                }
                other => return Err(Error::Parse(format!("invalid Pauli letter {other:?}"))),
            }
        }
        Ok(op)
    }
}
