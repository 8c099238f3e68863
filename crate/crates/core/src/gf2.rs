//! Bit-packed GF(2) words and matrices.
//!
//! A [`BitWord`] holds up to 128 bits. Position 1 is the leftmost character of
//! the printed form and lives in bit 0 of the backing `u128`, so matrices can
//! be written down exactly as they are printed in coding-theory tables.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Maximum word length supported by [`BitWord`].
pub const MAX_BITS: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    bits: u128,
    len: u8,
}

impl BitWord {
    pub fn zeros(len: usize) -> Result<Self> {
        if len > MAX_BITS {
            return Err(Error::WordTooLong(len));
        }
        Ok(Self { bits: 0, len: len as u8 })
    }

    pub fn ones(len: usize) -> Result<Self> {
        let mut w = Self::zeros(len)?;
        w.bits = low_mask(len);
        Ok(w)
    }

    /// Builds a word from raw bits; bit `i` of `bits` is position `i + 1`.
    pub fn from_bits(bits: u128, len: usize) -> Result<Self> {
        let mut w = Self::zeros(len)?;
        w.bits = bits & low_mask(len);
        Ok(w)
    }

    /// Word of length `len` with a single 1 at zero-based position `index`.
    pub fn unit(len: usize, index: usize) -> Result<Self> {
        if index >= len {
            return Err(Error::IndexOutOfRange { index, len });
        }
        Self::from_bits(1u128 << index, len)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Bit at zero-based position `index` (0 is the leftmost printed character).
    #[inline]
    pub fn get(&self, index: usize) -> bool {
        debug_assert!(index < self.len());
        (self.bits >> index) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        debug_assert!(index < self.len());
        if value {
            self.bits |= 1u128 << index;
        } else {
            self.bits &= !(1u128 << index);
        }
    }

    #[inline]
    pub fn flip(&mut self, index: usize) {
        debug_assert!(index < self.len());
        self.bits ^= 1u128 << index;
    }

    /// Index of the leftmost 1, if any.
    #[inline]
    pub fn first_one(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }

    /// Parity of the overlap of two words.
    pub fn dot(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.dot_unchecked(other))
    }

    #[inline]
    pub(crate) fn dot_unchecked(&self, other: &Self) -> bool {
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self { bits: self.bits ^ other.bits, len: self.len })
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self { bits: self.bits & other.bits, len: self.len })
    }

    #[inline]
    pub(crate) fn xor_assign_unchecked(&mut self, other: &Self) {
        self.bits ^= other.bits;
    }

    /// Concatenates `other` to the right of `self`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let len = self.len() + other.len();
        if len > MAX_BITS {
            return Err(Error::WordTooLong(len));
        }
        let shifted = if other.len == 0 { 0 } else { other.bits << self.len() };
        Ok(Self { bits: self.bits | shifted, len: len as u8 })
    }

    /// Removes the bit at `index`, shifting later positions left.
    pub fn remove(&self, index: usize) -> Result<Self> {
        if index >= self.len() {
            return Err(Error::IndexOutOfRange { index, len: self.len() });
        }
        let low = self.bits & low_mask(index);
        let high = (self.bits >> 1) & !low_mask(index);
        Self::from_bits(low | high, self.len() - 1)
    }

    /// Reorders positions: result position `i` takes source position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: perm.len() });
        }
        let mut out = Self::zeros(self.len())?;
        for (i, &src) in perm.iter().enumerate() {
            if self.get(src) {
                out.set(i, true);
            }
        }
        Ok(out)
    }

    /// Positions holding a 1, leftmost first.
    pub fn ones_positions(&self) -> impl Iterator<Item = usize> + '_ {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

#[inline]
pub(crate) fn low_mask(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut w = Self::zeros(s.len())?;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w.set(i, true),
                other => return Err(Error::Parse(format!("invalid bit character {other:?} in {s:?}"))),
            }
        }
        Ok(w)
    }
}

/// Dense binary matrix; row order is significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    rows: Vec<BitWord>,
    n_cols: usize,
}

impl BinMatrix {
    pub fn new(rows: Vec<BitWord>, n_cols: usize) -> Result<Self> {
        if n_cols > MAX_BITS {
            return Err(Error::WordTooLong(n_cols));
        }
        for r in &rows {
            if r.len() != n_cols {
                return Err(Error::LengthMismatch { left: n_cols, right: r.len() });
            }
        }
        Ok(Self { rows, n_cols })
    }

    /// Matrix with no rows and `n_cols` columns.
    pub fn empty(n_cols: usize) -> Result<Self> {
        Self::new(Vec::new(), n_cols)
    }

    pub fn identity(n: usize) -> Result<Self> {
        let rows = (0..n).map(|i| BitWord::unit(n, i)).collect::<Result<Vec<_>>>()?;
        Self::new(rows, n)
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Result<Self> {
        Self::new(vec![BitWord::zeros(n_cols)?; n_rows], n_cols)
    }

    /// Parses rows given as `'0'/'1'` strings; all rows must share a length.
    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let words = rows.iter().map(|r| r.as_ref().parse()).collect::<Result<Vec<BitWord>>>()?;
        let n_cols = words.first().map_or(0, BitWord::len);
        Self::new(words, n_cols)
    }

    /// Parses the matrix text format: one row per line, a blank line (or the
    /// end of input) terminates the block. Leading blank lines are skipped.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                if rows.is_empty() {
                    continue;
                }
                break;
            }
            rows.push(line);
        }
        Self::from_strs(&rows)
    }

    /// Renders the matrix text format (rows separated by newlines, trailing newline).
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitWord {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<BitWord> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    /// Column `c` as a word of length `n_rows` (row 0 at position 0).
    pub fn column(&self, c: usize) -> BitWord {
        let mut bits = 0u128;
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(c) {
                bits |= 1u128 << i;
            }
        }
        BitWord { bits, len: self.rows.len() as u8 }
    }

    pub fn transpose(&self) -> Result<Self> {
        if self.n_rows() > MAX_BITS {
            return Err(Error::WordTooLong(self.n_rows()));
        }
        let rows = (0..self.n_cols).map(|c| self.column(c)).collect();
        Self::new(rows, self.n_rows())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.n_cols != other.n_cols {
            return Err(Error::LengthMismatch { left: self.n_cols, right: other.n_cols });
        }
        let mut rows = self.rows.clone();
        rows.extend_from_slice(&other.rows);
        Self::new(rows, self.n_cols)
    }

    pub fn push_row(&mut self, row: BitWord) -> Result<()> {
        if row.len() != self.n_cols {
            return Err(Error::LengthMismatch { left: self.n_cols, right: row.len() });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn select_rows(&self, indices: &[usize]) -> Result<Self> {
        let rows = indices
            .iter()
            .map(|&i| {
                self.rows.get(i).copied().ok_or(Error::IndexOutOfRange { index: i, len: self.rows.len() })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, self.n_cols)
    }

    /// `self · otherᵀ`: entry (i, j) is the parity of row i of `self` against row j of `other`.
    pub fn mul_transpose(&self, other: &Self) -> Result<Self> {
        if self.n_cols != other.n_cols {
            return Err(Error::LengthMismatch { left: self.n_cols, right: other.n_cols });
        }
        if other.n_rows() > MAX_BITS {
            return Err(Error::WordTooLong(other.n_rows()));
        }
        let rows = self
            .rows
            .iter()
            .map(|a| {
                let mut out = BitWord::zeros(other.n_rows())?;
                for (j, b) in other.rows.iter().enumerate() {
                    if a.dot_unchecked(b) {
                        out.set(j, true);
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows, other.n_rows())
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitWord::is_zero)
    }

    /// Reduced row echelon form with leftmost-available pivots. Zero rows are
    /// dropped; the second element lists the pivot column of each kept row.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..self.n_cols {
            if top == rows.len() {
                break;
            }
            let Some(p) = (top..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(top, p);
            let pivot_row = rows[top];
            for (i, r) in rows.iter_mut().enumerate() {
                if i != top && r.get(col) {
                    r.xor_assign_unchecked(&pivot_row);
                }
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        (Self { rows, n_cols: self.n_cols }, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.n_cols {
            let Some(p) = (rank..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank];
            for r in rows.iter_mut().skip(rank + 1) {
                if r.get(col) {
                    r.xor_assign_unchecked(&pivot_row);
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.n_rows()
    }

    /// Basis of `{v : self · vᵀ = 0}`, one row per free column (ascending).
    pub fn null_space(&self) -> Self {
        let (reduced, pivots) = self.rref();
        let mut is_pivot = vec![false; self.n_cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.n_cols - pivots.len());
        for free in (0..self.n_cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitWord { bits: 1u128 << free, len: self.n_cols as u8 };
            for (r, &p) in reduced.rows.iter().zip(&pivots) {
                if r.get(free) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        Self { rows: basis, n_cols: self.n_cols }
    }

    /// Whether `word` lies in the row span.
    pub fn spans(&self, word: &BitWord) -> bool {
        if word.len() != self.n_cols {
            return false;
        }
        let (reduced, pivots) = self.rref();
        let mut w = *word;
        for (r, &p) in reduced.rows.iter().zip(&pivots) {
            if w.get(p) {
                w.xor_assign_unchecked(r);
            }
        }
        w.is_zero()
    }

    /// Row spans are equal as subspaces.
    pub fn same_rowspan(&self, other: &Self) -> bool {
        self.n_cols == other.n_cols && self.rref().0 == other.rref().0
    }

    /// Applies a column permutation: result column `i` is source column `perm[i]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        let rows = self.rows.iter().map(|r| r.permuted(perm)).collect::<Result<Vec<_>>>()?;
        Self::new(rows, self.n_cols)
    }

    /// Puts a full-rank check matrix into `(A | I)` form and derives `G = (I | Aᵀ)`.
    ///
    /// Pivot columns are chosen scanning from the right, so an input that is
    /// already `(A | I)` comes back with the identity permutation.
    pub fn standard_form(&self) -> Result<StandardForm> {
        let r = self.n_rows();
        let n = self.n_cols;
        let mut rows = self.rows.clone();
        let mut pivot_of_row = vec![usize::MAX; r];
        let mut unassigned = r;
        for col in (0..n).rev() {
            if unassigned == 0 {
                break;
            }
            let Some(p) = (0..unassigned).rev().find(|&i| rows[i].get(col)) else {
                continue;
            };
            let slot = unassigned - 1;
            rows.swap(p, slot);
            let pivot_row = rows[slot];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != slot && row.get(col) {
                    row.xor_assign_unchecked(&pivot_row);
                }
            }
            pivot_of_row[slot] = col;
            unassigned -= 1;
        }
        if unassigned > 0 {
            return Err(Error::NotFullRank { rank: r - unassigned, rows: r });
        }
        let mut is_pivot = vec![false; n];
        for &p in &pivot_of_row {
            is_pivot[p] = true;
        }
        let k = n - r;
        let mut perm: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        perm.extend_from_slice(&pivot_of_row);

        let reduced = Self::new(rows, n)?;
        let check = reduced.permute_columns(&perm)?;
        // G = (I_k | Aᵀ) where A is the leading k columns of the permuted check.
        let mut g_rows = Vec::with_capacity(k);
        for i in 0..k {
            let mut w = BitWord::unit(n, i)?;
            for (j, hrow) in check.rows.iter().enumerate() {
                if hrow.get(i) {
                    w.set(k + j, true);
                }
            }
            g_rows.push(w);
        }
        let generator = Self::new(g_rows, n)?;
        Ok(StandardForm { perm, check, generator })
    }

    /// Deletes row `row_index` together with its pivot column (the row's
    /// leftmost 1). The column is first cleared from every other row using the
    /// deleted row, so the remaining rows still span a subspace of rank one less.
    pub fn delete_row_and_pivot(&self, row_index: usize) -> Result<Self> {
        if row_index >= self.n_rows() {
            return Err(Error::IndexOutOfRange { index: row_index, len: self.n_rows() });
        }
        if !self.is_full_rank() {
            return Err(Error::NotFullRank { rank: self.rank(), rows: self.n_rows() });
        }
        let pivot_row = self.rows[row_index];
        let col = pivot_row.first_one().expect("full-rank rows are nonzero");
        let mut rows = Vec::with_capacity(self.n_rows() - 1);
        for (i, r) in self.rows.iter().enumerate() {
            if i == row_index {
                continue;
            }
            let mut r = *r;
            if r.get(col) {
                r.xor_assign_unchecked(&pivot_row);
            }
            rows.push(r.remove(col)?);
        }
        Self::new(rows, self.n_cols - 1)
    }

    /// Appends the columns of `other` to the right of `self`.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.n_rows() != other.n_rows() {
            return Err(Error::LengthMismatch { left: self.n_rows(), right: other.n_rows() });
        }
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.concat(b)).collect::<Result<Vec<_>>>()?;
        Self::new(rows, self.n_cols + other.n_cols)
    }
}

impl fmt::Display for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinMatrix {}x{} [", self.n_rows(), self.n_cols)?;
        for r in &self.rows {
            writeln!(f, "  {r}")?;
        }
        write!(f, "]")
    }
}

/// Output of [`BinMatrix::standard_form`].
#[derive(Clone, Debug)]
pub struct StandardForm {
    /// Permuted column `i` is original column `perm[i]`.
    pub perm: Vec<usize>,
    /// The check matrix reduced and permuted into `(A | I)`.
    pub check: BinMatrix,
    /// `(I | Aᵀ)` in permuted coordinates.
    pub generator: BinMatrix,
}

impl StandardForm {
    fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        inv
    }

    /// The generator mapped back to the original column order.
    pub fn generator_original(&self) -> BinMatrix {
        self.generator.permute_columns(&self.inverse_perm()).expect("permutation length matches")
    }

    /// The reduced check matrix mapped back to the original column order.
    pub fn check_original(&self) -> BinMatrix {
        self.check.permute_columns(&self.inverse_perm()).expect("permutation length matches")
    }

    pub fn is_identity_permutation(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }
}

/// Inverse of the `(A | I) ↔ (I | Aᵀ)` relation: from `G = (I_k | B)` returns `H = (Bᵀ | I)`.
pub fn check_from_standard_generator(g: &BinMatrix) -> Result<BinMatrix> {
    let k = g.n_rows();
    let n = g.n_cols();
    for (i, row) in g.rows().iter().enumerate() {
        for j in 0..k {
            if row.get(j) != (i == j) {
                return Err(Error::InvalidParameter("generator is not in (I | B) form".to_string()));
            }
        }
    }
    let r = n - k;
    let mut rows = Vec::with_capacity(r);
    for j in 0..r {
        let mut w = BitWord::unit(n, k + j)?;
        for (i, grow) in g.rows().iter().enumerate() {
            if grow.get(k + j) {
                w.set(i, true);
            }
        }
        rows.push(w);
    }
    BinMatrix::new(rows, n)
}

/// Parity of the overlap of two words.
pub fn dot(a: &BitWord, b: &BitWord) -> Result<bool> {
    a.dot(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> BinMatrix {
        BinMatrix::from_strs(rows).unwrap()
    }

    fn h1_10() -> BinMatrix {
        m(&["1011001000", "0101100100", "1010110010", "0110010001"])
    }

    /// Plain Gaussian elimination over `Vec<Vec<u8>>`, kept independent of the packed path.
    fn naive_rank(mat: &BinMatrix) -> usize {
        let mut a: Vec<Vec<u8>> =
            mat.rows().iter().map(|r| (0..r.len()).map(|i| r.get(i) as u8).collect()).collect();
        let mut rank = 0;
        for c in 0..mat.n_cols() {
            if let Some(p) = (rank..a.len()).find(|&i| a[i][c] == 1) {
                a.swap(rank, p);
                let pivot = a[rank].clone();
                for (i, row) in a.iter_mut().enumerate() {
                    if i != rank && row[c] == 1 {
                        for (x, y) in row.iter_mut().zip(&pivot) {
                            *x ^= y;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    #[test]
    fn word_text_round_trip_and_positions() {
        let w: BitWord = "10010101".parse().unwrap();
        assert_eq!(w.to_string(), "10010101");
        assert!(w.get(0));
        assert!(!w.get(1));
        assert_eq!(w.weight(), 4);
        assert!("10a".parse::<BitWord>().is_err());
        assert!(BitWord::zeros(129).is_err());
        assert_eq!(BitWord::ones(128).unwrap().weight(), 128);
    }

    #[test]
    fn dot_examples() {
        let a: BitWord = "1111".parse().unwrap();
        assert!(!dot(&a, &a).unwrap());
        let x: BitWord = "110".parse().unwrap();
        let y: BitWord = "011".parse().unwrap();
        assert!(dot(&x, &y).unwrap());
        assert!(matches!(dot(&a, &x), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn hamming_check_rows_are_mutually_even() {
        let h = m(&["1010101", "0110011", "0001111"]);
        for a in h.rows() {
            for b in h.rows() {
                assert!(!dot(a, b).unwrap());
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BinMatrix::zeros(3, 5).unwrap().rank(), 0);
        assert_eq!(BinMatrix::identity(4).unwrap().rank(), 4);
        let h = h1_10();
        assert_eq!(naive_rank(&h), 4);
        assert_eq!(h.rank(), 4);
    }

    #[test]
    fn null_space_examples() {
        let ones = BinMatrix::new(vec![BitWord::ones(6).unwrap()], 6).unwrap();
        let ns = ones.null_space();
        assert_eq!(ns.n_rows(), 5);
        assert!(ns.rows().iter().all(|r| r.weight() % 2 == 0));
        assert_eq!(ns.rank(), 5);

        assert_eq!(BinMatrix::identity(5).unwrap().null_space().n_rows(), 0);

        let h = m(&["1010101", "0110011", "0001111"]);
        let g = h.null_space();
        assert_eq!(g.rank(), 4);
        assert!(g.mul_transpose(&h).unwrap().is_zero());
    }

    #[test]
    fn standard_form_already_standard() {
        let h = h1_10();
        let sf = h.standard_form().unwrap();
        assert!(sf.is_identity_permutation());
        assert_eq!(sf.check, h);
        let g = sf.generator_original();
        assert_eq!(g.n_rows(), 6);
        assert!(g.mul_transpose(&h).unwrap().is_zero());
        // the two displacement rows are the fourth and sixth generator rows
        assert_eq!(g.row(3).to_string(), "0001001100");
        assert_eq!(g.row(5).to_string(), "0000010011");
    }

    #[test]
    fn standard_form_needs_permutation() {
        let h = m(&["1100110", "1011010", "0111001"]);
        let sf = h.standard_form().unwrap();
        let g = sf.generator_original();
        assert_eq!(g.rank(), 4);
        assert!(g.mul_transpose(&h).unwrap().is_zero());
        let back = check_from_standard_generator(&sf.generator).unwrap();
        assert!(back.same_rowspan(&h.permute_columns(&sf.perm).unwrap()));
    }

    #[test]
    fn standard_form_rejects_rank_deficient() {
        let h = m(&["1100", "1100"]);
        assert!(matches!(h.standard_form(), Err(Error::NotFullRank { .. })));
    }

    #[test]
    fn delete_row_examples() {
        let id = BinMatrix::identity(4).unwrap();
        assert_eq!(id.delete_row_and_pivot(1).unwrap(), BinMatrix::identity(3).unwrap());
        assert!(matches!(id.delete_row_and_pivot(4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn hconcat_and_remove() {
        let a = m(&["10", "01"]);
        let b = m(&["1", "0"]);
        assert_eq!(a.hconcat(&b).unwrap(), m(&["101", "010"]));
        let w: BitWord = "10110".parse().unwrap();
        assert_eq!(w.remove(2).unwrap().to_string(), "1010");
        assert_eq!(w.remove(0).unwrap().to_string(), "0110");
    }

    #[test]
    fn parse_text_stops_at_blank_line() {
        let t = "\n101\n011\n\n111\n";
        let mat = BinMatrix::parse_text(t).unwrap();
        assert_eq!(mat.n_rows(), 2);
        assert_eq!(mat.to_text(), "101\n011\n");
    }
}
