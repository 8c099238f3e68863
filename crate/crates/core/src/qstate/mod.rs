//! Code vectors with sign allocations, Pauli errors, and the exact
//! orthogonality oracle.
//!
//! Code vector `b` of a [`SignedCode`] is the superposition of the words
//! `word_at(b, m)` for `m < w = 2^rows(gcos)`, with amplitude `-1` wherever
//! bit `m` of `sign_vector(b)` is set. Amplitudes stay unnormalized integers,
//! so orthogonality is an exact zero test.

mod bound;
mod oracle;
mod sign;
mod state;

use std::fmt::Write as _;

pub use bound::{error_count, min_n_for, quantum_hamming_bound, HammingBoundReport};
pub use oracle::{
    enumerate_errors, verify_orthogonal, Budget, Conflict, OrthogonalityReport, ORACLE_MAX_K, ORACLE_MAX_N,
};
pub use sign::SignVector;
pub use state::{apply_pauli, inner, PauliOp, QuantumState};

use crate::cssplus::PlusCode;
use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BitWord};

/// Largest number of base-coset rows a signed code may have (`w <= 2^20`).
pub const MAX_GCOS_ROWS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedCode {
    gcos: BinMatrix,
    d_matrix: BinMatrix,
    sign_gen: Vec<SignVector>,
    sign_offset: SignVector,
}

impl SignedCode {
    pub fn new(
        gcos: BinMatrix,
        d_matrix: BinMatrix,
        sign_gen: Vec<SignVector>,
        sign_offset: SignVector,
    ) -> Result<Self> {
        if gcos.n_cols() != d_matrix.n_cols() {
            return Err(Error::LengthMismatch { left: gcos.n_cols(), right: d_matrix.n_cols() });
        }
        if gcos.n_rows() > MAX_GCOS_ROWS {
            return Err(Error::InvalidParameter(format!(
                "base coset has {} rows; at most {MAX_GCOS_ROWS} supported",
                gcos.n_rows()
            )));
        }
        let stacked = gcos.stack(&d_matrix)?;
        let rank = stacked.rank();
        if rank != stacked.n_rows() {
            return Err(Error::NotFullRank { rank, rows: stacked.n_rows() });
        }
        if sign_gen.len() != d_matrix.n_rows() {
            return Err(Error::LengthMismatch { left: d_matrix.n_rows(), right: sign_gen.len() });
        }
        let w = 1usize << gcos.n_rows();
        for s in sign_gen.iter().chain(std::iter::once(&sign_offset)) {
            if s.len() != w {
                return Err(Error::LengthMismatch { left: w, right: s.len() });
            }
        }
        Ok(Self { gcos, d_matrix, sign_gen, sign_offset })
    }

    /// All-plus signs.
    pub fn unsigned(gcos: BinMatrix, d_matrix: BinMatrix) -> Result<Self> {
        let w = 1usize
            .checked_shl(gcos.n_rows() as u32)
            .filter(|_| gcos.n_rows() <= MAX_GCOS_ROWS)
            .ok_or_else(|| Error::InvalidParameter("base coset too large".into()))?;
        let zero = SignVector::zeros(w)?;
        let sign_gen = vec![zero.clone(); d_matrix.n_rows()];
        Self::new(gcos, d_matrix, sign_gen, zero)
    }

    /// A plus code: base coset generated by `h2`, all signs positive.
    pub fn from_plus(p: &PlusCode) -> Result<Self> {
        Self::unsigned(p.h2().clone(), p.d_matrix().clone())
    }

    pub fn with_signs(&self, sign_gen: Vec<SignVector>, sign_offset: SignVector) -> Result<Self> {
        Self::new(self.gcos.clone(), self.d_matrix.clone(), sign_gen, sign_offset)
    }

    pub fn n(&self) -> usize {
        self.gcos.n_cols()
    }

    /// Number of encoded qubits.
    pub fn k(&self) -> usize {
        self.d_matrix.n_rows()
    }

    /// Words per code vector.
    pub fn w(&self) -> usize {
        1 << self.gcos.n_rows()
    }

    pub fn gcos(&self) -> &BinMatrix {
        &self.gcos
    }

    pub fn d_matrix(&self) -> &BinMatrix {
        &self.d_matrix
    }

    pub fn sign_gen(&self) -> &[SignVector] {
        &self.sign_gen
    }

    pub fn sign_offset(&self) -> &SignVector {
        &self.sign_offset
    }

    fn check_b(&self, b: usize) -> Result<()> {
        if self.k() >= usize::BITS as usize || b >= 1usize << self.k() {
            return Err(Error::IndexOutOfRange { index: b, len: 1usize << self.k().min(63) });
        }
        Ok(())
    }

    pub fn displacement(&self, b: usize) -> Result<BitWord> {
        self.check_b(b)?;
        Ok(xor_selected(self.d_matrix.rows(), b, self.n()))
    }

    pub fn word_at(&self, b: usize, m: usize) -> Result<BitWord> {
        self.check_b(b)?;
        if m >= self.w() {
            return Err(Error::IndexOutOfRange { index: m, len: self.w() });
        }
        let shift = xor_selected(self.d_matrix.rows(), b, self.n());
        shift.xor(&xor_selected(self.gcos.rows(), m, self.n()))
    }

    pub fn sign_vector(&self, b: usize) -> Result<SignVector> {
        self.check_b(b)?;
        let mut s = self.sign_offset.clone();
        for (i, g) in self.sign_gen.iter().enumerate() {
            if b >> i & 1 == 1 {
                s.xor_assign(g);
            }
        }
        Ok(s)
    }

    /// Words of code vector `b` in word-index order, with their signs.
    pub fn signed_words(&self, b: usize) -> Result<Vec<(BitWord, i64)>> {
        let shift = self.displacement(b)?;
        let signs = self.sign_vector(b)?;
        let mut out = Vec::with_capacity(self.w());
        let mut word = shift;
        // Gray-code walk over the base coset, then place by index.
        let mut by_index = vec![shift; self.w()];
        for step in 1..self.w() {
            let row = step.trailing_zeros() as usize;
            word.xor_assign_unchecked(self.gcos.row(row));
            by_index[step ^ (step >> 1)] = word;
        }
        for (m, w) in by_index.into_iter().enumerate() {
            out.push((w, if signs.get(m) { -1 } else { 1 }));
        }
        Ok(out)
    }

    pub fn expand_code_vector(&self, b: usize) -> Result<QuantumState> {
        QuantumState::from_entries(self.n(), self.signed_words(b)?)
    }

    /// Text listing of every code vector: a `|v…> =` header per stanza, then
    /// the signed words four per line in word-index order.
    pub fn listing(&self) -> Result<String> {
        let mut out = String::new();
        for b in 0..(1usize << self.k()) {
            if b > 0 {
                out.push('\n');
            }
            let label: String =
                (0..self.k()).rev().map(|i| if b >> i & 1 == 1 { '1' } else { '0' }).collect();
            writeln!(out, "|v{label}> =").unwrap();
            let words = self.signed_words(b)?;
            for chunk in words.chunks(4) {
                let line: Vec<String> =
                    chunk.iter().map(|(w, a)| format!("{}|{w}>", if *a < 0 { '-' } else { '+' })).collect();
                writeln!(out, "  {}", line.join(" ")).unwrap();
            }
        }
        Ok(out)
    }
}

pub(crate) fn xor_selected(rows: &[BitWord], mask: usize, n: usize) -> BitWord {
    let mut acc = BitWord::zeros(n).expect("valid length");
    for (i, r) in rows.iter().enumerate() {
        if mask >> i & 1 == 1 {
            acc.xor_assign_unchecked(r);
        }
    }
    acc
}
