//! `{n, K, d1, d2}⁺` codes built from a check matrix `h1` and displacement rows `D`.
//!
//! `C1` is the code checked by `h1`. The rows of `h1` and `D` together generate
//! `C2`; its dual `C2⊥` (generated by `h2`) is the base coset, and each code
//! vector is `C2⊥ ⊕ (XOR of a subset of D rows)` with all-positive signs.
//! Amplitude errors are corrected with `h1`, phase errors with `h2`.

use serde::Serialize;

use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BitWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeParams {
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub d1: usize,
    pub d2: usize,
    pub t1: usize,
    pub t2: usize,
}

impl CodeParams {
    pub fn new(n: usize, k: usize, d1: usize, d2: usize) -> Self {
        Self { n, k, d1, d2, t1: d1.saturating_sub(1) / 2, t2: d2.saturating_sub(1) / 2 }
    }
}

#[derive(Clone, Debug)]
pub struct PlusCode {
    h1: BinMatrix,
    d_matrix: BinMatrix,
    h2: BinMatrix,
}

impl PlusCode {
    /// Builds the code from the basis-1 corrector `h1` and the displacement rows.
    ///
    /// Every displacement row must satisfy the checks of `h1`, and the rows must
    /// be independent of each other modulo the row space of `h1`.
    pub fn build_from_h1_d(h1: BinMatrix, d_matrix: BinMatrix) -> Result<Self> {
        if h1.n_cols() != d_matrix.n_cols() {
            return Err(Error::LengthMismatch { left: h1.n_cols(), right: d_matrix.n_cols() });
        }
        let rank_h1 = h1.rank();
        if rank_h1 != h1.n_rows() {
            return Err(Error::NotFullRank { rank: rank_h1, rows: h1.n_rows() });
        }
        for (i, d) in d_matrix.rows().iter().enumerate() {
            if h1.rows().iter().any(|h| h.dot_unchecked(d)) {
                return Err(Error::DisplacementFailsCheck { row: i });
            }
        }
        let stacked = h1.stack(&d_matrix)?;
        if stacked.rank() != rank_h1 + d_matrix.n_rows() {
            return Err(Error::CosetsNotDistinct);
        }
        // (h1 ; D) generates C2; its standard-form partner is the basis-2 corrector.
        let h2 = if stacked.n_rows() == stacked.n_cols() {
            BinMatrix::empty(stacked.n_cols())?
        } else {
            stacked.standard_form()?.generator_original()
        };
        // Each nonzero combination of D must leave the base coset.
        if h2.stack(&d_matrix)?.rank() != h2.n_rows() + d_matrix.n_rows() {
            return Err(Error::CosetsNotDistinct);
        }
        Ok(Self { h1, d_matrix, h2 })
    }

    /// Builds the code from the base-coset generator `gcos` (rows of `C2⊥`) and `D`.
    pub fn build_from_generator(gcos: BinMatrix, d_matrix: BinMatrix) -> Result<Self> {
        if !gcos.mul_transpose(&d_matrix)?.is_zero() {
            return Err(Error::Inconsistent("base-coset rows must be orthogonal to D".into()));
        }
        let stacked = gcos.stack(&d_matrix)?;
        if stacked.rank() != stacked.n_rows() {
            return Err(Error::CosetsNotDistinct);
        }
        // C1 is spanned by gcos and D; C2 is the dual of gcos.
        let h1 = stacked.null_space();
        Ok(Self { h1, d_matrix, h2: gcos })
    }

    /// `C⊥ ⊆ C = [n, k, d]` gives `{n, 2k - n, d}⁺`. The displacement rows are
    /// the generator rows of `c` taken in order, keeping each one that is
    /// independent of `C⊥` and the rows already kept.
    pub fn build_from_weakly_self_dual(c: &LinearCode) -> Result<Self> {
        if !c.is_weakly_self_dual() {
            return Err(Error::NotWeaklySelfDual);
        }
        let target = 2 * c.k() - c.n();
        let mut span = c.check().clone();
        let mut rank = span.rank();
        let mut chosen = BinMatrix::empty(c.n())?;
        for g in c.generator().rows() {
            if chosen.n_rows() == target {
                break;
            }
            let mut trial = span.clone();
            trial.push_row(*g)?;
            let r = trial.rank();
            if r > rank {
                span = trial;
                rank = r;
                chosen.push_row(*g)?;
            }
        }
        if chosen.n_rows() != target {
            return Err(Error::Inconsistent("could not select independent displacement rows".into()));
        }
        Self::build_from_h1_d(c.check().clone(), chosen)
    }

    pub fn n(&self) -> usize {
        self.h1.n_cols()
    }

    /// Number of encoded qubits.
    pub fn k(&self) -> usize {
        self.d_matrix.n_rows()
    }

    pub fn h1(&self) -> &BinMatrix {
        &self.h1
    }

    pub fn h2(&self) -> &BinMatrix {
        &self.h2
    }

    pub fn d_matrix(&self) -> &BinMatrix {
        &self.d_matrix
    }

    /// The code corrected in basis 1.
    pub fn c1(&self) -> LinearCode {
        LinearCode::from_check(self.h1.clone())
    }

    /// The code checked by `h2`, corrected in basis 2.
    pub fn c2(&self) -> LinearCode {
        LinearCode::from_check(self.h2.clone())
    }

    /// Both corrector distances by exhaustive codeword sweeps.
    pub fn verify_plus(&self) -> Result<CodeParams> {
        let d1 = self.c1().min_distance()?;
        let d2 = self.c2().min_distance()?;
        Ok(CodeParams::new(self.n(), self.k(), d1, d2))
    }

    /// Both distances from check-column subsets; usable when `C1` or `C2` is
    /// too large to sweep. Distances above `max_d` are an error.
    pub fn verify_plus_bounded(&self, max_d: usize) -> Result<CodeParams> {
        let exact = |c: LinearCode| {
            c.min_distance_via_checks(max_d)
                .ok_or_else(|| Error::InvalidParameter(format!("distance exceeds the bounded limit {max_d}")))
        };
        Ok(CodeParams::new(self.n(), self.k(), exact(self.c1())?, exact(self.c2())?))
    }

    /// Whether `C1` contains its dual (all check rows overlap evenly).
    pub fn is_weakly_self_dual(&self) -> bool {
        self.c1().is_weakly_self_dual()
    }

    /// Deletes the first check row; see [`PlusCode::reduce_kk1_at`].
    pub fn reduce_kk1(&self) -> Result<Self> {
        self.reduce_kk1_at(0)
    }

    /// For a weakly self-dual code, deletes check row `row` with its pivot column
    /// and rebuilds, giving `{n-1, K+1, ≥d-1}⁺`.
    pub fn reduce_kk1_at(&self, row: usize) -> Result<Self> {
        if !self.is_weakly_self_dual() {
            return Err(Error::NotWeaklySelfDual);
        }
        if self.h1.n_rows() == 0 {
            return Err(Error::InvalidParameter("no check row left to delete".into()));
        }
        let reduced = LinearCode::from_check(self.h1.delete_row_and_pivot(row)?);
        Self::build_from_weakly_self_dual(&reduced)
    }

    /// Words of code vector `b` (sorted), enumerated from `h2` and `D`.
    pub fn code_vector_support(&self, b: usize) -> Result<Vec<BitWord>> {
        if b >= 1usize << self.k() {
            return Err(Error::IndexOutOfRange { index: b, len: 1 << self.k() });
        }
        let mut shift = BitWord::zeros(self.n())?;
        for (i, d) in self.d_matrix.rows().iter().enumerate() {
            if b >> i & 1 == 1 {
                shift.xor_assign_unchecked(d);
            }
        }
        let rows = self.h2.rows();
        let mut words = Vec::with_capacity(1 << rows.len());
        for m in 0..(1usize << rows.len()) {
            let mut w = shift;
            for (i, r) in rows.iter().enumerate() {
                if m >> i & 1 == 1 {
                    w.xor_assign_unchecked(r);
                }
            }
            words.push(w);
        }
        words.sort_unstable();
        Ok(words)
    }
}

/// Largest `K` allowed for an `{n, K, 3}⁺` code: `n - 2⌈log2(n + 1)⌉`.
pub fn hamming_k_bound(n: usize) -> i64 {
    let ceil_log2 = (n + 1).next_power_of_two().trailing_zeros() as i64;
    n as i64 - 2 * ceil_log2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{make_extended_hamming, make_golay, make_hamming};

    fn m(rows: &[&str]) -> BinMatrix {
        BinMatrix::from_strs(rows).unwrap()
    }

    fn h1_10() -> BinMatrix {
        m(&["1011001000", "0101100100", "1010110010", "0110010001"])
    }

    fn d_10() -> BinMatrix {
        m(&["0001001100", "0000010011"])
    }

    #[test]
    fn ten_two_three_matches_printed_h2() {
        let code = PlusCode::build_from_h1_d(h1_10(), d_10()).unwrap();
        let printed = m(&["1111001000", "0111100100", "1010010010", "1110110001"]);
        assert!(code.h2().same_rowspan(&printed));
        assert_eq!(code.verify_plus().unwrap(), CodeParams::new(10, 2, 3, 3));
    }

    #[test]
    fn rejects_bad_displacements() {
        let bad = m(&["1000000000"]);
        assert!(matches!(
            PlusCode::build_from_h1_d(h1_10(), bad),
            Err(Error::DisplacementFailsCheck { row: 0 })
        ));
        let dup = m(&["0001001100", "0001001100"]);
        assert!(matches!(PlusCode::build_from_h1_d(h1_10(), dup), Err(Error::CosetsNotDistinct)));
        // a row of h1 itself lies in C1 but only reproduces the base coset
        let inner = m(&["1011001000"]);
        assert!(PlusCode::build_from_h1_d(h1_10(), inner).is_err());
    }

    #[test]
    fn empty_displacement_is_k0() {
        let code = PlusCode::build_from_h1_d(h1_10(), BinMatrix::empty(10).unwrap()).unwrap();
        assert_eq!(code.k(), 0);
        assert_eq!(code.code_vector_support(0).unwrap().len(), 1 << 6);
    }

    #[test]
    fn weakly_self_dual_builds() {
        let steane = PlusCode::build_from_weakly_self_dual(&make_hamming(3).unwrap()).unwrap();
        assert_eq!(steane.verify_plus().unwrap(), CodeParams::new(7, 1, 3, 3));
        assert!(steane.h2().same_rowspan(steane.h1()));

        let golay = PlusCode::build_from_weakly_self_dual(&make_golay().unwrap()).unwrap();
        assert_eq!(golay.verify_plus().unwrap(), CodeParams::new(23, 1, 7, 7));

        let e8 = PlusCode::build_from_weakly_self_dual(&make_extended_hamming(3).unwrap()).unwrap();
        assert_eq!(e8.k(), 0);

        let not = crate::codes::make_even_weight(5).unwrap();
        assert!(matches!(PlusCode::build_from_weakly_self_dual(&not), Err(Error::NotWeaklySelfDual)));
    }

    #[test]
    fn kk1_reductions() {
        let e8 = PlusCode::build_from_weakly_self_dual(&make_extended_hamming(3).unwrap()).unwrap();
        let r = e8.reduce_kk1().unwrap();
        assert_eq!(r.verify_plus().unwrap(), CodeParams::new(7, 1, 3, 3));

        let e16 = PlusCode::build_from_weakly_self_dual(&make_extended_hamming(4).unwrap()).unwrap();
        assert_eq!(e16.verify_plus().unwrap(), CodeParams::new(16, 6, 4, 4));
        let r1 = e16.reduce_kk1().unwrap();
        assert_eq!(r1.verify_plus().unwrap(), CodeParams::new(15, 7, 3, 3));
        assert!(r1.is_weakly_self_dual());
        let r2 = r1.reduce_kk1().unwrap();
        let p = r2.verify_plus().unwrap();
        assert_eq!((p.n, p.k), (14, 8));
        assert!(p.d1 >= 2 && p.d1 == p.d2);

        let plain = PlusCode::build_from_h1_d(h1_10(), d_10()).unwrap();
        assert!(matches!(plain.reduce_kk1(), Err(Error::NotWeaklySelfDual)));
    }

    #[test]
    fn generator_form_gives_same_code_vectors() {
        let a = PlusCode::build_from_h1_d(h1_10(), d_10()).unwrap();
        let b = PlusCode::build_from_generator(a.h2().clone(), a.d_matrix().clone()).unwrap();
        assert!(a.h1().same_rowspan(b.h1()));
        for v in 0..4 {
            assert_eq!(a.code_vector_support(v).unwrap(), b.code_vector_support(v).unwrap());
        }
    }

    #[test]
    fn bounded_verifier_agrees_with_sweep() {
        let a = PlusCode::build_from_h1_d(h1_10(), d_10()).unwrap();
        assert_eq!(a.verify_plus_bounded(6).unwrap(), a.verify_plus().unwrap());
        let golay = PlusCode::build_from_weakly_self_dual(&make_golay().unwrap()).unwrap();
        assert!(golay.verify_plus_bounded(5).is_err());
        let big = PlusCode::build_from_weakly_self_dual(&make_hamming(5).unwrap()).unwrap();
        assert!(matches!(big.verify_plus(), Err(Error::DimensionTooLarge { .. })));
        assert_eq!(big.verify_plus_bounded(4).unwrap(), CodeParams::new(31, 21, 3, 3));
    }

    #[test]
    fn hamming_k_bound_examples() {
        assert_eq!(hamming_k_bound(10), 2);
        assert_eq!(hamming_k_bound(15), 7);
        assert_eq!(hamming_k_bound(3), -1);
        assert_eq!(hamming_k_bound(7), 1);
    }
}
