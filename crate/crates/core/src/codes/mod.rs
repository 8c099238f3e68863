//! Classical binary linear codes: constructions, distance, duality.

mod table;

use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BitWord, MAX_BITS};

pub use table::{n_min_bound, DistanceTable, BUNDLED_DISTANCE_TABLE};

/// Largest dimension swept by [`LinearCode::min_distance`].
pub const MAX_EXHAUSTIVE_K: usize = 24;

/// An `[n, k, d]` binary linear code held as a generator/check pair.
#[derive(Clone)]
pub struct LinearCode {
    n: usize,
    generator: BinMatrix,
    check: BinMatrix,
    min_distance: OnceLock<usize>,
}

impl LinearCode {
    /// Code spanned by the rows of `generator`. Redundant rows are reduced away.
    pub fn from_generator(generator: BinMatrix) -> Self {
        let generator = basis_of(generator);
        let check = generator.null_space();
        Self { n: generator.n_cols(), generator, check, min_distance: OnceLock::new() }
    }

    /// Code whose parity checks are the rows of `check`. Redundant rows are reduced away.
    pub fn from_check(check: BinMatrix) -> Self {
        let check = basis_of(check);
        let generator = check.null_space();
        Self { n: check.n_cols(), generator, check, min_distance: OnceLock::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.n_rows()
    }

    pub fn generator(&self) -> &BinMatrix {
        &self.generator
    }

    pub fn check(&self) -> &BinMatrix {
        &self.check
    }

    pub fn dual(&self) -> Self {
        Self {
            n: self.n,
            generator: self.check.clone(),
            check: self.generator.clone(),
            min_distance: OnceLock::new(),
        }
    }

    pub fn contains(&self, word: &BitWord) -> bool {
        word.len() == self.n && self.check.rows().iter().all(|h| !h.dot_unchecked(word))
    }

    /// Same set of codewords.
    pub fn same_code(&self, other: &Self) -> bool {
        self.generator.same_rowspan(&other.generator)
    }

    /// Exact minimum nonzero weight by Gray-code enumeration of all `2^k` codewords.
    /// The result is cached.
    pub fn min_distance(&self) -> Result<usize> {
        if let Some(&d) = self.min_distance.get() {
            return Ok(d);
        }
        let k = self.k();
        if k > MAX_EXHAUSTIVE_K {
            return Err(Error::DimensionTooLarge { k, max: MAX_EXHAUSTIVE_K });
        }
        if k == 0 {
            return Err(Error::InvalidParameter("the zero code has no nonzero codeword".into()));
        }
        let d = min_weight_of_span(self.generator.rows(), 1);
        let _ = self.min_distance.set(d);
        Ok(d)
    }

    /// Whether every nonzero codeword has weight at least `target`.
    ///
    /// Works from the check matrix: a codeword of weight `w` is a set of `w`
    /// check columns summing to zero, so only column subsets smaller than
    /// `target` are visited. Usable for any `k`.
    pub fn distance_at_least(&self, target: usize) -> bool {
        if target <= 1 || self.k() == 0 {
            return true;
        }
        let columns: Vec<u128> = (0..self.n).map(|c| self.check.column(c).bits()).collect();
        !has_zero_sum_subset(&columns, target - 1)
    }

    /// Exact minimum distance from check-column subsets, for codes too large
    /// to sweep. `None` when the distance exceeds `max`.
    pub fn min_distance_via_checks(&self, max: usize) -> Option<usize> {
        if self.k() == 0 {
            return None;
        }
        (1..=max).find(|&d| !self.distance_at_least(d + 1))
    }

    /// `C⊥ ⊆ C`: every pair of check rows (including a row with itself) overlaps evenly.
    pub fn is_weakly_self_dual(&self) -> bool {
        let rows = self.check.rows();
        rows.iter().enumerate().all(|(i, a)| rows[i..].iter().all(|b| !a.dot_unchecked(b)))
    }

    /// Appends `ext.n` columns to the check matrix. Row `i` of `ext`'s generator is
    /// written into the new columns of check row `row_assignment[i]`; all other new
    /// entries are zero.
    pub fn combine(&self, ext: &LinearCode, row_assignment: &[usize]) -> Result<LinearCode> {
        if ext.k() != row_assignment.len() {
            return Err(Error::LengthMismatch { left: ext.k(), right: row_assignment.len() });
        }
        let checks = self.check.n_rows();
        let mut seen = vec![false; checks];
        for &r in row_assignment {
            if r >= checks {
                return Err(Error::IndexOutOfRange { index: r, len: checks });
            }
            if std::mem::replace(&mut seen[r], true) {
                return Err(Error::InvalidParameter(format!("check row {r} assigned twice")));
            }
        }
        if self.n + ext.n > MAX_BITS {
            return Err(Error::WordTooLong(self.n + ext.n));
        }
        let mut appended = BinMatrix::zeros(checks, ext.n)?.into_rows();
        for (g, &r) in ext.generator.rows().iter().zip(row_assignment) {
            appended[r] = *g;
        }
        let appended = BinMatrix::new(appended, ext.n)?;
        Ok(LinearCode::from_check(self.check.hconcat(&appended)?))
    }

    /// Removes one generator row with its pivot column: `[n, k, d] → [n-1, k-1, ≥d]`.
    pub fn shorten(&self, row: usize) -> Result<LinearCode> {
        Ok(LinearCode::from_generator(self.generator.delete_row_and_pivot(row)?))
    }

    /// Removes one check row with its pivot column: `[n, k, d] → [n-1, k, ≥d-1]`.
    pub fn puncture(&self, row: usize) -> Result<LinearCode> {
        Ok(LinearCode::from_check(self.check.delete_row_and_pivot(row)?))
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}]", self.n, self.k())
    }
}

fn basis_of(m: BinMatrix) -> BinMatrix {
    if m.is_full_rank() {
        m
    } else {
        m.rref().0
    }
}

/// Minimum weight of a nonzero combination of `rows` (assumed independent).
/// Stops early once a weight `<= floor` is seen.
pub(crate) fn min_weight_of_span(rows: &[BitWord], floor: usize) -> usize {
    let k = rows.len();
    let split = k.min(6);
    let low = k - split;
    let (low_rows, high_rows) = rows.split_at(low);
    let low_bits: Vec<u128> = low_rows.iter().map(BitWord::bits).collect();
    (0u64..(1u64 << split))
        .into_par_iter()
        .map(|chunk| {
            let mut acc = 0u128;
            for (i, r) in high_rows.iter().enumerate() {
                if chunk >> i & 1 == 1 {
                    acc ^= r.bits();
                }
            }
            let mut best = if chunk == 0 { usize::MAX } else { acc.count_ones() as usize };
            if best <= floor {
                return best;
            }
            for step in 1u64..(1u64 << low) {
                acc ^= low_bits[step.trailing_zeros() as usize];
                let w = acc.count_ones() as usize;
                if w < best {
                    best = w;
                    if best <= floor {
                        break;
                    }
                }
            }
            best
        })
        .min()
        .unwrap_or(usize::MAX)
}

/// Whether some nonempty subset of at most `max_size` columns XORs to zero.
fn has_zero_sum_subset(columns: &[u128], max_size: usize) -> bool {
    fn rec(columns: &[u128], start: usize, acc: u128, remaining: usize) -> bool {
        for i in start..columns.len() {
            let next = acc ^ columns[i];
            if next == 0 {
                return true;
            }
            if remaining > 1 && rec(columns, i + 1, next, remaining - 1) {
                return true;
            }
        }
        false
    }
    max_size > 0 && rec(columns, 0, 0, max_size)
}

fn check_param(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(what.to_string()))
    }
}

/// `[n, 1, n]` repetition code.
pub fn make_repetition(n: usize) -> Result<LinearCode> {
    check_param((2..=MAX_BITS).contains(&n), "repetition code needs 2 <= n <= 128")?;
    Ok(LinearCode::from_generator(BinMatrix::new(vec![BitWord::ones(n)?], n)?))
}

/// `[n, n-1, 2]` even-weight code.
pub fn make_even_weight(n: usize) -> Result<LinearCode> {
    check_param((2..=MAX_BITS).contains(&n), "even-weight code needs 2 <= n <= 128")?;
    Ok(LinearCode::from_check(BinMatrix::new(vec![BitWord::ones(n)?], n)?))
}

/// Check rows of the Hamming code: column `j` is the binary form of `j + 1`,
/// least significant bit in the first row.
fn hamming_check_rows(r: usize, len: usize) -> Result<Vec<BitWord>> {
    (0..r)
        .map(|i| {
            let mut w = BitWord::zeros(len)?;
            for j in 0..(1usize << r) - 1 {
                if (j + 1) >> i & 1 == 1 {
                    w.set(j, true);
                }
            }
            Ok(w)
        })
        .collect()
}

/// `[2^r - 1, 2^r - 1 - r, 3]` Hamming code.
pub fn make_hamming(r: usize) -> Result<LinearCode> {
    check_param((2..=7).contains(&r), "Hamming code needs 2 <= r <= 7")?;
    let n = (1 << r) - 1;
    Ok(LinearCode::from_check(BinMatrix::new(hamming_check_rows(r, n)?, n)?))
}

/// Hamming code shortened to length `n`: the check columns are the binary
/// forms of `1..=n`.
pub fn make_shortened_hamming(r: usize, n: usize) -> Result<LinearCode> {
    check_param((2..=7).contains(&r), "Hamming code needs 2 <= r <= 7")?;
    check_param(r < n && n < 1 << r, "shortened Hamming code needs r < n < 2^r")?;
    let rows = (0..r)
        .map(|i| {
            let mut w = BitWord::zeros(n)?;
            for j in 0..n {
                if (j + 1) >> i & 1 == 1 {
                    w.set(j, true);
                }
            }
            Ok(w)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearCode::from_check(BinMatrix::new(rows, n)?))
}

/// `[2^r, 2^r - 1 - r, 4]` extended Hamming code. The first check row is all
/// ones; the remaining rows are the Hamming checks with a zero final column.
pub fn make_extended_hamming(r: usize) -> Result<LinearCode> {
    check_param((2..=7).contains(&r), "extended Hamming code needs 2 <= r <= 7")?;
    let n = 1 << r;
    let mut rows = vec![BitWord::ones(n)?];
    rows.extend(hamming_check_rows(r, n)?);
    Ok(LinearCode::from_check(BinMatrix::new(rows, n)?))
}

/// `[2^m, m + 1, 2^(m-1)]` first-order Reed–Muller code.
pub fn make_reed_muller_1(m: usize) -> Result<LinearCode> {
    check_param((1..=7).contains(&m), "Reed-Muller code needs 1 <= m <= 7")?;
    let n = 1 << m;
    let mut rows = vec![BitWord::ones(n)?];
    for i in 0..m {
        let mut w = BitWord::zeros(n)?;
        for j in 0..n {
            if j >> i & 1 == 1 {
                w.set(j, true);
            }
        }
        rows.push(w);
    }
    Ok(LinearCode::from_generator(BinMatrix::new(rows, n)?))
}

/// Exponents of the Golay generator polynomial `1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11`.
const GOLAY_POLY: [usize; 7] = [0, 2, 4, 5, 6, 10, 11];

/// `[23, 12, 7]` binary Golay code, generated by the cyclic shifts of its
/// degree-11 generator polynomial.
pub fn make_golay() -> Result<LinearCode> {
    let n = 23;
    let rows = (0..12)
        .map(|shift| {
            let mut w = BitWord::zeros(n)?;
            for &e in &GOLAY_POLY {
                w.set(e + shift, true);
            }
            Ok(w)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearCode::from_generator(BinMatrix::new(rows, n)?))
}

/// Check matrix of the cyclic code given by a primitive polynomial.
///
/// `poly_exponents` lists the powers on the right-hand side of `x^r = Σ x^e`
/// (so `x^4 = 1 + x` is `[0, 1]`). Column `j`, counted from the rightmost
/// column as `j = 0`, is `α^j` written top-down from the `α^(r-1)` coefficient
/// to the constant term. Growing `n` adds columns at the front.
pub fn make_cyclic_check(poly_exponents: &[usize], r: usize, n: usize) -> Result<BinMatrix> {
    check_param((2..=16).contains(&r), "cyclic construction needs 2 <= r <= 16")?;
    let order = (1usize << r) - 1;
    check_param(r <= n && n <= order && n <= MAX_BITS, "cyclic construction needs r <= n <= 2^r - 1")?;
    check_param(poly_exponents.iter().all(|&e| e < r), "polynomial exponents must be below r")?;
    let reduction: u32 = poly_exponents.iter().fold(0, |acc, &e| acc ^ (1 << e));
    let times_alpha = |x: u32| {
        let y = x << 1;
        if y >> r & 1 == 1 {
            (y & !(1 << r)) ^ reduction
        } else {
            y
        }
    };
    let mut powers = Vec::with_capacity(order);
    let mut x = 1u32;
    for j in 0..order {
        if j > 0 && x == 1 {
            return Err(Error::NotPrimitive { period: j, expected: order });
        }
        powers.push(x);
        x = times_alpha(x);
    }
    if x != 1 {
        return Err(Error::NotPrimitive { period: 0, expected: order });
    }
    let mut rows = vec![BitWord::zeros(n)?; r];
    for col in 0..n {
        let value = powers[n - 1 - col];
        for (i, row) in rows.iter_mut().enumerate() {
            if value >> (r - 1 - i) & 1 == 1 {
                row.set(col, true);
            }
        }
    }
    BinMatrix::new(rows, n)
}
