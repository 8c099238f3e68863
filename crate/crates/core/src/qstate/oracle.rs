use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{PauliOp, QuantumState, SignedCode};
use crate::error::{Error, Result};
use crate::gf2::BitWord;

pub const ORACLE_MAX_N: usize = 16;
pub const ORACLE_MAX_K: usize = 8;

/// Number of conflicts kept in a report.
const KEPT_CONFLICTS: usize = 16;

/// Which errors the oracle enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Budget {
    /// All Paulis of weight at most `t`.
    Joint { t: usize },
    /// Amplitude weight at most `tx` and phase weight at most `tz`.
    Pair { tx: usize, tz: usize },
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Budget::Joint { t } => write!(f, "t={t}"),
            Budget::Pair { tx, tz } => write!(f, "tx={tx},tz={tz}"),
        }
    }
}

/// Bit masks of weight `<= t`, by weight then lexicographic position order.
fn masks_up_to(n: usize, t: usize) -> Vec<BitWord> {
    let mut out = vec![BitWord::zeros(n).expect("valid length")];
    for weight in 1..=t.min(n) {
        let mut positions: Vec<usize> = (0..weight).collect();
        loop {
            let mut w = BitWord::zeros(n).expect("valid length");
            for &p in &positions {
                w.set(p, true);
            }
            out.push(w);
            // Next combination in lexicographic order.
            let Some(i) = (0..weight).rev().find(|&i| positions[i] < n - weight + i) else {
                break;
            };
            positions[i] += 1;
            for j in i + 1..weight {
                positions[j] = positions[j - 1] + 1;
            }
        }
    }
    out
}

/// Errors within the budget, identity first, in a fixed order.
pub fn enumerate_errors(n: usize, budget: Budget) -> Result<Vec<PauliOp>> {
    let zero = BitWord::zeros(n)?;
    match budget {
        Budget::Joint { t } => {
            let mut out = Vec::new();
            for support in masks_up_to(n, t) {
                let pos: Vec<usize> = support.ones_positions().collect();
                let count = 3usize.pow(pos.len() as u32);
                for code in 0..count {
                    let (mut x, mut z) = (zero, zero);
                    let mut c = code;
                    for &p in pos.iter().rev() {
                        // X, Y, Z for digits 0, 1, 2.
                        match c % 3 {
                            0 => x.set(p, true),
                            1 => {
                                x.set(p, true);
                                z.set(p, true);
                            }
                            _ => z.set(p, true),
                        }
                        c /= 3;
                    }
                    out.push(PauliOp::new(x, z)?);
                }
            }
            Ok(out)
        }
        Budget::Pair { tx, tz } => {
            let xs = masks_up_to(n, tx);
            let zs = masks_up_to(n, tz);
            let mut out = Vec::with_capacity(xs.len() * zs.len());
            for x in &xs {
                for z in &zs {
                    out.push(PauliOp::new(*x, *z)?);
                }
            }
            Ok(out)
        }
    }
}

/// One non-orthogonal pair of errored code vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conflict {
    pub b1: usize,
    pub error1: String,
    pub b2: usize,
    pub error2: String,
    pub inner: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub pass: bool,
    pub budget: Budget,
    pub code_vectors: usize,
    pub errors: usize,
    pub states: usize,
    pub conflict_count: u64,
    pub first_conflicts: Vec<Conflict>,
}

/// Checks that every distinct `(b, e) ≠ (b', e')` gives orthogonal states.
///
/// Errored code vectors are supported on cosets of the base coset span, so
/// two states can only overlap when their supports coincide; states are
/// grouped by support and only pairs within a group are compared.
pub fn verify_orthogonal(code: &SignedCode, budget: Budget) -> Result<OrthogonalityReport> {
    if code.n() > ORACLE_MAX_N || code.k() > ORACLE_MAX_K {
        return Err(Error::ScaleCap { n: code.n(), k: code.k() });
    }
    let errors = enumerate_errors(code.n(), budget)?;
    let vectors: Vec<QuantumState> =
        (0..1usize << code.k()).map(|b| code.expand_code_vector(b)).collect::<Result<_>>()?;
    let n_err = errors.len();
    let states: Vec<QuantumState> = (0..vectors.len() * n_err)
        .into_par_iter()
        .map(|i| vectors[i / n_err].apply_unchecked(&errors[i % n_err]))
        .collect();

    let mut groups: HashMap<Vec<BitWord>, Vec<usize>> = HashMap::new();
    for (i, s) in states.iter().enumerate() {
        groups.entry(s.support().collect()).or_default().push(i);
    }
    let distinct_words: HashSet<BitWord> = groups.keys().flatten().copied().collect();
    let disjoint = distinct_words.len() == groups.keys().map(Vec::len).sum::<usize>();
    let groups: Vec<Vec<usize>> =
        if disjoint { groups.into_values().collect() } else { vec![(0..states.len()).collect()] };

    let (conflict_count, mut found) = groups
        .par_iter()
        .map(|members| {
            let mut count = 0u64;
            let mut kept = Vec::new();
            for (ai, &i) in members.iter().enumerate() {
                for &j in &members[ai + 1..] {
                    let ip = states[i].inner_unchecked(&states[j]);
                    if ip != 0 {
                        count += 1;
                        kept.push((i.min(j), i.max(j), ip));
                    }
                }
            }
            kept.sort_unstable();
            kept.truncate(KEPT_CONFLICTS);
            (count, kept)
        })
        .reduce(
            || (0, Vec::new()),
            |(c1, mut k1), (c2, k2)| {
                k1.extend(k2);
                k1.sort_unstable();
                k1.truncate(KEPT_CONFLICTS);
                (c1 + c2, k1)
            },
        );
    found.sort_unstable();
    let first_conflicts = found
        .into_iter()
        .map(|(i, j, ip)| Conflict {
            b1: i / n_err,
            error1: errors[i % n_err].to_string(),
            b2: j / n_err,
            error2: errors[j % n_err].to_string(),
            inner: ip,
        })
        .collect();
    Ok(OrthogonalityReport {
        pass: conflict_count == 0,
        budget,
        code_vectors: vectors.len(),
        errors: n_err,
        states: states.len(),
        conflict_count,
        first_conflicts,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{laflamme5, steane8};
    use super::super::SignVector;
    use super::*;

    #[test]
    fn error_counts() {
        assert_eq!(enumerate_errors(5, Budget::Joint { t: 1 }).unwrap().len(), 16);
        assert_eq!(enumerate_errors(10, Budget::Joint { t: 2 }).unwrap().len(), 1 + 30 + 405);
        assert_eq!(enumerate_errors(7, Budget::Pair { tx: 1, tz: 1 }).unwrap().len(), 64);
        let e = enumerate_errors(3, Budget::Joint { t: 1 }).unwrap();
        let names: Vec<String> = e.iter().map(ToString::to_string).collect();
        assert_eq!(names[..5], ["III", "XII", "YII", "ZII", "IXI"]);
        let set: HashSet<_> = e.iter().collect();
        assert_eq!(set.len(), e.len());
    }

    #[test]
    fn five_qubit_code_passes() {
        let r = verify_orthogonal(&laflamme5(), Budget::Joint { t: 1 }).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.states, 32);
        assert!(!verify_orthogonal(&laflamme5(), Budget::Joint { t: 2 }).unwrap().pass);
    }

    #[test]
    fn eight_qubit_code_passes() {
        let r = verify_orthogonal(&steane8(), Budget::Joint { t: 1 }).unwrap();
        assert!(r.pass);
        assert_eq!(r.conflict_count, 0);
        assert!(!verify_orthogonal(&steane8(), Budget::Joint { t: 2 }).unwrap().pass);
    }

    #[test]
    fn flipped_sign_bit_fails() {
        let c = steane8();
        let mut signs = c.sign_gen().to_vec();
        signs[0].flip(5);
        let bad = c.with_signs(signs, SignVector::zeros(16).unwrap()).unwrap();
        let r = verify_orthogonal(&bad, Budget::Joint { t: 1 }).unwrap();
        assert!(!r.pass);
        assert!(r.conflict_count > 0);
        assert!(!r.first_conflicts.is_empty());
    }

    #[test]
    fn scale_cap_enforced() {
        let gcos = crate::gf2::BinMatrix::from_strs(&["1".repeat(17)]).unwrap();
        let code = SignedCode::unsigned(gcos, crate::gf2::BinMatrix::empty(17).unwrap()).unwrap();
        assert!(matches!(verify_orthogonal(&code, Budget::Joint { t: 1 }), Err(Error::ScaleCap { .. })));
    }
}
