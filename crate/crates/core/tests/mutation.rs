//! Single-bit mutations of the 8-qubit signed code must all break it at t = 1.

use qecc::gf2::BinMatrix;
use qecc::qstate::{verify_orthogonal, Budget, SignedCode};
use qecc::registry::Registry;

fn g8() -> SignedCode {
    Registry::bundled().signed("steane-8-3-3").unwrap()
}

/// A mutant fails if it cannot be built or the oracle rejects it.
fn fails(m: qecc::error::Result<SignedCode>) -> bool {
    match m {
        Err(_) => true,
        Ok(code) => !verify_orthogonal(&code, Budget::Joint { t: 1 }).unwrap().pass,
    }
}

fn flip(m: &BinMatrix, r: usize, c: usize) -> BinMatrix {
    let mut rows = m.rows().to_vec();
    rows[r].flip(c);
    BinMatrix::new(rows, m.n_cols()).unwrap()
}

#[test]
fn original_passes() {
    assert!(!fails(Ok(g8())));
}

#[test]
fn every_sign_bit_flip_fails() {
    let code = g8();
    let w = code.w();
    let mut survivors = Vec::new();
    for row in 0..code.k() {
        for m in 0..w {
            let mut gens = code.sign_gen().to_vec();
            gens[row].flip(m);
            if !fails(code.with_signs(gens, code.sign_offset().clone())) {
                survivors.push(format!("sign row {row} bit {m}"));
            }
        }
    }
    for m in 0..w {
        let mut offset = code.sign_offset().clone();
        offset.flip(m);
        if !fails(code.with_signs(code.sign_gen().to_vec(), offset)) {
            survivors.push(format!("offset bit {m}"));
        }
    }
    assert!(survivors.is_empty(), "mutants passing t=1: {survivors:?}");
}

#[test]
fn every_matrix_bit_flip_fails() {
    let code = g8();
    let mut survivors = Vec::new();
    for (name, m) in [("gcos", code.gcos()), ("d", code.d_matrix())] {
        for r in 0..m.n_rows() {
            for c in 0..m.n_cols() {
                let mutated = flip(m, r, c);
                let (gcos, d) = if name == "gcos" {
                    (mutated, code.d_matrix().clone())
                } else {
                    (code.gcos().clone(), mutated)
                };
                let built = SignedCode::new(gcos, d, code.sign_gen().to_vec(), code.sign_offset().clone());
                if !fails(built) {
                    survivors.push(format!("{name} row {r} col {c}"));
                }
            }
        }
    }
    assert!(survivors.is_empty(), "mutants passing t=1: {survivors:?}");
}
