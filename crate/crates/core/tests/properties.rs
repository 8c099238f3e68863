//! Randomized invariants.

use proptest::prelude::*;
use qecc::codes::LinearCode;
use qecc::gf2::{check_from_standard_generator, BinMatrix, BitWord};
use qecc::qstate::{apply_pauli, inner, PauliOp, QuantumState, SignVector};

fn word(n: usize) -> impl Strategy<Value = BitWord> {
    any::<u128>().prop_map(move |b| BitWord::from_bits(b & ((1u128 << n) - 1), n).unwrap())
}

fn matrix(rows: usize, n: usize) -> impl Strategy<Value = BinMatrix> {
    prop::collection::vec(word(n), rows).prop_map(move |r| BinMatrix::new(r, n).unwrap())
}

/// `(A | I_r)` with random `A`.
fn systematic_check() -> impl Strategy<Value = BinMatrix> {
    (1usize..6, 2usize..8).prop_flat_map(|(r, k)| {
        let n = r + k;
        prop::collection::vec(word(k), r).prop_map(move |a| {
            let rows = a
                .iter()
                .enumerate()
                .map(|(i, w)| BitWord::from_bits(w.bits() | 1u128 << (k + i), n).unwrap())
                .collect();
            BinMatrix::new(rows, n).unwrap()
        })
    })
}

fn state(n: usize) -> impl Strategy<Value = QuantumState> {
    prop::collection::vec((word(n), -3i64..=3), 1..12)
        .prop_map(move |terms| QuantumState::from_terms(n, terms).unwrap())
}

fn pauli(n: usize) -> impl Strategy<Value = PauliOp> {
    (word(n), word(n)).prop_map(|(x, z)| PauliOp::new(x, z).unwrap())
}

fn brute_distance(c: &LinearCode) -> usize {
    let g = c.generator();
    (1u32..1 << g.n_rows())
        .map(|m| {
            let mut w = BitWord::zeros(c.n()).unwrap();
            for (i, row) in g.rows().iter().enumerate() {
                if m >> i & 1 == 1 {
                    w = w.xor(row).unwrap();
                }
            }
            w.weight()
        })
        .min()
        .unwrap()
}

proptest! {
    #[test]
    fn dual_is_an_involution(m in (1usize..6, 4usize..12).prop_flat_map(|(r, n)| matrix(r, n))) {
        prop_assume!(m.rank() > 0 && m.rank() < m.n_cols());
        let c = LinearCode::from_generator(m);
        prop_assert!(c.dual().dual().same_code(&c));
        prop_assert_eq!(c.k() + c.dual().k(), c.n());
    }

    #[test]
    fn standard_form_round_trips(h in systematic_check()) {
        let sf = h.standard_form().unwrap();
        prop_assert!(sf.is_identity_permutation());
        let g = sf.generator_original();
        prop_assert!(g.mul_transpose(&h).unwrap().is_zero());
        prop_assert_eq!(g.rank(), h.n_cols() - h.n_rows());
        prop_assert!(check_from_standard_generator(&sf.generator).unwrap().same_rowspan(&h));
    }

    #[test]
    fn null_space_is_orthogonal_and_complementary(m in (1usize..8, 2usize..14).prop_flat_map(|(r, n)| matrix(r, n))) {
        let ns = m.null_space();
        prop_assert!(ns.n_rows() == 0 || ns.mul_transpose(&m).unwrap().is_zero());
        prop_assert_eq!(ns.rank(), ns.n_rows());
        prop_assert_eq!(m.rank() + ns.n_rows(), m.n_cols());
    }

    #[test]
    fn min_distance_matches_enumeration(m in (1usize..6, 4usize..12).prop_flat_map(|(r, n)| matrix(r, n))) {
        prop_assume!(m.rank() > 0);
        let c = LinearCode::from_generator(m);
        let d = c.min_distance().unwrap();
        prop_assert_eq!(d, brute_distance(&c));
        prop_assert!(c.distance_at_least(d));
        prop_assert!(!c.distance_at_least(d + 1));
    }

    #[test]
    fn pauli_squares_to_a_global_sign((s, p) in (2usize..10).prop_flat_map(|n| (state(n), pauli(n)))) {
        let twice = apply_pauli(&p, &apply_pauli(&p, &s).unwrap()).unwrap();
        let sign = if p.x_mask().and(&p.z_mask()).unwrap().weight() % 2 == 0 { 1 } else { -1 };
        let expected = QuantumState::from_terms(s.n(), s.entries().iter().map(|(w, a)| (*w, a * sign))).unwrap();
        prop_assert_eq!(twice, expected);
    }

    #[test]
    fn inner_product_is_error_invariant((a, b, p) in (2usize..10).prop_flat_map(|n| (state(n), state(n), pauli(n)))) {
        let pa = apply_pauli(&p, &a).unwrap();
        let pb = apply_pauli(&p, &b).unwrap();
        prop_assert_eq!(inner(&pa, &pb).unwrap(), inner(&a, &b).unwrap());
        prop_assert_eq!(inner(&a, &b).unwrap(), inner(&b, &a).unwrap());
    }

    #[test]
    fn sign_vectors_round_trip(bits in any::<u64>(), log_w in 1u32..7, delta in any::<usize>()) {
        let w = 1usize << log_w;
        let bits = if w == 64 { bits } else { bits & ((1u64 << w) - 1) };
        let v = SignVector::from_u64(bits, w).unwrap();
        prop_assert_eq!(&SignVector::from_hex(&v.to_hex(), w).unwrap(), &v);
        prop_assert_eq!(&SignVector::from_binary(&v.to_binary()).unwrap(), &v);
        let d = delta % w;
        prop_assert_eq!(&v.permute_xor(d).permute_xor(d), &v);
    }
}
