use num_bigint::BigUint;
use serde::Serialize;

/// Both sides of the quantum Hamming bound `2^K · Σ_{i≤t} 3^i·C(n,i) ≤ 2^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HammingBoundReport {
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub t: usize,
    #[serde(serialize_with = "as_decimal")]
    pub lhs: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub rhs: BigUint,
    pub satisfied: bool,
    pub perfect: bool,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// Number of Pauli errors of weight at most `t` on `n` qubits.
pub fn error_count(n: usize, t: usize) -> BigUint {
    let mut total = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    let mut pow3 = BigUint::from(1u32);
    for i in 0..=t.min(n) {
        if i > 0 {
            binom = binom * BigUint::from(n - i + 1) / BigUint::from(i);
            pow3 *= 3u32;
        }
        total += &binom * &pow3;
    }
    total
}

pub fn quantum_hamming_bound(n: usize, k: usize, t: usize) -> HammingBoundReport {
    let lhs = error_count(n, t) << k;
    let rhs = BigUint::from(1u32) << n;
    HammingBoundReport { n, k, t, satisfied: lhs <= rhs, perfect: lhs == rhs, lhs, rhs }
}

/// Smallest `n` for which the bound holds.
pub fn min_n_for(k: usize, t: usize) -> usize {
    (1..).find(|&n| quantum_hamming_bound(n, k, t).satisfied).expect("bound eventually holds")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_five_qubit() {
        let r = quantum_hamming_bound(5, 1, 1);
        assert_eq!(r.lhs, BigUint::from(32u32));
        assert!(r.perfect && r.satisfied);
    }

    #[test]
    fn other_values() {
        let r = quantum_hamming_bound(8, 3, 1);
        assert_eq!((r.lhs, r.rhs, r.perfect), (200u32.into(), 256u32.into(), false));
        assert_eq!(quantum_hamming_bound(7, 2, 1).lhs, BigUint::from(88u32));
        assert_eq!(error_count(4, 0), BigUint::from(1u32));
        assert_eq!(error_count(3, 5), BigUint::from(64u32));
    }

    #[test]
    fn min_n_values() {
        let got: Vec<usize> = (1..=5).map(|k| min_n_for(k, 1)).collect();
        assert_eq!(got, vec![5, 7, 8, 9, 10]);
        assert_eq!(min_n_for(1, 2), 10);
        assert_eq!(min_n_for(0, 1), 4);
    }
}
