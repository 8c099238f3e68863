//! Searches for sign allocations and displacement rows.
//!
//! Sign search works from precomputed pairwise constraints. Two errored code
//! vectors `e·v_b` and `e'·v_b'` overlap only when their supports are the same
//! coset; word `m` of the first then meets word `m ⊕ δ` of the second, and the
//! inner product is `w - 2·wt(s_b ⊕ (s_b' ∘ ⊕δ) ⊕ φ)` for a phase pattern `φ`
//! fixed by the two errors. Orthogonality asks for that weight to be `w/2`.
//! Every hit is re-checked with [`verify_orthogonal`] before it is returned.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::codes::LinearCode;
use crate::cssplus::{CodeParams, PlusCode};
use crate::error::{Error, Result};
use crate::gf2::{BinMatrix, BitWord};
use crate::qstate::{
    enumerate_errors, verify_orthogonal, xor_selected, Budget, SignVector, SignedCode, ORACLE_MAX_K,
    ORACLE_MAX_N,
};

/// Largest `w` for which exhaustive mode materializes all `2^w` sign vectors.
pub const EXHAUSTIVE_MAX_W: usize = 20;

/// The `2w` vectors `m ↦ ⟨a, m⟩ ⊕ c`, ordered by `a` then `c`.
pub fn hadamard_candidates(w: usize) -> Result<Vec<SignVector>> {
    let zero = SignVector::zeros(w)?;
    let mut out = Vec::with_capacity(2 * w);
    for a in 0..w {
        for c in [false, true] {
            let mut v = zero.clone();
            for m in 0..w {
                if ((a & m).count_ones() % 2 == 1) != c {
                    v.set(m, true);
                }
            }
            out.push(v);
        }
    }
    Ok(out)
}

fn all_sign_vectors(w: usize) -> Result<Vec<SignVector>> {
    if w > EXHAUSTIVE_MAX_W {
        return Err(Error::InvalidParameter(format!(
            "exhaustive sign search needs w <= {EXHAUSTIVE_MAX_W}, got {w}"
        )));
    }
    let zero = SignVector::zeros(w)?;
    Ok((0u64..1u64 << w)
        .map(|bits| {
            let mut v = zero.clone();
            for m in 0..w {
                if bits >> m & 1 == 1 {
                    v.set(m, true);
                }
            }
            v
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignSearchOptions {
    /// Choose `K` generator rows (and an offset) instead of one vector per code vector.
    pub linear_only: bool,
    /// Also enumerate a sign offset; the all-zero offset is always tried first.
    pub allow_offset: bool,
    /// Draw from all `2^w` vectors instead of the Hadamard set, stopping after
    /// this many candidate placements.
    pub exhaustive_limit: Option<u64>,
}

impl Default for SignSearchOptions {
    fn default() -> Self {
        Self { linear_only: true, allow_offset: true, exhaustive_limit: None }
    }
}

#[derive(Clone, Debug)]
pub struct SignSearchReport {
    pub found: Option<SignedCode>,
    /// Partial and complete placements tried.
    pub candidates_examined: u64,
    pub constraints: usize,
    /// The search stopped at the exhaustive-mode limit.
    pub limit_hit: bool,
    pub elapsed: Duration,
}

/// Full assignments of a linear sign code in canonical order: offset outermost,
/// then rows `1..=K`, each running through the candidate list in order.
#[derive(Clone, Debug)]
pub struct SignSpace {
    radix: usize,
    slots: usize,
    next: Option<Vec<usize>>,
}

impl SignSpace {
    /// `candidates` per slot; `k` row slots plus one offset slot when `allow_offset`.
    pub fn new(candidates: usize, k: usize, allow_offset: bool) -> Self {
        let slots = k + usize::from(allow_offset);
        let next = (candidates > 0 || slots == 0).then(|| vec![0; slots]);
        Self { radix: candidates, slots, next }
    }

    /// `candidates^(K + offset)`, or `None` on overflow.
    pub fn size(&self) -> Option<u128> {
        (self.radix as u128).checked_pow(self.slots as u32)
    }
}

impl Iterator for SignSpace {
    /// Candidate index per slot.
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = self.slots;
        while i > 0 {
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.radix {
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// `wt(s_b1 ⊕ (s_b2 ∘ ⊕δ) ⊕ φ) = w/2` must hold.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Constraint {
    b1: usize,
    b2: usize,
    delta: usize,
    phi: SignVector,
}

impl Constraint {
    fn holds(&self, signs: &[SignVector]) -> bool {
        let mut v = signs[self.b2].permute_xor(self.delta);
        v.xor_assign(&signs[self.b1]);
        v.xor_assign(&self.phi);
        v.weight() * 2 == v.len()
    }
}

fn parity(x: u128) -> bool {
    x.count_ones() % 2 == 1
}

/// All distinct constraints for the skeleton, sorted by `b2` then self-checks first.
fn build_constraints(skel: &SignedCode, budget: Budget) -> Result<Vec<Constraint>> {
    let n = skel.n();
    let w = skel.w();
    let span: Vec<BitWord> = (0..w).map(|m| xor_selected(skel.gcos().rows(), m, n)).collect();
    let index_of: HashMap<BitWord, usize> = span.iter().enumerate().map(|(m, g)| (*g, m)).collect();
    let (reduced, pivots) = skel.gcos().rref();
    let reduce = |mut v: BitWord| {
        for (r, &p) in reduced.rows().iter().zip(&pivots) {
            if v.get(p) {
                v.xor_assign_unchecked(r);
            }
        }
        v
    };

    let errors = enumerate_errors(n, budget)?;
    let disp: Vec<BitWord> = (0..1usize << skel.k()).map(|b| skel.displacement(b)).collect::<Result<_>>()?;
    let mut groups: HashMap<BitWord, Vec<(usize, usize)>> = HashMap::new();
    for (b, d) in disp.iter().enumerate() {
        for (e, op) in errors.iter().enumerate() {
            groups.entry(reduce(d.xor(&op.x_mask())?)).or_default().push((b, e));
        }
    }

    let zero = SignVector::zeros(w)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for members in groups.values() {
        for (i, &first) in members.iter().enumerate() {
            for &second in &members[i + 1..] {
                let ((b1, e1), (b2, e2)) =
                    if first.0 <= second.0 { (first, second) } else { (second, first) };
                let (x1, z1) = (errors[e1].x_mask(), errors[e1].z_mask());
                let (x2, z2) = (errors[e2].x_mask(), errors[e2].z_mask());
                let shift = disp[b1].bits() ^ disp[b2].bits() ^ x1.bits() ^ x2.bits();
                let shift = BitWord::from_bits(shift, n)?;
                let delta = *index_of
                    .get(&shift)
                    .ok_or_else(|| Error::Inconsistent("grouped states do not share a coset".into()))?;
                let mut phi = zero.clone();
                for m in 0..w {
                    let u1 = disp[b1].bits() ^ span[m].bits();
                    let u2 = disp[b2].bits() ^ span[m ^ delta].bits();
                    if parity(u1 & z1.bits()) != parity(u2 & z2.bits()) {
                        phi.set(m, true);
                    }
                }
                let c = Constraint { b1, b2, delta, phi };
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
        }
    }
    out.sort_by(|a, b| {
        (a.b2, a.b1 != a.b2, a.b1, a.delta, &a.phi).cmp(&(b.b2, b.b1 != b.b2, b.b1, b.delta, &b.phi))
    });
    Ok(out)
}

struct Searcher<'a> {
    skel: &'a SignedCode,
    budget: Budget,
    candidates: Vec<SignVector>,
    /// Constraints that become checkable at each level.
    by_level: Vec<Vec<Constraint>>,
    linear: bool,
    allow_offset: bool,
    levels: usize,
    counter: AtomicU64,
    limit: Option<u64>,
    stop: AtomicBool,
}

impl Searcher<'_> {
    /// Level of the constraint touching code vectors up to `b2`.
    fn level_of(linear: bool, b2: usize) -> usize {
        if linear {
            (usize::BITS - b2.leading_zeros()) as usize
        } else {
            b2
        }
    }

    fn level_options(&self, level: usize) -> usize {
        if self.linear && level == 0 && !self.allow_offset {
            1
        } else {
            self.candidates.len()
        }
    }

    /// Places candidate `idx` at `level`, extending `signs`; false when pruned.
    fn place(&self, level: usize, idx: usize, signs: &mut Vec<SignVector>) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let count = self.counter.fetch_add(1, Ordering::Relaxed) + 1;
        if self.limit.is_some_and(|l| count > l) {
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        let cand = if self.linear && level == 0 && !self.allow_offset {
            SignVector::zeros(self.skel.w()).expect("power of two")
        } else {
            self.candidates[idx].clone()
        };
        if self.linear && level > 0 {
            let half = signs.len();
            for b in 0..half {
                let mut s = signs[b].clone();
                s.xor_assign(&cand);
                signs.push(s);
            }
        } else {
            signs.push(cand);
        }
        self.by_level[level].iter().all(|c| c.holds(signs))
    }

    fn unplace(&self, level: usize, signs: &mut Vec<SignVector>) {
        let keep = if self.linear && level > 0 { signs.len() / 2 } else { signs.len() - 1 };
        signs.truncate(keep);
    }

    fn dfs(&self, level: usize, signs: &mut Vec<SignVector>, chosen: &mut Vec<usize>) -> Option<SignedCode> {
        if level == self.levels {
            return self.accept(chosen);
        }
        for idx in 0..self.level_options(level) {
            if self.place(level, idx, signs) {
                chosen.push(idx);
                if let Some(hit) = self.dfs(level + 1, signs, chosen) {
                    return Some(hit);
                }
                chosen.pop();
            }
            self.unplace(level, signs);
            if self.stop.load(Ordering::Relaxed) {
                return None;
            }
        }
        None
    }

    fn code_for(&self, chosen: &[usize]) -> SignedCode {
        let w = self.skel.w();
        let zero = SignVector::zeros(w).expect("power of two");
        let pick = |i: usize| self.candidates[chosen[i]].clone();
        let (sign_gen, offset) = if self.linear {
            let offset = if self.allow_offset { pick(0) } else { zero };
            ((1..chosen.len()).map(pick).collect(), offset)
        } else {
            // Per-vector signs: s_0 becomes the offset, row i is s_{2^i} ⊕ s_0.
            let s0 = pick(0);
            let rows = (0..self.skel.k())
                .map(|i| {
                    let mut r = pick(1 << i);
                    r.xor_assign(&s0);
                    r
                })
                .collect();
            (rows, s0)
        };
        self.skel.with_signs(sign_gen, offset).expect("valid sign lengths")
    }

    fn accept(&self, chosen: &[usize]) -> Option<SignedCode> {
        if self.linear {
            let code = self.code_for(chosen);
            return verify_orthogonal(&code, self.budget).ok().filter(|r| r.pass).map(|_| code);
        }
        // A non-linear assignment is only representable when it is affine.
        let code = self.code_for(chosen);
        let affine =
            (0..chosen.len()).all(|b| code.sign_vector(b).expect("in range") == self.candidates[chosen[b]]);
        if !affine {
            return None;
        }
        verify_orthogonal(&code, self.budget).ok().filter(|r| r.pass).map(|_| code)
    }
}

/// Looks for signs that make the skeleton `(gcos, d_matrix)` pass the oracle.
pub fn search_signs(
    gcos: &BinMatrix,
    d_matrix: &BinMatrix,
    budget: Budget,
    options: SignSearchOptions,
) -> Result<SignSearchReport> {
    let start = Instant::now();
    let skel = SignedCode::unsigned(gcos.clone(), d_matrix.clone())?;
    if skel.n() > ORACLE_MAX_N || skel.k() > ORACLE_MAX_K {
        return Err(Error::ScaleCap { n: skel.n(), k: skel.k() });
    }
    let candidates = match options.exhaustive_limit {
        Some(_) => all_sign_vectors(skel.w())?,
        None => hadamard_candidates(skel.w())?,
    };
    let constraints = build_constraints(&skel, budget)?;
    let linear = options.linear_only;
    let levels = if linear { skel.k() + 1 } else { 1 << skel.k() };
    let mut by_level = vec![Vec::new(); levels];
    for c in &constraints {
        by_level[Searcher::level_of(linear, c.b2)].push(c.clone());
    }
    let searcher = Searcher {
        skel: &skel,
        budget,
        candidates,
        by_level,
        linear,
        allow_offset: options.allow_offset,
        levels,
        counter: AtomicU64::new(0),
        limit: options.exhaustive_limit,
        stop: AtomicBool::new(false),
    };

    let mut found = None;
    'outer: for first in 0..searcher.level_options(0) {
        let mut signs = Vec::new();
        if !searcher.place(0, first, &mut signs) {
            if searcher.stop.load(Ordering::Relaxed) {
                break;
            }
            continue;
        }
        if levels == 1 {
            if let Some(hit) = searcher.accept(&[first]) {
                found = Some(hit);
                break;
            }
            continue;
        }
        // The second level is split across workers; the earliest index wins.
        let hit = (0..searcher.level_options(1)).into_par_iter().find_map_first(|second| {
            let mut signs = signs.clone();
            let mut chosen = vec![first];
            let ok = searcher.place(1, second, &mut signs);
            if !ok {
                return None;
            }
            chosen.push(second);
            searcher.dfs(2, &mut signs, &mut chosen)
        });
        if let Some(hit) = hit {
            found = Some(hit);
            break 'outer;
        }
        if searcher.stop.load(Ordering::Relaxed) {
            break;
        }
    }
    Ok(SignSearchReport {
        found,
        candidates_examined: searcher.counter.load(Ordering::Relaxed),
        constraints: constraints.len(),
        limit_hit: searcher.stop.load(Ordering::Relaxed),
        elapsed: start.elapsed(),
    })
}

#[derive(Clone, Debug)]
pub struct DisplacementReport {
    pub found: Option<PlusCode>,
    pub params: Option<CodeParams>,
    /// Row subsets (partial and complete) tried.
    pub subsets_examined: u64,
    pub elapsed: Duration,
}

/// Picks `k` rows of the standard-form generator of `C1` (checked by
/// `c1_check`) as displacement rows so that `C2` reaches distance `target_d2`.
/// Subsets are tried in lexicographic order of row index.
pub fn search_displacements(c1_check: &BinMatrix, k: usize, target_d2: usize) -> Result<DisplacementReport> {
    let start = Instant::now();
    let h1 = if c1_check.is_full_rank() { c1_check.clone() } else { c1_check.rref().0 };
    let n = h1.n_cols();
    let k1 = n - h1.n_rows();
    if 2 * k1 < n + k {
        return Err(Error::InvalidParameter(format!("K = {k} exceeds 2k - n for the [{n}, {k1}] code")));
    }
    let g1 =
        if h1.n_rows() == 0 { BinMatrix::identity(n)? } else { h1.standard_form()?.generator_original() };

    struct State<'a> {
        h1: &'a BinMatrix,
        g1: &'a BinMatrix,
        k: usize,
        target: usize,
        examined: u64,
    }

    fn rec(
        st: &mut State<'_>,
        next: usize,
        chosen: &mut Vec<usize>,
    ) -> Result<Option<(PlusCode, CodeParams)>> {
        if chosen.len() == st.k {
            let d = st.g1.select_rows(chosen)?;
            let plus = match PlusCode::build_from_h1_d(st.h1.clone(), d) {
                Err(Error::CosetsNotDistinct) => return Ok(None),
                other => other?,
            };
            let params = plus.verify_plus()?;
            return Ok((params.d2 >= st.target).then_some((plus, params)));
        }
        let remaining = st.k - chosen.len();
        for row in next..=st.g1.n_rows() - remaining {
            st.examined += 1;
            chosen.push(row);
            let stacked = st.h1.stack(&st.g1.select_rows(chosen)?)?;
            let independent = stacked.rank() == stacked.n_rows();
            if independent && LinearCode::from_generator(stacked).distance_at_least(st.target) {
                if let Some(hit) = rec(st, row + 1, chosen)? {
                    return Ok(Some(hit));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }

    if k == 0 {
        let plus = PlusCode::build_from_h1_d(h1.clone(), BinMatrix::empty(n)?)?;
        let params = plus.verify_plus().ok();
        return Ok(DisplacementReport {
            found: Some(plus),
            params,
            subsets_examined: 0,
            elapsed: start.elapsed(),
        });
    }
    let mut st = State { h1: &h1, g1: &g1, k, target: target_d2, examined: 0 };
    let hit = rec(&mut st, 0, &mut Vec::new())?;
    let (found, params) = match hit {
        Some((p, c)) => (Some(p), Some(c)),
        None => (None, None),
    };
    Ok(DisplacementReport { found, params, subsets_examined: st.examined, elapsed: start.elapsed() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::make_cyclic_check;

    fn g8() -> (BinMatrix, BinMatrix) {
        (
            BinMatrix::from_strs(&["01010101", "00110011", "00001111", "11111111"]).unwrap(),
            BinMatrix::from_strs(&["11000000", "10100000", "10001000"]).unwrap(),
        )
    }

    #[test]
    fn hadamard_set() {
        let c = hadamard_candidates(4).unwrap();
        let bins: Vec<String> = c.iter().map(SignVector::to_binary).collect();
        assert_eq!(bins, ["0000", "1111", "1010", "0101", "1100", "0011", "0110", "1001"]);
        let hex: Vec<String> = hadamard_candidates(16).unwrap().iter().map(SignVector::to_hex).collect();
        for h in ["3333", "0F0F", "6666"] {
            assert!(hex.contains(&h.to_string()), "{h}");
        }
        // Both five-qubit sign vectors differ from the set by the same offset.
        let set = hadamard_candidates(8).unwrap();
        let off = SignVector::from_binary("00010100").unwrap();
        for s in ["00010100", "01110010"] {
            let v = SignVector::from_binary(s).unwrap().xor(&off).unwrap();
            assert!(set.contains(&v), "{s}");
        }
    }

    #[test]
    fn sign_space_is_complete_and_unique() {
        let space = SignSpace::new(8, 2, true);
        assert_eq!(space.size(), Some(512));
        let all: Vec<Vec<usize>> = space.collect();
        assert_eq!(all.len(), 512);
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 512);
        assert_eq!(all[0], vec![0, 0, 0]);
        assert_eq!(all[1], vec![0, 0, 1]);
        assert_eq!(SignSpace::new(8, 0, false).count(), 1);
    }

    #[test]
    fn constraints_agree_with_oracle_on_known_code() {
        let (gcos, d) = g8();
        let skel = SignedCode::unsigned(gcos, d).unwrap();
        let cons = build_constraints(&skel, Budget::Joint { t: 1 }).unwrap();
        let good = skel
            .with_signs(
                ["3333", "0F0F", "6666"].iter().map(|h| SignVector::from_hex(h, 16).unwrap()).collect(),
                SignVector::zeros(16).unwrap(),
            )
            .unwrap();
        let signs: Vec<SignVector> = (0..8).map(|b| good.sign_vector(b).unwrap()).collect();
        assert!(cons.iter().all(|c| c.holds(&signs)));
        let zero_signs = vec![SignVector::zeros(16).unwrap(); 8];
        assert!(!cons.iter().all(|c| c.holds(&zero_signs)));
    }

    #[test]
    fn finds_signs_for_g8() {
        let (gcos, d) = g8();
        let r = search_signs(&gcos, &d, Budget::Joint { t: 1 }, SignSearchOptions::default()).unwrap();
        let code = r.found.expect("hit");
        assert!(verify_orthogonal(&code, Budget::Joint { t: 1 }).unwrap().pass);
        assert!(r.candidates_examined <= 2 * 32u64.pow(4));
    }

    #[test]
    fn collision_skeleton_has_no_signs() {
        // Column 1 and 2 coincide everywhere, so X on either qubit acts alike.
        let gcos = BinMatrix::from_strs(&["11000", "00110"]).unwrap();
        let d = BinMatrix::from_strs(&["00001"]).unwrap();
        let r = search_signs(&gcos, &d, Budget::Joint { t: 1 }, SignSearchOptions::default()).unwrap();
        assert!(r.found.is_none());
    }

    #[test]
    fn nonlinear_mode_finds_five_qubit_code() {
        let gcos = BinMatrix::from_strs(&["10101", "10011", "01111"]).unwrap();
        let d = BinMatrix::from_strs(&["11111"]).unwrap();
        let opts =
            SignSearchOptions { linear_only: false, allow_offset: true, exhaustive_limit: Some(1 << 20) };
        let r = search_signs(&gcos, &d, Budget::Joint { t: 1 }, opts).unwrap();
        let code = r.found.expect("hit");
        assert!(verify_orthogonal(&code, Budget::Joint { t: 1 }).unwrap().pass);
    }

    #[test]
    fn pruned_search_matches_brute_force_first_hit() {
        let gcos = BinMatrix::from_strs(&["10101", "10011", "01111"]).unwrap();
        let d = BinMatrix::from_strs(&["11111"]).unwrap();
        let budget = Budget::Joint { t: 1 };
        let opts =
            SignSearchOptions { linear_only: true, allow_offset: true, exhaustive_limit: Some(u64::MAX) };
        let pruned = search_signs(&gcos, &d, budget, opts).unwrap().found.expect("hit");
        let all = all_sign_vectors(8).unwrap();
        let skel = SignedCode::unsigned(gcos, d).unwrap();
        let brute = SignSpace::new(all.len(), 1, true)
            .map(|idx| skel.with_signs(vec![all[idx[1]].clone()], all[idx[0]].clone()).unwrap())
            .find(|c| verify_orthogonal(c, budget).unwrap().pass)
            .expect("brute-force hit");
        assert_eq!(pruned, brute);
    }

    #[test]
    fn displacement_search_cyclic_ten() {
        let h1 = make_cyclic_check(&[0, 1], 4, 10).unwrap();
        let r = search_displacements(&h1, 2, 3).unwrap();
        let p = r.found.expect("hit");
        assert_eq!(p.k(), 2);
        let params = r.params.unwrap();
        assert_eq!((params.d1, params.d2), (3, 3));
    }

    #[test]
    fn displacement_search_trivial_and_invalid() {
        let h1 = make_cyclic_check(&[0, 1], 4, 10).unwrap();
        let r = search_displacements(&h1, 0, 3).unwrap();
        assert_eq!(r.found.unwrap().k(), 0);
        assert!(search_displacements(&h1, 3, 3).is_err());
    }
}
