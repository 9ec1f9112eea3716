//! Configuration combinatorics for finite C2-sets.
//!
//! Everything here is exact counting: graph subgroups of C2 x Sigma_n,
//! orders of equivariant automorphism groups, nonemptiness of equivariant
//! embedding spaces in a real representation p + q.sigma, and component
//! counts for the one-dimensional embedding spaces where the answer is a
//! closed form.  Component counts outside those cases are refused rather
//! than guessed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfcombError {
    #[error("n = {0} exceeds the brute-force enumeration bound of 8")]
    TooLarge(usize),
    #[error("not supported: {0}")]
    NotSupported(String),
}

/// A finite C2-set, recorded by orbit counts: `n_fixed` copies of the
/// one-point orbit C2/C2 and `n_free` copies of the free orbit C2/e.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct C2SetDescriptor {
    pub n_fixed: usize,
    pub n_free: usize,
}

impl C2SetDescriptor {
    pub fn new(n_fixed: usize, n_free: usize) -> Self {
        C2SetDescriptor { n_fixed, n_free }
    }

    /// Cardinality of the underlying set.
    pub fn underlying_size(&self) -> usize {
        self.n_fixed + 2 * self.n_free
    }
}

/// An actual (not virtual) real C2-representation p + q.sigma; the fixed
/// subspace is R^p and the complement carries the sign action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepPQ {
    pub p: usize,
    pub q: usize,
}

impl RepPQ {
    pub fn new(p: usize, q: usize) -> Self {
        RepPQ { p, q }
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }
}

/// Existence and uniqueness of norm maps `Map(C2, X) -> X` for algebras
/// over the disk operad of a representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormMapStatus {
    None,
    Unique,
    Multiple(u64),
}

impl std::fmt::Display for NormMapStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NormMapStatus::None => write!(f, "NONE"),
            NormMapStatus::Unique => write!(f, "UNIQUE"),
            NormMapStatus::Multiple(k) => write!(f, "MULTIPLE({k})"),
        }
    }
}

fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "factorial({n}) overflows u64");
    (1..=n as u64).product()
}

/// Number of graph subgroups of C2 x Sigma_n over the full subgroup C2,
/// i.e. the number of homomorphisms C2 -> Sigma_n: permutations with
/// square the identity, the identity included.  Enumerated by brute force;
/// `n > 8` is refused rather than switched to a closed form.
pub fn graph_subgroup_count(n: usize) -> Result<u64, ConfcombError> {
    if n > 8 {
        return Err(ConfcombError::TooLarge(n));
    }
    let mut count = 0u64;
    for tau in permutations(n) {
        if (0..n).all(|i| tau[tau[i]] == i) {
            count += 1;
        }
    }
    Ok(count)
}

/// Order of the equivariant automorphism group of a finite C2-set:
/// the automorphisms permute fixed orbits among themselves and free orbits
/// among themselves, each free orbit contributing an extra swap.
pub fn aut_order(t: C2SetDescriptor) -> u64 {
    let two_pow = 1u64
        .checked_shl(t.n_free as u32)
        .expect("2^n_free overflows u64");
    factorial(t.n_fixed)
        .checked_mul(two_pow)
        .and_then(|x| x.checked_mul(factorial(t.n_free)))
        .expect("automorphism group order overflows u64")
}

/// Whether the space of equivariant embeddings of `t` into `v` is nonempty.
/// Fixed points land in the fixed subspace R^p, so two or more of them need
/// p >= 1; free orbits need a point moved by the action, so q >= 1.
pub fn emb_nonempty(t: C2SetDescriptor, v: RepPQ) -> bool {
    let fixed_ok = t.n_fixed <= 1 || v.p >= 1;
    let free_ok = t.n_free == 0 || v.q >= 1;
    fixed_ok && free_ok
}

/// Number of components of the space of equivariant embeddings of k free
/// orbits into the sign line sigma: a torsor over the automorphism group,
/// so 2^k * k!.
pub fn pi0_emb_sigma(k: usize) -> u64 {
    aut_order(C2SetDescriptor::new(0, k))
}

/// Number of components of the space of embeddings of n unordered-action-free
/// labeled points into the line: the n! orderings.
pub fn pi0_underlying(n: usize) -> u64 {
    factorial(n)
}

/// Component count for the equivariant embedding space of `t` in `v`, in
/// the cases where it is pinned down: the empty space, a set with at most
/// one point, and free sets in the sign line.  Mixed orbit types in higher
/// dimensions are refused.
pub fn pi0_emb(t: C2SetDescriptor, v: RepPQ) -> Result<u64, ConfcombError> {
    if !emb_nonempty(t, v) {
        return Ok(0);
    }
    if t.n_free == 0 && t.n_fixed <= 1 {
        return Ok(1);
    }
    if t.n_fixed == 0 && v == RepPQ::new(0, 1) {
        return Ok(pi0_emb_sigma(t.n_free));
    }
    Err(ConfcombError::NotSupported(format!(
        "pi0 of Emb({} fixed + {} free, {} + {}.sigma): component counts are \
         only available for the empty space, a single orbit, and free sets in \
         the sign line",
        t.n_fixed, t.n_free, v.p, v.q
    )))
}

/// Norm-map classification for algebras over the disk operad of `v`:
/// no norm without free directions, exactly two for the punctured line
/// (its two components), unique up to homotopy once the free part of the
/// punctured representation is connected.
pub fn norm_map_status(v: RepPQ) -> NormMapStatus {
    match v.q {
        0 => NormMapStatus::None,
        1 => NormMapStatus::Multiple(2),
        _ => NormMapStatus::Unique,
    }
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current.push(i);
                rec(n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
        b.iter().map(|&i| a[i]).collect()
    }

    fn is_identity(p: &[usize]) -> bool {
        p.iter().enumerate().all(|(i, &pi)| pi == i)
    }

    #[test]
    fn graph_subgroup_counts_are_frozen() {
        let expected = [1u64, 1, 2, 4, 10, 26, 76, 232, 764];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(graph_subgroup_count(n).unwrap(), want, "n = {n}");
        }
        assert!(matches!(
            graph_subgroup_count(9),
            Err(ConfcombError::TooLarge(9))
        ));
    }

    #[test]
    fn graph_subgroups_match_subgroup_enumeration() {
        // Independent route: enumerate two-element subsets {e, (1, tau)} of
        // C2 x Sigma_n and keep those closed under the product group law,
        // with trivial intersection with Sigma_n; add the trivial-graph
        // subgroup {e, (1, id)}'s degenerate cousin {(0, id), (1, id)}
        // bookkeeping via tau = id.
        for n in 0..=4 {
            let perms = permutations(n);
            let mut subgroups = 0u64;
            for tau in &perms {
                // Candidate subgroup {(0, id), (1, tau)}.
                // Closure: (1, tau)(1, tau) = (0, tau^2) must be (0, id).
                let square = compose(tau, tau);
                if !is_identity(&square) {
                    continue;
                }
                // Trivial intersection with {0} x Sigma_n holds by shape;
                // inverse of (1, tau) is (1, tau) itself since tau^2 = id.
                subgroups += 1;
            }
            assert_eq!(subgroups, graph_subgroup_count(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn aut_order_closed_forms() {
        assert_eq!(aut_order(C2SetDescriptor::new(0, 0)), 1);
        assert_eq!(aut_order(C2SetDescriptor::new(1, 0)), 1);
        assert_eq!(aut_order(C2SetDescriptor::new(2, 0)), 2);
        assert_eq!(aut_order(C2SetDescriptor::new(0, 1)), 2);
        assert_eq!(aut_order(C2SetDescriptor::new(0, 2)), 8);
        assert_eq!(aut_order(C2SetDescriptor::new(0, 3)), 48);
        assert_eq!(aut_order(C2SetDescriptor::new(3, 2)), 48);
    }

    #[test]
    fn aut_order_matches_bijection_enumeration() {
        // The C2-set with n_fixed fixed points 0..n_fixed and free orbits
        // {n_fixed + 2i, n_fixed + 2i + 1}; automorphisms are the
        // permutations of the underlying set commuting with the involution.
        for (n_fixed, n_free) in [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (3, 2)] {
            let t = C2SetDescriptor::new(n_fixed, n_free);
            let m = t.underlying_size();
            let sigma: Vec<usize> = (0..m)
                .map(|i| {
                    if i < n_fixed {
                        i
                    } else if (i - n_fixed) % 2 == 0 {
                        i + 1
                    } else {
                        i - 1
                    }
                })
                .collect();
            let count = permutations(m)
                .into_iter()
                .filter(|pi| compose(pi, &sigma) == compose(&sigma, pi))
                .count() as u64;
            assert_eq!(count, aut_order(t), "t = ({n_fixed}, {n_free})");
        }
    }

    #[test]
    fn emb_nonempty_pinned_values() {
        for p in 0..3 {
            for q in 0..3 {
                assert!(emb_nonempty(C2SetDescriptor::new(1, 0), RepPQ::new(p, q)));
            }
        }
        assert!(!emb_nonempty(C2SetDescriptor::new(2, 0), RepPQ::new(0, 1)));
        assert!(emb_nonempty(C2SetDescriptor::new(0, 3), RepPQ::new(0, 1)));
        assert!(!emb_nonempty(C2SetDescriptor::new(0, 1), RepPQ::new(4, 0)));
    }

    #[test]
    fn adding_one_fixed_point_is_free() {
        for k in 0..4 {
            for p in 0..3 {
                for q in 0..3 {
                    let v = RepPQ::new(p, q);
                    assert_eq!(
                        emb_nonempty(C2SetDescriptor::new(0, k), v),
                        emb_nonempty(C2SetDescriptor::new(1, k), v),
                        "k = {k}, v = ({p}, {q})"
                    );
                }
            }
        }
    }

    #[test]
    fn emb_nonempty_is_monotone_in_the_representation() {
        for n_fixed in 0..4 {
            for n_free in 0..4 {
                let t = C2SetDescriptor::new(n_fixed, n_free);
                for p in 0..3 {
                    for q in 0..3 {
                        if !emb_nonempty(t, RepPQ::new(p, q)) {
                            continue;
                        }
                        for dp in 0..3 {
                            for dq in 0..3 {
                                assert!(emb_nonempty(t, RepPQ::new(p + dp, q + dq)));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_components_are_a_torsor() {
        assert_eq!(pi0_emb_sigma(0), 1);
        assert_eq!(pi0_emb_sigma(1), 2);
        assert_eq!(pi0_emb_sigma(2), 8);
        assert_eq!(pi0_emb_sigma(3), 48);
        for k in 0..=6 {
            assert_eq!(pi0_emb_sigma(k), aut_order(C2SetDescriptor::new(0, k)));
        }
    }

    #[test]
    fn sigma_components_match_line_enumeration() {
        // An embedding of k free orbits into the punctured line is, up to
        // deformation, a choice of distinct magnitudes |x_1|, ..., |x_k| and
        // signs for the representatives; the component is determined by the
        // left-to-right word of the 2k labeled points.  Enumerate every
        // (magnitude order, sign vector) pair and count distinct words.
        for k in 0..=3 {
            let mut words = BTreeSet::new();
            for rho in permutations(k) {
                for mask in 0..(1u32 << k) {
                    let mut points: Vec<(i64, (usize, bool))> = Vec::new();
                    for i in 0..k {
                        let magnitude = (rho[i] + 1) as i64;
                        let sign = if mask & (1 << i) != 0 { 1 } else { -1 };
                        points.push((sign * magnitude, (i, true)));
                        points.push((-sign * magnitude, (i, false)));
                    }
                    points.sort();
                    let word: Vec<(usize, bool)> = points.into_iter().map(|(_, l)| l).collect();
                    words.insert(word);
                }
            }
            assert_eq!(words.len() as u64, pi0_emb_sigma(k), "k = {k}");
        }
    }

    #[test]
    fn underlying_components_match_line_enumeration() {
        // Place n labeled points at distinct integers in 0..2n and record
        // the induced left-to-right order; components of the embedding
        // space correspond to the words that appear.
        for n in 0..=4usize {
            let mut words = BTreeSet::new();
            let pool = (2 * n).max(1);
            let mut slots = vec![0usize; n];
            loop {
                let distinct = (0..n).all(|i| (0..i).all(|j| slots[i] != slots[j]));
                if distinct {
                    let mut points: Vec<(usize, usize)> =
                        slots.iter().enumerate().map(|(l, &x)| (x, l)).collect();
                    points.sort();
                    let word: Vec<usize> = points.into_iter().map(|(_, l)| l).collect();
                    words.insert(word);
                }
                // Odometer over n slots with `pool` values each.
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    slots[pos] += 1;
                    if slots[pos] < pool {
                        break;
                    }
                    slots[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
            assert_eq!(words.len() as u64, pi0_underlying(n), "n = {n}");
        }
    }

    #[test]
    fn norm_map_classification() {
        assert_eq!(norm_map_status(RepPQ::new(5, 0)), NormMapStatus::None);
        assert_eq!(norm_map_status(RepPQ::new(0, 0)), NormMapStatus::None);
        assert_eq!(norm_map_status(RepPQ::new(0, 1)), NormMapStatus::Multiple(2));
        assert_eq!(norm_map_status(RepPQ::new(3, 1)), NormMapStatus::Multiple(2));
        assert_eq!(norm_map_status(RepPQ::new(0, 2)), NormMapStatus::Unique);
        assert_eq!(norm_map_status(RepPQ::new(4, 7)), NormMapStatus::Unique);
    }

    #[test]
    fn pi0_emb_dispatch() {
        // Empty embedding space.
        assert_eq!(
            pi0_emb(C2SetDescriptor::new(2, 0), RepPQ::new(0, 1)).unwrap(),
            0
        );
        // At most one point: connected.
        assert_eq!(
            pi0_emb(C2SetDescriptor::new(1, 0), RepPQ::new(2, 0)).unwrap(),
            1
        );
        assert_eq!(
            pi0_emb(C2SetDescriptor::new(0, 0), RepPQ::new(0, 0)).unwrap(),
            1
        );
        // Free sets in the sign line.
        assert_eq!(
            pi0_emb(C2SetDescriptor::new(0, 2), RepPQ::new(0, 1)).unwrap(),
            8
        );
        // Mixed orbit types and higher-dimensional targets are refused.
        assert!(matches!(
            pi0_emb(C2SetDescriptor::new(1, 1), RepPQ::new(0, 1)),
            Err(ConfcombError::NotSupported(_))
        ));
        assert!(matches!(
            pi0_emb(C2SetDescriptor::new(0, 1), RepPQ::new(1, 1)),
            Err(ConfcombError::NotSupported(_))
        ));
    }
}
