//! Operator calculus for simplices written as iterated degeneracies of a
//! nondegenerate simplex.
//!
//! A simplex is `s_{w[0]} s_{w[1]} ... s_{w[k-1]} target` with the word
//! strictly decreasing; this form is unique, so equality of simplices is
//! equality of the data.

/// Identifier of a nondegenerate simplex inside a fixed simplicial set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SimplexRef {
    pub dim: usize,
    pub idx: usize,
}

/// A possibly degenerate simplex over a nondegenerate target.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DegSimplex {
    /// Strictly decreasing degeneracy word, outermost operator first.
    pub word: Vec<usize>,
    pub target: SimplexRef,
}

impl DegSimplex {
    pub fn nondegenerate(target: SimplexRef) -> Self {
        DegSimplex {
            word: vec![],
            target,
        }
    }

    pub fn dim(&self) -> usize {
        self.target.dim + self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    /// The set of j with `self` in the image of `s_j`: exactly the word
    /// entries, since an inner degeneracy bubbles outward unchanged.
    pub fn directions(&self) -> &[usize] {
        &self.word
    }

    /// Applies `s_i` on the outside, restoring the canonical word.
    pub fn degenerate(&self, i: usize) -> DegSimplex {
        debug_assert!(i <= self.dim());
        let mut out = self.clone();
        push_degeneracy(&mut out.word, i);
        out
    }

    /// Writes `self = s_j y` and returns `y`. Panics unless `j` is one of
    /// the directions.
    pub fn strip(&self, j: usize) -> DegSimplex {
        let pos = self
            .word
            .iter()
            .position(|&w| w == j)
            .expect("strip requires a degeneracy direction");
        let mut word = Vec::with_capacity(self.word.len() - 1);
        for (k, &w) in self.word.iter().enumerate() {
            if k < pos {
                word.push(w - 1);
            } else if k > pos {
                word.push(w);
            }
        }
        DegSimplex {
            word,
            target: self.target,
        }
    }
}

/// Composes `s_i` onto the outside of a canonical word, in place.
/// Uses `s_i s_j = s_{j+1} s_i` for `i <= j` to restore strict decrease.
pub fn push_degeneracy(word: &mut Vec<usize>, i: usize) {
    let mut pos = 0;
    while pos < word.len() && i <= word[pos] {
        word[pos] += 1;
        pos += 1;
    }
    word.insert(pos, i);
}

/// Applies `d_i` to a possibly degenerate simplex, resolving the face of
/// the nondegenerate target through the provided accessor.
///
/// Relations used: `d_i s_j = s_{j-1} d_i` (i < j), identity (i = j or
/// i = j+1), and `d_i s_j = s_j d_{i-1}` (i > j+1).
pub fn face(
    ds: &DegSimplex,
    i: usize,
    face_of_nondegenerate: &dyn Fn(SimplexRef, usize) -> DegSimplex,
) -> DegSimplex {
    debug_assert!(i <= ds.dim() && ds.dim() > 0);
    let mut fi = i;
    let mut outer: Vec<usize> = Vec::new();
    for (pos, &j) in ds.word.iter().enumerate() {
        if fi < j {
            outer.push(j - 1);
        } else if fi == j || fi == j + 1 {
            let mut out = DegSimplex {
                word: ds.word[pos + 1..].to_vec(),
                target: ds.target,
            };
            for &s in outer.iter().rev() {
                push_degeneracy(&mut out.word, s);
            }
            return out;
        } else {
            outer.push(j);
            fi -= 1;
        }
    }
    let mut out = face_of_nondegenerate(ds.target, fi);
    for &s in outer.iter().rev() {
        push_degeneracy(&mut out.word, s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(dim: usize) -> SimplexRef {
        SimplexRef { dim, idx: 0 }
    }

    #[test]
    fn degeneracy_words_canonicalize() {
        // s_0 s_0 = s_1 s_0 and s_0 s_1 = s_2 s_0.
        let base = DegSimplex::nondegenerate(t(1));
        let a = base.degenerate(0).degenerate(1);
        assert_eq!(a.word, vec![1, 0]);
        let b = base.degenerate(0).degenerate(0);
        assert_eq!(b.word, vec![1, 0]);
        let c = base.degenerate(1).degenerate(0);
        assert_eq!(c.word, vec![2, 0]);
        let d = base.degenerate(0).degenerate(2);
        assert_eq!(d.word, vec![2, 0]);
        let e = base.degenerate(0).degenerate(1).degenerate(0);
        assert_eq!(e.word, vec![2, 1, 0]);
    }

    #[test]
    fn strip_inverts_degenerate() {
        let base = DegSimplex::nondegenerate(t(1));
        let z = base.degenerate(1).degenerate(0).degenerate(3);
        for &j in z.directions().to_vec().iter() {
            let y = z.strip(j);
            assert_eq!(y.degenerate(j), z, "direction {j}");
        }
    }

    #[test]
    fn face_cancels_matching_degeneracy() {
        // d_i s_i = id and d_{i+1} s_i = id.
        let unreachable = |_: SimplexRef, _: usize| -> DegSimplex {
            panic!("face should cancel before reaching the target")
        };
        let z = DegSimplex::nondegenerate(t(2)).degenerate(1);
        assert_eq!(face(&z, 1, &unreachable), DegSimplex::nondegenerate(t(2)));
        assert_eq!(face(&z, 2, &unreachable), DegSimplex::nondegenerate(t(2)));
    }

    #[test]
    fn face_commutes_past_degeneracies() {
        // On s_0 x with x of dimension 1: d_2 s_0 = s_0 d_1.
        let faces = |r: SimplexRef, i: usize| -> DegSimplex {
            assert_eq!(r.dim, 1);
            DegSimplex::nondegenerate(SimplexRef { dim: 0, idx: 10 + i })
        };
        let z = DegSimplex::nondegenerate(t(1)).degenerate(0);
        let got = face(&z, 2, &faces);
        assert_eq!(
            got,
            DegSimplex {
                word: vec![0],
                target: SimplexRef { dim: 0, idx: 11 }
            }
        );
        // d_0 s_0 ... with the deeper relation d_0 s_1 = s_0 d_0 on word [1].
        let w = DegSimplex::nondegenerate(t(1)).degenerate(1);
        let got = face(&w, 0, &faces);
        assert_eq!(
            got,
            DegSimplex {
                word: vec![0],
                target: SimplexRef { dim: 0, idx: 10 }
            }
        );
    }

    #[test]
    fn simplicial_identity_on_degenerate_simplices() {
        // d_i d_j = d_{j-1} d_i for i < j, exercised through the calculus
        // on a heavily degenerate simplex over a 1-simplex with two faces.
        let faces = |r: SimplexRef, i: usize| -> DegSimplex {
            assert_eq!(r.dim, 1);
            DegSimplex::nondegenerate(SimplexRef { dim: 0, idx: i })
        };
        let z = DegSimplex::nondegenerate(t(1))
            .degenerate(0)
            .degenerate(2)
            .degenerate(1);
        let n = z.dim();
        for j in 1..=n {
            for i in 0..j {
                let lhs = face(&face(&z, j, &faces), i, &faces);
                let rhs = face(&face(&z, i, &faces), j - 1, &faces);
                assert_eq!(lhs, rhs, "i={i} j={j}");
            }
        }
    }
}
