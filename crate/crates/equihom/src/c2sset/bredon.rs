//! Bredon cellular chains with Mackey functor coefficients, and the
//! independent nonequivariant comparison paths.

use num_bigint::BigInt;

use super::simplex::SimplexRef;
use super::space::{C2SimplicialSet, FiniteSimplicialSet, SsetError};
use crate::intalg::{
    homology_at, induce_on_homology, zero_to_trivial, ChainWindow, FGAbelianGroup, GroupHom,
    IntMatrix,
};
use crate::mackey::{sum_groups, GroupSum, MackeyFunctor, MackeyMap};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrbitKind {
    Fixed,
    Free,
}

/// An orbit of nondegenerate simplices in one dimension. The
/// representative of a free orbit is the member with the lexicographically
/// least name; the coordinate order is (representative, its image).
#[derive(Clone, Debug)]
pub struct Orbit {
    pub kind: OrbitKind,
    pub rep: usize,
    pub partner: usize,
}

struct TermData {
    functor: MackeyFunctor,
    top_sum: GroupSum,
    bot_sum: GroupSum,
    /// Flat bottom copy slot of each simplex index.
    slot: Vec<usize>,
    /// (orbit position, copy) of each simplex index.
    orbit_of: Vec<(usize, usize)>,
}

/// The equivariant cellular chain complex of a C2-simplicial set with
/// coefficients in a Mackey functor: a FIXED orbit contributes a copy of
/// M, a FREE orbit a copy of induced(M).
pub struct MackeyChainComplex {
    coefficient: MackeyFunctor,
    orbits: Vec<Vec<Orbit>>,
    terms: Vec<TermData>,
    /// boundaries[i] maps the degree i+1 term to the degree i term.
    boundaries: Vec<MackeyMap>,
}

fn orbits_at(x: &C2SimplicialSet, n: usize) -> Vec<Orbit> {
    let count = x.space.count(n);
    let mut seen = vec![false; count];
    let mut orbits = Vec::new();
    for idx in 0..count {
        if seen[idx] {
            continue;
        }
        let j = x.act(SimplexRef { dim: n, idx }).idx;
        seen[idx] = true;
        if j == idx {
            orbits.push(Orbit {
                kind: OrbitKind::Fixed,
                rep: idx,
                partner: idx,
            });
        } else {
            seen[j] = true;
            let ni = x.space.name(SimplexRef { dim: n, idx });
            let nj = x.space.name(SimplexRef { dim: n, idx: j });
            let (rep, partner) = if (ni, idx) <= (nj, j) { (idx, j) } else { (j, idx) };
            orbits.push(Orbit {
                kind: OrbitKind::Free,
                rep,
                partner,
            });
        }
    }
    orbits
}

fn add_block(m: &mut IntMatrix, r0: usize, c0: usize, block: &IntMatrix, sign: i64) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = m.get(r0 + i, c0 + j).clone() + block.get(i, j) * BigInt::from(sign);
            m.set(r0 + i, c0 + j, v);
        }
    }
}

fn build_term(x: &C2SimplicialSet, m: &MackeyFunctor, n: usize, orbits: &[Orbit]) -> TermData {
    let count = x.space.count(n);
    let nb = m.bot().num_generators();
    let mut orbit_of = vec![(0usize, 0usize); count];
    let mut slot = vec![0usize; count];
    let mut flat = 0usize;
    let mut top_parts: Vec<&FGAbelianGroup> = Vec::with_capacity(orbits.len());
    let mut bot_parts: Vec<&FGAbelianGroup> = Vec::with_capacity(count);
    for (pos, o) in orbits.iter().enumerate() {
        orbit_of[o.rep] = (pos, 0);
        slot[o.rep] = flat;
        bot_parts.push(m.bot());
        flat += 1;
        if o.kind == OrbitKind::Free {
            orbit_of[o.partner] = (pos, 1);
            slot[o.partner] = flat;
            bot_parts.push(m.bot());
            flat += 1;
        }
        top_parts.push(match o.kind {
            OrbitKind::Fixed => m.top(),
            OrbitKind::Free => m.bot(),
        });
    }
    let top_sum = sum_groups(&top_parts);
    let bot_sum = sum_groups(&bot_parts);

    let id_b = IntMatrix::identity(nb);
    let w = m.weyl().matrix();
    let mut res_raw = IntMatrix::zeros(bot_sum.raw_gens, top_sum.raw_gens);
    let mut tr_raw = IntMatrix::zeros(top_sum.raw_gens, bot_sum.raw_gens);
    let mut weyl_raw = IntMatrix::zeros(bot_sum.raw_gens, bot_sum.raw_gens);
    for (pos, o) in orbits.iter().enumerate() {
        let to = top_sum.offsets[pos];
        let rep_off = nb * slot[o.rep];
        match o.kind {
            OrbitKind::Fixed => {
                add_block(&mut res_raw, rep_off, to, m.res().matrix(), 1);
                add_block(&mut tr_raw, to, rep_off, m.tr().matrix(), 1);
            }
            OrbitKind::Free => {
                let partner_off = nb * slot[o.partner];
                // res(x) = (x at rep, weyl x at partner)
                add_block(&mut res_raw, rep_off, to, &id_b, 1);
                add_block(&mut res_raw, partner_off, to, w, 1);
                // tr(x, y) = x + weyl y
                add_block(&mut tr_raw, to, rep_off, &id_b, 1);
                add_block(&mut tr_raw, to, partner_off, w, 1);
            }
        }
    }
    for s in 0..count {
        let img = x.act(SimplexRef { dim: n, idx: s }).idx;
        add_block(&mut weyl_raw, nb * slot[img], nb * slot[s], w, 1);
    }
    let functor = MackeyFunctor::new(
        top_sum.presented.group.clone(),
        bot_sum.presented.group.clone(),
        top_sum.map_between(&bot_sum, &res_raw),
        bot_sum.map_between(&top_sum, &tr_raw),
        bot_sum.map_between(&bot_sum, &weyl_raw),
    )
    .expect("orbit sums satisfy the Mackey axioms");
    TermData {
        functor,
        top_sum,
        bot_sum,
        slot,
        orbit_of,
    }
}

/// Constructs the chain complex through dimension `max_dim`, verifying
/// d.d = 0 at both levels and the Mackey structure of every boundary.
pub fn bredon_chains(
    x: &C2SimplicialSet,
    m: &MackeyFunctor,
    max_dim: usize,
) -> Result<MackeyChainComplex, SsetError> {
    let nt = m.top().num_generators();
    let nb = m.bot().num_generators();
    let orbits: Vec<Vec<Orbit>> = (0..=max_dim).map(|n| orbits_at(x, n)).collect();
    let terms: Vec<TermData> = (0..=max_dim)
        .map(|n| build_term(x, m, n, &orbits[n]))
        .collect();
    let id_t = IntMatrix::identity(nt);
    let id_b = IntMatrix::identity(nb);
    let w = m.weyl().matrix();
    let mut boundaries = Vec::with_capacity(max_dim);
    for n in 1..=max_dim {
        let (lower, upper) = (&terms[n - 1], &terms[n]);
        let mut top_raw = IntMatrix::zeros(lower.top_sum.raw_gens, upper.top_sum.raw_gens);
        let mut bot_raw = IntMatrix::zeros(lower.bot_sum.raw_gens, upper.bot_sum.raw_gens);
        for (pos, o) in orbits[n].iter().enumerate() {
            let co = upper.top_sum.offsets[pos];
            let rep = SimplexRef { dim: n, idx: o.rep };
            for (i, f) in x.space.faces_of(rep).iter().enumerate() {
                if f.is_degenerate() {
                    continue;
                }
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let (tpos, copy) = lower.orbit_of[f.target.idx];
                let ro = lower.top_sum.offsets[tpos];
                match (o.kind, orbits[n - 1][tpos].kind) {
                    (OrbitKind::Fixed, OrbitKind::Fixed) => {
                        add_block(&mut top_raw, ro, co, &id_t, sign);
                    }
                    (OrbitKind::Fixed, OrbitKind::Free) => {
                        unreachable!("faces of fixed simplices are fixed");
                    }
                    (OrbitKind::Free, OrbitKind::Fixed) => {
                        add_block(&mut top_raw, ro, co, m.tr().matrix(), sign);
                    }
                    (OrbitKind::Free, OrbitKind::Free) => {
                        let block = if copy == 0 { &id_b } else { w };
                        add_block(&mut top_raw, ro, co, block, sign);
                    }
                }
            }
        }
        for s in 0..x.space.count(n) {
            let cs = nb * upper.slot[s];
            for (i, f) in x.space.faces_of(SimplexRef { dim: n, idx: s }).iter().enumerate() {
                if f.is_degenerate() {
                    continue;
                }
                let sign = if i % 2 == 0 { 1 } else { -1 };
                add_block(&mut bot_raw, nb * lower.slot[f.target.idx], cs, &id_b, sign);
            }
        }
        let top = upper.top_sum.map_between(&lower.top_sum, &top_raw);
        let bot = upper.bot_sum.map_between(&lower.bot_sum, &bot_raw);
        boundaries.push(MackeyMap::new(
            upper.functor.clone(),
            lower.functor.clone(),
            top,
            bot,
        )?);
    }
    for i in 0..boundaries.len().saturating_sub(1) {
        let square = boundaries[i].compose(&boundaries[i + 1])?;
        if !square.top.is_zero() || !square.bot.is_zero() {
            return Err(SsetError::ComplexError(format!(
                "d_{} after d_{} is nonzero",
                i + 1,
                i + 2
            )));
        }
    }
    Ok(MackeyChainComplex {
        coefficient: m.clone(),
        orbits,
        terms,
        boundaries,
    })
}

impl MackeyChainComplex {
    pub fn max_dim(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn coefficient(&self) -> &MackeyFunctor {
        &self.coefficient
    }

    pub fn orbits(&self, n: usize) -> &[Orbit] {
        &self.orbits[n]
    }

    pub fn term(&self, n: usize) -> &MackeyFunctor {
        &self.terms[n].functor
    }

    pub fn boundary(&self, n: usize) -> &MackeyMap {
        &self.boundaries[n - 1]
    }

    /// The augmentation to the coefficient functor: every vertex counts
    /// with multiplicity one, free orbits through the transfer.
    fn augmentation(&self) -> MackeyMap {
        let m = &self.coefficient;
        let nt = m.top().num_generators();
        let nb = m.bot().num_generators();
        let t0 = &self.terms[0];
        let mut top_raw = IntMatrix::zeros(nt, t0.top_sum.raw_gens);
        for (pos, o) in self.orbits[0].iter().enumerate() {
            let off = t0.top_sum.offsets[pos];
            match o.kind {
                OrbitKind::Fixed => add_block(&mut top_raw, 0, off, &IntMatrix::identity(nt), 1),
                OrbitKind::Free => add_block(&mut top_raw, 0, off, m.tr().matrix(), 1),
            }
        }
        let mut bot_raw = IntMatrix::zeros(nb, t0.bot_sum.raw_gens);
        for s in 0..t0.slot.len() {
            add_block(&mut bot_raw, 0, nb * t0.slot[s], &IntMatrix::identity(nb), 1);
        }
        MackeyMap::new(
            t0.functor.clone(),
            m.clone(),
            t0.top_sum.map_out(m.top(), &top_raw),
            t0.bot_sum.map_out(m.bot(), &bot_raw),
        )
        .expect("the augmentation is a Mackey map")
    }

    /// Homology at degree n as a Mackey functor; requires chains through
    /// n + 1. With `reduced`, degree 0 is taken against the augmentation.
    pub fn homology(&self, n: usize, reduced: bool) -> Result<MackeyFunctor, SsetError> {
        if n + 1 > self.max_dim() {
            return Err(SsetError::InsufficientDepth {
                available: self.max_dim(),
                degree: n,
            });
        }
        let d_in = &self.boundaries[n];
        let (out_top, out_bot, below_res, below_tr, below_weyl);
        if n > 0 {
            let d = &self.boundaries[n - 1];
            let t = &self.terms[n - 1].functor;
            out_top = d.top.clone();
            out_bot = d.bot.clone();
            below_res = t.res().clone();
            below_tr = t.tr().clone();
            below_weyl = t.weyl().clone();
        } else if reduced {
            let a = self.augmentation();
            let m = &self.coefficient;
            out_top = a.top.clone();
            out_bot = a.bot.clone();
            below_res = m.res().clone();
            below_tr = m.tr().clone();
            below_weyl = m.weyl().clone();
        } else {
            let triv = FGAbelianGroup::trivial();
            let z = GroupHom::zero(&triv, &triv);
            out_top = zero_to_trivial(self.terms[0].functor.top());
            out_bot = zero_to_trivial(self.terms[0].functor.bot());
            below_res = z.clone();
            below_tr = z.clone();
            below_weyl = z;
        }
        let h_top = homology_at(&d_in.top, &out_top)?;
        let h_bot = homology_at(&d_in.bot, &out_bot)?;
        let top_window = ChainWindow {
            d_in: &d_in.top,
            d_out: &out_top,
            homology: &h_top,
        };
        let bot_window = ChainWindow {
            d_in: &d_in.bot,
            d_out: &out_bot,
            homology: &h_bot,
        };
        let here = &self.terms[n].functor;
        let above = &self.terms[n + 1].functor;
        let res = induce_on_homology(&below_res, here.res(), above.res(), &top_window, &bot_window)?;
        let tr = induce_on_homology(&below_tr, here.tr(), above.tr(), &bot_window, &top_window)?;
        let weyl =
            induce_on_homology(&below_weyl, here.weyl(), above.weyl(), &bot_window, &bot_window)?;
        Ok(MackeyFunctor::new(
            h_top.group.clone(),
            h_bot.group.clone(),
            res,
            tr,
            weyl,
        )?)
    }
}

/// Bredon homology of a space at a single degree.
pub fn bredon_homology(
    x: &C2SimplicialSet,
    m: &MackeyFunctor,
    n: usize,
    reduced: bool,
) -> Result<MackeyFunctor, SsetError> {
    bredon_chains(x, m, n + 1)?.homology(n, reduced)
}

/// Bredon homology in all degrees 0..=max_degree, sharing one complex.
pub fn bredon_homology_range(
    x: &C2SimplicialSet,
    m: &MackeyFunctor,
    max_degree: usize,
    reduced: bool,
) -> Result<Vec<MackeyFunctor>, SsetError> {
    let complex = bredon_chains(x, m, max_degree + 1)?;
    (0..=max_degree).map(|n| complex.homology(n, reduced)).collect()
}

/// Signed incidence matrix of the normalized chains of a plain simplicial
/// set: rows index (n-1)-simplices, columns n-simplices.
pub fn incidence_matrix(space: &FiniteSimplicialSet, n: usize) -> IntMatrix {
    assert!(n >= 1);
    let mut m = IntMatrix::zeros(space.count(n - 1), space.count(n));
    for idx in 0..space.count(n) {
        for (i, f) in space.faces_of(SimplexRef { dim: n, idx }).iter().enumerate() {
            if f.is_degenerate() {
                continue;
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let v = m.get(f.target.idx, idx).clone() + BigInt::from(sign);
            m.set(f.target.idx, idx, v);
        }
    }
    m
}

/// Nonequivariant normalized simplicial homology with coefficients in a
/// finitely generated abelian group, computed directly from incidence
/// matrices without any Mackey bookkeeping.
pub fn classical_homology(
    space: &FiniteSimplicialSet,
    coefficients: &FGAbelianGroup,
    n: usize,
    reduced: bool,
) -> Result<FGAbelianGroup, SsetError> {
    let g = coefficients.num_generators();
    let chain_group = |dim: usize| -> GroupSum {
        let parts: Vec<&FGAbelianGroup> = (0..space.count(dim)).map(|_| coefficients).collect();
        sum_groups(&parts)
    };
    let sum_n = chain_group(n);
    let sum_above = chain_group(n + 1);
    let d_in = sum_above.map_between(
        &sum_n,
        &incidence_matrix_padded(space, n + 1).kronecker(&IntMatrix::identity(g)),
    );
    let d_out = if n > 0 {
        let sum_below = chain_group(n - 1);
        sum_n.map_between(
            &sum_below,
            &incidence_matrix_padded(space, n).kronecker(&IntMatrix::identity(g)),
        )
    } else if reduced {
        let ones = IntMatrix::from_fn(1, space.count(0), |_, _| 1.into());
        sum_n.map_out(coefficients, &ones.kronecker(&IntMatrix::identity(g)))
    } else {
        zero_to_trivial(&sum_n.presented.group)
    };
    Ok(homology_at(&d_in, &d_out)?.group)
}

fn incidence_matrix_padded(space: &FiniteSimplicialSet, n: usize) -> IntMatrix {
    if n > space.dim_bound() {
        IntMatrix::zeros(space.count(n.saturating_sub(1)), 0)
    } else {
        incidence_matrix(space, n)
    }
}

/// Mod 2 Betti numbers of a plain simplicial set in degrees 0..=max_degree,
/// via bitset Gaussian elimination. An independent path: no shared linear
/// algebra with the integer engine.
pub fn f2_betti(space: &FiniteSimplicialSet, max_degree: usize) -> Vec<usize> {
    let rank = |n: usize| -> usize {
        if n == 0 || n > space.dim_bound() {
            return 0;
        }
        let rows = space.count(n - 1);
        let words = rows.div_ceil(64);
        let mut pivots: Vec<Vec<u64>> = Vec::new();
        let mut rank = 0usize;
        for idx in 0..space.count(n) {
            let mut col = vec![0u64; words];
            for f in space.faces_of(SimplexRef { dim: n, idx }) {
                if !f.is_degenerate() {
                    let r = f.target.idx;
                    col[r / 64] ^= 1u64 << (r % 64);
                }
            }
            for p in &pivots {
                let lead = p.iter().rposition(|&w| w != 0).unwrap();
                let bit = 63 - p[lead].leading_zeros() as usize;
                if col[lead] >> bit & 1 == 1 {
                    for (c, pw) in col.iter_mut().zip(p.iter()) {
                        *c ^= pw;
                    }
                }
            }
            if col.iter().any(|&w| w != 0) {
                pivots.push(col);
                rank += 1;
            }
        }
        rank
    };
    (0..=max_degree)
        .map(|n| space.count(n) - rank(n) - rank(n + 1))
        .collect()
}

/// The free part of a finitely generated abelian group.
pub fn free_rank(g: &FGAbelianGroup) -> usize {
    g.orders().iter().filter(|o| **o == BigInt::from(0)).count()
}

/// Number of generators whose order is exactly 2, for comparing bottom
/// homology with mod 2 Betti numbers when bot(M) = Z/2.
pub fn two_torsion_generators(g: &FGAbelianGroup) -> usize {
    g.orders().iter().filter(|o| **o == BigInt::from(2)).count()
}
