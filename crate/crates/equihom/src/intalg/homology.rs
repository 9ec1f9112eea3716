//! Homology of chain complexes of finitely generated abelian groups, with
//! enough projection data to push chain maps to maps on homology.

use super::group::{normalize_mod_orders, present, FGAbelianGroup, GroupHom, IntAlgError};
use super::matrix::IntMatrix;
use super::reduce::Reduction;
use super::snf::{kernel_basis, SnfSolver};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Homology at the middle of `A --d_in--> B --d_out--> C`, together with
/// cycle representatives and a cycle-classification map.
///
/// Internally the window is replaced by a quasi-isomorphic complex of free
/// groups (one extra generator per torsion generator, one spot down) and
/// reduced by unit-pivot cancellation before any normal form is computed,
/// so the dense stage only ever sees a few generators per spot.
pub struct HomologyData {
    pub group: FGAbelianGroup,
    chain_group: FGAbelianGroup,
    /// Balanced integer lift of the outgoing differential, stored by rows.
    dout_rows: Vec<Vec<(usize, BigInt)>>,
    c_orders: Vec<BigInt>,
    reduction: Reduction,
    cycle_solver: SnfSolver,
    /// Sends reduced cycle coordinates to canonical homology coordinates.
    to_canonical: IntMatrix,
    /// Raw representative in `B` coordinates for each homology generator.
    reps: IntMatrix,
}

impl HomologyData {
    /// Representative cycle of the `i`-th homology generator, in the raw
    /// generator coordinates of the chain group.
    pub fn generator_rep(&self, i: usize) -> Vec<BigInt> {
        self.reps.column(i)
    }

    pub fn chain_group(&self) -> &FGAbelianGroup {
        &self.chain_group
    }

    /// Class of a cycle (given in raw chain coordinates) over the canonical
    /// homology generators. `None` when the vector is not a cycle.
    pub fn classify(&self, z: &IntMatrix) -> Option<IntMatrix> {
        let nb = self.chain_group.num_generators();
        let tc = self.c_orders.len();
        assert_eq!(z.rows(), nb);
        let middle = self.reduction.alive(1).len();
        let mut small = IntMatrix::zeros(middle, z.cols());
        for col in 0..z.cols() {
            let mut t1 = vec![BigInt::zero(); nb + tc];
            for r in 0..nb {
                t1[r] = z.get(r, col).clone();
            }
            // A cycle maps into the relation lattice of C; the relation
            // coordinate is the exact quotient by the generator order.
            for (r, row) in self.dout_rows.iter().enumerate() {
                let mut acc = BigInt::zero();
                for (src, v) in row {
                    acc += v * z.get(*src, col);
                }
                if r < tc {
                    let (q, rem) = acc.div_rem(&self.c_orders[r]);
                    if !rem.is_zero() {
                        return None;
                    }
                    t1[nb + r] = -q;
                } else if !acc.is_zero() {
                    return None;
                }
            }
            let reduced = self.reduction.project(1, t1);
            for (r, v) in reduced.into_iter().enumerate() {
                small.set(r, col, v);
            }
        }
        let y = self.cycle_solver.solve(&small)?;
        Some(normalize_mod_orders(
            &self.to_canonical.mul(&y),
            &self.group,
        ))
    }
}

/// Sparse rows of a homomorphism matrix with entries re-centered to the
/// balanced range `(-o/2, o/2]` of each target generator's order.
fn balanced_rows(m: &IntMatrix, target: &FGAbelianGroup) -> Vec<Vec<(usize, BigInt)>> {
    let torsion = target.torsion();
    (0..m.rows())
        .map(|r| {
            let mut row = Vec::new();
            for j in 0..m.cols() {
                let v = m.get(r, j);
                if v.is_zero() {
                    continue;
                }
                let v = if r < torsion.len() && &(v * 2) > &torsion[r] {
                    v - &torsion[r]
                } else {
                    v.clone()
                };
                if !v.is_zero() {
                    row.push((j, v));
                }
            }
            row
        })
        .collect()
}

/// Computes `ker(d_out) / im(d_in)` where `d_out . d_in = 0`.
pub fn homology_at(d_in: &GroupHom, d_out: &GroupHom) -> Result<HomologyData, IntAlgError> {
    if d_in.target() != d_out.source() {
        return Err(IntAlgError::NonComposable(format!(
            "chain groups disagree: {:?} vs {:?}",
            d_in.target(),
            d_out.source()
        )));
    }
    if !d_out.compose(d_in)?.is_zero() {
        return Err(IntAlgError::NotAComplex(
            "d_out . d_in is nonzero".to_string(),
        ));
    }
    let b = d_in.target().clone();
    let c = d_out.target().clone();
    let na = d_in.source().num_generators();
    let nb = b.num_generators();
    let nc = c.num_generators();
    let b_orders = b.torsion().to_vec();
    let c_orders = c.torsion().to_vec();
    let (tb, tc) = (b_orders.len(), c_orders.len());

    let din_rows = balanced_rows(d_in.matrix(), &b);
    let dout_rows = balanced_rows(d_out.matrix(), &c);

    // Free model: T2 = F_A + Q_B, T1 = F_B + Q_C, T0 = F_C, where Q_*
    // carries the torsion relations. d2 = [[D_in, rho_B], [-E, -G]] with
    // D_out D_in = rho_C E and D_out rho_B = rho_C G; both quotients are
    // exact because the homomorphisms are well defined and the window
    // composes to zero.
    let mut d2 = Vec::new();
    for (r, row) in din_rows.iter().enumerate() {
        for (a, v) in row {
            d2.push((r, *a, v.clone()));
        }
    }
    for (j, o) in b_orders.iter().enumerate() {
        d2.push((j, na + j, o.clone()));
    }
    for (t, o_c) in c_orders.iter().enumerate() {
        let mut composite: std::collections::BTreeMap<usize, BigInt> = Default::default();
        for (bg, v) in &dout_rows[t] {
            for (a, w) in &din_rows[*bg] {
                *composite.entry(*a).or_default() += v * w;
            }
        }
        for (a, total) in composite {
            let (q, rem) = total.div_rem(o_c);
            assert!(rem.is_zero(), "window does not compose to zero over C");
            if !q.is_zero() {
                d2.push((nb + t, a, -q));
            }
        }
        for (j, o_b) in b_orders.iter().enumerate() {
            if let Ok(k) = dout_rows[t].binary_search_by_key(&j, |(col, _)| *col) {
                let (q, rem) = (&dout_rows[t][k].1 * o_b).div_rem(o_c);
                assert!(rem.is_zero(), "outgoing differential is not well defined");
                if !q.is_zero() {
                    d2.push((nb + t, na + j, -q));
                }
            }
        }
    }
    let mut d1 = Vec::new();
    for (r, row) in dout_rows.iter().enumerate() {
        for (bg, v) in row {
            d1.push((r, *bg, v.clone()));
        }
    }
    for (t, o) in c_orders.iter().enumerate() {
        d1.push((t, nb + t, o.clone()));
    }

    let reduction = Reduction::new([na + tb, nb + tc, nc], d2, d1);
    let cycle_lattice = kernel_basis(&reduction.d1);
    let cycle_solver = SnfSolver::new(&cycle_lattice);
    let x = cycle_solver
        .solve(&reduction.d2)
        .ok_or_else(|| IntAlgError::NotAComplex("boundaries are not cycles".to_string()))?;
    let presented = present(cycle_lattice.cols(), &x);
    let reps_small = cycle_lattice.mul(&presented.lift);
    let rank = presented.group.num_generators();
    let mut reps = IntMatrix::zeros(nb, rank);
    for g in 0..rank {
        let full = reduction.include(1, &reps_small.column(g));
        for (r, v) in full.into_iter().take(nb).enumerate() {
            reps.set(r, g, v);
        }
    }
    Ok(HomologyData {
        group: presented.group,
        chain_group: b,
        dout_rows,
        c_orders,
        reduction,
        cycle_solver,
        to_canonical: presented.to_canonical,
        reps,
    })
}

/// One degree of a chain complex: the differentials into and out of a fixed
/// spot, plus the homology computed there.
pub struct ChainWindow<'a> {
    pub d_in: &'a GroupHom,
    pub d_out: &'a GroupHom,
    pub homology: &'a HomologyData,
}

/// The map induced on homology by a chain map. `f_here` acts on the chain
/// group of `src`; `f_below` and `f_above` are the chain map one degree
/// down and up, used to verify the chain-map identities.
pub fn induce_on_homology(
    f_below: &GroupHom,
    f_here: &GroupHom,
    f_above: &GroupHom,
    src: &ChainWindow<'_>,
    dst: &ChainWindow<'_>,
) -> Result<GroupHom, IntAlgError> {
    if dst.d_out.compose(f_here)? != f_below.compose(src.d_out)? {
        return Err(IntAlgError::NotChainMap(
            "f does not commute with the outgoing differential".to_string(),
        ));
    }
    if f_here.compose(src.d_in)? != dst.d_in.compose(f_above)? {
        return Err(IntAlgError::NotChainMap(
            "f does not commute with the incoming differential".to_string(),
        ));
    }
    let h_src = &src.homology;
    let h_dst = &dst.homology;
    let n = h_src.group.num_generators();
    let mut matrix = IntMatrix::zeros(h_dst.group.num_generators(), n);
    for i in 0..n {
        let rep = IntMatrix::col_vec(&h_src.generator_rep(i));
        let image = f_here.matrix().mul(&rep);
        let class = h_dst.classify(&image).ok_or_else(|| {
            IntAlgError::NotChainMap("image of a cycle is not a cycle".to_string())
        })?;
        for r in 0..class.rows() {
            matrix.set(r, i, class.get(r, 0).clone());
        }
    }
    GroupHom::new(h_src.group.clone(), h_dst.group.clone(), matrix)
}

/// Invariant profile of a homomorphism: the isomorphism classes of its
/// kernel, image, and cokernel. These are independent of the choice of
/// canonical generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomProfile {
    pub kernel: FGAbelianGroup,
    pub image: FGAbelianGroup,
    pub cokernel: FGAbelianGroup,
}

pub fn hom_profile(f: &GroupHom) -> HomProfile {
    let na = f.source().num_generators();
    let rel_a = f.source().relation_matrix();
    let rel_b = f.target().relation_matrix();
    // Full preimage lattice of im(rel_B): x with f(x) = 0 in the target.
    let combined = kernel_basis(&f.matrix().hstack(&rel_b));
    let x_rows: Vec<usize> = (0..na).collect();
    let lattice = combined.select_rows(&x_rows);
    let solver = SnfSolver::new(&lattice);
    let rel_in_lattice = solver
        .solve(&rel_a)
        .expect("source relations map to zero, so they lie in the preimage lattice");
    let kernel = present(lattice.cols(), &rel_in_lattice).group;
    let image = present(na, &lattice).group;
    let cokernel = present(
        f.target().num_generators(),
        &f.matrix().hstack(&rel_b),
    )
    .group;
    HomProfile {
        kernel,
        image,
        cokernel,
    }
}

/// True when `f` is surjective.
pub fn is_surjective(f: &GroupHom) -> bool {
    present(
        f.target().num_generators(),
        &f.matrix().hstack(&f.target().relation_matrix()),
    )
    .group
    .is_trivial()
}

/// True when `f` is an isomorphism. Canonical forms make isomorphy of
/// groups literal equality, and finitely generated abelian groups are
/// Hopfian, so surjectivity onto an isomorphic group suffices.
pub fn is_isomorphism(f: &GroupHom) -> bool {
    f.source() == f.target() && is_surjective(f)
}

/// A zero map from the trivial group, for capping complexes.
pub fn zero_from_trivial(target: &FGAbelianGroup) -> GroupHom {
    GroupHom::zero(&FGAbelianGroup::trivial(), target)
}

/// A zero map to the trivial group.
pub fn zero_to_trivial(source: &FGAbelianGroup) -> GroupHom {
    GroupHom::zero(source, &FGAbelianGroup::trivial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z() -> FGAbelianGroup {
        FGAbelianGroup::free(1)
    }

    #[test]
    fn doubling_gives_z2() {
        // Z --2--> Z --0--> 0 has homology Z/2 at the middle.
        let two = GroupHom::new(z(), z(), IntMatrix::from_rows(&[vec![2]])).unwrap();
        let out = zero_to_trivial(&z());
        let h = homology_at(&two, &out).unwrap();
        assert_eq!(h.group, FGAbelianGroup::cyclic(2));
    }

    #[test]
    fn zero_maps_give_full_group() {
        let g = FGAbelianGroup::free(2);
        let din = zero_from_trivial(&g);
        let dout = zero_to_trivial(&g);
        let h = homology_at(&din, &dout).unwrap();
        assert_eq!(h.group, FGAbelianGroup::free(2));
    }

    #[test]
    fn kernel_of_sum() {
        // 0 -> Z^2 --(x+y)--> Z has homology Z at the middle.
        let g = FGAbelianGroup::free(2);
        let din = zero_from_trivial(&g);
        let dout = GroupHom::new(g, z(), IntMatrix::from_rows(&[vec![1, 1]])).unwrap();
        let h = homology_at(&din, &dout).unwrap();
        assert_eq!(h.group, FGAbelianGroup::free(1));
        // The representative is a genuine cycle.
        let rep = IntMatrix::col_vec(&h.generator_rep(0));
        assert!(dout.matrix().mul(&rep).is_zero());
    }

    #[test]
    fn torsion_chain_level() {
        // Z/4 --2--> Z/4 --2--> Z/4: homology is Z/2... compute directly:
        // ker(2: Z/4 -> Z/4) = {0, 2}, im(2) = {0, 2}, so homology is 0.
        let z4 = FGAbelianGroup::cyclic(4);
        let two = GroupHom::new(z4.clone(), z4.clone(), IntMatrix::from_rows(&[vec![2]])).unwrap();
        let h = homology_at(&two, &two).unwrap();
        assert!(h.group.is_trivial());
    }

    #[test]
    fn rejects_non_complex() {
        let one = GroupHom::identity(&z());
        assert!(matches!(
            homology_at(&one, &one),
            Err(IntAlgError::NotAComplex(_))
        ));
    }

    #[test]
    fn classify_respects_boundaries() {
        // 0 -> Z --2--> Z: homology at the right spot is Z/2 and the class
        // of 2 is zero while the class of 1 generates.
        let two = GroupHom::new(z(), z(), IntMatrix::from_rows(&[vec![2]])).unwrap();
        let out = zero_to_trivial(&z());
        let h = homology_at(&two, &out).unwrap();
        let one = h.classify(&IntMatrix::col_vec(&[BigInt::from(1)])).unwrap();
        let twoc = h.classify(&IntMatrix::col_vec(&[BigInt::from(2)])).unwrap();
        assert!(!one.is_zero());
        assert!(twoc.is_zero());
    }

    #[test]
    fn induced_map_on_homology() {
        // Two copies of (Z --2--> Z --> 0); the identity chain map induces
        // the identity on Z/2.
        let two = GroupHom::new(z(), z(), IntMatrix::from_rows(&[vec![2]])).unwrap();
        let out = zero_to_trivial(&z());
        let h1 = homology_at(&two, &out).unwrap();
        let h2 = homology_at(&two, &out).unwrap();
        let id = GroupHom::identity(&z());
        let id_triv = GroupHom::identity(&FGAbelianGroup::trivial());
        let src = ChainWindow {
            d_in: &two,
            d_out: &out,
            homology: &h1,
        };
        let dst = ChainWindow {
            d_in: &two,
            d_out: &out,
            homology: &h2,
        };
        let induced = induce_on_homology(&id_triv, &id, &id, &src, &dst).unwrap();
        assert_eq!(induced, GroupHom::identity(&FGAbelianGroup::cyclic(2)));
    }

    #[test]
    fn profile_of_mod2() {
        let f = GroupHom::new(
            z(),
            FGAbelianGroup::cyclic(2),
            IntMatrix::from_rows(&[vec![1]]),
        )
        .unwrap();
        let p = hom_profile(&f);
        assert_eq!(p.kernel, FGAbelianGroup::free(1));
        assert_eq!(p.image, FGAbelianGroup::cyclic(2));
        assert!(p.cokernel.is_trivial());
    }
}
