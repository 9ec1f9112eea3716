//! Representation sphere models and the bridge to the graded-algebra
//! sphere table.

use super::bredon::bredon_chains;
use super::catalog::{s0, s1, s_sigma};
use super::constructions::smash;
use super::space::{C2SimplicialSet, SsetError};
use crate::grfree::{RORep, SphereEntry, SphereTable};
use crate::mackey::MackeyFunctor;

/// The sphere S^{p + q sigma} as an iterated smash of circle models.
pub fn sphere_model(p: i64, q: i64, dim_bound: usize) -> Result<C2SimplicialSet, SsetError> {
    assert!(p >= 0 && q >= 0);
    let mut model = s0();
    for _ in 0..p {
        model = smash(&model, &s1(), dim_bound)?;
    }
    for _ in 0..q {
        model = smash(&model, &s_sigma(), dim_bound)?;
    }
    Ok(model)
}

/// Computes reduced homology of each requested representation sphere up
/// to `max_degree` and freezes the results into a table.
pub fn build_sphere_table(
    shifts: &[RORep],
    max_degree: i64,
    m: &MackeyFunctor,
) -> Result<SphereTable, SsetError> {
    assert!(max_degree >= 0);
    let mut table = SphereTable::new();
    for shift in shifts {
        if table.has(shift.p, shift.q) {
            continue;
        }
        let dim = (shift.p + shift.q) as usize;
        let model = sphere_model(shift.p, shift.q, dim + 1)?;
        let top = dim.min(max_degree as usize);
        let complex = bredon_chains(&model, m, top + 1)?;
        let mut homology = std::collections::BTreeMap::new();
        for n in 0..=top {
            let h = complex.homology(n, true)?;
            if !h.is_zero() {
                homology.insert(n as i64, h);
            }
        }
        table.insert(
            shift.p,
            shift.q,
            SphereEntry {
                max_degree,
                homology,
            },
        );
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grfree::{evaluate_descriptor, FreeDescriptor, FreeSummand};
    use crate::intalg::FGAbelianGroup;
    use crate::mackey::{isomorphic, norm_f2, norm_f2_induced, MackeyFunctor};

    fn b() -> MackeyFunctor {
        norm_f2()
    }

    #[test]
    fn trivial_spheres_have_one_homology_class() {
        let table = build_sphere_table(
            &[RORep::new(0, 0), RORep::new(1, 0), RORep::new(2, 0)],
            3,
            &b(),
        )
        .unwrap();
        for p in 0..=2i64 {
            for n in 0..=3i64 {
                let h = table.reduced_homology(p, 0, n).unwrap();
                assert_eq!(!h.is_zero(), n == p, "p={p} n={n}");
                if n == p {
                    assert!(isomorphic(&h, &b()));
                }
            }
        }
    }

    #[test]
    fn sigma_sphere_homology_in_the_table() {
        let table = build_sphere_table(&[RORep::sigma()], 2, &b()).unwrap();
        let h0 = table.reduced_homology(0, 1, 0).unwrap();
        assert_eq!(h0.top(), &FGAbelianGroup::cyclic(2));
        assert!(h0.bot().is_trivial());
        let h1 = table.reduced_homology(0, 1, 1).unwrap();
        assert!(h1.top().is_trivial());
        assert_eq!(h1.bot(), &FGAbelianGroup::cyclic(2));
    }

    #[test]
    fn rho_sphere_matches_builtin_model() {
        // S^{1 + sigma} from the smash tower vs the catalogued Srho.
        let table = build_sphere_table(&[RORep::new(1, 1)], 3, &b()).unwrap();
        let srho = crate::c2sset::catalog::s_rho().unwrap();
        for n in 0..=2usize {
            let direct = crate::c2sset::bredon::bredon_homology(&srho, &b(), n, true).unwrap();
            let tabled = table.reduced_homology(1, 1, n as i64).unwrap();
            assert!(isomorphic(&direct, &tabled), "degree {n}");
        }
    }

    #[test]
    fn descriptor_evaluation_against_the_table() {
        // B(0) + B(sigma) evaluated where the sigma summand contributes.
        let table = build_sphere_table(&[RORep::new(0, 0), RORep::sigma()], 2, &b()).unwrap();
        let d = FreeDescriptor::new(vec![
            FreeSummand::fixed(RORep::new(0, 0)),
            FreeSummand::fixed(RORep::sigma()),
            FreeSummand::induced(RORep::new(1, 0)),
        ]);
        let h1 = evaluate_descriptor(&d, 1, &table).unwrap();
        // Degree 1: the sigma sphere contributes (0, Z/2) and the induced
        // class contributes the full induced functor.
        let expected = crate::mackey::direct_sum(&[
            &table.reduced_homology(0, 1, 1).unwrap(),
            &norm_f2_induced(),
        ]);
        assert!(isomorphic(&h1, &expected));
    }
}
